//! Command-line front end.
//!
//! Weights are comma-separated integers in fundamental-weight coordinates,
//! e.g. `--lambda -2,1` means `λ = −2ω_1 + ω_2`. Simple roots are 1-based.
//!
//! Exit codes: 0 success, 1 a verification check failed, 2 usage error.

use std::fmt::Write as _;
use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::report::{
    bott_report, demazure_report, euler_check_report, root_system_for, roots_report,
    selftest_reports, sweep_reports, BottJson, DemazureJson, Dimension, SweepJson, SCHEMA_VERSION,
};
use crate::rootsys::{RootSystem, Weight};

pub const THREADS_ENV: &str = "BOTTFORGE_THREADS";

#[derive(Debug, Parser)]
#[command(
    name = "bottforge",
    version,
    about = "Exact cohomology of line bundles and generalized Demazure modules"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Write output to this file instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Debug, Args)]
pub struct TypeArgs {
    /// Cartan series: A, B, C, D, E, F or G.
    #[arg(long = "type")]
    pub series: String,
    #[arg(long)]
    pub rank: usize,
}

#[derive(Debug, Args)]
pub struct QueryArgs {
    #[command(flatten)]
    pub ty: TypeArgs,
    /// Weight in fundamental-weight coordinates, comma-separated.
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: String,
    /// Simple root index, 1-based.
    #[arg(long)]
    pub alpha: usize,
    /// Length r of the module M_{alpha,r}(lambda).
    #[arg(long)]
    pub r: u32,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Cartan matrix, symmetrizers and positive roots.
    Roots(TypeArgs),
    /// Line-bundle cohomology H^*(lambda).
    Bott {
        #[command(flatten)]
        ty: TypeArgs,
        /// Weight in fundamental-weight coordinates, comma-separated.
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
    },
    /// Cohomology of M_{alpha,r}(lambda).
    Demazure(QueryArgs),
    /// Euler-characteristic identity for one query.
    EulerCheck(QueryArgs),
    /// Exhaustive theorem-agreement and duality sweeps over a weight box.
    Sweep {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long, default_value_t = 3)]
        radius: i64,
        #[arg(long, default_value_t = 3)]
        r_max: u32,
    },
    /// Bundled A1/A2/B2/G2 sweeps.
    Selftest,
    /// One JSON query per input line, one JSON result per output line.
    Batch {
        /// Input file, or `-` for standard input.
        #[arg(long, default_value = "-")]
        input: String,
    },
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

struct Output {
    text: String,
    passed: bool,
}

/// Runs the CLI and returns the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let result = match thread_pool() {
        Some(pool) => pool.install(|| execute(&cli)),
        None => execute(&cli),
    };
    match result {
        Ok(out) => {
            if let Err(e) = emit(cli.out.as_ref(), &out.text) {
                eprintln!("error: {e}");
                return 2;
            }
            if out.passed {
                0
            } else {
                1
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            eprintln!("run `bottforge --help` for usage");
            2
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn thread_pool() -> Option<rayon::ThreadPool> {
    let n: usize = std::env::var(THREADS_ENV).ok()?.trim().parse().ok()?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n.max(1))
        .build()
        .ok()
}

fn emit(path: Option<&PathBuf>, text: &str) -> io::Result<()> {
    match path {
        Some(p) => fs::write(p, text),
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()
        }
    }
}

pub fn parse_lambda(s: &str) -> Result<Vec<i64>, String> {
    s.split(',')
        .map(|p| {
            p.trim()
                .parse::<i64>()
                .map_err(|_| format!("invalid weight coordinate {:?} in {s:?}", p.trim()))
        })
        .collect()
}

fn load_system(ty: &TypeArgs) -> Result<RootSystem, Failure> {
    Ok(root_system_for(&ty.series, ty.rank)?)
}

fn load_weight(rs: &RootSystem, lambda: &str) -> Result<Weight, Failure> {
    let coords = parse_lambda(lambda).map_err(Failure::Usage)?;
    Ok(rs.weight(coords)?)
}

fn alpha_index(rs: &RootSystem, alpha: usize) -> Result<usize, Failure> {
    if alpha == 0 || alpha > rs.rank() {
        return Err(Failure::Usage(format!(
            "--alpha must lie in 1..={} for {}",
            rs.rank(),
            rs.cartan_type()
        )));
    }
    Ok(alpha - 1)
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn unsupported_latex(what: &str) -> Failure {
    Failure::Usage(format!("--format latex is not available for `{what}`"))
}

fn execute(cli: &Cli) -> Result<Output, Failure> {
    let fmt = cli.format;
    match &cli.command {
        Command::Roots(ty) => {
            let rs = load_system(ty)?;
            let doc = roots_report(&rs);
            let text = match fmt {
                Format::Json => to_json(&doc),
                Format::Text => {
                    let mut s = String::new();
                    let _ = writeln!(
                        s,
                        "{} ({} positive roots)",
                        rs.cartan_type(),
                        rs.num_positive_roots()
                    );
                    let _ = writeln!(s, "Cartan matrix A[i][j] = <alpha_j, alpha_i^v>:");
                    for row in &doc.cartan_matrix {
                        let _ = writeln!(s, "  {}", Weight::new(row.clone()));
                    }
                    let _ = writeln!(s, "symmetrizers: {}", Weight::new(doc.symmetrizers.clone()));
                    let _ = writeln!(s, "positive roots (simple-root coordinates):");
                    for b in rs.positive_roots() {
                        let _ = writeln!(s, "  {b}  height {}", b.height());
                    }
                    s
                }
                Format::Latex => return Err(unsupported_latex("roots")),
            };
            Ok(Output { text, passed: true })
        }
        Command::Bott { ty, lambda } => {
            let rs = load_system(ty)?;
            let lam = load_weight(&rs, lambda)?;
            let doc = bott_report(&rs, &lam)?;
            let text = match fmt {
                Format::Json => to_json(&doc),
                Format::Text => bott_text(&rs, &doc),
                Format::Latex => bott_latex(&rs, &doc),
            };
            Ok(Output { text, passed: true })
        }
        Command::Demazure(q) => {
            let rs = load_system(&q.ty)?;
            let lam = load_weight(&rs, &q.lambda)?;
            let alpha = alpha_index(&rs, q.alpha)?;
            let doc = demazure_report(&rs, alpha, q.r, &lam)?;
            let passed = doc.passed();
            let text = match fmt {
                Format::Json => to_json(&doc),
                Format::Text => demazure_text(&rs, &doc),
                Format::Latex => demazure_latex(&rs, &doc),
            };
            Ok(Output { text, passed })
        }
        Command::EulerCheck(q) => {
            let rs = load_system(&q.ty)?;
            let lam = load_weight(&rs, &q.lambda)?;
            let alpha = alpha_index(&rs, q.alpha)?;
            let doc = euler_check_report(&rs, alpha, q.r, &lam)?;
            let passed = doc.verdict == "pass";
            let text = match fmt {
                Format::Json => to_json(&doc),
                Format::Text => format!(
                    "{} alpha={} r={} lambda={} [{}]\n  cohomology Euler characteristic: {}\n  filtration Euler sum:            {}\n  verdict: {}\n",
                    rs.cartan_type(),
                    q.alpha,
                    q.r,
                    lam,
                    doc.case.as_deref().unwrap_or("r=0"),
                    doc.lhs,
                    doc.rhs,
                    doc.verdict
                ),
                Format::Latex => return Err(unsupported_latex("euler-check")),
            };
            Ok(Output { text, passed })
        }
        Command::Sweep { ty, radius, r_max } => {
            let rs = load_system(ty)?;
            if *radius < 0 {
                return Err(Failure::Usage("--radius must be nonnegative".into()));
            }
            sweep_output(fmt, &sweep_reports(&rs, *radius, *r_max), "sweep")
        }
        Command::Selftest => sweep_output(fmt, &selftest_reports(), "selftest"),
        Command::Batch { input } => {
            let text = if input == "-" {
                let mut s = String::new();
                io::stdin().read_to_string(&mut s)?;
                s
            } else {
                fs::read_to_string(input)?
            };
            let (out, status) = run_batch(&text);
            if status == BatchStatus::Malformed {
                // Well-formed lines still get their results.
                emit(cli.out.as_ref(), &out)?;
                return Err(Failure::Usage(
                    "one or more batch lines were malformed".into(),
                ));
            }
            Ok(Output {
                text: out,
                passed: status == BatchStatus::Ok,
            })
        }
    }
}

fn sweep_output(
    fmt: Format,
    reports: &[crate::oracle::SweepReport],
    what: &str,
) -> Result<Output, Failure> {
    let doc = SweepJson::from_reports(reports);
    let text = match fmt {
        Format::Json => to_json(&doc),
        Format::Text => {
            let mut s = String::new();
            for r in reports {
                let mark = if r.is_pass() { "PASS" } else { "FAIL" };
                let _ = writeln!(s, "[{mark}] {r}");
            }
            let _ = writeln!(s, "overall: {}", doc.verdict);
            s
        }
        Format::Latex => return Err(unsupported_latex(what)),
    };
    Ok(Output {
        text,
        passed: doc.passed(),
    })
}

fn dim_str(d: &Dimension) -> String {
    match d {
        Dimension::Small(v) => v.to_string(),
        Dimension::Big(s) => s.clone(),
    }
}

fn weight_str(v: &[i64]) -> String {
    Weight::new(v.to_vec()).to_string()
}

fn bott_text(rs: &RootSystem, doc: &BottJson) -> String {
    let head = format!(
        "H^*({}) on {}",
        weight_str(&doc.query.lambda),
        rs.cartan_type()
    );
    if doc.singular {
        return format!("{head}: zero in all degrees (lambda + rho is singular)\n");
    }
    format!(
        "{head}: degree {}, highest weight {}, dimension {}\n  walk: {:?}\n",
        doc.degree.unwrap_or(0),
        weight_str(doc.highest_weight.as_deref().unwrap_or(&[])),
        doc.dimension.as_ref().map(dim_str).unwrap_or_default(),
        doc.walk.as_deref().unwrap_or(&[])
    )
}

fn demazure_text(rs: &RootSystem, doc: &DemazureJson) -> String {
    let q = &doc.query;
    let mut s = format!(
        "M_{{alpha_{}, r={}}}({}) on {}",
        q.alpha.unwrap_or(0),
        q.r.unwrap_or(0),
        weight_str(&q.lambda),
        rs.cartan_type()
    );
    match &doc.case {
        Some(c) => {
            let _ = writeln!(s, "  [case {c}]");
        }
        None => {
            let _ = writeln!(s, "  [r = 0: line bundle]");
        }
    }
    if doc.cohomology.is_empty() {
        let _ = writeln!(s, "H^* = 0 in all degrees");
    }
    for d in &doc.cohomology {
        let parts: Vec<String> = d
            .constituents
            .iter()
            .map(|c| {
                let m = if c.multiplicity == 1 {
                    String::new()
                } else {
                    format!("{}*", c.multiplicity)
                };
                format!(
                    "{m}V{} [dim {}]",
                    weight_str(&c.highest_weight),
                    dim_str(&c.dimension)
                )
            })
            .collect();
        let _ = writeln!(s, "H^{} = {}", d.degree, parts.join(" + "));
    }
    let _ = writeln!(s, "Euler check: {}", doc.euler_check);
    s
}

/// Escapes LaTeX special characters in running text.
pub fn latex_escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for ch in s.chars() {
        match ch {
            '\\' => out.push_str("\\textbackslash{}"),
            '&' | '%' | '$' | '#' | '_' | '{' | '}' => {
                out.push('\\');
                out.push(ch);
            }
            '~' => out.push_str("\\textasciitilde{}"),
            '^' => out.push_str("\\textasciicircum{}"),
            _ => out.push(ch),
        }
    }
    out
}

fn latex_weight(v: &[i64]) -> String {
    format!(
        "$({})$",
        v.iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(",")
    )
}

const LATEX_HEADER: &str = "\\begin{tabular}{rlrr}\n\\hline\ndegree & highest weight & multiplicity & dimension \\\\\n\\hline\n";
const LATEX_FOOTER: &str = "\\hline\n\\end{tabular}\n";

fn bott_latex(rs: &RootSystem, doc: &BottJson) -> String {
    let mut s = format!(
        "% {}\n",
        latex_escape(&format!(
            "H^*({}) on {}",
            weight_str(&doc.query.lambda),
            rs.cartan_type()
        ))
    );
    s.push_str(LATEX_HEADER);
    if doc.singular {
        s.push_str("\\multicolumn{4}{c}{zero in all degrees} \\\\\n");
    } else {
        let _ = writeln!(
            s,
            "{} & {} & 1 & {} \\\\",
            doc.degree.unwrap_or(0),
            latex_weight(doc.highest_weight.as_deref().unwrap_or(&[])),
            doc.dimension.as_ref().map(dim_str).unwrap_or_default()
        );
    }
    s.push_str(LATEX_FOOTER);
    s
}

fn demazure_latex(rs: &RootSystem, doc: &DemazureJson) -> String {
    let q = &doc.query;
    let caption = format!(
        "M_{{alpha_{}, r={}}}({}) on {}, case {}, Euler check {}",
        q.alpha.unwrap_or(0),
        q.r.unwrap_or(0),
        weight_str(&q.lambda),
        rs.cartan_type(),
        doc.case.as_deref().unwrap_or("r=0"),
        doc.euler_check
    );
    let mut s = format!("% {}\n", latex_escape(&caption));
    s.push_str(LATEX_HEADER);
    if doc.cohomology.is_empty() {
        s.push_str("\\multicolumn{4}{c}{zero in all degrees} \\\\\n");
    }
    for d in &doc.cohomology {
        for c in &d.constituents {
            let _ = writeln!(
                s,
                "{} & {} & {} & {} \\\\",
                d.degree,
                latex_weight(&c.highest_weight),
                c.multiplicity,
                dim_str(&c.dimension)
            );
        }
    }
    s.push_str(LATEX_FOOTER);
    s
}

/// One line of batch input.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BatchQuery {
    pub command: String,
    #[serde(rename = "type")]
    pub series: String,
    pub rank: usize,
    #[serde(default)]
    pub lambda: Option<Vec<i64>>,
    #[serde(default)]
    pub alpha: Option<usize>,
    #[serde(default)]
    pub r: Option<u32>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BatchStatus {
    Ok,
    CheckFailed,
    Malformed,
}

#[derive(Serialize)]
struct BatchError {
    schema: u32,
    line: usize,
    error: String,
}

enum LineResult {
    Ok(String),
    CheckFailed(String),
    Malformed(String),
}

fn batch_line(line: &str) -> Result<(String, bool), String> {
    let q: BatchQuery = serde_json::from_str(line).map_err(|e| e.to_string())?;
    let rs = root_system_for(&q.series, q.rank).map_err(|e| e.to_string())?;
    let weight = || -> Result<Weight, String> {
        let coords = q.lambda.clone().ok_or("missing \"lambda\"")?;
        rs.weight(coords).map_err(|e| e.to_string())
    };
    let alpha = || -> Result<usize, String> {
        match q.alpha {
            Some(a) if a >= 1 && a <= rs.rank() => Ok(a - 1),
            Some(a) => Err(format!("alpha {a} out of range 1..={}", rs.rank())),
            None => Err("missing \"alpha\"".into()),
        }
    };
    let r = || q.r.ok_or_else(|| "missing \"r\"".to_string());
    match q.command.as_str() {
        "roots" => Ok((compact(&roots_report(&rs)), true)),
        "bott" => {
            let doc = bott_report(&rs, &weight()?).map_err(|e| e.to_string())?;
            Ok((compact(&doc), true))
        }
        "demazure" => {
            let doc =
                demazure_report(&rs, alpha()?, r()?, &weight()?).map_err(|e| e.to_string())?;
            Ok((compact(&doc), doc.passed()))
        }
        "euler-check" => {
            let doc =
                euler_check_report(&rs, alpha()?, r()?, &weight()?).map_err(|e| e.to_string())?;
            let ok = doc.verdict == "pass";
            Ok((compact(&doc), ok))
        }
        other => Err(format!("unknown command {other:?}")),
    }
}

fn compact<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("serializable")
}

/// Evaluates batch input; output lines follow input order. Blank lines are skipped.
pub fn run_batch(input: &str) -> (String, BatchStatus) {
    let lines: Vec<(usize, &str)> = input
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .collect();
    let results: Vec<LineResult> = lines
        .par_iter()
        .map(|&(no, line)| match batch_line(line) {
            Ok((json, true)) => LineResult::Ok(json),
            Ok((json, false)) => LineResult::CheckFailed(json),
            Err(error) => LineResult::Malformed(
                serde_json::to_string(&BatchError {
                    schema: SCHEMA_VERSION,
                    line: no + 1,
                    error,
                })
                .expect("serializable"),
            ),
        })
        .collect();
    let mut status = BatchStatus::Ok;
    let mut out = String::new();
    for r in results {
        let text = match r {
            LineResult::Ok(t) => t,
            LineResult::CheckFailed(t) => {
                if status == BatchStatus::Ok {
                    status = BatchStatus::CheckFailed;
                }
                t
            }
            LineResult::Malformed(t) => {
                status = BatchStatus::Malformed;
                t
            }
        };
        out.push_str(&text);
        out.push('\n');
    }
    (out, status)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lambda_parsing() {
        assert_eq!(parse_lambda("-2,1").unwrap(), vec![-2, 1]);
        assert_eq!(parse_lambda(" 3 , 0 ,-1").unwrap(), vec![3, 0, -1]);
        assert!(parse_lambda("1,,2").is_err());
        assert!(parse_lambda("x").is_err());
    }

    #[test]
    fn escaping() {
        assert_eq!(latex_escape("M_{a}"), "M\\_\\{a\\}");
        assert_eq!(latex_escape("50% & $x$ #1"), "50\\% \\& \\$x\\$ \\#1");
        assert_eq!(
            latex_escape("a^b~c\\"),
            "a\\textasciicircum{}b\\textasciitilde{}c\\textbackslash{}"
        );
    }

    #[test]
    fn batch_preserves_order_and_flags_errors() {
        let input = concat!(
            r#"{"command":"bott","type":"A","rank":2,"lambda":[-2,1]}"#,
            "\n\n",
            r#"{"command":"demazure","type":"A","rank":1,"lambda":[5],"alpha":1,"r":2}"#,
            "\n",
            r#"{"command":"bott","type":"A","rank":2,"lambda":[1]}"#,
            "\n"
        );
        let (out, status) = run_batch(input);
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines.len(), 3);
        assert!(lines[0].contains(r#""highest_weight":[0,0]"#));
        assert!(lines[1].contains(r#""case":"C2""#));
        assert!(lines[2].contains(r#""line":4"#));
        assert_eq!(status, BatchStatus::Malformed);

        let (_, status) = run_batch(r#"{"command":"roots","type":"G","rank":2}"#);
        assert_eq!(status, BatchStatus::Ok);
        let (_, status) =
            run_batch(r#"{"command":"demazure","type":"A","rank":1,"lambda":[5],"alpha":1}"#);
        assert_eq!(status, BatchStatus::Malformed);
    }
}
