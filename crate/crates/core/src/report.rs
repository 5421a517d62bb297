//! Stable JSON documents (schema version 1) shared by the CLI and the C ABI.
//!
//! Simple-root indices are 1-based here. Dimensions are JSON numbers when
//! they fit in 64 bits and decimal strings otherwise; no floats appear.

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::bott::{line_bundle_cohomology, BottOutcome, CohomologyDescription};
use crate::demazure::{case_of, cohomology};
use crate::error::{Error, Result};
use crate::oracle::{duality_sweep, euler_identity_check, theorem_agreement_sweep, SweepReport};
use crate::repcalc::weyl_dimension;
use crate::rootsys::{CartanType, RootSystem, Weight};
use crate::weylwalk::{make_dominant_dot, DotNormalForm};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Dimension {
    Small(u64),
    Big(String),
}

impl From<&BigUint> for Dimension {
    fn from(d: &BigUint) -> Self {
        match u64::try_from(d) {
            Ok(v) => Dimension::Small(v),
            Err(_) => Dimension::Big(d.to_string()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QueryJson {
    #[serde(rename = "type")]
    pub series: String,
    pub rank: usize,
    pub lambda: Vec<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<u32>,
}

impl QueryJson {
    pub fn new(
        cartan: CartanType,
        lambda: &Weight,
        alpha_index: Option<usize>,
        r: Option<u32>,
    ) -> Self {
        QueryJson {
            series: cartan.series().letter().to_string(),
            rank: cartan.rank(),
            lambda: lambda.coords().to_vec(),
            alpha: alpha_index.map(|a| a + 1),
            r,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstituentJson {
    pub highest_weight: Vec<i64>,
    pub multiplicity: i64,
    pub dimension: Dimension,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeJson {
    pub degree: usize,
    pub constituents: Vec<ConstituentJson>,
}

/// Degrees ascending; constituents by decreasing highest weight.
pub fn cohomology_json(rs: &RootSystem, h: &CohomologyDescription) -> Vec<DegreeJson> {
    h.iter()
        .map(|(degree, module)| DegreeJson {
            degree,
            constituents: module
                .iter()
                .rev()
                .map(|(w, n)| ConstituentJson {
                    highest_weight: w.coords().to_vec(),
                    multiplicity: n,
                    dimension: Dimension::from(&weyl_dimension(rs, w).expect("dominant key")),
                })
                .collect(),
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DemazureJson {
    pub schema: u32,
    pub query: QueryJson,
    /// `null` for `r = 0`, which is plain line-bundle cohomology.
    pub case: Option<String>,
    pub cohomology: Vec<DegreeJson>,
    pub euler_check: String,
}

impl DemazureJson {
    pub fn passed(&self) -> bool {
        self.euler_check == "pass"
    }
}

pub fn demazure_report(
    rs: &RootSystem,
    alpha_index: usize,
    r: u32,
    lambda: &Weight,
) -> Result<DemazureJson> {
    let case = case_of(rs, alpha_index, r, lambda)?;
    let h = cohomology(rs, alpha_index, r, lambda)?;
    let check = euler_identity_check(rs, alpha_index, r, lambda)?;
    Ok(DemazureJson {
        schema: SCHEMA_VERSION,
        query: QueryJson::new(rs.cartan_type(), lambda, Some(alpha_index), Some(r)),
        case: case.map(|c| c.kind.code().to_string()),
        cohomology: cohomology_json(rs, &h),
        euler_check: check.verdict.as_str().to_string(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BottJson {
    pub schema: u32,
    pub query: QueryJson,
    pub singular: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub highest_weight: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dimension: Option<Dimension>,
    /// Simple reflections of the chamber walk, 1-based, in application order.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub walk: Option<Vec<usize>>,
}

pub fn bott_report(rs: &RootSystem, lambda: &Weight) -> Result<BottJson> {
    rs.check_weight(lambda)?;
    let query = QueryJson::new(rs.cartan_type(), lambda, None, None);
    let walk = match make_dominant_dot(rs, lambda) {
        DotNormalForm::Singular => None,
        DotNormalForm::Regular { word, .. } => Some(word.into_iter().map(|i| i + 1).collect()),
    };
    Ok(match line_bundle_cohomology(rs, lambda) {
        BottOutcome::ZeroAllDegrees => BottJson {
            schema: SCHEMA_VERSION,
            query,
            singular: true,
            degree: None,
            highest_weight: None,
            dimension: None,
            walk: None,
        },
        BottOutcome::Concentrated {
            degree,
            highest_weight,
            dimension,
        } => BottJson {
            schema: SCHEMA_VERSION,
            query,
            singular: false,
            degree: Some(degree),
            highest_weight: Some(highest_weight.into_vec()),
            dimension: Some(Dimension::from(&dimension)),
            walk,
        },
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EulerCheckJson {
    pub schema: u32,
    pub query: QueryJson,
    pub case: Option<String>,
    pub verdict: String,
    pub lhs: String,
    pub rhs: String,
    pub elapsed_us: u64,
}

pub fn euler_check_report(
    rs: &RootSystem,
    alpha_index: usize,
    r: u32,
    lambda: &Weight,
) -> Result<EulerCheckJson> {
    let rep = euler_identity_check(rs, alpha_index, r, lambda)?;
    Ok(EulerCheckJson {
        schema: SCHEMA_VERSION,
        query: QueryJson::new(rs.cartan_type(), lambda, Some(alpha_index), Some(r)),
        case: rep.case.map(|c| c.kind.code().to_string()),
        verdict: rep.verdict.as_str().to_string(),
        lhs: rep.lhs.to_string(),
        rhs: rep.rhs.to_string(),
        elapsed_us: rep.elapsed.as_micros() as u64,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootsJson {
    pub schema: u32,
    #[serde(rename = "type")]
    pub series: String,
    pub rank: usize,
    pub cartan_matrix: Vec<Vec<i64>>,
    pub symmetrizers: Vec<i64>,
    pub positive_roots: Vec<Vec<i64>>,
}

pub fn roots_report(rs: &RootSystem) -> RootsJson {
    RootsJson {
        schema: SCHEMA_VERSION,
        series: rs.cartan_type().series().letter().to_string(),
        rank: rs.rank(),
        cartan_matrix: rs.cartan_matrix().to_vec(),
        symmetrizers: rs.symmetrizers().to_vec(),
        positive_roots: rs
            .positive_roots()
            .iter()
            .map(|b| b.simple_coords().to_vec())
            .collect(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepEntryJson {
    pub name: String,
    pub checks: usize,
    pub passed: usize,
    pub first_failure: Option<String>,
    pub failures: Vec<String>,
}

impl From<&SweepReport> for SweepEntryJson {
    fn from(r: &SweepReport) -> Self {
        SweepEntryJson {
            name: r.name.clone(),
            checks: r.checks,
            passed: r.passed,
            first_failure: r.first_failure().map(str::to_string),
            failures: r.failures.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepJson {
    pub schema: u32,
    pub sweeps: Vec<SweepEntryJson>,
    pub verdict: String,
}

impl SweepJson {
    pub fn from_reports(reports: &[SweepReport]) -> Self {
        let pass = reports.iter().all(SweepReport::is_pass);
        SweepJson {
            schema: SCHEMA_VERSION,
            sweeps: reports.iter().map(SweepEntryJson::from).collect(),
            verdict: if pass { "pass" } else { "fail" }.to_string(),
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == "pass"
    }
}

/// Theorem-agreement and duality sweeps on one root system.
pub fn sweep_reports(rs: &RootSystem, radius: i64, r_max: u32) -> Vec<SweepReport> {
    vec![
        theorem_agreement_sweep(rs, radius, r_max),
        duality_sweep(rs, radius),
    ]
}

/// The bundled self-test: A1, A2, B2 and G2 sweeps.
pub fn selftest_reports() -> Vec<SweepReport> {
    let plan: [(&str, i64, u32, i64); 4] = [
        ("A1", 6, 5, 6),
        ("A2", 4, 4, 4),
        ("B2", 3, 3, 4),
        ("G2", 3, 3, 3),
    ];
    let mut out = vec![];
    for (t, radius, r_max, dual_radius) in plan {
        let rs = RootSystem::new(t.parse().expect("bundled type"));
        out.push(theorem_agreement_sweep(&rs, radius, r_max));
        out.push(duality_sweep(&rs, dual_radius));
    }
    out
}

/// Parses `"A"` plus a rank into a root system.
pub fn root_system_for(series: &str, rank: usize) -> Result<RootSystem> {
    let cartan: CartanType = format!("{}{}", series.trim(), rank)
        .parse()
        .map_err(|_| Error::BadCartanType(format!("{series}{rank}")))?;
    Ok(RootSystem::new(cartan))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(v: &[i64]) -> Weight {
        Weight::new(v.to_vec())
    }

    #[test]
    fn demazure_json_shape() {
        let rs = root_system_for("A", 1).unwrap();
        let doc = demazure_report(&rs, 0, 2, &w(&[5])).unwrap();
        let text = serde_json::to_string(&doc).unwrap();
        assert_eq!(
            text,
            r#"{"schema":1,"query":{"type":"A","rank":1,"lambda":[5],"alpha":1,"r":2},"case":"C2","cohomology":[{"degree":0,"constituents":[{"highest_weight":[5],"multiplicity":1,"dimension":6},{"highest_weight":[3],"multiplicity":1,"dimension":4},{"highest_weight":[1],"multiplicity":1,"dimension":2}]}],"euler_check":"pass"}"#
        );
        let back: DemazureJson = serde_json::from_str(&text).unwrap();
        assert_eq!(back, doc);
    }

    #[test]
    fn big_dimensions_become_strings() {
        let rs = root_system_for("E", 8).unwrap();
        let doc = bott_report(&rs, &w(&[10; 8])).unwrap();
        let text = serde_json::to_string(&doc).unwrap();
        assert!(matches!(doc.dimension, Some(Dimension::Big(_))));
        assert!(text.contains(r#""dimension":""#));
        let back: BottJson = serde_json::from_str(&text).unwrap();
        assert_eq!(back, doc);
    }

    #[test]
    fn singular_bott_json() {
        let rs = root_system_for("A", 2).unwrap();
        let doc = bott_report(&rs, &w(&[-1, 0])).unwrap();
        assert_eq!(
            serde_json::to_string(&doc).unwrap(),
            r#"{"schema":1,"query":{"type":"A","rank":2,"lambda":[-1,0]},"singular":true}"#
        );
    }

    #[test]
    fn bad_type_strings() {
        assert!(root_system_for("Q", 2).is_err());
        assert!(root_system_for("D", 3).is_err());
    }
}
