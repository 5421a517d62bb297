//! Independent verification of the Demazure-module cohomology.
//!
//! The master check is Euler additivity along the weight filtration: the
//! short exact sequences `0 → M_{α,r−1}(λ−α) → M_{α,r}(λ) → λ → 0` give
//! `χ(M_{α,r}(λ)) = Σ_{t=0}^{r} χ(λ − tα)`. The right-hand side uses only
//! Bott's theorem on single weights, never the case analysis.

use std::fmt;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::bott::{euler_characteristic, serre_duality_check, CohomologyDescription};
use crate::demazure::{case_of, cohomology_rank1, cohomology_with, CaseLabel, DispatchOptions};
use crate::error::{Error, Result};
use crate::repcalc::VirtualModule;
use crate::rootsys::{CartanType, RootSystem, Weight};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QueryEcho {
    pub cartan: CartanType,
    pub alpha_index: usize,
    pub r: u32,
    pub lambda: Weight,
}

impl fmt::Display for QueryEcho {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} alpha={} r={} lambda={}",
            self.cartan,
            self.alpha_index + 1,
            self.r,
            self.lambda
        )
    }
}

#[derive(Debug, Clone)]
pub struct CheckReport {
    pub query: QueryEcho,
    pub verdict: Verdict,
    /// `Σ_i (−1)^i [H^i(M)]` from the case analysis.
    pub lhs: VirtualModule,
    /// `Σ_t χ(λ − tα)`.
    pub rhs: VirtualModule,
    pub case: Option<CaseLabel>,
    pub elapsed: Duration,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let case = self.case.map(|c| c.kind.code()).unwrap_or("r=0");
        write!(
            f,
            "{} [{}] euler {}: lhs {} | rhs {}",
            self.query, case, self.verdict, self.lhs, self.rhs
        )
    }
}

/// `Σ_{t=0}^{r} χ(λ − tα)`.
pub fn filtration_euler_sum(
    rs: &RootSystem,
    alpha_index: usize,
    r: u32,
    lambda: &Weight,
) -> VirtualModule {
    let alpha = rs.simple_root_weight(alpha_index);
    let mut acc = VirtualModule::new(rs.cartan_type());
    for t in 0..=r as i64 {
        acc.add_assign(&euler_characteristic(rs, &(lambda - &(t * &alpha))));
    }
    acc
}

pub fn euler_identity_check(
    rs: &RootSystem,
    alpha_index: usize,
    r: u32,
    lambda: &Weight,
) -> Result<CheckReport> {
    euler_identity_check_with(rs, alpha_index, r, lambda, &DispatchOptions::default())
}

pub fn euler_identity_check_with(
    rs: &RootSystem,
    alpha_index: usize,
    r: u32,
    lambda: &Weight,
    opts: &DispatchOptions,
) -> Result<CheckReport> {
    let start = Instant::now();
    let case = case_of(rs, alpha_index, r, lambda)?;
    let lhs = cohomology_with(rs, alpha_index, r, lambda, opts)?.euler_characteristic();
    let rhs = filtration_euler_sum(rs, alpha_index, r, lambda);
    let verdict = if lhs == rhs {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    Ok(CheckReport {
        query: QueryEcho {
            cartan: rs.cartan_type(),
            alpha_index,
            r,
            lambda: lambda.clone(),
        },
        verdict,
        lhs,
        rhs,
        case,
        elapsed: start.elapsed(),
    })
}

/// Computes the cohomology and refuses to return it unless the Euler
/// identity holds.
pub fn cohomology_checked(
    rs: &RootSystem,
    alpha_index: usize,
    r: u32,
    lambda: &Weight,
) -> Result<CohomologyDescription> {
    let h = cohomology_with(rs, alpha_index, r, lambda, &DispatchOptions::default())?;
    let lhs = h.euler_characteristic();
    let rhs = filtration_euler_sum(rs, alpha_index, r, lambda);
    if lhs != rhs {
        return Err(Error::EulerMismatch {
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        });
    }
    Ok(h)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepReport {
    pub name: String,
    pub checks: usize,
    pub passed: usize,
    /// In lexicographic query order.
    pub failures: Vec<String>,
}

impl SweepReport {
    pub fn is_pass(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn first_failure(&self) -> Option<&str> {
        self.failures.first().map(String::as_str)
    }

    fn merge(name: String, parts: Vec<(usize, Vec<String>)>) -> SweepReport {
        let checks = parts.iter().map(|p| p.0).sum();
        let failures: Vec<String> = parts.into_iter().flat_map(|p| p.1).collect();
        SweepReport {
            name,
            checks,
            passed: checks - failures.len(),
            failures,
        }
    }
}

impl fmt::Display for SweepReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}/{} passed", self.name, self.passed, self.checks)?;
        if let Some(first) = self.first_failure() {
            write!(f, "; first failure: {first}")?;
        }
        Ok(())
    }
}

/// All weights with coordinates in `[−radius, radius]`, lexicographic.
pub fn weight_box(rank: usize, radius: i64) -> Vec<Weight> {
    let side = (2 * radius + 1) as usize;
    let total = side.pow(rank as u32);
    (0..total)
        .map(|mut k| {
            let mut coords = vec![0i64; rank];
            for c in coords.iter_mut().rev() {
                *c = (k % side) as i64 - radius;
                k /= side;
            }
            Weight::new(coords)
        })
        .collect()
}

/// `count` weights drawn uniformly from the box, reproducible from `seed`.
pub fn sample_box(rank: usize, radius: i64, count: usize, seed: u64) -> Vec<Weight> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| Weight::new((0..rank).map(|_| rng.gen_range(-radius..=radius)).collect()))
        .collect()
}

/// Euler identity for every point, every simple root and every `r ≤ r_max`.
pub fn euler_sweep(
    rs: &RootSystem,
    points: &[Weight],
    r_max: u32,
    opts: &DispatchOptions,
) -> SweepReport {
    let parts: Vec<(usize, Vec<String>)> = points
        .par_iter()
        .map(|lam| {
            let mut n = 0;
            let mut fails = vec![];
            for alpha in 0..rs.rank() {
                for r in 0..=r_max {
                    n += 1;
                    match euler_identity_check_with(rs, alpha, r, lam, opts) {
                        Ok(rep) if rep.passed() => {}
                        Ok(rep) => fails.push(rep.to_string()),
                        Err(e) => fails.push(format!(
                            "{} alpha={} r={r} lambda={lam}: {e}",
                            rs.cartan_type(),
                            alpha + 1
                        )),
                    }
                }
            }
            (n, fails)
        })
        .collect();
    SweepReport::merge(
        format!("{} euler identity, r <= {r_max}", rs.cartan_type()),
        parts,
    )
}

/// Rank-one formula against the general dispatcher at `r = 1`.
pub fn rank1_agreement(rs: &RootSystem, points: &[Weight]) -> SweepReport {
    let parts: Vec<(usize, Vec<String>)> = points
        .par_iter()
        .map(|lam| {
            let mut fails = vec![];
            for alpha in 0..rs.rank() {
                let a = cohomology_rank1(rs, alpha, lam);
                let b = cohomology_with(rs, alpha, 1, lam, &DispatchOptions::default());
                if a != b {
                    fails.push(format!(
                        "{} alpha={} lambda={lam}: rank-one formula {a:?} vs dispatcher {b:?}",
                        rs.cartan_type(),
                        alpha + 1
                    ));
                }
            }
            (rs.rank(), fails)
        })
        .collect();
    SweepReport::merge(format!("{} rank-one agreement", rs.cartan_type()), parts)
}

/// Exhaustive box sweep: rank-one agreement at `r = 1`, then the Euler
/// identity for all `r ≤ r_max`.
pub fn theorem_agreement_sweep(rs: &RootSystem, box_radius: i64, r_max: u32) -> SweepReport {
    let points = weight_box(rs.rank(), box_radius);
    let agreement = rank1_agreement(rs, &points);
    let euler = euler_sweep(rs, &points, r_max, &DispatchOptions::default());
    SweepReport {
        name: format!(
            "{} theorem agreement, radius {box_radius}, r <= {r_max}",
            rs.cartan_type()
        ),
        checks: agreement.checks + euler.checks,
        passed: agreement.passed + euler.passed,
        failures: agreement
            .failures
            .into_iter()
            .chain(euler.failures)
            .collect(),
    }
}

pub fn duality_sweep(rs: &RootSystem, box_radius: i64) -> SweepReport {
    let points = weight_box(rs.rank(), box_radius);
    let parts: Vec<(usize, Vec<String>)> = points
        .par_iter()
        .map(|lam| {
            if serre_duality_check(rs, lam) {
                (1, vec![])
            } else {
                (
                    1,
                    vec![format!(
                        "{} lambda={lam}: duality mismatch",
                        rs.cartan_type()
                    )],
                )
            }
        })
        .collect();
    SweepReport::merge(
        format!("{} Serre duality, radius {box_radius}", rs.cartan_type()),
        parts,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(s.parse().unwrap())
    }

    fn w(v: &[i64]) -> Weight {
        Weight::new(v.to_vec())
    }

    #[test]
    fn check_examples() {
        let a1 = rs("A1");
        for m in -6..=6 {
            let rep = euler_identity_check(&a1, 0, 0, &w(&[m])).unwrap();
            assert!(rep.passed());
            assert_eq!(rep.lhs, euler_characteristic(&a1, &w(&[m])));
            assert!(rep.case.is_none());
        }

        let rep = euler_identity_check(&a1, 0, 3, &w(&[0])).unwrap();
        assert!(rep.passed());
        let v2 = VirtualModule::irreducible(&a1, w(&[2])).unwrap();
        let v4 = VirtualModule::irreducible(&a1, w(&[4])).unwrap();
        assert_eq!(rep.rhs, v2.add(&v4).unwrap().negate());

        let rep = euler_identity_check(&a1, 0, 2, &w(&[1])).unwrap();
        assert!(rep.passed());
        assert!(rep.lhs.is_empty() && rep.rhs.is_empty());
    }

    #[test]
    fn unshifted_interior_case_is_caught() {
        let a1 = rs("A1");
        let broken = DispatchOptions {
            interior_degree_shift: 0,
        };
        let rep = euler_identity_check_with(&a1, 0, 3, &w(&[0]), &broken).unwrap();
        assert_eq!(rep.verdict, Verdict::Fail);
        assert!(rep.to_string().contains("A1 alpha=1 r=3 lambda=(0)"));
    }

    #[test]
    fn checked_mode() {
        let a2 = rs("A2");
        let h = cohomology_checked(&a2, 1, 4, &w(&[2, 1])).unwrap();
        assert!(!h.is_zero());
        assert!(cohomology_checked(&a2, 3, 4, &w(&[2, 1])).is_err());
    }

    #[test]
    fn boxes_and_samples() {
        let b = weight_box(2, 1);
        assert_eq!(b.len(), 9);
        assert_eq!(b[0], w(&[-1, -1]));
        assert_eq!(b[1], w(&[-1, 0]));
        assert_eq!(b[8], w(&[1, 1]));
        let mut sorted = b.clone();
        sorted.sort();
        assert_eq!(sorted, b);

        let s1 = sample_box(3, 4, 50, 7);
        assert_eq!(s1, sample_box(3, 4, 50, 7));
        assert!(s1.iter().all(|x| x.coords().iter().all(|c| c.abs() <= 4)));
    }

    #[test]
    fn small_sweeps_pass_and_are_reproducible() {
        let a1 = rs("A1");
        let rep = theorem_agreement_sweep(&a1, 6, 5);
        assert!(rep.is_pass(), "{rep}");
        assert_eq!(rep.checks, 13 + 13 * 6);
        assert_eq!(rep, theorem_agreement_sweep(&a1, 6, 5));
        assert!(duality_sweep(&a1, 6).is_pass());
    }

    #[test]
    fn bundled_sweep_examples() {
        assert!(theorem_agreement_sweep(&rs("A2"), 4, 4).is_pass());
        assert!(theorem_agreement_sweep(&rs("G2"), 3, 3).is_pass());
        for (t, radius) in [("A1", 6), ("A2", 4), ("B2", 3)] {
            let rep = duality_sweep(&rs(t), radius);
            assert!(rep.is_pass(), "{rep}");
            assert_eq!(
                rep.checks,
                (2 * radius as usize + 1).pow(rs(t).rank() as u32)
            );
        }
    }

    #[test]
    fn rank1_agreement_on_rank2_boxes() {
        for t in ["A2", "B2", "C2", "G2"] {
            let rep = rank1_agreement(&rs(t), &weight_box(2, 5));
            assert!(rep.is_pass(), "{rep}");
        }
    }

    #[test]
    fn sweep_reports_first_failure_in_order() {
        let a1 = rs("A1");
        let broken = DispatchOptions {
            interior_degree_shift: 0,
        };
        let rep = euler_sweep(&a1, &weight_box(1, 3), 3, &broken);
        assert!(!rep.is_pass());
        // (-3) and (-2) never reach the interior case; (-1) has m < 0 as well;
        // (0) with r = 2 is the first interior query.
        assert!(rep
            .first_failure()
            .unwrap()
            .starts_with("A1 alpha=1 r=2 lambda=(0)"));
    }
}
