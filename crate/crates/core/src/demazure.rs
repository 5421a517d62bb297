//! Cohomology of the generalized Demazure modules `M_{α,r}(λ)`.
//!
//! `M_{α,r}(λ)` is the indecomposable `B`-module with weights
//! `λ, λ−α, …, λ−rα`. Its cohomology is computed from `m = ⟨λ, α^v⟩` and
//! `s = m − r` by a six-way case split; every branch reduces to line-bundle
//! cohomology through [`line_bundle_cohomology`].
//!
//! The interior case `0 ≤ m ≤ r−2` goes through the rank-one tensor product
//! `∇_α(rρ) ⊗ R¹Ind(λ − rρ)`. Relative duality on `P_α/B` identifies the
//! second factor with `∇_α(λ − rρ + (r−1−m)α)`, whose `α`-level is
//! `r − m − 2`; Clebsch–Gordan then yields the constituents `λ + kα` for
//! `k = 1..=r−1−m`, each contributing one degree higher than its own
//! line-bundle cohomology.

use std::fmt;

use crate::bott::{line_bundle_cohomology, CohomologyDescription};
use crate::error::{Error, Result};
use crate::repcalc::sl2_clebsch_gordan;
use crate::rootsys::{RootSystem, Weight};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GeneralizedDemazureModule {
    pub alpha_index: usize,
    pub r: u32,
    pub lambda: Weight,
}

impl GeneralizedDemazureModule {
    pub fn new(rs: &RootSystem, alpha_index: usize, r: u32, lambda: Weight) -> Result<Self> {
        rs.check_simple_index(alpha_index)?;
        rs.check_weight(&lambda)?;
        Ok(GeneralizedDemazureModule {
            alpha_index,
            r,
            lambda,
        })
    }

    /// `[λ − tα for t = 0..=r]`.
    pub fn weights(&self, rs: &RootSystem) -> Vec<Weight> {
        let alpha = rs.simple_root_weight(self.alpha_index);
        (0..=self.r as i64)
            .map(|t| &self.lambda - &(t * &alpha))
            .collect()
    }

    pub fn dimension(&self) -> u64 {
        self.r as u64 + 1
    }

    /// `m = ⟨λ, α^v⟩`.
    pub fn m(&self) -> i64 {
        self.lambda.coords()[self.alpha_index]
    }

    pub fn cohomology(&self, rs: &RootSystem) -> Result<CohomologyDescription> {
        cohomology(rs, self.alpha_index, self.r, &self.lambda)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CaseKind {
    /// `m ≤ −1`
    C1Antidominant,
    /// `m > r` and `r ≤ s`
    C2Large,
    /// `m > r` and `r > s`
    C3Truncated,
    /// `0 ≤ m ≤ r−2`
    C4Interior,
    /// `m = r`
    C5Equal,
    /// `m = r−1`
    C6Vanishing,
}

impl CaseKind {
    pub fn code(self) -> &'static str {
        match self {
            CaseKind::C1Antidominant => "C1",
            CaseKind::C2Large => "C2",
            CaseKind::C3Truncated => "C3",
            CaseKind::C4Interior => "C4",
            CaseKind::C5Equal => "C5",
            CaseKind::C6Vanishing => "C6",
        }
    }
}

impl fmt::Display for CaseKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CaseLabel {
    pub kind: CaseKind,
    /// `⟨λ, α^v⟩`
    pub m: i64,
    /// `⟨λ − rρ, α^v⟩ = m − r`
    pub s: i64,
}

pub fn case_classify(m: i64, r: u32) -> Result<CaseLabel> {
    if r == 0 {
        return Err(Error::ZeroLength);
    }
    let ri = r as i64;
    let s = m - ri;
    let kind = if m <= -1 {
        CaseKind::C1Antidominant
    } else if m == ri {
        CaseKind::C5Equal
    } else if m == ri - 1 {
        CaseKind::C6Vanishing
    } else if m > ri {
        if ri <= s {
            CaseKind::C2Large
        } else {
            CaseKind::C3Truncated
        }
    } else {
        CaseKind::C4Interior
    };
    Ok(CaseLabel { kind, m, s })
}

/// Knobs for the dispatcher. The default is the correct computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DispatchOptions {
    /// Degree shift applied to the interior-case constituents.
    pub interior_degree_shift: usize,
}

impl Default for DispatchOptions {
    fn default() -> Self {
        DispatchOptions {
            interior_degree_shift: 1,
        }
    }
}

fn check_query(rs: &RootSystem, alpha_index: usize, lambda: &Weight) -> Result<()> {
    rs.check_simple_index(alpha_index)?;
    rs.check_weight(lambda)
}

/// Sum of `H^*(λ − tα)` over `t = 0..=upto`.
fn filtration_sum(
    rs: &RootSystem,
    alpha_index: usize,
    lambda: &Weight,
    upto: i64,
) -> CohomologyDescription {
    let alpha = rs.simple_root_weight(alpha_index);
    let mut out = CohomologyDescription::zero(rs.cartan_type());
    for t in 0..=upto {
        let mu = lambda - &(t * &alpha);
        out.add_outcome(&line_bundle_cohomology(rs, &mu), 0);
    }
    out
}

/// `H^*(M_{α,1}(λ))`: zero when `⟨λ, α^v⟩ = 0`, else `H^*(λ) ⊕ H^*(λ − α)`.
pub fn cohomology_rank1(
    rs: &RootSystem,
    alpha_index: usize,
    lambda: &Weight,
) -> Result<CohomologyDescription> {
    check_query(rs, alpha_index, lambda)?;
    if lambda.coords()[alpha_index] == 0 {
        return Ok(CohomologyDescription::zero(rs.cartan_type()));
    }
    Ok(filtration_sum(rs, alpha_index, lambda, 1))
}

pub fn cohomology(
    rs: &RootSystem,
    alpha_index: usize,
    r: u32,
    lambda: &Weight,
) -> Result<CohomologyDescription> {
    cohomology_with(rs, alpha_index, r, lambda, &DispatchOptions::default())
}

/// The case dispatcher; `m` and `s` are always recomputed from `λ`.
pub fn cohomology_with(
    rs: &RootSystem,
    alpha_index: usize,
    r: u32,
    lambda: &Weight,
    opts: &DispatchOptions,
) -> Result<CohomologyDescription> {
    check_query(rs, alpha_index, lambda)?;
    if r == 0 {
        return Ok(CohomologyDescription::from((
            rs,
            &line_bundle_cohomology(rs, lambda),
        )));
    }
    let label = case_classify(lambda.coords()[alpha_index], r)?;
    let out = match label.kind {
        CaseKind::C1Antidominant | CaseKind::C2Large => {
            filtration_sum(rs, alpha_index, lambda, r as i64)
        }
        CaseKind::C3Truncated => filtration_sum(rs, alpha_index, lambda, label.s),
        CaseKind::C4Interior => {
            let mut out = CohomologyDescription::zero(rs.cartan_type());
            for (mu, _) in case_c_constituents(rs, alpha_index, r, lambda)? {
                out.add_outcome(&line_bundle_cohomology(rs, &mu), opts.interior_degree_shift);
            }
            out
        }
        CaseKind::C5Equal => CohomologyDescription::from((rs, &line_bundle_cohomology(rs, lambda))),
        CaseKind::C6Vanishing => CohomologyDescription::zero(rs.cartan_type()),
    };
    Ok(out)
}

/// The case label the dispatcher would use, or `None` for `r = 0`.
pub fn case_of(
    rs: &RootSystem,
    alpha_index: usize,
    r: u32,
    lambda: &Weight,
) -> Result<Option<CaseLabel>> {
    check_query(rs, alpha_index, lambda)?;
    if r == 0 {
        return Ok(None);
    }
    case_classify(lambda.coords()[alpha_index], r).map(Some)
}

/// Demazure's original module `V_{λ,α}`, i.e. `r = ⟨λ, α^v⟩`.
pub fn cohomology_demazure_original(
    rs: &RootSystem,
    alpha_index: usize,
    lambda: &Weight,
) -> Result<CohomologyDescription> {
    check_query(rs, alpha_index, lambda)?;
    let m = lambda.coords()[alpha_index];
    if m < 0 {
        return Err(Error::Negative {
            what: "<lambda, alpha^v>",
            value: m,
        });
    }
    cohomology(rs, alpha_index, m as u32, lambda)
}

/// Interior-case constituents `(λ + kα, 1)` for `k = 1..=r−1−m`, read off
/// the Clebsch–Gordan decomposition of `∇_α(rρ) ⊗ ∇_α(λ − rρ + (r−1−m)α)`.
/// The second entry is the degree shift.
pub fn case_c_constituents(
    rs: &RootSystem,
    alpha_index: usize,
    r: u32,
    lambda: &Weight,
) -> Result<Vec<(Weight, usize)>> {
    check_query(rs, alpha_index, lambda)?;
    let m = lambda.coords()[alpha_index];
    let ri = r as i64;
    if !(0 <= m && m <= ri - 2) {
        return Err(Error::OutsideInteriorCase { m, r });
    }
    let alpha = rs.simple_root_weight(alpha_index);
    let rho = rs.rho();
    // Highest weights of the two rank-one factors.
    let first = ri * &rho;
    let second = &(lambda - &first) + &((ri - 1 - m) * &alpha);
    let top = &first + &second;
    let a = first.coords()[alpha_index];
    let b = second.coords()[alpha_index];
    debug_assert_eq!(b, ri - m - 2);
    let mut out: Vec<(Weight, usize)> = sl2_clebsch_gordan(a, b)?
        .into_iter()
        .map(|level| {
            let j = (a + b - level) / 2;
            (&top - &(j * &alpha), 1)
        })
        .collect();
    out.reverse();
    Ok(out)
}
