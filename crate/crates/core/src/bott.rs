//! Borel–Weil–Bott in characteristic zero.
//!
//! `H^i(λ)` denotes `R^i Ind_B^G λ` with `B` the negative Borel, so dominant
//! weights have `H^0(λ) = V(λ)`. For regular `λ` all cohomology sits in the
//! single degree `ℓ(w)` where `w·λ` is dominant, and equals `V(w·λ)`.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use crate::error::Result;
use crate::repcalc::{weyl_dimension, VirtualModule};
use crate::rootsys::{CartanType, RootSystem, Weight};
use crate::weylwalk::{dominant_representative_plain, make_dominant_dot, DotNormalForm};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BottOutcome {
    ZeroAllDegrees,
    Concentrated {
        degree: usize,
        highest_weight: Weight,
        dimension: BigUint,
    },
}

impl BottOutcome {
    pub fn is_zero(&self) -> bool {
        matches!(self, BottOutcome::ZeroAllDegrees)
    }
}

/// `H^*(M)` as a map from degree to a genuine (nonnegative) module in the
/// irreducible basis. Degrees with zero cohomology are absent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohomologyDescription {
    cartan: CartanType,
    by_degree: BTreeMap<usize, VirtualModule>,
}

impl CohomologyDescription {
    pub fn zero(cartan: CartanType) -> Self {
        CohomologyDescription {
            cartan,
            by_degree: BTreeMap::new(),
        }
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan
    }

    pub fn is_zero(&self) -> bool {
        self.by_degree.is_empty()
    }

    pub fn degree(&self, i: usize) -> Option<&VirtualModule> {
        self.by_degree.get(&i)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &VirtualModule)> {
        self.by_degree.iter().map(|(&i, v)| (i, v))
    }

    pub fn degrees(&self) -> impl Iterator<Item = usize> + '_ {
        self.by_degree.keys().copied()
    }

    /// Adds `H^*(λ)` from a Bott outcome, shifted up by `shift` degrees.
    pub(crate) fn add_outcome(&mut self, outcome: &BottOutcome, shift: usize) {
        if let BottOutcome::Concentrated {
            degree,
            highest_weight,
            ..
        } = outcome
        {
            self.by_degree
                .entry(degree + shift)
                .or_insert_with(|| VirtualModule::new(self.cartan))
                .add_term(highest_weight.clone(), 1);
        }
    }

    /// Degree-wise direct sum.
    pub fn direct_sum(&self, other: &CohomologyDescription) -> CohomologyDescription {
        assert_eq!(self.cartan, other.cartan, "mixed root systems");
        let mut out = self.clone();
        for (&i, v) in &other.by_degree {
            out.by_degree
                .entry(i)
                .or_insert_with(|| VirtualModule::new(self.cartan))
                .add_assign(v);
        }
        out.by_degree.retain(|_, v| !v.is_empty());
        out
    }

    /// `Σ_i (−1)^i [H^i]`.
    pub fn euler_characteristic(&self) -> VirtualModule {
        let mut chi = VirtualModule::new(self.cartan);
        for (&i, v) in &self.by_degree {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            chi.add_assign(&v.scale(sign));
        }
        chi
    }

    pub fn total_dimension(&self, rs: &RootSystem) -> Result<BigInt> {
        let mut total = BigInt::zero();
        for v in self.by_degree.values() {
            total += v.dimension(rs)?;
        }
        Ok(total)
    }
}

impl From<(&RootSystem, &BottOutcome)> for CohomologyDescription {
    fn from((rs, outcome): (&RootSystem, &BottOutcome)) -> Self {
        let mut c = CohomologyDescription::zero(rs.cartan_type());
        c.add_outcome(outcome, 0);
        c
    }
}

/// `H^*(λ)` for the line bundle attached to `λ`.
///
/// Panics if `lambda` has the wrong rank; use [`RootSystem::weight`] to
/// validate untrusted input.
pub fn line_bundle_cohomology(rs: &RootSystem, lambda: &Weight) -> BottOutcome {
    match make_dominant_dot(rs, lambda) {
        DotNormalForm::Singular => BottOutcome::ZeroAllDegrees,
        DotNormalForm::Regular {
            length, dominant, ..
        } => {
            let dimension =
                weyl_dimension(rs, &dominant).expect("walk ends in the dominant chamber");
            BottOutcome::Concentrated {
                degree: length,
                highest_weight: dominant,
                dimension,
            }
        }
    }
}

/// `χ(λ) = Σ_i (−1)^i [H^i(λ)]`.
pub fn euler_characteristic(rs: &RootSystem, lambda: &Weight) -> VirtualModule {
    let mut chi = VirtualModule::new(rs.cartan_type());
    if let DotNormalForm::Regular {
        length, dominant, ..
    } = make_dominant_dot(rs, lambda)
    {
        chi.add_term(dominant, if length % 2 == 0 { 1 } else { -1 });
    }
    chi
}

/// Checks `H^i(λ)* ≅ H^{N−i}(−λ−2ρ)` with `N = |Φ+|`.
pub fn serre_duality_check(rs: &RootSystem, lambda: &Weight) -> bool {
    let two_rho = 2 * &rs.rho();
    let partner = &(-lambda) - &two_rho;
    match (
        line_bundle_cohomology(rs, lambda),
        line_bundle_cohomology(rs, &partner),
    ) {
        (BottOutcome::ZeroAllDegrees, BottOutcome::ZeroAllDegrees) => true,
        (
            BottOutcome::Concentrated {
                degree: i,
                highest_weight: mu,
                ..
            },
            BottOutcome::Concentrated {
                degree: j,
                highest_weight: nu,
                ..
            },
        ) => {
            let dual = dominant_representative_plain(rs, &-&mu).0;
            i + j == rs.num_positive_roots() && dual == nu
        }
        _ => false,
    }
}
