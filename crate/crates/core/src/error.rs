use thiserror::Error;

use crate::rootsys::{CartanType, Weight};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unsupported Cartan type {series}{rank}")]
    UnsupportedType { series: char, rank: usize },

    #[error("cannot parse Cartan type from {0:?}")]
    BadCartanType(String),

    #[error("weight has {found} coordinates but the root system has rank {expected}")]
    RankMismatch { expected: usize, found: usize },

    #[error("simple root index {index} out of range for rank {rank}")]
    SimpleIndexOutOfRange { index: usize, rank: usize },

    #[error("{0:?} is not a root")]
    NotARoot(Vec<i64>),

    #[error("weight {0} is not dominant")]
    NotDominant(Weight),

    #[error("{what} must be nonnegative, got {value}")]
    Negative { what: &'static str, value: i64 },

    #[error("virtual modules belong to different root systems ({0} and {1})")]
    MixedRootSystems(CartanType, CartanType),

    #[error("case classification needs r >= 1")]
    ZeroLength,

    #[error("query with m = {m}, r = {r} lies outside the interior case 0 <= m <= r - 2")]
    OutsideInteriorCase { m: i64, r: u32 },

    #[error("Euler characteristic identity failed: cohomology gives {lhs}, weight filtration gives {rhs}")]
    EulerMismatch { lhs: String, rhs: String },
}
