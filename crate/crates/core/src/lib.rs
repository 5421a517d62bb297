//! Exact cohomology of line bundles and generalized Demazure modules on flag
//! varieties, in characteristic zero.
//!
//! The engine is layered bottom-up:
//!
//! * [`rootsys`] builds finite root systems from Cartan data,
//! * [`weylwalk`] runs dot-action chamber walks without enumerating `W`,
//! * [`repcalc`] holds virtual modules, Weyl dimensions, Freudenthal characters
//!   and the rank-one Clebsch–Gordan rule,
//! * [`bott`] computes `H^i(λ)` and Euler characteristics,
//! * [`demazure`] computes `H^i(M_{α,r}(λ))` by case analysis,
//! * [`oracle`] re-derives every answer through Euler characteristics.
//!
//! Weights are always given in fundamental-weight coordinates, i.e. the
//! `i`-th coordinate of `λ` is `⟨λ, α_i^v⟩`. Roots are given in simple-root
//! coordinates. Simple-root indices are 0-based in this library; the CLI,
//! the JSON schema and the C ABI use 1-based indices.

pub mod bott;
pub mod cli;
pub mod demazure;
mod error;
pub mod oracle;
pub mod repcalc;
pub mod report;
pub mod rootsys;
pub mod weylwalk;

pub use bott::{
    euler_characteristic, line_bundle_cohomology, serre_duality_check, BottOutcome,
    CohomologyDescription,
};
pub use demazure::{
    case_c_constituents, case_classify, cohomology, cohomology_demazure_original, cohomology_rank1,
    cohomology_with, CaseKind, CaseLabel, DispatchOptions, GeneralizedDemazureModule,
};
pub use error::{Error, Result};
pub use oracle::{
    duality_sweep, euler_identity_check, theorem_agreement_sweep, CheckReport, SweepReport, Verdict,
};
pub use repcalc::{
    freudenthal_character, sl2_clebsch_gordan, weyl_dimension, FormalCharacter, VirtualModule,
};
pub use rootsys::{CartanType, Root, RootSystem, Series, Weight};
pub use weylwalk::{
    dominant_representative_plain, dot_reflect_simple, make_dominant_dot, reflect_simple,
    DotNormalForm, Pivot,
};
