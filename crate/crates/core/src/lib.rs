//! Generalized Hamming weights, gap numbers and locality of linear codes over
//! GF(q), with checks of the Singleton-like bound family for locally
//! repairable codes.
//!
//! Exhaustive analyses enumerate coordinate subsets, so they are meant for
//! lengths up to a few dozen; see [`Limits`].

pub mod algebra;
pub mod bounds;
pub mod cli;
pub mod code;
pub mod constructions;
mod error;
pub mod ghw;
pub mod locality;
mod subsets;

pub use algebra::{Elem, Field, FieldElement, Matrix};
pub use bounds::{certify_optimal, BoundReport, CertifyOptions, Verdict};
pub use code::{LinearCode, SubcodeWitness};
pub use constructions::{random_code, reed_solomon, tamo_barg, ConstructionSpec};
pub use error::{Error, Result};
pub use ghw::{
    dual_weight_hierarchy, ghw, ghw_oracle, weight_hierarchy, HierarchyOptions, WeightHierarchy,
};
pub use locality::{is_lrc, locality, LocalityProfile};
pub use subsets::Limits;
