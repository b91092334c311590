//! Exact computations with Hall subgroups of finite permutation groups: base
//! sizes of coset actions, fixed-point ratios, the non-regularity majorant, and
//! polynomial certificates for the exceptional groups of Lie type.

pub mod base;
pub mod classes;
pub mod corpus;
pub mod coset;
pub mod error;
pub mod group;
pub mod io;
pub mod perm;
pub mod prob;
pub mod properties;
pub mod report;
pub mod structure;
pub mod symbolic;

pub use base::{
    base_size, q_exact, regular_orbit_count, regular_tuple_count, verify_certificate, BaseCertificate,
    WorkBudget,
};
pub use corpus::{load_corpus, load_pair, LoadedCase};
pub use coset::CosetSpace;
pub use error::{Error, Result};
pub use group::{PermutationGroup, Subgroup};
pub use perm::Permutation;
pub use structure::PrimeSet;
