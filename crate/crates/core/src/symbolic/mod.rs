//! Polynomial arithmetic in `q` and positivity certificates for the exceptional families.

pub mod families;
pub mod poly;
pub mod positivity;
pub mod ratfn;

pub use families::{
    family_case, spot_check, verify_all, verify_case, verify_case_from, verify_families, verify_family,
    CheckKind, ExceptionalSummary, Family, FamilyCase, FamilyReport,
};
pub use poly::IntPolynomial;
pub use positivity::{
    verify_inequality, verify_positive_for_all_q, PositivityCertificate, Relation, Verdict,
};
pub use ratfn::RationalFunction;
