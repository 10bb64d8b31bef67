//! Reconstruction of characters from boundary data, and the rigidity check.

pub mod family;
pub mod oracle;
pub mod reconstruct;
pub mod supp;
pub mod verify;

pub use family::{CaseTag, FamilyTable};
pub use oracle::{BoundaryOracle, Clause, MultiplicitySource};
pub use reconstruct::{choose_index, constrained_lr, reconstruct_up_to};
pub use supp::{fundamental_identities, lemma_supp_check, supp};
pub use verify::{falsify, required_coverage, verify_conditions, Verdict, VerifyMode, ViolationReport};
