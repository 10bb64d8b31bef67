//! Exact formal characters for the classical simple Lie algebras and a
//! reconstruction engine showing that the character family is determined by
//! a small set of boundary multiplicities together with tensor duality.
//!
//! Layout:
//! - [`rootsystem`]: Cartan data, Weyl group action, dominance.
//! - [`charring`]: the W-invariant group ring in the orbit-sum basis.
//! - [`weylchar`]: Freudenthal characters, dimensions, tensor coefficients,
//!   Levi restriction checks.
//! - [`rigidity`]: support bookkeeping, boundary oracle, reconstruction,
//!   condition verification and falsification.
//! - [`cli`]: the command-line driver.

pub mod charring;
pub mod cli;
pub mod error;
pub mod rigidity;
pub mod rootsystem;
pub mod weylchar;

pub use charring::{EExpansion, WInvariant};
pub use error::{Error, Result};
pub use rootsystem::{LieType, Rational, RootSystem, RootVector, Series, Weight};
pub use weylchar::CharacterTable;
