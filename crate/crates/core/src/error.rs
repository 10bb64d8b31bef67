use thiserror::Error;

use crate::rootsystem::{Series, Weight};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank {rank} is out of range for series {series}")]
    RankOutOfRange { series: Series, rank: usize },

    #[error("invalid Cartan data: {0}")]
    InvalidCartan(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("weight {0} is not dominant")]
    NotDominant(Weight),

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("zero denominator in Freudenthal recursion for lambda={lambda}, mu={mu}")]
    ZeroDenominator { lambda: Weight, mu: Weight },

    #[error("family has no row for {0}")]
    MissingFamilyRow(Weight),

    #[error("lambda-mu = {lambda}-{mu} touches every simple root")]
    SupportFull { lambda: Weight, mu: Weight },

    #[error("lambda-mu = {lambda}-{mu} does not have full support")]
    SupportNotFull { lambda: Weight, mu: Weight },

    #[error("no case of the induction applies to lambda={lambda}, mu={mu}")]
    InternalCaseGap { lambda: Weight, mu: Weight },

    #[error("duality window for lambda={lambda}, mu={mu} has full support (fundamental index {index})")]
    WindowTooWide { lambda: Weight, mu: Weight, index: usize },

    #[error("boundary oracle refused clause {clause} at lambda={lambda}, mu={mu}")]
    OracleRefused {
        clause: u8,
        lambda: Weight,
        mu: Weight,
    },

    #[error("family does not cover {0}")]
    InsufficientCoverage(Weight),

    #[error("no violation found for perturbation at lambda={lambda}, mu={mu}")]
    NoViolationFound { lambda: Weight, mu: Weight },

    #[error("precondition failed: {0}")]
    Precondition(String),
}

/// Checked integer helpers. Multiplicities are small at desk scale, so any
/// overflow is reported instead of wrapping.
pub(crate) fn add(a: i64, b: i64, ctx: &'static str) -> Result<i64> {
    a.checked_add(b).ok_or(Error::Overflow(ctx))
}

pub(crate) fn mul(a: i64, b: i64, ctx: &'static str) -> Result<i64> {
    a.checked_mul(b).ok_or(Error::Overflow(ctx))
}

pub(crate) fn sub(a: i64, b: i64, ctx: &'static str) -> Result<i64> {
    a.checked_sub(b).ok_or(Error::Overflow(ctx))
}
