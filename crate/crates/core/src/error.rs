//! Error type shared across the crate.

use num_bigint::BigInt;
use num_rational::Ratio;

/// Everything that can go wrong in this crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// A caller-supplied parameter is outside its documented range.
    #[error("invalid parameter: {0}")]
    Parameter(String),

    /// Series inversion needs a unit constant term to stay integral.
    #[error("constant term {0} is not a unit; series is not invertible over the integers")]
    NonUnitConstant(BigInt),

    /// The enumeration oracles are capped so they stay brute-force cheap.
    #[error("enumeration oracle supports n <= {limit}, got n = {n}")]
    OracleScale { n: u64, limit: u64 },

    /// Slope extraction needs at least one nonzero entry with p >= 1.
    #[error("table has no nonzero entry with p >= 1; slopes are undefined")]
    UndefinedSlope,

    /// The lower-bound window is only meaningful for slopes above 1.
    #[error("slope parameter must exceed 1, got {0}")]
    SlopeTooSmall(Ratio<i64>),

    /// A coefficient beyond the truncation degree was requested.
    #[error("degree {degree} exceeds series truncation degree {trunc}")]
    DegreeOutOfRange { degree: usize, trunc: usize },

    /// The ratio-estimate tail window could not be formed.
    #[error("invalid tail window: {0}")]
    TailWindow(String),

    /// An internal consistency assertion failed; indicates a bug.
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
