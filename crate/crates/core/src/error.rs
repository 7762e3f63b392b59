use thiserror::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{0} is not a prime >= 3")]
    NotPrime(u64),
    #[error("modulus must be at least 2, got {0}")]
    BadModulus(u64),
    #[error("order {order} does not divide p - 1 = {group_order}")]
    NonDivisorOrder { order: u64, group_order: u64 },
    #[error("coset representative must be a nonzero residue")]
    ZeroRepresentative,
    #[error("{x} is outside [1, {limit}]")]
    OutOfRange { x: u64, limit: u64 },
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("dimension must be at least 1")]
    ZeroDimension,
    #[error("enumeration cap of {cap} candidate vectors exceeded")]
    CapExceeded { cap: u64 },
    #[error("work estimate {needed} exceeds budget {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },
    #[error("exact arithmetic would overflow 128-bit integers")]
    Overflow,
    #[error("empty point set")]
    EmptyInput,
    #[error("coordinate {numerator}/{denominator} is not in [0, 1)")]
    CoordinateOutOfRange { numerator: u64, denominator: u64 },
    #[error("spectral count is {deviation:e} away from an integer")]
    SpectralMismatch { deviation: f64 },
    #[error("box side lengths must be >= 1")]
    EmptyBox,
    #[error("delta must lie in (0,1)")]
    OutOfDomain,
    #[error("delta <= 1/4 lies below every alpha/beta interval")]
    NoBranch,
    #[error("expected {expected} sizes, got {found}")]
    BadArity { expected: usize, found: usize },
    #[error("garaev bound needs n >= 3 and c > 0")]
    BadGaraevParameters,
    #[error("threshold table row {row} does not match the reference value")]
    TableMismatch { row: usize },
    #[error("random strategy needs at least one sample")]
    EmptySample,
    #[error("cannot parse rational from {0:?}")]
    BadRational(alloc::string::String),
}
