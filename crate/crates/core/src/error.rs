use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong at desk scale: malformed words, out-of-range
/// positions, and the guards that keep enumerations finite.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate value {0}")]
    DuplicateValue(u32),
    #[error("value {value} out of range for a permutation of length {n}")]
    ValueOutOfRange { value: u32, n: usize },
    #[error("position {position} out of range 1..={n}")]
    PositionOutOfRange { position: usize, n: usize },
    #[error("positions must satisfy i < j, got i={i}, j={j}")]
    InvalidPositionPair { i: usize, j: usize },
    #[error("insertion index {index} out of range 0..={n}")]
    InsertIndexOutOfRange { index: usize, n: usize },
    #[error("the empty permutation is not allowed here")]
    EmptyPermutation,
    #[error("invalid token \"{0}\"")]
    InvalidToken(String),
    #[error("all members must share one length")]
    MixedLengths,
    #[error("n must be at least 1")]
    ZeroLengthQuery,
    #[error("n = {n} exceeds the brute-force guard {guard}")]
    OracleGuardExceeded { n: usize, guard: usize },
    #[error("enumeration exceeded the output cap of {cap} members")]
    OutputCapExceeded { cap: u64 },
    #[error("invalid range {lo}..={hi}")]
    InvalidRange { lo: usize, hi: usize },
    #[error("n_max = {requested} is below the minimum {minimum} for this check")]
    RangeTooSmall { minimum: usize, requested: usize },
    #[error("n_max = {requested} is above the maximum {maximum} for this check")]
    RangeTooLarge { maximum: usize, requested: usize },
    #[error("Catalan index {0} exceeds the exact 64-bit guard 30")]
    CatalanIndexTooLarge(u32),
}
