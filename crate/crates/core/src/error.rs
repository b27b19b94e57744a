use thiserror::Error;

/// Errors raised by field arithmetic, code construction and the analyses.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NonPrime(u32),
    #[error("{0} is not a prime power")]
    NotPrimePower(u32),
    #[error("field size {0} exceeds the table limit 2^16")]
    FieldTooLarge(u64),
    #[error(
        "modulus must be a monic polynomial of degree {expected} with coefficients in [0, {p})"
    )]
    BadModulus { expected: u32, p: u32 },
    #[error("modulus is reducible over GF({0})")]
    ReducibleModulus(u32),
    #[error("element {value} is outside GF({q})")]
    ElementOutOfRange { value: u32, q: u32 },
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("inverse of zero")]
    ZeroInverse,
    #[error("index {index} out of range (size {len})")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("generator column {0} is identically zero")]
    ZeroColumn(usize),
    #[error("code has dimension zero")]
    ZeroDimension,
    #[error("{what} = {value} exceeds the enumeration limit {limit}")]
    LimitExceeded {
        what: &'static str,
        value: u64,
        limit: u64,
    },
    #[error("enumeration exceeded its wall-time budget")]
    Timeout,
    #[error("{name} = {value} outside [{lo}, {hi}]")]
    OutOfRange {
        name: &'static str,
        value: i64,
        lo: i64,
        hi: i64,
    },
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("code has no redundancy (k = n)")]
    NoRedundancy,
    #[error("coordinate {0} is not covered by any dual codeword")]
    UncoveredCoordinate(usize),
    #[error("coordinate {coordinate} needs locality {needed} > {r}")]
    LocalityExceeded {
        coordinate: usize,
        needed: usize,
        r: usize,
    },
    #[error("r = {r} does not divide k = {k}")]
    NotDivisible { r: usize, k: usize },
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_range(name: &'static str, value: usize, lo: usize, hi: usize) -> Result<()> {
    if value < lo || value > hi {
        return Err(Error::OutOfRange {
            name,
            value: value as i64,
            lo: lo as i64,
            hi: hi as i64,
        });
    }
    Ok(())
}
