use thiserror::Error;

/// Errors raised by the field, code and bound computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("{0} is not a prime power")]
    NotPrimePower(u64),

    #[error("field of order {0} is too large for this library")]
    FieldTooLarge(u128),

    #[error("modulus {0} is not irreducible over the base field")]
    Reducible(String),

    #[error("modulus must be monic of degree at least one")]
    BadModulus,

    #[error("gcd(m, q) = gcd({m}, {q}) != 1")]
    NotCoprime { m: u64, q: u64 },

    #[error("fields do not match: {0}")]
    FieldMismatch(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("{0} does not divide x^{1} - 1")]
    NotDivisor(String, u64),

    #[error("minimum distance of the zero code is undefined")]
    ZeroCode,

    #[error("instance too large: {0}")]
    Budget(String),

    #[error("vector is not a codeword of the constituent code at factor {0}")]
    NotInCode(usize),

    #[error("existence not established for [{n}, {k}, {d}] code over F_{q}")]
    Existence {
        n: usize,
        k: usize,
        d: usize,
        q: u64,
    },

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("internal consistency check failed: {0}")]
    Internal(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
