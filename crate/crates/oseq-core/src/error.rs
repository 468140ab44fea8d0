use num_bigint::BigUint;
use std::fmt;

/// Errors surfaced by the library. Each variant corresponds to a distinct
/// failure mode of the public operations; the CLI maps them to exit codes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A sequence violates a structural requirement (empty, h_0 != 1, ...).
    Malformed(String),
    /// A generator set is invalid (mixed degrees, duplicates, bad variable).
    InvalidGenerators(String),
    /// An enumeration would exceed the configured budget.
    BudgetExceeded { estimate: u128, budget: u64 },
    /// The sequence is not a type-1 pure O-sequence (h_e != 1).
    NotType1(String),
    /// The number of added powers violates the hypothesis m >= 1,
    /// m <= binom(r-1+e, e) - h_e.
    PreconditionM { m: u64, bound: BigUint },
    /// Socle degree below the family's admissible minimum.
    ETooSmall { e: usize, min: usize },
    /// Type outside the family's admissible range.
    TOutOfRange { t: usize, min: usize, max: usize },
    /// The field characteristic must exceed the socle degree in use.
    PrimeTooSmall { prime: u64, degree: usize },
    /// The configured modulus is not prime.
    NotPrime(u64),
    /// Interval reports require a single common socle degree.
    MixedSocleDegrees,
    /// Exact canonicalization enumerates r! permutations; r is capped.
    RTooLarge { r: usize, max: usize },
    /// Text input could not be parsed.
    Parse(String),
    /// Internal consistency failure (a bug, not a usage error).
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Malformed(msg) => write!(f, "MALFORMED: {msg}"),
            Error::InvalidGenerators(msg) => write!(f, "INVALID_GENERATORS: {msg}"),
            Error::BudgetExceeded { estimate, budget } => write!(
                f,
                "BUDGET_EXCEEDED: estimated {estimate} items exceeds budget {budget}"
            ),
            Error::NotType1(msg) => write!(f, "NOT_TYPE1: {msg}"),
            Error::PreconditionM { m, bound } => write!(
                f,
                "PRECONDITION_M: m = {m} outside the admissible range 1..={bound}"
            ),
            Error::ETooSmall { e, min } => {
                write!(f, "E_TOO_SMALL: socle degree {e} below the minimum {min}")
            }
            Error::TOutOfRange { t, min, max } => {
                write!(f, "T_OUT_OF_RANGE: type {t} outside {min}..={max}")
            }
            Error::PrimeTooSmall { prime, degree } => write!(
                f,
                "PRIME_TOO_SMALL: prime {prime} must exceed the degree {degree}"
            ),
            Error::NotPrime(p) => write!(f, "NOT_PRIME: {p} is not prime"),
            Error::MixedSocleDegrees => {
                write!(f, "MIXED_SOCLE_DEGREES: sequences have different socle degrees")
            }
            Error::RTooLarge { r, max } => write!(
                f,
                "R_TOO_LARGE: exact canonicalization supports at most {max} variables, got {r}"
            ),
            Error::Parse(msg) => write!(f, "PARSE: {msg}"),
            Error::Internal(msg) => write!(f, "INTERNAL: {msg}"),
        }
    }
}

impl std::error::Error for Error {}
