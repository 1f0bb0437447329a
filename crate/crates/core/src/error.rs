use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("digit {0} is not a Romik digit (expected 1..=5)")]
    InvalidDigit(u8),
    #[error("digit {digit} is not a valid Romik digit of ({a}, {b}, {c})")]
    DigitMismatch {
        digit: u8,
        a: String,
        b: String,
        c: String,
    },
    #[error("({a}, {b}, {c}) is not a primitive point on x^2 + xy + y^2 = 1 with a, b >= 0")]
    NotOnCurve { a: String, b: String, c: String },
    #[error("digit expansion did not terminate within {0} steps")]
    NonTermination(usize),
    #[error("target and approximant coincide")]
    SamePoint,
    #[error("index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("not enough cylinder boundaries below height {max_c} (found {found})")]
    InsufficientDepth { max_c: u64, found: usize },
    #[error("({0}, {1}) is not an Eisenstein pair")]
    NotEisensteinPair(u64, u64),
    #[error("word {0} contains digit 1 or 5")]
    NotReduced(String),
    #[error("values live in different quadratic fields (delta {0} vs {1})")]
    MixedField(String, String),
    #[error("unsupported doubly infinite shape: {0}")]
    UnsupportedShape(String),
    #[error("degenerate word {0}: Mobius action hits 0/0")]
    DegenerateWord(String),
    #[error("values are indistinguishable at 2^-{0} precision")]
    Indistinguishable(u32),
    #[error("period must be nonempty")]
    EmptyPeriod,
    #[error("{0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
