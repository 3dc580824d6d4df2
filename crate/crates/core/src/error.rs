use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Coarse grouping of [`Error`] used by front ends to pick exit codes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ErrorKind {
    Parse,
    Domain,
    Overflow,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed {what} literal `{text}`")]
    Malformed { what: &'static str, text: String },
    #[error("0/0 is not a slope")]
    ZeroSlope,
    #[error("{a}/{b} is not reduced (common factor {gcd})")]
    NotReduced { a: i128, b: i128, gcd: u128 },
    #[error("slopes {0} and {1} are the same class")]
    EqualSlopes(String, String),
    #[error("({p}, {q}) is not a coprime pair")]
    NotCoprime { p: i128, q: i128 },
    #[error("{value} is not a unit modulo {modulus}")]
    NotUnit { value: i128, modulus: u64 },
    #[error("matrix has determinant {0}, expected +1 or -1")]
    NotUnimodular(i128),
    #[error("{what} must be positive, got {value}")]
    NonPositive { what: &'static str, value: i128 },
    #[error("invalid braid token W{index}^{exponent} on {strands} strands")]
    InvalidToken {
        index: usize,
        exponent: i64,
        strands: usize,
    },
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::Malformed { .. } | Error::ZeroSlope | Error::NotReduced { .. } => {
                ErrorKind::Parse
            }
            Error::Overflow(_) => ErrorKind::Overflow,
            _ => ErrorKind::Domain,
        }
    }
}
