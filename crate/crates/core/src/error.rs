use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Operation needs at least one symbol.
    EmptyWord,
    /// A character other than `0` or `1`.
    InvalidSymbol(char),
    /// A parameter violates an operation's precondition.
    InvalidArgument(&'static str),
    /// Parameter is valid mathematically but exceeds a configured cap.
    Capacity { what: &'static str, requested: u64, max: u64 },
    LengthMismatch { expected: u64, actual: u64 },
    /// Root bracketing did not reach the requested tolerance.
    NonConvergence { iterations: u32 },
    /// The construction stopped before emitting every window.
    Incomplete { emitted: u64, expected: u64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptyWord => f.write_str("empty word has no prefixes"),
            Error::InvalidSymbol(c) => write!(f, "invalid symbol {c:?}, expected '0' or '1'"),
            Error::InvalidArgument(msg) => f.write_str(msg),
            Error::Capacity { what, requested, max } => {
                write!(f, "{what} {requested} exceeds capacity {max}")
            }
            Error::LengthMismatch { expected, actual } => {
                write!(f, "expected length {expected}, got {actual}")
            }
            Error::NonConvergence { iterations } => {
                write!(f, "bisection did not converge within {iterations} iterations")
            }
            Error::Incomplete { emitted, expected } => {
                write!(f, "construction stopped after {emitted} of {expected} symbols")
            }
        }
    }
}

impl core::error::Error for Error {}
