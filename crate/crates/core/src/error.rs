use alloc::string::String;
use core::fmt;

/// Errors raised by parsing, validation and the bracket oracle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed PD token or catalog name.
    Parse(String),
    /// A structural invariant of the diagram fails (edge counts, orientation).
    InvalidDiagram(String),
    /// Operation precondition violated (component counts, gcd, adequacy).
    Precondition(String),
    /// Degree of the zero polynomial.
    UndefinedDegree,
    /// The state enumeration would exceed the configured crossing cap.
    OracleInfeasible { crossings: usize, cap: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
            Error::InvalidDiagram(msg) => write!(f, "invalid diagram: {msg}"),
            Error::Precondition(msg) => write!(f, "precondition violated: {msg}"),
            Error::UndefinedDegree => write!(f, "undefined degree: zero polynomial"),
            Error::OracleInfeasible { crossings, cap } => {
                write!(f, "oracle infeasible: {crossings} crossings exceeds cap {cap}")
            }
        }
    }
}

pub type Result<T> = core::result::Result<T, Error>;
