use alloc::string::String;
use core::fmt;

/// Errors produced by the core library.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A size cap (enumeration, table or sweep bound) was exceeded.
    SizeLimit { what: &'static str, requested: usize, cap: usize },
    /// `p = 1` was supplied where a characteristic is expected.
    InvalidCharacteristic(u32),
    /// A residue outside `0..p` was supplied for `p > 0`.
    InvalidResidue { residue: i64, p: u32 },
    /// The inputs do not satisfy the operation's precondition.
    Domain(String),
    /// An exactness check failed. This indicates a bug, never bad input.
    Arithmetic(String),
    /// A textual partition literal could not be parsed.
    Parse(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::SizeLimit { what, requested, cap } => {
                write!(f, "{what}: requested {requested} exceeds cap {cap}")
            }
            Error::InvalidCharacteristic(p) => {
                write!(f, "invalid characteristic {p}: expected 0 or an integer >= 2")
            }
            Error::InvalidResidue { residue, p } => {
                write!(f, "residue {residue} is not in 0..{p}")
            }
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::Arithmetic(msg) => write!(f, "arithmetic invariant violated: {msg}"),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}

pub(crate) fn arithmetic(msg: impl Into<String>) -> Error {
    Error::Arithmetic(msg.into())
}

pub fn check_cap(what: &'static str, requested: usize, cap: usize) -> Result<()> {
    if requested > cap {
        Err(Error::SizeLimit { what, requested, cap })
    } else {
        Ok(())
    }
}
