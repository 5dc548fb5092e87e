use alloc::string::String;
use core::fmt;

use crate::liealg::ValidationReport;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Two objects that must share an ambient dimension do not.
    DimensionMismatch {
        expected: usize,
        found: usize,
    },
    /// A rational literal could not be parsed.
    ParseRational(String),
    ZeroDenominator,
    /// A nonzero vector was required.
    ZeroVector,
    InvalidAlgebra(ValidationReport),
    InvalidRepresentation(ValidationReport),
    /// A subspace that must be closed under the bracket is not.
    NotSubalgebra(&'static str),
    InvalidFiltration(String),
    DirectionMismatch,
    EmptyCandidates,
    /// A subalgebra does not preserve the subspace it must act on.
    NotPreserved,
    InvalidParameter(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::ParseRational(s) => write!(f, "invalid rational literal {s:?}"),
            Error::ZeroDenominator => f.write_str("zero denominator"),
            Error::ZeroVector => f.write_str("a nonzero vector is required"),
            Error::InvalidAlgebra(r) => {
                write!(f, "structure constants fail validation ({} violations)", r.violations.len())
            }
            Error::InvalidRepresentation(r) => {
                write!(f, "matrices are not a representation ({} violations)", r.violations.len())
            }
            Error::NotSubalgebra(what) => write!(f, "{what} is not a subalgebra"),
            Error::InvalidFiltration(why) => write!(f, "invalid filtration: {why}"),
            Error::DirectionMismatch => f.write_str("filtration has the wrong direction"),
            Error::EmptyCandidates => f.write_str("empty candidate set"),
            Error::NotPreserved => f.write_str("subalgebra does not preserve the subspace"),
            Error::InvalidParameter(why) => write!(f, "invalid parameter: {why}"),
        }
    }
}

impl core::error::Error for Error {}

pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}
