//! Crate-wide error type.

use core::fmt;

/// Errors reported by the root-datum, Weyl-group and decision operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// An algebra size parameter was zero.
    ZeroBlockSize,
    /// A weight or group element does not match the coordinate dimension.
    DimensionMismatch { expected: usize, found: usize },
    /// Index out of range for the simple even roots.
    BadRootIndex { index: usize, count: usize },
    /// The weight passed as a root is not an even root of the datum.
    NotAnEvenRoot,
    /// Group enumeration refused: the subgroup order exceeds the bound.
    EnumerationBound { required: u128, bound: u64 },
    /// The weight is not anti-dominant for the requested support.
    NotAntidominant,
    /// The operation needs a non-singular character (full support).
    SingularSupport,
    /// The operation is defined for reductive algebras only.
    ExpectedReductive,
    /// The operation is defined for super algebras only.
    ExpectedSuper,
    /// The operation is defined for pe(n) only.
    ExpectedSuperPe,
    /// The rank-one branch handles non-integral coordinates only.
    IntegralCoordinate,
    /// The weight family is defined for n >= 2.
    FamilyTooSmall { n: u32 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ZeroBlockSize => write!(f, "algebra block sizes must be positive"),
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected} coordinates, found {found}")
            }
            Error::BadRootIndex { index, count } => {
                write!(f, "simple root index {index} out of range (have {count})")
            }
            Error::NotAnEvenRoot => write!(f, "not an even root of the datum"),
            Error::EnumerationBound { required, bound } => {
                write!(f, "group order {required} exceeds the enumeration bound {bound}")
            }
            Error::NotAntidominant => {
                write!(f, "weight is not anti-dominant for the requested support")
            }
            Error::SingularSupport => {
                write!(f, "operation requires a non-singular character (full support)")
            }
            Error::ExpectedReductive => write!(f, "operation is defined for reductive algebras"),
            Error::ExpectedSuper => write!(f, "operation is defined for super algebras"),
            Error::ExpectedSuperPe => write!(f, "operation is defined for pe(n)"),
            Error::IntegralCoordinate => {
                write!(f, "integral coordinate rejected: this branch covers non-integral weights")
            }
            Error::FamilyTooSmall { n } => {
                write!(f, "the negative family is defined for n >= 2 (got {n})")
            }
        }
    }
}

impl core::error::Error for Error {}

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;
