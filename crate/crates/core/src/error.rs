use alloc::string::String;
use core::fmt;

use crate::ring::Field;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Coordinate vectors of different lengths were combined.
    LengthMismatch { expected: usize, found: usize },
    /// `(n, k)` outside the range where `V_k(F^n)` is a connected Stiefel manifold.
    ParameterRange { field: Field, n: u32, k: u32, reason: &'static str },
    /// The truncation bound must be at least one.
    MaxDegree(u32),
    /// A product or square would land above the truncation bound.
    DegreeOverflow { degree: u32, max_degree: u32 },
    /// Requested degree outside `0..=max_degree`.
    DegreeOutOfRange { degree: u32, max_degree: u32 },
    /// A generator label that the ring does not have.
    UnknownGenerator(u32),
    /// The constructed ring disagrees with the known connectivity of the manifold.
    Connectivity { degree: u32, dimension: usize, expected: usize },
    /// `Sq^i` with `i >= 2` on a complex or quaternionic generator.
    UnsupportedSquare { field: Field, i: u32, degree: u32 },
    /// The enumeration frontier grew past the configured guard.
    BranchGuard { degree: u32, branches: u128, guard: usize },
    /// A witness record failed verification.
    InconsistentWitness { id: String, reason: String },
    /// An assignment violates the `Sq^1` Wu relation.
    WuViolation { degree: u32 },
    /// Parameters that a corollary check does not apply to.
    CorollaryParameters { which: u8, reason: &'static str },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::LengthMismatch { expected, found } => {
                write!(f, "vector length mismatch: expected {expected}, found {found}")
            }
            Error::ParameterRange { field, n, k, reason } => {
                write!(f, "invalid Stiefel manifold V_{k}({}^{n}): {reason}", field.symbol())
            }
            Error::MaxDegree(d) => write!(f, "max degree must be at least 1, got {d}"),
            Error::DegreeOverflow { degree, max_degree } => {
                write!(f, "degree {degree} exceeds truncation bound {max_degree}")
            }
            Error::DegreeOutOfRange { degree, max_degree } => {
                write!(f, "degree {degree} outside 0..={max_degree}")
            }
            Error::UnknownGenerator(label) => write!(f, "no generator with label {label}"),
            Error::Connectivity { degree, dimension, expected } => write!(
                f,
                "connectivity check failed: dim H^{degree} = {dimension}, expected {expected}"
            ),
            Error::UnsupportedSquare { field, i, degree } => write!(
                f,
                "Sq^{i} on a degree-{degree} generator over {} is not supported",
                field.symbol()
            ),
            Error::BranchGuard { degree, branches, guard } => write!(
                f,
                "branch guard tripped at degree {degree}: {branches} branches exceed limit {guard}"
            ),
            Error::InconsistentWitness { id, reason } => {
                write!(f, "witness {id} is inconsistent: {reason}")
            }
            Error::WuViolation { degree } => {
                write!(f, "assignment violates the Sq^1 Wu relation at degree {degree}")
            }
            Error::CorollaryParameters { which, reason } => {
                write!(f, "corollary {which} does not apply: {reason}")
            }
        }
    }
}

impl core::error::Error for Error {}
