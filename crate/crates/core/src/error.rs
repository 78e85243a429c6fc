use core::fmt;

/// Failures raised by the numerical routines.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Argument outside the domain of a function.
    Domain { what: &'static str, value: f64 },
    /// A denominator vanished where the formula has no finite limit.
    Singular { what: &'static str, value: f64 },
    /// Polynomial degree differs from the level it is supposed to represent.
    DegreeMismatch { expected: usize, found: Option<usize> },
    /// Operands have incompatible dimensions.
    SizeMismatch { left: usize, right: usize },
    /// Quadrature rule too coarse: the momentum matrix is not Hermitian.
    QuadratureTooLow { order: usize, residual: f64 },
    /// Quadrature rule spans a different interval than the model's box.
    BoxMismatch { expected: (f64, f64), found: (f64, f64) },
    /// Two eigenfunctions belong to different models.
    ParamsMismatch,
    /// Iterative solver did not converge.
    NoConvergence { what: &'static str },
    /// Invalid model or run parameter.
    InvalidParameter { name: &'static str, value: f64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain { what, value } => write!(f, "{what}: argument {value} outside domain"),
            Error::Singular { what, value } => write!(f, "{what}: singular at {value}"),
            Error::DegreeMismatch { expected, found } => match found {
                Some(d) => write!(f, "expected polynomial of degree {expected}, found {d}"),
                None => write!(f, "expected polynomial of degree {expected}, found zero polynomial"),
            },
            Error::SizeMismatch { left, right } => {
                write!(f, "size mismatch: {left} vs {right}")
            }
            Error::QuadratureTooLow { order, residual } => write!(
                f,
                "quadrature order {order} too low: momentum Hermiticity residual {residual:e}"
            ),
            Error::BoxMismatch { expected, found } => write!(
                f,
                "quadrature interval ({}, {}) does not match box ({}, {})",
                found.0, found.1, expected.0, expected.1
            ),
            Error::ParamsMismatch => f.write_str("eigenfunctions belong to different models"),
            Error::NoConvergence { what } => write!(f, "{what}: no convergence"),
            Error::InvalidParameter { name, value } => write!(f, "invalid parameter {name} = {value}"),
        }
    }
}

impl core::error::Error for Error {}
