use thiserror::Error;

use crate::expr::ParseError;

/// Failures of the exact arithmetic layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("dimension mismatch: {left} variables vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("division by zero")]
    DivisionByZero,
    #[error("variable index {index} out of range for {nvars} variables")]
    VariableOutOfRange { index: usize, nvars: usize },
    #[error("expected a polynomial with nonnegative exponents")]
    NotAPolynomial,
}

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("series window for variable {variable} is inverted ({lower} > {upper})")]
    InvertedWindow {
        variable: usize,
        lower: i32,
        upper: i32,
    },
    #[error("invalid variable order: {0}")]
    InvalidOrder(String),
    #[error("matrix is not skew-symmetric at ({row}, {col})")]
    NotSkew { row: usize, col: usize },
    #[error("bracket pair {0} is given more than once")]
    DuplicatePair(String),
    #[error("central variable {0} has a nonzero bracket")]
    CentralNotCentral(String),
    #[error("malformed structure file: {0}")]
    Malformed(String),
    #[error("argument {0} is zero")]
    ZeroArgument(usize),
    #[error("basis index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("Jacobi identity fails on {0}")]
    JacobiFailed(String),
    #[error("closure report is not closed")]
    NotClosed,
    #[error("no witness hypothesis holds: {0}")]
    NotApplicable(String),
    #[error("unknown gallery entry {0:?}")]
    UnknownGallery(String),
    #[error("gallery identity failed: {0}")]
    GalleryCheck(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
