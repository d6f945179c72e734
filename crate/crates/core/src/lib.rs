//! Exact symbolic computation of Poisson brackets on fields of rational
//! functions, with special support for log-canonical structures
//! `{x_i, x_j} = w_ij x_i x_j`.
//!
//! The crate is organized bottom-up:
//!
//! - [`algebra`]: Laurent polynomials, canonical rational functions, GCDs.
//! - [`series`]: coefficient extraction from iterated Laurent expansions.
//! - [`poisson`]: structures, brackets, Jacobi checks, log-canonicity.
//! - [`lie`]: finite-dimensional bracket closures and adjoint analysis.
//! - [`expr`]: expression parsing and printing, structure files, gallery.

pub mod algebra;
pub mod error;
pub mod expr;
pub mod lie;
pub mod poisson;
pub mod series;

pub use algebra::{ExponentVector, LaurentPolynomial, RationalFunction, Scalar};
pub use error::{AlgebraError, Error, Result};
pub use poisson::{PoissonStructure, SkewMatrix, StructureKind};
