//! Exact arithmetic: Laurent polynomials, rational functions, GCDs, and
//! small linear algebra over the rationals.

mod exponent;
mod gcd;
mod jacobian;
mod laurent;
pub mod linalg;
mod rational;
mod scalar;

pub use exponent::ExponentVector;
pub use gcd::{gcd, lcm};
pub use jacobian::{jacobian_rank, rank_over_function_field};
pub use laurent::LaurentPolynomial;
pub use rational::RationalFunction;
pub use scalar::{format_scalar, int, parse_scalar, ratio, Scalar};
