//! Exact rational scalars.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Ground-field element. Arbitrary-precision rationals, always reduced with a
/// positive denominator.
pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

pub fn ratio(num: i64, den: i64) -> Scalar {
    Scalar::new(BigInt::from(num), BigInt::from(den))
}

/// Exact string form: `3`, `-1/2`.
pub fn format_scalar(s: &Scalar) -> String {
    if s.denom().is_one() {
        s.numer().to_string()
    } else {
        format!("{}/{}", s.numer(), s.denom())
    }
}

/// Parses `3`, `-1/2`, ` 4 / 6 `.
pub fn parse_scalar(text: &str) -> Option<Scalar> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = den.parse().ok()?;
    if den.is_zero() {
        return None;
    }
    Some(Scalar::new(num, den))
}
