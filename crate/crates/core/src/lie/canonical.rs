use num_bigint::BigInt;

use crate::algebra::{jacobian_rank, ExponentVector, RationalFunction, Scalar};
use crate::error::{Error, Result};
use crate::poisson::{bracket_rational, PoissonStructure};

/// The plane structure `{x, y} = x^a y^b`.
pub fn plane_structure(a: i32, b: i32) -> Result<PoissonStructure> {
    let pi = RationalFunction::monomial(
        ExponentVector::new(vec![a, b]),
        Scalar::from_integer(1.into()),
    );
    PoissonStructure::from_upper(vec!["x".into(), "y".into()], [((0, 1), pi)])
}

/// Functions `u, v` with `{u, v}` a nonzero constant.
#[derive(Clone, Debug, PartialEq)]
pub struct CanonicalPair {
    pub u: RationalFunction,
    pub v: RationalFunction,
    pub constant: Scalar,
}

/// A canonical pair for `{x, y} = x^a y^b`, or `None` for `(1, 1)`, where
/// the bracket is log-canonical and no such pair exists.
///
/// Every returned pair is checked: its bracket is recomputed and its
/// Jacobian rank must be 2.
pub fn canonical_pair(a: u32, b: u32) -> Result<Option<CanonicalPair>> {
    let (ai, bi) = (to_i32(a)?, to_i32(b)?);
    let mono = |e: [i32; 2], c: i64| {
        RationalFunction::monomial(
            ExponentVector::new(e.to_vec()),
            Scalar::from_integer(c.into()),
        )
    };
    let big = |k: i32| Scalar::from_integer(BigInt::from(k));
    let pair = match (a, b) {
        (1, 1) => return Ok(None),
        (1, 0) => CanonicalPair {
            u: mono([-1, 0], 1),
            v: mono([1, 1], -1),
            constant: big(1),
        },
        (1, _) => CanonicalPair {
            u: mono([-1, 0], 1),
            v: mono([1, 1 - bi], 1),
            constant: big(bi - 1),
        },
        (_, 1) => CanonicalPair {
            u: mono([1 - ai, 1], 1),
            v: mono([0, -1], 1),
            constant: big(ai - 1),
        },
        _ => CanonicalPair {
            u: mono([1 - ai, 0], 1),
            v: mono([0, 1 - bi], 1),
            constant: big(ai - 1) * big(bi - 1),
        },
    };
    let s = plane_structure(ai, bi)?;
    let got = bracket_rational(&s, &pair.u, &pair.v)?;
    if got.as_scalar().as_ref() != Some(&pair.constant) {
        return Err(Error::Internal(format!(
            "canonical pair for ({a}, {b}) fails its bracket"
        )));
    }
    if jacobian_rank(&[pair.u.clone(), pair.v.clone()])? != 2 {
        return Err(Error::Internal(format!(
            "canonical pair for ({a}, {b}) is dependent"
        )));
    }
    Ok(Some(pair))
}

fn to_i32(k: u32) -> Result<i32> {
    i32::try_from(k).map_err(|_| crate::error::AlgebraError::ExponentOverflow.into())
}
