//! Linear algebra over the scalars inside the rational function field.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::algebra::linalg::{rank, solve, Matrix};
use crate::algebra::{lcm, ExponentVector, LaurentPolynomial, RationalFunction, Scalar};
use crate::error::AlgebraError;

/// Numerators of `fs` over their least common denominator.
fn cleared(fs: &[RationalFunction]) -> Result<Vec<LaurentPolynomial>, AlgebraError> {
    let Some(first) = fs.first() else {
        return Ok(Vec::new());
    };
    let n = first.nvars();
    let mut common = LaurentPolynomial::one(n);
    for f in fs {
        if f.nvars() != n {
            return Err(AlgebraError::DimensionMismatch {
                left: n,
                right: f.nvars(),
            });
        }
        if !f.denominator().is_one() && !f.is_zero() {
            common = lcm(&common, f.denominator())?;
        }
    }
    fs.iter()
        .map(|f| {
            if f.is_zero() {
                return Ok(LaurentPolynomial::zero(n));
            }
            let cofactor = common
                .div_exact(f.denominator())?
                .expect("denominator divides the lcm");
            f.full_numerator().mul(&cofactor)
        })
        .collect()
}

/// Coefficient matrix with one column per polynomial.
fn coefficient_columns(polys: &[LaurentPolynomial]) -> Matrix {
    let mut rows: BTreeMap<&ExponentVector, usize> = BTreeMap::new();
    for p in polys {
        for e in p.support() {
            let next = rows.len();
            rows.entry(e).or_insert(next);
        }
    }
    let mut m = vec![vec![Scalar::zero(); polys.len()]; rows.len()];
    for (col, p) in polys.iter().enumerate() {
        for (e, c) in p.terms() {
            m[rows[e]][col] = c.clone();
        }
    }
    m
}

/// Dimension of the scalar span of `fs`.
pub fn span_rank(fs: &[RationalFunction]) -> Result<usize, AlgebraError> {
    let polys = cleared(fs)?;
    Ok(rank(&coefficient_columns(&polys)))
}

/// Coordinates of `h` in terms of `basis`, if `h` lies in its span.
///
/// `basis` should be linearly independent; otherwise some solution is
/// returned.
pub fn express(
    basis: &[RationalFunction],
    h: &RationalFunction,
) -> Result<Option<Vec<Scalar>>, AlgebraError> {
    if h.is_zero() {
        return Ok(Some(vec![Scalar::zero(); basis.len()]));
    }
    let mut all = basis.to_vec();
    all.push(h.clone());
    let m = coefficient_columns(&cleared(&all)?);
    let k = basis.len();
    let a: Matrix = m.iter().map(|row| row[..k].to_vec()).collect();
    let b: Vec<Scalar> = m.iter().map(|row| row[k].clone()).collect();
    Ok(solve(&a, &b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;

    fn v(k: usize) -> RationalFunction {
        RationalFunction::variable(2, k)
    }

    #[test]
    fn distinct_monomials() {
        let fs = [RationalFunction::one(2), v(0), v(1)];
        assert_eq!(span_rank(&fs).unwrap(), 3);
    }

    #[test]
    fn partition_of_unity_is_dependent() {
        let s = v(0).add(&v(1)).unwrap();
        let fs = [
            v(0).div(&s).unwrap(),
            v(1).div(&s).unwrap(),
            RationalFunction::one(2),
        ];
        assert_eq!(span_rank(&fs).unwrap(), 2);
        let c = express(&fs[..2], &fs[2]).unwrap().unwrap();
        assert_eq!(c, vec![int(1), int(1)]);
    }

    #[test]
    fn scalar_multiple() {
        let f = v(0)
            .div(&v(1).add(&RationalFunction::one(2)).unwrap())
            .unwrap();
        assert_eq!(span_rank(&[f.clone(), f.scale(&int(2))]).unwrap(), 1);
    }

    #[test]
    fn outside_span() {
        let basis = [RationalFunction::one(2), v(0)];
        assert_eq!(express(&basis, &v(1)).unwrap(), None);
        assert_eq!(
            express(&basis, &v(0).scale(&int(3))).unwrap(),
            Some(vec![int(0), int(3)])
        );
    }
}
