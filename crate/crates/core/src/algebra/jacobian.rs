use super::rational::RationalFunction;
use crate::error::AlgebraError;

/// Rank over `Q(x)` of the Jacobian matrix `(d f_i / d x_j)`.
///
/// In characteristic zero this is the transcendence degree of the field
/// generated by `fs`, so a full rank certifies algebraic independence.
pub fn jacobian_rank(fs: &[RationalFunction]) -> Result<usize, AlgebraError> {
    let Some(first) = fs.first() else {
        return Ok(0);
    };
    let n = first.nvars();
    let mut rows = Vec::with_capacity(fs.len());
    for f in fs {
        if f.nvars() != n {
            return Err(AlgebraError::DimensionMismatch {
                left: n,
                right: f.nvars(),
            });
        }
        rows.push(
            (0..n)
                .map(|k| f.partial(k))
                .collect::<Result<Vec<_>, _>>()?,
        );
    }
    rank_over_function_field(rows)
}

/// Gaussian elimination with entries in the rational function field.
pub fn rank_over_function_field(mut m: Vec<Vec<RationalFunction>>) -> Result<usize, AlgebraError> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let pivot_inv = m[r][c].inv()?;
        for i in r + 1..rows {
            if m[i][c].is_zero() {
                continue;
            }
            let factor = m[i][c].mul(&pivot_inv)?;
            let (top, bottom) = m.split_at_mut(i);
            for (dst, src) in bottom[0][c..cols].iter_mut().zip(&top[r][c..cols]) {
                *dst = dst.sub(&factor.mul(src)?)?;
            }
        }
        r += 1;
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::int;

    fn x(k: usize) -> RationalFunction {
        RationalFunction::variable(2, k)
    }

    #[test]
    fn identity_coordinates() {
        assert_eq!(jacobian_rank(&[x(0), x(1)]).unwrap(), 2);
    }

    #[test]
    fn dependent_pair() {
        let sq = x(0).mul(&x(0)).unwrap();
        assert_eq!(jacobian_rank(&[x(0), sq]).unwrap(), 1);
    }

    #[test]
    fn canonical_coordinates_of_axis_bracket() {
        // (1/x, -xy): Jacobian determinant is x^-1.
        let u = x(0).inv().unwrap();
        let v = x(0).mul(&x(1)).unwrap().scale(&int(-1));
        assert_eq!(jacobian_rank(&[u, v]).unwrap(), 2);
    }

    #[test]
    fn empty_input() {
        assert_eq!(jacobian_rank(&[]).unwrap(), 0);
    }

    #[test]
    fn constants_have_rank_zero() {
        let c = RationalFunction::constant(2, int(7));
        assert_eq!(jacobian_rank(&[c]).unwrap(), 0);
    }
}
