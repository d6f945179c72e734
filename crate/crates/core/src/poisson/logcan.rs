use num_traits::Zero;

use super::bracket::bracket_rational;
use super::skew::SkewMatrix;
use super::structure::PoissonStructure;
use crate::algebra::{RationalFunction, Scalar};
use crate::error::{AlgebraError, Error, Result};

/// Result of testing a coordinate candidate for log-canonicity.
#[derive(Clone, Debug, PartialEq)]
pub enum LogCanonicalCheck {
    /// `{g_i, g_j} = w'_ij g_i g_j` for all pairs.
    LogCanonical(SkewMatrix),
    /// The first pair `(i, j)` whose ratio `{g_i, g_j} / (g_i g_j)` is not a scalar.
    NotLogCanonical {
        pair: (usize, usize),
        ratio: RationalFunction,
    },
}

/// Tests whether `{g_i, g_j} / (g_i g_j)` is constant for every pair.
///
/// Independence of `gs` is a separate question; see `jacobian_rank`.
pub fn check_log_canonical(
    s: &PoissonStructure,
    gs: &[RationalFunction],
) -> Result<LogCanonicalCheck> {
    let n = s.nvars();
    if gs.len() != n {
        return Err(AlgebraError::DimensionMismatch {
            left: n,
            right: gs.len(),
        }
        .into());
    }
    if let Some(i) = gs.iter().position(RationalFunction::is_zero) {
        return Err(Error::ZeroArgument(i));
    }
    let mut rows = vec![vec![Scalar::zero(); n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let b = bracket_rational(s, &gs[i], &gs[j])?;
            let ratio = b.div(&gs[i].mul(&gs[j])?)?;
            match ratio.as_scalar() {
                Some(w) => {
                    rows[j][i] = -w.clone();
                    rows[i][j] = w;
                }
                None => {
                    return Ok(LogCanonicalCheck::NotLogCanonical {
                        pair: (i, j),
                        ratio,
                    })
                }
            }
        }
    }
    Ok(LogCanonicalCheck::LogCanonical(SkewMatrix::new(rows)?))
}
