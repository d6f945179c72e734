use std::collections::BTreeMap;

use num_traits::Zero;

use super::span::express;
use crate::algebra::{RationalFunction, Scalar};
use crate::error::Result;
use crate::poisson::PoissonStructure;

/// Default cap on the dimension explored by [`lie_closure`].
pub const DEFAULT_MAX_DIM: usize = 16;

/// One element adjoined during closure, with the bracket that produced it.
#[derive(Clone, Debug, PartialEq)]
pub struct TraceEntry {
    /// Index of the new element in the basis.
    pub element: usize,
    /// Basis indices `(i, j)` with `{b_i, b_j}` the new element.
    pub from: (usize, usize),
}

/// Result of closing a set of functions under the bracket.
#[derive(Clone, Debug, PartialEq)]
pub struct LieClosureReport {
    pub closed: bool,
    /// Linearly independent; `basis[0]` is the constant 1.
    pub basis: Vec<RationalFunction>,
    /// `c[i][j][k]` with `{b_i, b_j} = sum_k c[i][j][k] b_k`; empty unless closed.
    pub structure_constants: Vec<Vec<Vec<Scalar>>>,
    pub dimension: usize,
    /// All structure constants vanish; false when not closed.
    pub abelian: bool,
    pub trace: Vec<TraceEntry>,
}

/// Closes `{1} ∪ generators` under the bracket, breadth-first over basis
/// pairs, giving up once the span would exceed `max_dim`.
pub fn lie_closure(
    s: &PoissonStructure,
    generators: &[RationalFunction],
    max_dim: usize,
) -> Result<LieClosureReport> {
    let n = s.nvars();
    let mut basis = vec![RationalFunction::one(n)];
    let mut trace = Vec::new();
    let inconclusive = |basis: Vec<RationalFunction>, trace| LieClosureReport {
        closed: false,
        dimension: basis.len(),
        basis,
        structure_constants: Vec::new(),
        abelian: false,
        trace,
    };
    for g in generators {
        if express(&basis, g)?.is_none() {
            if basis.len() == max_dim {
                return Ok(inconclusive(basis, trace));
            }
            basis.push(g.clone());
        }
    }
    let mut coords: BTreeMap<(usize, usize), Vec<Scalar>> = BTreeMap::new();
    let mut j = 1;
    while j < basis.len() {
        for i in 1..j {
            let h = s.bracket(&basis[i], &basis[j])?;
            match express(&basis, &h)? {
                Some(c) => {
                    coords.insert((i, j), c);
                }
                None => {
                    if basis.len() == max_dim {
                        return Ok(inconclusive(basis, trace));
                    }
                    let mut c = vec![Scalar::zero(); basis.len() + 1];
                    c[basis.len()] = Scalar::from_integer(1.into());
                    trace.push(TraceEntry {
                        element: basis.len(),
                        from: (i, j),
                    });
                    basis.push(h);
                    coords.insert((i, j), c);
                }
            }
        }
        j += 1;
    }
    let d = basis.len();
    let mut c = vec![vec![vec![Scalar::zero(); d]; d]; d];
    for ((i, j), v) in coords {
        for (k, x) in v.into_iter().enumerate() {
            c[j][i][k] = -x.clone();
            c[i][j][k] = x;
        }
    }
    let abelian = c.iter().flatten().flatten().all(Zero::is_zero);
    Ok(LieClosureReport {
        closed: true,
        basis,
        structure_constants: c,
        dimension: d,
        abelian,
        trace,
    })
}
