use num_traits::Zero;

use super::adjoint::ad_analysis;
use super::closure::LieClosureReport;
use crate::algebra::linalg::{identity, is_zero_matrix, mat_vec, nullspace, Matrix};
use crate::algebra::{RationalFunction, Scalar};
use crate::error::{Error, Result};
use crate::poisson::PoissonStructure;

/// Why a pair `(f, g)` from a nonabelian closure is interesting.
#[derive(Clone, Debug, PartialEq)]
pub enum WitnessKind {
    /// `ad_{b_element}` has this nonzero rational eigenvalue; `{f, g} = g`.
    Eigenvalue(Scalar),
    /// `ad_{b_element}` is nonzero nilpotent; `{f, g} != 0 = {f, {f, g}}`.
    Nilpotent,
}

#[derive(Clone, Debug, PartialEq)]
pub struct LieWitness {
    pub element: usize,
    pub kind: WitnessKind,
    pub f: RationalFunction,
    pub g: RationalFunction,
}

#[derive(Clone, Debug, PartialEq)]
#[allow(clippy::large_enum_variant)]
pub enum AbelianVerdict {
    Abelian,
    NonAbelian {
        witness: Option<LieWitness>,
    },
    /// A nonabelian closure under a log-canonical structure.
    Contradiction,
}

pub fn abelian_verdict(s: &PoissonStructure, report: &LieClosureReport) -> Result<AbelianVerdict> {
    if !report.closed {
        return Err(Error::NotClosed);
    }
    if report.abelian {
        return Ok(AbelianVerdict::Abelian);
    }
    if s.is_log_canonical() {
        return Ok(AbelianVerdict::Contradiction);
    }
    let analyses = (0..report.dimension)
        .map(|i| ad_analysis(report, i))
        .collect::<Result<Vec<_>>>()?;
    for a in &analyses {
        if let Some(lambda) = a.rational_eigenvalues.first() {
            let mut shifted = a.matrix.clone();
            for (k, row) in shifted.iter_mut().enumerate() {
                row[k] -= lambda;
            }
            let v = nullspace(&shifted)
                .into_iter()
                .next()
                .ok_or_else(|| Error::Internal("eigenvalue without eigenvector".into()))?;
            return Ok(AbelianVerdict::NonAbelian {
                witness: Some(LieWitness {
                    element: a.element,
                    kind: WitnessKind::Eigenvalue(lambda.clone()),
                    f: report.basis[a.element].scale(&lambda.recip()),
                    g: combine(&report.basis, &v)?,
                }),
            });
        }
    }
    for a in &analyses {
        if a.is_nilpotent && !is_zero_matrix(&a.matrix) {
            let w = nilpotent_chain_end(&a.matrix);
            return Ok(AbelianVerdict::NonAbelian {
                witness: Some(LieWitness {
                    element: a.element,
                    kind: WitnessKind::Nilpotent,
                    f: report.basis[a.element].clone(),
                    g: combine(&report.basis, &w)?,
                }),
            });
        }
    }
    Ok(AbelianVerdict::NonAbelian { witness: None })
}

/// A vector `w` with `M w != 0` and `M^2 w = 0`, for nonzero nilpotent `M`.
fn nilpotent_chain_end(m: &Matrix) -> Vec<Scalar> {
    let d = m.len();
    let col = (0..d)
        .find(|&k| m.iter().any(|row| !row[k].is_zero()))
        .expect("matrix is nonzero");
    let mut w = identity(d)[col].clone();
    loop {
        let mw = mat_vec(m, &w);
        if mat_vec(m, &mw).iter().all(Zero::is_zero) {
            return w;
        }
        w = mw;
    }
}

fn combine(basis: &[RationalFunction], coeffs: &[Scalar]) -> Result<RationalFunction> {
    let n = basis[0].nvars();
    let mut acc = RationalFunction::zero(n);
    for (b, c) in basis.iter().zip(coeffs) {
        if !c.is_zero() {
            acc = acc.add(&b.scale(c))?;
        }
    }
    Ok(acc)
}
