use num_traits::{One, Zero};

use super::closure::LieClosureReport;
use crate::algebra::linalg::{
    characteristic_polynomial, is_zero_matrix, mat_pow, rational_roots, Matrix,
};
use crate::algebra::Scalar;
use crate::error::{Error, Result};

/// The adjoint action of one basis element of a closed report.
#[derive(Clone, Debug, PartialEq)]
pub struct AdjointAnalysis {
    pub element: usize,
    /// Column `k` holds the coordinates of `{b_element, b_k}`.
    pub matrix: Matrix,
    /// Coefficients of `det(t I - ad)`, constant term first.
    pub charpoly: Vec<Scalar>,
    pub is_nilpotent: bool,
    /// Some eigenvalue over the algebraic closure is nonzero.
    pub has_nonzero_eigenvalue: bool,
    /// The nonzero rational eigenvalues, ascending.
    pub rational_eigenvalues: Vec<Scalar>,
}

pub fn ad_analysis(report: &LieClosureReport, i: usize) -> Result<AdjointAnalysis> {
    if !report.closed {
        return Err(Error::NotClosed);
    }
    let d = report.dimension;
    if i >= d {
        return Err(Error::IndexOutOfRange { index: i, dim: d });
    }
    let c = &report.structure_constants;
    let matrix: Matrix = (0..d)
        .map(|m| (0..d).map(|k| c[i][k][m].clone()).collect())
        .collect();
    let charpoly = characteristic_polynomial(&matrix);
    let by_charpoly = charpoly[..d].iter().all(Zero::is_zero) && charpoly[d].is_one();
    let by_power = is_zero_matrix(&mat_pow(&matrix, d as u32));
    let roots = rational_roots(&charpoly);
    let by_roots_only_zero = by_charpoly && roots.iter().all(Zero::is_zero);
    if by_charpoly != by_power || by_charpoly != by_roots_only_zero {
        return Err(Error::Internal(format!(
            "nilpotency tests disagree for basis element {i}"
        )));
    }
    Ok(AdjointAnalysis {
        element: i,
        matrix,
        charpoly,
        is_nilpotent: by_charpoly,
        has_nonzero_eigenvalue: !by_charpoly,
        rational_eigenvalues: roots.into_iter().filter(|r| !r.is_zero()).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, RationalFunction};
    use crate::lie::{lie_closure, DEFAULT_MAX_DIM};
    use crate::poisson::PoissonStructure;

    fn affine_report() -> LieClosureReport {
        let x = RationalFunction::variable(2, 0);
        let s = PoissonStructure::from_upper(vec!["x".into(), "y".into()], [((0, 1), x.clone())])
            .unwrap();
        lie_closure(&s, &[x, s.variable(1)], DEFAULT_MAX_DIM).unwrap()
    }

    #[test]
    fn ad_x_is_nilpotent() {
        let a = ad_analysis(&affine_report(), 1).unwrap();
        assert!(a.is_nilpotent);
        assert!(!is_zero_matrix(&a.matrix));
        assert!(is_zero_matrix(&mat_pow(&a.matrix, 2)));
    }

    #[test]
    fn ad_y_has_eigenvalue_minus_one() {
        let a = ad_analysis(&affine_report(), 2).unwrap();
        // t^2 (t + 1)
        assert_eq!(a.charpoly, vec![int(0), int(0), int(1), int(1)]);
        assert!(a.has_nonzero_eigenvalue);
        assert_eq!(a.rational_eigenvalues, vec![int(-1)]);
    }

    #[test]
    fn errors() {
        let r = affine_report();
        assert!(matches!(
            ad_analysis(&r, 3),
            Err(Error::IndexOutOfRange { .. })
        ));
        let open = LieClosureReport { closed: false, ..r };
        assert!(matches!(ad_analysis(&open, 0), Err(Error::NotClosed)));
    }
}
