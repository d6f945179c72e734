//! Three-dimensional brackets with monomial structure functions
//! `{x,y} = A x^a y^.. z^..`, `{x,z} = B x^b..`, `{y,z} = C x^c..`.

use num_bigint::BigInt;
use num_traits::Zero;

use super::jacobi::jacobiator;
use super::structure::PoissonStructure;
use crate::algebra::{ExponentVector, LaurentPolynomial, RationalFunction, Scalar};
use crate::error::{Error, Result};

/// A member of the monomial family together with its Jacobi data.
#[derive(Clone, Debug)]
pub struct Monomial3 {
    pub structure: PoissonStructure,
    /// Jacobiator of `(x, y, z)`, computed from the bracket.
    pub jacobiator: RationalFunction,
    /// The same quantity from the three-term closed form.
    pub closed_form: RationalFunction,
    /// Whether `a1 = b1`, `a2 = c2` and `b3 = c3`.
    pub sufficient_condition_met: bool,
}

/// Builds the family member with scalar coefficients `A, B, C`.
pub fn monomial3_family(exps: [[i32; 3]; 3], coeffs: [Scalar; 3]) -> Result<Monomial3> {
    build(exps, Coefficients::Scalar(coeffs))
}

/// Builds the family member on `(x, y, z, A, B, C)` with the coefficients as
/// central parameters.
pub fn monomial3_family_symbolic(exps: [[i32; 3]; 3]) -> Result<Monomial3> {
    build(exps, Coefficients::Symbolic)
}

enum Coefficients {
    Scalar([Scalar; 3]),
    Symbolic,
}

impl Coefficients {
    fn nvars(&self) -> usize {
        match self {
            Coefficients::Scalar(_) => 3,
            Coefficients::Symbolic => 6,
        }
    }

    /// Product of the selected coefficients as a monomial `(exponent, scalar)`.
    fn product(&self, which: &[usize]) -> (ExponentVector, Scalar) {
        let n = self.nvars();
        let mut e = ExponentVector::zero(n);
        let mut c = Scalar::from_integer(BigInt::from(1));
        for &w in which {
            match self {
                Coefficients::Scalar(s) => c *= &s[w],
                Coefficients::Symbolic => e.set(3 + w, e.get(3 + w) + 1),
            }
        }
        (e, c)
    }
}

fn build(exps: [[i32; 3]; 3], coeffs: Coefficients) -> Result<Monomial3> {
    let n = coeffs.nvars();
    let spatial = |v: [i32; 3]| {
        let mut e = ExponentVector::zero(n);
        for (k, x) in v.into_iter().enumerate() {
            e.set(k, x);
        }
        e
    };
    let mut brackets = Vec::new();
    for (slot, pair) in [(0, 1), (0, 2), (1, 2)].into_iter().enumerate() {
        let (ce, c) = coeffs.product(&[slot]);
        let e = spatial(exps[slot]).checked_add(&ce)?;
        brackets.push((pair, RationalFunction::monomial(e, c)));
    }
    let names: Vec<String> = ["x", "y", "z", "A", "B", "C"][..n]
        .iter()
        .map(|s| s.to_string())
        .collect();
    let mut structure = PoissonStructure::from_upper(names, brackets)?;
    if n == 6 {
        structure = structure.with_central(&["A", "B", "C"])?;
    }
    let jac = jacobiator(
        &structure,
        &structure.variable(0),
        &structure.variable(1),
        &structure.variable(2),
    )?;
    let closed_form = closed_form(exps, &coeffs)?;
    if jac != closed_form {
        return Err(Error::Internal(
            "jacobiator of the monomial family disagrees with its closed form".into(),
        ));
    }
    let [a, b, c] = exps;
    Ok(Monomial3 {
        structure,
        jacobiator: jac,
        closed_form,
        sufficient_condition_met: a[0] == b[0] && a[1] == c[1] && b[2] == c[2],
    })
}

/// `(b1-a1)AB x^(a+b-e_x) + (c2-a2)AC x^(a+c-e_y) + (c3-b3)BC x^(b+c-e_z)`.
fn closed_form(exps: [[i32; 3]; 3], coeffs: &Coefficients) -> Result<RationalFunction> {
    let n = coeffs.nvars();
    let [a, b, c] = exps;
    let terms = [
        (b[0] - a[0], [0, 1], a, b, 0),
        (c[1] - a[1], [0, 2], a, c, 1),
        (c[2] - b[2], [1, 2], b, c, 2),
    ];
    let mut total = LaurentPolynomial::zero(n);
    for (factor, which, u, v, drop) in terms {
        if factor == 0 {
            continue;
        }
        let (mut e, mut s) = coeffs.product(&which);
        if s.is_zero() {
            continue;
        }
        s *= Scalar::from_integer(BigInt::from(factor));
        for k in 0..3 {
            let d = if k == drop { 1 } else { 0 };
            e.set(k, u[k] + v[k] - d);
        }
        total = total.add(&LaurentPolynomial::monomial(e, s))?;
    }
    Ok(RationalFunction::from_laurent(total))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;

    #[test]
    fn quadratic_example_is_closed() {
        let m =
            monomial3_family([[0, 0, 2], [0, 2, 0], [2, 0, 0]], [int(1), int(1), int(1)]).unwrap();
        assert!(m.sufficient_condition_met);
        assert!(m.jacobiator.is_zero());
    }

    #[test]
    fn violated_condition_gives_nonzero() {
        let m =
            monomial3_family([[0, 0, 0], [1, 0, 0], [0, 1, 0]], [int(1), int(2), int(3)]).unwrap();
        assert!(!m.sufficient_condition_met);
        assert!(!m.jacobiator.is_zero());
    }

    #[test]
    fn symbolic_closed_form() {
        let m = monomial3_family_symbolic([[1, 2, 0], [3, 0, 1], [0, 1, 2]]).unwrap();
        assert!(!m.jacobiator.is_zero());
        assert_eq!(m.structure.nvars(), 6);
        assert!(m.structure.is_central(4));
    }
}
