//! The two bracket kernels.
//!
//! The general route differentiates: `{f, g} = sum_{i,j} (df/dx_i)(dg/dx_j) pi_ij`.
//! For log-canonical structures and Laurent polynomial arguments the bracket
//! of monomials is `{x^I, x^J} = M(I, J) x^(I+J)` with the skew form
//! `M(I, J) = sum_{k<l} w_kl (i_k j_l - i_l j_k)`, which gives a
//! derivative-free double sum over the supports.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use super::skew::SkewMatrix;
use super::structure::PoissonStructure;
use crate::algebra::{ExponentVector, LaurentPolynomial, RationalFunction, Scalar};
use crate::error::{AlgebraError, Error, Result};

fn check_dim(expected: usize, found: usize) -> Result<(), AlgebraError> {
    if expected != found {
        return Err(AlgebraError::DimensionMismatch {
            left: expected,
            right: found,
        });
    }
    Ok(())
}

/// `M(I, J) = sum_{k<l} w_kl (i_k j_l - i_l j_k)`, equivalently `I W J^T`.
pub fn m_form(
    omega: &SkewMatrix,
    i: &ExponentVector,
    j: &ExponentVector,
) -> Result<Scalar, AlgebraError> {
    let n = omega.dim();
    check_dim(n, i.len())?;
    check_dim(n, j.len())?;
    let mut total = Scalar::zero();
    for k in 0..n {
        for l in k + 1..n {
            let w = omega.get(k, l);
            if w.is_zero() {
                continue;
            }
            // 2x2 minor of the matrix with rows I and J, columns k and l.
            let minor = i64::from(i.get(k)) * i64::from(j.get(l))
                - i64::from(i.get(l)) * i64::from(j.get(k));
            if minor != 0 {
                total += w * Scalar::from_integer(BigInt::from(minor));
            }
        }
    }
    Ok(total)
}

/// `{x^I, x^J} = M(I, J) x^(I+J)`.
pub fn bracket_monomial(
    omega: &SkewMatrix,
    i: &ExponentVector,
    j: &ExponentVector,
) -> Result<LaurentPolynomial, AlgebraError> {
    let m = m_form(omega, i, j)?;
    Ok(LaurentPolynomial::monomial(i.checked_add(j)?, m))
}

/// `{f, g} = sum_{I, J} a_I b_J M(I, J) x^(I+J)` for Laurent polynomials.
pub fn bracket_laurent(
    omega: &SkewMatrix,
    f: &LaurentPolynomial,
    g: &LaurentPolynomial,
) -> Result<LaurentPolynomial, AlgebraError> {
    let n = omega.dim();
    check_dim(n, f.nvars())?;
    check_dim(n, g.nvars())?;
    let mut acc: BTreeMap<ExponentVector, Scalar> = BTreeMap::new();
    for (ei, a) in f.terms() {
        for (ej, b) in g.terms() {
            let m = m_form(omega, ei, ej)?;
            if m.is_zero() {
                continue;
            }
            *acc.entry(ei.checked_add(ej)?).or_insert_with(Scalar::zero) += a * b * m;
        }
    }
    LaurentPolynomial::from_terms(n, acc.into_iter().filter(|(_, c)| !c.is_zero()))
}

/// `{f, g}` by the partial-derivative formula with exact quotient-rule
/// differentiation. This is the reference path for every structure.
pub fn bracket_rational(
    s: &PoissonStructure,
    f: &RationalFunction,
    g: &RationalFunction,
) -> Result<RationalFunction> {
    let n = s.nvars();
    check_dim(n, f.nvars())?;
    check_dim(n, g.nvars())?;
    if f.as_scalar().is_some() || g.as_scalar().is_some() {
        return Ok(RationalFunction::zero(n));
    }
    let df = partials(s, f)?;
    let dg = partials(s, g)?;
    // Numerators grouped by the denominator of pi_ij.
    let mut groups: Vec<(&LaurentPolynomial, LaurentPolynomial)> = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let pi = s.structure_function(i, j);
            if pi.is_zero() {
                continue;
            }
            // (df_i dg_j - df_j dg_i) pi_ij, numerators only.
            let mut inner = LaurentPolynomial::zero(n);
            if let (Some(a), Some(b)) = (&df[i], &dg[j]) {
                inner = inner.add(&a.mul(b)?)?;
            }
            if let (Some(a), Some(b)) = (&df[j], &dg[i]) {
                inner = inner.sub(&a.mul(b)?)?;
            }
            if inner.is_zero() {
                continue;
            }
            let term = inner.mul(&pi.full_numerator())?;
            match groups.iter_mut().find(|(d, _)| *d == pi.denominator()) {
                Some((_, acc)) => *acc = acc.add(&term)?,
                None => groups.push((pi.denominator(), term)),
            }
        }
    }
    let mut num = LaurentPolynomial::zero(n);
    for (k, (_, part)) in groups.iter().enumerate() {
        let mut t = part.clone();
        for (l, (d, _)) in groups.iter().enumerate() {
            if l != k {
                t = t.mul(d)?;
            }
        }
        num = num.add(&t)?;
    }
    if num.is_zero() {
        return Ok(RationalFunction::zero(n));
    }
    let mut factors: Vec<(&LaurentPolynomial, u32)> = groups.iter().map(|(d, _)| (*d, 1)).collect();
    factors.push((f.denominator(), 2));
    factors.push((g.denominator(), 2));
    Ok(RationalFunction::from_factored(num, &factors)?)
}

/// Numerators of all partial derivatives over the shared denominator `q^2`.
fn partials(
    s: &PoissonStructure,
    f: &RationalFunction,
) -> Result<Vec<Option<LaurentPolynomial>>, AlgebraError> {
    (0..f.nvars())
        .map(|k| {
            if s.is_central(k) {
                return Ok(None);
            }
            let d = f.partial_numerator(k)?;
            Ok((!d.is_zero()).then_some(d))
        })
        .collect()
}

impl PoissonStructure {
    /// `{f, g}`, using the monomial kernel when the structure is
    /// log-canonical and both arguments are Laurent polynomials, and the
    /// derivative formula otherwise.
    pub fn bracket(&self, f: &RationalFunction, g: &RationalFunction) -> Result<RationalFunction> {
        if let Some(omega) = self.omega() {
            if let (Some(a), Some(b)) = (f.as_laurent(), g.as_laurent()) {
                check_dim(self.nvars(), a.nvars())?;
                check_dim(self.nvars(), b.nvars())?;
                return Ok(RationalFunction::from_laurent(bracket_laurent(
                    omega, &a, &b,
                )?));
            }
        }
        bracket_rational(self, f, g)
    }

    /// Like [`bracket`](Self::bracket) but also evaluates the derivative
    /// formula whenever the fast kernel applies, failing on disagreement.
    pub fn bracket_checked(
        &self,
        f: &RationalFunction,
        g: &RationalFunction,
    ) -> Result<RationalFunction> {
        let fast = self.bracket(f, g)?;
        let reference = bracket_rational(self, f, g)?;
        if fast != reference {
            return Err(Error::Internal(
                "monomial kernel disagrees with the derivative formula".into(),
            ));
        }
        Ok(fast)
    }
}
