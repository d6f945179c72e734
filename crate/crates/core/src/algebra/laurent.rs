//! Sparse multivariate Laurent polynomials over the rationals.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::exponent::ExponentVector;
use super::scalar::Scalar;
use crate::error::AlgebraError;

/// A finite sum `sum_I a_I x^I` with `I` in `Z^n`.
///
/// Terms are kept in a `BTreeMap` keyed by [`ExponentVector`], so iteration
/// follows the graded-lexicographic order and no stored coefficient is zero.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LaurentPolynomial {
    nvars: usize,
    terms: BTreeMap<ExponentVector, Scalar>,
}

impl LaurentPolynomial {
    pub fn zero(nvars: usize) -> Self {
        LaurentPolynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Scalar::one())
    }

    pub fn constant(nvars: usize, c: Scalar) -> Self {
        Self::monomial(ExponentVector::zero(nvars), c)
    }

    pub fn monomial(exponent: ExponentVector, c: Scalar) -> Self {
        let mut p = Self::zero(exponent.len());
        if !c.is_zero() {
            p.terms.insert(exponent, c);
        }
        p
    }

    /// The coordinate function `x_k`.
    pub fn variable(nvars: usize, k: usize) -> Self {
        Self::monomial(ExponentVector::unit(nvars, k), Scalar::one())
    }

    /// Collects `(exponent, coefficient)` pairs, merging duplicates.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Result<Self, AlgebraError>
    where
        I: IntoIterator<Item = (ExponentVector, Scalar)>,
    {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(AlgebraError::DimensionMismatch {
                    left: nvars,
                    right: e.len(),
                });
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.constant_value().is_some_and(|c| c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The scalar value when the polynomial is constant (including zero).
    pub fn constant_value(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::zero()),
            1 => {
                let (e, c) = self.terms.iter().next()?;
                e.is_zero().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.constant_value().is_some()
    }

    /// Terms in ascending graded-lexicographic order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&ExponentVector, &Scalar)> + '_ {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &ExponentVector> + '_ {
        self.terms.keys()
    }

    /// `[x^I] f`.
    pub fn coefficient(&self, exponent: &ExponentVector) -> Scalar {
        self.terms
            .get(exponent)
            .cloned()
            .unwrap_or_else(Scalar::zero)
    }

    /// Greatest term in graded-lexicographic order.
    pub fn leading_term(&self) -> Option<(&ExponentVector, &Scalar)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coefficient(&self) -> Option<&Scalar> {
        self.leading_term().map(|(_, c)| c)
    }

    pub(crate) fn add_term(&mut self, e: ExponentVector, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_dims(&self, other: &Self) -> Result<(), AlgebraError> {
        if self.nvars != other.nvars {
            return Err(AlgebraError::DimensionMismatch {
                left: self.nvars,
                right: other.nvars,
            });
        }
        Ok(())
    }

    fn check_var(&self, k: usize) -> Result<(), AlgebraError> {
        if k >= self.nvars {
            return Err(AlgebraError::VariableOutOfRange {
                index: k,
                nvars: self.nvars,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_dims(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_dims(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_dims(other)?;
        let mut out = Self::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term(e1.checked_add(e2)?, c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        LaurentPolynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        if s.is_zero() {
            return Self::zero(self.nvars);
        }
        LaurentPolynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * s)).collect(),
        }
    }

    /// Multiplies by the monomial `x^shift`.
    pub fn shift(&self, shift: &ExponentVector) -> Result<Self, AlgebraError> {
        if shift.len() != self.nvars {
            return Err(AlgebraError::DimensionMismatch {
                left: self.nvars,
                right: shift.len(),
            });
        }
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            terms.insert(e.checked_add(shift)?, c.clone());
        }
        Ok(LaurentPolynomial {
            nvars: self.nvars,
            terms,
        })
    }

    pub fn pow(&self, k: u32) -> Result<Self, AlgebraError> {
        let mut result = Self::one(self.nvars);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = result.mul(&base)?;
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(result)
    }

    /// `d f / d x_k`, termwise `i_k x^(I - e_k)`.
    pub fn partial(&self, k: usize) -> Result<Self, AlgebraError> {
        self.check_var(k)?;
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let ik = e.get(k);
            if ik == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2.set(k, ik.checked_sub(1).ok_or(AlgebraError::ExponentOverflow)?);
            out.add_term(e2, c * Scalar::from_integer(ik.into()));
        }
        Ok(out)
    }

    /// Componentwise minimum exponent over the support; `None` for zero.
    pub fn valuation(&self) -> Option<ExponentVector> {
        let mut it = self.terms.keys();
        let first = it.next()?.clone();
        Some(it.fold(first, |acc, e| acc.meet(e)))
    }

    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|e| e.is_nonnegative())
    }

    /// Highest exponent of `x_k`; `None` for zero.
    pub fn degree_in(&self, k: usize) -> Option<i32> {
        self.terms.keys().map(|e| e.get(k)).max()
    }

    pub fn min_degree_in(&self, k: usize) -> Option<i32> {
        self.terms.keys().map(|e| e.get(k)).min()
    }

    pub fn total_degree(&self) -> Option<i64> {
        self.terms.keys().map(|e| e.degree()).max()
    }

    /// Scales so the leading coefficient is one.
    pub fn monic(&self) -> Self {
        match self.leading_coefficient() {
            Some(lc) if !lc.is_one() => self.scale(&lc.recip()),
            _ => self.clone(),
        }
    }

    /// Splits into coefficients of powers of `x_k`: entry `d` holds the
    /// coefficient of `x_k^(lo + d)` where `lo` is the returned offset.
    pub(crate) fn coefficients_in(&self, k: usize) -> (i32, Vec<LaurentPolynomial>) {
        let (Some(lo), Some(hi)) = (self.min_degree_in(k), self.degree_in(k)) else {
            return (0, Vec::new());
        };
        let mut coeffs = vec![Self::zero(self.nvars); (hi - lo) as usize + 1];
        for (e, c) in &self.terms {
            let d = e.get(k);
            let mut e2 = e.clone();
            e2.set(k, 0);
            coeffs[(d - lo) as usize].terms.insert(e2, c.clone());
        }
        (lo, coeffs)
    }

    /// Substitutes `x_k = value` for every `k` with `Some` value.
    pub fn evaluate_partial(&self, values: &[Option<Scalar>]) -> Result<Self, AlgebraError> {
        if values.len() != self.nvars {
            return Err(AlgebraError::DimensionMismatch {
                left: self.nvars,
                right: values.len(),
            });
        }
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut coeff = c.clone();
            let mut e2 = e.clone();
            for (k, v) in values.iter().enumerate() {
                if let Some(v) = v {
                    let ik = e.get(k);
                    if ik != 0 {
                        if v.is_zero() && ik < 0 {
                            return Err(AlgebraError::DivisionByZero);
                        }
                        coeff *= num_traits::pow::Pow::pow(v, ik);
                    }
                    e2.set(k, 0);
                }
            }
            out.add_term(e2, coeff);
        }
        Ok(out)
    }

    /// Exact quotient `self / divisor` for polynomials (nonnegative exponents).
    ///
    /// Returns `Ok(None)` when the division leaves a remainder.
    pub fn div_exact(&self, divisor: &Self) -> Result<Option<Self>, AlgebraError> {
        self.check_dims(divisor)?;
        let Some((lead_e, lead_c)) = divisor.leading_term() else {
            return Err(AlgebraError::DivisionByZero);
        };
        if !self.is_polynomial() || !divisor.is_polynomial() {
            return Err(AlgebraError::NotAPolynomial);
        }
        if let Some(c) = divisor.constant_value() {
            return Ok(Some(self.scale(&c.recip())));
        }
        let lead_inv = lead_c.recip();
        let mut rem = self.clone();
        let mut quot = Self::zero(self.nvars);
        while let Some((e, c)) = rem.leading_term() {
            if !lead_e.divides(e) {
                return Ok(None);
            }
            let qe = e.checked_sub(lead_e)?;
            let qc = c * &lead_inv;
            for (de, dc) in &divisor.terms {
                rem.add_term(de.checked_add(&qe)?, -(dc * &qc));
            }
            quot.add_term(qe, qc);
        }
        Ok(Some(quot))
    }
}
