//! Coefficients of rational functions expanded as iterated Laurent series.
//!
//! A variable order `[v_1, ..., v_n]` (innermost first) selects the field
//! `Q<<v_1, ..., v_n>> = Q<<v_1, ..., v_{n-1}>>((v_n))`. A rational function
//! `N / D` is expanded in the outermost variable with coefficients in the
//! field of the remaining ones: after factoring out the valuations, the
//! coefficients satisfy `c_m = (N_m - sum_{k>=1} D_k c_{m-k}) / D_0`, which
//! we keep as `E_m / D_0^(m+1)` with polynomial `E_m` and recurse on the one
//! coefficient we need. Every step is a finite exact computation.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::algebra::{ExponentVector, LaurentPolynomial, RationalFunction, Scalar};
use crate::error::{AlgebraError, Error, Result};

/// Per-variable inclusive exponent bounds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesWindow {
    bounds: Vec<(i32, i32)>,
}

impl SeriesWindow {
    pub fn new(bounds: Vec<(i32, i32)>) -> Result<Self> {
        for (k, &(lo, hi)) in bounds.iter().enumerate() {
            if lo > hi {
                return Err(Error::InvertedWindow {
                    variable: k,
                    lower: lo,
                    upper: hi,
                });
            }
        }
        Ok(SeriesWindow { bounds })
    }

    /// The box `[lo, hi]^n`.
    pub fn cube(n: usize, lo: i32, hi: i32) -> Result<Self> {
        Self::new(vec![(lo, hi); n])
    }

    pub fn nvars(&self) -> usize {
        self.bounds.len()
    }

    pub fn bounds(&self) -> &[(i32, i32)] {
        &self.bounds
    }

    pub fn contains(&self, e: &ExponentVector) -> bool {
        e.len() == self.bounds.len()
            && e.as_slice()
                .iter()
                .zip(&self.bounds)
                .all(|(x, (lo, hi))| lo <= x && x <= hi)
    }

    /// All exponent vectors in the window.
    pub fn points(&self) -> Vec<ExponentVector> {
        let mut out = vec![Vec::new()];
        for &(lo, hi) in &self.bounds {
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    (lo..=hi).map(move |i| {
                        let mut p = prefix.clone();
                        p.push(i);
                        p
                    })
                })
                .collect();
        }
        out.into_iter().map(ExponentVector::new).collect()
    }
}

/// The part of an iterated Laurent expansion lying inside a window.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    window: SeriesWindow,
    order: Vec<usize>,
    terms: BTreeMap<ExponentVector, Scalar>,
}

impl TruncatedSeries {
    pub fn window(&self) -> &SeriesWindow {
        &self.window
    }

    /// Variable order, innermost first.
    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &Scalar)> + '_ {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn get(&self, e: &ExponentVector) -> Scalar {
        self.terms.get(e).cloned().unwrap_or_else(Scalar::zero)
    }
}

/// The declaration order `x_1, ..., x_n` with `x_n` outermost.
pub fn default_order(n: usize) -> Vec<usize> {
    (0..n).collect()
}

fn check_order(order: &[usize], n: usize) -> Result<()> {
    let mut seen = vec![false; n];
    if order.len() != n {
        return Err(Error::InvalidOrder(format!(
            "expected {n} variables, got {}",
            order.len()
        )));
    }
    for &k in order {
        if k >= n || seen[k] {
            return Err(Error::InvalidOrder(format!(
                "{order:?} is not a permutation"
            )));
        }
        seen[k] = true;
    }
    Ok(())
}

/// `[x^I] f` in the default iterated order.
pub fn coefficient(f: &RationalFunction, index: &ExponentVector) -> Result<Scalar> {
    coefficient_in_order(f, index, &default_order(f.nvars()))
}

/// `[x^I] f` in the iterated order given innermost first.
pub fn coefficient_in_order(
    f: &RationalFunction,
    index: &ExponentVector,
    order: &[usize],
) -> Result<Scalar> {
    let n = f.nvars();
    if index.len() != n {
        return Err(AlgebraError::DimensionMismatch {
            left: n,
            right: index.len(),
        }
        .into());
    }
    check_order(order, n)?;
    if f.is_zero() {
        return Ok(Scalar::zero());
    }
    let target = index.checked_sub(f.monomial_factor())?;
    let den = f.denominator();
    if let Some(c) = den.constant_value() {
        return Ok(f.numerator().coefficient(&target) / c);
    }
    Ok(coefficient_rec(
        f.numerator(),
        den,
        target.as_slice(),
        order,
    )?)
}

/// `[1] f`, the constant term in the default iterated order.
pub fn constant_term(f: &RationalFunction) -> Scalar {
    coefficient(f, &ExponentVector::zero(f.nvars())).expect("zero index has matching length")
}

fn coefficient_rec(
    num: &LaurentPolynomial,
    den: &LaurentPolynomial,
    target: &[i32],
    order: &[usize],
) -> Result<Scalar, AlgebraError> {
    if num.is_zero() {
        return Ok(Scalar::zero());
    }
    let Some((&v, inner)) = order.split_last() else {
        let n = num.constant_value().expect("all variables consumed");
        let d = den.constant_value().expect("all variables consumed");
        return Ok(n / d);
    };
    if let Some(c) = den.constant_value() {
        let mut e = ExponentVector::zero(num.nvars());
        for &k in order {
            e.set(k, target[k]);
        }
        return Ok(num.coefficient(&e) / c);
    }
    let (num_val, num_coeffs) = num.coefficients_in(v);
    let (den_val, den_coeffs) = den.coefficients_in(v);
    let t = i64::from(target[v]) - i64::from(num_val) + i64::from(den_val);
    if t < 0 {
        return Ok(Scalar::zero());
    }
    let t = usize::try_from(t).map_err(|_| AlgebraError::ExponentOverflow)?;
    let expansion = SeriesNumerators::new(&num_coeffs, &den_coeffs);
    let (e_t, d_pow) = expansion.term(t)?;
    coefficient_rec(&e_t, &d_pow, target, inner)
}

/// Numerators `E_m` of the outer-variable expansion of `N / D` with
/// `D_0 != 0`, so that the `m`-th coefficient is `E_m / D_0^(m+1)`.
struct SeriesNumerators<'a> {
    num: &'a [LaurentPolynomial],
    den: &'a [LaurentPolynomial],
}

impl<'a> SeriesNumerators<'a> {
    fn new(num: &'a [LaurentPolynomial], den: &'a [LaurentPolynomial]) -> Self {
        SeriesNumerators { num, den }
    }

    /// `(E_0, ..., E_upto)` together with the powers `D_0^0, ..., D_0^(upto+1)`.
    fn all(
        &self,
        upto: usize,
    ) -> Result<(Vec<LaurentPolynomial>, Vec<LaurentPolynomial>), AlgebraError> {
        let nvars = self.den[0].nvars();
        let d0 = &self.den[0];
        let mut d0_pows = vec![LaurentPolynomial::one(nvars)];
        for k in 0..=upto {
            let next = d0_pows[k].mul(d0)?;
            d0_pows.push(next);
        }
        let mut e: Vec<LaurentPolynomial> = Vec::with_capacity(upto + 1);
        for m in 0..=upto {
            let n_m = self
                .num
                .get(m)
                .cloned()
                .unwrap_or_else(|| LaurentPolynomial::zero(nvars));
            let mut acc = n_m.mul(&d0_pows[m])?;
            for k in 1..=m.min(self.den.len() - 1) {
                if self.den[k].is_zero() || e[m - k].is_zero() {
                    continue;
                }
                let t = self.den[k].mul(&e[m - k])?.mul(&d0_pows[k - 1])?;
                acc = acc.sub(&t)?;
            }
            e.push(acc);
        }
        Ok((e, d0_pows))
    }

    fn term(&self, t: usize) -> Result<(LaurentPolynomial, LaurentPolynomial), AlgebraError> {
        let (mut e, mut pows) = self.all(t)?;
        Ok((e.swap_remove(t), pows.swap_remove(t + 1)))
    }
}

/// All coefficients of `f` inside `window`, in the iterated order given
/// innermost first.
pub fn expand_iterated(
    f: &RationalFunction,
    window: &SeriesWindow,
    order: &[usize],
) -> Result<TruncatedSeries> {
    let n = f.nvars();
    if window.nvars() != n {
        return Err(AlgebraError::DimensionMismatch {
            left: n,
            right: window.nvars(),
        }
        .into());
    }
    check_order(order, n)?;
    let mut terms = BTreeMap::new();
    if !f.is_zero() {
        let v = f.monomial_factor();
        let shifted: Vec<(i32, i32)> = window
            .bounds()
            .iter()
            .enumerate()
            .map(|(k, &(lo, hi))| (lo.saturating_sub(v.get(k)), hi.saturating_sub(v.get(k))))
            .collect();
        let mut found = Vec::new();
        expand_rec(
            f.numerator(),
            f.denominator(),
            &shifted,
            order,
            ExponentVector::zero(n),
            &mut found,
        )?;
        for (e, c) in found {
            terms.insert(e.checked_add(v)?, c);
        }
    }
    Ok(TruncatedSeries {
        window: window.clone(),
        order: order.to_vec(),
        terms,
    })
}

fn expand_rec(
    num: &LaurentPolynomial,
    den: &LaurentPolynomial,
    bounds: &[(i32, i32)],
    order: &[usize],
    prefix: ExponentVector,
    out: &mut Vec<(ExponentVector, Scalar)>,
) -> Result<(), AlgebraError> {
    if num.is_zero() {
        return Ok(());
    }
    let Some((&v, inner)) = order.split_last() else {
        let c = num.constant_value().expect("all variables consumed")
            / den.constant_value().expect("all variables consumed");
        if !c.is_zero() {
            out.push((prefix, c));
        }
        return Ok(());
    };
    let (num_val, num_coeffs) = num.coefficients_in(v);
    let (den_val, den_coeffs) = den.coefficients_in(v);
    let (lo, hi) = bounds[v];
    let shift = i64::from(den_val) - i64::from(num_val);
    let t_hi = i64::from(hi) + shift;
    if t_hi < 0 {
        return Ok(());
    }
    let t_hi = usize::try_from(t_hi).map_err(|_| AlgebraError::ExponentOverflow)?;
    let (es, pows) = SeriesNumerators::new(&num_coeffs, &den_coeffs).all(t_hi)?;
    for i in lo..=hi {
        let t = i64::from(i) + shift;
        if t < 0 {
            continue;
        }
        let t = t as usize;
        let mut p = prefix.clone();
        p.set(v, i);
        expand_rec(&es[t], &pows[t + 1], bounds, inner, p, out)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, ratio};

    fn x(n: usize, k: usize) -> RationalFunction {
        RationalFunction::variable(n, k)
    }

    fn inv_sum() -> RationalFunction {
        x(2, 0).add(&x(2, 1)).unwrap().inv().unwrap()
    }

    #[test]
    fn inv_sum_default_order() {
        let f = inv_sum();
        let e = |a, b| ExponentVector::new(vec![a, b]);
        assert_eq!(coefficient(&f, &e(-1, 0)).unwrap(), int(1));
        assert_eq!(coefficient(&f, &e(-2, 1)).unwrap(), int(-1));
        assert_eq!(coefficient(&f, &e(1, -2)).unwrap(), int(0));
    }

    #[test]
    fn inv_sum_swapped_order() {
        let f = inv_sum();
        let e = ExponentVector::new(vec![1, -2]);
        assert_eq!(coefficient_in_order(&f, &e, &[1, 0]).unwrap(), int(-1));
        let e = ExponentVector::new(vec![-1, 0]);
        assert_eq!(coefficient_in_order(&f, &e, &[1, 0]).unwrap(), int(0));
    }

    #[test]
    fn polynomial_read_off() {
        // 3 + x y^-1
        let f = RationalFunction::constant(2, int(3))
            .add(&x(2, 0).div(&x(2, 1)).unwrap())
            .unwrap();
        assert_eq!(constant_term(&f), int(3));
        assert_eq!(
            coefficient(&f, &ExponentVector::new(vec![1, -1])).unwrap(),
            int(1)
        );
    }

    #[test]
    fn constant_terms() {
        assert_eq!(constant_term(&inv_sum()), int(0));
        // (x^2 + 3) / x^2 = 1 + 3 x^-2
        let xx = x(1, 0);
        let f = xx
            .mul(&xx)
            .unwrap()
            .add(&RationalFunction::constant(1, int(3)))
            .unwrap()
            .div(&xx.mul(&xx).unwrap())
            .unwrap();
        assert_eq!(constant_term(&f), int(1));
    }

    #[test]
    fn geometric_series() {
        let one = RationalFunction::one(1);
        let f = one.div(&one.sub(&x(1, 0)).unwrap()).unwrap();
        let w = SeriesWindow::new(vec![(0, 5)]).unwrap();
        let s = expand_iterated(&f, &w, &[0]).unwrap();
        assert_eq!(s.len(), 6);
        for i in 0..=5 {
            assert_eq!(s.get(&ExponentVector::new(vec![i])), int(1));
        }
    }

    #[test]
    fn expansion_orders_of_inv_sum() {
        let f = inv_sum();
        let w = SeriesWindow::new(vec![(-4, 0), (0, 3)]).unwrap();
        let s = expand_iterated(&f, &w, &[0, 1]).unwrap();
        assert_eq!(s.len(), 4);
        for n in 0..=3 {
            let sign = if n % 2 == 0 { 1 } else { -1 };
            assert_eq!(s.get(&ExponentVector::new(vec![-(n + 1), n])), int(sign));
        }
        let w = SeriesWindow::new(vec![(0, 3), (-4, 0)]).unwrap();
        let s = expand_iterated(&f, &w, &[1, 0]).unwrap();
        assert_eq!(s.len(), 4);
        for n in 0..=3 {
            let sign = if n % 2 == 0 { 1 } else { -1 };
            assert_eq!(s.get(&ExponentVector::new(vec![n, -(n + 1)])), int(sign));
        }
    }

    #[test]
    fn rational_coefficients() {
        // 1/(2 - x) = 1/2 + x/4 + ...
        let f = RationalFunction::constant(1, int(2))
            .sub(&x(1, 0))
            .unwrap()
            .inv()
            .unwrap();
        assert_eq!(constant_term(&f), ratio(1, 2));
        assert_eq!(
            coefficient(&f, &ExponentVector::new(vec![1])).unwrap(),
            ratio(1, 4)
        );
    }

    #[test]
    fn inverted_window() {
        assert!(matches!(
            SeriesWindow::new(vec![(0, 1), (3, 2)]),
            Err(Error::InvertedWindow { variable: 1, .. })
        ));
    }

    #[test]
    fn bad_order() {
        let f = inv_sum();
        let e = ExponentVector::zero(2);
        assert!(coefficient_in_order(&f, &e, &[0, 0]).is_err());
        assert!(coefficient_in_order(&f, &e, &[0]).is_err());
    }
}
