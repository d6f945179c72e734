//! Multivariate polynomial GCD over the rationals.
//!
//! Univariate images bound the degree of the gcd in each variable; a zero
//! bound in every shared variable settles the common coprime case at once,
//! and a zero bound in one variable reduces to contents. Otherwise one
//! variable is evaluated at small integers, the images are combined
//! recursively and the gcd is recovered by Newton interpolation, with the
//! leading coefficients fixed by the gcd of the input leading coefficients.
//! Every candidate is confirmed by exact division, so the result is exact
//! whatever points are used.

use num_traits::Zero;

use super::exponent::ExponentVector;
use super::laurent::LaurentPolynomial;
use super::scalar::{int, Scalar};
use crate::error::AlgebraError;

/// A greatest common divisor of two polynomials, normalized monic.
///
/// `gcd(p, 0)` is `p` made monic; `gcd(0, 0)` is zero.
pub fn gcd(
    p: &LaurentPolynomial,
    q: &LaurentPolynomial,
) -> Result<LaurentPolynomial, AlgebraError> {
    if p.nvars() != q.nvars() {
        return Err(AlgebraError::DimensionMismatch {
            left: p.nvars(),
            right: q.nvars(),
        });
    }
    if !p.is_polynomial() || !q.is_polynomial() {
        return Err(AlgebraError::NotAPolynomial);
    }
    if p.is_zero() {
        return Ok(q.monic());
    }
    if q.is_zero() {
        return Ok(p.monic());
    }
    Ok(gcd_rec(p, q)?.monic())
}

/// Least common multiple, monic.
pub fn lcm(
    p: &LaurentPolynomial,
    q: &LaurentPolynomial,
) -> Result<LaurentPolynomial, AlgebraError> {
    if p.is_zero() || q.is_zero() {
        return Ok(LaurentPolynomial::zero(p.nvars()));
    }
    let g = gcd(p, q)?;
    let quotient = p.div_exact(&g)?.ok_or(AlgebraError::DivisionByZero)?;
    Ok(quotient.mul(q)?.monic())
}

fn degree(p: &LaurentPolynomial, k: usize) -> usize {
    p.degree_in(k).unwrap_or(0) as usize
}

fn gcd_rec(
    p: &LaurentPolynomial,
    q: &LaurentPolynomial,
) -> Result<LaurentPolynomial, AlgebraError> {
    let n = p.nvars();
    if p.is_zero() {
        return Ok(q.monic());
    }
    if q.is_zero() {
        return Ok(p.monic());
    }
    if p.is_constant() || q.is_constant() {
        return Ok(LaurentPolynomial::one(n));
    }
    if p == q {
        return Ok(p.monic());
    }
    let bounds: Vec<usize> = (0..n)
        .map(|k| match (degree(p, k), degree(q, k)) {
            (0, _) | (_, 0) => 0,
            (dp, dq) => image_degree_bound(p, q, k).unwrap_or(dp.min(dq)),
        })
        .collect();
    if bounds.iter().all(|&b| b == 0) {
        return Ok(LaurentPolynomial::one(n));
    }
    let (small, large) = if q.len() <= p.len() { (q, p) } else { (p, q) };
    if (0..n).all(|k| degree(small, k) == bounds[k]) && large.div_exact(small)?.is_some() {
        return Ok(small.monic());
    }
    // A zero bound means the gcd divides both contents in that variable.
    let present = |k: usize| degree(p, k) > 0 || degree(q, k) > 0;
    if let Some(k) = (0..n).find(|&k| bounds[k] == 0 && present(k)) {
        let cs = content(small, k)?;
        if cs.is_constant() {
            return Ok(LaurentPolynomial::one(n));
        }
        return gcd_rec(&content(large, k)?, &cs);
    }
    // Every variable left occurs in both arguments.
    let vars: Vec<usize> = (0..n).filter(|&k| present(k)).collect();
    let v = *vars
        .iter()
        .max_by_key(|&&k| (bounds[k], std::cmp::Reverse(k)))
        .expect("nonconstant arguments");
    if vars.len() == 1 {
        let g = univariate_gcd(dense(p, v), dense(q, v));
        return Ok(sparse(&g, n, v));
    }
    let k = *vars.iter().rev().find(|&&k| k != v).expect("two variables");
    interpolate_gcd(p, q, v, k, bounds[v])
}

/// The gcd as a polynomial in `x_v`, rebuilt from images at `x_k = alpha`.
fn interpolate_gcd(
    p: &LaurentPolynomial,
    q: &LaurentPolynomial,
    v: usize,
    k: usize,
    bound_v: usize,
) -> Result<LaurentPolynomial, AlgebraError> {
    let n = p.nvars();
    let cp = content(p, v)?;
    let cq = content(q, v)?;
    let c = gcd_rec(&cp, &cq)?;
    let a = exact(p, &cp)?;
    let b = exact(q, &cq)?;
    let (la, lb) = (leading_coefficient_in(&a, v), leading_coefficient_in(&b, v));
    let gamma = gcd_rec(&la, &lb)?;
    // H = gamma / lc(G) * G has at most this degree in x_k.
    let max_points = degree(&gamma, k) + degree(&a, k).min(degree(&b, k)) + 1;

    let mut dv = bound_v.min(degree(&a, v)).min(degree(&b, v));
    let mut points = 0;
    let mut h = LaurentPolynomial::zero(n);
    // Newton basis prod (x_k - alpha_i).
    let mut basis = LaurentPolynomial::one(n);
    for step in 1i64.. {
        let alpha = int(if step % 2 == 1 {
            (step + 1) / 2
        } else {
            -step / 2
        });
        let at = |f: &LaurentPolynomial| {
            let mut values = vec![None; n];
            values[k] = Some(alpha.clone());
            f.evaluate_partial(&values)
        };
        let gamma_a = at(&gamma)?;
        if at(&la)?.is_zero() || at(&lb)?.is_zero() || gamma_a.is_zero() {
            continue;
        }
        let g = gcd_rec(&at(&a)?, &at(&b)?)?;
        let d = degree(&g, v);
        if d > dv {
            continue;
        }
        if d < dv {
            dv = d;
            points = 0;
            h = LaurentPolynomial::zero(n);
            basis = LaurentPolynomial::one(n);
        }
        if d == 0 {
            return Ok(c);
        }
        // Scale the image so its leading coefficient in x_v is gamma(alpha).
        let Some(scale) = gamma_a.div_exact(&leading_coefficient_in(&g, v))? else {
            continue;
        };
        let g = g.mul(&scale)?;
        let correction = g.sub(&at(&h)?)?;
        let unchanged = correction.is_zero() && points > 0;
        if !correction.is_zero() {
            let weight = at(&basis)?
                .constant_value()
                .expect("Newton basis is univariate in x_k");
            h = h.add(&correction.mul(&basis)?.scale(&weight.recip()))?;
        }
        let linear =
            LaurentPolynomial::variable(n, k).sub(&LaurentPolynomial::constant(n, alpha))?;
        basis = basis.mul(&linear)?;
        points += 1;
        if unchanged || points >= max_points {
            let candidate = primitive_part(&h, v)?;
            if a.div_exact(&candidate)?.is_some() && b.div_exact(&candidate)?.is_some() {
                return Ok(c.mul(&candidate)?.monic());
            }
        }
    }
    unreachable!("the evaluation points are unbounded")
}

fn leading_coefficient_in(p: &LaurentPolynomial, v: usize) -> LaurentPolynomial {
    let (_, coeffs) = p.coefficients_in(v);
    coeffs
        .last()
        .cloned()
        .unwrap_or_else(|| LaurentPolynomial::zero(p.nvars()))
}

/// GCD of the coefficients of `p` viewed as a polynomial in `x_v`.
fn content(p: &LaurentPolynomial, v: usize) -> Result<LaurentPolynomial, AlgebraError> {
    let (_, coeffs) = p.coefficients_in(v);
    let mut nonzero: Vec<&LaurentPolynomial> = coeffs.iter().filter(|c| !c.is_zero()).collect();
    // Smallest first: a constant coefficient ends the fold at once.
    nonzero.sort_by_key(|c| c.len());
    let mut g = LaurentPolynomial::zero(p.nvars());
    for c in nonzero {
        g = gcd_rec(&g, c)?;
        if g.is_constant() {
            return Ok(LaurentPolynomial::one(p.nvars()));
        }
    }
    Ok(g.monic())
}

fn primitive_part(p: &LaurentPolynomial, v: usize) -> Result<LaurentPolynomial, AlgebraError> {
    let c = content(p, v)?;
    Ok(exact(p, &c)?.monic())
}

fn exact(p: &LaurentPolynomial, d: &LaurentPolynomial) -> Result<LaurentPolynomial, AlgebraError> {
    Ok(p.div_exact(d)?.expect("content divides its polynomial"))
}

/// Degree in `x_v` of the gcd of `p` and `q` with every other variable set to
/// a small integer, at a point where neither leading coefficient in `x_v`
/// vanishes. It bounds the degree in `x_v` of the true gcd from above.
fn image_degree_bound(p: &LaurentPolynomial, q: &LaurentPolynomial, v: usize) -> Option<usize> {
    let n = p.nvars();
    for attempt in 0..4i64 {
        let values: Vec<Option<Scalar>> = (0..n)
            .map(|k| (k != v).then(|| int(2 + attempt + 3 * k as i64 + (k as i64 * k as i64) % 5)))
            .collect();
        let pi = dense(&p.evaluate_partial(&values).ok()?, v);
        let qi = dense(&q.evaluate_partial(&values).ok()?, v);
        if pi.len() != degree(p, v) + 1 || qi.len() != degree(q, v) + 1 {
            continue;
        }
        return Some(univariate_gcd(pi, qi).len() - 1);
    }
    None
}

/// Dense coefficients of a polynomial in `x_v` alone, trailing zeros trimmed.
fn dense(p: &LaurentPolynomial, v: usize) -> Vec<Scalar> {
    let mut out = vec![Scalar::zero(); p.degree_in(v).map_or(0, |d| d as usize + 1)];
    for (e, c) in p.terms() {
        out[e.get(v) as usize] += c;
    }
    trim(&mut out);
    out
}

fn sparse(coeffs: &[Scalar], n: usize, v: usize) -> LaurentPolynomial {
    coeffs
        .iter()
        .enumerate()
        .fold(LaurentPolynomial::zero(n), |acc, (d, c)| {
            let mut e = ExponentVector::zero(n);
            e.set(v, d as i32);
            acc.add(&LaurentPolynomial::monomial(e, c.clone()))
                .expect("same ring")
        })
}

fn trim(a: &mut Vec<Scalar>) {
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
}

/// Monic gcd by Euclid's algorithm on dense coefficient vectors.
fn univariate_gcd(mut a: Vec<Scalar>, mut b: Vec<Scalar>) -> Vec<Scalar> {
    while !b.is_empty() {
        let lead = b.last().unwrap().clone();
        while a.len() >= b.len() {
            let f = a.last().unwrap() / &lead;
            let off = a.len() - b.len();
            for (i, c) in b.iter().enumerate() {
                a[off + i] -= &f * c;
            }
            a.pop();
            trim(&mut a);
        }
        std::mem::swap(&mut a, &mut b);
    }
    if let Some(lead) = a.last().cloned() {
        for c in &mut a {
            *c /= &lead;
        }
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::exponent::ExponentVector;
    use crate::algebra::scalar::int;

    fn poly(n: usize, terms: &[(&[i32], i64)]) -> LaurentPolynomial {
        LaurentPolynomial::from_terms(
            n,
            terms
                .iter()
                .map(|(e, c)| (ExponentVector::from(*e), int(*c))),
        )
        .unwrap()
    }

    #[test]
    fn shared_linear_factor() {
        let a = poly(2, &[(&[2, 0], 1), (&[0, 2], -1)]);
        let b = poly(2, &[(&[2, 0], 1), (&[1, 1], 2), (&[0, 2], 1)]);
        assert_eq!(gcd(&a, &b).unwrap(), poly(2, &[(&[1, 0], 1), (&[0, 1], 1)]));
    }

    #[test]
    fn coprime_variables() {
        let x = LaurentPolynomial::variable(2, 0);
        let y = LaurentPolynomial::variable(2, 1);
        assert!(gcd(&x, &y).unwrap().is_one());
    }

    #[test]
    fn gcd_with_zero_is_monic() {
        let a = poly(2, &[(&[1, 0], 3), (&[0, 1], 6)]);
        let z = LaurentPolynomial::zero(2);
        assert_eq!(
            gcd(&a, &z).unwrap(),
            poly(2, &[(&[1, 0], 1), (&[0, 1], 2)]).monic()
        );
        assert_eq!(gcd(&z, &a).unwrap(), a.monic());
    }

    #[test]
    fn factor_bookkeeping() {
        // (x+y)^2 (x-y) and (x+y)(x-y)^2 share (x+y)(x-y) = x^2 - y^2.
        let s = poly(2, &[(&[1, 0], 1), (&[0, 1], 1)]);
        let d = poly(2, &[(&[1, 0], 1), (&[0, 1], -1)]);
        let a = s.mul(&s).unwrap().mul(&d).unwrap();
        let b = s.mul(&d).unwrap().mul(&d).unwrap();
        let expected = poly(2, &[(&[2, 0], 1), (&[0, 2], -1)]).monic();
        assert_eq!(gcd(&a, &b).unwrap(), expected);
    }

    #[test]
    fn three_variable_content() {
        // z(x+1) and z(y+1) share z.
        let a = poly(3, &[(&[1, 0, 1], 1), (&[0, 0, 1], 1)]);
        let b = poly(3, &[(&[0, 1, 1], 1), (&[0, 0, 1], 1)]);
        assert_eq!(gcd(&a, &b).unwrap(), LaurentPolynomial::variable(3, 2));
    }

    #[test]
    fn rejects_laurent_input() {
        let a = poly(1, &[(&[-1], 1)]);
        let b = poly(1, &[(&[1], 1)]);
        assert_eq!(gcd(&a, &b), Err(AlgebraError::NotAPolynomial));
    }

    #[test]
    fn lcm_of_overlapping() {
        let s = poly(2, &[(&[1, 0], 1), (&[0, 1], 1)]);
        let x = LaurentPolynomial::variable(2, 0);
        let a = s.mul(&x).unwrap();
        let l = lcm(&a, &s).unwrap();
        assert_eq!(l, a.monic());
    }

    #[test]
    fn low_degree_variable_keeps_sequence_short() {
        // Both arguments are linear in x; eliminating z first used to stall.
        let q1 = poly(3, &[(&[0, 1, 0], -2), (&[1, 0, 1], 2), (&[0, 0, 2], 1)]);
        let q2 = poly(3, &[(&[0, 0, 1], 1), (&[0, 2, 0], 4), (&[0, 2, 1], 3)]);
        let h = poly(3, &[(&[1, 1, 0], 1), (&[0, 0, 0], -5)]);
        let a = q1.mul(&q2).unwrap().mul(&h).unwrap();
        let b = q1
            .mul(&h)
            .unwrap()
            .mul(&h)
            .unwrap()
            .add(&q1.mul(&h).unwrap())
            .unwrap();
        let expected = q1.mul(&h).unwrap().monic();
        assert_eq!(gcd(&a, &b).unwrap(), expected);
    }
}
