//! Elements of the field `Q(x_1, ..., x_n)` in canonical form.

use num_traits::{One, Zero};

use super::exponent::ExponentVector;
use super::gcd::gcd;
use super::laurent::LaurentPolynomial;
use super::scalar::Scalar;
use crate::error::AlgebraError;

/// A rational function `x^V * p / q`.
///
/// Canonical form:
/// - `p` and `q` have nonnegative exponents and no variable divides either;
/// - `gcd(p, q) = 1`;
/// - `q` is monic in graded-lexicographic order.
///
/// Canonical forms are unique, so equality is structural. Zero is stored as
/// `x^0 * 0 / 1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RationalFunction {
    monomial: ExponentVector,
    numerator: LaurentPolynomial,
    denominator: LaurentPolynomial,
}

impl RationalFunction {
    /// Brings `num / den` to canonical form.
    pub fn new(num: LaurentPolynomial, den: LaurentPolynomial) -> Result<Self, AlgebraError> {
        Self::normalize(num, den, true)
    }

    /// Canonical form when the caller knows `num` and `den` share no
    /// nonmonomial factor.
    fn from_coprime(num: LaurentPolynomial, den: LaurentPolynomial) -> Result<Self, AlgebraError> {
        Self::normalize(num, den, false)
    }

    fn normalize(
        num: LaurentPolynomial,
        den: LaurentPolynomial,
        reduce: bool,
    ) -> Result<Self, AlgebraError> {
        if num.nvars() != den.nvars() {
            return Err(AlgebraError::DimensionMismatch {
                left: num.nvars(),
                right: den.nvars(),
            });
        }
        let n = num.nvars();
        let Some(val_den) = den.valuation() else {
            return Err(AlgebraError::DivisionByZero);
        };
        let Some(val_num) = num.valuation() else {
            return Ok(Self::zero(n));
        };
        let monomial = val_num.checked_sub(&val_den)?;
        let mut p = num.shift(&val_num.checked_neg()?)?;
        let mut q = den.shift(&val_den.checked_neg()?)?;
        if reduce && !q.is_constant() && !p.is_constant() {
            let g = gcd(&p, &q)?;
            if !g.is_one() {
                p = p.div_exact(&g)?.expect("gcd divides numerator");
                q = q.div_exact(&g)?.expect("gcd divides denominator");
            }
        }
        let lc = q.leading_coefficient().cloned().unwrap_or_else(Scalar::one);
        if !lc.is_one() {
            let inv = lc.recip();
            p = p.scale(&inv);
            q = q.scale(&inv);
        }
        Ok(RationalFunction {
            monomial,
            numerator: p,
            denominator: q,
        })
    }

    pub fn zero(n: usize) -> Self {
        RationalFunction {
            monomial: ExponentVector::zero(n),
            numerator: LaurentPolynomial::zero(n),
            denominator: LaurentPolynomial::one(n),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, Scalar::one())
    }

    pub fn constant(n: usize, c: Scalar) -> Self {
        RationalFunction {
            monomial: ExponentVector::zero(n),
            numerator: LaurentPolynomial::constant(n, c),
            denominator: LaurentPolynomial::one(n),
        }
    }

    pub fn variable(n: usize, k: usize) -> Self {
        RationalFunction {
            monomial: ExponentVector::unit(n, k),
            numerator: LaurentPolynomial::one(n),
            denominator: LaurentPolynomial::one(n),
        }
    }

    /// `c * x^I`.
    pub fn monomial(exponent: ExponentVector, c: Scalar) -> Self {
        let n = exponent.len();
        if c.is_zero() {
            return Self::zero(n);
        }
        RationalFunction {
            monomial: exponent,
            numerator: LaurentPolynomial::constant(n, c),
            denominator: LaurentPolynomial::one(n),
        }
    }

    pub fn from_laurent(p: LaurentPolynomial) -> Self {
        let n = p.nvars();
        Self::new(p, LaurentPolynomial::one(n)).expect("denominator one is nonzero")
    }

    pub fn nvars(&self) -> usize {
        self.monomial.len()
    }

    pub fn monomial_factor(&self) -> &ExponentVector {
        &self.monomial
    }

    pub fn numerator(&self) -> &LaurentPolynomial {
        &self.numerator
    }

    pub fn denominator(&self) -> &LaurentPolynomial {
        &self.denominator
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.as_scalar().is_some_and(|c| c.is_one())
    }

    /// The value when this is a constant function.
    pub fn as_scalar(&self) -> Option<Scalar> {
        if !self.monomial.is_zero() || !self.denominator.is_one() {
            return None;
        }
        self.numerator.constant_value()
    }

    /// `x^V * p` as a Laurent polynomial, when the denominator is one.
    pub fn as_laurent(&self) -> Option<LaurentPolynomial> {
        self.denominator.is_one().then(|| self.full_numerator())
    }

    /// `x^V * p`.
    pub fn full_numerator(&self) -> LaurentPolynomial {
        self.numerator
            .shift(&self.monomial)
            .expect("canonical numerator exponents fit")
    }

    fn check_dims(&self, other: &Self) -> Result<(), AlgebraError> {
        if self.nvars() != other.nvars() {
            return Err(AlgebraError::DimensionMismatch {
                left: self.nvars(),
                right: other.nvars(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_dims(other)?;
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        let a = self.full_numerator();
        let b = other.full_numerator();
        let (q1, q2) = (&self.denominator, &other.denominator);
        if q1 == q2 {
            return Self::new(a.add(&b)?, q1.clone());
        }
        // With d = gcd(q1, q2) the sum a q2/d + b q1/d is coprime to
        // q1/d and q2/d, so only d can cancel.
        let d = if q1.is_constant() || q2.is_constant() {
            LaurentPolynomial::one(self.nvars())
        } else {
            gcd(q1, q2)?
        };
        if d.is_one() {
            let num = a.mul(q2)?.add(&b.mul(q1)?)?;
            return Self::from_coprime(num, q1.mul(q2)?);
        }
        let r1 = q1.div_exact(&d)?.expect("gcd divides");
        let r2 = q2.div_exact(&d)?.expect("gcd divides");
        let num = a.mul(&r2)?.add(&b.mul(&r1)?)?;
        let Some(val) = num.valuation() else {
            return Ok(Self::zero(self.nvars()));
        };
        let (num, d) = cancel(&num.shift(&val.checked_neg()?)?, &d)?;
        Self::from_coprime(num.shift(&val)?, d.mul(&r1)?.mul(&r2)?)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_dims(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.nvars()));
        }
        let monomial = self.monomial.checked_add(&other.monomial)?;
        // Cross-cancel first so the final gcd works on smaller inputs.
        let (p1, q2) = cancel(&self.numerator, &other.denominator)?;
        let (p2, q1) = cancel(&other.numerator, &self.denominator)?;
        let num = p1.mul(&p2)?.shift(&monomial)?;
        Self::from_coprime(num, q1.mul(&q2)?)
    }

    pub fn div(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.mul(&other.inv()?)
    }

    pub fn inv(&self) -> Result<Self, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        let lc = self
            .numerator
            .leading_coefficient()
            .cloned()
            .expect("nonzero numerator");
        let inv = lc.recip();
        Ok(RationalFunction {
            monomial: self.monomial.checked_neg()?,
            numerator: self.denominator.scale(&inv),
            denominator: self.numerator.scale(&inv),
        })
    }

    pub fn neg(&self) -> Self {
        RationalFunction {
            monomial: self.monomial.clone(),
            numerator: self.numerator.neg(),
            denominator: self.denominator.clone(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        if s.is_zero() {
            return Self::zero(self.nvars());
        }
        RationalFunction {
            monomial: self.monomial.clone(),
            numerator: self.numerator.scale(s),
            denominator: self.denominator.clone(),
        }
    }

    /// Integer power; negative exponents invert.
    pub fn pow(&self, k: i32) -> Result<Self, AlgebraError> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let e = k.unsigned_abs();
        if e == 0 {
            return Ok(Self::one(self.nvars()));
        }
        // Powers of coprime polynomials stay coprime.
        Ok(RationalFunction {
            monomial: base.monomial.checked_scale(e as i32)?,
            numerator: base.numerator.pow(e)?,
            denominator: base.denominator.pow(e)?,
        })
    }

    /// `d f / d x_k`, in canonical form.
    pub fn partial(&self, k: usize) -> Result<Self, AlgebraError> {
        let num = self.partial_numerator(k)?;
        Self::from_factored(num, &[(&self.denominator, 2)])
    }

    /// Quotient-rule derivative as a numerator over `q^2`:
    /// `d(x^V p/q)/dx_k = x^(V - e_k) [v_k p q + x_k (p_k q - p q_k)] / q^2`.
    pub(crate) fn partial_numerator(&self, k: usize) -> Result<LaurentPolynomial, AlgebraError> {
        let n = self.nvars();
        if k >= n {
            return Err(AlgebraError::VariableOutOfRange { index: k, nvars: n });
        }
        let p = &self.numerator;
        let q = &self.denominator;
        let vk = self.monomial.get(k);
        let mut shift = self.monomial.clone();
        shift.set(k, vk.checked_sub(1).ok_or(AlgebraError::ExponentOverflow)?);
        let xk = ExponentVector::unit(n, k);
        let vk = Scalar::from_integer(vk.into());
        let inner = if q.is_constant() {
            // q is exactly one in canonical form.
            p.scale(&vk).add(&p.partial(k)?.shift(&xk)?)?
        } else {
            let cross = p.partial(k)?.mul(q)?.sub(&p.mul(&q.partial(k)?)?)?;
            p.mul(q)?.scale(&vk).add(&cross.shift(&xk)?)?
        };
        inner.shift(&shift)
    }

    /// Canonical form of `num / prod r^k` for a denominator known as a
    /// product of powers. Reducing against each small factor in turn is far
    /// cheaper than one gcd with the expanded product.
    pub(crate) fn from_factored(
        num: LaurentPolynomial,
        factors: &[(&LaurentPolynomial, u32)],
    ) -> Result<Self, AlgebraError> {
        let n = num.nvars();
        if factors.iter().any(|(r, _)| r.is_zero()) {
            return Err(AlgebraError::DivisionByZero);
        }
        let Some(val) = num.valuation() else {
            return Ok(Self::zero(n));
        };
        let mut p = num.shift(&val.checked_neg()?)?;
        let mut den = LaurentPolynomial::one(n);
        for &(r, k) in factors {
            let mut left = k;
            while left > 0 {
                let g = if p.is_constant() || r.is_constant() {
                    LaurentPolynomial::one(n)
                } else {
                    gcd(&p, r)?
                };
                if g.is_one() {
                    den = den.mul(&r.pow(left)?)?;
                    break;
                }
                // What is left of this copy of r is coprime to what is left of p.
                p = p.div_exact(&g)?.expect("gcd divides");
                den = den.mul(&r.div_exact(&g)?.expect("gcd divides"))?;
                left -= 1;
            }
        }
        Self::from_coprime(p.shift(&val)?, den)
    }

    /// Substitutes scalar values for some variables.
    pub fn evaluate_partial(&self, values: &[Option<Scalar>]) -> Result<Self, AlgebraError> {
        let num = self.full_numerator().evaluate_partial(values)?;
        let den = self.denominator.evaluate_partial(values)?;
        Self::new(num, den)
    }
}

/// Removes `gcd(a, b)` from both arguments.
fn cancel(
    a: &LaurentPolynomial,
    b: &LaurentPolynomial,
) -> Result<(LaurentPolynomial, LaurentPolynomial), AlgebraError> {
    if a.is_constant() || b.is_constant() {
        return Ok((a.clone(), b.clone()));
    }
    let g = gcd(a, b)?;
    if g.is_one() {
        return Ok((a.clone(), b.clone()));
    }
    Ok((
        a.div_exact(&g)?.expect("gcd divides"),
        b.div_exact(&g)?.expect("gcd divides"),
    ))
}
