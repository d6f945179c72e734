use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

use crate::error::AlgebraError;

/// Integer exponent tuple `I` of a Laurent monomial `x^I`.
///
/// Ordered graded-lexicographically: total degree first, ties broken by
/// comparing exponents from the last variable down, so `x_1 < x_2 < ... < x_n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExponentVector(SmallVec<[i32; 8]>);

impl ExponentVector {
    pub fn new(entries: impl Into<Vec<i32>>) -> Self {
        ExponentVector(SmallVec::from_vec(entries.into()))
    }

    pub fn zero(n: usize) -> Self {
        ExponentVector(SmallVec::from_elem(0, n))
    }

    /// The unit vector `e_k`.
    pub fn unit(n: usize, k: usize) -> Self {
        let mut v = Self::zero(n);
        v.0[k] = 1;
        v
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[i32] {
        &self.0
    }

    pub fn get(&self, k: usize) -> i32 {
        self.0[k]
    }

    pub(crate) fn set(&mut self, k: usize, value: i32) {
        self.0[k] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&e| e >= 0)
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().map(|&e| i64::from(e)).sum()
    }

    fn check_len(&self, other: &Self) -> Result<(), AlgebraError> {
        if self.len() != other.len() {
            return Err(AlgebraError::DimensionMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_len(other)?;
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_add(*b).ok_or(AlgebraError::ExponentOverflow))
            .collect::<Result<SmallVec<_>, _>>()
            .map(ExponentVector)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_len(other)?;
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b).ok_or(AlgebraError::ExponentOverflow))
            .collect::<Result<SmallVec<_>, _>>()
            .map(ExponentVector)
    }

    pub fn checked_neg(&self) -> Result<Self, AlgebraError> {
        self.0
            .iter()
            .map(|a| a.checked_neg().ok_or(AlgebraError::ExponentOverflow))
            .collect::<Result<SmallVec<_>, _>>()
            .map(ExponentVector)
    }

    pub fn checked_scale(&self, k: i32) -> Result<Self, AlgebraError> {
        self.0
            .iter()
            .map(|a| a.checked_mul(k).ok_or(AlgebraError::ExponentOverflow))
            .collect::<Result<SmallVec<_>, _>>()
            .map(ExponentVector)
    }

    /// Componentwise minimum.
    pub fn meet(&self, other: &Self) -> Self {
        ExponentVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.min(b))
                .collect(),
        )
    }

    /// True when `x^self` divides `x^other` in the polynomial ring.
    pub fn divides(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Reorders coordinates: entry `k` of the result is entry `perm[k]` of `self`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        ExponentVector(perm.iter().map(|&k| self.0[k]).collect())
    }
}

impl Ord for ExponentVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.iter().rev().cmp(other.0.iter().rev()))
    }
}

impl PartialOrd for ExponentVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.as_slice())
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, e) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

impl From<Vec<i32>> for ExponentVector {
    fn from(v: Vec<i32>) -> Self {
        ExponentVector::new(v)
    }
}

impl From<&[i32]> for ExponentVector {
    fn from(v: &[i32]) -> Self {
        ExponentVector(SmallVec::from_slice(v))
    }
}
