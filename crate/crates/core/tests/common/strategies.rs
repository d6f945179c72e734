//! proptest strategies for the algebraic types.

use proptest::collection::vec;
use proptest::prelude::*;

use poisson_lab::algebra::int;
use poisson_lab::poisson::SkewMatrix;
use poisson_lab::{ExponentVector, LaurentPolynomial, RationalFunction};

pub fn exponent(n: usize, bound: i32) -> impl Strategy<Value = ExponentVector> {
    vec(-bound..=bound, n).prop_map(ExponentVector::new)
}

pub fn laurent(n: usize, max_terms: usize, bound: i32) -> impl Strategy<Value = LaurentPolynomial> {
    vec((exponent(n, bound), -5i64..=5), 0..=max_terms).prop_map(move |terms| {
        terms
            .into_iter()
            .fold(LaurentPolynomial::zero(n), |acc, (e, c)| {
                acc.add(&LaurentPolynomial::monomial(e, int(c))).unwrap()
            })
    })
}

pub fn polynomial(
    n: usize,
    max_terms: usize,
    degree: i32,
) -> impl Strategy<Value = LaurentPolynomial> {
    vec((vec(0..=degree, n), -4i64..=4), 1..=max_terms).prop_map(move |terms| {
        terms
            .into_iter()
            .fold(LaurentPolynomial::zero(n), |acc, (e, c)| {
                acc.add(&LaurentPolynomial::monomial(ExponentVector::new(e), int(c)))
                    .unwrap()
            })
    })
}

pub fn nonzero_polynomial(
    n: usize,
    max_terms: usize,
    degree: i32,
) -> impl Strategy<Value = LaurentPolynomial> {
    polynomial(n, max_terms, degree).prop_filter("nonzero", |p| !p.is_zero())
}

/// `x^V p / q` with small `p`, `q`.
pub fn rational(n: usize) -> impl Strategy<Value = RationalFunction> {
    (
        polynomial(n, 3, 2),
        nonzero_polynomial(n, 3, 2),
        exponent(n, 1),
    )
        .prop_map(move |(p, q, v)| {
            RationalFunction::new(p, q)
                .unwrap()
                .mul(&RationalFunction::monomial(v, int(1)))
                .unwrap()
        })
}

pub fn nonzero_rational(n: usize) -> impl Strategy<Value = RationalFunction> {
    rational(n).prop_filter("nonzero", |f| !f.is_zero())
}

pub fn omega(n: usize, bound: i64) -> impl Strategy<Value = SkewMatrix> {
    vec(-bound..=bound, n * (n - 1) / 2).prop_map(move |u| {
        SkewMatrix::from_upper(n, &u.into_iter().map(int).collect::<Vec<_>>()).unwrap()
    })
}

/// `p / q` with `q(0) != 0`: a genuine power series.
pub fn power_series(n: usize) -> impl Strategy<Value = RationalFunction> {
    (
        polynomial(n, 3, 2),
        polynomial(n, 2, 2),
        prop_oneof![-3i64..=-1, 1i64..=3],
    )
        .prop_filter_map("constant term", move |(p, q, c)| {
            let q = q.add(&LaurentPolynomial::constant(n, int(c))).unwrap();
            let zero = ExponentVector::zero(n);
            (q.coefficient(&zero) != int(0)).then(|| RationalFunction::new(p, q).unwrap())
        })
}

pub fn laurent_rf(
    n: usize,
    max_terms: usize,
    bound: i32,
) -> impl Strategy<Value = RationalFunction> {
    laurent(n, max_terms, bound).prop_map(RationalFunction::from_laurent)
}

/// A permutation of `0..n`.
pub fn order(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}
