//! Seeded random inputs shared by the integration tests.
//!
//! `POISSON_LAB_SEED` overrides the default seed.

#![allow(dead_code)]

pub mod strategies;

use poisson_lab::algebra::int;
use poisson_lab::poisson::SkewMatrix;
use poisson_lab::{ExponentVector, LaurentPolynomial, PoissonStructure, RationalFunction, Scalar};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const DEFAULT_SEED: u64 = 0x5eed_2024;

pub fn seed() -> u64 {
    std::env::var("POISSON_LAB_SEED")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_SEED)
}

/// An independent stream per test so tests do not perturb each other.
pub fn rng(stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed());
    r.set_stream(stream);
    r
}

pub fn proptest_config(cases: u32) -> proptest::test_runner::Config {
    proptest::test_runner::Config {
        cases,
        rng_seed: proptest::test_runner::RngSeed::Fixed(seed()),
        failure_persistence: None,
        ..Default::default()
    }
}

pub fn omega(rng: &mut impl Rng, n: usize, bound: i64) -> SkewMatrix {
    let upper: Vec<Scalar> = (0..n * (n - 1) / 2)
        .map(|_| int(rng.random_range(-bound..=bound)))
        .collect();
    SkewMatrix::from_upper(n, &upper).unwrap()
}

pub fn log_canonical(rng: &mut impl Rng, n: usize, bound: i64) -> PoissonStructure {
    PoissonStructure::log_canonical_default(omega(rng, n, bound)).unwrap()
}

pub fn exponent(rng: &mut impl Rng, n: usize, bound: i32) -> ExponentVector {
    ExponentVector::new(
        (0..n)
            .map(|_| rng.random_range(-bound..=bound))
            .collect::<Vec<i32>>(),
    )
}

fn nonzero(rng: &mut impl Rng, bound: i64) -> i64 {
    loop {
        let c = rng.random_range(-bound..=bound);
        if c != 0 {
            return c;
        }
    }
}

/// At most `max_terms` terms with exponents in `[-bound, bound]`.
pub fn laurent(rng: &mut impl Rng, n: usize, max_terms: usize, bound: i32) -> LaurentPolynomial {
    let terms = rng.random_range(1..=max_terms);
    let mut p = LaurentPolynomial::zero(n);
    for _ in 0..terms {
        let m = LaurentPolynomial::monomial(exponent(rng, n, bound), int(nonzero(rng, 5)));
        p = p.add(&m).unwrap();
    }
    p
}

/// A nonzero polynomial of total degree at most `degree`.
pub fn polynomial(
    rng: &mut impl Rng,
    n: usize,
    degree: i32,
    max_terms: usize,
) -> LaurentPolynomial {
    loop {
        let terms = rng.random_range(1..=max_terms);
        let mut p = LaurentPolynomial::zero(n);
        for _ in 0..terms {
            let mut e = vec![0; n];
            for _ in 0..rng.random_range(0..=degree) {
                e[rng.random_range(0..n)] += 1;
            }
            let m = LaurentPolynomial::monomial(ExponentVector::new(e), int(nonzero(rng, 4)));
            p = p.add(&m).unwrap();
        }
        if !p.is_zero() {
            return p;
        }
    }
}

/// `p / q` with `p, q` of total degree at most `degree`, times a small
/// Laurent monomial.
pub fn rational(rng: &mut impl Rng, n: usize, degree: i32) -> RationalFunction {
    let p = polynomial(rng, n, degree, 4);
    let q = polynomial(rng, n, degree, 3);
    let shift = RationalFunction::monomial(exponent(rng, n, 1), int(1));
    RationalFunction::new(p, q).unwrap().mul(&shift).unwrap()
}

/// A power series `p / q` with `q(0) != 0` and nonnegative exponents.
pub fn power_series(rng: &mut impl Rng, n: usize, degree: i32) -> RationalFunction {
    let p = polynomial(rng, n, degree, 4);
    let q = polynomial(rng, n, degree, 3)
        .add(&LaurentPolynomial::constant(n, int(nonzero(rng, 3))))
        .unwrap();
    if q.coefficient(&ExponentVector::zero(n)) == int(0) {
        return RationalFunction::from_laurent(p);
    }
    RationalFunction::new(p, q).unwrap()
}

pub fn laurent_rf(rng: &mut impl Rng, n: usize, max_terms: usize, bound: i32) -> RationalFunction {
    RationalFunction::from_laurent(laurent(rng, n, max_terms, bound))
}

pub fn names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}
