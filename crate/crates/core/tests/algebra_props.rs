mod common;

use proptest::prelude::*;

use common::strategies::{laurent, nonzero_polynomial, nonzero_rational, polynomial, rational};
use poisson_lab::algebra::gcd;
use poisson_lab::{LaurentPolynomial, RationalFunction};

const N: usize = 3;

proptest! {
    #![proptest_config(common::proptest_config(64))]

    #[test]
    fn laurent_ring_axioms(a in laurent(N, 5, 3), b in laurent(N, 5, 3), c in laurent(N, 5, 3)) {
        prop_assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        prop_assert_eq!(a.add(&b).unwrap().add(&c).unwrap(), a.add(&b.add(&c).unwrap()).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
        prop_assert_eq!(
            a.mul(&b.add(&c).unwrap()).unwrap(),
            a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
        );
        prop_assert!(a.sub(&a).unwrap().is_zero());
        prop_assert_eq!(a.mul(&LaurentPolynomial::one(N)).unwrap(), a.clone());
    }

    #[test]
    fn laurent_product_rule(a in laurent(N, 5, 3), b in laurent(N, 5, 3), k in 0..N) {
        let lhs = a.mul(&b).unwrap().partial(k).unwrap();
        let rhs = a.partial(k).unwrap().mul(&b).unwrap()
            .add(&a.mul(&b.partial(k).unwrap()).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn rational_field_axioms(f in rational(N), g in rational(N), h in nonzero_rational(N)) {
        prop_assert_eq!(f.add(&g).unwrap(), g.add(&f).unwrap());
        prop_assert_eq!(f.mul(&g).unwrap(), g.mul(&f).unwrap());
        prop_assert_eq!(
            f.add(&g).unwrap().mul(&h).unwrap(),
            f.mul(&h).unwrap().add(&g.mul(&h).unwrap()).unwrap()
        );
        prop_assert!(h.mul(&h.inv().unwrap()).unwrap().is_one());
        prop_assert_eq!(f.mul(&h).unwrap().div(&h).unwrap(), f.clone());
        prop_assert_eq!(f.sub(&g).unwrap().add(&g).unwrap(), f);
    }

    #[test]
    fn quotient_rule(f in rational(N), g in rational(N), k in 0..N) {
        let lhs = f.mul(&g).unwrap().partial(k).unwrap();
        let rhs = f.partial(k).unwrap().mul(&g).unwrap()
            .add(&f.mul(&g.partial(k).unwrap()).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn normalization_is_idempotent(f in rational(N)) {
        let again = RationalFunction::new(f.full_numerator(), f.denominator().clone()).unwrap();
        prop_assert_eq!(&again, &f);
        if !f.is_zero() {
            prop_assert!(f.denominator().leading_coefficient().unwrap() == &poisson_lab::algebra::int(1));
        }
    }

    #[test]
    fn gcd_divides_and_leaves_coprime_cofactors(
        p in nonzero_polynomial(N, 3, 2),
        q in nonzero_polynomial(N, 3, 2),
        r in nonzero_polynomial(N, 2, 1),
    ) {
        let a = p.mul(&r).unwrap();
        let b = q.mul(&r).unwrap();
        let g = gcd(&a, &b).unwrap();
        let ca = a.div_exact(&g).unwrap();
        let cb = b.div_exact(&g).unwrap();
        prop_assert!(ca.is_some() && cb.is_some());
        prop_assert!(gcd(&ca.unwrap(), &cb.unwrap()).unwrap().is_one());
        // The shared factor r is always picked up.
        prop_assert!(g.div_exact(&r.monic()).unwrap().is_some());
    }

    #[test]
    fn gcd_with_zero(p in polynomial(N, 3, 2)) {
        let z = LaurentPolynomial::zero(N);
        prop_assert_eq!(gcd(&p, &z).unwrap(), p.monic());
    }
}
