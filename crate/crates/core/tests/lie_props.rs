mod common;

use proptest::collection::vec;
use proptest::prelude::*;

use common::strategies::{exponent, omega};
use poisson_lab::algebra::{int, jacobian_rank};
use poisson_lab::lie::{
    canonical_pair, lie_closure, plane_structure, span_rank, witness_transform, WitnessCase,
};
use poisson_lab::poisson::bracket_rational;
use poisson_lab::{PoissonStructure, RationalFunction, Scalar};

proptest! {
    #![proptest_config(common::proptest_config(32))]

    #[test]
    fn closure_reports_are_consistent(
        w in omega(3, 2),
        gens in vec((exponent(3, 1), -2i64..=2), 1..=3),
    ) {
        let s = PoissonStructure::log_canonical_default(w).unwrap();
        let gens: Vec<RationalFunction> = gens
            .into_iter()
            .filter(|(_, c)| *c != 0)
            .map(|(e, c)| RationalFunction::monomial(e, int(c)))
            .collect();
        let report = lie_closure(&s, &gens, 8).unwrap();
        prop_assert!(report.basis[0].is_one());
        prop_assert_eq!(report.dimension, report.basis.len());
        prop_assert_eq!(span_rank(&report.basis).unwrap(), report.dimension);
        if report.closed {
            // A finite closure under a log-canonical bracket commutes.
            prop_assert!(report.abelian);
            let d = report.dimension;
            for i in 0..d {
                for j in 0..d {
                    let c = &report.structure_constants[i][j];
                    let mut sum = RationalFunction::zero(3);
                    for (k, ck) in c.iter().enumerate() {
                        sum = sum.add(&report.basis[k].scale(ck)).unwrap();
                    }
                    let b = bracket_rational(&s, &report.basis[i], &report.basis[j]).unwrap();
                    prop_assert_eq!(b, sum);
                    let neg: Vec<Scalar> = report.structure_constants[j][i].iter().map(|x| -x).collect();
                    prop_assert_eq!(c, &neg);
                }
            }
        }
    }

    #[test]
    fn canonical_pairs_are_canonical(a in 0u32..=6, b in 0u32..=6) {
        let pair = canonical_pair(a, b).unwrap();
        prop_assert_eq!(pair.is_none(), (a, b) == (1, 1));
        if let Some(p) = pair {
            let s = plane_structure(a as i32, b as i32).unwrap();
            let c = bracket_rational(&s, &p.u, &p.v).unwrap();
            prop_assert_eq!(c.as_scalar(), Some(p.constant.clone()));
            prop_assert!(p.constant != int(0));
            prop_assert_eq!(jacobian_rank(&[p.u.clone(), p.v.clone()]).unwrap(), 2);

            let t = witness_transform(&s, &p.u, &p.v).unwrap();
            prop_assert_eq!(t.case, WitnessCase::ConstantBracket);
            prop_assert_eq!(&t.bracket, &t.pair.1);
            // From {f, g} = g back to a constant bracket.
            let back = witness_transform(&s, &t.pair.0, &t.pair.1).unwrap();
            prop_assert_eq!(back.case, WitnessCase::Eigenvector);
            prop_assert!(back.bracket.is_one());
        }
    }
}
