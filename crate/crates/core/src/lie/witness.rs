use crate::algebra::RationalFunction;
use crate::error::{Error, Result};
use crate::poisson::{bracket_rational, PoissonStructure};

/// Which hypothesis on `(f, g)` the transform started from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WitnessCase {
    /// `{f, g}` is a nonzero constant.
    ConstantBracket,
    /// `{f, g} = l g` for a nonzero scalar `l`.
    Eigenvector,
    /// `{f, g} != 0` and `{f, {f, g}} = 0`.
    SecondOrder,
}

#[derive(Clone, Debug, PartialEq)]
pub struct WitnessTransform {
    pub case: WitnessCase,
    pub pair: (RationalFunction, RationalFunction),
    /// The verified value of the bracket of `pair`.
    pub bracket: RationalFunction,
}

/// Moves between the equivalent hypotheses on a pair of functions.
///
/// From a constant bracket it returns `(f g, g)` with bracket `g` (after
/// scaling `f` so the constant is 1). From `{f, g} = l g` it returns
/// `(g, -f / (l g))` with bracket 1. From the second-order condition it
/// returns `(f, g / {f, g})` with bracket 1.
pub fn witness_transform(
    s: &PoissonStructure,
    f: &RationalFunction,
    g: &RationalFunction,
) -> Result<WitnessTransform> {
    let n = s.nvars();
    let h = bracket_rational(s, f, g)?;
    if h.is_zero() {
        return Err(Error::NotApplicable("{f, g} = 0".into()));
    }
    let (case, pair, expected) = if let Some(c) = h.as_scalar() {
        let f1 = f.scale(&c.recip());
        (
            WitnessCase::ConstantBracket,
            (f1.mul(g)?, g.clone()),
            g.clone(),
        )
    } else if let Some(l) = h.div(g)?.as_scalar() {
        let f1 = f.scale(&l.recip());
        let v = f1.div(g)?.neg();
        (
            WitnessCase::Eigenvector,
            (g.clone(), v),
            RationalFunction::one(n),
        )
    } else if bracket_rational(s, f, &h)?.is_zero() {
        (
            WitnessCase::SecondOrder,
            (f.clone(), g.div(&h)?),
            RationalFunction::one(n),
        )
    } else {
        return Err(Error::NotApplicable(
            "{f, g} is not constant, not a scalar multiple of g, and {f, {f, g}} != 0".into(),
        ));
    };
    let bracket = bracket_rational(s, &pair.0, &pair.1)?;
    if bracket != expected {
        return Err(Error::Internal(format!(
            "witness transform {case:?} fails its identity"
        )));
    }
    Ok(WitnessTransform {
        case,
        pair,
        bracket,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, ExponentVector};
    use crate::poisson::SkewMatrix;

    fn affine() -> PoissonStructure {
        let x = RationalFunction::variable(2, 0);
        PoissonStructure::from_upper(vec!["x".into(), "y".into()], [((0, 1), x)]).unwrap()
    }

    #[test]
    fn constant_to_eigenvector() {
        let s = affine();
        let f = s.variable(0).inv().unwrap();
        let g = RationalFunction::monomial(ExponentVector::new(vec![1, 1]), int(-1));
        let t = witness_transform(&s, &f, &g).unwrap();
        assert_eq!(t.case, WitnessCase::ConstantBracket);
        assert_eq!(t.pair.0, s.variable(1).neg());
        assert_eq!(t.bracket, g);
    }

    #[test]
    fn eigenvector_to_constant() {
        let s = affine();
        let t = witness_transform(&s, &s.variable(1), &s.variable(0)).unwrap();
        assert_eq!(t.case, WitnessCase::Eigenvector);
        assert_eq!(t.pair.0, s.variable(0));
        assert_eq!(t.pair.1, s.variable(1).div(&s.variable(0)).unwrap());
        assert!(t.bracket.is_one());
    }

    #[test]
    fn second_order() {
        // {x, y} = 1 + x: h = 1 + x, {x, h} = 0.
        let h = RationalFunction::one(2)
            .add(&RationalFunction::variable(2, 0))
            .unwrap();
        let s = PoissonStructure::from_upper(vec!["x".into(), "y".into()], [((0, 1), h)]).unwrap();
        let t = witness_transform(&s, &s.variable(0), &s.variable(1)).unwrap();
        assert_eq!(t.case, WitnessCase::SecondOrder);
        assert!(t.bracket.is_one());
    }

    #[test]
    fn log_canonical_is_not_applicable() {
        let w = SkewMatrix::from_upper(2, &[int(1)]).unwrap();
        let s = PoissonStructure::log_canonical_default(w).unwrap();
        let f = s.variable(0).add(&s.variable(1)).unwrap();
        let r = witness_transform(&s, &f, &s.variable(1));
        assert!(matches!(r, Err(Error::NotApplicable(_))));
    }
}
