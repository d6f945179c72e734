use num_traits::{One, Signed};

use crate::algebra::{format_scalar, ExponentVector, LaurentPolynomial, RationalFunction};
use crate::poisson::PoissonStructure;

/// Formats `f` with factors inside each monomial in variable order.
///
/// Terms appear in ascending graded-lex order; `parse_expr` reads the
/// output back to the same function.
pub fn format_expr(f: &RationalFunction, names: &[String]) -> String {
    let order: Vec<usize> = (0..names.len()).collect();
    format_with_factor_order(f, names, &order)
}

/// Formats `f` with monomial factors printed in the order of `factor_order`
/// (a permutation of the variable indices).
pub fn format_with_factor_order(
    f: &RationalFunction,
    names: &[String],
    factor_order: &[usize],
) -> String {
    let num = format_poly(&f.full_numerator(), names, factor_order);
    if f.denominator().is_one() {
        return num;
    }
    let den = format_poly(f.denominator(), names, factor_order);
    if f.full_numerator().len() > 1 {
        format!("({num})/({den})")
    } else {
        format!("{num}/({den})")
    }
}

/// Central parameters first, then the remaining variables, each group in
/// declaration order.
pub fn structure_factor_order(s: &PoissonStructure) -> Vec<usize> {
    let n = s.nvars();
    let mut order: Vec<usize> = (0..n).filter(|&k| s.is_central(k)).collect();
    order.extend((0..n).filter(|&k| !s.is_central(k)));
    order
}

/// Formats `f` over the variables of `s`, parameters leading.
pub fn format_in(s: &PoissonStructure, f: &RationalFunction) -> String {
    format_with_factor_order(f, s.variables(), &structure_factor_order(s))
}

fn format_poly(p: &LaurentPolynomial, names: &[String], order: &[usize]) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (e, c)) in p.terms().enumerate() {
        let negative = c.is_negative();
        if i == 0 {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let abs = c.abs();
        let mono = format_monomial(e, names, order);
        match (mono.is_empty(), abs.is_one()) {
            (true, _) => out.push_str(&format_scalar(&abs)),
            (false, true) => out.push_str(&mono),
            (false, false) => {
                out.push_str(&format_scalar(&abs));
                out.push('*');
                out.push_str(&mono);
            }
        }
    }
    out
}

fn format_monomial(e: &ExponentVector, names: &[String], order: &[usize]) -> String {
    let mut parts = Vec::new();
    for &k in order {
        match e.get(k) {
            0 => {}
            1 => parts.push(names[k].clone()),
            d => parts.push(format!("{}^{d}", names[k])),
        }
    }
    parts.join("*")
}
