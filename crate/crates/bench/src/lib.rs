//! Fixed inputs shared by the benchmarks in `benches/`.

use poisson_lab::expr::parse_expr;
use poisson_lab::poisson::SkewMatrix;
use poisson_lab::{PoissonStructure, RationalFunction, Scalar};

pub fn names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

/// Log-canonical structure with entries cycling through -3..=3.
pub fn structure(n: usize) -> PoissonStructure {
    let upper: Vec<Scalar> = (0..n * (n - 1) / 2)
        .map(|k| Scalar::from_integer(((k as i64 * 5) % 7 - 3).into()))
        .collect();
    let omega = SkewMatrix::from_upper(n, &upper).expect("valid dimension");
    PoissonStructure::log_canonical(names(n), omega).expect("matching dimension")
}

/// A Laurent polynomial in `n` variables with `terms` terms, exponents in -3..=3.
pub fn laurent(n: usize, terms: usize, salt: i64) -> RationalFunction {
    let mut text = String::new();
    for t in 0..terms as i64 {
        let coeff = (t * 7 + salt) % 5 - 2;
        let coeff = if coeff == 0 { 1 } else { coeff };
        if t > 0 {
            text.push_str(" + ");
        }
        text.push_str(&format!("({coeff})"));
        for k in 0..n as i64 {
            let e = (t * 3 + k * 5 + salt) % 7 - 3;
            text.push_str(&format!("*x{}^({e})", k + 1));
        }
    }
    parse(n, &text)
}

pub fn parse(n: usize, text: &str) -> RationalFunction {
    parse_expr(text, &names(n)).expect("fixture parses")
}
