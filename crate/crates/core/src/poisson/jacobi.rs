use super::bracket::bracket_rational;
use super::structure::PoissonStructure;
use crate::algebra::RationalFunction;
use crate::error::Result;

/// `{f,{g,h}} + {g,{h,f}} + {h,{f,g}}`, evaluated with the derivative formula.
pub fn jacobiator(
    s: &PoissonStructure,
    f: &RationalFunction,
    g: &RationalFunction,
    h: &RationalFunction,
) -> Result<RationalFunction> {
    let a = bracket_rational(s, f, &bracket_rational(s, g, h)?)?;
    let b = bracket_rational(s, g, &bracket_rational(s, h, f)?)?;
    let c = bracket_rational(s, h, &bracket_rational(s, f, g)?)?;
    Ok(a.add(&b)?.add(&c)?)
}

/// Outcome of checking the Jacobi identity on every coordinate triple.
#[derive(Clone, Debug, PartialEq)]
pub struct ValidationReport {
    pub triples_checked: usize,
    /// Failing triples `(i, j, k)`, `i < j < k`, with their jacobiators.
    pub failures: Vec<((usize, usize, usize), RationalFunction)>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Runs the Jacobi identity on all coordinate triples and records the
/// result on the structure. Skewness is guaranteed by construction.
pub fn structure_validate(s: &mut PoissonStructure) -> Result<ValidationReport> {
    let n = s.nvars();
    let mut report = ValidationReport {
        triples_checked: 0,
        failures: Vec::new(),
    };
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                report.triples_checked += 1;
                // {x_i, pi_jk} + {x_j, pi_ki} + {x_k, pi_ij}
                let xi = s.variable(i);
                let xj = s.variable(j);
                let xk = s.variable(k);
                let t = bracket_rational(s, &xi, s.structure_function(j, k))?
                    .add(&bracket_rational(s, &xj, s.structure_function(k, i))?)?
                    .add(&bracket_rational(s, &xk, s.structure_function(i, j))?)?;
                if !t.is_zero() {
                    report.failures.push(((i, j, k), t));
                }
            }
        }
    }
    s.set_jacobi_validated(report.is_valid());
    Ok(report)
}
