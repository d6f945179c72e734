//! Poisson structures on rational function fields and their brackets.

mod bracket;
mod jacobi;
mod logcan;
mod monomial3;
mod skew;
mod structure;

pub use bracket::{bracket_laurent, bracket_monomial, bracket_rational, m_form};
pub use jacobi::{jacobiator, structure_validate, ValidationReport};
pub use logcan::{check_log_canonical, LogCanonicalCheck};
pub use monomial3::{monomial3_family, monomial3_family_symbolic, Monomial3};
pub use skew::SkewMatrix;
pub use structure::{PoissonStructure, StructureKind};
