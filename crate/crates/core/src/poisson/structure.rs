use num_traits::Zero;

use super::skew::SkewMatrix;
use crate::algebra::{ExponentVector, RationalFunction, Scalar};
use crate::error::{AlgebraError, Error, Result};

/// How the structure functions are known to look.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum StructureKind {
    General,
    /// `{x_i, x_j} = w_ij x_i x_j`.
    LogCanonical(SkewMatrix),
}

/// A bracket on `Q(x_1, ..., x_n)` given by its structure functions
/// `pi_ij = {x_i, x_j}`.
///
/// Variables flagged central model symbolic parameters: their rows of the
/// structure table are identically zero, so they behave as constants under
/// the bracket.
#[derive(Clone, Debug)]
pub struct PoissonStructure {
    variables: Vec<String>,
    table: Vec<Vec<RationalFunction>>,
    central: Vec<bool>,
    kind: StructureKind,
    jacobi_validated: bool,
}

impl PoissonStructure {
    /// Log-canonical structure `{x_i, x_j} = w_ij x_i x_j`.
    pub fn log_canonical(variables: Vec<String>, omega: SkewMatrix) -> Result<Self> {
        let n = variables.len();
        if omega.dim() != n {
            return Err(AlgebraError::DimensionMismatch {
                left: n,
                right: omega.dim(),
            }
            .into());
        }
        let mut table = vec![vec![RationalFunction::zero(n); n]; n];
        for (i, row) in table.iter_mut().enumerate() {
            for (j, entry) in row.iter_mut().enumerate() {
                if i == j {
                    continue;
                }
                let e = ExponentVector::unit(n, i).checked_add(&ExponentVector::unit(n, j))?;
                *entry = RationalFunction::monomial(e, omega.get(i, j).clone());
            }
        }
        Ok(PoissonStructure {
            variables,
            table,
            central: vec![false; n],
            kind: StructureKind::LogCanonical(omega),
            jacobi_validated: false,
        })
    }

    /// Log-canonical structure on `x1, ..., xn`.
    pub fn log_canonical_default(omega: SkewMatrix) -> Result<Self> {
        let names = (1..=omega.dim()).map(|i| format!("x{i}")).collect();
        Self::log_canonical(names, omega)
    }

    /// A structure from its full table; the table must be skew.
    ///
    /// Log-canonical tables are recognized and tagged as such.
    pub fn from_table(variables: Vec<String>, table: Vec<Vec<RationalFunction>>) -> Result<Self> {
        let n = variables.len();
        if table.len() != n || table.iter().any(|r| r.len() != n) {
            return Err(Error::Malformed(format!("structure table must be {n}x{n}")));
        }
        for (i, row) in table.iter().enumerate() {
            for (j, entry) in row.iter().enumerate() {
                if entry.nvars() != n {
                    return Err(AlgebraError::DimensionMismatch {
                        left: n,
                        right: entry.nvars(),
                    }
                    .into());
                }
                if j >= i && *entry != table[j][i].neg() {
                    return Err(Error::NotSkew { row: i, col: j });
                }
            }
        }
        let kind = detect_log_canonical(&table)
            .map(StructureKind::LogCanonical)
            .unwrap_or(StructureKind::General);
        Ok(PoissonStructure {
            variables,
            table,
            central: vec![false; n],
            kind,
            jacobi_validated: false,
        })
    }

    /// A structure from its strict upper triangle `{x_i, x_j}`, `i < j`;
    /// pairs not listed are zero.
    pub fn from_upper(
        variables: Vec<String>,
        brackets: impl IntoIterator<Item = ((usize, usize), RationalFunction)>,
    ) -> Result<Self> {
        let n = variables.len();
        let mut table = vec![vec![RationalFunction::zero(n); n]; n];
        let mut seen = vec![vec![false; n]; n];
        for ((i, j), f) in brackets {
            if i >= n || j >= n {
                return Err(Error::IndexOutOfRange {
                    index: i.max(j),
                    dim: n,
                });
            }
            if i == j {
                if f.is_zero() {
                    continue;
                }
                return Err(Error::NotSkew { row: i, col: j });
            }
            let (a, b, f) = if i < j { (i, j, f) } else { (j, i, f.neg()) };
            if seen[a][b] {
                let pair = format!("{},{}", variables[a], variables[b]);
                if table[a][b] != f {
                    return Err(Error::NotSkew { row: a, col: b });
                }
                return Err(Error::DuplicatePair(pair));
            }
            seen[a][b] = true;
            table[b][a] = f.neg();
            table[a][b] = f;
        }
        Self::from_table(variables, table)
    }

    /// Marks variables as central parameters; fails if one has a nonzero row.
    pub fn with_central(mut self, names: &[&str]) -> Result<Self> {
        for name in names {
            let k = self
                .index_of(name)
                .ok_or_else(|| Error::Malformed(format!("unknown central variable {name}")))?;
            if self.table[k].iter().any(|e| !e.is_zero()) {
                return Err(Error::CentralNotCentral((*name).to_string()));
            }
            self.central[k] = true;
        }
        Ok(self)
    }

    pub fn nvars(&self) -> usize {
        self.variables.len()
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.variables.iter().position(|v| v == name)
    }

    /// `{x_i, x_j}`.
    pub fn structure_function(&self, i: usize, j: usize) -> &RationalFunction {
        &self.table[i][j]
    }

    pub fn table(&self) -> &[Vec<RationalFunction>] {
        &self.table
    }

    pub fn is_central(&self, k: usize) -> bool {
        self.central[k]
    }

    pub fn central_mask(&self) -> &[bool] {
        &self.central
    }

    pub fn kind(&self) -> &StructureKind {
        &self.kind
    }

    pub fn omega(&self) -> Option<&SkewMatrix> {
        match &self.kind {
            StructureKind::LogCanonical(w) => Some(w),
            StructureKind::General => None,
        }
    }

    pub fn is_log_canonical(&self) -> bool {
        matches!(self.kind, StructureKind::LogCanonical(_))
    }

    pub fn jacobi_validated(&self) -> bool {
        self.jacobi_validated
    }

    pub(crate) fn set_jacobi_validated(&mut self, ok: bool) {
        self.jacobi_validated = ok;
    }

    pub fn variable(&self, k: usize) -> RationalFunction {
        RationalFunction::variable(self.nvars(), k)
    }
}

/// Recognizes `pi_ij = w_ij x_i x_j` with scalar `w_ij`.
fn detect_log_canonical(table: &[Vec<RationalFunction>]) -> Option<SkewMatrix> {
    let n = table.len();
    let mut rows = vec![vec![Scalar::zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            let entry = &table[i][j];
            if entry.is_zero() {
                continue;
            }
            let e = ExponentVector::unit(n, i)
                .checked_add(&ExponentVector::unit(n, j))
                .ok()?;
            if entry.monomial_factor() != &e || !entry.denominator().is_one() {
                return None;
            }
            rows[i][j] = entry.numerator().constant_value()?;
        }
    }
    SkewMatrix::new(rows).ok()
}
