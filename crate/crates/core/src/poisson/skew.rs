use std::fmt;

use num_traits::Zero;

use crate::algebra::{format_scalar, Scalar};
use crate::error::{Error, Result};

/// A skew-symmetric scalar matrix `(w_ij)`, validated at construction.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SkewMatrix {
    n: usize,
    entries: Vec<Scalar>,
}

impl SkewMatrix {
    pub fn new(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let n = rows.len();
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Malformed(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
        }
        for (i, row) in rows.iter().enumerate() {
            for (j, x) in row.iter().enumerate().skip(i) {
                if *x != -rows[j][i].clone() {
                    return Err(Error::NotSkew { row: i, col: j });
                }
            }
        }
        Ok(SkewMatrix {
            n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Builds from the strict upper triangle, row by row:
    /// `w_12, w_13, ..., w_1n, w_23, ...`.
    pub fn from_upper(n: usize, upper: &[Scalar]) -> Result<Self> {
        if upper.len() != n * n.saturating_sub(1) / 2 {
            return Err(Error::Malformed(format!(
                "{} upper entries for dimension {n}",
                upper.len()
            )));
        }
        let mut m = SkewMatrix::zero(n);
        let mut it = upper.iter();
        for i in 0..n {
            for j in i + 1..n {
                let w = it.next().expect("length checked").clone();
                m.entries[j * n + i] = -w.clone();
                m.entries[i * n + j] = w;
            }
        }
        Ok(m)
    }

    pub fn zero(n: usize) -> Self {
        SkewMatrix {
            n,
            entries: vec![Scalar::zero(); n * n],
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<Scalar>> {
        self.entries
            .chunks(self.n.max(1))
            .map(<[Scalar]>::to_vec)
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }
}

impl fmt::Display for SkewMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|j| format_scalar(self.get(i, j))).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, ratio};

    #[test]
    fn rejects_asymmetric_and_diagonal() {
        let bad = vec![vec![int(0), int(1)], vec![int(1), int(0)]];
        assert!(matches!(
            SkewMatrix::new(bad),
            Err(Error::NotSkew { row: 0, col: 1 })
        ));
        let diag = vec![vec![int(1), int(0)], vec![int(0), int(0)]];
        assert!(matches!(
            SkewMatrix::new(diag),
            Err(Error::NotSkew { row: 0, col: 0 })
        ));
    }

    #[test]
    fn upper_triangle() {
        let m = SkewMatrix::from_upper(3, &[int(1), ratio(-1, 2), int(3)]).unwrap();
        assert_eq!(m.get(0, 2), &ratio(-1, 2));
        assert_eq!(m.get(2, 0), &ratio(1, 2));
        assert_eq!(m.get(2, 1), &int(-3));
        assert_eq!(SkewMatrix::new(m.rows()).unwrap(), m);
    }
}
