//! Small dense exact linear algebra over the rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::scalar::Scalar;

/// Row-major dense matrix of scalars.
pub type Matrix = Vec<Vec<Scalar>>;

pub fn zeros(rows: usize, cols: usize) -> Matrix {
    vec![vec![Scalar::zero(); cols]; rows]
}

pub fn identity(n: usize) -> Matrix {
    let mut m = zeros(n, n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = Scalar::one();
    }
    m
}

pub fn is_zero_matrix(m: &Matrix) -> bool {
    m.iter().all(|row| row.iter().all(Zero::is_zero))
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let cols = b.first().map_or(0, Vec::len);
    let mut out = zeros(a.len(), cols);
    for (i, row) in a.iter().enumerate() {
        for (k, aik) in row.iter().enumerate() {
            if aik.is_zero() {
                continue;
            }
            for j in 0..cols {
                if !b[k][j].is_zero() {
                    out[i][j] += aik * &b[k][j];
                }
            }
        }
    }
    out
}

pub fn mat_vec(a: &Matrix, v: &[Scalar]) -> Vec<Scalar> {
    a.iter()
        .map(|row| row.iter().zip(v).map(|(x, y)| x * y).sum())
        .collect()
}

pub fn mat_pow(a: &Matrix, k: u32) -> Matrix {
    let mut result = identity(a.len());
    for _ in 0..k {
        result = mat_mul(&result, a);
    }
    result
}

pub fn transpose(a: &Matrix) -> Matrix {
    let cols = a.first().map_or(0, Vec::len);
    (0..cols)
        .map(|j| a.iter().map(|row| row[j].clone()).collect())
        .collect()
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(m: &mut Matrix) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let factor = m[i][c].clone();
                let pivot_row = m[r][c..cols].to_vec();
                for (dst, src) in m[i][c..cols].iter_mut().zip(&pivot_row) {
                    *dst -= &factor * src;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(m: &Matrix) -> usize {
    let mut work = m.clone();
    rref(&mut work).len()
}

/// Solves `A x = b` exactly; `None` when inconsistent. Free variables are
/// set to zero.
pub fn solve(a: &Matrix, b: &[Scalar]) -> Option<Vec<Scalar>> {
    let cols = a.first().map_or(0, Vec::len);
    let mut aug: Matrix = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.contains(&cols) {
        return None;
    }
    let mut x = vec![Scalar::zero(); cols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = aug[r][cols].clone();
    }
    Some(x)
}

/// Basis of the right null space.
pub fn nullspace(a: &Matrix) -> Vec<Vec<Scalar>> {
    let cols = a.first().map_or(0, Vec::len);
    let mut m = a.clone();
    let pivots = rref(&mut m);
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Scalar::zero(); cols];
        v[free] = Scalar::one();
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = -m[r][free].clone();
        }
        basis.push(v);
    }
    basis
}

/// Coefficients `[c_0, ..., c_n]` of `det(t I - A) = sum c_k t^k`, via the
/// Faddeev-LeVerrier recursion (valid in characteristic zero).
pub fn characteristic_polynomial(a: &Matrix) -> Vec<Scalar> {
    let n = a.len();
    let mut coeffs = vec![Scalar::zero(); n + 1];
    coeffs[n] = Scalar::one();
    let mut m = zeros(n, n);
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I
        let mut next = mat_mul(a, &m);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] += &coeffs[n - k + 1];
        }
        m = next;
        let am = mat_mul(a, &m);
        let trace: Scalar = (0..n).map(|i| am[i][i].clone()).sum();
        coeffs[n - k] = -trace / Scalar::from_integer(BigInt::from(k));
    }
    coeffs
}

/// Distinct rational roots of `sum c_k t^k`, ascending.
pub fn rational_roots(coeffs: &[Scalar]) -> Vec<Scalar> {
    let mut c: Vec<Scalar> = coeffs.to_vec();
    while c.last().is_some_and(Zero::is_zero) {
        c.pop();
    }
    if c.len() <= 1 {
        return Vec::new();
    }
    let mut roots = Vec::new();
    let lead_zero = c.iter().take_while(|x| x.is_zero()).count();
    if lead_zero > 0 {
        roots.push(Scalar::zero());
        c.drain(..lead_zero);
    }
    if c.len() > 1 {
        // Clear denominators to an integer polynomial.
        let l = c.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let ints: Vec<BigInt> = c
            .iter()
            .map(|x| (x * Scalar::from_integer(l.clone())).to_integer())
            .collect();
        let a0 = ints[0].abs();
        let an = ints[ints.len() - 1].abs();
        for p in divisors(&a0) {
            for q in divisors(&an) {
                for sign in [1, -1] {
                    let cand = Scalar::new(&p * BigInt::from(sign), q.clone());
                    if !roots.contains(&cand) && eval(&c, &cand).is_zero() {
                        roots.push(cand);
                    }
                }
            }
        }
    }
    roots.sort();
    roots
}

pub fn eval(coeffs: &[Scalar], t: &Scalar) -> Scalar {
    coeffs
        .iter()
        .rev()
        .fold(Scalar::zero(), |acc, c| acc * t + c)
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut out = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= *n {
        if (n % &d).is_zero() {
            out.push(d.clone());
            let other = n / &d;
            if other != d {
                out.push(other);
            }
        }
        d += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::{int, ratio};

    fn m(rows: &[&[i64]]) -> Matrix {
        rows.iter()
            .map(|r| r.iter().map(|&x| int(x)).collect())
            .collect()
    }

    #[test]
    fn rank_and_nullspace() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        assert_eq!(rank(&a), 2);
        let ns = nullspace(&a);
        assert_eq!(ns.len(), 1);
        assert!(mat_vec(&a, &ns[0]).iter().all(Zero::is_zero));
    }

    #[test]
    fn solve_consistent_and_not() {
        let a = m(&[&[1, 1], &[1, -1]]);
        assert_eq!(solve(&a, &[int(2), int(0)]), Some(vec![int(1), int(1)]));
        let b = m(&[&[1, 1], &[2, 2]]);
        assert_eq!(solve(&b, &[int(1), int(3)]), None);
    }

    #[test]
    fn charpoly_matches_cofactor_expansion() {
        // det(tI - A) for A = [[2,1],[1,2]] is t^2 - 4t + 3.
        let a = m(&[&[2, 1], &[1, 2]]);
        assert_eq!(characteristic_polynomial(&a), vec![int(3), int(-4), int(1)]);
        let roots = rational_roots(&characteristic_polynomial(&a));
        assert_eq!(roots, vec![int(1), int(3)]);
    }

    #[test]
    fn roots_with_fractions() {
        // (2t - 1)(t + 3) t = 2t^3 + 5t^2 - 3t
        let c = vec![int(0), int(-3), int(5), int(2)];
        assert_eq!(rational_roots(&c), vec![int(-3), int(0), ratio(1, 2)]);
    }
}
