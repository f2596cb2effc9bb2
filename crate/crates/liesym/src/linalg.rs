//! Dense exact linear algebra over the rationals: reduced row echelon
//! form, nullspaces, particular solutions, and primitive integer kernels.
//!
//! Everything here is deterministic; the discovery operations build their
//! golden outputs on top of these conventions (echelon basis rows, free
//! variables pinned to zero, first nonzero entry positive for integer
//! kernel vectors).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::poly::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMatrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Rational>,
}

impl RatMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows_in: Vec<Vec<Rational>>) -> Self {
        let rows = rows_in.len();
        let cols = rows_in.first().map_or(0, |r| r.len());
        let mut data = Vec::with_capacity(rows * cols);
        for r in rows_in {
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend(r);
        }
        RatMatrix { rows, cols, data }
    }

    pub fn at(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// In-place reduced row echelon form; returns the pivot column of each
    /// pivot row, in order.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| !self.at(i, c).is_zero()) else {
                continue;
            };
            if pr != r {
                for j in 0..self.cols {
                    self.data.swap(pr * self.cols + j, r * self.cols + j);
                }
            }
            let inv = {
                let p = self.at(r, c).clone();
                Rational::one() / p
            };
            for j in c..self.cols {
                let v = self.at(r, j) * &inv;
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                if i != r && !self.at(i, c).is_zero() {
                    let factor = self.at(i, c).clone();
                    for j in c..self.cols {
                        let v = self.at(i, j) - &factor * self.at(r, j);
                        self.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Echelon basis of the row space: RREF rows with zero rows dropped.
    pub fn row_space_basis(&self) -> Vec<Vec<Rational>> {
        let mut m = self.clone();
        let pivots = m.rref();
        (0..pivots.len()).map(|i| m.row(i).to_vec()).collect()
    }

    /// Nullspace basis in the standard RREF parameterization: one vector per
    /// free column, that free coordinate set to 1.
    pub fn nullspace(&self) -> Vec<Vec<Rational>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut v = vec![Rational::zero(); self.cols];
            v[free] = Rational::one();
            for (pi, &pc) in pivots.iter().enumerate() {
                v[pc] = -m.at(pi, free).clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Particular solution of `self * x = b` with every free variable set to
    /// zero; `None` when inconsistent.
    pub fn solve(&self, b: &[Rational]) -> Option<Vec<Rational>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = RatMatrix::zero(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.at(i, j).clone());
            }
            aug.set(i, self.cols, b[i].clone());
        }
        let pivots = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None; // pivot in the augmented column
        }
        let mut x = vec![Rational::zero(); self.cols];
        for (pi, &pc) in pivots.iter().enumerate() {
            x[pc] = aug.at(pi, self.cols).clone();
        }
        Some(x)
    }

    /// Exact determinant (square matrices).
    pub fn determinant(&self) -> Rational {
        assert_eq!(self.rows, self.cols, "determinant needs a square matrix");
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Rational::one();
        for c in 0..n {
            let Some(pr) = (c..n).find(|&i| !m.at(i, c).is_zero()) else {
                return Rational::zero();
            };
            if pr != c {
                for j in 0..n {
                    m.data.swap(pr * n + j, c * n + j);
                }
                det = -det;
            }
            let pivot = m.at(c, c).clone();
            det *= &pivot;
            for i in c + 1..n {
                if !m.at(i, c).is_zero() {
                    let factor = m.at(i, c) / &pivot;
                    for j in c..n {
                        let v = m.at(i, j) - &factor * m.at(c, j);
                        m.set(i, j, v);
                    }
                }
            }
        }
        det
    }

    /// Inverse; `None` when singular.
    pub fn inverse(&self) -> Option<RatMatrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = RatMatrix::zero(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.at(i, j).clone());
            }
            aug.set(i, n + i, Rational::one());
        }
        let pivots = aug.rref();
        if pivots.len() != n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
            return None;
        }
        let mut inv = RatMatrix::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, aug.at(i, n + j).clone());
            }
        }
        Some(inv)
    }
}

/// Scales a rational vector to a primitive integer vector (coprime entries)
/// whose first nonzero entry is positive. Zero vectors map to zero.
pub fn primitive_integer_vector(v: &[Rational]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for r in v {
        lcm = lcm.lcm(r.denom());
    }
    let ints: Vec<BigInt> = v.iter().map(|r| (r * Rational::from_integer(lcm.clone())).to_integer()).collect();
    let mut gcd = BigInt::zero();
    for x in &ints {
        gcd = gcd.gcd(x);
    }
    if gcd.is_zero() {
        return ints;
    }
    let mut out: Vec<BigInt> = ints.iter().map(|x| x / &gcd).collect();
    if let Some(first) = out.iter().find(|x| !x.is_zero()) {
        if first.is_negative() {
            for x in &mut out {
                *x = -x.clone();
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{rat, rat_frac};

    #[test]
    fn rref_and_rank() {
        let mut m = RatMatrix::from_rows(vec![
            vec![rat(1), rat(2), rat(3)],
            vec![rat(2), rat(4), rat(6)],
            vec![rat(0), rat(1), rat(1)],
        ]);
        let pivots = m.rref();
        assert_eq!(pivots, vec![0, 1]);
        assert_eq!(m.row(0), &[rat(1), rat(0), rat(1)]);
        assert_eq!(m.row(1), &[rat(0), rat(1), rat(1)]);
    }

    #[test]
    fn nullspace_annihilates() {
        let m = RatMatrix::from_rows(vec![
            vec![rat(1), rat(1), rat(0), rat(0)],
            vec![rat(0), rat(0), rat(1), rat(1)],
        ]);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 2);
        for v in &ns {
            for i in 0..m.rows {
                let dot: Rational = (0..m.cols).map(|j| m.at(i, j) * &v[j]).sum();
                assert!(dot.is_zero());
            }
        }
    }

    #[test]
    fn solve_prefers_zero_free_vars() {
        // x + y = 2 has the particular solution (2, 0) under our convention.
        let m = RatMatrix::from_rows(vec![vec![rat(1), rat(1)]]);
        assert_eq!(m.solve(&[rat(2)]).unwrap(), vec![rat(2), rat(0)]);
        // inconsistent system
        let m = RatMatrix::from_rows(vec![vec![rat(1), rat(1)], vec![rat(1), rat(1)]]);
        assert!(m.solve(&[rat(0), rat(1)]).is_none());
    }

    #[test]
    fn determinant_and_inverse() {
        let m = RatMatrix::from_rows(vec![vec![rat(2), rat(1)], vec![rat(7), rat(4)]]);
        assert_eq!(m.determinant(), rat(1));
        let inv = m.inverse().unwrap();
        assert_eq!(inv.at(0, 0), &rat(4));
        assert_eq!(inv.at(0, 1), &rat(-1));
        let sing = RatMatrix::from_rows(vec![vec![rat(1), rat(2)], vec![rat(2), rat(4)]]);
        assert_eq!(sing.determinant(), rat(0));
        assert!(sing.inverse().is_none());
    }

    #[test]
    fn primitive_vector_convention() {
        let v = vec![rat_frac(-3, 2), rat(1), rat_frac(1, 2)];
        let p = primitive_integer_vector(&v);
        let expect: Vec<BigInt> = [3, -2, -1].iter().map(|&x| BigInt::from(x)).collect();
        assert_eq!(p, expect);
    }
}
