//! Dense matrices over exact rationals.
//!
//! The implementation is deliberately plain: row-major `Vec<Rat>`, Gaussian
//! elimination with exact pivoting, Faddeev–LeVerrier characteristic
//! polynomials. Everything stays in `Rat`, so results are exact and no
//! tolerance ever enters a comparison.

use crate::rat::{rat, Rat};
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MatrixError {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("matrix is singular")]
    Singular,
    #[error("linear system is inconsistent")]
    Inconsistent,
    #[error("linear system is underdetermined")]
    Underdetermined,
}

/// Dense rational matrix with explicit shape.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rat>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            entries: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rat::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        RatMatrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_int_rows(rows: &[Vec<i64>]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|&x| rat(x)).collect())
                .collect(),
        )
    }

    /// Column vector from rational entries.
    pub fn col_vec(entries: Vec<Rat>) -> Self {
        let rows = entries.len();
        RatMatrix { rows, cols: 1, entries }
    }

    pub fn col_vec_int(entries: &[i64]) -> Self {
        Self::col_vec(entries.iter().map(|&x| rat(x)).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rat {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rat) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "add shape");
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a + b)
            .collect();
        RatMatrix { rows: self.rows, cols: self.cols, entries }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "sub shape");
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a - b)
            .collect();
        RatMatrix { rows: self.rows, cols: self.cols, entries }
    }

    pub fn neg(&self) -> Self {
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|a| -a).collect(),
        }
    }

    pub fn scale(&self, s: &Rat) -> Self {
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|a| a * s).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "mul shape: {}x{} * {}x{}", self.rows, self.cols, other.rows, other.cols);
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        let v = out.get(r, c) + a * b;
                        out.set(r, c, v);
                    }
                }
            }
        }
        out
    }

    pub fn pow(&self, mut e: u32) -> Self {
        assert!(self.is_square(), "pow needs a square matrix");
        let mut base = self.clone();
        let mut acc = Self::identity(self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Matrix-vector product (vector given as a slice).
    pub fn apply(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(self.cols, v.len(), "apply shape");
        (0..self.rows)
            .map(|r| {
                (0..self.cols)
                    .map(|c| self.get(r, c) * &v[c])
                    .fold(Rat::zero(), |a, b| a + b)
            })
            .collect()
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|r| (0..r).all(|c| self.get(r, c) == self.get(c, r)))
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| {
                (0..=r).all(|c| *self.get(r, c) == -self.get(c, r))
            })
    }

    /// Row echelon reduction in place; returns the pivot columns.
    fn row_reduce(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| !self.get(r, col).is_zero()) else {
                continue;
            };
            self.swap_rows(row, p);
            let inv = Rat::one() / self.get(row, col).clone();
            for c in col..self.cols {
                let v = self.get(row, c) * &inv;
                self.set(row, c, v);
            }
            for r in 0..self.rows {
                if r != row && !self.get(r, col).is_zero() {
                    let f = self.get(r, col).clone();
                    for c in col..self.cols {
                        let v = self.get(r, c) - &f * self.get(row, c);
                        self.set(r, c, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.row_reduce().len()
    }

    pub fn det(&self) -> Rat {
        assert!(self.is_square(), "det needs a square matrix");
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Rat::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !m.get(r, col).is_zero()) else {
                return Rat::zero();
            };
            if p != col {
                m.swap_rows(col, p);
                det = -det;
            }
            let pivot = m.get(col, col).clone();
            det *= &pivot;
            let inv = Rat::one() / pivot;
            for r in col + 1..n {
                if !m.get(r, col).is_zero() {
                    let f = m.get(r, col) * &inv;
                    for c in col..n {
                        let v = m.get(r, c) - &f * m.get(col, c);
                        m.set(r, c, v);
                    }
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Result<Self, MatrixError> {
        assert!(self.is_square(), "inverse needs a square matrix");
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, n + r, Rat::one());
        }
        let pivots = aug.row_reduce();
        if pivots.len() < n || pivots.iter().any(|&p| p >= n) {
            return Err(MatrixError::Singular);
        }
        let mut inv = Self::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                inv.set(r, c, aug.get(r, n + c).clone());
            }
        }
        Ok(inv)
    }

    /// Solves `self * x = rhs` for a unique solution; reports inconsistent or
    /// underdetermined systems as errors.
    pub fn solve(&self, rhs: &[Rat]) -> Result<Vec<Rat>, MatrixError> {
        if rhs.len() != self.rows {
            return Err(MatrixError::ShapeMismatch(format!(
                "rhs length {} vs {} rows",
                rhs.len(),
                self.rows
            )));
        }
        let mut aug = Self::zeros(self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, self.cols, rhs[r].clone());
        }
        let pivots = aug.row_reduce();
        if pivots.contains(&self.cols) {
            return Err(MatrixError::Inconsistent);
        }
        if pivots.len() < self.cols {
            return Err(MatrixError::Underdetermined);
        }
        let mut x = vec![Rat::zero(); self.cols];
        for (row, &col) in pivots.iter().enumerate() {
            x[col] = aug.get(row, self.cols).clone();
        }
        Ok(x)
    }

    pub fn trace(&self) -> Rat {
        assert!(self.is_square(), "trace needs a square matrix");
        (0..self.rows).map(|i| self.get(i, i).clone()).fold(Rat::zero(), |a, b| a + b)
    }

    /// Characteristic polynomial det(λI − M), returned as coefficients
    /// `[c_0, c_1, …, c_n]` with `c_n = 1` (Faddeev–LeVerrier).
    pub fn char_poly(&self) -> Vec<Rat> {
        assert!(self.is_square(), "char_poly needs a square matrix");
        let n = self.rows;
        let mut coeffs = vec![Rat::zero(); n + 1];
        coeffs[n] = Rat::one();
        let mut aux = Self::identity(n);
        for k in 1..=n {
            if k > 1 {
                let mut shifted = self.mul(&aux);
                let c = coeffs[n - k + 1].clone();
                for i in 0..n {
                    let v = shifted.get(i, i) + &c;
                    shifted.set(i, i, v);
                }
                aux = shifted;
            }
            let prod = self.mul(&aux);
            coeffs[n - k] = -(prod.trace() / rat(k as i64));
        }
        coeffs
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::ratio;

    #[test]
    fn det_and_inverse() {
        let m = RatMatrix::from_int_rows(&[vec![2, 1], vec![1, 1]]);
        assert_eq!(m.det(), rat(1));
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), RatMatrix::identity(2));
        assert_eq!(inv.mul(&m), RatMatrix::identity(2));
    }

    #[test]
    fn singular_matrix_rejected() {
        let m = RatMatrix::from_int_rows(&[vec![1, 2], vec![2, 4]]);
        assert_eq!(m.det(), rat(0));
        assert_eq!(m.inverse(), Err(MatrixError::Singular));
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn solve_unique_inconsistent_underdetermined() {
        let m = RatMatrix::from_int_rows(&[vec![1, 1], vec![1, -1]]);
        let x = m.solve(&[rat(3), rat(1)]).unwrap();
        assert_eq!(x, vec![rat(2), rat(1)]);

        let sing = RatMatrix::from_int_rows(&[vec![1, 2], vec![2, 4]]);
        assert_eq!(sing.solve(&[rat(1), rat(3)]), Err(MatrixError::Inconsistent));
        assert_eq!(sing.solve(&[rat(1), rat(2)]), Err(MatrixError::Underdetermined));

        // Overdetermined but consistent.
        let tall = RatMatrix::from_int_rows(&[vec![1], vec![2], vec![3]]);
        let x = tall.solve(&[ratio(1, 2), rat(1), ratio(3, 2)]).unwrap();
        assert_eq!(x, vec![ratio(1, 2)]);
    }

    #[test]
    fn char_poly_companion() {
        // Companion matrix of λ^3 - 2λ - 5.
        let m = RatMatrix::from_int_rows(&[vec![0, 0, 5], vec![1, 0, 2], vec![0, 1, 0]]);
        let cp = m.char_poly();
        assert_eq!(cp, vec![rat(-5), rat(-2), rat(0), rat(1)]);
    }

    #[test]
    fn char_poly_matches_det_at_points() {
        let m = RatMatrix::from_int_rows(&[vec![1, 2, 0], vec![-1, 0, 3], vec![2, 2, 2]]);
        let cp = m.char_poly();
        for t in -3i64..=3 {
            let shifted = RatMatrix::identity(3).scale(&rat(t)).sub(&m);
            let direct = shifted.det();
            let horner = cp.iter().rev().fold(Rat::zero(), |acc, c| acc * rat(t) + c);
            assert_eq!(direct, horner);
        }
    }

    #[test]
    fn pow_and_apply() {
        let m = RatMatrix::from_int_rows(&[vec![0, 1], vec![1, 1]]);
        let m5 = m.pow(5);
        assert_eq!(*m5.get(0, 1), rat(5));
        assert_eq!(*m5.get(1, 1), rat(8));
        assert_eq!(m.apply(&[rat(1), rat(0)]), vec![rat(0), rat(1)]);
    }
}
