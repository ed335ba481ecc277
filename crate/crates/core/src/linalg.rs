//! Dense matrices over a [`Field`] with exact Gaussian elimination.

use crate::field::{Field, Rational};
use std::fmt;

#[derive(Clone, PartialEq)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Field> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries((0..self.rows).map(|r| self.row(r))).finish()
    }
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![F::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = F::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[F] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<F> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = &other[(k, c)];
                    if !b.is_zero() {
                        out[(r, c)] = out[(r, c)].clone() + a.clone() * b.clone();
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(self.cols, v.len(), "dimension mismatch in product");
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(F::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.clone() + b.clone()).collect(),
        }
    }

    pub fn scale(&self, s: &F) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a.clone() * s.clone()).collect(),
        }
    }

    pub fn trace(&self) -> F {
        (0..self.rows.min(self.cols)).fold(F::zero(), |acc, i| acc + self[(i, i)].clone())
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|r| (0..r).all(|c| self[(r, c)] == self[(c, r)]))
    }

    /// Submatrix picking the given rows and columns.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(rows.len(), cols.len(), |r, c| self[(rows[r], cols[c])].clone())
    }

    /// Row-reduced echelon form together with the pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m[(r, col)].is_zero()) else {
                continue;
            };
            m.swap_rows(row, p);
            let inv = m[(row, col)].inv().expect("nonzero pivot");
            for c in col..m.cols {
                m[(row, c)] = m[(row, c)].clone() * inv.clone();
            }
            for r in 0..m.rows {
                if r != row && !m[(r, col)].is_zero() {
                    let factor = m[(r, col)].clone();
                    for c in col..m.cols {
                        let v = m[(row, c)].clone();
                        if !v.is_zero() {
                            m[(r, c)] = m[(r, c)].clone() - factor.clone() * v;
                        }
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    /// Indices of a maximal set of linearly independent columns (the first
    /// such set in column order).
    pub fn independent_columns(&self) -> Vec<usize> {
        self.forward_pivots()
    }

    pub fn rank(&self) -> usize {
        self.forward_pivots().len()
    }

    /// Forward elimination only; cheaper than a full rref when just the pivot
    /// structure is needed.
    fn forward_pivots(&self) -> Vec<usize> {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m[(r, col)].is_zero()) else {
                continue;
            };
            m.swap_rows(row, p);
            let inv = m[(row, col)].inv().expect("nonzero pivot");
            for r in row + 1..m.rows {
                if m[(r, col)].is_zero() {
                    continue;
                }
                let factor = m[(r, col)].clone() * inv.clone();
                for c in col..m.cols {
                    let v = m[(row, c)].clone();
                    if !v.is_zero() {
                        m[(r, c)] = m[(r, c)].clone() - factor.clone() * v;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    /// Inverse of a square matrix, `None` when singular.
    pub fn inverse(&self) -> Option<Self> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return Some(Self::zeros(0, 0));
        }
        let aug = Self::from_fn(n, 2 * n, |r, c| {
            if c < n {
                self[(r, c)].clone()
            } else if c - n == r {
                F::one()
            } else {
                F::zero()
            }
        });
        let (reduced, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(Self::from_fn(n, n, |r, c| reduced[(r, c + n)].clone()))
    }

    pub fn determinant(&self) -> F {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let mut m = self.clone();
        let n = self.rows;
        let mut det = F::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !m[(r, col)].is_zero()) else {
                return F::zero();
            };
            if p != col {
                m.swap_rows(col, p);
                det = -det;
            }
            let pivot = m[(col, col)].clone();
            det = det * pivot.clone();
            let inv = pivot.inv().expect("nonzero pivot");
            for r in col + 1..n {
                if m[(r, col)].is_zero() {
                    continue;
                }
                let factor = m[(r, col)].clone() * inv.clone();
                for c in col..n {
                    let v = m[(col, c)].clone();
                    m[(r, c)] = m[(r, c)].clone() - factor.clone() * v;
                }
            }
        }
        det
    }

    /// Basis of the right kernel {x : M x = 0}.
    pub fn kernel(&self) -> Vec<Vec<F>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![F::zero(); self.cols];
                v[f] = F::one();
                for (row, &p) in pivots.iter().enumerate() {
                    v[p] = -r[(row, f)].clone();
                }
                v
            })
            .collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Matrix<G> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }
}

impl<F> std::ops::Index<(usize, usize)> for Matrix<F> {
    type Output = F;
    fn index(&self, (r, c): (usize, usize)) -> &F {
        &self.data[r * self.cols + c]
    }
}

impl<F> std::ops::IndexMut<(usize, usize)> for Matrix<F> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut F {
        &mut self.data[r * self.cols + c]
    }
}

/// Signature of a symmetric rational matrix: (positive, negative, zero)
/// counts, by congruence diagonalization (Sylvester's law of inertia).
pub fn inertia(sym: &Matrix<Rational>) -> (usize, usize, usize) {
    assert!(sym.is_symmetric(), "inertia needs a symmetric matrix");
    let mut m = sym.clone();
    let n = m.rows();
    let (mut pos, mut neg, mut zero) = (0, 0, 0);
    let mut active: Vec<usize> = (0..n).collect();
    while !active.is_empty() {
        let pivot = active.iter().copied().find(|&i| !Field::is_zero(&m[(i, i)]));
        let p = match pivot {
            Some(p) => p,
            None => {
                // All remaining diagonal entries vanish: pair a row with an
                // off-diagonal partner so that a nonzero diagonal appears.
                let pair = active.iter().copied().find_map(|i| {
                    active.iter().copied().find(|&j| j != i && !Field::is_zero(&m[(i, j)])).map(|j| (i, j))
                });
                match pair {
                    Some((i, j)) => {
                        // Replace e_i by e_i + e_j: congruence transform.
                        for c in 0..n {
                            let v = m[(j, c)].clone();
                            m[(i, c)] = m[(i, c)].clone() + v;
                        }
                        for r in 0..n {
                            let v = m[(r, j)].clone();
                            m[(r, i)] = m[(r, i)].clone() + v;
                        }
                        i
                    }
                    None => {
                        zero += active.len();
                        break;
                    }
                }
            }
        };
        let d = m[(p, p)].clone();
        if d > <Rational as Field>::zero() {
            pos += 1;
        } else {
            neg += 1;
        }
        let inv = d.recip();
        let rest: Vec<usize> = active.iter().copied().filter(|&i| i != p).collect();
        for &r in &rest {
            let f = m[(r, p)].clone() * inv.clone();
            if Field::is_zero(&f) {
                continue;
            }
            for &c in &rest {
                let v = m[(p, c)].clone();
                m[(r, c)] = m[(r, c)].clone() - f.clone() * v;
            }
        }
        active = rest;
    }
    (pos, neg, zero)
}

/// Converts an integer matrix to rationals.
pub fn int_matrix(rows: &[Vec<i64>]) -> Matrix<Rational> {
    Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| <Rational as Field>::from_i64(v)).collect()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{q, qi};

    #[test]
    fn inverse_roundtrip() {
        let a = int_matrix(&[vec![2, -1], vec![-1, 2]]);
        let inv = a.inverse().unwrap();
        assert_eq!(inv, Matrix::from_rows(vec![vec![q(2, 3), q(1, 3)], vec![q(1, 3), q(2, 3)]]));
        assert_eq!(a.mul(&inv), Matrix::identity(2));
    }

    #[test]
    fn kernel_of_affine_a1() {
        let a = int_matrix(&[vec![2, -2], vec![-2, 2]]);
        let k = a.kernel();
        assert_eq!(k, vec![vec![qi(1), qi(1)]]);
        assert_eq!(a.determinant(), qi(0));
    }

    #[test]
    fn inertia_counts() {
        assert_eq!(inertia(&int_matrix(&[vec![2, -1], vec![-1, 2]])), (2, 0, 0));
        assert_eq!(inertia(&int_matrix(&[vec![2, -2], vec![-2, 2]])), (1, 0, 1));
        assert_eq!(inertia(&int_matrix(&[vec![2, -3], vec![-3, 2]])), (1, 1, 0));
        assert_eq!(inertia(&int_matrix(&[vec![0, 1], vec![1, 0]])), (1, 1, 0));
    }

    #[test]
    fn independent_columns_skip_dependent_ones() {
        let m = int_matrix(&[vec![1, 2, 0], vec![2, 4, 1]]);
        assert_eq!(m.independent_columns(), vec![0, 2]);
        assert_eq!(m.rank(), 2);
    }
}
