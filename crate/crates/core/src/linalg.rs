//! Dense exact linear algebra over the rationals.
//!
//! Everything here is small (module dimensions and `2^m` quotient models), so
//! a plain row-major `Vec<Scalar>` with fraction-based Gauss-Jordan
//! elimination is fast enough and keeps every answer exact.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::scalar::{format_scalar, Scalar};

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    /// Builds a matrix from row vectors. All rows must share a length.
    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(n_rows * n_cols);
        for row in rows {
            assert_eq!(row.len(), n_cols, "ragged matrix rows");
            data.extend(row);
        }
        Matrix {
            rows: n_rows,
            cols: n_cols,
            data,
        }
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, columns: &[Vec<Scalar>]) -> Self {
        let mut m = Matrix::zeros(rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length mismatch");
            for (r, v) in col.iter().enumerate() {
                m[(r, c)] = v.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)].clone();
            }
        }
        t
    }

    pub fn scale(&self, factor: &Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| v * factor).collect(),
        }
    }

    pub fn trace(&self) -> Scalar {
        assert!(self.is_square());
        (0..self.rows).fold(Scalar::zero(), |acc, i| acc + &self[(i, i)])
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Scalar::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    /// Stacks `blocks` vertically.
    pub fn vstack(blocks: &[Matrix]) -> Matrix {
        let cols = blocks.first().map_or(0, |b| b.cols);
        let mut data = Vec::new();
        let mut rows = 0;
        for b in blocks {
            assert_eq!(b.cols, cols, "vstack column mismatch");
            data.extend(b.data.iter().cloned());
            rows += b.rows;
        }
        Matrix { rows, cols, data }
    }

    /// Places `blocks` side by side.
    pub fn hstack(blocks: &[Matrix]) -> Matrix {
        let rows = blocks.first().map_or(0, |b| b.rows);
        let cols: usize = blocks.iter().map(|b| b.cols).sum();
        let mut m = Matrix::zeros(rows, cols);
        let mut offset = 0;
        for b in blocks {
            assert_eq!(b.rows, rows, "hstack row mismatch");
            for r in 0..rows {
                for c in 0..b.cols {
                    m[(r, offset + c)] = b[(r, c)].clone();
                }
            }
            offset += b.cols;
        }
        m
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut lead_row = 0;
        for col in 0..m.cols {
            if lead_row == m.rows {
                break;
            }
            let Some(pivot) = (lead_row..m.rows).find(|&r| !m[(r, col)].is_zero()) else {
                continue;
            };
            m.swap_rows(pivot, lead_row);
            let inv = m[(lead_row, col)].recip();
            for c in col..m.cols {
                let v = &m[(lead_row, c)] * &inv;
                m[(lead_row, c)] = v;
            }
            for r in 0..m.rows {
                if r == lead_row || m[(r, col)].is_zero() {
                    continue;
                }
                let factor = m[(r, col)].clone();
                for c in col..m.cols {
                    if m[(lead_row, c)].is_zero() {
                        continue;
                    }
                    let v = &m[(r, c)] - &factor * &m[(lead_row, c)];
                    m[(r, c)] = v;
                }
            }
            pivots.push(col);
            lead_row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{v : self * v = 0}`, one vector per free column.
    pub fn nullspace(&self) -> Vec<Vec<Scalar>> {
        let (reduced, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![Scalar::zero(); self.cols];
            v[free] = Scalar::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -reduced[(row, free)].clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Basis of the column space, taken from the pivot columns of `self`.
    pub fn column_space(&self) -> Vec<Vec<Scalar>> {
        let (_, pivots) = self.rref();
        pivots.into_iter().map(|c| self.column(c)).collect()
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let (reduced, pivots) = Matrix::hstack(&[self.clone(), Matrix::identity(n)]).rref();
        if pivots.len() < n || (n > 0 && pivots[n - 1] != n - 1) {
            return None;
        }
        let mut inv = Matrix::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                inv[(r, c)] = reduced[(r, n + c)].clone();
            }
        }
        Some(inv)
    }

    pub fn pow(&self, exp: u32) -> Matrix {
        assert!(self.is_square());
        let mut result = Matrix::identity(self.rows);
        for _ in 0..exp {
            result = &result * self;
        }
        result
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Scalar;

    fn index(&self, (r, c): (usize, usize)) -> &Scalar {
        debug_assert!(r < self.rows && c < self.cols);
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Scalar {
        debug_assert!(r < self.rows && c < self.cols);
        &mut self.data[r * self.cols + c]
    }
}

impl Mul for &Matrix {
    type Output = Matrix;

    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = &rhs[(k, c)];
                    if !b.is_zero() {
                        out[(r, c)] += a * b;
                    }
                }
            }
        }
        out
    }
}

impl Add for &Matrix {
    type Output = Matrix;

    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;

    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &Matrix {
    type Output = Matrix;

    fn neg(self) -> Matrix {
        self.scale(&-Scalar::one())
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(format_scalar).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Dimension of `span(a) ∩ span(b)` is zero and together they span `dim`.
pub fn is_direct_complement(a: &[Vec<Scalar>], b: &[Vec<Scalar>], dim: usize) -> bool {
    if a.len() + b.len() != dim {
        return false;
    }
    let mut cols = a.to_vec();
    cols.extend_from_slice(b);
    Matrix::from_columns(dim, &cols).rank() == dim
}

/// Univariate polynomials over the rationals, coefficients stored from the
/// constant term upwards with no trailing zeros.
pub mod poly {
    use super::*;

    pub type Poly = Vec<Scalar>;

    fn trim(mut p: Poly) -> Poly {
        while p.last().is_some_and(Zero::is_zero) {
            p.pop();
        }
        p
    }

    pub fn degree(p: &Poly) -> Option<usize> {
        p.len().checked_sub(1)
    }

    pub fn derivative(p: &Poly) -> Poly {
        trim(
            p.iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Scalar::from_integer((k as i64).into()))
                .collect(),
        )
    }

    /// Remainder of `a` modulo a nonzero `b`.
    pub fn rem(a: &Poly, b: &Poly) -> Poly {
        let b = trim(b.clone());
        let db = degree(&b).expect("division by the zero polynomial");
        let lead = b[db].clone();
        let mut r = trim(a.clone());
        while let Some(dr) = degree(&r) {
            if dr < db {
                break;
            }
            let factor = &r[dr] / &lead;
            let shift = dr - db;
            for (k, c) in b.iter().enumerate() {
                let v = &r[k + shift] - &factor * c;
                r[k + shift] = v;
            }
            r = trim(r);
        }
        r
    }

    pub fn gcd(a: &Poly, b: &Poly) -> Poly {
        let mut x = trim(a.clone());
        let mut y = trim(b.clone());
        while !y.is_empty() {
            let r = rem(&x, &y);
            x = y;
            y = r;
        }
        match x.last().cloned() {
            Some(lead) => x.iter().map(|c| c / &lead).collect(),
            None => x,
        }
    }

    pub fn is_squarefree(p: &Poly) -> bool {
        degree(&gcd(p, &derivative(p))).unwrap_or(0) == 0
    }

    /// Monic minimal polynomial of a square matrix, found as the first linear
    /// dependency among `I, A, A^2, ...`.
    pub fn minimal_polynomial(a: &Matrix) -> Poly {
        assert!(a.is_square());
        let n = a.rows();
        let mut powers: Vec<Vec<Scalar>> = Vec::new();
        let mut current = Matrix::identity(n);
        for k in 0..=n {
            let flat: Vec<Scalar> = (0..n * n)
                .map(|i| current[(i / n, i % n)].clone())
                .collect();
            powers.push(flat);
            let stacked = Matrix::from_columns(n * n, &powers);
            let kernel = stacked.nullspace();
            if let Some(dep) = kernel.first() {
                let lead = dep[k].clone();
                debug_assert!(!lead.is_zero());
                return dep.iter().map(|c| c / &lead).collect();
            }
            current = &current * a;
        }
        unreachable!("Cayley-Hamilton bounds the minimal polynomial degree by n")
    }
}

#[cfg(test)]
mod tests {
    use super::poly::*;
    use super::*;
    use crate::scalar::int;

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| int(v)).collect())
                .collect(),
        )
    }

    #[test]
    fn nullspace_of_rank_one() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6]]);
        let kernel = a.nullspace();
        assert_eq!(kernel.len(), 2);
        for v in &kernel {
            assert!(a.apply(v).iter().all(Zero::is_zero));
        }
        assert_eq!(a.rank(), 1);
    }

    #[test]
    fn inverse_round_trip() {
        let a = m(&[&[2, 1], &[7, 4]]);
        let inv = a.inverse().unwrap();
        assert_eq!(&a * &inv, Matrix::identity(2));
        assert!(m(&[&[1, 2], &[2, 4]]).inverse().is_none());
        assert_eq!(Matrix::zeros(0, 0).inverse(), Some(Matrix::zeros(0, 0)));
    }

    #[test]
    fn jordan_block_minimal_polynomial_is_not_squarefree() {
        let j = m(&[&[0, 1], &[0, 0]]);
        let p = minimal_polynomial(&j);
        assert_eq!(p, vec![int(0), int(0), int(1)]);
        assert!(!is_squarefree(&p));
    }

    #[test]
    fn diagonal_minimal_polynomial_is_squarefree() {
        let d = m(&[&[1, 0, 0], &[0, -1, 0], &[0, 0, 1]]);
        let p = minimal_polynomial(&d);
        assert_eq!(p, vec![int(-1), int(0), int(1)]);
        assert!(is_squarefree(&p));
        assert!(is_squarefree(&minimal_polynomial(&Matrix::zeros(3, 3))));
    }

    #[test]
    fn direct_complement() {
        let e1 = vec![int(1), int(0)];
        let e2 = vec![int(0), int(1)];
        assert!(is_direct_complement(std::slice::from_ref(&e1), &[e2], 2));
        assert!(!is_direct_complement(
            std::slice::from_ref(&e1),
            std::slice::from_ref(&e1),
            2
        ));
    }
}
