//! Dense matrices over an exact field, with Gauss–Jordan elimination.

use crate::scalar::{Field, Scalar};
use crate::LinalgError;
use std::fmt;

/// Dense row-major matrix. All entries share one field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn zero(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix { field, rows, cols, entries: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: Field, rows: Vec<Vec<Scalar>>) -> Matrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |v| v.len());
        let mut entries = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            for e in &row {
                assert_eq!(e.field(), field, "entry field mismatch");
            }
            entries.extend(row);
        }
        Matrix { field, rows: r, cols: c, entries }
    }

    /// Integer-literal constructor, mainly for tests and fixtures.
    pub fn from_i64(field: Field, rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(
            field,
            rows.iter().map(|r| r.iter().map(|&n| field.from_i64(n)).collect()).collect(),
        )
    }

    pub fn from_cols(field: Field, cols: Vec<Vec<Scalar>>) -> Matrix {
        Matrix::from_rows(field, cols).transpose()
    }

    pub fn from_flat_i64(field: Field, rows: usize, cols: usize, entries: &[i64]) -> Matrix {
        assert_eq!(entries.len(), rows * cols);
        Matrix { field, rows, cols, entries: entries.iter().map(|&n| field.from_i64(n)).collect() }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        assert_eq!(v.field(), self.field, "entry field mismatch");
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn row_vecs(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zero(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.get(r, c).clone());
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        let entries =
            self.entries.iter().zip(&other.entries).map(|(a, b)| a.add(b)).collect();
        Matrix { field: self.field, rows: self.rows, cols: self.cols, entries }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        let entries =
            self.entries.iter().zip(&other.entries).map(|(a, b)| a.sub(b)).collect();
        Matrix { field: self.field, rows: self.rows, cols: self.cols, entries }
    }

    pub fn scale(&self, k: &Scalar) -> Matrix {
        let entries = self.entries.iter().map(|a| a.mul(k)).collect();
        Matrix { field: self.field, rows: self.rows, cols: self.cols, entries }
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "inner dimension mismatch");
        assert_eq!(self.field, other.field, "field mismatch");
        let mut out = Matrix::zero(self.field, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.get(r, c).add(&a.mul(b));
                    out.set(r, c, cur);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "vector length mismatch");
        let mut out = vec![self.field.zero(); self.rows];
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for r in 0..self.rows {
                let a = self.get(r, j);
                if !a.is_zero() {
                    out[r] = out[r].add(&a.mul(x));
                }
            }
        }
        out
    }

    /// Stack other below self.
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols, "column count mismatch");
        assert_eq!(self.field, other.field, "field mismatch");
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        Matrix { field: self.field, rows: self.rows + other.rows, cols: self.cols, entries }
    }

    /// Glue other to the right of self.
    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows, "row count mismatch");
        assert_eq!(self.field, other.field, "field mismatch");
        let mut rows = Vec::with_capacity(self.rows);
        for r in 0..self.rows {
            let mut row = self.row(r).to_vec();
            row.extend_from_slice(other.row(r));
            rows.push(row);
        }
        Matrix::from_rows(self.field, rows)
    }

    /// Reduced row echelon form and its pivot columns. The RREF of a matrix
    /// is unique, so this doubles as a canonical form for row spaces.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut pivot_row = 0;
        for col in 0..m.cols {
            if pivot_row == m.rows {
                break;
            }
            let found = (pivot_row..m.rows).find(|&r| !m.get(r, col).is_zero());
            let r0 = match found {
                Some(r) => r,
                None => continue,
            };
            m.swap_rows(pivot_row, r0);
            let inv = m.get(pivot_row, col).inv();
            m.scale_row(pivot_row, &inv);
            for r in 0..m.rows {
                if r != pivot_row && !m.get(r, col).is_zero() {
                    let factor = m.get(r, col).clone();
                    m.sub_scaled_row(r, pivot_row, &factor);
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Solve m·x = b; None when inconsistent. Free variables are set to zero.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(b.len(), self.rows, "rhs length mismatch");
        let rhs = Matrix::from_cols(self.field, vec![b.to_vec()]);
        let aug = self.hstack(&rhs);
        let (red, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![self.field.zero(); self.cols];
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = red.get(i, self.cols).clone();
        }
        Some(x)
    }

    /// Solve m·X = B for a full matrix right-hand side; None when any column is inconsistent.
    pub fn solve_matrix(&self, b: &Matrix) -> Option<Matrix> {
        assert_eq!(b.rows(), self.rows, "rhs row mismatch");
        let mut cols = Vec::with_capacity(b.cols());
        for j in 0..b.cols() {
            cols.push(self.solve(&b.col(j))?);
        }
        Some(Matrix::from_cols(self.field, cols))
    }

    /// Two-sided inverse; None when singular or non-square.
    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let aug = self.hstack(&Matrix::identity(self.field, self.rows));
        let (red, pivots) = aug.rref();
        if pivots.len() != self.rows || pivots.iter().enumerate().any(|(i, &p)| i != p) {
            return None;
        }
        let mut inv = Matrix::zero(self.field, self.rows, self.rows);
        for r in 0..self.rows {
            for c in 0..self.rows {
                inv.set(r, c, red.get(r, self.rows + c).clone());
            }
        }
        Some(inv)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn scale_row(&mut self, r: usize, k: &Scalar) {
        for c in 0..self.cols {
            let v = self.get(r, c).mul(k);
            self.set(r, c, v);
        }
    }

    /// row_r -= k · row_src
    fn sub_scaled_row(&mut self, r: usize, src: usize, k: &Scalar) {
        for c in 0..self.cols {
            let delta = self.get(src, c).mul(k);
            let v = self.get(r, c).sub(&delta);
            self.set(r, c, v);
        }
    }

    /// Kronecker product: (a ⊗ b)(i·rb + k, j·cb + l) = a(i,j)·b(k,l).
    /// Realizes maps f⊗g on tensor coordinates e_i ⊗ e_k ↦ index i·dim + k.
    pub fn kronecker(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.field, other.field, "field mismatch");
        let mut out = Matrix::zero(self.field, self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.get(k, l);
                        if !b.is_zero() {
                            out.set(i * other.rows + k, j * other.cols + l, a.mul(b));
                        }
                    }
                }
            }
        }
        out
    }

    /// Monic minimal polynomial, coefficients low to high, via the first
    /// linear dependence among flattened powers.
    pub fn minimal_polynomial(&self) -> Vec<Scalar> {
        assert_eq!(self.rows, self.cols, "minimal polynomial needs a square matrix");
        let field = self.field;
        let flat = |m: &Matrix| m.entries.clone();
        let mut powers = vec![Matrix::identity(field, self.rows)];
        let mut span = crate::subspace::SpanBuilder::new(field, self.rows * self.cols);
        loop {
            let last = powers.last().unwrap();
            if !span.insert(flat(last)) {
                break;
            }
            powers.push(last.mul(self));
        }
        let dep = powers.pop().unwrap();
        let cols: Vec<Vec<Scalar>> = powers.iter().map(flat).collect();
        let coeffs = Matrix::from_cols(field, cols)
            .solve(&flat(&dep))
            .expect("dependence certified by the span builder");
        let mut poly: Vec<Scalar> = coeffs.into_iter().map(|c| c.neg()).collect();
        poly.push(field.one());
        poly
    }

    pub fn require_same_shape(&self, other: &Matrix) -> Result<(), LinalgError> {
        if self.field != other.field {
            return Err(LinalgError::FieldMismatch { left: self.field, right: other.field });
        }
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(LinalgError::AmbientMismatch { left: self.cols, right: other.cols });
        }
        Ok(())
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|s| s.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Vector helpers shared by the algebra layers.
pub mod vect {
    use super::*;

    pub fn zero(field: Field, n: usize) -> Vec<Scalar> {
        vec![field.zero(); n]
    }

    pub fn unit(field: Field, n: usize, i: usize) -> Vec<Scalar> {
        let mut v = zero(field, n);
        v[i] = field.one();
        v
    }

    pub fn add(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(a.len(), b.len());
        a.iter().zip(b).map(|(x, y)| x.add(y)).collect()
    }

    pub fn sub(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(a.len(), b.len());
        a.iter().zip(b).map(|(x, y)| x.sub(y)).collect()
    }

    pub fn scale(a: &[Scalar], k: &Scalar) -> Vec<Scalar> {
        a.iter().map(|x| x.mul(k)).collect()
    }

    pub fn is_zero(a: &[Scalar]) -> bool {
        a.iter().all(|x| x.is_zero())
    }

    /// Accumulate b scaled by k into a.
    pub fn add_scaled(a: &mut [Scalar], b: &[Scalar], k: &Scalar) {
        assert_eq!(a.len(), b.len());
        if k.is_zero() {
            return;
        }
        for (x, y) in a.iter_mut().zip(b) {
            if !y.is_zero() {
                *x = x.add(&y.mul(k));
            }
        }
    }
}
