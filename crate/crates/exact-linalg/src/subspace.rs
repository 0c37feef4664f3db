//! Canonicalized linear subspaces and the lattice operations on them.

use crate::matrix::{vect, Matrix};
use crate::scalar::{Field, Scalar};
use crate::LinalgError;
use std::fmt;

/// A linear subspace of k^ambient, stored as the unique RREF basis of its
/// span. Equality of subspaces is entrywise equality of these bases.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix, // RREF, no zero rows
}

impl Subspace {
    /// Canonicalize a spanning set (rows of m).
    pub fn from_span(m: &Matrix) -> Subspace {
        let (r, pivots) = m.rref();
        let rank = pivots.len();
        if rank == 0 {
            // keep the ambient width on the empty basis so the zero
            // subspace has a single representation
            return Subspace::zero(m.field(), m.cols());
        }
        let rows = (0..rank).map(|i| r.row(i).to_vec()).collect();
        Subspace { ambient: m.cols(), basis: Matrix::from_rows(m.field(), rows) }
    }

    pub fn from_vectors(field: Field, ambient: usize, vecs: &[Vec<Scalar>]) -> Subspace {
        if vecs.is_empty() {
            return Subspace::zero(field, ambient);
        }
        Subspace::from_span(&Matrix::from_rows(field, vecs.to_vec()))
    }

    pub fn zero(field: Field, ambient: usize) -> Subspace {
        Subspace { ambient, basis: Matrix::zero(field, 0, ambient) }
    }

    pub fn full(field: Field, ambient: usize) -> Subspace {
        Subspace { ambient, basis: Matrix::identity(field, ambient) }
    }

    pub fn field(&self) -> Field {
        self.basis.field()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Scalar>> {
        self.basis.row_vecs()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    fn check_compatible(&self, other: &Subspace) -> Result<(), LinalgError> {
        if self.field() != other.field() {
            return Err(LinalgError::FieldMismatch { left: self.field(), right: other.field() });
        }
        if self.ambient != other.ambient {
            return Err(LinalgError::AmbientMismatch { left: self.ambient, right: other.ambient });
        }
        Ok(())
    }

    /// Pivot columns of the canonical basis.
    /// Pivot columns; the stored basis is already in RREF, so these are the
    /// leading nonzero positions of its rows.
    pub fn pivots(&self) -> Vec<usize> {
        (0..self.basis.rows())
            .map(|i| {
                self.basis
                    .row(i)
                    .iter()
                    .position(|e| !e.is_zero())
                    .expect("canonical basis has no zero rows")
            })
            .collect()
    }

    /// Residue of v after eliminating pivot coordinates; lies in the chosen
    /// complement (zero iff v is in the subspace).
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.ambient, "ambient mismatch");
        let mut out = v.to_vec();
        for (i, &p) in self.pivots().iter().enumerate() {
            let c = out[p].clone();
            if !c.is_zero() {
                vect::add_scaled(&mut out, self.basis.row(i), &c.neg());
            }
        }
        out
    }

    pub fn contains_vec(&self, v: &[Scalar]) -> bool {
        vect::is_zero(&self.reduce(v))
    }

    /// Coefficients of v in the RREF basis, or None if v is outside the span.
    /// Each basis row has a unit pivot that no other row touches, so the
    /// coefficients are read off at the pivot columns.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        if !self.contains_vec(v) {
            return None;
        }
        Some(self.pivots().iter().map(|&p| v[p].clone()).collect())
    }

    pub fn contains(&self, other: &Subspace) -> Result<bool, LinalgError> {
        self.check_compatible(other)?;
        Ok((0..other.dim()).all(|i| self.contains_vec(other.basis.row(i))))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_compatible(other)?;
        if self.dim() == 0 {
            return Ok(other.clone());
        }
        if other.dim() == 0 {
            return Ok(self.clone());
        }
        Ok(Subspace::from_span(&self.basis.vstack(&other.basis)))
    }

    /// Intersection via the kernel of the stacked system
    /// [Uᵀ | −Vᵀ]·(a,b) = 0, whose U-parts span U ∩ V.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_compatible(other)?;
        let d1 = self.dim();
        let d2 = other.dim();
        if d1 == 0 || d2 == 0 {
            return Ok(Subspace::zero(self.field(), self.ambient));
        }
        let ut = self.basis.transpose();
        let vt = other.basis.transpose().scale(&self.field().from_i64(-1));
        let stacked = ut.hstack(&vt);
        let ker = kernel(&stacked);
        let mut vecs = Vec::new();
        for row in ker.basis_vectors() {
            let a = &row[..d1];
            let mut v = vect::zero(self.field(), self.ambient);
            for (i, coef) in a.iter().enumerate() {
                vect::add_scaled(&mut v, self.basis.row(i), coef);
            }
            vecs.push(v);
        }
        Ok(Subspace::from_vectors(self.field(), self.ambient, &vecs))
    }

    /// Quotient by this subspace: a projection onto the non-pivot coordinates
    /// (kernel exactly this subspace) and a section with proj ∘ sect = id.
    pub fn quotient(&self) -> QuotientMap {
        let field = self.field();
        let pivots = self.pivots();
        let free: Vec<usize> = (0..self.ambient).filter(|c| !pivots.contains(c)).collect();
        let qdim = free.len();
        let mut projection = Matrix::zero(field, qdim, self.ambient);
        for (j, col) in (0..self.ambient).enumerate() {
            let reduced = self.reduce(&vect::unit(field, self.ambient, col));
            for (k, &f) in free.iter().enumerate() {
                projection.set(k, j, reduced[f].clone());
            }
            let _ = j;
        }
        let mut section = Matrix::zero(field, self.ambient, qdim);
        for (k, &f) in free.iter().enumerate() {
            section.set(f, k, field.one());
        }
        QuotientMap { dim: qdim, projection, section, free_coords: free }
    }
}

/// Data of k^n ↠ k^n/V: projection matrix, a right-inverse section landing
/// on the complement coordinates, and the coordinates chosen.
#[derive(Clone, Debug)]
pub struct QuotientMap {
    pub dim: usize,
    pub projection: Matrix,
    pub section: Matrix,
    pub free_coords: Vec<usize>,
}

/// Incremental row-space accumulator. Rows are kept in forward echelon form
/// so redundant generators are dropped on insertion instead of being stacked
/// into one huge matrix.
pub struct SpanBuilder {
    field: Field,
    ambient: usize,
    /// (pivot column, row normalized to leading one), sorted by pivot.
    rows: Vec<(usize, Vec<Scalar>)>,
}

impl SpanBuilder {
    pub fn new(field: Field, ambient: usize) -> SpanBuilder {
        SpanBuilder { field, ambient, rows: Vec::new() }
    }

    /// Reduce `v` against the accumulated rows; returns whether the span grew.
    pub fn insert(&mut self, mut v: Vec<Scalar>) -> bool {
        assert_eq!(v.len(), self.ambient, "ambient mismatch");
        let mut start = 0;
        loop {
            let lead = match (start..self.ambient).find(|&i| !v[i].is_zero()) {
                None => return false,
                Some(l) => l,
            };
            match self.rows.binary_search_by_key(&lead, |r| r.0) {
                Ok(i) => {
                    let c = v[lead].clone();
                    let row = &self.rows[i].1;
                    for k in lead..self.ambient {
                        if !row[k].is_zero() {
                            v[k] = v[k].sub(&c.mul(&row[k]));
                        }
                    }
                    start = lead + 1;
                }
                Err(i) => {
                    if !v[lead].is_one() {
                        let inv = v[lead].inv();
                        v = vect::scale(&v, &inv);
                    }
                    self.rows.insert(i, (lead, v));
                    return true;
                }
            }
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.ambient, "ambient mismatch");
        let mut v = v.to_vec();
        let mut start = 0;
        loop {
            let lead = match (start..self.ambient).find(|&i| !v[i].is_zero()) {
                None => return true,
                Some(l) => l,
            };
            match self.rows.binary_search_by_key(&lead, |r| r.0) {
                Ok(i) => {
                    let c = v[lead].clone();
                    let row = &self.rows[i].1;
                    for k in lead..self.ambient {
                        if !row[k].is_zero() {
                            v[k] = v[k].sub(&c.mul(&row[k]));
                        }
                    }
                    start = lead + 1;
                }
                Err(_) => return false,
            }
        }
    }

    /// Canonicalize into a Subspace (one final back-elimination pass).
    pub fn into_subspace(self) -> Subspace {
        let vecs: Vec<Vec<Scalar>> = self.rows.into_iter().map(|(_, r)| r).collect();
        Subspace::from_vectors(self.field, self.ambient, &vecs)
    }
}

/// Kernel {v : m·v = 0}, canonicalized.
pub fn kernel(m: &Matrix) -> Subspace {
    let field = m.field();
    let n = m.cols();
    let (r, pivots) = m.rref();
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let mut vecs = Vec::with_capacity(free.len());
    for &j in &free {
        let mut v = vect::zero(field, n);
        v[j] = field.one();
        for (i, &p) in pivots.iter().enumerate() {
            v[p] = r.get(i, j).neg();
        }
        vecs.push(v);
    }
    Subspace::from_vectors(field, n, &vecs)
}

/// Image (column space) of m, canonicalized.
pub fn image(m: &Matrix) -> Subspace {
    Subspace::from_span(&m.transpose())
}

/// Every subspace of F_p^n, one per reduced echelon form. None over Q, or
/// when the total count would exceed the enumeration cap.
pub fn all_subspaces(field: Field, ambient: usize) -> Option<Vec<Subspace>> {
    let p = match field {
        Field::Fp(p) => p as u128,
        Field::Q => return None,
    };
    const CAP: u128 = 200_000;
    let mut total: u128 = 0;
    for mask in 0u32..(1 << ambient) {
        let mut count: u128 = 1;
        let pivots: Vec<usize> = (0..ambient).filter(|i| mask >> i & 1 == 1).collect();
        for &c in &pivots {
            let free = (c + 1..ambient).filter(|j| !pivots.contains(j)).count();
            count = count.checked_mul(p.checked_pow(free as u32)?)?;
        }
        total = total.checked_add(count)?;
        if total > CAP {
            return None;
        }
    }
    let mut out = Vec::with_capacity(total as usize);
    for mask in 0u32..(1 << ambient) {
        let pivots: Vec<usize> = (0..ambient).filter(|i| mask >> i & 1 == 1).collect();
        let rank = pivots.len();
        // free slots: (row, col) with col past that row's pivot and not a pivot column
        let mut slots = Vec::new();
        for (r, &c) in pivots.iter().enumerate() {
            for j in c + 1..ambient {
                if !pivots.contains(&j) {
                    slots.push((r, j));
                }
            }
        }
        if rank == 0 {
            out.push(Subspace::zero(field, ambient));
            continue;
        }
        let mut digits = vec![0u64; slots.len()];
        loop {
            let mut rows = vec![vect::zero(field, ambient); rank];
            for (r, &c) in pivots.iter().enumerate() {
                rows[r][c] = field.one();
            }
            for (s, &(r, j)) in slots.iter().enumerate() {
                rows[r][j] = field.from_i64(digits[s] as i64);
            }
            out.push(Subspace::from_vectors(field, ambient, &rows));
            let mut s = 0;
            loop {
                if s == digits.len() {
                    break;
                }
                digits[s] += 1;
                if digits[s] < p as u64 {
                    break;
                }
                digits[s] = 0;
                s += 1;
            }
            if s == digits.len() {
                break;
            }
        }
    }
    Some(out)
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace dim {} of k^{}: {:?}", self.dim(), self.ambient, self.basis)
    }
}
