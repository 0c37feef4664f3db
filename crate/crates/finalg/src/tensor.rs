//! Tensor products of bimodules over the base algebra, as explicit quotients.
//!
//! The tensor of a chain of bimodules is the quotient of the plain tensor
//! space by, for every consecutive pair and base basis element a, the span of
//! (m.a) ⊗ n − m ⊗ (a.n). Maps are pushed through quotients only after
//! checking they preserve the relation spans.

use crate::algebra::FinAlgebra;
use crate::bimodule::BimoduleStructure;
use crate::FinAlgError;
use exact_linalg::{kernel, vect, Matrix, QuotientMap, Scalar, SpanBuilder, Subspace};

/// A tensor product of bimodules over a common base, with its relation span
/// and a projection/section pair for the quotient.
#[derive(Clone, Debug)]
pub struct TensorOverA {
    pub factor_dims: Vec<usize>,
    pub relations: Subspace,
    pub quot: QuotientMap,
}

impl TensorOverA {
    pub fn ambient_dim(&self) -> usize {
        self.factor_dims.iter().product()
    }

    /// Dimension of the quotient.
    pub fn dim(&self) -> usize {
        self.quot.dim
    }

    /// Class of an ambient vector.
    pub fn project(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.quot.projection.mul_vec(v)
    }

    /// Distinguished ambient representative of a quotient vector.
    pub fn represent(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.quot.section.mul_vec(v)
    }

    /// Class of the decomposable tensor of the given factor vectors.
    pub fn project_pure(&self, factors: &[&[Scalar]]) -> Vec<Scalar> {
        assert_eq!(factors.len(), self.factor_dims.len());
        let field = self.relations.field();
        let mut amb = vec![field.one()];
        for (f, &d) in factors.iter().zip(&self.factor_dims) {
            assert_eq!(f.len(), d);
            let mut next = Vec::with_capacity(amb.len() * d);
            for a in &amb {
                for c in f.iter() {
                    next.push(a.mul(c));
                }
            }
            amb = next;
        }
        self.project(&amb)
    }
}

/// Tensor of a chain of bimodules over their (shared) base algebra.
pub fn tensor_chain(modules: &[&BimoduleStructure]) -> Result<TensorOverA, FinAlgError> {
    assert!(!modules.is_empty());
    let base = &modules[0].algebra;
    for m in modules {
        if &m.algebra != base {
            return Err(FinAlgError::BaseMismatch);
        }
    }
    let field = base.field();
    let dims: Vec<usize> = modules.iter().map(|m| m.carrier_dim).collect();
    let ambient: usize = dims.iter().product();
    // strides for the mixed-radix index: index = sum digit_w * stride_w
    let mut strides = vec![1usize; dims.len()];
    for w in (0..dims.len().saturating_sub(1)).rev() {
        strides[w] = strides[w + 1] * dims[w + 1];
    }

    let mut span = SpanBuilder::new(field, ambient);
    for pair in 0..dims.len().saturating_sub(1) {
        let (i, j) = (pair, pair + 1);
        for a in 0..base.dim() {
            let right = &modules[pair].right_action[a];
            let left = &modules[pair + 1].left_action[a];
            if right.is_zero() && left.is_zero() {
                continue;
            }
            for t in 0..ambient {
                let p = (t / strides[i]) % dims[i];
                let q = (t / strides[j]) % dims[j];
                let mut v = vect::zero(field, ambient);
                let mut nonzero = false;
                for r in 0..dims[i] {
                    let c = right.get(r, p);
                    if !c.is_zero() {
                        let idx = (t as i64 + (r as i64 - p as i64) * strides[i] as i64) as usize;
                        v[idx] = v[idx].add(c);
                        nonzero = true;
                    }
                }
                for s in 0..dims[j] {
                    let c = left.get(s, q);
                    if !c.is_zero() {
                        let idx = (t as i64 + (s as i64 - q as i64) * strides[j] as i64) as usize;
                        v[idx] = v[idx].sub(c);
                        nonzero = true;
                    }
                }
                if nonzero {
                    span.insert(v);
                }
            }
        }
    }
    let relations = span.into_subspace();
    let quot = relations.quotient();
    Ok(TensorOverA { factor_dims: dims, relations, quot })
}

/// M ⊗_A N for a pair of bimodules over the same base.
#[allow(non_snake_case)]
pub fn tensor_over_A(
    m_left: &BimoduleStructure,
    m_right: &BimoduleStructure,
) -> Result<TensorOverA, FinAlgError> {
    tensor_chain(&[m_left, m_right])
}

/// Push an ambient-level map to quotient coordinates, after checking that it
/// carries the source relations into the target relations.
pub fn descend_map(f: &Matrix, src: &TensorOverA, dst: &TensorOverA) -> Result<Matrix, FinAlgError> {
    if f.cols() != src.ambient_dim() || f.rows() != dst.ambient_dim() {
        return Err(FinAlgError::DimMismatch(format!(
            "map {}x{} between ambients {} and {}",
            f.rows(),
            f.cols(),
            src.ambient_dim(),
            dst.ambient_dim()
        )));
    }
    for row in src.relations.basis_vectors() {
        if !dst.relations.contains_vec(&f.mul_vec(&row)) {
            return Err(FinAlgError::NotDescendable(
                "image of a relation is not a relation".into(),
            ));
        }
    }
    Ok(dst.quot.projection.mul(f).mul(&src.quot.section))
}

/// Push an ambient-level map with a plain vector-space target through the
/// source quotient, after checking that it kills the source relations.
pub fn descend_to_plain(f: &Matrix, src: &TensorOverA) -> Result<Matrix, FinAlgError> {
    if f.cols() != src.ambient_dim() {
        return Err(FinAlgError::DimMismatch(format!(
            "map with {} columns on ambient {}",
            f.cols(),
            src.ambient_dim()
        )));
    }
    for row in src.relations.basis_vectors() {
        if !vect::is_zero(&f.mul_vec(&row)) {
            return Err(FinAlgError::NotDescendable(
                "map does not kill the relations".into(),
            ));
        }
    }
    Ok(f.mul(&src.quot.section))
}

/// Kronecker product of per-factor maps, descended to the quotients.
pub fn descend_factorwise(
    maps: &[&Matrix],
    src: &TensorOverA,
    dst: &TensorOverA,
) -> Result<Matrix, FinAlgError> {
    assert!(!maps.is_empty());
    let mut amb = maps[0].clone();
    for &m in &maps[1..] {
        amb = amb.kronecker(m);
    }
    descend_map(&amb, src, dst)
}

/// Subspace of a two-factor tensor quotient on which acting by each base
/// element on the first leg (via `first`) agrees with acting on the second
/// (via `second`).
pub fn takeuchi_subspace(
    t: &TensorOverA,
    first: &[Matrix],
    second: &[Matrix],
) -> Result<Subspace, FinAlgError> {
    assert_eq!(t.factor_dims.len(), 2);
    assert_eq!(first.len(), second.len());
    let field = t.relations.field();
    let (n, m) = (t.factor_dims[0], t.factor_dims[1]);
    let id_n = Matrix::identity(field, n);
    let id_m = Matrix::identity(field, m);
    let mut out = Subspace::full(field, t.dim());
    for a in 0..first.len() {
        let amb = first[a].kronecker(&id_m).sub(&id_n.kronecker(&second[a]));
        let dq = descend_map(&amb, t, t)?;
        out = out.intersect(&kernel(&dq)).map_err(FinAlgError::from)?;
    }
    Ok(out)
}

/// Leg-by-leg product on a two-factor tensor of an algebra with itself:
/// (x ⊗ y)(u ⊗ v) = xu ⊗ yv on ambient coordinates.
pub fn legwise_product(h: &FinAlgebra, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
    legwise_core(h, u, v, false)
}

/// Leg-by-leg product with the second legs multiplied in reverse order:
/// (x ⊗ y)(u ⊗ v) = xu ⊗ vy on ambient coordinates.
pub fn legwise_product_second_reversed(h: &FinAlgebra, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
    legwise_core(h, u, v, true)
}

fn legwise_core(h: &FinAlgebra, u: &[Scalar], v: &[Scalar], reverse_second: bool) -> Vec<Scalar> {
    let n = h.dim();
    assert_eq!(u.len(), n * n);
    assert_eq!(v.len(), n * n);
    let field = h.field();
    let mut out = vect::zero(field, n * n);
    for i in 0..n {
        for j in 0..n {
            let cu = &u[i * n + j];
            if cu.is_zero() {
                continue;
            }
            for k in 0..n {
                for l in 0..n {
                    let cv = &v[k * n + l];
                    if cv.is_zero() {
                        continue;
                    }
                    let c = cu.mul(cv);
                    let firsts = h.basis_product(i, k);
                    let seconds = if reverse_second {
                        h.basis_product(l, j)
                    } else {
                        h.basis_product(j, l)
                    };
                    for (p, a) in firsts.iter().enumerate() {
                        if a.is_zero() {
                            continue;
                        }
                        let ca = c.mul(a);
                        for (q, b) in seconds.iter().enumerate() {
                            if b.is_zero() {
                                continue;
                            }
                            out[p * n + q] = out[p * n + q].add(&ca.mul(b));
                        }
                    }
                }
            }
        }
    }
    out
}
