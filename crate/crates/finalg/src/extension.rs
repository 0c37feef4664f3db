//! Properties of an algebra inclusion B -> H: split retractions, faithful
//! flatness over split commutative bases, and the two-arrow equalizer.

use crate::algebra::FinAlgebra;
use crate::bimodule::BimoduleStructure;
use crate::module::{induce_module, module_pool, LeftModule};
use crate::morphism::AlgMorphism;
use crate::tensor::{tensor_over_A, TensorOverA};
use crate::FinAlgError;
use exact_linalg::{field_roots, kernel, vect, Matrix, Scalar, Subspace};

/// Outcome of the split-retraction search. A right-B-linear retraction of the
/// inclusion makes every induced map M -> H ⊗_B M injective; when none exists
/// the pool is scanned for a module witnessing the failure.
#[derive(Clone, Debug)]
pub enum Purity {
    Pure { retraction: Matrix },
    NotPure { witness: Option<(String, LeftModule)> },
}

impl Purity {
    pub fn is_pure(&self) -> bool {
        matches!(self, Purity::Pure { .. })
    }
}

fn require_extension_shape(
    h: &FinAlgebra,
    b: &FinAlgebra,
    iota: &AlgMorphism,
) -> Result<(), FinAlgError> {
    if iota.matrix.rows() != h.dim() || iota.matrix.cols() != b.dim() {
        return Err(FinAlgError::BaseMismatch);
    }
    Ok(())
}

/// Search for a right-B-linear retraction r with r ∘ iota = id. The two
/// families of conditions are one linear system in the entries of r.
pub fn purity_check(
    h: &FinAlgebra,
    b: &FinAlgebra,
    iota: &AlgMorphism,
) -> Result<Purity, FinAlgError> {
    require_extension_shape(h, b, iota)?;
    if !iota.is_injective() {
        return Err(FinAlgError::NotMono);
    }
    let field = h.field();
    let (nb, nh) = (b.dim(), h.dim());
    let id_b = Matrix::identity(field, nb);
    let id_h = Matrix::identity(field, nh);
    // unknowns: r as an nb x nh matrix, flattened row-major;
    // vec(A r C) = kron(A, C^T) vec(r)
    let mut system = id_b.kronecker(&iota.matrix.transpose());
    let mut rhs: Vec<Scalar> = Matrix::identity(field, nb).row_vecs().concat();
    for j in 0..nb {
        let rh = h.right_mult(&iota.apply(&b.basis_vec(j)));
        let rb = b.right_mult(&b.basis_vec(j));
        let block = id_b.kronecker(&rh.transpose()).sub(&rb.kronecker(&id_h));
        system = system.vstack(&block);
        rhs.extend(vect::zero(field, nb * nh));
    }
    match system.solve(&rhs) {
        Some(x) => {
            let mut retraction = Matrix::zero(field, nb, nh);
            for i in 0..nb {
                for j in 0..nh {
                    retraction.set(i, j, x[i * nh + j].clone());
                }
            }
            Ok(Purity::Pure { retraction })
        }
        None => {
            let witness = module_pool(b, 24, 0)
                .into_iter()
                .find(|(_, m)| {
                    induce_module(h, iota, m)
                        .map(|ind| !ind.unit_map_injective())
                        .unwrap_or(false)
                });
            Ok(Purity::NotPure { witness })
        }
    }
}

/// Primitive idempotents of a commutative algebra that splits over its field,
/// found by simultaneously diagonalizing the regular representation.
pub fn primitive_idempotents(b: &FinAlgebra) -> Result<Vec<Vec<Scalar>>, FinAlgError> {
    let d = b.dim();
    let field = b.field();
    for i in 0..d {
        for j in 0..i {
            if b.basis_product(i, j) != b.basis_product(j, i) {
                return Err(FinAlgError::UnsupportedBase(format!(
                    "base is not commutative: {} and {} do not commute",
                    b.label(i),
                    b.label(j)
                )));
            }
        }
    }

    // fast path: the basis is already a complete family of orthogonal idempotents
    let orthogonal_idempotent_basis = (0..d).all(|i| {
        (0..d).all(|j| {
            let prod = b.basis_product(i, j);
            let expect = if i == j { b.basis_vec(i) } else { vect::zero(field, d) };
            prod == &expect[..]
        })
    }) && b.unit_vec() == vec![field.one(); d];
    if orthogonal_idempotent_basis {
        return Ok((0..d).map(|i| b.basis_vec(i)).collect());
    }

    let mut blocks = vec![Subspace::full(field, d)];
    for op in 0..d {
        let l = b.left_mult(&b.basis_vec(op));
        let mut next = Vec::new();
        for w in blocks {
            if w.dim() <= 1 {
                next.push(w);
                continue;
            }
            let basis = w.basis_vectors();
            let mut cols = Vec::with_capacity(basis.len());
            for v in &basis {
                let img = l.mul_vec(v);
                let coords = w.coordinates(&img).ok_or_else(|| {
                    FinAlgError::UnsupportedBase("regular action does not preserve a block".into())
                })?;
                cols.push(coords);
            }
            let restricted = Matrix::from_cols(field, cols);
            let minpoly = restricted.minimal_polynomial();
            let roots = field_roots(field, &minpoly).ok_or_else(|| {
                FinAlgError::UnsupportedBase("eigenvalue search out of range".into())
            })?;
            let r = w.dim();
            let mut split_total = 0;
            for lam in &roots {
                let shifted = restricted.sub(&Matrix::identity(field, r).scale(lam));
                let eig = kernel(&shifted);
                if eig.is_zero() {
                    continue;
                }
                split_total += eig.dim();
                let back: Vec<Vec<Scalar>> = eig
                    .basis_vectors()
                    .iter()
                    .map(|z| {
                        let mut amb = vect::zero(field, d);
                        for (i, c) in z.iter().enumerate() {
                            if !c.is_zero() {
                                vect::add_scaled(&mut amb, &basis[i], c);
                            }
                        }
                        amb
                    })
                    .collect();
                next.push(Subspace::from_vectors(field, d, &back));
            }
            if split_total != r {
                return Err(FinAlgError::UnsupportedBase(
                    "regular representation is not diagonalizable".into(),
                ));
            }
        }
        blocks = next;
    }

    let mut idempotents = Vec::new();
    for w in &blocks {
        if w.dim() != 1 {
            return Err(FinAlgError::UnsupportedBase(
                "base has a multi-dimensional character block".into(),
            ));
        }
        let v = w.basis_vectors().pop().unwrap();
        let vv = b.multiply(&v, &v);
        let k = v.iter().position(|c| !c.is_zero()).unwrap();
        let c = vv[k].div(&v[k]);
        if c.is_zero() || vv != vect::scale(&v, &c) {
            return Err(FinAlgError::UnsupportedBase(
                "base has a nilpotent direction".into(),
            ));
        }
        let e = vect::scale(&v, &c.inv());
        idempotents.push(e);
    }
    let mut sum = vect::zero(field, d);
    for e in &idempotents {
        sum = vect::add(&sum, e);
    }
    if sum != b.unit_vec() {
        return Err(FinAlgError::UnsupportedBase(
            "idempotents do not resolve the unit".into(),
        ));
    }
    Ok(idempotents)
}

/// Characters of a split commutative base: row chi for each primitive
/// idempotent e, with x.e = chi(x).e for all x.
pub fn characters_of_split_algebra(b: &FinAlgebra) -> Result<Vec<Vec<Scalar>>, FinAlgError> {
    let idempotents = primitive_idempotents(b)?;
    let mut rows = Vec::with_capacity(idempotents.len());
    for e in &idempotents {
        let k = e.iter().position(|c| !c.is_zero()).unwrap();
        let mut chi = Vec::with_capacity(b.dim());
        for j in 0..b.dim() {
            let w = b.multiply(&b.basis_vec(j), e);
            let c = w[k].div(&e[k]);
            if w != vect::scale(e, &c) {
                return Err(FinAlgError::UnsupportedBase(
                    "basis action is not scalar on a character line".into(),
                ));
            }
            chi.push(c);
        }
        rows.push(chi);
    }
    Ok(rows)
}

/// Faithful flatness of H over a split commutative base: the inclusion must
/// keep every primitive idempotent alive.
pub fn faithfully_flat_check(
    h: &FinAlgebra,
    b: &FinAlgebra,
    iota: &AlgMorphism,
) -> Result<bool, FinAlgError> {
    require_extension_shape(h, b, iota)?;
    let idempotents = primitive_idempotents(b)?;
    let all_alive = idempotents
        .iter()
        .all(|e| !vect::is_zero(&iota.apply(e)));
    Ok(all_alive && iota.is_injective())
}

/// H ⊗_B H where H is a B-bimodule through the inclusion.
pub fn extension_tensor_square(
    h: &FinAlgebra,
    b: &FinAlgebra,
    iota: &AlgMorphism,
) -> Result<TensorOverA, FinAlgError> {
    require_extension_shape(h, b, iota)?;
    let left_action: Vec<Matrix> = (0..b.dim())
        .map(|a| h.left_mult(&iota.apply(&b.basis_vec(a))))
        .collect();
    let right_action: Vec<Matrix> = (0..b.dim())
        .map(|a| h.right_mult(&iota.apply(&b.basis_vec(a))))
        .collect();
    let bim = BimoduleStructure {
        algebra: b.clone(),
        carrier_dim: h.dim(),
        left_action,
        right_action,
    };
    tensor_over_A(&bim, &bim)
}

/// Kernel of x -> x ⊗ 1 - 1 ⊗ x into H ⊗_B H. When the inclusion is pure
/// this recovers exactly the image of B.
pub fn equalizer_subspace(
    h: &FinAlgebra,
    b: &FinAlgebra,
    iota: &AlgMorphism,
) -> Result<Subspace, FinAlgError> {
    let t = extension_tensor_square(h, b, iota)?;
    let field = h.field();
    let nh = h.dim();
    let unit = h.unit_vec();
    let mut cols = Vec::with_capacity(nh);
    for i in 0..nh {
        let mut amb = vect::zero(field, nh * nh);
        for (j, c) in unit.iter().enumerate() {
            if !c.is_zero() {
                // e_i ⊗ 1 - 1 ⊗ e_i
                amb[i * nh + j] = amb[i * nh + j].add(c);
                amb[j * nh + i] = amb[j * nh + i].sub(c);
            }
        }
        cols.push(t.project(&amb));
    }
    Ok(kernel(&Matrix::from_cols(field, cols)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::subalgebra_from_subspace;
    use exact_linalg::{image, Field};

    fn diagonal_pair() -> (FinAlgebra, FinAlgebra, AlgMorphism) {
        let k = FinAlgebra::field_algebra(Field::Q);
        let kk = FinAlgebra::diagonal(Field::Q, vec!["p".into(), "q".into()]);
        let iota = AlgMorphism { matrix: Matrix::from_i64(Field::Q, &[&[1], &[1]]) };
        (kk, k, iota)
    }

    #[test]
    fn identity_extension_is_pure() {
        let h = FinAlgebra::matrix_algebra(Field::Q, 2);
        let p = purity_check(&h, &h, &AlgMorphism::identity(&h)).unwrap();
        match p {
            Purity::Pure { retraction } => {
                assert_eq!(retraction, Matrix::identity(Field::Q, 4));
            }
            Purity::NotPure { .. } => panic!("identity must split"),
        }
    }

    #[test]
    fn unit_inclusion_is_pure() {
        let (h, b, iota) = diagonal_pair();
        assert!(purity_check(&h, &b, &iota).unwrap().is_pure());
    }

    #[test]
    fn non_injective_inclusion_is_rejected() {
        // first projection k x k -> k is not mono
        let k = FinAlgebra::field_algebra(Field::Q);
        let kk = FinAlgebra::diagonal(Field::Q, vec!["p".into(), "q".into()]);
        let proj = AlgMorphism { matrix: Matrix::from_i64(Field::Q, &[&[1, 0]]) };
        assert!(matches!(
            purity_check(&k, &kk, &proj),
            Err(FinAlgError::NotMono)
        ));
    }

    #[test]
    fn upper_triangular_in_full_matrices_is_not_pure() {
        let h = FinAlgebra::matrix_algebra(Field::Q, 2);
        // span{E11, E21, E22}
        let sub = Subspace::from_vectors(
            Field::Q,
            4,
            &[h.basis_vec(0), h.basis_vec(2), h.basis_vec(3)],
        );
        let (b, iota) = subalgebra_from_subspace(&h, &sub).unwrap();
        let p = purity_check(&h, &b, &iota).unwrap();
        match p {
            Purity::Pure { .. } => panic!("must not split"),
            Purity::NotPure { witness } => {
                // first witness in pool order: B/span{E21}, which contains the
                // simple at the (1,1) corner as a summand; inducing kills it
                let (name, m) = witness.expect("pool contains a witness");
                assert_eq!(name, "quotient-1");
                assert_eq!(m.dim, 2);
                let ind = induce_module(&h, &iota, &m).unwrap();
                assert!(!ind.unit_map_injective());
            }
        }
        // the simple with character (1,0,0) is induced to zero outright
        let killed = module_pool(&b, 24, 0)
            .into_iter()
            .find(|(name, _)| name == "quotient-1,2")
            .expect("basis-subset ideal quotient present")
            .1;
        assert_eq!(killed.dim, 1);
        let ind = induce_module(&h, &iota, &killed).unwrap();
        assert_eq!(ind.tensor.dim(), 0);
    }

    #[test]
    fn primitive_idempotents_of_diagonal() {
        let b = FinAlgebra::diagonal(Field::Q, vec!["p".into(), "q".into(), "r".into()]);
        let es = primitive_idempotents(&b).unwrap();
        assert_eq!(es.len(), 3);
        for (i, e) in es.iter().enumerate() {
            assert_eq!(e, &b.basis_vec(i));
        }
    }

    #[test]
    fn primitive_idempotents_in_rotated_coordinates() {
        // k x k presented on the basis {1, u} with u^2 = 1: idempotents (1 ± u)/2
        let f = Field::Q;
        let o = f.one();
        let z = f.zero();
        let mult = vec![
            vec![vec![o.clone(), z.clone()], vec![z.clone(), o.clone()]],
            vec![vec![z.clone(), o.clone()], vec![o.clone(), z.clone()]],
        ];
        let b = FinAlgebra::new(f, vec!["1".into(), "u".into()], mult, vec![o, z]);
        let es = primitive_idempotents(&b).unwrap();
        assert_eq!(es.len(), 2);
        for e in &es {
            assert_eq!(b.multiply(e, e), *e);
        }
        let half = f.from_i64(1).div(&f.from_i64(2));
        assert!(es.contains(&vec![half.clone(), half.clone()]));
        assert!(es.contains(&vec![half.clone(), half.neg()]));
    }

    #[test]
    fn dual_numbers_are_unsupported() {
        let b = FinAlgebra::dual_numbers(Field::Q);
        assert!(matches!(
            primitive_idempotents(&b),
            Err(FinAlgError::UnsupportedBase(_))
        ));
    }

    #[test]
    fn matrix_algebra_base_is_unsupported() {
        let b = FinAlgebra::matrix_algebra(Field::Q, 2);
        assert!(matches!(
            primitive_idempotents(&b),
            Err(FinAlgError::UnsupportedBase(_))
        ));
    }

    #[test]
    fn characters_of_diagonal_are_coordinates() {
        let b = FinAlgebra::diagonal(Field::Q, vec!["p".into(), "q".into()]);
        let chars = characters_of_split_algebra(&b).unwrap();
        assert_eq!(chars.len(), 2);
        assert_eq!(chars[0], vec![Field::Q.one(), Field::Q.zero()]);
        assert_eq!(chars[1], vec![Field::Q.zero(), Field::Q.one()]);
    }

    #[test]
    fn faithful_flatness_cases() {
        // unit inclusion k -> k x k: faithfully flat
        let (h, b, iota) = diagonal_pair();
        assert!(faithfully_flat_check(&h, &b, &iota).unwrap());
        // first projection k x k -> k: kills an idempotent
        let k = FinAlgebra::field_algebra(Field::Q);
        let kk = FinAlgebra::diagonal(Field::Q, vec!["p".into(), "q".into()]);
        let proj = AlgMorphism { matrix: Matrix::from_i64(Field::Q, &[&[1, 0]]) };
        assert!(!faithfully_flat_check(&k, &kk, &proj).unwrap());
        // identity on a diagonal algebra: faithfully flat
        assert!(faithfully_flat_check(&kk, &kk, &AlgMorphism::identity(&kk)).unwrap());
    }

    #[test]
    fn equalizer_recovers_base_when_pure() {
        let (h, b, iota) = diagonal_pair();
        let eq = equalizer_subspace(&h, &b, &iota).unwrap();
        assert_eq!(eq, image(&iota.matrix));
        let h2 = FinAlgebra::diagonal(Field::Q, vec!["p".into(), "q".into()]);
        let eq2 = equalizer_subspace(&h2, &h2, &AlgMorphism::identity(&h2)).unwrap();
        assert_eq!(eq2, Subspace::full(Field::Q, 2));
    }
}
