//! Left modules over a finite-dimensional algebra, a deterministic test pool,
//! and induction along an algebra inclusion.

use crate::algebra::FinAlgebra;
use crate::morphism::AlgMorphism;
use crate::tensor::TensorOverA;
use crate::FinAlgError;
use exact_linalg::{vect, Certification, Matrix, Scalar, SpanBuilder, Subspace};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A left module given by one action matrix per algebra basis vector.
#[derive(Clone, Debug)]
pub struct LeftModule {
    pub algebra: FinAlgebra,
    pub dim: usize,
    pub action: Vec<Matrix>,
}

impl LeftModule {
    pub fn regular(alg: &FinAlgebra) -> LeftModule {
        LeftModule {
            algebra: alg.clone(),
            dim: alg.dim(),
            action: (0..alg.dim()).map(|a| alg.left_mult(&alg.basis_vec(a))).collect(),
        }
    }

    /// Direct sum of `rank` copies of the regular module.
    pub fn free(alg: &FinAlgebra, rank: usize) -> LeftModule {
        let id = Matrix::identity(alg.field(), rank);
        LeftModule {
            algebra: alg.clone(),
            dim: alg.dim() * rank,
            action: (0..alg.dim())
                .map(|a| id.kronecker(&alg.left_mult(&alg.basis_vec(a))))
                .collect(),
        }
    }

    /// Action matrix of an arbitrary algebra element.
    pub fn act(&self, x: &[Scalar]) -> Matrix {
        let mut m = Matrix::zero(self.algebra.field(), self.dim, self.dim);
        for (a, c) in x.iter().enumerate() {
            if !c.is_zero() {
                m = m.add(&self.action[a].scale(c));
            }
        }
        m
    }

    /// Same module seen through the basis change m -> p.m.
    pub fn conjugate(&self, p: &Matrix, p_inv: &Matrix) -> LeftModule {
        LeftModule {
            algebra: self.algebra.clone(),
            dim: self.dim,
            action: self.action.iter().map(|a| p.mul(a).mul(p_inv)).collect(),
        }
    }
}

pub fn check_left_module(m: &LeftModule) -> Certification {
    let mut cert = Certification::new();
    let alg = &m.algebra;
    if m.action.len() != alg.dim()
        || m.action.iter().any(|a| a.rows() != m.dim || a.cols() != m.dim)
    {
        cert.fail("module-shape", "wrong number or size of action matrices");
        return cert;
    }
    cert.pass("module-shape");
    cert.record(
        "module-unital",
        m.act(&alg.unit_vec()) == Matrix::identity(alg.field(), m.dim),
        "unit does not act as identity",
    );
    let mut ok = true;
    'outer: for i in 0..alg.dim() {
        for j in 0..alg.dim() {
            if m.act(alg.basis_product(i, j)) != m.action[i].mul(&m.action[j]) {
                cert.fail(
                    "module-associative",
                    format!("fails on {} . {}", alg.label(i), alg.label(j)),
                );
                ok = false;
                break 'outer;
            }
        }
    }
    if ok {
        cert.pass("module-associative");
    }
    cert
}

/// Quotient module A/I for a left ideal I; NotClosed when I is not one.
pub fn quotient_by_left_ideal(alg: &FinAlgebra, ideal: &Subspace) -> Result<LeftModule, FinAlgError> {
    if ideal.ambient_dim() != alg.dim() {
        return Err(FinAlgError::DimMismatch(format!(
            "ideal ambient {} vs algebra dim {}",
            ideal.ambient_dim(),
            alg.dim()
        )));
    }
    for a in 0..alg.dim() {
        let l = alg.left_mult(&alg.basis_vec(a));
        for v in ideal.basis_vectors() {
            if !ideal.contains_vec(&l.mul_vec(&v)) {
                return Err(FinAlgError::NotClosed(format!(
                    "not a left ideal: {} moves a spanning vector out",
                    alg.label(a)
                )));
            }
        }
    }
    let quot = ideal.quotient();
    let action = (0..alg.dim())
        .map(|a| {
            quot.projection
                .mul(&alg.left_mult(&alg.basis_vec(a)))
                .mul(&quot.section)
        })
        .collect();
    Ok(LeftModule { algebra: alg.clone(), dim: quot.dim, action })
}

/// All proper nonempty basis-index subsets spanning a left ideal.
pub fn basis_subset_left_ideals(alg: &FinAlgebra) -> Vec<(Vec<usize>, Subspace)> {
    let d = alg.dim();
    if d > 16 {
        return Vec::new();
    }
    let mut out = Vec::new();
    for mask in 1..(1u32 << d) - 1 {
        let indices: Vec<usize> = (0..d).filter(|i| mask & (1 << i) != 0).collect();
        let closed = indices.iter().all(|&j| {
            (0..d).all(|i| {
                alg.basis_product(i, j)
                    .iter()
                    .enumerate()
                    .all(|(k, c)| c.is_zero() || indices.contains(&k))
            })
        });
        if closed {
            let vecs: Vec<Vec<Scalar>> =
                indices.iter().map(|&i| alg.basis_vec(i)).collect();
            out.push((indices, Subspace::from_vectors(alg.field(), d, &vecs)));
        }
    }
    out
}

fn random_invertible(field: exact_linalg::Field, n: usize, rng: &mut ChaCha8Rng) -> (Matrix, Matrix) {
    loop {
        let entries: Vec<i64> = (0..n * n).map(|_| rng.gen_range(-3..=3)).collect();
        let p = Matrix::from_flat_i64(field, n, n, &entries);
        if let Some(p_inv) = p.inverse() {
            return (p, p_inv);
        }
    }
}

/// Deterministic pool of test modules: regular, free of rank two, quotients
/// by basis-spanned left ideals, then seeded basis changes of those.
pub fn module_pool(alg: &FinAlgebra, count: usize, seed: u64) -> Vec<(String, LeftModule)> {
    let mut pool: Vec<(String, LeftModule)> = Vec::new();
    pool.push(("regular".into(), LeftModule::regular(alg)));
    pool.push(("free-2".into(), LeftModule::free(alg, 2)));
    for (indices, ideal) in basis_subset_left_ideals(alg) {
        let name = format!(
            "quotient-{}",
            indices.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",")
        );
        let m = quotient_by_left_ideal(alg, &ideal).expect("subset certified as left ideal");
        pool.push((name, m));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let core = pool.clone();
    let mut k = 0;
    // the full core is always kept; seeded twists pad up to the requested count
    while pool.len() < count {
        let (name, base) = &core[k % core.len()];
        let (p, p_inv) = random_invertible(alg.field(), base.dim, &mut rng);
        pool.push((format!("twist-{k}-of-{name}"), base.conjugate(&p, &p_inv)));
        k += 1;
    }
    pool
}

/// H ⊗_B M for an algebra map iota: B -> H and a left B-module M, together
/// with the natural map from M.
#[derive(Clone, Debug)]
pub struct InducedModule {
    pub tensor: TensorOverA,
    /// m -> class of 1 ⊗ m.
    pub unit_map: Matrix,
}

impl InducedModule {
    pub fn unit_map_injective(&self) -> bool {
        self.unit_map.rank() == self.unit_map.cols()
    }
}

pub fn induce_module(
    h: &FinAlgebra,
    iota: &AlgMorphism,
    m: &LeftModule,
) -> Result<InducedModule, FinAlgError> {
    let b = &m.algebra;
    if iota.matrix.rows() != h.dim() || iota.matrix.cols() != b.dim() {
        return Err(FinAlgError::BaseMismatch);
    }
    let field = h.field();
    let nh = h.dim();
    let nm = m.dim;
    let ambient = nh * nm;
    let id_h = Matrix::identity(field, nh);
    let id_m = Matrix::identity(field, nm);
    let mut span = SpanBuilder::new(field, ambient);
    for a in 0..b.dim() {
        let d = h
            .right_mult(&iota.apply(&b.basis_vec(a)))
            .kronecker(&id_m)
            .sub(&id_h.kronecker(&m.action[a]));
        for col in 0..ambient {
            let v = d.col(col);
            if !vect::is_zero(&v) {
                span.insert(v);
            }
        }
    }
    let relations = span.into_subspace();
    let quot = relations.quotient();
    let unit = h.unit_vec();
    let cols: Vec<Vec<Scalar>> = (0..nm)
        .map(|j| {
            let mut amb = vect::zero(field, ambient);
            for (i, c) in unit.iter().enumerate() {
                if !c.is_zero() {
                    amb[i * nm + j] = c.clone();
                }
            }
            quot.projection.mul_vec(&amb)
        })
        .collect();
    let unit_map = Matrix::from_cols(field, cols);
    Ok(InducedModule {
        tensor: TensorOverA { factor_dims: vec![nh, nm], relations, quot },
        unit_map,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use exact_linalg::Field;

    #[test]
    fn regular_and_free_are_lawful() {
        for alg in [
            FinAlgebra::diagonal(Field::Q, vec!["p".into(), "q".into()]),
            FinAlgebra::dual_numbers(Field::Q),
            FinAlgebra::matrix_algebra(Field::Q, 2),
        ] {
            assert!(check_left_module(&LeftModule::regular(&alg)).passed());
            assert!(check_left_module(&LeftModule::free(&alg, 2)).passed());
        }
    }

    #[test]
    fn diagonal_ideals_are_all_subsets() {
        let alg = FinAlgebra::diagonal(Field::Q, vec!["p".into(), "q".into()]);
        // every proper nonempty subset of orthogonal idempotents spans an ideal
        assert_eq!(basis_subset_left_ideals(&alg).len(), 2);
    }

    #[test]
    fn quotient_modules_are_lawful() {
        let alg = FinAlgebra::matrix_algebra(Field::Q, 2);
        for (_, ideal) in basis_subset_left_ideals(&alg) {
            let m = quotient_by_left_ideal(&alg, &ideal).unwrap();
            assert!(check_left_module(&m).passed());
        }
        // column ideal span{E11, E21} is a left ideal of M2
        let cols = Subspace::from_vectors(
            Field::Q,
            4,
            &[alg.basis_vec(0), alg.basis_vec(2)],
        );
        let m = quotient_by_left_ideal(&alg, &cols).unwrap();
        assert!(check_left_module(&m).passed());
        assert_eq!(m.dim, 2);
    }

    #[test]
    fn non_ideal_rejected() {
        let alg = FinAlgebra::matrix_algebra(Field::Q, 2);
        // E21.E12 = E22 leaves span{E12}
        let row = Subspace::from_vectors(Field::Q, 4, &[alg.basis_vec(1)]);
        assert!(matches!(
            quotient_by_left_ideal(&alg, &row),
            Err(FinAlgError::NotClosed(_))
        ));
    }

    #[test]
    fn pool_is_deterministic_and_lawful() {
        let alg = FinAlgebra::diagonal(Field::Q, vec!["p".into(), "q".into()]);
        let pool1 = module_pool(&alg, 8, 7);
        let pool2 = module_pool(&alg, 8, 7);
        assert_eq!(pool1.len(), 8);
        for ((n1, m1), (n2, m2)) in pool1.iter().zip(&pool2) {
            assert_eq!(n1, n2);
            assert_eq!(m1.action, m2.action);
            assert!(check_left_module(m1).passed(), "{n1} fails");
        }
    }

    #[test]
    fn induction_along_identity_is_identity() {
        let alg = FinAlgebra::matrix_algebra(Field::Q, 2);
        let m = LeftModule::regular(&alg);
        let ind = induce_module(&alg, &AlgMorphism::identity(&alg), &m).unwrap();
        // H ⊗_H H ≅ H
        assert_eq!(ind.tensor.dim(), 4);
        assert!(ind.unit_map_injective());
    }

    #[test]
    fn induction_from_subfield_scales_dimension() {
        // k -> k x k; inducing the 1-dim k-module gives dimension 2
        let k = FinAlgebra::field_algebra(Field::Q);
        let kk = FinAlgebra::diagonal(Field::Q, vec!["p".into(), "q".into()]);
        let iota = AlgMorphism { matrix: Matrix::from_i64(Field::Q, &[&[1], &[1]]) };
        let m = LeftModule::regular(&k);
        let ind = induce_module(&kk, &iota, &m).unwrap();
        assert_eq!(ind.tensor.dim(), 2);
        assert!(ind.unit_map_injective());
    }
}
