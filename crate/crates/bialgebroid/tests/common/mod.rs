//! Hand-built instances shared by the integration tests.
#![allow(dead_code)]

use bialgebroid::LeftBialgebroid;
use exact_linalg::{Field, Matrix};
use finalg::FinAlgebra;

pub fn fp(p: u64) -> Field {
    Field::fp(p).expect("prime")
}

/// Coproduct ambient matrix with coefficient 1 at the listed row indices of
/// each column; row index i*dim + j encodes e_i (x) e_j.
pub fn delta_from_indices(field: Field, dim: usize, cols: &[&[usize]]) -> Matrix {
    assert_eq!(cols.len(), dim);
    let mut m = Matrix::zero(field, dim * dim, dim);
    for (c, idxs) in cols.iter().enumerate() {
        for &r in *idxs {
            m.set(r, c, field.one());
        }
    }
    m
}

/// Embedding of the one-dimensional base: the unit as a single column.
fn unit_column(h: &FinAlgebra) -> Matrix {
    Matrix::from_cols(h.field(), vec![h.unit_vec()])
}

/// A = H = k, every structure map the identity.
pub fn terminal(field: Field) -> LeftBialgebroid {
    let a = FinAlgebra::field_algebra(field);
    let h = FinAlgebra::field_algebra(field);
    let id = Matrix::identity(field, 1);
    LeftBialgebroid::new(a, h, id.clone(), id.clone(), &id, id.clone()).expect("terminal")
}

/// H = A commutative, s = t = id, x -> x (x) 1, counit the identity.
pub fn trivial_over(base: FinAlgebra) -> LeftBialgebroid {
    let field = base.field();
    let n = base.dim();
    let id = Matrix::identity(field, n);
    let mut delta = Matrix::zero(field, n * n, n);
    let unit = base.unit_vec();
    for i in 0..n {
        for (u, c) in unit.iter().enumerate() {
            delta.set(i * n + u, i, c.clone());
        }
    }
    LeftBialgebroid::new(base.clone(), base, id.clone(), id.clone(), &delta, id).expect("trivial")
}

/// Group algebra of the order-two group over base k, with g grouplike.
pub fn group_bialgebra_c2(field: Field) -> LeftBialgebroid {
    let o = field.one();
    let z = field.zero();
    let mult = vec![
        vec![vec![o.clone(), z.clone()], vec![z.clone(), o.clone()]],
        vec![vec![z.clone(), o.clone()], vec![o.clone(), z.clone()]],
    ];
    let h = FinAlgebra::new(field, vec!["1".into(), "g".into()], mult, vec![o.clone(), z]);
    let a = FinAlgebra::field_algebra(field);
    let emb = unit_column(&h);
    let delta = delta_from_indices(field, 2, &[&[0], &[3]]);
    let counit = Matrix::from_flat_i64(field, 1, 2, &[1, 1]);
    LeftBialgebroid::new(a, h, emb.clone(), emb, &delta, counit).expect("c2")
}

/// k[x]/(x^2) with x primitive. Violates coproduct multiplicativity unless
/// the characteristic is two, where it is the order-two group algebra in a
/// shifted basis.
pub fn nilpotent_primitive(field: Field) -> Result<LeftBialgebroid, bialgebroid::BialgebroidError> {
    let h = FinAlgebra::dual_numbers(field);
    let a = FinAlgebra::field_algebra(field);
    let emb = unit_column(&h);
    let delta = delta_from_indices(field, 2, &[&[0], &[1, 2]]);
    let counit = Matrix::from_flat_i64(field, 1, 2, &[1, 0]);
    LeftBialgebroid::new(a, h, emb.clone(), emb, &delta, counit)
}

/// Monoid algebra of {1, m} with m idempotent and grouplike: a lawful
/// bialgebra whose canonical map is singular.
pub fn idempotent_monoid(field: Field) -> LeftBialgebroid {
    let o = field.one();
    let z = field.zero();
    let mult = vec![
        vec![vec![o.clone(), z.clone()], vec![z.clone(), o.clone()]],
        vec![vec![z.clone(), o.clone()], vec![z.clone(), o.clone()]],
    ];
    let h = FinAlgebra::new(field, vec!["1".into(), "m".into()], mult, vec![o, z]);
    let a = FinAlgebra::field_algebra(field);
    let emb = unit_column(&h);
    let delta = delta_from_indices(field, 2, &[&[0], &[3]]);
    let counit = Matrix::from_flat_i64(field, 1, 2, &[1, 1]);
    LeftBialgebroid::new(a, h, emb.clone(), emb, &delta, counit).expect("monoid")
}

/// Functions on the pair groupoid with two objects p, q: arrow basis
/// [ep, eq, a, ainv] with a from p to q. Source and target embed functions
/// on objects by summing over fibers, the coproduct sums over
/// factorizations, the counit restricts to identity arrows.
pub fn pair_groupoid(field: Field) -> LeftBialgebroid {
    let a = FinAlgebra::diagonal(field, vec!["p".into(), "q".into()]);
    let h = FinAlgebra::diagonal(
        field,
        vec!["ep".into(), "eq".into(), "a".into(), "ainv".into()],
    );
    let source = Matrix::from_flat_i64(field, 4, 2, &[1, 0, 0, 1, 1, 0, 0, 1]);
    let target = Matrix::from_flat_i64(field, 4, 2, &[1, 0, 0, 1, 0, 1, 1, 0]);
    let delta = delta_from_indices(field, 4, &[&[0, 11], &[5, 14], &[2, 9], &[7, 12]]);
    let counit = Matrix::from_flat_i64(field, 2, 4, &[1, 0, 0, 0, 0, 1, 0, 0]);
    LeftBialgebroid::new(a, h, source, target, &delta, counit).expect("pair groupoid")
}

/// The pair-groupoid instance with the two coproduct legs swapped; several
/// axioms fail, which the axiom tests pin down.
pub fn pair_groupoid_flipped(field: Field) -> LeftBialgebroid {
    let a = FinAlgebra::diagonal(field, vec!["p".into(), "q".into()]);
    let h = FinAlgebra::diagonal(
        field,
        vec!["ep".into(), "eq".into(), "a".into(), "ainv".into()],
    );
    let source = Matrix::from_flat_i64(field, 4, 2, &[1, 0, 0, 1, 1, 0, 0, 1]);
    let target = Matrix::from_flat_i64(field, 4, 2, &[1, 0, 0, 1, 0, 1, 1, 0]);
    // swap (i, j) -> (j, i) in every summand of the straight coproduct
    let delta = delta_from_indices(field, 4, &[&[0, 14], &[5, 11], &[8, 6], &[13, 3]]);
    let counit = Matrix::from_flat_i64(field, 2, 4, &[1, 0, 0, 0, 0, 1, 0, 0]);
    LeftBialgebroid::new(a, h, source, target, &delta, counit).expect("pair groupoid flipped")
}
