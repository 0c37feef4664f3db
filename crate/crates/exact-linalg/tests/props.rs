//! Randomized invariants for the exact linear algebra kernel.

use exact_linalg::{kernel, vect, Field, Matrix, Subspace};
use proptest::prelude::*;

fn small_field() -> impl Strategy<Value = Field> {
    prop_oneof![
        Just(Field::Q),
        Just(Field::fp(2).unwrap()),
        Just(Field::fp(3).unwrap()),
        Just(Field::fp(5).unwrap()),
        Just(Field::fp(97).unwrap()),
    ]
}

fn small_matrix() -> impl Strategy<Value = Matrix> {
    (small_field(), 1usize..5, 1usize..5).prop_flat_map(|(k, r, c)| {
        proptest::collection::vec(-4i64..=4, r * c)
            .prop_map(move |v| Matrix::from_flat_i64(k, r, c, &v))
    })
}

fn two_spans() -> impl Strategy<Value = (Subspace, Subspace)> {
    (small_field(), 1usize..5).prop_flat_map(|(k, n)| {
        let vecs = proptest::collection::vec(proptest::collection::vec(-3i64..=3, n), 0..4);
        (vecs.clone(), vecs).prop_map(move |(a, b)| {
            let lift = |rows: Vec<Vec<i64>>| {
                let m: Vec<Vec<_>> = rows
                    .iter()
                    .map(|r| r.iter().map(|&x| k.from_i64(x)).collect())
                    .collect();
                Subspace::from_vectors(k, n, &m)
            };
            (lift(a), lift(b))
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rref_is_idempotent(m in small_matrix()) {
        let (r1, p1) = m.rref();
        let (r2, p2) = r1.rref();
        prop_assert_eq!(&r1, &r2);
        prop_assert_eq!(p1, p2);
    }

    #[test]
    fn rank_nullity(m in small_matrix()) {
        let null = kernel(&m);
        prop_assert_eq!(m.rank() + null.dim(), m.cols());
    }

    #[test]
    fn kernel_vectors_are_killed(m in small_matrix()) {
        for v in kernel(&m).basis_vectors() {
            prop_assert!(vect::is_zero(&m.mul_vec(&v)));
        }
    }

    #[test]
    fn solve_is_sound(m in small_matrix(), xs in proptest::collection::vec(-4i64..=4, 1..5)) {
        // Manufacture a solvable system, then check the returned solution.
        let x: Vec<_> = (0..m.cols()).map(|j| m.field().from_i64(xs[j % xs.len()])).collect();
        let b = m.mul_vec(&x);
        let sol = m.solve(&b).expect("constructed system must be solvable");
        prop_assert!(vect::is_zero(&vect::sub(&m.mul_vec(&sol), &b)));
    }

    #[test]
    fn sum_intersection_dimension_formula((u, v) in two_spans()) {
        let s = u.sum(&v).unwrap();
        let i = u.intersect(&v).unwrap();
        prop_assert_eq!(s.dim() + i.dim(), u.dim() + v.dim());
        for w in i.basis_vectors() {
            prop_assert!(u.contains_vec(&w));
            prop_assert!(v.contains_vec(&w));
        }
    }

    #[test]
    fn quotient_laws((u, _) in two_spans()) {
        let q = u.quotient();
        prop_assert_eq!(q.dim, u.ambient_dim() - u.dim());
        // proj . sect = id on the quotient
        let comp = q.projection.mul(&q.section);
        prop_assert_eq!(&comp, &Matrix::identity(u.field(), q.dim));
        // subspace vectors project to zero
        for w in u.basis_vectors() {
            prop_assert!(vect::is_zero(&q.projection.mul_vec(&w)));
        }
    }
}
