//! Finite-dimensional associative unital algebras by structure constants.

use crate::FinAlgError;
use exact_linalg::{vect, Certification, Field, Matrix, Scalar, Subspace};

/// An algebra given by its multiplication table on a fixed basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinAlgebra {
    field: Field,
    labels: Vec<String>,
    /// mult[i][j] = coordinates of basis_i . basis_j
    mult: Vec<Vec<Vec<Scalar>>>,
    unit: Vec<Scalar>,
}

impl FinAlgebra {
    pub fn new(
        field: Field,
        labels: Vec<String>,
        mult: Vec<Vec<Vec<Scalar>>>,
        unit: Vec<Scalar>,
    ) -> FinAlgebra {
        let dim = labels.len();
        assert_eq!(mult.len(), dim);
        assert!(mult.iter().all(|row| row.len() == dim && row.iter().all(|v| v.len() == dim)));
        assert_eq!(unit.len(), dim);
        FinAlgebra { field, labels, mult, unit }
    }

    /// k(S) for a finite label set: pairwise-orthogonal idempotents summing to 1.
    pub fn diagonal(field: Field, labels: Vec<String>) -> FinAlgebra {
        let dim = labels.len();
        let mult = (0..dim)
            .map(|i| {
                (0..dim)
                    .map(|j| {
                        let mut v = vect::zero(field, dim);
                        if i == j {
                            v[i] = field.one();
                        }
                        v
                    })
                    .collect()
            })
            .collect();
        let unit = vec![field.one(); dim];
        FinAlgebra { field, labels, mult, unit }
    }

    pub fn field_algebra(field: Field) -> FinAlgebra {
        FinAlgebra::diagonal(field, vec!["1".into()])
    }

    /// k[x]/(x^2) with basis {1, x}.
    pub fn dual_numbers(field: Field) -> FinAlgebra {
        let o = field.one();
        let z = field.zero();
        let mult = vec![
            vec![vec![o.clone(), z.clone()], vec![z.clone(), o.clone()]],
            vec![vec![z.clone(), o.clone()], vec![z.clone(), z.clone()]],
        ];
        FinAlgebra::new(
            field,
            vec!["1".into(), "x".into()],
            mult,
            vec![o, z],
        )
    }

    /// Full matrix algebra with basis E(i,j), indexed row-major.
    pub fn matrix_algebra(field: Field, n: usize) -> FinAlgebra {
        let dim = n * n;
        let idx = |i: usize, j: usize| i * n + j;
        let mut mult = vec![vec![vect::zero(field, dim); dim]; dim];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        if j == k {
                            mult[idx(i, j)][idx(k, l)][idx(i, l)] = field.one();
                        }
                    }
                }
            }
        }
        let mut unit = vect::zero(field, dim);
        for i in 0..n {
            unit[idx(i, i)] = field.one();
        }
        let labels = (0..n)
            .flat_map(|i| (0..n).map(move |j| format!("E{}{}", i + 1, j + 1)))
            .collect();
        FinAlgebra { field, labels, mult, unit }
    }

    /// Same space with the multiplication reversed.
    pub fn opposite(&self) -> FinAlgebra {
        let dim = self.dim();
        let mut mult = vec![vec![Vec::new(); dim]; dim];
        for i in 0..dim {
            for j in 0..dim {
                mult[i][j] = self.mult[j][i].clone();
            }
        }
        FinAlgebra {
            field: self.field,
            labels: self.labels.clone(),
            mult,
            unit: self.unit.clone(),
        }
    }

    /// A tensor A-opposite, basis pairs indexed row-major; the two factors
    /// multiply independently, the second one in reversed order.
    pub fn enveloping(&self) -> FinAlgebra {
        let n = self.dim();
        let dim = n * n;
        let field = self.field;
        let mut mult = vec![vec![vect::zero(field, dim); dim]; dim];
        for i in 0..n {
            for u in 0..n {
                for j in 0..n {
                    for v in 0..n {
                        let straight = &self.mult[i][j];
                        let reversed = &self.mult[v][u];
                        let col = &mut mult[i * n + u][j * n + v];
                        for (r, cr) in straight.iter().enumerate() {
                            if cr.is_zero() {
                                continue;
                            }
                            for (s, cs) in reversed.iter().enumerate() {
                                if !cs.is_zero() {
                                    let w = cr.mul(cs);
                                    col[r * n + s] = col[r * n + s].add(&w);
                                }
                            }
                        }
                    }
                }
            }
        }
        let mut unit = vect::zero(field, dim);
        for (r, cr) in self.unit.iter().enumerate() {
            if cr.is_zero() {
                continue;
            }
            for (s, cs) in self.unit.iter().enumerate() {
                if !cs.is_zero() {
                    unit[r * n + s] = cr.mul(cs);
                }
            }
        }
        let labels = (0..n)
            .flat_map(|i| (0..n).map(move |u| format!("{}|{}", self.labels[i], self.labels[u])))
            .collect();
        FinAlgebra { field, labels, mult, unit }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn unit_vec(&self) -> Vec<Scalar> {
        self.unit.clone()
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &[Scalar] {
        &self.mult[i][j]
    }

    pub fn multiply(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = vect::zero(self.field, self.dim());
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let c = xi.mul(yj);
                vect::add_scaled(&mut out, &self.mult[i][j], &c);
            }
        }
        out
    }

    /// Matrix of y -> x.y.
    pub fn left_mult(&self, x: &[Scalar]) -> Matrix {
        let cols = (0..self.dim())
            .map(|j| {
                let mut e = vect::zero(self.field, self.dim());
                e[j] = self.field.one();
                self.multiply(x, &e)
            })
            .collect();
        Matrix::from_cols(self.field, cols)
    }

    /// Matrix of y -> y.x.
    pub fn right_mult(&self, x: &[Scalar]) -> Matrix {
        let cols = (0..self.dim())
            .map(|j| {
                let mut e = vect::zero(self.field, self.dim());
                e[j] = self.field.one();
                self.multiply(&e, x)
            })
            .collect();
        Matrix::from_cols(self.field, cols)
    }

    pub fn basis_vec(&self, i: usize) -> Vec<Scalar> {
        vect::unit(self.field, self.dim(), i)
    }

    /// Pretty-prints a coordinate vector against the basis labels.
    pub fn describe(&self, v: &[Scalar]) -> String {
        let terms: Vec<String> = v
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                if c.is_one() {
                    self.labels[i].clone()
                } else {
                    format!("{}.{}", c, self.labels[i])
                }
            })
            .collect();
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join(" + ")
        }
    }
}

/// Exhaustive associativity and unit checks with witnessing basis triples.
pub fn check_algebra(alg: &FinAlgebra) -> Certification {
    let mut cert = Certification::new();
    let d = alg.dim();

    let mut assoc_ok = true;
    'outer: for i in 0..d {
        for j in 0..d {
            let ij = alg.mult[i][j].clone();
            for k in 0..d {
                let left = alg.multiply(&ij, &alg.basis_vec(k));
                let right = alg.multiply(&alg.basis_vec(i), &alg.mult[j][k]);
                if left != right {
                    cert.fail(
                        "associativity",
                        format!(
                            "({} . {}) . {} != {} . ({} . {})",
                            alg.label(i),
                            alg.label(j),
                            alg.label(k),
                            alg.label(i),
                            alg.label(j),
                            alg.label(k)
                        ),
                    );
                    assoc_ok = false;
                    break 'outer;
                }
            }
        }
    }
    if assoc_ok {
        cert.pass("associativity");
    }

    let mut unit_ok = true;
    for i in 0..d {
        let e = alg.basis_vec(i);
        if alg.multiply(&alg.unit, &e) != e || alg.multiply(&e, &alg.unit) != e {
            cert.fail("unit", format!("1 is not neutral on {}", alg.label(i)));
            unit_ok = false;
        }
    }
    if unit_ok {
        cert.pass("unit");
    }

    cert
}

/// Restricts the multiplication of `h` to a subspace closed under it,
/// producing the subalgebra together with its inclusion map.
pub fn subalgebra_from_subspace(
    h: &FinAlgebra,
    sub: &Subspace,
) -> Result<(FinAlgebra, crate::morphism::AlgMorphism), FinAlgError> {
    if sub.ambient_dim() != h.dim() {
        return Err(FinAlgError::DimMismatch(format!(
            "subspace ambient {} vs algebra dim {}",
            sub.ambient_dim(),
            h.dim()
        )));
    }
    let unit_coords = sub
        .coordinates(&h.unit_vec())
        .ok_or_else(|| FinAlgError::NotClosed("unit is not in the subspace".into()))?;
    let basis = sub.basis_vectors();
    let d = basis.len();
    let mut mult = vec![vec![Vec::new(); d]; d];
    for i in 0..d {
        for j in 0..d {
            let prod = h.multiply(&basis[i], &basis[j]);
            mult[i][j] = sub.coordinates(&prod).ok_or_else(|| {
                FinAlgError::NotClosed(format!(
                    "product of basis elements {i} and {j} leaves the subspace"
                ))
            })?;
        }
    }
    let labels = (0..d).map(|i| format!("b{i}")).collect();
    let algebra = FinAlgebra::new(h.field(), labels, mult, unit_coords);
    let inclusion = crate::morphism::AlgMorphism {
        matrix: Matrix::from_cols(h.field(), basis),
    };
    Ok((algebra, inclusion))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagonal_algebra_passes() {
        let a = FinAlgebra::diagonal(Field::Q, vec!["p".into(), "q".into(), "r".into()]);
        assert!(check_algebra(&a).passed());
        // f_p . f_p = f_p and f_p . f_q = 0
        let p = a.basis_vec(0);
        let q = a.basis_vec(1);
        assert_eq!(a.multiply(&p, &p), p);
        assert!(vect::is_zero(&a.multiply(&p, &q)));
    }

    #[test]
    fn dual_numbers_pass() {
        let a = FinAlgebra::dual_numbers(Field::Q);
        assert!(check_algebra(&a).passed());
        let x = a.basis_vec(1);
        assert!(vect::is_zero(&a.multiply(&x, &x)));
    }

    #[test]
    fn opposite_reverses_products() {
        let a = FinAlgebra::matrix_algebra(Field::Q, 2);
        let op = a.opposite();
        assert!(check_algebra(&op).passed());
        let e12 = a.basis_vec(1);
        let e21 = a.basis_vec(2);
        // E12 . E21 = E11 in M2, so the opposite gives E22
        assert_eq!(op.multiply(&e12, &e21), a.multiply(&e21, &e12));
        assert_eq!(op.multiply(&e12, &e21), a.basis_vec(3));
    }

    #[test]
    fn enveloping_is_lawful_and_componentwise() {
        for base in [
            FinAlgebra::diagonal(Field::Q, vec!["p".into(), "q".into()]),
            FinAlgebra::matrix_algebra(Field::Q, 2),
        ] {
            let e = base.enveloping();
            assert_eq!(e.dim(), base.dim() * base.dim());
            assert!(check_algebra(&e).passed());
        }
        // second legs multiply in reverse: (E11|E12).(E11|E21) = E11|(E21.E12) = E11|E22
        let m2 = FinAlgebra::matrix_algebra(Field::Q, 2);
        let e = m2.enveloping();
        let x = e.basis_vec(1);
        let y = e.basis_vec(2);
        assert_eq!(e.multiply(&x, &y), e.basis_vec(3));
        assert_eq!(e.multiply(&y, &x), e.basis_vec(0));
    }

    #[test]
    fn matrix_algebra_passes() {
        for n in 1..=3 {
            let a = FinAlgebra::matrix_algebra(Field::Q, n);
            assert!(check_algebra(&a).passed());
        }
    }

    #[test]
    fn perturbed_structure_constant_is_witnessed() {
        let mut a = FinAlgebra::dual_numbers(Field::Q);
        // killing 1.x breaks the unit law
        a.mult[0][1] = vect::zero(Field::Q, 2);
        let cert = check_algebra(&a);
        assert!(!cert.passed());
        assert!(cert.failures().iter().any(|c| c.name == "unit"));
    }

    #[test]
    fn associativity_break_is_witnessed() {
        let mut a = FinAlgebra::dual_numbers(Field::Q);
        // x.1 = 2x while 1.x = x: (x.1).1 = 4x but x.(1.1) = 2x
        a.mult[1][0] = vec![Field::Q.zero(), Field::Q.from_i64(2)];
        let cert = check_algebra(&a);
        let assoc = cert.failures().into_iter().find(|c| c.name == "associativity");
        assert!(assoc.is_some());
        assert!(assoc.unwrap().witness.as_deref().unwrap_or("").contains("x"));
    }

    #[test]
    fn subalgebra_extraction_round_trips() {
        // span{1, x} of k[x]/(x^2) is the whole algebra; span{1} is a line
        let h = FinAlgebra::dual_numbers(Field::Q);
        let line = Subspace::from_vectors(Field::Q, 2, &[h.unit_vec()]);
        let (b, inc) = subalgebra_from_subspace(&h, &line).unwrap();
        assert_eq!(b.dim(), 1);
        assert!(check_algebra(&b).passed());
        assert_eq!(inc.matrix.mul_vec(&b.unit_vec()), h.unit_vec());
    }

    #[test]
    fn non_closed_subspace_rejected() {
        // span{x + 1/0?}: use span{E12} in M2 which is not unital
        let h = FinAlgebra::matrix_algebra(Field::Q, 2);
        let v = h.basis_vec(1);
        let sub = Subspace::from_vectors(Field::Q, 4, &[v]);
        assert!(subalgebra_from_subspace(&h, &sub).is_err());
    }
}
