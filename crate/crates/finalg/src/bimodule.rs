//! A-bimodule structures on finite-dimensional spaces, given by action matrices.

use crate::algebra::FinAlgebra;
use exact_linalg::{Certification, Matrix};

/// A bimodule over a fixed base algebra: one left and one right action matrix
/// per base basis vector, all on the same carrier space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BimoduleStructure {
    pub algebra: FinAlgebra,
    pub carrier_dim: usize,
    /// left_action[a] is the matrix of m -> basis_a . m
    pub left_action: Vec<Matrix>,
    /// right_action[a] is the matrix of m -> m . basis_a
    pub right_action: Vec<Matrix>,
}

impl BimoduleStructure {
    /// The algebra acting on itself by its own multiplication.
    pub fn regular(alg: &FinAlgebra) -> BimoduleStructure {
        let left = (0..alg.dim()).map(|a| alg.left_mult(&alg.basis_vec(a))).collect();
        let right = (0..alg.dim()).map(|a| alg.right_mult(&alg.basis_vec(a))).collect();
        BimoduleStructure {
            algebra: alg.clone(),
            carrier_dim: alg.dim(),
            left_action: left,
            right_action: right,
        }
    }

    /// Left action matrix of an arbitrary base element.
    pub fn left_of(&self, x: &[exact_linalg::Scalar]) -> Matrix {
        let mut m = Matrix::zero(self.algebra.field(), self.carrier_dim, self.carrier_dim);
        for (a, c) in x.iter().enumerate() {
            if !c.is_zero() {
                m = m.add(&self.left_action[a].scale(c));
            }
        }
        m
    }

    pub fn right_of(&self, x: &[exact_linalg::Scalar]) -> Matrix {
        let mut m = Matrix::zero(self.algebra.field(), self.carrier_dim, self.carrier_dim);
        for (a, c) in x.iter().enumerate() {
            if !c.is_zero() {
                m = m.add(&self.right_action[a].scale(c));
            }
        }
        m
    }
}

/// Checks the bimodule axioms: both actions unital and associative, and
/// commuting with each other.
pub fn check_bimodule(bim: &BimoduleStructure) -> Certification {
    let mut cert = Certification::new();
    let alg = &bim.algebra;
    let d = alg.dim();
    let n = bim.carrier_dim;
    let id = Matrix::identity(alg.field(), n);

    if bim.left_action.len() != d || bim.right_action.len() != d {
        cert.fail(
            "bimodule-shape",
            format!("expected {d} action matrices per side"),
        );
        return cert;
    }
    for (a, m) in bim.left_action.iter().chain(bim.right_action.iter()).enumerate() {
        if m.rows() != n || m.cols() != n {
            cert.fail("bimodule-shape", format!("action matrix {a} is not {n}x{n}"));
            return cert;
        }
    }
    cert.pass("bimodule-shape");

    cert.record(
        "bimodule-unital",
        bim.left_of(&alg.unit_vec()) == id && bim.right_of(&alg.unit_vec()) == id,
        "unit does not act as identity",
    );

    let mut ok = true;
    'left: for i in 0..d {
        for j in 0..d {
            // (e_i e_j) . m = e_i . (e_j . m)
            let prod = bim.left_of(alg.basis_product(i, j));
            if prod != bim.left_action[i].mul(&bim.left_action[j]) {
                cert.fail(
                    "bimodule-left-associative",
                    format!("fails on {} . {}", alg.label(i), alg.label(j)),
                );
                ok = false;
                break 'left;
            }
        }
    }
    if ok {
        cert.pass("bimodule-left-associative");
    }

    ok = true;
    'right: for i in 0..d {
        for j in 0..d {
            // m . (e_i e_j) = (m . e_i) . e_j
            let prod = bim.right_of(alg.basis_product(i, j));
            if prod != bim.right_action[j].mul(&bim.right_action[i]) {
                cert.fail(
                    "bimodule-right-associative",
                    format!("fails on {} . {}", alg.label(i), alg.label(j)),
                );
                ok = false;
                break 'right;
            }
        }
    }
    if ok {
        cert.pass("bimodule-right-associative");
    }

    ok = true;
    'comm: for i in 0..d {
        for j in 0..d {
            let lr = bim.left_action[i].mul(&bim.right_action[j]);
            let rl = bim.right_action[j].mul(&bim.left_action[i]);
            if lr != rl {
                cert.fail(
                    "bimodule-actions-commute",
                    format!("left {} vs right {}", alg.label(i), alg.label(j)),
                );
                ok = false;
                break 'comm;
            }
        }
    }
    if ok {
        cert.pass("bimodule-actions-commute");
    }

    cert
}

#[cfg(test)]
mod tests {
    use super::*;
    use exact_linalg::Field;

    #[test]
    fn regular_bimodule_is_lawful() {
        for alg in [
            FinAlgebra::diagonal(Field::Q, vec!["p".into(), "q".into()]),
            FinAlgebra::dual_numbers(Field::Q),
            FinAlgebra::matrix_algebra(Field::Q, 2),
        ] {
            assert!(check_bimodule(&BimoduleStructure::regular(&alg)).passed());
        }
    }

    #[test]
    fn scaled_action_is_rejected() {
        let alg = FinAlgebra::diagonal(Field::Q, vec!["p".into(), "q".into()]);
        let mut bim = BimoduleStructure::regular(&alg);
        bim.left_action[0] = bim.left_action[0].scale(&Field::Q.from_i64(2));
        let cert = check_bimodule(&bim);
        assert!(!cert.passed());
    }
}
