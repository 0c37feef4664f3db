//! Unital algebra morphisms as matrices on the chosen bases.

use crate::algebra::FinAlgebra;
use exact_linalg::{Certification, Matrix};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgMorphism {
    /// Columns are the images of the source basis vectors.
    pub matrix: Matrix,
}

impl AlgMorphism {
    pub fn identity(alg: &FinAlgebra) -> AlgMorphism {
        AlgMorphism { matrix: Matrix::identity(alg.field(), alg.dim()) }
    }

    pub fn compose(&self, inner: &AlgMorphism) -> AlgMorphism {
        AlgMorphism { matrix: self.matrix.mul(&inner.matrix) }
    }

    pub fn apply(&self, v: &[exact_linalg::Scalar]) -> Vec<exact_linalg::Scalar> {
        self.matrix.mul_vec(v)
    }

    pub fn is_injective(&self) -> bool {
        self.matrix.rank() == self.matrix.cols()
    }
}

/// Checks that `phi` respects units and products of `src` / `dst`.
pub fn check_morphism(src: &FinAlgebra, dst: &FinAlgebra, phi: &AlgMorphism) -> Certification {
    let mut cert = Certification::new();
    if phi.matrix.rows() != dst.dim() || phi.matrix.cols() != src.dim() {
        cert.fail(
            "morphism-shape",
            format!(
                "matrix {}x{} does not map dim {} into dim {}",
                phi.matrix.rows(),
                phi.matrix.cols(),
                src.dim(),
                dst.dim()
            ),
        );
        return cert;
    }
    cert.record(
        "morphism-unit",
        phi.apply(&src.unit_vec()) == dst.unit_vec(),
        "unit is not sent to unit",
    );
    let mut mult_ok = true;
    'outer: for i in 0..src.dim() {
        for j in 0..src.dim() {
            let lhs = phi.apply(src.basis_product(i, j));
            let rhs = dst.multiply(&phi.apply(&src.basis_vec(i)), &phi.apply(&src.basis_vec(j)));
            if lhs != rhs {
                cert.fail(
                    "morphism-multiplicative",
                    format!("fails on {} . {}", src.label(i), src.label(j)),
                );
                mult_ok = false;
                break 'outer;
            }
        }
    }
    if mult_ok {
        cert.pass("morphism-multiplicative");
    }
    cert
}
