//! The left bialgebroid data type: two algebras, the two base embeddings,
//! and the coring structure maps in explicit quotient coordinates.

use crate::BialgebroidError;
use exact_linalg::{kernel, Matrix, Subspace};
use finalg::{
    tensor_over_A, AlgMorphism, BimoduleStructure, FinAlgError, FinAlgebra, TensorOverA,
};

/// A left bialgebroid (A, H): the total algebra H carries an A-bimodule
/// structure through the commuting embeddings s and t (t reverses products),
/// and a coassociative counital coproduct valued in the tensor square over A,
/// where the right A-action on the first leg is left multiplication by t
/// and the left A-action on the second leg is left multiplication by s.
#[derive(Clone, Debug)]
pub struct LeftBialgebroid {
    base: FinAlgebra,
    total: FinAlgebra,
    source: Matrix,
    target: Matrix,
    delta: Matrix,
    counit: Matrix,
    coring: TensorOverA,
}

impl LeftBialgebroid {
    /// Builds the structure, with the coproduct given on the ambient tensor
    /// square; only shapes are checked here, laws are the verifier's job.
    pub fn new(
        base: FinAlgebra,
        total: FinAlgebra,
        source: Matrix,
        target: Matrix,
        delta_ambient: &Matrix,
        counit: Matrix,
    ) -> Result<LeftBialgebroid, BialgebroidError> {
        let (na, nh) = (base.dim(), total.dim());
        if base.field() != total.field() {
            return Err(BialgebroidError::Shape("base and total fields differ".into()));
        }
        for (m, rows, cols, what) in [
            (&source, nh, na, "source embedding"),
            (&target, nh, na, "target embedding"),
            (delta_ambient, nh * nh, nh, "coproduct"),
            (&counit, na, nh, "counit"),
        ] {
            if m.rows() != rows || m.cols() != cols {
                return Err(BialgebroidError::Shape(format!(
                    "{what} is {}x{}, expected {rows}x{cols}",
                    m.rows(),
                    m.cols()
                )));
            }
        }
        let bim = carrier_bimodule_of(&base, &total, &source, &target);
        let coring = tensor_over_A(&bim, &bim)?;
        let delta = coring.quot.projection.mul(delta_ambient);
        Ok(LeftBialgebroid { base, total, source, target, delta, counit, coring })
    }

    pub fn base(&self) -> &FinAlgebra {
        &self.base
    }

    pub fn total(&self) -> &FinAlgebra {
        &self.total
    }

    pub fn source_map(&self) -> &Matrix {
        &self.source
    }

    pub fn target_map(&self) -> &Matrix {
        &self.target
    }

    /// Coproduct in quotient coordinates of the tensor square over A.
    pub fn coproduct(&self) -> &Matrix {
        &self.delta
    }

    pub fn counit_map(&self) -> &Matrix {
        &self.counit
    }

    /// The tensor square over A that the coproduct is valued in.
    pub fn coring(&self) -> &TensorOverA {
        &self.coring
    }

    /// Distinguished ambient representative of the coproduct, one column per
    /// total-algebra basis vector.
    pub fn coproduct_representative(&self) -> Matrix {
        self.coring.quot.section.mul(&self.delta)
    }

    /// Left multiplication by the image of a base basis vector under s.
    pub fn source_left_mult(&self, a: usize) -> Matrix {
        self.total.left_mult(&self.source.col(a))
    }

    /// Left multiplication by the image of a base basis vector under t.
    pub fn target_left_mult(&self, a: usize) -> Matrix {
        self.total.left_mult(&self.target.col(a))
    }

    /// H as an A-bimodule: both actions by left multiplication, through s on
    /// the left and through t on the right.
    pub fn carrier_bimodule(&self) -> BimoduleStructure {
        carrier_bimodule_of(&self.base, &self.total, &self.source, &self.target)
    }

    /// H as a bimodule over the opposite base, both actions through t; the
    /// tensor square of this is the domain of the canonical map.
    pub fn twisted_bimodule(&self) -> BimoduleStructure {
        let left = (0..self.base.dim())
            .map(|a| self.total.left_mult(&self.target.col(a)))
            .collect();
        let right = (0..self.base.dim())
            .map(|a| self.total.right_mult(&self.target.col(a)))
            .collect();
        BimoduleStructure {
            algebra: self.base.opposite(),
            carrier_dim: self.total.dim(),
            left_action: left,
            right_action: right,
        }
    }

    /// The combined embedding of the enveloping algebra of the base,
    /// (a, b) mapped to s(a) t(b).
    pub fn enveloping_unit(&self) -> (FinAlgebra, AlgMorphism) {
        let na = self.base.dim();
        let mut cols = Vec::with_capacity(na * na);
        for a in 0..na {
            let sa = self.source.col(a);
            for u in 0..na {
                cols.push(self.total.multiply(&sa, &self.target.col(u)));
            }
        }
        let env = self.base.enveloping();
        (env, AlgMorphism { matrix: Matrix::from_cols(self.total.field(), cols) })
    }

    /// Kernel of the counit.
    pub fn counit_kernel(&self) -> Subspace {
        kernel(&self.counit)
    }

    /// Tensor cube over A of the carrier, for coassociativity checks.
    pub fn triple_coring(&self) -> Result<TensorOverA, FinAlgError> {
        let bim = self.carrier_bimodule();
        finalg::tensor_chain(&[&bim, &bim, &bim])
    }
}

fn carrier_bimodule_of(
    base: &FinAlgebra,
    total: &FinAlgebra,
    source: &Matrix,
    target: &Matrix,
) -> BimoduleStructure {
    let left = (0..base.dim()).map(|a| total.left_mult(&source.col(a))).collect();
    let right = (0..base.dim()).map(|a| total.left_mult(&target.col(a))).collect();
    BimoduleStructure {
        algebra: base.clone(),
        carrier_dim: total.dim(),
        left_action: left,
        right_action: right,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use exact_linalg::Field;

    #[test]
    fn trivial_base_total_pair_has_expected_coring() {
        let a = FinAlgebra::diagonal(Field::Q, vec!["p".into(), "q".into()]);
        let id = Matrix::identity(Field::Q, 2);
        // H = A, s = t = id, coproduct x -> x (x) 1, counit = id
        let mut delta_amb = Matrix::zero(Field::Q, 4, 2);
        delta_amb.set(0, 0, Field::Q.one());
        delta_amb.set(1, 0, Field::Q.one());
        delta_amb.set(2, 1, Field::Q.one());
        delta_amb.set(3, 1, Field::Q.one());
        let b = LeftBialgebroid::new(a.clone(), a, id.clone(), id.clone(), &delta_amb, id)
            .unwrap();
        assert_eq!(b.coring().dim(), 2);
        assert_eq!(b.coproduct().cols(), 2);
    }

    #[test]
    fn shape_errors_are_reported() {
        let a = FinAlgebra::field_algebra(Field::Q);
        let h = FinAlgebra::diagonal(Field::Q, vec!["u".into(), "v".into()]);
        let bad = LeftBialgebroid::new(
            a.clone(),
            h,
            Matrix::identity(Field::Q, 1),
            Matrix::identity(Field::Q, 1),
            &Matrix::zero(Field::Q, 4, 2),
            Matrix::zero(Field::Q, 1, 2),
        );
        assert!(matches!(bad, Err(BialgebroidError::Shape(_))));
    }
}
