//! Construction of the function Hopf algebroid (k(G0), k(G1)) of a groupoid.

use crate::FunHopfError;
use bialgebroid::LeftBialgebroid;
use exact_linalg::{vect, Field, Matrix, Subspace};
use finalg::FinAlgebra;
use groupoid::{validate_groupoid, FiniteGroupoid};

/// Functions on a finite groupoid: base k(G0), total k(G1), source and
/// target summing over arrows by endpoint, coproduct summing over
/// factorizations, counit supported on identities, antipode by inversion.
#[derive(Clone, Debug)]
pub struct FunctionHopfAlgebroid {
    groupoid: FiniteGroupoid,
    bialgebroid: LeftBialgebroid,
    antipode: Matrix,
    delta_ambient: Matrix,
}

impl FunctionHopfAlgebroid {
    pub fn groupoid(&self) -> &FiniteGroupoid {
        &self.groupoid
    }

    pub fn bialgebroid(&self) -> &LeftBialgebroid {
        &self.bialgebroid
    }

    pub fn base(&self) -> &FinAlgebra {
        self.bialgebroid.base()
    }

    pub fn total(&self) -> &FinAlgebra {
        self.bialgebroid.total()
    }

    pub fn field(&self) -> Field {
        self.total().field()
    }

    /// The arrow-inversion permutation on k(G1).
    pub fn antipode(&self) -> &Matrix {
        &self.antipode
    }

    /// The coproduct landing in the ambient tensor square, one column per
    /// arrow, with a unit coefficient per factorization of that arrow.
    pub fn delta_ambient(&self) -> &Matrix {
        &self.delta_ambient
    }

    pub fn antipode_vec(&self, v: &[exact_linalg::Scalar]) -> Vec<exact_linalg::Scalar> {
        self.antipode.mul_vec(v)
    }
}

/// Span of the coordinate functions of a set of arrows.
pub fn arrow_span(h: &FunctionHopfAlgebroid, arrows: &[usize]) -> Subspace {
    let field = h.field();
    let nh = h.total().dim();
    let vecs: Vec<Vec<exact_linalg::Scalar>> =
        arrows.iter().map(|&g| vect::unit(field, nh, g)).collect();
    Subspace::from_vectors(field, nh, &vecs)
}

/// Builds the function Hopf algebroid over the given field; the groupoid is
/// re-validated so a broken table fails here rather than downstream.
pub fn build_function_hopf_algebroid(
    g: &FiniteGroupoid,
    field: Field,
) -> Result<FunctionHopfAlgebroid, FunHopfError> {
    let report = validate_groupoid(g);
    let failures = report.failures();
    if !failures.is_empty() {
        let summary = failures
            .iter()
            .map(|c| c.name.as_str())
            .collect::<Vec<_>>()
            .join(", ");
        return Err(FunHopfError::InvalidGroupoid(summary));
    }

    let (na, nh) = (g.n_objects(), g.n_arrows());
    let base = FinAlgebra::diagonal(field, g.object_ids().to_vec());
    let total = FinAlgebra::diagonal(field, g.arrow_ids().to_vec());

    let mut source = Matrix::zero(field, nh, na);
    let mut target = Matrix::zero(field, nh, na);
    for arrow in 0..nh {
        source.set(arrow, g.src(arrow), field.one());
        target.set(arrow, g.tgt(arrow), field.one());
    }

    let mut counit = Matrix::zero(field, na, nh);
    for x in 0..na {
        counit.set(x, g.ident(x), field.one());
    }

    let mut delta_ambient = Matrix::zero(field, nh * nh, nh);
    for (second, first) in g.composable_pairs() {
        let whole = g.comp(second, first).expect("pair listed as composable");
        delta_ambient.set(first * nh + second, whole, field.one());
    }

    let mut antipode = Matrix::zero(field, nh, nh);
    for arrow in 0..nh {
        antipode.set(g.inv(arrow), arrow, field.one());
    }

    let bialgebroid = LeftBialgebroid::new(base, total, source, target, &delta_ambient, counit)?;
    let pairs = g.composable_pairs().len();
    if bialgebroid.coring().dim() != pairs {
        return Err(FunHopfError::Incoherent(format!(
            "tensor square has dimension {}, expected one per composable pair ({pairs})",
            bialgebroid.coring().dim()
        )));
    }
    Ok(FunctionHopfAlgebroid { groupoid: g.clone(), bialgebroid, antipode, delta_ambient })
}
