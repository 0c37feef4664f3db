//! Quotient by the ideal of source-target differences.

use crate::build::{build_function_hopf_algebroid, FunctionHopfAlgebroid};
use crate::ideal::source_target_ideal;
use crate::FunHopfError;
use exact_linalg::{kernel, Certification, Matrix, Subspace};
use groupoid::isotropy;

/// The quotient of the total algebra by the source-target ideal, realised as
/// the function structure on the loops, together with the projection onto it.
pub struct IsotropyQuotient {
    /// Loop arrows of the parent, ascending; coordinate `k` of the quotient
    /// is parent coordinate `isotropy_arrows[k]`.
    pub isotropy_arrows: Vec<usize>,
    /// The kernel of the projection.
    pub ideal: Subspace,
    /// Coordinate projection from the parent total algebra.
    pub projection: Matrix,
    pub hopf: FunctionHopfAlgebroid,
    pub certification: Certification,
}

/// Builds the quotient and certifies that projecting onto loop coordinates
/// is a map of the full structure: it kills exactly the source-target ideal
/// and intertwines product, unit, coproduct, counit, and antipode.
pub fn isotropy_quotient(h: &FunctionHopfAlgebroid) -> Result<IsotropyQuotient, FunHopfError> {
    let g = h.groupoid();
    let field = h.field();
    let nh = g.n_arrows();
    let loops = isotropy(g);
    let sub_g = loops.as_groupoid(g);
    let quotient = build_function_hopf_algebroid(&sub_g, field)?;
    let arrows = loops.arrows().to_vec();
    let ni = arrows.len();
    for (k, &a) in arrows.iter().enumerate() {
        if sub_g.arrow_id(k) != g.arrow_id(a) {
            return Err(FunHopfError::Incoherent(format!(
                "loop coordinate {k} is {} in the quotient but {} in the parent",
                sub_g.arrow_id(k),
                g.arrow_id(a)
            )));
        }
    }

    let mut projection = Matrix::zero(field, ni, nh);
    for (k, &a) in arrows.iter().enumerate() {
        projection.set(k, a, field.one());
    }

    let mut cert = Certification::new();
    let ideal = source_target_ideal(h);
    cert.record(
        "projection-kernel-is-source-target-ideal",
        kernel(&projection) == ideal,
        String::new(),
    );

    let b = h.bialgebroid();
    let q = quotient.bialgebroid();
    cert.record(
        "projection-intertwines-source",
        projection.mul(b.source_map()) == *q.source_map(),
        String::new(),
    );
    cert.record(
        "projection-intertwines-target",
        projection.mul(b.target_map()) == *q.target_map(),
        String::new(),
    );
    cert.record(
        "projection-intertwines-counit",
        q.counit_map().mul(&projection) == *b.counit_map(),
        String::new(),
    );
    cert.record(
        "projection-intertwines-antipode",
        projection.mul(h.antipode()) == quotient.antipode().mul(&projection),
        String::new(),
    );

    let mut multiplicative = true;
    let mut witness = String::new();
    let total = h.total();
    let bar = quotient.total();
    'mult: for i in 0..nh {
        for j in 0..nh {
            let lhs = projection.mul_vec(&total.multiply(&total.basis_vec(i), &total.basis_vec(j)));
            let rhs = bar.multiply(
                &projection.mul_vec(&total.basis_vec(i)),
                &projection.mul_vec(&total.basis_vec(j)),
            );
            if lhs != rhs {
                multiplicative = false;
                witness = format!("{}.{}", total.label(i), total.label(j));
                break 'mult;
            }
        }
    }
    cert.record("projection-is-multiplicative", multiplicative, witness);
    cert.record(
        "projection-is-unital",
        projection.mul_vec(&total.unit_vec()) == bar.unit_vec(),
        String::new(),
    );

    // the legwise projection must kill every coring relation before it can
    // carry the coproduct down
    let both_legs = projection.kronecker(&projection);
    let descends = b
        .coring()
        .relations
        .basis_vectors()
        .iter()
        .all(|r| q.coring().project(&both_legs.mul_vec(r)).iter().all(|c| c.is_zero()));
    cert.record("projection-tensor-descends", descends, String::new());
    if descends {
        let induced = q.coring().quot.projection.mul(&both_legs).mul(&b.coring().quot.section);
        cert.record(
            "projection-intertwines-coproduct",
            induced.mul(b.coproduct()) == q.coproduct().mul(&projection),
            String::new(),
        );
    }

    Ok(IsotropyQuotient {
        isotropy_arrows: arrows,
        ideal,
        projection,
        hopf: quotient,
        certification: cert,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use exact_linalg::Field;
    use groupoid::corpus;

    #[test]
    fn pair_groupoid_quotient_keeps_only_identity_loops() {
        let g = corpus::pair_groupoid(2);
        let h = build_function_hopf_algebroid(&g, Field::Q).unwrap();
        let iq = isotropy_quotient(&h).unwrap();
        iq.certification.expect_pass("pair groupoid isotropy quotient");
        assert_eq!(iq.isotropy_arrows.len(), 2);
        assert_eq!(iq.hopf.total().dim(), 2);
        assert_eq!(iq.ideal.dim(), 2);
        // the quotient of a contractible groupoid is the base algebra itself
        let q = iq.hopf.groupoid();
        assert!((0..q.n_arrows()).all(|a| q.is_identity(a)));
    }

    #[test]
    fn one_object_group_is_untouched() {
        let g = corpus::group_groupoid(&corpus::cyclic(3));
        let h = build_function_hopf_algebroid(&g, Field::Q).unwrap();
        let iq = isotropy_quotient(&h).unwrap();
        iq.certification.expect_pass("group quotient");
        assert_eq!(iq.isotropy_arrows, vec![0, 1, 2]);
        assert!(iq.ideal.is_zero());
        assert_eq!(iq.projection, Matrix::identity(Field::Q, 3));
    }

    #[test]
    fn every_corpus_quotient_certifies() {
        for (name, g) in corpus::connected_corpus() {
            let h = build_function_hopf_algebroid(&g, Field::Q).unwrap();
            let iq = isotropy_quotient(&h).unwrap();
            iq.certification.expect_pass(&name);
        }
    }
}
