//! Axiom certification for function Hopf algebroids.

use crate::build::FunctionHopfAlgebroid;
use crate::FunHopfError;
use bialgebroid::{hopf_galois, verify_bialgebroid, verify_hopf_galois, HopfGalois};
use exact_linalg::{vect, Certification, Matrix};

/// Runs every bialgebroid law plus the antipode laws: inversion swaps source
/// and target, squares to the identity, is an algebra map, and convolving a
/// coproduct leg against it recovers the counit through t or s.
pub fn verify_function_hopf(h: &FunctionHopfAlgebroid) -> Certification {
    let b = h.bialgebroid();
    let mut cert = verify_bialgebroid(b);
    let field = h.field();
    let total = h.total();
    let nh = total.dim();
    let s = h.antipode();

    cert.record(
        "antipode-swaps-source-to-target",
        s.mul(b.source_map()) == *b.target_map(),
        String::new(),
    );
    cert.record(
        "antipode-swaps-target-to-source",
        s.mul(b.target_map()) == *b.source_map(),
        String::new(),
    );
    cert.record("antipode-involutive", s.mul(s) == Matrix::identity(field, nh), String::new());
    cert.record("antipode-unital", s.mul_vec(&total.unit_vec()) == total.unit_vec(), String::new());

    let mut bad = None;
    'mult: for i in 0..nh {
        for j in 0..nh {
            let lhs = s.mul_vec(total.basis_product(i, j));
            let rhs = total.multiply(&s.mul_vec(&total.basis_vec(i)), &s.mul_vec(&total.basis_vec(j)));
            if lhs != rhs {
                bad = Some(format!("{}.{}", total.label(i), total.label(j)));
                break 'mult;
            }
        }
    }
    cert.record("antipode-multiplicative", bad.is_none(), bad.unwrap_or_default());

    // sum of S(u1) u2 over the factorizations of u, against t(eps(u))
    let d = h.delta_ambient();
    let mut bad = None;
    for u in 0..nh {
        let col = d.col(u);
        let mut acc = vect::zero(field, nh);
        for i in 0..nh {
            for j in 0..nh {
                let c = &col[i * nh + j];
                if c.is_zero() {
                    continue;
                }
                let term = total.multiply(&s.mul_vec(&total.basis_vec(i)), &total.basis_vec(j));
                vect::add_scaled(&mut acc, &term, c);
            }
        }
        if acc != b.target_map().mul_vec(&b.counit_map().col(u)) {
            bad = Some(total.label(u).to_string());
            break;
        }
    }
    cert.record("antipode-cancels-first-leg", bad.is_none(), bad.unwrap_or_default());

    let mut bad = None;
    for u in 0..nh {
        let col = d.col(u);
        let mut acc = vect::zero(field, nh);
        for i in 0..nh {
            for j in 0..nh {
                let c = &col[i * nh + j];
                if c.is_zero() {
                    continue;
                }
                let term = total.multiply(&total.basis_vec(i), &s.mul_vec(&total.basis_vec(j)));
                vect::add_scaled(&mut acc, &term, c);
            }
        }
        if acc != b.source_map().mul_vec(&b.counit_map().col(u)) {
            bad = Some(total.label(u).to_string());
            break;
        }
    }
    cert.record("antipode-cancels-second-leg", bad.is_none(), bad.unwrap_or_default());

    cert
}

/// Certifies that the canonical map is invertible and that the translation
/// map it induces is exactly (id tensor antipode) after the coproduct.
pub fn translation_matches_antipode(h: &FunctionHopfAlgebroid) -> Result<Certification, FunHopfError> {
    let b = h.bialgebroid();
    let hg = hopf_galois(b)?;
    let mut cert = Certification::new();
    let data = match &hg {
        HopfGalois::LeftHopf(data) => data,
        HopfGalois::NotLeftHopf { domain_dim, codomain_dim, beta_rank } => {
            cert.record(
                "canonical-map-invertible",
                false,
                format!("{domain_dim}->{codomain_dim} of rank {beta_rank}"),
            );
            return Ok(cert);
        }
    };
    cert.merge(verify_hopf_galois(b, data));

    let nh = h.total().dim();
    let field = h.field();
    let antipode_second_leg = Matrix::identity(field, nh).kronecker(h.antipode());
    let expected = data
        .domain
        .quot
        .projection
        .mul(&antipode_second_leg)
        .mul(h.delta_ambient());
    cert.record(
        "translation-is-antipode-convolution",
        data.gamma == expected,
        String::new(),
    );
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::build::build_function_hopf_algebroid;
    use exact_linalg::Field;
    use groupoid::corpus;

    #[test]
    fn pair_groupoid_passes_every_axiom() {
        let h = build_function_hopf_algebroid(&corpus::pair_groupoid(2), Field::Q).unwrap();
        verify_function_hopf(&h).expect_pass("pair groupoid axioms");
    }

    #[test]
    fn translation_map_comes_from_the_antipode_on_the_pair_groupoid() {
        let h = build_function_hopf_algebroid(&corpus::pair_groupoid(2), Field::Q).unwrap();
        translation_matches_antipode(&h).unwrap().expect_pass("pair groupoid translation");
    }
}
