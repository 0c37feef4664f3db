//! Axiom certification for left bialgebroids: every law is checked on all
//! basis tuples and failures carry the first offending tuple.

use crate::core::LeftBialgebroid;
use exact_linalg::{Certification, Matrix};
use finalg::{
    check_bimodule, check_morphism, descend_factorwise, legwise_product, takeuchi_subspace,
};

/// Runs the full axiom suite. The report doubles as a counterexample
/// detector: a failed check names the first offending basis tuple.
pub fn verify_bialgebroid(b: &LeftBialgebroid) -> Certification {
    let mut cert = Certification::new();
    let base = b.base();
    let total = b.total();
    let (na, nh) = (base.dim(), total.dim());
    let field = total.field();

    // the two embeddings give one algebra map from the enveloping base
    cert.record(
        "source-preserves-unit",
        b.source_map().mul_vec(&base.unit_vec()) == total.unit_vec(),
        "s(1) differs from 1",
    );
    cert.record(
        "target-preserves-unit",
        b.target_map().mul_vec(&base.unit_vec()) == total.unit_vec(),
        "t(1) differs from 1",
    );
    let (env, eta) = b.enveloping_unit();
    cert.merge(check_morphism(&env, total, &eta).prefixed("unit-embedding"));

    // the carrier bimodule used to form the tensor square
    cert.merge(check_bimodule(&b.carrier_bimodule()).prefixed("carrier"));

    let coring = b.coring();
    let delta = b.coproduct();
    let counit = b.counit_map();
    let d_rep = b.coproduct_representative();
    let id_h = Matrix::identity(field, nh);

    // the coproduct commutes with both base actions
    let mut bad = None;
    for a in 0..na {
        let act = b.source_left_mult(a);
        let lifted = match descend_factorwise(&[&act, &id_h], coring, coring) {
            Ok(m) => m,
            Err(e) => {
                bad = Some(format!("{}: {e}", base.label(a)));
                break;
            }
        };
        if delta.mul(&act) != lifted.mul(delta) {
            bad = Some(base.label(a).to_string());
            break;
        }
    }
    cert.record("coproduct-source-linear", bad.is_none(), bad.unwrap_or_default());

    let mut bad = None;
    for a in 0..na {
        let act = b.target_left_mult(a);
        let lifted = match descend_factorwise(&[&id_h, &act], coring, coring) {
            Ok(m) => m,
            Err(e) => {
                bad = Some(format!("{}: {e}", base.label(a)));
                break;
            }
        };
        if delta.mul(&act) != lifted.mul(delta) {
            bad = Some(base.label(a).to_string());
            break;
        }
    }
    cert.record("coproduct-target-linear", bad.is_none(), bad.unwrap_or_default());

    // the counit intertwines the base actions with multiplication in the base
    let mut bad = None;
    for a in 0..na {
        if counit.mul(&b.source_left_mult(a)) != base.left_mult(&base.basis_vec(a)).mul(counit) {
            bad = Some(base.label(a).to_string());
            break;
        }
    }
    cert.record("counit-source-linear", bad.is_none(), bad.unwrap_or_default());

    let mut bad = None;
    for a in 0..na {
        if counit.mul(&b.target_left_mult(a)) != base.right_mult(&base.basis_vec(a)).mul(counit) {
            bad = Some(base.label(a).to_string());
            break;
        }
    }
    cert.record("counit-target-linear", bad.is_none(), bad.unwrap_or_default());

    // coassociativity, computed through the tensor cube
    match b.triple_coring() {
        Ok(triple) => {
            let one_then_two = triple.quot.projection.mul(&d_rep.kronecker(&id_h)).mul(&d_rep);
            let two_then_one = triple.quot.projection.mul(&id_h.kronecker(&d_rep)).mul(&d_rep);
            cert.record(
                "coproduct-coassociative",
                one_then_two == two_then_one,
                "the two iterated coproducts differ",
            );
        }
        Err(e) => cert.fail("coproduct-coassociative", format!("{e}")),
    }

    // counitality: collapsing either leg returns the identity
    let mut first_leg = Vec::with_capacity(nh * nh);
    let mut second_leg = Vec::with_capacity(nh * nh);
    for i in 0..nh {
        let s_eps_i = b.source_map().mul_vec(&counit.col(i));
        let t_eps_i = b.target_map().mul_vec(&counit.col(i));
        for j in 0..nh {
            first_leg.push(total.multiply(&s_eps_i, &total.basis_vec(j)));
            // for the second leg the roles of i and j swap below
            second_leg.push(total.multiply(&t_eps_i, &total.basis_vec(j)));
        }
    }
    let collapse_first = Matrix::from_cols(field, first_leg);
    cert.record(
        "counit-cancels-first-leg",
        collapse_first.mul(&d_rep) == id_h,
        "s(counit of first leg) times second leg is not the identity",
    );
    // second-leg collapse eats column (i, j) as t(counit(e_j)) . e_i
    let mut cols = Vec::with_capacity(nh * nh);
    for i in 0..nh {
        for j in 0..nh {
            cols.push(second_leg[j * nh + i].clone());
        }
    }
    let collapse_second = Matrix::from_cols(field, cols);
    cert.record(
        "counit-cancels-second-leg",
        collapse_second.mul(&d_rep) == id_h,
        "t(counit of second leg) times first leg is not the identity",
    );

    // the coproduct corestricts to the subspace where right multiplication
    // by t on the first leg agrees with right multiplication by s on the
    // second, and is an algebra map into it
    let first: Vec<Matrix> = (0..na).map(|a| total.right_mult(&b.target_map().col(a))).collect();
    let second: Vec<Matrix> = (0..na).map(|a| total.right_mult(&b.source_map().col(a))).collect();
    match takeuchi_subspace(coring, &first, &second) {
        Ok(tak) => {
            let mut bad = None;
            for i in 0..nh {
                if !tak.contains_vec(&delta.col(i)) {
                    bad = Some(total.label(i).to_string());
                    break;
                }
            }
            cert.record("coproduct-in-takeuchi", bad.is_none(), bad.unwrap_or_default());
        }
        Err(e) => cert.fail("coproduct-in-takeuchi", format!("{e}")),
    }

    let mut bad = None;
    'mult: for i in 0..nh {
        let di = d_rep.col(i);
        for j in 0..nh {
            let prod = coring.project(&legwise_product(total, &di, &d_rep.col(j)));
            let expected = delta.mul_vec(total.basis_product(i, j));
            if prod != expected {
                bad = Some(format!("({}, {})", total.label(i), total.label(j)));
                break 'mult;
            }
        }
    }
    cert.record("coproduct-multiplicative", bad.is_none(), bad.unwrap_or_default());

    let unit = total.unit_vec();
    cert.record(
        "coproduct-unital",
        delta.mul_vec(&unit) == coring.project_pure(&[&unit, &unit]),
        "coproduct of 1 is not the class of 1 (x) 1",
    );

    // the counit is a left character through either embedding
    let mut bad_s = None;
    let mut bad_t = None;
    for i in 0..nh {
        let ei = total.basis_vec(i);
        for j in 0..nh {
            let eps_of_product = counit.mul_vec(total.basis_product(i, j));
            let via_s = counit
                .mul_vec(&total.multiply(&ei, &b.source_map().mul_vec(&counit.col(j))));
            let via_t = counit
                .mul_vec(&total.multiply(&ei, &b.target_map().mul_vec(&counit.col(j))));
            if bad_s.is_none() && via_s != eps_of_product {
                bad_s = Some(format!("({}, {})", total.label(i), total.label(j)));
            }
            if bad_t.is_none() && via_t != eps_of_product {
                bad_t = Some(format!("({}, {})", total.label(i), total.label(j)));
            }
        }
        if bad_s.is_some() && bad_t.is_some() {
            break;
        }
    }
    cert.record("counit-left-character-source", bad_s.is_none(), bad_s.unwrap_or_default());
    cert.record("counit-left-character-target", bad_t.is_none(), bad_t.unwrap_or_default());

    cert.record(
        "counit-of-unit",
        counit.mul_vec(&unit) == base.unit_vec(),
        "counit of 1 is not 1",
    );

    // consequences of bilinearity worth certifying directly
    let mut bad = None;
    for a in 0..na {
        if delta.mul_vec(&b.source_map().col(a))
            != coring.project_pure(&[&b.source_map().col(a), &unit])
        {
            bad = Some(base.label(a).to_string());
            break;
        }
    }
    cert.record("coproduct-on-source", bad.is_none(), bad.unwrap_or_default());

    let mut bad = None;
    for a in 0..na {
        if delta.mul_vec(&b.target_map().col(a))
            != coring.project_pure(&[&unit, &b.target_map().col(a)])
        {
            bad = Some(base.label(a).to_string());
            break;
        }
    }
    cert.record("coproduct-on-target", bad.is_none(), bad.unwrap_or_default());

    // the induced action of H on the base reads the same through s and t
    let mut bad = None;
    'act: for i in 0..nh {
        let ei = total.basis_vec(i);
        for a in 0..na {
            let via_t = counit.mul_vec(&total.multiply(&ei, &b.target_map().col(a)));
            let via_s = counit.mul_vec(&total.multiply(&ei, &b.source_map().col(a)));
            if via_t != via_s {
                bad = Some(format!("({}, {})", total.label(i), base.label(a)));
                break 'act;
            }
        }
    }
    cert.record("counit-action-consistent", bad.is_none(), bad.unwrap_or_default());

    cert
}
