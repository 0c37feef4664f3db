//! The ideal-to-subring and subring-to-ideal maps and the quotient coring,
//! checked against hand-computed values on the fixed instances.

mod common;

use bialgebroid::{
    certify_coideal_subring, certify_ideal_coideal, gamma_stability_and_xi, hopf_galois,
    phi_ideal, psi_coinvariants, xi_correspondence, BialgebroidError,
};
use exact_linalg::{vect, Field, Subspace};

fn fields() -> [Field; 4] {
    [Field::Q, common::fp(2), common::fp(3), common::fp(5)]
}

#[test]
fn coinvariants_of_zero_ideal_are_the_target_span() {
    for field in fields() {
        let b = common::pair_groupoid(field);
        let zero = Subspace::zero(field, 4);
        let ideal = certify_ideal_coideal(&b, &zero).expect("shape");
        assert!(ideal.is_certified());
        let sub = psi_coinvariants(&b, &ideal).expect("certified input");
        assert!(sub.is_certified());
        let t_span = Subspace::from_vectors(
            field,
            4,
            &[b.target_map().col(0), b.target_map().col(1)],
        );
        assert_eq!(sub.subspace, t_span);
    }
}

#[test]
fn coinvariants_of_zero_ideal_on_group_algebra_are_scalars() {
    for field in fields() {
        let b = common::group_bialgebra_c2(field);
        let zero = Subspace::zero(field, 2);
        let ideal = certify_ideal_coideal(&b, &zero).expect("shape");
        let sub = psi_coinvariants(&b, &ideal).expect("certified input");
        assert!(sub.is_certified());
        let scalars = Subspace::from_vectors(field, 2, &[b.total().unit_vec()]);
        assert_eq!(sub.subspace, scalars);
    }
}

#[test]
fn flatness_note_is_recorded() {
    let b = common::pair_groupoid(Field::Q);
    let zero = Subspace::zero(Field::Q, 4);
    let ideal = certify_ideal_coideal(&b, &zero).expect("shape");
    let sub = psi_coinvariants(&b, &ideal).expect("certified input");
    let flat = sub
        .certification
        .checks
        .iter()
        .find(|c| c.name == "carrier-flat-over-base")
        .expect("note present");
    assert!(flat.passed);
}

#[test]
fn quotient_by_zero_keeps_everything() {
    for field in fields() {
        let b = common::pair_groupoid(field);
        let zero = Subspace::zero(field, 4);
        let ideal = certify_ideal_coideal(&b, &zero).expect("shape");
        let q = xi_correspondence(&b, &ideal).expect("certified input");
        q.certification.expect_pass("quotient by zero");
        assert_eq!(q.quot.dim, 4);
        assert_eq!(q.tensor.dim(), b.coring().dim());
    }
}

#[test]
fn quotient_by_the_connecting_arrows_is_the_identity_part() {
    for field in fields() {
        let b = common::pair_groupoid(field);
        let h = b.total();
        let arrows = Subspace::from_vectors(field, 4, &[h.basis_vec(2), h.basis_vec(3)]);
        let ideal = certify_ideal_coideal(&b, &arrows).expect("shape");
        assert!(ideal.is_certified());
        assert!(ideal.left_ideal && ideal.two_sided_coideal);
        let q = xi_correspondence(&b, &ideal).expect("certified input");
        q.certification.expect_pass("quotient by arrows");
        assert_eq!(q.quot.dim, 2);
        assert_eq!(q.tensor.dim(), 2);
    }
}

#[test]
fn quotient_by_the_augmentation_ideal_is_the_base() {
    for field in fields() {
        let b = common::group_bialgebra_c2(field);
        let h = b.total();
        let aug = Subspace::from_vectors(
            field,
            2,
            &[vect::sub(&h.basis_vec(0), &h.basis_vec(1))],
        );
        let ideal = certify_ideal_coideal(&b, &aug).expect("shape");
        assert!(ideal.is_certified());
        let q = xi_correspondence(&b, &ideal).expect("certified input");
        q.certification.expect_pass("quotient by augmentation");
        assert_eq!(q.quot.dim, 1);
    }
}

#[test]
fn ideal_of_the_target_span_is_zero() {
    for field in fields() {
        let b = common::pair_groupoid(field);
        let t_span = Subspace::from_vectors(
            field,
            4,
            &[b.target_map().col(0), b.target_map().col(1)],
        );
        let subring = certify_coideal_subring(&b, &t_span).expect("shape");
        assert!(subring.is_certified());
        let ideal = phi_ideal(&b, &subring).expect("certified input");
        assert!(ideal.is_certified());
        assert!(ideal.subspace.is_zero());
    }
}

#[test]
fn ideal_of_the_whole_algebra_is_the_counit_kernel() {
    for field in fields() {
        for b in [common::pair_groupoid(field), common::group_bialgebra_c2(field)] {
            let full = Subspace::full(field, b.total().dim());
            let subring = certify_coideal_subring(&b, &full).expect("shape");
            assert!(subring.is_certified());
            let ideal = phi_ideal(&b, &subring).expect("certified input");
            assert!(ideal.is_certified());
            assert_eq!(ideal.subspace, b.counit_kernel());
        }
    }
}

#[test]
fn comparison_map_laws_hold_on_both_certified_subrings() {
    for field in fields() {
        let b = common::pair_groupoid(field);
        let hg = hopf_galois(&b).expect("descends");
        let data = hg.data().expect("left hopf");
        let t_span = Subspace::from_vectors(
            field,
            4,
            &[b.target_map().col(0), b.target_map().col(1)],
        );
        let full = Subspace::full(field, 4);
        for candidate in [t_span, full] {
            let subring = certify_coideal_subring(&b, &candidate).expect("shape");
            let cert = gamma_stability_and_xi(&b, data, &subring).expect("certified input");
            cert.expect_pass("comparison laws");
            for name in [
                "translation-stable-on-subring",
                "extension-splits",
                "xi-descends-to-extension-tensor",
                "xi-isomorphism",
                "coinvariants-recover-subring",
            ] {
                assert!(
                    cert.checks.iter().any(|c| c.name == name),
                    "{name} missing from the report"
                );
            }
        }
    }
}

#[test]
fn uncertified_inputs_are_rejected() {
    let field = Field::Q;
    let b = common::pair_groupoid(field);
    // a single connecting arrow spans an ideal that is not a coideal-subring
    let arrow = Subspace::from_vectors(field, 4, &[b.total().basis_vec(2)]);
    let subring = certify_coideal_subring(&b, &arrow).expect("shape");
    assert!(!subring.is_certified());
    assert!(matches!(
        phi_ideal(&b, &subring),
        Err(BialgebroidError::NotCertified(_))
    ));
    // the unit span is a subring but no coideal, hence no certified ideal
    let unit = Subspace::from_vectors(field, 4, &[b.total().unit_vec()]);
    let ideal = certify_ideal_coideal(&b, &unit).expect("shape");
    assert!(!ideal.is_certified());
    assert!(matches!(
        psi_coinvariants(&b, &ideal),
        Err(BialgebroidError::NotCertified(_))
    ));
    assert!(matches!(
        xi_correspondence(&b, &ideal),
        Err(BialgebroidError::NotCertified(_))
    ));
}
