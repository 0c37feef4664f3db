//! Axiom certification across the hand-built instances, passing and failing.

mod common;

use bialgebroid::verify_bialgebroid;
use exact_linalg::Field;
use finalg::FinAlgebra;

fn fields() -> [Field; 4] {
    [Field::Q, common::fp(2), common::fp(3), common::fp(5)]
}

#[test]
fn terminal_instance_passes() {
    for field in fields() {
        let b = common::terminal(field);
        verify_bialgebroid(&b).expect_pass("axioms");
    }
}

#[test]
fn trivial_instances_pass_over_diagonal_bases() {
    for field in fields() {
        for n in 1..=3 {
            let labels = (0..n).map(|i| format!("p{i}")).collect();
            let base = FinAlgebra::diagonal(field, labels);
            let b = common::trivial_over(base);
            verify_bialgebroid(&b).expect_pass("axioms");
        }
    }
}

#[test]
fn order_two_group_algebra_passes() {
    for field in fields() {
        let b = common::group_bialgebra_c2(field);
        verify_bialgebroid(&b).expect_pass("axioms");
    }
}

#[test]
fn idempotent_monoid_algebra_passes() {
    for field in fields() {
        let b = common::idempotent_monoid(field);
        verify_bialgebroid(&b).expect_pass("axioms");
    }
}

#[test]
fn pair_groupoid_passes() {
    for field in fields() {
        let b = common::pair_groupoid(field);
        verify_bialgebroid(&b).expect_pass("axioms");
    }
}

#[test]
fn primitive_generator_fails_multiplicativity_away_from_char_two() {
    for field in [Field::Q, common::fp(3), common::fp(5)] {
        let b = common::nilpotent_primitive(field).expect("construct");
        let cert = verify_bialgebroid(&b);
        assert!(!cert.passed());
        let failed: Vec<&str> = cert.failures().iter().map(|c| c.name.as_str()).collect();
        assert!(failed.contains(&"coproduct-multiplicative"), "failed set: {failed:?}");
    }
}

#[test]
fn primitive_generator_passes_in_char_two() {
    let b = common::nilpotent_primitive(common::fp(2)).expect("construct");
    verify_bialgebroid(&b).expect_pass("axioms");
}

#[test]
fn flipped_coproduct_on_pair_groupoid_is_caught() {
    for field in [Field::Q, common::fp(3)] {
        let b = common::pair_groupoid_flipped(field);
        let cert = verify_bialgebroid(&b);
        assert!(!cert.passed());
        let failed: Vec<&str> = cert.failures().iter().map(|c| c.name.as_str()).collect();
        assert!(failed.contains(&"coproduct-unital"), "failed set: {failed:?}");
    }
}

#[test]
fn failures_carry_witnesses() {
    let b = common::pair_groupoid_flipped(Field::Q);
    let cert = verify_bialgebroid(&b);
    for check in cert.failures() {
        assert!(check.witness.is_some(), "{} lacks a witness", check.name);
    }
}
