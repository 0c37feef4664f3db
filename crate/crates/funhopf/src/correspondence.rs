//! Two-sided dictionary between normal Hopf ideals and quotient structures.

use std::collections::BTreeSet;

use crate::build::{arrow_span, build_function_hopf_algebroid, FunctionHopfAlgebroid};
use crate::coaction::adjoint_coaction;
use crate::coinv::{coinvariants, Coinvariants};
use crate::ideal::{classify_ideal, HopfIdeal};
use crate::isotropy::isotropy_quotient;
use crate::normal::check_normal_with;
use crate::verify::verify_function_hopf;
use crate::FunHopfError;
use bialgebroid::{certify_coideal_subring, certify_ideal_coideal, phi_ideal, psi_coinvariants};
use exact_linalg::{image, Certification, Matrix};
use finalg::{purity_check, Purity};
use groupoid::{enumerate_normal_subgroupoids, quotient_groupoid, QuotientGroupoid, WideSubgroupoid};

/// One matched entry of the dictionary: a normal subgroupoid, the ideal
/// spanned by the arrows outside it, the coinvariants of the induced
/// coaction, and the quotient groupoid.
pub struct CorrespondencePair {
    pub subgroupoid: WideSubgroupoid,
    pub ideal: HopfIdeal,
    pub coinv: Coinvariants,
    pub quotient: QuotientGroupoid,
}

pub struct CorrespondenceReport {
    pub pairs: Vec<CorrespondencePair>,
    pub certification: Certification,
}

fn complement_of(nh: usize, arrows: &[usize]) -> Vec<usize> {
    (0..nh).filter(|a| !arrows.contains(a)).collect()
}

/// Sweeps every coordinate span of the total algebra for normal wide Hopf
/// ideals, matches the survivors one-to-one with the enumerated normal
/// subgroupoids, and certifies each matched pair: coinvariant dimension,
/// agreement with the general ideal/subring operators in both directions,
/// purity of the extension, and the full structure comparison against the
/// quotient groupoid's own function algebra.
pub fn normal_correspondence(
    h: &FunctionHopfAlgebroid,
) -> Result<CorrespondenceReport, FunHopfError> {
    let g = h.groupoid();
    let nh = g.n_arrows();
    if nh > 16 {
        return Err(FunHopfError::Shape(format!(
            "coordinate-span sweep over {nh} arrows is too large"
        )));
    }
    let b = h.bialgebroid();
    let mut cert = Certification::new();

    let iso = isotropy_quotient(h)?;
    let adj = adjoint_coaction(h, &iso)?;

    let mut algebraic: BTreeSet<Vec<usize>> = BTreeSet::new();
    for mask in 0..(1usize << nh) {
        let members: Vec<usize> = (0..nh).filter(|i| mask >> i & 1 == 1).collect();
        let ideal = classify_ideal(h, &arrow_span(h, &members));
        if ideal.is_hopf_ideal()
            && ideal.wide
            && check_normal_with(h, &iso, &adj, &ideal).normal
        {
            algebraic.insert(members);
        }
    }

    let subgroupoids = enumerate_normal_subgroupoids(g);
    let expected: BTreeSet<Vec<usize>> =
        subgroupoids.iter().map(|n| complement_of(nh, n.arrows())).collect();
    cert.record(
        "normal-ideals-match-subgroupoid-enumeration",
        algebraic == expected,
        format!("{} algebraic vs {} enumerated", algebraic.len(), expected.len()),
    );

    let mut pairs = Vec::new();
    for (k, n) in subgroupoids.into_iter().enumerate() {
        let prefix = format!("pair{k}");
        let members = complement_of(nh, n.arrows());
        let ideal = classify_ideal(h, &arrow_span(h, &members));
        let coinv = coinvariants(h, &ideal)?;
        cert.merge(coinv.certification.clone().prefixed(&prefix));
        let quotient =
            quotient_groupoid(g, &n).map_err(|e| FunHopfError::NotNormal(e.to_string()))?;

        cert.record(
            format!("{prefix}:coinvariant-dimension-matches-quotient"),
            coinv.basis.len() == quotient.groupoid.n_arrows(),
            format!("{} vs {}", coinv.basis.len(), quotient.groupoid.n_arrows()),
        );

        // agreement with the operators defined on an arbitrary bialgebroid
        let ic = certify_ideal_coideal(b, &ideal.subspace)?;
        cert.record(format!("{prefix}:ideal-certifies-generally"), ic.is_certified(), String::new());
        let psi = psi_coinvariants(b, &ic)?;
        cert.record(
            format!("{prefix}:coinvariants-match-general-operator"),
            psi.subspace == coinv.subspace,
            String::new(),
        );
        let cs = certify_coideal_subring(b, &coinv.subspace)?;
        cert.record(
            format!("{prefix}:coinvariants-certify-as-subring"),
            cs.is_certified(),
            String::new(),
        );
        let phi = phi_ideal(b, &cs)?;
        cert.record(
            format!("{prefix}:ideal-recovered-from-coinvariants"),
            phi.subspace == ideal.subspace,
            String::new(),
        );

        match purity_check(h.total(), &coinv.algebra, &coinv.inclusion)? {
            Purity::Pure { .. } => cert.pass(format!("{prefix}:extension-pure")),
            Purity::NotPure { witness } => cert.fail(
                format!("{prefix}:extension-pure"),
                witness.map(|(name, _)| name).unwrap_or_default(),
            ),
        }

        let pair = CorrespondencePair { subgroupoid: n, ideal, coinv, quotient };
        cert.merge(quotient_structure_match(h, &pair)?.prefixed(&prefix));
        pairs.push(pair);
    }

    Ok(CorrespondenceReport { pairs, certification: cert })
}

/// Compares the coinvariants of a matched pair against the function algebra
/// of the quotient groupoid: pulling functions back along the projection
/// must be an isomorphism onto the coinvariants respecting product, unit,
/// source, target, counit, antipode, and coproduct.
pub fn quotient_structure_match(
    h: &FunctionHopfAlgebroid,
    pair: &CorrespondencePair,
) -> Result<Certification, FunHopfError> {
    let field = h.field();
    let nh = h.total().dim();
    let hq = build_function_hopf_algebroid(&pair.quotient.groupoid, field)?;
    let nq = hq.total().dim();
    let mut cert = Certification::new();

    cert.merge(verify_function_hopf(&hq).prefixed("quotient"));
    cert.record(
        "translation-orbits-are-quotient-classes",
        pair.coinv.orbits == pair.quotient.classes,
        String::new(),
    );

    // pullback along the projection: each quotient coordinate becomes the
    // indicator sum of its class
    let mut pullback = Matrix::zero(field, nh, nq);
    for (q, class) in pair.quotient.classes.iter().enumerate() {
        for &a in class {
            pullback.set(a, q, field.one());
        }
    }

    cert.record(
        "pullback-image-is-coinvariants",
        image(&pullback) == pair.coinv.subspace,
        String::new(),
    );

    let total = h.total();
    let qtotal = hq.total();
    let mut multiplicative = true;
    'mult: for i in 0..nq {
        for j in 0..nq {
            let lhs = pullback.mul_vec(&qtotal.multiply(&qtotal.basis_vec(i), &qtotal.basis_vec(j)));
            let rhs = total.multiply(&pullback.col(i), &pullback.col(j));
            if lhs != rhs {
                multiplicative = false;
                break 'mult;
            }
        }
    }
    cert.record("pullback-multiplicative", multiplicative, String::new());
    cert.record(
        "pullback-unital",
        pullback.mul_vec(&qtotal.unit_vec()) == total.unit_vec(),
        String::new(),
    );

    let b = h.bialgebroid();
    let qb = hq.bialgebroid();
    cert.record(
        "pullback-intertwines-source",
        pullback.mul(qb.source_map()) == *b.source_map(),
        String::new(),
    );
    cert.record(
        "pullback-intertwines-target",
        pullback.mul(qb.target_map()) == *b.target_map(),
        String::new(),
    );
    cert.record(
        "pullback-intertwines-counit",
        b.counit_map().mul(&pullback) == *qb.counit_map(),
        String::new(),
    );
    cert.record(
        "pullback-intertwines-antipode",
        pullback.mul(hq.antipode()) == h.antipode().mul(&pullback),
        String::new(),
    );

    let both_legs = pullback.kronecker(&pullback);
    let descends = qb
        .coring()
        .relations
        .basis_vectors()
        .iter()
        .all(|r| b.coring().project(&both_legs.mul_vec(r)).iter().all(|c| c.is_zero()));
    cert.record("pullback-tensor-descends", descends, String::new());
    if descends {
        let induced = b.coring().quot.projection.mul(&both_legs).mul(&qb.coring().quot.section);
        cert.record(
            "pullback-intertwines-coproduct",
            induced.mul(qb.coproduct()) == b.coproduct().mul(&pullback),
            String::new(),
        );
    }

    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use exact_linalg::Field;
    use groupoid::corpus;

    fn lattice_size(g: &groupoid::FiniteGroupoid) -> usize {
        let h = build_function_hopf_algebroid(g, Field::Q).unwrap();
        let report = normal_correspondence(&h).unwrap();
        report.certification.expect_pass("dictionary");
        report.pairs.len()
    }

    #[test]
    fn lattice_sizes_of_the_fixtures() {
        assert_eq!(lattice_size(&corpus::pair_groupoid(2)), 1);
        assert_eq!(lattice_size(&corpus::p2_times_c2()), 2);
        assert_eq!(lattice_size(&corpus::c2_disjoint_c2()), 4);
        assert_eq!(lattice_size(&corpus::z4()), 3);
        assert_eq!(lattice_size(&corpus::s3()), 3);
    }

    #[test]
    fn product_fixture_pairs_in_detail() {
        let g = corpus::p2_times_c2();
        let h = build_function_hopf_algebroid(&g, Field::Q).unwrap();
        let report = normal_correspondence(&h).unwrap();
        let mut dims: Vec<(usize, usize)> = report
            .pairs
            .iter()
            .map(|p| (p.ideal.subspace.dim(), p.coinv.basis.len()))
            .collect();
        dims.sort();
        // the full loop subgroupoid cuts coinvariants down to the pair
        // groupoid's functions; identities-only leaves everything
        assert_eq!(dims, vec![(4, 4), (6, 8)]);
    }
}
