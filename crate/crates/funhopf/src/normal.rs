//! Normality of Hopf ideals against the sandwich coaction.

use crate::build::FunctionHopfAlgebroid;
use crate::coaction::{adjoint_coaction, AdjointCoaction};
use crate::ideal::HopfIdeal;
use crate::isotropy::{isotropy_quotient, IsotropyQuotient};
use crate::FunHopfError;
use exact_linalg::{vect, Certification, SpanBuilder};
use groupoid::{is_normal, WideSubgroupoid};

/// Verdict on an ideal: wideness, stability of its loop-quotient image under
/// the sandwich coaction, and agreement with arrow-level normality when the
/// ideal is a coordinate span.
pub struct NormalityReport {
    pub normal: bool,
    /// Contains every source-target difference.
    pub ni1: bool,
    /// Coaction keeps the quotiented ideal inside (ideal tensor total).
    pub ni2: bool,
    pub witness: Option<String>,
    pub groupoid_agrees: Option<bool>,
    pub certification: Certification,
}

/// Checks normality with precomputed quotient and coaction.
pub fn check_normal_with(
    h: &FunctionHopfAlgebroid,
    iso: &IsotropyQuotient,
    adj: &AdjointCoaction,
    ideal: &HopfIdeal,
) -> NormalityReport {
    let field = h.field();
    let nh = h.total().dim();
    let mut cert = Certification::new();

    let ni1 = ideal.wide;
    cert.record("ideal-contains-source-target-differences", ni1, String::new());

    // image of the ideal in the loop quotient
    let mut bar_span = SpanBuilder::new(field, iso.isotropy_arrows.len());
    for w in ideal.subspace.basis_vectors() {
        bar_span.insert(iso.projection.mul_vec(&w));
    }
    let bar_ideal = bar_span.into_subspace();

    let mut allowed = SpanBuilder::new(field, adj.tensor.dim());
    for w in bar_ideal.basis_vectors() {
        for j in 0..nh {
            allowed.insert(adj.tensor.project_pure(&[&w, &vect::unit(field, nh, j)]));
        }
    }
    let mut ni2 = true;
    let mut witness = None;
    for w in bar_ideal.basis_vectors() {
        if !allowed.contains(&adj.matrix.mul_vec(&w)) {
            ni2 = false;
            witness = Some("coaction leaves the ideal's leg".to_string());
            break;
        }
    }
    cert.record("coaction-preserves-quotiented-ideal", ni2, String::new());

    let normal = ni1 && ni2;
    if !ni1 && witness.is_none() {
        witness = Some("missing a source-target difference".to_string());
    }

    // cross-check against conjugation closure of the complement's loops
    let groupoid_agrees = match &ideal.arrow_set {
        Some(members) if ideal.is_hopf_ideal() && ideal.wide => {
            let complement: Vec<usize> =
                (0..nh).filter(|a| members.binary_search(a).is_err()).collect();
            WideSubgroupoid::new(h.groupoid(), complement).ok().map(|n| {
                let (arrow_normal, _) = is_normal(h.groupoid(), &n);
                let agrees = arrow_normal == normal;
                cert.record("matches-arrow-level-normality", agrees, String::new());
                agrees
            })
        }
        _ => None,
    };

    NormalityReport { normal, ni1, ni2, witness, groupoid_agrees, certification: cert }
}

/// Convenience wrapper building the loop quotient and coaction on the fly.
pub fn check_normal(
    h: &FunctionHopfAlgebroid,
    ideal: &HopfIdeal,
) -> Result<NormalityReport, FunHopfError> {
    let iso = isotropy_quotient(h)?;
    let adj = adjoint_coaction(h, &iso)?;
    Ok(check_normal_with(h, &iso, &adj, ideal))
}
