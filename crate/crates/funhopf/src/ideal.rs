//! Hopf ideal flags for subspaces of the total algebra.

use crate::build::FunctionHopfAlgebroid;
use exact_linalg::{vect, Certification, SpanBuilder, Subspace};
use groupoid::WideSubgroupoid;

/// A subspace with its Hopf-ideal flags. `arrow_set` carries the supporting
/// arrows when the subspace is a span of coordinate functions; all flags are
/// then taken on the fast set-theoretic path, otherwise on matrix checks.
#[derive(Clone, Debug)]
pub struct HopfIdeal {
    pub subspace: Subspace,
    pub arrow_set: Option<Vec<usize>>,
    /// Closed under multiplication by the total algebra.
    pub ideal: bool,
    /// Killed by the counit.
    pub hi1: bool,
    /// Coproduct lands in the image of H tensor I plus I tensor H.
    pub hi2: bool,
    /// Stable under the antipode.
    pub hi3: bool,
    /// Contains the ideal generated by the source-target differences.
    pub wide: bool,
    pub used_fast_path: bool,
    pub certification: Certification,
}

impl HopfIdeal {
    pub fn is_hopf_ideal(&self) -> bool {
        self.ideal && self.hi1 && self.hi2 && self.hi3
    }
}

/// The ideal generated by s(a) - t(a) over all base elements, built by
/// multiplying every generator through the whole algebra.
pub fn source_target_ideal(h: &FunctionHopfAlgebroid) -> Subspace {
    let b = h.bialgebroid();
    let total = h.total();
    let nh = total.dim();
    let mut span = SpanBuilder::new(h.field(), nh);
    for p in 0..h.base().dim() {
        let gen = vect::add(
            &b.source_map().col(p),
            &vect::scale(&b.target_map().col(p), &h.field().from_i64(-1)),
        );
        for i in 0..nh {
            span.insert(total.multiply(&total.basis_vec(i), &gen));
        }
    }
    span.into_subspace()
}

/// Flags a subspace: two-sided ideal, counit kernel membership, coproduct
/// containment, antipode stability, and wideness. Arrow-aligned spans are
/// classified by set conditions; anything else falls back to matrix checks,
/// and the certification records which path ran.
pub fn classify_ideal(h: &FunctionHopfAlgebroid, subspace: &Subspace) -> HopfIdeal {
    let g = h.groupoid();
    let total = h.total();
    let nh = total.dim();
    let mut cert = Certification::new();

    let members: Vec<usize> =
        (0..nh).filter(|&a| subspace.contains_vec(&vect::unit(h.field(), nh, a))).collect();
    let aligned = members.len() == subspace.dim();
    let arrow_set = aligned.then(|| members.clone());
    cert.record(
        "path",
        true,
        if aligned { "arrow-set conditions".into() } else { "matrix fallback".to_string() },
    );

    let (ideal, hi1, hi2, hi3, wide);
    if aligned {
        let inside = |a: usize| members.binary_search(&a).is_ok();
        ideal = true;
        cert.record("ideal-absorbs-multiplication", true, "coordinate span");

        let bad = members.iter().find(|&&a| g.is_identity(a));
        hi1 = bad.is_none();
        cert.record(
            "counit-kills-ideal",
            hi1,
            bad.map(|&a| g.arrow_id(a).to_string()).unwrap_or_default(),
        );

        let mut bad = None;
        'outer: for &a in &members {
            for (second, first) in g.composable_pairs() {
                if g.comp(second, first) == Some(a) && !inside(first) && !inside(second) {
                    bad = Some(format!(
                        "{} = {} . {}",
                        g.arrow_id(a),
                        g.arrow_id(second),
                        g.arrow_id(first)
                    ));
                    break 'outer;
                }
            }
        }
        hi2 = bad.is_none();
        cert.record("coproduct-stays-in-ideal-legs", hi2, bad.unwrap_or_default());

        let bad = members.iter().find(|&&a| !inside(g.inv(a)));
        hi3 = bad.is_none();
        cert.record(
            "antipode-preserves-ideal",
            hi3,
            bad.map(|&a| g.arrow_id(a).to_string()).unwrap_or_default(),
        );

        let bad = (0..nh).find(|&a| !g.is_loop(a) && !inside(a));
        wide = bad.is_none();
        cert.record(
            "contains-source-target-differences",
            wide,
            bad.map(|a| g.arrow_id(a).to_string()).unwrap_or_default(),
        );
    } else {
        let basis = subspace.basis_vectors();

        let mut bad = None;
        'ideal: for w in &basis {
            for i in 0..nh {
                if !subspace.contains_vec(&total.multiply(&total.basis_vec(i), w)) {
                    bad = Some(total.label(i).to_string());
                    break 'ideal;
                }
            }
        }
        ideal = bad.is_none();
        cert.record("ideal-absorbs-multiplication", ideal, bad.unwrap_or_default());

        let counit = h.bialgebroid().counit_map();
        hi1 = basis.iter().all(|w| vect::is_zero(&counit.mul_vec(w)));
        cert.record("counit-kills-ideal", hi1, String::new());

        let coring = h.bialgebroid().coring();
        let mut legs = SpanBuilder::new(h.field(), coring.dim());
        for w in &basis {
            for i in 0..nh {
                legs.insert(coring.project_pure(&[w, &total.basis_vec(i)]));
                legs.insert(coring.project_pure(&[&total.basis_vec(i), w]));
            }
        }
        let delta = h.bialgebroid().coproduct();
        hi2 = basis.iter().all(|w| legs.contains(&delta.mul_vec(w)));
        cert.record("coproduct-stays-in-ideal-legs", hi2, String::new());

        hi3 = basis.iter().all(|w| subspace.contains_vec(&h.antipode_vec(w)));
        cert.record("antipode-preserves-ideal", hi3, String::new());

        let st = source_target_ideal(h);
        wide = st.basis_vectors().iter().all(|w| subspace.contains_vec(w));
        cert.record("contains-source-target-differences", wide, String::new());
    }

    // a Hopf ideal of a function algebra must be arrow-spanned with a
    // subgroupoid complement; record that confirmation whenever flags allow
    if ideal && hi1 && hi2 && hi3 {
        cert.record("hopf-ideal-is-arrow-spanned", aligned, String::new());
        if let Some(members) = &arrow_set {
            let complement: Vec<usize> =
                (0..nh).filter(|a| members.binary_search(a).is_err()).collect();
            let sub = WideSubgroupoid::new(g, complement);
            cert.record(
                "complement-is-a-subgroupoid",
                sub.is_ok(),
                sub.err().map(|e| e.to_string()).unwrap_or_default(),
            );
        }
    }

    HopfIdeal {
        subspace: subspace.clone(),
        arrow_set,
        ideal,
        hi1,
        hi2,
        hi3,
        wide,
        used_fast_path: aligned,
        certification: cert,
    }
}
