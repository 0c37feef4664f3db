//! Groupoid actions: validation, the adjoint action, translation groupoids,
//! and orbit spaces.

use crate::core::{FiniteGroupoid, GroupoidData};
use crate::sub::{isotropy, WideSubgroupoid};
use crate::GroupoidError;
use exact_linalg::Certification;

/// A left action of a groupoid on an anchored finite set.
///
/// `act[g][n]` is defined iff src(g) = anchor(n); the acting groupoid is
/// passed to each operation rather than stored.
#[derive(Clone, Debug)]
pub struct GroupoidAction {
    pub carrier: Vec<String>,
    pub anchor: Vec<usize>,
    pub act: Vec<Vec<Option<usize>>>,
}

impl GroupoidAction {
    pub fn carrier_len(&self) -> usize {
        self.carrier.len()
    }

    pub fn apply(&self, g: usize, n: usize) -> Result<usize, GroupoidError> {
        self.act[g][n].ok_or_else(|| {
            GroupoidError::UndefinedComposite(format!("arrow {g}"), format!("carrier {n}"))
        })
    }
}

/// Checks the action laws exhaustively: domain, anchor compatibility,
/// identities, and mixed associativity.
pub fn validate_action(g: &FiniteGroupoid, act: &GroupoidAction) -> Certification {
    let mut cert = Certification::new();
    let mut ok = true;
    for a in 0..g.n_arrows() {
        for n in 0..act.carrier_len() {
            let defined = act.act[a][n].is_some();
            let composable = g.src(a) == act.anchor[n];
            if defined != composable {
                cert.fail(
                    "action-domain",
                    format!("arrow {} on {}", g.arrow_id(a), act.carrier[n]),
                );
                ok = false;
            }
            if let Some(m) = act.act[a][n] {
                if act.anchor[m] != g.tgt(a) {
                    cert.fail(
                        "action-anchor",
                        format!("arrow {} moves {} off its anchor", g.arrow_id(a), act.carrier[n]),
                    );
                    ok = false;
                }
            }
        }
    }
    if ok {
        cert.pass("action-domain");
        cert.pass("action-anchor");
    }

    ok = true;
    for n in 0..act.carrier_len() {
        let e = g.ident(act.anchor[n]);
        if act.act[e][n] != Some(n) {
            cert.fail("action-identity", format!("identity moves {}", act.carrier[n]));
            ok = false;
        }
    }
    if ok {
        cert.pass("action-identity");
    }

    ok = true;
    for (b, a) in g.composable_pairs() {
        let ba = g.comp(b, a).unwrap();
        for n in 0..act.carrier_len() {
            if act.anchor[n] != g.src(a) {
                continue;
            }
            let step = act.act[a][n].and_then(|an| act.act[b][an]);
            if step != act.act[ba][n] {
                cert.fail(
                    "action-composition",
                    format!("({}, {}) on {}", g.arrow_id(b), g.arrow_id(a), act.carrier[n]),
                );
                ok = false;
            }
        }
    }
    if ok {
        cert.pass("action-composition");
    }

    cert
}

/// Conjugation on isotropy arrows: act(g, f) = g f g^{-1}, anchored at the
/// common endpoint of each loop.
pub fn adjoint_action(g: &FiniteGroupoid) -> (WideSubgroupoid, GroupoidAction) {
    let iso = isotropy(g);
    let loops = iso.arrows().to_vec();
    let pos: Vec<Option<usize>> = {
        let mut p = vec![None; g.n_arrows()];
        for (i, &f) in loops.iter().enumerate() {
            p[f] = Some(i);
        }
        p
    };
    let carrier = loops.iter().map(|&f| g.arrow_id(f).to_string()).collect();
    let anchor = loops.iter().map(|&f| g.src(f)).collect();
    let mut act = vec![vec![None; loops.len()]; g.n_arrows()];
    for a in 0..g.n_arrows() {
        for (i, &f) in loops.iter().enumerate() {
            if g.src(a) == g.src(f) {
                let conj = g.comp(g.comp(a, f).unwrap(), g.inv(a)).unwrap();
                act[a][i] = Some(pos[conj].expect("conjugate of a loop is a loop"));
            }
        }
    }
    (iso, GroupoidAction { carrier, anchor, act })
}

/// The tautological action on objects: an arrow moves its source to its target.
pub fn canonical_object_action(g: &FiniteGroupoid) -> GroupoidAction {
    let carrier = g.object_ids().to_vec();
    let anchor = (0..g.n_objects()).collect();
    let mut act = vec![vec![None; g.n_objects()]; g.n_arrows()];
    for a in 0..g.n_arrows() {
        act[a][g.src(a)] = Some(g.tgt(a));
    }
    GroupoidAction { carrier, anchor, act }
}

/// Left translation of a wide subgroupoid on all parent arrows, anchored at
/// the target: act(n, f) = n . f. The acting groupoid is `n.as_groupoid()`.
pub fn left_translation_action(
    g: &FiniteGroupoid,
    n: &WideSubgroupoid,
) -> (FiniteGroupoid, GroupoidAction) {
    let acting = n.as_groupoid(g);
    let carrier: Vec<String> = g.arrow_ids().to_vec();
    let anchor = (0..g.n_arrows()).map(|f| g.tgt(f)).collect();
    let mut act = vec![vec![None; g.n_arrows()]; acting.n_arrows()];
    for (i, a) in acting.arrow_ids().iter().enumerate() {
        let pa = g.arrow_index(a).expect("subgroupoid arrows exist in the parent");
        for f in 0..g.n_arrows() {
            if g.src(pa) == g.tgt(f) {
                act[i][f] = g.comp(pa, f);
            }
        }
    }
    (acting, GroupoidAction { carrier, anchor, act })
}

/// Partition of the carrier by reachability; classes and their contents are
/// sorted by index.
pub fn orbit_space(g: &FiniteGroupoid, act: &GroupoidAction) -> Vec<Vec<usize>> {
    let len = act.carrier_len();
    let mut repr: Vec<usize> = (0..len).collect();
    fn find(repr: &mut Vec<usize>, i: usize) -> usize {
        if repr[i] != i {
            let r = find(repr, repr[i]);
            repr[i] = r;
        }
        repr[i]
    }
    for a in 0..g.n_arrows() {
        for n in 0..len {
            if let Some(m) = act.act[a][n] {
                let (rn, rm) = (find(&mut repr, n), find(&mut repr, m));
                if rn != rm {
                    let lo = rn.min(rm);
                    repr[rn.max(rm)] = lo;
                }
            }
        }
    }
    let mut classes: Vec<Vec<usize>> = vec![Vec::new(); len];
    for i in 0..len {
        let r = find(&mut repr, i);
        classes[r].push(i);
    }
    classes.retain(|c| !c.is_empty());
    classes
}

/// Semi-direct product groupoid of an action: objects are carrier points,
/// arrows are pairs (g, n) with src = n and tgt = g n.
pub fn translation_groupoid(g: &FiniteGroupoid, act: &GroupoidAction) -> FiniteGroupoid {
    let pair_id = |a: usize, n: usize| format!("{}|{}", g.arrow_id(a), act.carrier[n]);
    let mut data = GroupoidData {
        objects: act.carrier.clone(),
        ..Default::default()
    };
    let mut pairs = Vec::new();
    for a in 0..g.n_arrows() {
        for n in 0..act.carrier_len() {
            if let Some(m) = act.act[a][n] {
                data.arrows.push((pair_id(a, n), act.carrier[n].clone(), act.carrier[m].clone()));
                pairs.push((a, n, m));
            }
        }
    }
    for &(a, n, m) in &pairs {
        // (b, m') . (a, n): requires m' = a n, lands at (b a, n)
        for &(b, n2, _) in &pairs {
            if n2 == m {
                let ba = g.comp(b, a).expect("tgt(a) = anchor(a n) = src(b)");
                data.compose.push((pair_id(b, n2), pair_id(a, n), pair_id(ba, n)));
            }
        }
    }
    FiniteGroupoid::from_data(&data).expect("action pairs are well-formed")
}
