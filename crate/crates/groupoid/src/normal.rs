//! Normal subgroupoids: recognition, enumeration, and quotient groupoids.

use crate::core::{FiniteGroupoid, GroupoidData, GroupoidMorphism};
use crate::sub::{isotropy, WideSubgroupoid};
use crate::GroupoidError;
use std::collections::BTreeSet;

/// A subgroupoid is normal when its arrows are loops and the arrow set is
/// stable under conjugation by every parent arrow.
pub fn is_normal(g: &FiniteGroupoid, n: &WideSubgroupoid) -> (bool, Option<String>) {
    for &f in n.arrows() {
        if !g.is_loop(f) {
            return (false, Some(format!("arrow {} is not a loop", g.arrow_id(f))));
        }
    }
    for a in 0..g.n_arrows() {
        for &f in n.arrows() {
            if g.src(f) != g.src(a) {
                continue;
            }
            let conj = g.comp(g.comp(a, f).unwrap(), g.inv(a)).unwrap();
            if !n.contains(conj) {
                return (
                    false,
                    Some(format!(
                        "conjugating {} by {} gives {}, outside the subgroupoid",
                        g.arrow_id(f),
                        g.arrow_id(a),
                        g.arrow_id(conj)
                    )),
                );
            }
        }
    }
    (true, None)
}

fn conjugacy_orbits_of_loops(g: &FiniteGroupoid) -> Vec<Vec<usize>> {
    let iso = isotropy(g);
    let loops = iso.arrows().to_vec();
    let pos: std::collections::BTreeMap<usize, usize> =
        loops.iter().enumerate().map(|(i, &f)| (f, i)).collect();
    let mut repr: Vec<usize> = (0..loops.len()).collect();
    fn find(repr: &mut Vec<usize>, i: usize) -> usize {
        if repr[i] != i {
            let r = find(repr, repr[i]);
            repr[i] = r;
        }
        repr[i]
    }
    for a in 0..g.n_arrows() {
        for (i, &f) in loops.iter().enumerate() {
            if g.src(a) != g.src(f) {
                continue;
            }
            let conj = g.comp(g.comp(a, f).unwrap(), g.inv(a)).unwrap();
            let j = pos[&conj];
            let (ri, rj) = (find(&mut repr, i), find(&mut repr, j));
            if ri != rj {
                let lo = ri.min(rj);
                repr[ri.max(rj)] = lo;
            }
        }
    }
    let mut classes: Vec<Vec<usize>> = vec![Vec::new(); loops.len()];
    for i in 0..loops.len() {
        let r = find(&mut repr, i);
        classes[r].push(loops[i]);
    }
    classes.retain(|c| !c.is_empty());
    classes
}

fn close_under_operations(g: &FiniteGroupoid, seed: &BTreeSet<usize>) -> BTreeSet<usize> {
    let mut set = seed.clone();
    for x in 0..g.n_objects() {
        set.insert(g.ident(x));
    }
    loop {
        let mut grew = false;
        let current: Vec<usize> = set.iter().copied().collect();
        for &a in &current {
            if set.insert(g.inv(a)) {
                grew = true;
            }
            for &b in &current {
                if let Some(c) = g.comp(a, b) {
                    if set.insert(c) {
                        grew = true;
                    }
                }
            }
        }
        if !grew {
            break;
        }
    }
    set
}

/// All normal wide subgroupoids, in sorted arrow-set order.
///
/// Seeds are unions of conjugacy orbits of loops; each seed is closed under
/// the groupoid operations (which preserves conjugation stability), then the
/// results are deduplicated and defensively re-filtered.
pub fn enumerate_normal_subgroupoids(g: &FiniteGroupoid) -> Vec<WideSubgroupoid> {
    let orbits: Vec<Vec<usize>> = conjugacy_orbits_of_loops(g)
        .into_iter()
        .filter(|orbit| !orbit.iter().all(|&f| g.is_identity(f)))
        .collect();
    assert!(orbits.len() < usize::BITS as usize, "orbit count exceeds the subset mask");
    let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
    for mask in 0..(1u64 << orbits.len()) {
        let mut seed = BTreeSet::new();
        for (i, orbit) in orbits.iter().enumerate() {
            if mask & (1 << i) != 0 {
                seed.extend(orbit.iter().copied());
            }
        }
        let closed = close_under_operations(g, &seed);
        found.insert(closed.into_iter().collect());
    }
    let mut out = Vec::new();
    for arrows in found {
        let sub = WideSubgroupoid::new(g, arrows).expect("closure yields a wide subgroupoid");
        let (ok, _) = is_normal(g, &sub);
        if ok {
            out.push(sub);
        }
    }
    out.sort();
    out
}

/// Exhaustive reference enumeration over all subsets of non-identity loops.
/// Exponential; intended for cross-checking on small groupoids.
pub fn enumerate_normal_subgroupoids_bruteforce(g: &FiniteGroupoid) -> Vec<WideSubgroupoid> {
    let candidates: Vec<usize> =
        (0..g.n_arrows()).filter(|&f| g.is_loop(f) && !g.is_identity(f)).collect();
    assert!(candidates.len() < usize::BITS as usize);
    let identities: Vec<usize> = (0..g.n_objects()).map(|x| g.ident(x)).collect();
    let mut out = Vec::new();
    for mask in 0..(1u64 << candidates.len()) {
        let mut arrows = identities.clone();
        for (i, &f) in candidates.iter().enumerate() {
            if mask & (1 << i) != 0 {
                arrows.push(f);
            }
        }
        if let Ok(sub) = WideSubgroupoid::new(g, arrows) {
            if is_normal(g, &sub).0 {
                out.push(sub);
            }
        }
    }
    out.sort();
    out
}

/// Partition of all arrows under f ~ n.f for n in the subgroupoid.
pub fn left_translation_partition(g: &FiniteGroupoid, n: &WideSubgroupoid) -> Vec<Vec<usize>> {
    translation_partition(g, n, true)
}

/// Partition of all arrows under f ~ f.n for n in the subgroupoid.
pub fn right_translation_partition(g: &FiniteGroupoid, n: &WideSubgroupoid) -> Vec<Vec<usize>> {
    translation_partition(g, n, false)
}

fn translation_partition(g: &FiniteGroupoid, n: &WideSubgroupoid, left: bool) -> Vec<Vec<usize>> {
    let mut repr: Vec<usize> = (0..g.n_arrows()).collect();
    fn find(repr: &mut Vec<usize>, i: usize) -> usize {
        if repr[i] != i {
            let r = find(repr, repr[i]);
            repr[i] = r;
        }
        repr[i]
    }
    for f in 0..g.n_arrows() {
        for &a in n.arrows() {
            let image = if left { g.comp(a, f) } else { g.comp(f, a) };
            if let Some(m) = image {
                let (rf, rm) = (find(&mut repr, f), find(&mut repr, m));
                if rf != rm {
                    let lo = rf.min(rm);
                    repr[rf.max(rm)] = lo;
                }
            }
        }
    }
    let mut classes: Vec<Vec<usize>> = vec![Vec::new(); g.n_arrows()];
    for i in 0..g.n_arrows() {
        let r = find(&mut repr, i);
        classes[r].push(i);
    }
    classes.retain(|c| !c.is_empty());
    classes
}

/// A quotient groupoid with its projection morphism.
#[derive(Clone, Debug)]
pub struct QuotientGroupoid {
    pub groupoid: FiniteGroupoid,
    /// Arrow index in the parent to arrow index in the quotient.
    pub projection: GroupoidMorphism,
    /// Arrow classes of the parent, matching the quotient arrows one-to-one.
    pub classes: Vec<Vec<usize>>,
}

/// Quotient by a normal subgroupoid: arrows are left-translation classes,
/// objects are unchanged.
pub fn quotient_groupoid(
    g: &FiniteGroupoid,
    n: &WideSubgroupoid,
) -> Result<QuotientGroupoid, GroupoidError> {
    if let (false, Some(w)) = is_normal(g, n) {
        return Err(GroupoidError::NotNormal(w));
    }
    let classes = left_translation_partition(g, n);
    // every member of a class shares both endpoints; label by the least arrow id
    let mut class_of = vec![usize::MAX; g.n_arrows()];
    let mut labels = Vec::new();
    for (c, class) in classes.iter().enumerate() {
        for &f in class {
            class_of[f] = c;
            debug_assert_eq!(g.src(f), g.src(class[0]));
            debug_assert_eq!(g.tgt(f), g.tgt(class[0]));
        }
        let label = class.iter().map(|&f| g.arrow_id(f)).min().unwrap();
        labels.push(label.to_string());
    }

    let mut data = GroupoidData {
        objects: g.object_ids().to_vec(),
        ..Default::default()
    };
    for (c, class) in classes.iter().enumerate() {
        data.arrows.push((
            labels[c].clone(),
            g.object_id(g.src(class[0])).to_string(),
            g.object_id(g.tgt(class[0])).to_string(),
        ));
    }
    // push every representative pair: conflicting products for one class pair
    // surface as a construction error, certifying well-definedness
    for (a, b) in g.composable_pairs() {
        let (ca, cb) = (class_of[a], class_of[b]);
        let cc = class_of[g.comp(a, b).unwrap()];
        data.compose.push((labels[ca].clone(), labels[cb].clone(), labels[cc].clone()));
    }
    let quotient = FiniteGroupoid::from_data(&data)?;

    // re-index classes to the quotient's sorted arrow order
    let mut sorted_classes = vec![Vec::new(); classes.len()];
    let mut arrow_map = vec![usize::MAX; g.n_arrows()];
    for (c, class) in classes.iter().enumerate() {
        let q = quotient.arrow_index(&labels[c]).expect("label was inserted");
        sorted_classes[q] = class.clone();
        for &f in class {
            arrow_map[f] = q;
        }
    }
    let obj_map = (0..g.n_objects())
        .map(|x| quotient.object_index(g.object_id(x)).expect("objects are unchanged"))
        .collect();
    Ok(QuotientGroupoid {
        groupoid: quotient,
        projection: GroupoidMorphism { obj_map, arrow_map },
        classes: sorted_classes,
    })
}

/// Factors a morphism that collapses the subgroupoid to identities through
/// the quotient projection; fails with a witness when the morphism does not
/// kill the subgroupoid or is not constant on classes.
pub fn factor_through_projection(
    g: &FiniteGroupoid,
    q: &QuotientGroupoid,
    m: &GroupoidMorphism,
) -> Result<GroupoidMorphism, GroupoidError> {
    let mut arrow_map = vec![usize::MAX; q.groupoid.n_arrows()];
    for (c, class) in q.classes.iter().enumerate() {
        let image = m.arrow_map[class[0]];
        for &f in class {
            if m.arrow_map[f] != image {
                return Err(GroupoidError::Invalid(format!(
                    "morphism is not constant on the class of {}",
                    g.arrow_id(f)
                )));
            }
        }
        arrow_map[c] = image;
    }
    Ok(GroupoidMorphism { obj_map: m.obj_map.clone(), arrow_map })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::core::{check_morphism, validate_groupoid};
    use crate::corpus;
    use crate::iso::are_isomorphic;

    #[test]
    fn identities_are_always_normal() {
        for (name, g) in corpus::connected_corpus() {
            let n = WideSubgroupoid::identities_only(&g);
            assert!(is_normal(&g, &n).0, "{name}");
        }
    }

    #[test]
    fn p2c2_full_isotropy_is_normal() {
        let g = corpus::p2_times_c2();
        let n = isotropy(&g);
        assert!(is_normal(&g, &n).0);
    }

    #[test]
    fn connecting_arrows_are_not_a_normal_subgroupoid() {
        let g = corpus::pair_groupoid(2);
        let n = WideSubgroupoid::full(&g);
        let (ok, witness) = is_normal(&g, &n);
        assert!(!ok);
        assert!(witness.unwrap().contains("not a loop"));
    }

    #[test]
    fn one_sided_isotropy_in_disconnected_groupoid_is_normal() {
        let g = corpus::c2_disjoint_c2();
        // all identities plus the nontrivial loop of the left component only
        let left_loop = g.arrow_index("L:a1").unwrap();
        let mut arrows: Vec<usize> = (0..g.n_objects()).map(|x| g.ident(x)).collect();
        arrows.push(left_loop);
        let n = WideSubgroupoid::new(&g, arrows).unwrap();
        assert!(is_normal(&g, &n).0);
    }

    #[test]
    fn normal_counts_on_fixtures() {
        let cases: Vec<(&str, FiniteGroupoid, usize)> = vec![
            ("P2", corpus::pair_groupoid(2), 1),
            ("P2xZ2", corpus::p2_times_c2(), 2),
            ("C2 + C2", corpus::c2_disjoint_c2(), 4),
            ("Z4", corpus::z4(), 3),
            ("S3", corpus::s3(), 3),
        ];
        for (name, g, expected) in cases {
            let found = enumerate_normal_subgroupoids(&g);
            assert_eq!(found.len(), expected, "{name}");
        }
    }

    #[test]
    fn enumeration_matches_bruteforce_on_small_corpus() {
        let mut inputs = corpus::connected_corpus();
        inputs.push(("C2 + C2".into(), corpus::c2_disjoint_c2()));
        for (name, g) in inputs {
            let iso = isotropy(&g);
            let non_identity = iso.arrows().iter().filter(|&&f| !g.is_identity(f)).count();
            if non_identity > 6 {
                continue;
            }
            let fast = enumerate_normal_subgroupoids(&g);
            let brute = enumerate_normal_subgroupoids_bruteforce(&g);
            assert_eq!(fast, brute, "{name}");
        }
    }

    #[test]
    fn class_sizes_match_loop_counts() {
        let g = corpus::p2_times_c2();
        for n in enumerate_normal_subgroupoids(&g) {
            let classes = left_translation_partition(&g, &n);
            let total: usize = classes.iter().map(|c| c.len()).sum();
            assert_eq!(total, g.n_arrows());
            for class in &classes {
                let f = class[0];
                assert_eq!(class.len(), n.loops_at(&g, g.tgt(f)).len());
            }
        }
    }

    #[test]
    fn left_and_right_partitions_agree_for_normal() {
        let mut inputs = corpus::connected_corpus();
        inputs.push(("C2 + C2".into(), corpus::c2_disjoint_c2()));
        for (name, g) in inputs {
            for n in enumerate_normal_subgroupoids(&g) {
                let mut left = left_translation_partition(&g, &n);
                let mut right = right_translation_partition(&g, &n);
                left.sort();
                right.sort();
                assert_eq!(left, right, "{name}");
            }
        }
    }

    #[test]
    fn quotient_by_identities_is_the_identity_construction() {
        let g = corpus::s3();
        let n = WideSubgroupoid::identities_only(&g);
        let q = quotient_groupoid(&g, &n).unwrap();
        assert!(validate_groupoid(&q.groupoid).passed());
        assert!(are_isomorphic(&q.groupoid, &g));
    }

    #[test]
    fn p2c2_by_isotropy_is_pair_groupoid() {
        let g = corpus::p2_times_c2();
        let q = quotient_groupoid(&g, &isotropy(&g)).unwrap();
        assert!(validate_groupoid(&q.groupoid).passed());
        assert_eq!(q.groupoid.n_arrows(), 4);
        assert!(are_isomorphic(&q.groupoid, &corpus::pair_groupoid(2)));
    }

    #[test]
    fn z4_by_order_two_subgroup_is_z2() {
        let g = corpus::z4();
        let e = g.arrow_index("a0").unwrap();
        let r2 = g.arrow_index("a2").unwrap();
        let n = WideSubgroupoid::new(&g, vec![e, r2]).unwrap();
        let q = quotient_groupoid(&g, &n).unwrap();
        assert!(are_isomorphic(&q.groupoid, &corpus::group_groupoid(&corpus::cyclic(2))));
    }

    #[test]
    fn quotient_projection_is_a_morphism() {
        let g = corpus::p2_times_c2();
        for n in enumerate_normal_subgroupoids(&g) {
            let q = quotient_groupoid(&g, &n).unwrap();
            assert!(check_morphism(&g, &q.groupoid, &q.projection).passed());
        }
    }

    #[test]
    fn morphism_killing_subgroupoid_factors() {
        // S3 -> Z2 by sign kills A3 and factors through the quotient by A3
        let g = corpus::s3();
        let subs = enumerate_normal_subgroupoids(&g);
        let a3 = subs.iter().find(|n| n.len() == 3).unwrap();
        let q = quotient_groupoid(&g, a3).unwrap();
        let z2 = corpus::group_groupoid(&corpus::cyclic(2));
        // dihedral(3) indices: 0..3 rotations, 3..6 reflections
        let sign = GroupoidMorphism {
            obj_map: vec![0],
            arrow_map: (0..6)
                .map(|i| {
                    let rot = g.arrow_id(i).trim_start_matches('a').parse::<usize>().unwrap() < 3;
                    z2.arrow_index(if rot { "a0" } else { "a1" }).unwrap()
                })
                .collect(),
        };
        assert!(check_morphism(&g, &z2, &sign).passed());
        let factored = factor_through_projection(&g, &q, &sign).unwrap();
        assert!(check_morphism(&q.groupoid, &z2, &factored).passed());
        // the factored map recomposes to the original
        for f in 0..g.n_arrows() {
            assert_eq!(factored.arrow_map[q.projection.arrow_map[f]], sign.arrow_map[f]);
        }
    }

    #[test]
    fn non_normal_quotient_is_rejected() {
        let g = corpus::s3();
        // {e, s} with s a reflection: a subgroup but not normal
        let e = g.arrow_index("a0").unwrap();
        let s = g.arrow_index("a3").unwrap();
        let n = WideSubgroupoid::new(&g, vec![e, s]).unwrap();
        assert!(matches!(quotient_groupoid(&g, &n), Err(GroupoidError::NotNormal(_))));
    }
}
