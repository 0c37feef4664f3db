//! Finite groupoids: construction from raw tables, validation, morphisms.

use crate::GroupoidError;
use exact_linalg::Certification;
use std::collections::BTreeMap;

/// Raw groupoid description with string ids, as read from input files or builders.
#[derive(Clone, Debug, Default)]
pub struct GroupoidData {
    pub objects: Vec<String>,
    /// (arrow id, source object, target object)
    pub arrows: Vec<(String, String, String)>,
    /// (g, f, h) meaning "f then g equals h"
    pub compose: Vec<(String, String, String)>,
    /// Optional claimed identities (object, arrow); cross-checked during validation.
    pub identities: Vec<(String, String)>,
}

/// A finite groupoid with index-resolved tables.
///
/// Objects and arrows are kept in lexicographic id order so every derived
/// construction enumerates deterministically. Identity and inverse tables are
/// inferred from the composition table; a `None` entry is a validation failure,
/// not a construction failure, so broken inputs can still be reported on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroupoid {
    objects: Vec<String>,
    arrows: Vec<String>,
    src: Vec<usize>,
    tgt: Vec<usize>,
    comp: Vec<Vec<Option<usize>>>,
    ident: Vec<Option<usize>>,
    inv: Vec<Option<usize>>,
    claimed_identities: Vec<(usize, usize)>,
}

impl FiniteGroupoid {
    pub fn from_data(data: &GroupoidData) -> Result<FiniteGroupoid, GroupoidError> {
        let mut objects = data.objects.clone();
        objects.sort();
        for w in objects.windows(2) {
            if w[0] == w[1] {
                return Err(GroupoidError::DuplicateId(w[0].clone()));
            }
        }
        let obj_idx: BTreeMap<&str, usize> =
            objects.iter().enumerate().map(|(i, s)| (s.as_str(), i)).collect();

        let mut arrows: Vec<String> = data.arrows.iter().map(|(id, _, _)| id.clone()).collect();
        arrows.sort();
        for w in arrows.windows(2) {
            if w[0] == w[1] {
                return Err(GroupoidError::DuplicateId(w[0].clone()));
            }
        }
        let arr_idx: BTreeMap<&str, usize> =
            arrows.iter().enumerate().map(|(i, s)| (s.as_str(), i)).collect();

        let n = arrows.len();
        let mut src = vec![usize::MAX; n];
        let mut tgt = vec![usize::MAX; n];
        for (id, s, t) in &data.arrows {
            let a = arr_idx[id.as_str()];
            src[a] = *obj_idx.get(s.as_str()).ok_or_else(|| GroupoidError::UnknownId(s.clone()))?;
            tgt[a] = *obj_idx.get(t.as_str()).ok_or_else(|| GroupoidError::UnknownId(t.clone()))?;
        }

        let mut comp = vec![vec![None; n]; n];
        for (g, f, h) in &data.compose {
            let lookup = |id: &String| {
                arr_idx.get(id.as_str()).copied().ok_or_else(|| GroupoidError::UnknownId(id.clone()))
            };
            let (g, f, h) = (lookup(g)?, lookup(f)?, lookup(h)?);
            match comp[g][f] {
                Some(prev) if prev != h => {
                    return Err(GroupoidError::ConflictingComposition(
                        arrows[g].clone(),
                        arrows[f].clone(),
                    ))
                }
                _ => comp[g][f] = Some(h),
            }
        }

        let mut claimed_identities = Vec::new();
        for (o, a) in &data.identities {
            let o = *obj_idx.get(o.as_str()).ok_or_else(|| GroupoidError::UnknownId(o.clone()))?;
            let a = *arr_idx.get(a.as_str()).ok_or_else(|| GroupoidError::UnknownId(a.clone()))?;
            claimed_identities.push((o, a));
        }

        let mut g = FiniteGroupoid {
            objects,
            arrows,
            src,
            tgt,
            comp,
            ident: Vec::new(),
            inv: Vec::new(),
            claimed_identities,
        };
        g.infer_identities_and_inverses();
        Ok(g)
    }

    fn infer_identities_and_inverses(&mut self) {
        let n = self.arrows.len();
        self.ident = self
            .objects
            .iter()
            .enumerate()
            .map(|(x, _)| {
                (0..n).find(|&e| {
                    self.src[e] == x
                        && self.tgt[e] == x
                        && (0..n).all(|f| self.tgt[f] != x || self.comp[e][f] == Some(f))
                        && (0..n).all(|g| self.src[g] != x || self.comp[g][e] == Some(g))
                })
            })
            .collect();
        self.inv = (0..n)
            .map(|g| {
                let (es, et) = (self.ident[self.src[g]]?, self.ident[self.tgt[g]]?);
                (0..n).find(|&h| self.comp[h][g] == Some(es) && self.comp[g][h] == Some(et))
            })
            .collect();
    }

    pub fn n_objects(&self) -> usize {
        self.objects.len()
    }

    pub fn n_arrows(&self) -> usize {
        self.arrows.len()
    }

    pub fn object_ids(&self) -> &[String] {
        &self.objects
    }

    pub fn arrow_ids(&self) -> &[String] {
        &self.arrows
    }

    pub fn object_id(&self, x: usize) -> &str {
        &self.objects[x]
    }

    pub fn arrow_id(&self, g: usize) -> &str {
        &self.arrows[g]
    }

    pub fn object_index(&self, id: &str) -> Option<usize> {
        self.objects.binary_search_by(|o| o.as_str().cmp(id)).ok()
    }

    pub fn arrow_index(&self, id: &str) -> Option<usize> {
        self.arrows.binary_search_by(|a| a.as_str().cmp(id)).ok()
    }

    pub fn src(&self, g: usize) -> usize {
        self.src[g]
    }

    pub fn tgt(&self, g: usize) -> usize {
        self.tgt[g]
    }

    pub fn is_loop(&self, g: usize) -> bool {
        self.src[g] == self.tgt[g]
    }

    /// "f then g"; defined iff src(g) = tgt(f).
    pub fn comp(&self, g: usize, f: usize) -> Option<usize> {
        self.comp[g][f]
    }

    /// Identity arrow at an object; requires a validated groupoid.
    pub fn ident(&self, x: usize) -> usize {
        self.ident[x].expect("identity required; validate the groupoid first")
    }

    /// Inverse arrow; requires a validated groupoid.
    pub fn inv(&self, g: usize) -> usize {
        self.inv[g].expect("inverse required; validate the groupoid first")
    }

    pub fn is_identity(&self, g: usize) -> bool {
        self.ident[self.src[g]] == Some(g) && self.is_loop(g)
    }

    /// All (g, f) with src(g) = tgt(f), ordered by (f, g) index.
    pub fn composable_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.arrows.len();
        let mut out = Vec::new();
        for f in 0..n {
            for g in 0..n {
                if self.src[g] == self.tgt[f] {
                    out.push((g, f));
                }
            }
        }
        out
    }

    pub fn loops_at(&self, x: usize) -> Vec<usize> {
        (0..self.n_arrows()).filter(|&g| self.src[g] == x && self.tgt[g] == x).collect()
    }
}

/// Checks every axiom exhaustively and reports witnesses for failures.
pub fn validate_groupoid(g: &FiniteGroupoid) -> Certification {
    let mut cert = Certification::new();
    let n = g.n_arrows();

    cert.record("objects-nonempty", g.n_objects() > 0, "object set is empty");

    let mut domain_ok = true;
    'domain: for a in 0..n {
        for b in 0..n {
            let composable = g.src(a) == g.tgt(b);
            match (composable, g.comp(a, b)) {
                (true, None) => {
                    cert.fail(
                        "composition-domain",
                        format!(
                            "comp({}, {}) is missing for a composable pair",
                            g.arrow_id(a),
                            g.arrow_id(b)
                        ),
                    );
                    domain_ok = false;
                    break 'domain;
                }
                (false, Some(_)) => {
                    cert.fail(
                        "composition-domain",
                        format!(
                            "comp({}, {}) is defined but src({}) != tgt({})",
                            g.arrow_id(a),
                            g.arrow_id(b),
                            g.arrow_id(a),
                            g.arrow_id(b)
                        ),
                    );
                    domain_ok = false;
                    break 'domain;
                }
                _ => {}
            }
        }
    }
    if domain_ok {
        cert.pass("composition-domain");
    }

    let mut endpoints_ok = true;
    for a in 0..n {
        for b in 0..n {
            if let Some(c) = g.comp(a, b) {
                if g.src(c) != g.src(b) || g.tgt(c) != g.tgt(a) {
                    cert.fail(
                        "composition-endpoints",
                        format!(
                            "comp({}, {}) = {} has wrong endpoints",
                            g.arrow_id(a),
                            g.arrow_id(b),
                            g.arrow_id(c)
                        ),
                    );
                    endpoints_ok = false;
                }
            }
        }
    }
    if endpoints_ok {
        cert.pass("composition-endpoints");
    }

    let mut assoc_ok = true;
    'assoc: for a in 0..n {
        for b in 0..n {
            if g.src(a) != g.tgt(b) {
                continue;
            }
            for c in 0..n {
                if g.src(b) != g.tgt(c) {
                    continue;
                }
                let left = g.comp(a, b).and_then(|ab| g.comp(ab, c));
                let right = g.comp(b, c).and_then(|bc| g.comp(a, bc));
                if left != right || left.is_none() {
                    cert.fail(
                        "associativity",
                        format!(
                            "({} . {}) . {} disagrees with {} . ({} . {})",
                            g.arrow_id(a),
                            g.arrow_id(b),
                            g.arrow_id(c),
                            g.arrow_id(a),
                            g.arrow_id(b),
                            g.arrow_id(c)
                        ),
                    );
                    assoc_ok = false;
                    break 'assoc;
                }
            }
        }
    }
    if assoc_ok {
        cert.pass("associativity");
    }

    let mut ident_ok = true;
    for x in 0..g.n_objects() {
        if g.ident[x].is_none() {
            cert.fail("identities", format!("no two-sided identity at object {}", g.object_id(x)));
            ident_ok = false;
        }
    }
    for &(x, a) in &g.claimed_identities {
        if g.ident[x] != Some(a) {
            cert.fail(
                "identities",
                format!("claimed identity {} at {} is not neutral", g.arrow_id(a), g.object_id(x)),
            );
            ident_ok = false;
        }
    }
    if ident_ok {
        cert.pass("identities");
    }

    let mut inv_ok = true;
    for a in 0..n {
        if g.inv[a].is_none() {
            cert.fail("inverses", format!("no inverse for arrow {}", g.arrow_id(a)));
            inv_ok = false;
        }
    }
    if inv_ok {
        cert.pass("inverses");
    }

    cert
}

/// A map of groupoids given on indices: objects of the domain to objects of
/// the codomain, arrows likewise.
#[derive(Clone, Debug)]
pub struct GroupoidMorphism {
    pub obj_map: Vec<usize>,
    pub arrow_map: Vec<usize>,
}

/// Checks functoriality: endpoints, identities, and composition are preserved.
pub fn check_morphism(
    dom: &FiniteGroupoid,
    cod: &FiniteGroupoid,
    m: &GroupoidMorphism,
) -> Certification {
    let mut cert = Certification::new();
    let mut ok = true;
    for g in 0..dom.n_arrows() {
        let mg = m.arrow_map[g];
        if cod.src(mg) != m.obj_map[dom.src(g)] || cod.tgt(mg) != m.obj_map[dom.tgt(g)] {
            cert.fail("morphism-endpoints", format!("arrow {}", dom.arrow_id(g)));
            ok = false;
        }
    }
    if ok {
        cert.pass("morphism-endpoints");
    }

    ok = true;
    for x in 0..dom.n_objects() {
        if m.arrow_map[dom.ident(x)] != cod.ident(m.obj_map[x]) {
            cert.fail("morphism-identities", format!("object {}", dom.object_id(x)));
            ok = false;
        }
    }
    if ok {
        cert.pass("morphism-identities");
    }

    ok = true;
    for (g, f) in dom.composable_pairs() {
        let gf = dom.comp(g, f).unwrap();
        if cod.comp(m.arrow_map[g], m.arrow_map[f]) != Some(m.arrow_map[gf]) {
            cert.fail(
                "morphism-composition",
                format!("pair ({}, {})", dom.arrow_id(g), dom.arrow_id(f)),
            );
            ok = false;
        }
    }
    if ok {
        cert.pass("morphism-composition");
    }

    cert
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn terminal_groupoid_validates() {
        let g = corpus::terminal();
        assert!(validate_groupoid(&g).passed());
        assert_eq!(g.n_objects(), 1);
        assert_eq!(g.n_arrows(), 1);
    }

    #[test]
    fn pair_groupoid_validates() {
        let g = corpus::pair_groupoid(2);
        assert!(validate_groupoid(&g).passed());
        assert_eq!(g.n_arrows(), 4);
        // the two connecting arrows invert each other
        let a = g.arrow_index("a:1>2").unwrap();
        let b = g.arrow_index("a:2>1").unwrap();
        assert_eq!(g.inv(a), b);
    }

    #[test]
    fn dropping_an_inverse_is_witnessed() {
        let mut data = corpus::pair_groupoid_data(2);
        data.arrows.retain(|(id, _, _)| id != "a:2>1");
        data.compose.retain(|(g, f, h)| g != "a:2>1" && f != "a:2>1" && h != "a:2>1");
        let g = FiniteGroupoid::from_data(&data).unwrap();
        let cert = validate_groupoid(&g);
        assert!(!cert.passed());
        let failed: Vec<_> = cert.failures().into_iter().map(|c| c.name.clone()).collect();
        assert!(failed.contains(&"inverses".to_string()));
        let w = cert.failures().iter().find(|c| c.name == "inverses").unwrap().witness.clone();
        assert!(w.unwrap().contains("a:1>2"));
    }

    #[test]
    fn empty_object_set_rejected() {
        let g = FiniteGroupoid::from_data(&GroupoidData::default()).unwrap();
        assert!(!validate_groupoid(&g).passed());
    }

    #[test]
    fn isolated_objects_allowed() {
        let data = GroupoidData {
            objects: vec!["x".into()],
            arrows: vec![("e".into(), "x".into(), "x".into())],
            compose: vec![("e".into(), "e".into(), "e".into())],
            identities: vec![],
        };
        let g = FiniteGroupoid::from_data(&data).unwrap();
        assert!(validate_groupoid(&g).passed());
    }

    #[test]
    fn conflicting_table_is_structural_error() {
        let mut data = corpus::pair_groupoid_data(2);
        data.compose.push(("id:1".into(), "id:1".into(), "a:1>2".into()));
        assert!(matches!(
            FiniteGroupoid::from_data(&data),
            Err(GroupoidError::ConflictingComposition(_, _))
        ));
    }
}
