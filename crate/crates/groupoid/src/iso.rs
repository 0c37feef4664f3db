//! Brute-force isomorphism testing for small groupoids.

use crate::core::FiniteGroupoid;

/// Degree signature used to prune the object matching.
fn object_signature(g: &FiniteGroupoid, x: usize) -> (usize, usize, usize) {
    let outs = (0..g.n_arrows()).filter(|&a| g.src(a) == x).count();
    let ins = (0..g.n_arrows()).filter(|&a| g.tgt(a) == x).count();
    let loops = g.loops_at(x).len();
    (outs, ins, loops)
}

/// Backtracking isomorphism search; intended for groupoids with at most a few
/// dozen arrows.
pub fn are_isomorphic(g: &FiniteGroupoid, h: &FiniteGroupoid) -> bool {
    if g.n_objects() != h.n_objects() || g.n_arrows() != h.n_arrows() {
        return false;
    }
    let sig_g: Vec<_> = (0..g.n_objects()).map(|x| object_signature(g, x)).collect();
    let sig_h: Vec<_> = (0..h.n_objects()).map(|x| object_signature(h, x)).collect();
    {
        let mut a = sig_g.clone();
        let mut b = sig_h.clone();
        a.sort_unstable();
        b.sort_unstable();
        if a != b {
            return false;
        }
    }
    let mut obj_map = vec![usize::MAX; g.n_objects()];
    let mut used_obj = vec![false; h.n_objects()];
    search_objects(g, h, &sig_g, &sig_h, 0, &mut obj_map, &mut used_obj)
}

fn search_objects(
    g: &FiniteGroupoid,
    h: &FiniteGroupoid,
    sig_g: &[(usize, usize, usize)],
    sig_h: &[(usize, usize, usize)],
    x: usize,
    obj_map: &mut Vec<usize>,
    used: &mut Vec<bool>,
) -> bool {
    if x == g.n_objects() {
        let mut arrow_map = vec![usize::MAX; g.n_arrows()];
        let mut used_arr = vec![false; h.n_arrows()];
        return search_arrows(g, h, obj_map, 0, &mut arrow_map, &mut used_arr);
    }
    for y in 0..h.n_objects() {
        if used[y] || sig_g[x] != sig_h[y] {
            continue;
        }
        obj_map[x] = y;
        used[y] = true;
        if search_objects(g, h, sig_g, sig_h, x + 1, obj_map, used) {
            return true;
        }
        used[y] = false;
        obj_map[x] = usize::MAX;
    }
    false
}

fn search_arrows(
    g: &FiniteGroupoid,
    h: &FiniteGroupoid,
    obj_map: &[usize],
    a: usize,
    arrow_map: &mut Vec<usize>,
    used: &mut Vec<bool>,
) -> bool {
    if a == g.n_arrows() {
        // endpoints matched incrementally; composition checked here once
        for (p, q) in g.composable_pairs() {
            let pq = g.comp(p, q).unwrap();
            if h.comp(arrow_map[p], arrow_map[q]) != Some(arrow_map[pq]) {
                return false;
            }
        }
        return true;
    }
    for b in 0..h.n_arrows() {
        if used[b] || h.src(b) != obj_map[g.src(a)] || h.tgt(b) != obj_map[g.tgt(a)] {
            continue;
        }
        arrow_map[a] = b;
        // prune: products of already-assigned arrows must match when the
        // product itself is already assigned
        let mut consistent = true;
        'check: for p in 0..=a {
            for q in 0..=a {
                if let Some(c) = g.comp(p, q) {
                    if (p != a && q != a && c != a) || c > a {
                        continue;
                    }
                    if h.comp(arrow_map[p], arrow_map[q]) != Some(arrow_map[c]) {
                        consistent = false;
                        break 'check;
                    }
                }
            }
        }
        if !consistent {
            arrow_map[a] = usize::MAX;
            continue;
        }
        used[b] = true;
        if search_arrows(g, h, obj_map, a + 1, arrow_map, used) {
            return true;
        }
        used[b] = false;
        arrow_map[a] = usize::MAX;
    }
    false
}
