//! Generators for the small-groupoid test corpus: groups of order at most ten
//! as one-object groupoids, pair groupoids, products, and disjoint unions.

use crate::core::{FiniteGroupoid, GroupoidData};

/// A finite group as a multiplication table; element 0 is the identity.
#[derive(Clone, Debug)]
pub struct GroupTable {
    pub name: String,
    pub order: usize,
    pub mult: Vec<Vec<usize>>,
}

pub fn cyclic(n: usize) -> GroupTable {
    assert!(n >= 1);
    let mult = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
    GroupTable { name: format!("Z{n}"), order: n, mult }
}

pub fn direct_product(a: &GroupTable, b: &GroupTable) -> GroupTable {
    let n = a.order * b.order;
    let idx = |i: usize, j: usize| i * b.order + j;
    let mut mult = vec![vec![0; n]; n];
    for i1 in 0..a.order {
        for j1 in 0..b.order {
            for i2 in 0..a.order {
                for j2 in 0..b.order {
                    mult[idx(i1, j1)][idx(i2, j2)] = idx(a.mult[i1][i2], b.mult[j1][j2]);
                }
            }
        }
    }
    GroupTable { name: format!("{}x{}", a.name, b.name), order: n, mult }
}

/// Dihedral group of order 2n as affine maps x -> ex + c on Z_n with e = ±1.
pub fn dihedral(n: usize) -> GroupTable {
    assert!(n >= 3);
    let order = 2 * n;
    // index i: e = +1 if i < n else -1, c = i mod n; index 0 is the identity
    let pack = |e: i64, c: usize| if e == 1 { c } else { n + c };
    let unpack = |i: usize| if i < n { (1i64, i) } else { (-1i64, i - n) };
    let mut mult = vec![vec![0; order]; order];
    for i in 0..order {
        for j in 0..order {
            let (e1, c1) = unpack(i);
            let (e2, c2) = unpack(j);
            let e = e1 * e2;
            let c = (e1 * c2 as i64 + c1 as i64).rem_euclid(n as i64) as usize;
            mult[i][j] = pack(e, c);
        }
    }
    GroupTable { name: format!("D{n}"), order, mult }
}

/// Quaternion group of order 8: elements ±1, ±i, ±j, ±k.
pub fn quaternion() -> GroupTable {
    // basis 0=1, 1=i, 2=j, 3=k; table of (sign, basis) products
    let base = |x: usize, y: usize| -> (i64, usize) {
        match (x, y) {
            (0, b) => (1, b),
            (a, 0) => (1, a),
            (a, b) if a == b => (-1, 0),
            (1, 2) => (1, 3),
            (2, 3) => (1, 1),
            (3, 1) => (1, 2),
            (2, 1) => (-1, 3),
            (3, 2) => (-1, 1),
            (1, 3) => (-1, 2),
            _ => unreachable!(),
        }
    };
    // index: 2*basis + (0 for +, 1 for -); identity +1 is index 0
    let mut mult = vec![vec![0; 8]; 8];
    for i in 0..8 {
        for j in 0..8 {
            let (s1, b1) = (if i % 2 == 0 { 1i64 } else { -1 }, i / 2);
            let (s2, b2) = (if j % 2 == 0 { 1i64 } else { -1 }, j / 2);
            let (s, b) = base(b1, b2);
            let sign = s1 * s2 * s;
            mult[i][j] = 2 * b + if sign == 1 { 0 } else { 1 };
        }
    }
    GroupTable { name: "Q8".into(), order: 8, mult }
}

/// Every group of order at most ten, up to isomorphism.
pub fn groups_up_to_order_ten() -> Vec<GroupTable> {
    let c2 = cyclic(2);
    let c3 = cyclic(3);
    let c4 = cyclic(4);
    let named = |mut t: GroupTable, name: &str| {
        t.name = name.to_string();
        t
    };
    vec![
        cyclic(1),
        cyclic(2),
        cyclic(3),
        cyclic(4),
        cyclic(5),
        cyclic(6),
        cyclic(7),
        cyclic(8),
        cyclic(9),
        cyclic(10),
        named(direct_product(&c2, &c2), "Z2xZ2"),
        named(direct_product(&c2, &c4), "Z2xZ4"),
        named(direct_product(&c2, &direct_product(&c2, &c2)), "Z2xZ2xZ2"),
        named(direct_product(&c3, &c3), "Z3xZ3"),
        named(dihedral(3), "S3"),
        dihedral(4),
        dihedral(5),
        quaternion(),
    ]
}

/// One-object groupoid of a group; arrows are a0, a1, ... with a0 the identity.
pub fn group_groupoid(t: &GroupTable) -> FiniteGroupoid {
    let elem = |i: usize| format!("a{i}");
    let mut data = GroupoidData {
        objects: vec!["*".into()],
        arrows: (0..t.order).map(|i| (elem(i), "*".into(), "*".into())).collect(),
        compose: Vec::new(),
        identities: vec![("*".into(), "a0".into())],
    };
    for i in 0..t.order {
        for j in 0..t.order {
            data.compose.push((elem(i), elem(j), elem(t.mult[i][j])));
        }
    }
    FiniteGroupoid::from_data(&data).expect("group table is well-formed")
}

pub fn pair_groupoid_data(n: usize) -> GroupoidData {
    assert!((1..=9).contains(&n));
    let arrow_id = |i: usize, j: usize| {
        if i == j {
            format!("id:{i}")
        } else {
            format!("a:{i}>{j}")
        }
    };
    let mut data = GroupoidData::default();
    data.objects = (1..=n).map(|i| i.to_string()).collect();
    for i in 1..=n {
        for j in 1..=n {
            data.arrows.push((arrow_id(i, j), i.to_string(), j.to_string()));
        }
        data.identities.push((i.to_string(), arrow_id(i, i)));
    }
    for i in 1..=n {
        for j in 1..=n {
            for k in 1..=n {
                // (j -> k) after (i -> j)
                data.compose.push((arrow_id(j, k), arrow_id(i, j), arrow_id(i, k)));
            }
        }
    }
    data
}

/// Pair groupoid on n objects: exactly one arrow between any two objects.
pub fn pair_groupoid(n: usize) -> FiniteGroupoid {
    FiniteGroupoid::from_data(&pair_groupoid_data(n)).expect("pair groupoid data is well-formed")
}

pub fn terminal() -> FiniteGroupoid {
    pair_groupoid(1)
}

/// Direct product: objects and arrows are pairs, all structure componentwise.
pub fn product_groupoid(g: &FiniteGroupoid, h: &FiniteGroupoid) -> FiniteGroupoid {
    let obj = |x: usize, y: usize| format!("{}*{}", g.object_id(x), h.object_id(y));
    let arr = |a: usize, b: usize| format!("{}*{}", g.arrow_id(a), h.arrow_id(b));
    let mut data = GroupoidData::default();
    for x in 0..g.n_objects() {
        for y in 0..h.n_objects() {
            data.objects.push(obj(x, y));
            data.identities.push((obj(x, y), arr(g.ident(x), h.ident(y))));
        }
    }
    for a in 0..g.n_arrows() {
        for b in 0..h.n_arrows() {
            data.arrows.push((arr(a, b), obj(g.src(a), h.src(b)), obj(g.tgt(a), h.tgt(b))));
        }
    }
    for (a1, a2) in g.composable_pairs() {
        for (b1, b2) in h.composable_pairs() {
            data.compose.push((
                arr(a1, b1),
                arr(a2, b2),
                arr(g.comp(a1, a2).unwrap(), h.comp(b1, b2).unwrap()),
            ));
        }
    }
    FiniteGroupoid::from_data(&data).expect("product data is well-formed")
}

/// Disjoint union with L:/R: prefixes keeping ids unique.
pub fn disjoint_union(g: &FiniteGroupoid, h: &FiniteGroupoid) -> FiniteGroupoid {
    let mut data = GroupoidData::default();
    for (prefix, k) in [("L", g), ("R", h)] {
        let obj = |x: usize| format!("{}:{}", prefix, k.object_id(x));
        let arr = |a: usize| format!("{}:{}", prefix, k.arrow_id(a));
        for x in 0..k.n_objects() {
            data.objects.push(obj(x));
            data.identities.push((obj(x), arr(k.ident(x))));
        }
        for a in 0..k.n_arrows() {
            data.arrows.push((arr(a), obj(k.src(a)), obj(k.tgt(a))));
        }
        for (a, b) in k.composable_pairs() {
            data.compose.push((arr(a), arr(b), arr(k.comp(a, b).unwrap())));
        }
    }
    FiniteGroupoid::from_data(&data).expect("union data is well-formed")
}

pub fn p2_times_c2() -> FiniteGroupoid {
    product_groupoid(&pair_groupoid(2), &group_groupoid(&cyclic(2)))
}

pub fn c2_disjoint_c2() -> FiniteGroupoid {
    let c2 = group_groupoid(&cyclic(2));
    disjoint_union(&c2, &c2)
}

pub fn z4() -> FiniteGroupoid {
    group_groupoid(&cyclic(4))
}

pub fn s3() -> FiniteGroupoid {
    group_groupoid(&dihedral(3))
}

/// Every connected groupoid with at most four objects and at most ten arrows:
/// such a groupoid is a pair groupoid times a group, so this list is complete
/// up to isomorphism.
pub fn connected_corpus() -> Vec<(String, FiniteGroupoid)> {
    let mut out = Vec::new();
    for t in groups_up_to_order_ten() {
        out.push((t.name.clone(), group_groupoid(&t)));
    }
    out.push(("P2".into(), pair_groupoid(2)));
    out.push(("P2xZ2".into(), p2_times_c2()));
    out.push(("P3".into(), pair_groupoid(3)));
    out
}
