//! Wide subgroupoids and the isotropy subgroupoid.

use crate::core::{FiniteGroupoid, GroupoidData};
use crate::GroupoidError;

/// A subgroupoid on the full object set, stored as a sorted arrow index set.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct WideSubgroupoid {
    arrows: Vec<usize>,
    member: Vec<bool>,
}

impl WideSubgroupoid {
    /// Certifies the closure properties against the parent before sealing.
    pub fn new(parent: &FiniteGroupoid, mut arrows: Vec<usize>) -> Result<Self, GroupoidError> {
        arrows.sort_unstable();
        arrows.dedup();
        let mut member = vec![false; parent.n_arrows()];
        for &a in &arrows {
            member[a] = true;
        }
        for x in 0..parent.n_objects() {
            if !member[parent.ident(x)] {
                return Err(GroupoidError::NotWide(format!(
                    "missing identity at object {}",
                    parent.object_id(x)
                )));
            }
        }
        for &a in &arrows {
            if !member[parent.inv(a)] {
                return Err(GroupoidError::NotWide(format!(
                    "not closed under inverse at {}",
                    parent.arrow_id(a)
                )));
            }
            for &b in &arrows {
                if let Some(c) = parent.comp(a, b) {
                    if !member[c] {
                        return Err(GroupoidError::NotWide(format!(
                            "not closed under composition at ({}, {})",
                            parent.arrow_id(a),
                            parent.arrow_id(b)
                        )));
                    }
                }
            }
        }
        Ok(WideSubgroupoid { arrows, member })
    }

    pub fn identities_only(parent: &FiniteGroupoid) -> Self {
        let arrows = (0..parent.n_objects()).map(|x| parent.ident(x)).collect();
        WideSubgroupoid::new(parent, arrows).expect("identities form a wide subgroupoid")
    }

    pub fn full(parent: &FiniteGroupoid) -> Self {
        WideSubgroupoid::new(parent, (0..parent.n_arrows()).collect())
            .expect("the parent is wide in itself")
    }

    pub fn arrows(&self) -> &[usize] {
        &self.arrows
    }

    pub fn contains(&self, arrow: usize) -> bool {
        self.member[arrow]
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn loops_at(&self, parent: &FiniteGroupoid, x: usize) -> Vec<usize> {
        self.arrows
            .iter()
            .copied()
            .filter(|&a| parent.src(a) == x && parent.tgt(a) == x)
            .collect()
    }

    pub fn arrow_ids(&self, parent: &FiniteGroupoid) -> Vec<String> {
        self.arrows.iter().map(|&a| parent.arrow_id(a).to_string()).collect()
    }

    /// The subgroupoid as a standalone groupoid on the same object ids.
    pub fn as_groupoid(&self, parent: &FiniteGroupoid) -> FiniteGroupoid {
        let mut data = GroupoidData {
            objects: parent.object_ids().to_vec(),
            ..Default::default()
        };
        for &a in &self.arrows {
            data.arrows.push((
                parent.arrow_id(a).to_string(),
                parent.object_id(parent.src(a)).to_string(),
                parent.object_id(parent.tgt(a)).to_string(),
            ));
        }
        for &a in &self.arrows {
            for &b in &self.arrows {
                if let Some(c) = parent.comp(a, b) {
                    data.compose.push((
                        parent.arrow_id(a).to_string(),
                        parent.arrow_id(b).to_string(),
                        parent.arrow_id(c).to_string(),
                    ));
                }
            }
        }
        FiniteGroupoid::from_data(&data).expect("closure was certified at construction")
    }
}

/// Arrows with equal source and target; always a wide subgroupoid.
pub fn isotropy(g: &FiniteGroupoid) -> WideSubgroupoid {
    let loops = (0..g.n_arrows()).filter(|&a| g.is_loop(a)).collect();
    WideSubgroupoid::new(g, loops).expect("loops are closed under composition and inverse")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn group_isotropy_is_everything() {
        let g = corpus::s3();
        assert_eq!(isotropy(&g).len(), g.n_arrows());
    }

    #[test]
    fn pair_groupoid_isotropy_is_identities() {
        let g = corpus::pair_groupoid(2);
        let iso = isotropy(&g);
        assert_eq!(iso, WideSubgroupoid::identities_only(&g));
    }

    #[test]
    fn p2c2_isotropy_has_four_loops() {
        let g = corpus::p2_times_c2();
        let iso = isotropy(&g);
        assert_eq!(iso.len(), 4);
        for &a in iso.arrows() {
            assert!(g.is_loop(a));
        }
    }

    #[test]
    fn non_closed_subset_rejected() {
        let g = corpus::z4();
        // {e, r} is not closed: r*r = r^2 is missing
        let e = g.arrow_index("a0").unwrap();
        let r = g.arrow_index("a1").unwrap();
        assert!(WideSubgroupoid::new(&g, vec![e, r]).is_err());
    }

    #[test]
    fn subgroupoid_as_groupoid_validates() {
        let g = corpus::p2_times_c2();
        let iso = isotropy(&g);
        let sub = iso.as_groupoid(&g);
        assert!(crate::core::validate_groupoid(&sub).passed());
        assert_eq!(sub.n_arrows(), 4);
        assert_eq!(sub.n_objects(), 2);
    }
}
