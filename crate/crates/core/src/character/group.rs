//! Finite groups given by matrix representatives, possibly as a quotient of
//! a matrix group by a normal subgroup.

use std::collections::{HashMap, VecDeque};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::finite_ring::FiniteRing;
use crate::matgroup::{FMat, GroupSet};

/// Bound on the order of groups handled here.
pub const GROUP_CAP: usize = 100_000;

pub type GElem = u32;

pub struct FiniteGroup {
    q: Arc<FiniteRing>,
    d: usize,
    /// One matrix per element; element `0` is the identity.
    reps: Vec<FMat>,
    /// Every matrix of the underlying set, mapped to its element.
    lookup: HashMap<FMat, GElem>,
    generators: Vec<GElem>,
}

impl std::fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FiniteGroup(order {}, d = {})", self.reps.len(), self.d)
    }
}

impl FiniteGroup {
    /// A matrix group given by its full element set.
    pub fn from_set(q: Arc<FiniteRing>, set: &GroupSet) -> Result<FiniteGroup> {
        let trivial = GroupSet::from_elements(set.dim(), [FMat::identity(&q, set.dim())]);
        FiniteGroup::quotient(q, set, &trivial)
    }

    /// `S / N` for a normal subgroup `N` of `S`; elements are cosets, each
    /// represented by its smallest matrix.
    pub fn quotient(q: Arc<FiniteRing>, s: &GroupSet, n: &GroupSet) -> Result<FiniteGroup> {
        if s.len() > GROUP_CAP * n.len().max(1) || s.len() / n.len().max(1) > GROUP_CAP {
            return Err(Error::limit("group order", GROUP_CAP as u64));
        }
        let d = s.dim();
        let id = FMat::identity(&q, d);
        if !s.member(&id) || !n.member(&id) {
            return Err(Error::pre("sets must contain the identity"));
        }
        let mut order = s.sorted();
        order.retain(|g| *g != id);
        order.insert(0, id);
        let nn = n.sorted();
        let mut lookup: HashMap<FMat, GElem> = HashMap::with_capacity(s.len());
        let mut reps = Vec::new();
        for g in order {
            if lookup.contains_key(&g) {
                continue;
            }
            let k = reps.len() as GElem;
            for x in &nn {
                let y = g.mul(&q, x);
                if !s.member(&y) {
                    return Err(Error::pre("normal subgroup is not contained in the group"));
                }
                lookup.insert(y, k);
            }
            reps.push(g);
        }
        let mut group = FiniteGroup { q, d, reps, lookup, generators: Vec::new() };
        group.generators = group.greedy_generators();
        Ok(group)
    }

    pub fn ring(&self) -> &FiniteRing {
        &self.q
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn order(&self) -> usize {
        self.reps.len()
    }

    pub fn rep(&self, a: GElem) -> &FMat {
        &self.reps[a as usize]
    }

    pub fn generators(&self) -> &[GElem] {
        &self.generators
    }

    /// Element containing the matrix, if it lies in the underlying set.
    pub fn element_of(&self, g: &FMat) -> Option<GElem> {
        self.lookup.get(g).copied()
    }

    pub fn mul(&self, a: GElem, b: GElem) -> GElem {
        self.lookup[&self.reps[a as usize].mul(&self.q, &self.reps[b as usize])]
    }

    pub fn inv(&self, a: GElem) -> GElem {
        self.lookup[&self.reps[a as usize].inverse(&self.q).expect("group element")]
    }

    /// Image of `a` under conjugation `x -> g x g^-1` by a matrix normalizing
    /// the underlying set.
    pub fn conjugate_by(&self, a: GElem, g: &FMat) -> Result<GElem> {
        let x = g.mul(&self.q, &self.reps[a as usize]).mul(&self.q, &g.inverse(&self.q)?);
        self.element_of(&x).ok_or_else(|| Error::pre("conjugating matrix does not normalize the group"))
    }

    fn greedy_generators(&self) -> Vec<GElem> {
        let n = self.order();
        let mut gens: Vec<GElem> = Vec::new();
        let mut inside = vec![false; n];
        inside[0] = true;
        let mut members: Vec<GElem> = vec![0];
        for a in 0..n as GElem {
            if inside[a as usize] {
                continue;
            }
            gens.push(a);
            let mut queue: VecDeque<GElem> = members.iter().copied().collect();
            while let Some(x) = queue.pop_front() {
                for &g in &gens {
                    let y = self.mul(x, g);
                    if !inside[y as usize] {
                        inside[y as usize] = true;
                        members.push(y);
                        queue.push_back(y);
                    }
                }
            }
        }
        gens
    }

    /// Conjugacy classes, the identity class first and the rest ordered by
    /// size and smallest element.
    pub fn conjugacy_classes(&self) -> Vec<Vec<GElem>> {
        let n = self.order();
        let pairs: Vec<(GElem, GElem)> = self.generators.iter().map(|&g| (g, self.inv(g))).collect();
        let mut seen = vec![false; n];
        let mut classes = Vec::new();
        for a in 0..n as GElem {
            if seen[a as usize] {
                continue;
            }
            seen[a as usize] = true;
            let mut class = vec![a];
            let mut k = 0;
            while k < class.len() {
                let x = class[k];
                for &(g, gi) in &pairs {
                    let y = self.mul(self.mul(g, x), gi);
                    if !seen[y as usize] {
                        seen[y as usize] = true;
                        class.push(y);
                    }
                }
                k += 1;
            }
            class.sort_unstable();
            classes.push(class);
        }
        classes[1..].sort_by_key(|c| (c.len(), c[0]));
        classes
    }

    pub fn is_abelian(&self) -> bool {
        self.generators.iter().all(|&a| self.generators.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matgroup::{el_generators, generate_subgroup, ELEMENT_CAP};

    fn sl(n: u64, d: usize) -> FiniteGroup {
        let q = Arc::new(FiniteRing::integers_mod(n).unwrap());
        let set = generate_subgroup(&q, d, &el_generators(&q, d), ELEMENT_CAP).unwrap();
        FiniteGroup::from_set(q, &set).unwrap()
    }

    #[test]
    fn class_counts() {
        assert_eq!(sl(2, 3).conjugacy_classes().len(), 6);
        assert_eq!(sl(2, 2).conjugacy_classes().len(), 3);
        let q = Arc::new(FiniteRing::integers_mod(4).unwrap());
        let c4 = generate_subgroup(&q, 2, &[FMat::elementary(&q, 2, 0, 1, q.one())], ELEMENT_CAP).unwrap();
        let g = FiniteGroup::from_set(q, &c4).unwrap();
        assert!(g.is_abelian());
        assert_eq!(g.conjugacy_classes().len(), 4);
    }

    #[test]
    fn quotient_by_congruence_kernel() {
        let q = Arc::new(FiniteRing::integers_mod(4).unwrap());
        let all = generate_subgroup(&q, 2, &el_generators(&q, 2), ELEMENT_CAP).unwrap();
        let two = q.ideal(&[q.from_int(2)]);
        let kernel = all.filter(|g| crate::matgroup::in_sl(&q, g, &two));
        let quo = FiniteGroup::quotient(q, &all, &kernel).unwrap();
        assert_eq!(quo.order(), 6);
        assert_eq!(quo.conjugacy_classes().len(), 3);
    }
}
