//! Breadth-first enumeration of finite matrix groups over `Q = R/K`.

use std::collections::{HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::finite_ring::{Elem, FiniteRing, QIdeal};

use super::fmat::FMat;

/// Default bound on the number of enumerated elements.
pub const ELEMENT_CAP: usize = 10_000_000;

/// A finite set of matrices, closed under whatever operation built it.
#[derive(Clone, Debug)]
pub struct GroupSet {
    d: usize,
    elems: HashSet<FMat>,
}

impl GroupSet {
    pub fn from_elements(d: usize, elems: impl IntoIterator<Item = FMat>) -> GroupSet {
        GroupSet { d, elems: elems.into_iter().collect() }
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn member(&self, g: &FMat) -> bool {
        self.elems.contains(g)
    }

    pub fn is_subset(&self, other: &GroupSet) -> bool {
        self.len() <= other.len() && self.elems.iter().all(|g| other.member(g))
    }

    pub fn iter(&self) -> impl Iterator<Item = &FMat> {
        self.elems.iter()
    }

    /// Elements in canonical (row-major lexicographic) order.
    pub fn sorted(&self) -> Vec<FMat> {
        let mut v: Vec<FMat> = self.elems.iter().cloned().collect();
        v.sort_unstable();
        v
    }

    pub fn filter(&self, keep: impl Fn(&FMat) -> bool) -> GroupSet {
        GroupSet { d: self.d, elems: self.elems.iter().filter(|g| keep(g)).cloned().collect() }
    }
}

impl PartialEq for GroupSet {
    fn eq(&self, other: &GroupSet) -> bool {
        self.d == other.d && self.elems == other.elems
    }
}

impl Eq for GroupSet {}

/// Subgroup generated by `gens`: closure of the identity under right
/// multiplication, which suffices in a finite group.
pub fn generate_subgroup(q: &FiniteRing, d: usize, gens: &[FMat], cap: usize) -> Result<GroupSet> {
    closure(q, d, gens, &[], cap)
}

/// Normal closure of `seeds` under conjugation by the group generated by
/// `ambient`.
pub fn normal_closure(q: &FiniteRing, d: usize, seeds: &[FMat], ambient: &[FMat], cap: usize) -> Result<GroupSet> {
    closure(q, d, seeds, ambient, cap)
}

fn closure(q: &FiniteRing, d: usize, gens: &[FMat], conj: &[FMat], cap: usize) -> Result<GroupSet> {
    for g in gens.iter().chain(conj) {
        if g.dim() != d {
            return Err(Error::pre("generator has the wrong dimension"));
        }
    }
    let conj: Vec<(FMat, FMat)> =
        conj.iter().map(|a| Ok((a.clone(), a.inverse(q)?))).collect::<Result<_>>()?;
    let id = FMat::identity(q, d);
    let mut seen: HashSet<FMat> = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        let next = gens
            .iter()
            .map(|g| x.mul(q, g))
            .chain(conj.iter().map(|(a, ai)| a.mul(q, &x).mul(q, ai)));
        for y in next {
            if !seen.contains(&y) {
                if seen.len() >= cap {
                    return Err(Error::limit("group elements", cap as u64));
                }
                seen.insert(y.clone());
                queue.push_back(y);
            }
        }
    }
    Ok(GroupSet { d, elems: seen })
}

/// `E_ij(a)` for every ordered pair `i != j` and every `a` in `values`.
pub fn elementary_generators(q: &FiniteRing, d: usize, values: &[Elem]) -> Vec<FMat> {
    let mut out = Vec::new();
    for i in 0..d {
        for j in 0..d {
            if i != j {
                for &a in values {
                    if a != q.zero() {
                        out.push(FMat::elementary(q, d, i, j, a));
                    }
                }
            }
        }
    }
    out
}

/// Generators of `F_d(J)`, the group generated by the `E_ij(J)`.
pub fn f_generators(q: &FiniteRing, d: usize, j: &QIdeal) -> Vec<FMat> {
    elementary_generators(q, d, &j.additive_generators(q))
}

/// Generators of `EL_d(Q)`.
pub fn el_generators(q: &FiniteRing, d: usize) -> Vec<FMat> {
    elementary_generators(q, d, q.additive_basis())
}

pub fn f_subgroup(q: &FiniteRing, d: usize, j: &QIdeal, cap: usize) -> Result<GroupSet> {
    generate_subgroup(q, d, &f_generators(q, d, j), cap)
}

/// `EL_d(J)`: the normal closure of `F_d(J)` in `EL_d(Q)`.
pub fn el_subgroup(q: &FiniteRing, d: usize, j: &QIdeal, cap: usize) -> Result<GroupSet> {
    normal_closure(q, d, &f_generators(q, d, j), &el_generators(q, d), cap)
}

/// Every matrix of determinant one over `q`, by direct enumeration.
pub fn sl_elements(q: &FiniteRing, d: usize, cap: usize) -> Result<GroupSet> {
    let n = q.order();
    let total = (n as f64).powi((d * d) as i32);
    if total > 1e8 {
        return Err(Error::limit("matrix enumeration", 100_000_000));
    }
    let mut elems = HashSet::new();
    let mut e = vec![0 as Elem; d * d];
    loop {
        let m = FMat::from_rows(q, e.chunks(d).map(|c| c.to_vec()).collect())?;
        if m.det(q) == q.one() {
            if elems.len() >= cap {
                return Err(Error::limit("group elements", cap as u64));
            }
            elems.insert(m);
        }
        let mut k = 0;
        loop {
            if k == e.len() {
                return Ok(GroupSet { d, elems });
            }
            e[k] += 1;
            if (e[k] as usize) < n {
                break;
            }
            e[k] = 0;
            k += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_orders() {
        let f2 = FiniteRing::integers_mod(2).unwrap();
        assert_eq!(generate_subgroup(&f2, 2, &el_generators(&f2, 2), ELEMENT_CAP).unwrap().len(), 6);
        let sl3 = generate_subgroup(&f2, 3, &el_generators(&f2, 3), ELEMENT_CAP).unwrap();
        assert_eq!(sl3.len(), 168);
        assert_eq!(sl3, sl_elements(&f2, 3, ELEMENT_CAP).unwrap());
    }

    #[test]
    fn normal_closure_is_a_normal_subgroup() {
        let q = FiniteRing::integers_mod(4).unwrap();
        let seed = [FMat::elementary(&q, 2, 0, 1, q.from_int(2))];
        let n = normal_closure(&q, 2, &seed, &el_generators(&q, 2), ELEMENT_CAP).unwrap();
        let g = FMat::elementary(&q, 2, 1, 0, q.one());
        for x in n.iter() {
            assert!(n.member(&x.conjugate(&q, &g).unwrap()));
            for y in n.iter() {
                assert!(n.member(&x.mul(&q, y)));
            }
        }
    }

    #[test]
    fn cap_is_reported() {
        let f2 = FiniteRing::integers_mod(2).unwrap();
        let err = generate_subgroup(&f2, 3, &el_generators(&f2, 3), 100).unwrap_err();
        assert!(err.is_resource());
    }
}
