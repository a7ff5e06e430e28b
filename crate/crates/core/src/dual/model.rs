//! The additive group `Gamma = Q^d`, its Pontryagin dual in invariant-factor
//! coordinates, and the `EL_d(Q)` actions on both.

use std::collections::{BTreeSet, VecDeque};

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::finite_ring::{Elem, FiniteRing, QIdeal};
use crate::matgroup::{el_generators, FMat};

/// Default bound on `|Q|^d`.
pub const MODEL_CAP: usize = 1_000_000;

/// A dual element: one exponent per invariant-factor coordinate of `Q^d`.
pub type DualElement = Vec<u64>;

#[derive(Debug)]
pub struct FiniteModel<'a> {
    q: &'a FiniteRing,
    d: usize,
    factors: Vec<u64>,
    exponent: u64,
    size: usize,
    gens: Vec<FMat>,
    dual_perms: Vec<Vec<usize>>,
    vector_perms: Vec<Vec<usize>>,
}

impl<'a> FiniteModel<'a> {
    pub fn build(q: &'a FiniteRing, d: usize, cap: usize) -> Result<FiniteModel<'a>> {
        if d == 0 {
            return Err(Error::pre("dimension must be positive"));
        }
        let size = q.order().checked_pow(d as u32).filter(|&s| s <= cap).ok_or_else(|| Error::limit("dual size", cap as u64))?;
        let factors: Vec<u64> = (0..d).flat_map(|_| q.invariants().iter().copied()).collect();
        let exponent = factors.iter().fold(1u64, |m, &f| m.lcm(&f));
        let mut model = FiniteModel {
            q,
            d,
            factors,
            exponent,
            size,
            gens: if d >= 2 { el_generators(q, d) } else { Vec::new() },
            dual_perms: Vec::new(),
            vector_perms: Vec::new(),
        };
        let gens = model.gens.clone();
        for g in &gens {
            let perm = (0..size)
                .map(|k| Ok(model.dual_index(&model.dual_action(g, &model.dual_element(k))?)))
                .collect::<Result<_>>()?;
            model.dual_perms.push(perm);
            let vperm = (0..size).map(|k| model.vector_index(&model.act(g, &model.vector(k)))).collect();
            model.vector_perms.push(vperm);
        }
        Ok(model)
    }

    pub fn ring(&self) -> &FiniteRing {
        self.q
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    /// Number of elements of `Gamma`, equal to that of its dual.
    pub fn size(&self) -> usize {
        self.size
    }

    /// Invariant factors of `Q^d`, one per coordinate.
    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    /// Exponent of `Q^d`; pairings are integers modulo it.
    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn generators(&self) -> &[FMat] {
        &self.gens
    }

    pub fn vector(&self, mut k: usize) -> Vec<Elem> {
        let n = self.q.order();
        let mut v = vec![0; self.d];
        for slot in v.iter_mut() {
            *slot = (k % n) as Elem;
            k /= n;
        }
        v
    }

    pub fn vector_index(&self, v: &[Elem]) -> usize {
        let n = self.q.order();
        v.iter().rev().fold(0, |acc, &x| acc * n + x as usize)
    }

    pub fn dual_element(&self, mut k: usize) -> DualElement {
        let mut c = vec![0; self.factors.len()];
        for (slot, &m) in c.iter_mut().zip(&self.factors) {
            *slot = k as u64 % m;
            k /= m as usize;
        }
        c
    }

    pub fn dual_index(&self, c: &[u64]) -> usize {
        c.iter().zip(&self.factors).rev().fold(0, |acc, (&x, &m)| acc * m as usize + (x % m) as usize)
    }

    /// Invariant-factor coordinates of a vector.
    pub fn coordinates(&self, v: &[Elem]) -> Vec<u64> {
        v.iter().flat_map(|&x| self.q.coords(x).iter().copied()).collect()
    }

    /// `chi(gamma)` as `k` with `chi(gamma) = exp(2 pi i k / M)`.
    pub fn pairing(&self, chi: &[u64], gamma: &[Elem]) -> u64 {
        let a = self.coordinates(gamma);
        let m = self.exponent as u128;
        let mut acc: u128 = 0;
        for ((&c, &x), &f) in chi.iter().zip(&a).zip(&self.factors) {
            acc = (acc + c as u128 * x as u128 % m * (self.exponent / f) as u128) % m;
        }
        acc as u64
    }

    /// Matrix-vector product `g v`.
    pub fn act(&self, g: &FMat, v: &[Elem]) -> Vec<Elem> {
        (0..self.d)
            .map(|i| (0..self.d).fold(self.q.zero(), |acc, j| self.q.add(acc, self.q.mul(g.get(i, j), v[j]))))
            .collect()
    }

    /// The vector whose coordinates are the `k`-th unit vector.
    fn basis_vector(&self, k: usize) -> Vec<Elem> {
        let r = self.q.invariants().len();
        let mut v = vec![self.q.zero(); self.d];
        v[k / r] = self.q.additive_basis()[k % r];
        v
    }

    /// `g(chi)(gamma) = chi(g^-1 gamma)`, solved on the additive basis.
    pub fn dual_action(&self, g: &FMat, chi: &[u64]) -> Result<DualElement> {
        let gi = g.inverse(self.q)?;
        Ok((0..self.factors.len())
            .map(|k| self.pairing(chi, &self.act(&gi, &self.basis_vector(k))) / (self.exponent / self.factors[k]))
            .collect())
    }

    fn orbit_by(&self, start: usize, perms: &[Vec<usize>]) -> Vec<usize> {
        let mut seen = BTreeSet::from([start]);
        let mut queue = VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            for p in perms {
                if seen.insert(p[x]) {
                    queue.push_back(p[x]);
                }
            }
        }
        seen.into_iter().collect()
    }

    /// Orbit of a dual element under the elementary generators, by index.
    pub fn dual_orbit(&self, chi: &[u64]) -> Vec<usize> {
        self.orbit_by(self.dual_index(chi), &self.dual_perms)
    }

    pub fn vector_orbit(&self, v: &[Elem]) -> Vec<Vec<Elem>> {
        self.orbit_by(self.vector_index(v), &self.vector_perms).into_iter().map(|k| self.vector(k)).collect()
    }

    /// All orbits on the dual, each sorted, ordered by smallest member.
    pub fn dual_orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.size];
        let mut out = Vec::new();
        for k in 0..self.size {
            if !seen[k] {
                let orbit = self.orbit_by(k, &self.dual_perms);
                for &x in &orbit {
                    seen[x] = true;
                }
                out.push(orbit);
            }
        }
        out
    }

    /// Permutations of the dual induced by the generators.
    pub fn dual_permutations(&self) -> &[Vec<usize>] {
        &self.dual_perms
    }

    pub fn vector_permutations(&self) -> &[Vec<usize>] {
        &self.vector_perms
    }

    /// `K_I = Ann(I^d)`, as sorted dual indices.
    pub fn annihilator_of_ideal(&self, i: &QIdeal) -> Vec<usize> {
        let gens: Vec<Vec<Elem>> = (0..self.d)
            .flat_map(|c| {
                i.additive_generators(self.q).into_iter().map(move |a| {
                    let mut v = vec![0; self.d];
                    v[c] = a;
                    v
                })
            })
            .collect();
        (0..self.size).filter(|&k| {
            let chi = self.dual_element(k);
            gens.iter().all(|g| self.pairing(&chi, g) == 0)
        }).collect()
    }

    /// Elements of `Gamma` on which every character in `h` is trivial.
    pub fn annihilator_of_dual(&self, h: &[usize]) -> Vec<usize> {
        let chars: Vec<DualElement> = h.iter().map(|&k| self.dual_element(k)).collect();
        (0..self.size).filter(|&k| {
            let v = self.vector(k);
            chars.iter().all(|c| self.pairing(c, &v) == 0)
        }).collect()
    }

    pub fn dual_add(&self, a: usize, b: usize) -> usize {
        let (x, y) = (self.dual_element(a), self.dual_element(b));
        let s: Vec<u64> = x.iter().zip(&y).zip(&self.factors).map(|((p, q), m)| (p + q) % m).collect();
        self.dual_index(&s)
    }

    pub fn vector_add(&self, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
        a.iter().zip(b).map(|(&x, &y)| self.q.add(x, y)).collect()
    }

    /// Checks that the pairing is bi-additive on generators and separates
    /// points.
    pub fn verify_pairing(&self) -> bool {
        let m = self.exponent;
        let basis: Vec<Vec<Elem>> = (0..self.factors.len()).map(|k| self.basis_vector(k)).collect();
        let additive = (0..self.size).all(|k| {
            let chi = self.dual_element(k);
            basis.iter().all(|b| {
                basis.iter().all(|c| {
                    (self.pairing(&chi, b) + self.pairing(&chi, c)) % m == self.pairing(&chi, &self.vector_add(b, c))
                })
            })
        });
        let separating = (1..self.size).all(|k| {
            let chi = self.dual_element(k);
            basis.iter().any(|b| self.pairing(&chi, b) != 0)
        }) && (1..self.size).all(|k| {
            let v = self.vector(k);
            (0..self.factors.len()).any(|c| {
                let mut e = vec![0; self.factors.len()];
                e[c] = 1;
                self.pairing(&e, &v) != 0
            })
        });
        additive && separating
    }
}

/// Outcome of testing a subgroup `Delta` of `Q^d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgroupCheck {
    pub invariant: bool,
    pub ideal: QIdeal,
    pub equals_ideal_power: bool,
}

/// Additive closure of a set of vectors, as sorted indices.
pub fn span(model: &FiniteModel<'_>, gens: &[Vec<Elem>]) -> Vec<usize> {
    let zero = vec![0; model.dim()];
    let mut seen = BTreeSet::from([model.vector_index(&zero)]);
    let mut queue = VecDeque::from([zero]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = model.vector_add(&x, g);
            if seen.insert(model.vector_index(&y)) {
                queue.push_back(y);
            }
        }
    }
    seen.into_iter().collect()
}

/// Tests whether `Delta` (a subgroup, by indices) is `EL_d`-invariant and
/// whether it equals `I^d` for the ideal `I` generated by its coordinates.
pub fn invariant_subgroup_check(model: &FiniteModel<'_>, delta: &[usize]) -> SubgroupCheck {
    let q = model.ring();
    let set: BTreeSet<usize> = delta.iter().copied().collect();
    let invariant = model.vector_permutations().iter().all(|p| delta.iter().all(|&k| set.contains(&p[k])));
    let coords: BTreeSet<Elem> = delta.iter().flat_map(|&k| model.vector(k)).collect();
    let ideal = q.ideal(&coords.into_iter().collect::<Vec<_>>());
    let power: BTreeSet<usize> =
        (0..model.size()).filter(|&k| model.vector(k).iter().all(|&x| ideal.contains(x))).collect();
    SubgroupCheck { invariant, ideal, equals_ideal_power: power == set }
}

/// Every subgroup of `Q^d`, as joins of cyclic subgroups.
pub fn all_subgroups(model: &FiniteModel<'_>, cap: usize) -> Result<Vec<Vec<usize>>> {
    let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
    let cyclic: Vec<Vec<usize>> = (0..model.size()).map(|k| span(model, &[model.vector(k)])).collect();
    let mut layer: Vec<Vec<usize>> = Vec::new();
    for c in &cyclic {
        if found.insert(c.clone()) {
            layer.push(c.clone());
        }
    }
    while !layer.is_empty() {
        let mut next = Vec::new();
        for a in &layer {
            for c in &cyclic {
                if c.iter().all(|k| a.binary_search(k).is_ok()) {
                    continue;
                }
                let gens: Vec<Vec<Elem>> = a.iter().chain(c).map(|&k| model.vector(k)).collect();
                let s = span(model, &gens);
                if found.insert(s.clone()) {
                    if found.len() > cap {
                        return Err(Error::limit("subgroups", cap as u64));
                    }
                    next.push(s);
                }
            }
        }
        layer = next;
    }
    Ok(found.into_iter().collect())
}
