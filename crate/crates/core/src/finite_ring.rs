//! Finite quotient rings `Q = R/K` with table-driven arithmetic.
//!
//! Elements are indexed by `u32`. The index order is the enumeration of
//! canonical normal forms, with `0` always the zero element.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::depth::{cardinality_and_structure, staircase};
use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::ring::{Polynomial, Ring};

/// Largest quotient ring for which tables are built.
pub const RING_CAP: usize = 2048;

pub type Elem = u32;

pub struct FiniteRing {
    label: String,
    ideal: Ideal,
    elems: Vec<Polynomial>,
    index: HashMap<Polynomial, Elem>,
    add: Vec<Elem>,
    mul: Vec<Elem>,
    neg: Vec<Elem>,
    inv: Vec<Option<Elem>>,
    one: Elem,
    invariants: Vec<u64>,
    coords: Vec<Vec<u64>>,
    basis: Vec<Elem>,
}

impl fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteRing({}, order {})", self.label, self.elems.len())
    }
}

impl FiniteRing {
    /// `Z/n`.
    pub fn integers_mod(n: u64) -> Result<FiniteRing> {
        if n == 0 {
            return Err(Error::pre("Z/0 is infinite"));
        }
        let z = Ring::integers();
        let k = Ideal::new(&z, vec![z.constant(n)])?;
        let mut q = FiniteRing::from_ideal(&k)?;
        q.label = format!("Z/{n}");
        Ok(q)
    }

    /// `R/K` for an ideal of finite index.
    pub fn from_ideal(k: &Ideal) -> Result<FiniteRing> {
        let (card, group) = cardinality_and_structure(k)?;
        let size = card.to_usize().filter(|&s| s <= RING_CAP).ok_or_else(|| Error::limit("ring size", RING_CAP))?;
        let stair = staircase(k)?;
        let ring = k.ring();
        let mut elems = Vec::with_capacity(size);
        let bounds: Vec<u64> = stair.bounds.iter().map(|b| b.to_u64().expect("small")).collect();
        let mut digits = vec![0u64; bounds.len()];
        loop {
            let terms = stair
                .monomials
                .iter()
                .zip(&digits)
                .filter(|(_, &c)| c > 0)
                .map(|(m, &c)| (m.clone(), BigInt::from(c)))
                .collect();
            elems.push(Polynomial::from_terms(ring.nvars(), ring.order(), terms));
            let mut pos = 0;
            while pos < digits.len() {
                digits[pos] += 1;
                if digits[pos] < bounds[pos] {
                    break;
                }
                digits[pos] = 0;
                pos += 1;
            }
            if pos == digits.len() {
                break;
            }
        }
        debug_assert_eq!(elems.len(), size);
        let index: HashMap<Polynomial, Elem> = elems.iter().enumerate().map(|(i, p)| (p.clone(), i as Elem)).collect();
        let gb = k.gb()?;
        let lookup = |p: &Polynomial| -> Elem { index[&gb.normal_form(p)] };
        let n = elems.len();
        let mut add = vec![0; n * n];
        let mut mul = vec![0; n * n];
        for a in 0..n {
            for b in a..n {
                let s = lookup(&elems[a].add(&elems[b])?);
                let p = lookup(&elems[a].mul(&elems[b])?);
                add[a * n + b] = s;
                add[b * n + a] = s;
                mul[a * n + b] = p;
                mul[b * n + a] = p;
            }
        }
        let neg = (0..n).map(|a| lookup(&elems[a].neg())).collect();
        let one = lookup(&ring.one());
        let inv = (0..n)
            .map(|a| (0..n).find(|&b| mul[a * n + b] == one).map(|b| b as Elem))
            .collect();
        let invariants: Vec<u64> = group.invariants.iter().map(|d| d.to_u64().expect("small")).collect();
        let coords = elems
            .iter()
            .map(|p| {
                group
                    .coordinates(p)
                    .map(|c| c.iter().map(|x| x.to_u64().expect("small")).collect())
            })
            .collect::<Result<Vec<Vec<u64>>>>()?;
        let basis = group.generators.iter().map(lookup).collect();
        let label = format!("{}/{}", ring_label(ring), k);
        Ok(FiniteRing { label, ideal: k.clone(), elems, index, add, mul, neg, inv, one, invariants, coords, basis })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn order(&self) -> usize {
        self.elems.len()
    }

    pub fn zero(&self) -> Elem {
        0
    }

    pub fn one(&self) -> Elem {
        self.one
    }

    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        self.add[a as usize * self.elems.len() + b as usize]
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.mul[a as usize * self.elems.len() + b as usize]
    }

    pub fn neg(&self, a: Elem) -> Elem {
        self.neg[a as usize]
    }

    pub fn pow(&self, a: Elem, e: u64) -> Elem {
        let mut r = self.one;
        for _ in 0..e {
            r = self.mul(r, a);
        }
        r
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.elems.len() as Elem
    }

    pub fn inverse(&self, a: Elem) -> Option<Elem> {
        self.inv[a as usize]
    }

    pub fn is_unit(&self, a: Elem) -> bool {
        self.inverse(a).is_some()
    }

    pub fn units(&self) -> Vec<Elem> {
        self.elements().filter(|&a| self.is_unit(a)).collect()
    }

    pub fn is_field(&self) -> bool {
        self.order() > 1 && self.elements().skip(1).all(|a| self.is_unit(a))
    }

    /// The integer `n` as a ring element.
    pub fn from_int(&self, n: i64) -> Elem {
        let mut r = self.zero();
        let step = if n >= 0 { self.one } else { self.neg(self.one) };
        for _ in 0..n.unsigned_abs() {
            r = self.add(r, step);
        }
        r
    }

    /// Image of a polynomial of the ambient ring.
    pub fn from_poly(&self, p: &Polynomial) -> Result<Elem> {
        let nf = self.ideal.normal_form(p)?;
        Ok(self.index[&nf])
    }

    /// Canonical lift of an element.
    pub fn lift(&self, a: Elem) -> &Polynomial {
        &self.elems[a as usize]
    }

    pub fn ambient(&self) -> &Ring {
        self.ideal.ring()
    }

    pub fn modulus(&self) -> &Ideal {
        &self.ideal
    }

    pub fn display(&self, a: Elem) -> String {
        self.ideal.ring().display(self.lift(a))
    }

    /// Invariant factors of the additive group.
    pub fn invariants(&self) -> &[u64] {
        &self.invariants
    }

    /// Coordinates of `a` in the additive basis.
    pub fn coords(&self, a: Elem) -> &[u64] {
        &self.coords[a as usize]
    }

    /// Additive basis, one element per invariant factor.
    pub fn additive_basis(&self) -> &[Elem] {
        &self.basis
    }

    /// Element with the given additive coordinates.
    pub fn from_coords(&self, c: &[u64]) -> Elem {
        let mut r = self.zero();
        for (&b, &k) in self.basis.iter().zip(c) {
            for _ in 0..k {
                r = self.add(r, b);
            }
        }
        r
    }

    /// Annihilator of `a`.
    pub fn annihilator(&self, a: Elem) -> QIdeal {
        QIdeal::from_members(self, self.elements().filter(|&b| self.mul(a, b) == 0).collect())
    }

    /// Ideal generated by the given elements.
    pub fn ideal(&self, gens: &[Elem]) -> QIdeal {
        QIdeal::from_members(self, self.ideal_closure(gens).into_iter().collect())
    }

    fn ideal_closure(&self, gens: &[Elem]) -> BTreeSet<Elem> {
        let mut members: BTreeSet<Elem> = BTreeSet::from([0]);
        let mut frontier: Vec<Elem> = Vec::new();
        for &g in gens {
            for q in self.elements() {
                let x = self.mul(q, g);
                if members.insert(x) {
                    frontier.push(x);
                }
            }
        }
        while let Some(x) = frontier.pop() {
            let current: Vec<Elem> = members.iter().copied().collect();
            for y in current {
                let s = self.add(x, y);
                if members.insert(s) {
                    frontier.push(s);
                }
            }
        }
        members
    }

    pub fn whole(&self) -> QIdeal {
        QIdeal::from_members(self, self.elements().collect())
    }

    pub fn zero_ideal(&self) -> QIdeal {
        QIdeal::from_members(self, vec![0])
    }

    /// Every ideal of the ring, sorted by size then members.
    pub fn all_ideals(&self) -> Vec<QIdeal> {
        let mut found: BTreeSet<Vec<Elem>> = BTreeSet::new();
        let principal: Vec<QIdeal> = self.elements().map(|a| self.ideal(&[a])).collect();
        let mut layer: Vec<QIdeal> = Vec::new();
        for p in principal.iter() {
            if found.insert(p.members.clone()) {
                layer.push(p.clone());
            }
        }
        let mut all = layer.clone();
        while !layer.is_empty() {
            let mut next = Vec::new();
            for a in &layer {
                for p in &principal {
                    let s = a.sum(self, p);
                    if found.insert(s.members.clone()) {
                        next.push(s.clone());
                        all.push(s);
                    }
                }
            }
            layer = next;
        }
        all.sort_by(|a, b| a.members.len().cmp(&b.members.len()).then_with(|| a.members.cmp(&b.members)));
        all
    }

    /// Ideal of `R` (containing `K`) whose image is `q`.
    pub fn preimage(&self, q: &QIdeal) -> Result<Ideal> {
        let mut gens: Vec<Polynomial> = self.ideal.generators().to_vec();
        gens.extend(q.generators.iter().map(|&g| self.lift(g).clone()));
        Ideal::new(self.ideal.ring(), gens)
    }

    /// Image of an ideal of `R`.
    pub fn image(&self, i: &Ideal) -> Result<QIdeal> {
        let gens = i
            .generators()
            .iter()
            .map(|p| self.from_poly(p))
            .collect::<Result<Vec<_>>>()?;
        Ok(self.ideal(&gens))
    }
}

fn ring_label(r: &Ring) -> String {
    if r.nvars() == 0 {
        "Z".into()
    } else {
        format!("Z[{}]", r.names().join(","))
    }
}

/// An ideal of a finite ring as an explicit member set.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QIdeal {
    members: Vec<Elem>,
    /// A small generating set (as an ideal).
    generators: Vec<Elem>,
}

impl QIdeal {
    fn from_members(q: &FiniteRing, mut members: Vec<Elem>) -> QIdeal {
        members.sort_unstable();
        members.dedup();
        let mut generators = Vec::new();
        let mut span: BTreeSet<Elem> = BTreeSet::from([0]);
        for &m in &members {
            if !span.contains(&m) {
                generators.push(m);
                span = q.ideal_closure(&generators);
            }
        }
        QIdeal { members, generators }
    }

    pub fn members(&self) -> &[Elem] {
        &self.members
    }

    pub fn generators(&self) -> &[Elem] {
        &self.generators
    }

    pub fn contains(&self, a: Elem) -> bool {
        self.members.binary_search(&a).is_ok()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.members == [0]
    }

    pub fn is_whole(&self, q: &FiniteRing) -> bool {
        self.members.len() == q.order()
    }

    pub fn is_subset(&self, other: &QIdeal) -> bool {
        self.members.iter().all(|&a| other.contains(a))
    }

    pub fn sum(&self, q: &FiniteRing, other: &QIdeal) -> QIdeal {
        let mut g = self.generators.clone();
        g.extend(&other.generators);
        q.ideal(&g)
    }

    pub fn product(&self, q: &FiniteRing, other: &QIdeal) -> QIdeal {
        let mut g = Vec::new();
        for &a in &self.generators {
            for &b in &other.generators {
                g.push(q.mul(a, b));
            }
        }
        q.ideal(&g)
    }

    /// Generators of the ideal as an additive group.
    pub fn additive_generators(&self, q: &FiniteRing) -> Vec<Elem> {
        let mut gens = Vec::new();
        let mut span: BTreeSet<Elem> = BTreeSet::from([0]);
        for &m in &self.members {
            if span.contains(&m) {
                continue;
            }
            gens.push(m);
            let mut frontier: Vec<Elem> = span.iter().copied().collect();
            while let Some(x) = frontier.pop() {
                for &g in &gens {
                    let s = q.add(x, g);
                    if span.insert(s) {
                        frontier.push(s);
                    }
                }
            }
        }
        gens
    }

    pub fn display(&self, q: &FiniteRing) -> String {
        if self.is_zero() {
            return "(0)".into();
        }
        let parts: Vec<String> = self.generators.iter().map(|&g| q.display(g)).collect();
        format!("({})", parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn euler_phi(n: u64) -> u64 {
        (1..=n).filter(|&k| num_integer::gcd(k, n) == 1).count() as u64
    }

    #[test]
    fn integers_mod_n() {
        let q = FiniteRing::integers_mod(12).unwrap();
        assert_eq!(q.order(), 12);
        assert_eq!(q.units().len() as u64, euler_phi(12));
        let five = q.from_int(5);
        assert_eq!(q.mul(five, five), q.one());
        assert_eq!(q.invariants(), &[12]);
        assert_eq!(q.all_ideals().len(), 6);
        assert_eq!(q.annihilator(q.from_int(4)).display(&q), "(3)");
    }

    #[test]
    fn dual_numbers_over_f2() {
        let r = Ring::with_names(1, &["t"]);
        let k = Ideal::parse(&r, &["2", "t^2"]).unwrap();
        let q = FiniteRing::from_ideal(&k).unwrap();
        assert_eq!(q.order(), 4);
        assert_eq!(q.invariants(), &[2, 2]);
        assert!(!q.is_field());
        assert_eq!(q.units().len(), 2);
        let ideals: Vec<String> = q.all_ideals().iter().map(|i| i.display(&q)).collect();
        assert_eq!(ideals, vec!["(0)", "(t)", "(1)"]);
    }

    #[test]
    fn additive_generators_span() {
        let q = FiniteRing::integers_mod(8).unwrap();
        let i = q.ideal(&[q.from_int(6)]);
        assert_eq!(i.len(), 4);
        assert_eq!(i.additive_generators(&q), vec![q.from_int(2)]);
        assert!(FiniteRing::integers_mod(7).unwrap().is_field());
    }
}
