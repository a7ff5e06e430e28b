//! Ideals of presented rings and the standard ideal operations.

pub mod groebner;
mod json;

use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;

pub use groebner::{strong_groebner, StrongGb};
pub use json::{IdealJson, RingJson};

use crate::error::{Error, Result};
use crate::ring::{Polynomial, Ring, TermOrder};

/// An ideal of `Z[x]/J`, stored through its preimage in `Z[x]` (generators
/// always include the relations of `J`).
#[derive(Clone, Debug)]
pub struct Ideal {
    ring: Ring,
    gens: Vec<Polynomial>,
    gb: OnceLock<StrongGb>,
}

impl Ideal {
    pub fn new(ring: &Ring, gens: Vec<Polynomial>) -> Result<Ideal> {
        for g in &gens {
            ring.check(g)?;
        }
        let mut all: Vec<Polynomial> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        for r in ring.relations() {
            if !all.contains(r) {
                all.push(r.clone());
            }
        }
        Ok(Ideal { ring: ring.clone(), gens: all, gb: OnceLock::new() })
    }

    pub fn parse(ring: &Ring, gens: &[&str]) -> Result<Ideal> {
        let gens = gens.iter().map(|s| ring.parse(s)).collect::<Result<Vec<_>>>()?;
        Ideal::new(ring, gens)
    }

    pub fn zero(ring: &Ring) -> Ideal {
        Ideal::new(ring, Vec::new()).expect("empty generator list")
    }

    pub fn unit(ring: &Ring) -> Ideal {
        Ideal::new(ring, vec![ring.one()]).expect("unit generator")
    }

    pub fn principal(ring: &Ring, g: Polynomial) -> Result<Ideal> {
        Ideal::new(ring, vec![g])
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn gb(&self) -> Result<&StrongGb> {
        if let Some(g) = self.gb.get() {
            return Ok(g);
        }
        let g = strong_groebner(&self.gens, self.ring.nvars(), self.ring.order(), self.ring.limits())?;
        Ok(self.gb.get_or_init(|| g))
    }

    fn same_ring(&self, other: &Ideal) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    pub fn contains(&self, p: &Polynomial) -> Result<bool> {
        self.ring.check(p)?;
        Ok(self.gb()?.contains(p))
    }

    pub fn normal_form(&self, p: &Polynomial) -> Result<Polynomial> {
        self.ring.check(p)?;
        Ok(self.gb()?.normal_form(p))
    }

    pub fn is_unit(&self) -> Result<bool> {
        Ok(self.gb()?.is_unit())
    }

    /// True when every element of `self` lies in `other`.
    pub fn is_subset(&self, other: &Ideal) -> Result<bool> {
        self.same_ring(other)?;
        let g = other.gb()?;
        Ok(self.gb()?.basis().iter().all(|p| g.contains(p)))
    }

    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        self.same_ring(other)?;
        if self.gb()?.basis() == other.gb()?.basis() {
            return Ok(true);
        }
        Ok(self.is_subset(other)? && other.is_subset(self)?)
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.same_ring(other)?;
        let mut g = self.gens.clone();
        g.extend(other.gens.iter().cloned());
        Ideal::new(&self.ring, g)
    }

    pub fn with_element(&self, p: Polynomial) -> Result<Ideal> {
        let mut g = self.gens.clone();
        g.push(p);
        Ideal::new(&self.ring, g)
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.same_ring(other)?;
        let a = self.gb()?.basis();
        let b = other.gb()?.basis();
        let mut g = Vec::with_capacity(a.len() * b.len());
        for p in a {
            for q in b {
                g.push(p.mul(q)?);
            }
        }
        Ideal::new(&self.ring, g)
    }

    /// `I ∩ J` by eliminating a tag variable `t` from `t*I + (1-t)*J`.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        self.same_ring(other)?;
        if self.is_unit()? {
            return Ok(other.clone());
        }
        if other.is_unit()? {
            return Ok(self.clone());
        }
        let k = self.ring.nvars();
        let ord = TermOrder::Block(1);
        let t = Polynomial::var(k + 1, ord, 0);
        let one_minus_t = Polynomial::one(k + 1, ord).sub(&t)?;
        let mut gens = Vec::new();
        for p in self.gb()?.basis() {
            gens.push(p.prepend_vars(1, ord).mul(&t)?);
        }
        for p in other.gb()?.basis() {
            gens.push(p.prepend_vars(1, ord).mul(&one_minus_t)?);
        }
        let gb = strong_groebner(&gens, k + 1, ord, self.ring.limits())?;
        let out = gb
            .basis()
            .iter()
            .filter(|p| p.terms().iter().all(|(m, _)| m.0[0] == 0))
            .map(|p| p.drop_leading_vars(1, self.ring.order()))
            .collect();
        Ideal::new(&self.ring, out)
    }

    /// `self : (g)`.
    pub fn quotient_element(&self, g: &Polynomial) -> Result<Ideal> {
        self.ring.check(g)?;
        if self.contains(g)? {
            return Ok(Ideal::unit(&self.ring));
        }
        let principal = Ideal::principal(&self.ring, g.clone())?;
        let inter = self.intersect(&principal)?;
        let mut out = Vec::new();
        for p in inter.gb()?.basis() {
            out.push(p.divexact(g)?);
        }
        Ideal::new(&self.ring, out)
    }

    /// `self : other = { r : r*other ⊆ self }`.
    pub fn quotient(&self, other: &Ideal) -> Result<Ideal> {
        self.same_ring(other)?;
        let mut acc = Ideal::unit(&self.ring);
        for g in other.gb()?.basis() {
            if self.contains(g)? {
                continue;
            }
            acc = acc.intersect(&self.quotient_element(g)?)?;
        }
        Ok(acc)
    }

    /// `self : other^∞`.
    pub fn saturate(&self, other: &Ideal) -> Result<Ideal> {
        let mut cur = self.clone();
        loop {
            let next = cur.quotient(other)?;
            if next.equals(&cur)? {
                return Ok(cur);
            }
            cur = next;
        }
    }

    /// Non-negative generator of `I ∩ Z`.
    pub fn integer_part(&self) -> Result<BigInt> {
        Ok(self.gb()?.integer_part())
    }

    /// Reduced strong basis with the relations of the ring omitted.
    pub fn display_generators(&self) -> Result<Vec<Polynomial>> {
        let rel = self.ring.relation_gb()?;
        let out: Vec<Polynomial> = self
            .gb()?
            .basis()
            .iter()
            .filter(|p| !rel.contains(p))
            .cloned()
            .collect();
        Ok(out)
    }

    /// Text form such as `(4*x, x^2)`; the zero ideal prints as `(0)`.
    pub fn to_text(&self) -> Result<String> {
        let gens = self.display_generators()?;
        if gens.is_empty() {
            return Ok("(0)".into());
        }
        let parts: Vec<String> = gens.iter().map(|p| self.ring.display(p)).collect();
        Ok(format!("({})", parts.join(", ")))
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_text() {
            Ok(s) => write!(f, "{s}"),
            Err(e) => write!(f, "<{e}>"),
        }
    }
}
