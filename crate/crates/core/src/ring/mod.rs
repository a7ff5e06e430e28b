//! Finitely presented commutative rings `Z[x1..xk]/J` and their polynomials.

mod monomial;
mod parse;
mod poly;

use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

pub use monomial::{Monomial, TermOrder};
pub use parse::parse_polynomial;
pub use poly::{PolyDisplay, Polynomial};

use crate::error::{Error, Result};
use crate::ideal::groebner::{strong_groebner, StrongGb};

/// Resource caps for Groebner basis computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GbLimits {
    pub max_pairs: u64,
    pub max_degree: u32,
}

impl Default for GbLimits {
    fn default() -> Self {
        GbLimits { max_pairs: 20_000, max_degree: 40 }
    }
}

#[derive(Debug)]
struct RingInner {
    nvars: usize,
    names: Vec<String>,
    order: TermOrder,
    relations: Vec<Polynomial>,
    limits: GbLimits,
    relation_gb: OnceLock<StrongGb>,
}

/// `Z[x1..xk]/J`, cheap to clone.
#[derive(Clone, Debug)]
pub struct Ring(Arc<RingInner>);

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.nvars == other.0.nvars
                && self.0.order == other.0.order
                && self.0.relations == other.0.relations)
    }
}

impl Eq for Ring {}

impl Ring {
    /// `Z[x1..xk]` with grevlex and default limits.
    pub fn polynomial(nvars: usize) -> Ring {
        Ring::build(nvars, Vec::new(), TermOrder::GrevLex, Vec::new(), GbLimits::default())
    }

    /// The integers, i.e. zero variables.
    pub fn integers() -> Ring {
        Ring::polynomial(0)
    }

    pub fn with_names(nvars: usize, names: &[&str]) -> Ring {
        let names = names.iter().map(|s| s.to_string()).collect();
        Ring::build(nvars, names, TermOrder::GrevLex, Vec::new(), GbLimits::default())
    }

    fn build(
        nvars: usize,
        names: Vec<String>,
        order: TermOrder,
        relations: Vec<Polynomial>,
        limits: GbLimits,
    ) -> Ring {
        let relations = relations
            .into_iter()
            .filter(|r| !r.is_zero())
            .map(|r| r.with_order(order))
            .collect();
        Ring(Arc::new(RingInner {
            nvars,
            names,
            order,
            relations,
            limits,
            relation_gb: OnceLock::new(),
        }))
    }

    /// Quotient of this ring's polynomial ring by additional relations.
    pub fn with_relations(&self, rels: Vec<Polynomial>) -> Result<Ring> {
        for r in &rels {
            if r.nvars() != self.nvars() {
                return Err(Error::VarCountMismatch(r.nvars(), self.nvars()));
            }
        }
        let mut all = self.0.relations.clone();
        all.extend(rels);
        Ok(Ring::build(self.0.nvars, self.0.names.clone(), self.0.order, all, self.0.limits))
    }

    /// Same presentation with different resource caps.
    pub fn with_limits(&self, limits: GbLimits) -> Ring {
        Ring::build(
            self.0.nvars,
            self.0.names.clone(),
            self.0.order,
            self.0.relations.clone(),
            limits,
        )
    }

    pub fn nvars(&self) -> usize {
        self.0.nvars
    }

    pub fn order(&self) -> TermOrder {
        self.0.order
    }

    pub fn limits(&self) -> GbLimits {
        self.0.limits
    }

    pub fn relations(&self) -> &[Polynomial] {
        &self.0.relations
    }

    pub fn names(&self) -> Vec<String> {
        (0..self.0.nvars)
            .map(|i| self.0.names.get(i).cloned().unwrap_or_else(|| format!("x{}", i + 1)))
            .collect()
    }

    pub fn parse(&self, s: &str) -> Result<Polynomial> {
        parse_polynomial(s, self.0.nvars, self.0.order, &self.0.names)
    }

    pub fn display(&self, p: &Polynomial) -> String {
        p.display_with(&self.0.names).to_string()
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial::zero(self.0.nvars, self.0.order)
    }

    pub fn one(&self) -> Polynomial {
        Polynomial::one(self.0.nvars, self.0.order)
    }

    pub fn constant(&self, c: impl Into<BigInt>) -> Polynomial {
        Polynomial::constant(self.0.nvars, self.0.order, c)
    }

    pub fn var(&self, i: usize) -> Polynomial {
        Polynomial::var(self.0.nvars, self.0.order, i)
    }

    pub fn check(&self, p: &Polynomial) -> Result<()> {
        if p.nvars() != self.0.nvars {
            return Err(Error::VarCountMismatch(p.nvars(), self.0.nvars));
        }
        if p.order() != self.0.order {
            return Err(Error::OrderMismatch);
        }
        Ok(())
    }

    /// Strong Groebner basis of the relation ideal.
    pub fn relation_gb(&self) -> Result<&StrongGb> {
        if let Some(gb) = self.0.relation_gb.get() {
            return Ok(gb);
        }
        let gb = strong_groebner(&self.0.relations, self.0.nvars, self.0.order, self.0.limits)?;
        Ok(self.0.relation_gb.get_or_init(|| gb))
    }

    /// Canonical representative of `p` modulo the relations.
    pub fn reduce(&self, p: &Polynomial) -> Result<Polynomial> {
        self.check(p)?;
        if self.0.relations.is_empty() {
            return Ok(p.clone());
        }
        Ok(self.relation_gb()?.normal_form(p))
    }

    pub fn add(&self, a: &Polynomial, b: &Polynomial) -> Result<Polynomial> {
        self.reduce(&a.add(b)?)
    }

    pub fn sub(&self, a: &Polynomial, b: &Polynomial) -> Result<Polynomial> {
        self.reduce(&a.sub(b)?)
    }

    pub fn mul(&self, a: &Polynomial, b: &Polynomial) -> Result<Polynomial> {
        self.reduce(&a.mul(b)?)
    }

    /// Element equality in the presented ring.
    pub fn eq_elem(&self, a: &Polynomial, b: &Polynomial) -> Result<bool> {
        Ok(self.reduce(&a.sub(b)?)?.is_zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_respects_relations() {
        let r = Ring::polynomial(1).with_relations(vec![Ring::polynomial(1).parse("x1^2 + 1").unwrap()]).unwrap();
        let x = r.var(0);
        let sq = r.mul(&x, &x).unwrap();
        assert_eq!(sq, r.constant(-1));
        assert!(r.eq_elem(&r.mul(&sq, &sq).unwrap(), &r.one()).unwrap());
    }

    #[test]
    fn ring_equality_is_structural() {
        let a = Ring::polynomial(2);
        let b = Ring::polynomial(2);
        assert_eq!(a, b);
        assert_ne!(a, Ring::polynomial(3));
    }
}
