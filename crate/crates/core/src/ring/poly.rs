//! Sparse polynomials with arbitrary precision integer coefficients.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::monomial::{Monomial, TermOrder};
use crate::error::{Error, Result};

/// A polynomial in `nvars` variables. Terms are kept strictly decreasing in
/// `order` and never carry a zero coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    order: TermOrder,
    terms: Vec<(Monomial, BigInt)>,
}

impl Polynomial {
    pub fn zero(nvars: usize, order: TermOrder) -> Self {
        Polynomial { nvars, order, terms: Vec::new() }
    }

    pub fn constant(nvars: usize, order: TermOrder, c: impl Into<BigInt>) -> Self {
        Self::term(nvars, order, Monomial::one(nvars), c.into())
    }

    pub fn one(nvars: usize, order: TermOrder) -> Self {
        Self::constant(nvars, order, 1)
    }

    pub fn var(nvars: usize, order: TermOrder, i: usize) -> Self {
        Self::term(nvars, order, Monomial::var(nvars, i, 1), BigInt::one())
    }

    pub fn term(nvars: usize, order: TermOrder, m: Monomial, c: BigInt) -> Self {
        debug_assert_eq!(m.nvars(), nvars);
        let terms = if c.is_zero() { Vec::new() } else { vec![(m, c)] };
        Polynomial { nvars, order, terms }
    }

    /// Builds a polynomial from arbitrary terms, combining duplicates.
    pub fn from_terms(nvars: usize, order: TermOrder, terms: Vec<(Monomial, BigInt)>) -> Self {
        let mut acc: HashMap<Monomial, BigInt> = HashMap::new();
        for (m, c) in terms {
            debug_assert_eq!(m.nvars(), nvars);
            *acc.entry(m).or_default() += c;
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Polynomial { nvars, order, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> TermOrder {
        self.order
    }

    pub fn terms(&self) -> &[(Monomial, BigInt)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    /// The constant value if the polynomial has no variables in it.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.as_slice() {
            [] => Some(BigInt::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn leading(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.first().map(|(m, c)| (m, c))
    }

    pub fn lm(&self) -> &Monomial {
        &self.terms[0].0
    }

    pub fn lc(&self) -> &BigInt {
        &self.terms[0].1
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0)
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms
            .iter()
            .find(|(t, _)| t == m)
            .map(|(_, c)| c.clone())
            .unwrap_or_default()
    }

    /// Re-sorts the terms under another order.
    pub fn with_order(&self, order: TermOrder) -> Self {
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Polynomial { nvars: self.nvars, order, terms }
    }

    /// Embeds into a ring with `extra` new variables placed before the old ones.
    pub fn prepend_vars(&self, extra: usize, order: TermOrder) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = vec![0; extra];
                e.extend_from_slice(&m.0);
                (Monomial(e), c.clone())
            })
            .collect();
        Polynomial::from_sorted_unchecked(self.nvars + extra, order, terms, true)
    }

    /// Drops the first `extra` variables; caller guarantees they do not occur.
    pub fn drop_leading_vars(&self, extra: usize, order: TermOrder) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (Monomial(m.0[extra..].to_vec()), c.clone()))
            .collect();
        Polynomial::from_sorted_unchecked(self.nvars - extra, order, terms, true)
    }

    /// Removes and returns the leading term.
    pub(crate) fn pop_leading(&mut self) -> Option<(Monomial, BigInt)> {
        if self.terms.is_empty() {
            None
        } else {
            Some(self.terms.remove(0))
        }
    }

    /// Wraps terms already strictly decreasing in `order` with no zero coefficients.
    pub(crate) fn from_sorted(nvars: usize, order: TermOrder, terms: Vec<(Monomial, BigInt)>) -> Self {
        Polynomial { nvars, order, terms }
    }

    fn from_sorted_unchecked(
        nvars: usize,
        order: TermOrder,
        mut terms: Vec<(Monomial, BigInt)>,
        resort: bool,
    ) -> Self {
        if resort {
            terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        }
        Polynomial { nvars, order, terms }
    }

    fn check(&self, other: &Polynomial) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::VarCountMismatch(self.nvars, other.nvars));
        }
        if self.order != other.order {
            return Err(Error::OrderMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        Ok(self.merge(other, &BigInt::one(), None))
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        Ok(self.merge(other, &-BigInt::one(), None))
    }

    pub fn neg(&self) -> Polynomial {
        self.scale(&-BigInt::one())
    }

    pub fn scale(&self, c: &BigInt) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars, self.order);
        }
        let terms = self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect();
        Polynomial { nvars: self.nvars, order: self.order, terms }
    }

    /// `c * m * self`.
    pub fn mul_term(&self, m: &Monomial, c: &BigInt) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars, self.order);
        }
        let terms = self.terms.iter().map(|(t, a)| (t.mul(m), a * c)).collect();
        Polynomial { nvars: self.nvars, order: self.order, terms }
    }

    /// `self + c * m * other`, with `m = 1` when `None`. Orders must agree.
    pub(crate) fn merge(&self, other: &Polynomial, c: &BigInt, m: Option<&Monomial>) -> Polynomial {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = self.terms.iter().peekable();
        let shifted: Vec<(Monomial, BigInt)> = other
            .terms
            .iter()
            .map(|(t, b)| (m.map_or_else(|| t.clone(), |m| t.mul(m)), b * c))
            .collect();
        let mut b = shifted.into_iter().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => out.push(a.next().unwrap().clone()),
                (None, Some(_)) => out.push(b.next().unwrap()),
                (Some(x), Some(y)) => match self.order.cmp(&x.0, &y.0) {
                    Ordering::Greater => out.push(a.next().unwrap().clone()),
                    Ordering::Less => out.push(b.next().unwrap()),
                    Ordering::Equal => {
                        let (mx, cx) = a.next().unwrap();
                        let (_, cy) = b.next().unwrap();
                        let s = cx + cy;
                        if !s.is_zero() {
                            out.push((mx.clone(), s));
                        }
                    }
                },
            }
        }
        Polynomial { nvars: self.nvars, order: self.order, terms: out }
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        let (small, big) = if self.terms.len() <= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc = Polynomial::zero(self.nvars, self.order);
        for (m, c) in &small.terms {
            acc = acc.merge(big, c, Some(m));
        }
        Ok(acc)
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut r = Polynomial::one(self.nvars, self.order);
        for _ in 0..e {
            r = r.mul(self).expect("same ring");
        }
        r
    }

    /// Exact quotient `self / g`; fails unless `g` divides `self` in `Z[x]`.
    pub fn divexact(&self, g: &Polynomial) -> Result<Polynomial> {
        self.check(g)?;
        if g.is_zero() {
            return Err(Error::InexactDivision);
        }
        let mut rem = self.clone();
        let mut quot = Vec::new();
        let (glm, glc) = (g.lm().clone(), g.lc().clone());
        while let Some((m, c)) = rem.leading() {
            if !glm.divides(m) {
                return Err(Error::InexactDivision);
            }
            let (q, r) = c.div_rem(&glc);
            if !r.is_zero() {
                return Err(Error::InexactDivision);
            }
            let t = m.div(&glm);
            rem = rem.merge(g, &-&q, Some(&t));
            quot.push((t, q));
        }
        Ok(Polynomial::from_sorted_unchecked(self.nvars, self.order, quot, false))
    }

    /// Multiplies by -1 when needed so that the leading coefficient is positive.
    pub fn normalize_sign(self) -> Polynomial {
        if self.terms.first().is_some_and(|(_, c)| c.is_negative()) {
            self.neg()
        } else {
            self
        }
    }

    /// Removes the integer content (gcd of coefficients), keeping the sign.
    pub fn primitive_part(&self) -> (BigInt, Polynomial) {
        let g = self
            .terms
            .iter()
            .fold(BigInt::zero(), |acc, (_, c)| acc.gcd(c));
        if g.is_zero() || g.is_one() {
            return (BigInt::one(), self.clone());
        }
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), c / &g)).collect();
        (g, Polynomial { nvars: self.nvars, order: self.order, terms })
    }

    /// Substitutes integer values for all variables.
    pub fn eval(&self, point: &[BigInt]) -> BigInt {
        let mut s = BigInt::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                t *= num_traits::pow(x.clone(), e as usize);
            }
            s += t;
        }
        s
    }

    pub fn display_with<'a>(&'a self, names: &'a [String]) -> PolyDisplay<'a> {
        PolyDisplay { p: self, names }
    }
}

pub struct PolyDisplay<'a> {
    p: &'a Polynomial,
    names: &'a [String],
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.p.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.p.terms.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !a.is_one() || m.is_one() {
                factors.push(a.to_string());
            }
            for (i, &e) in m.0.iter().enumerate() {
                let name = self
                    .names
                    .get(i)
                    .cloned()
                    .unwrap_or_else(|| format!("x{}", i + 1));
                match e {
                    0 => {}
                    1 => factors.push(name),
                    _ => factors.push(format!("{name}^{e}")),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with(&[]))
    }
}
