//! Strong Groebner bases over the integers.
//!
//! Buchberger's algorithm with S-polynomials and GCD-polynomials. Reduction
//! divides with remainder: a term `c*m` whose monomial is divisible by some
//! leading monomial is replaced using the divisor with the smallest leading
//! coefficient `a`, leaving `c mod a` in `[0, a)`. For a strong basis that
//! divisor's coefficient generates the leading-coefficient ideal at `m`, so
//! normal forms are canonical.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::ring::{GbLimits, Monomial, Polynomial, TermOrder};

/// A reduced strong Groebner basis, sorted by increasing leading monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrongGb {
    nvars: usize,
    order: TermOrder,
    basis: Vec<Polynomial>,
}

fn min_reducer<'a>(basis: &'a [Polynomial], m: &Monomial) -> Option<&'a Polynomial> {
    let mut best: Option<&Polynomial> = None;
    for g in basis {
        if g.lm().divides(m) && best.is_none_or(|b| g.lc() < b.lc()) {
            best = Some(g);
        }
    }
    best
}

/// Full reduction of `f` by `basis` (leading coefficients positive).
fn reduce(f: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    let mut p = f.clone();
    let mut rem: Vec<(Monomial, BigInt)> = Vec::new();
    while let Some((m, c)) = p.leading() {
        let (m, c) = (m.clone(), c.clone());
        if let Some(g) = min_reducer(basis, &m) {
            let q = c.div_floor(g.lc());
            if !q.is_zero() {
                let t = m.div(g.lm());
                p = p.merge(g, &-q, Some(&t));
            }
            if p.leading().is_some_and(|(lm, _)| *lm == m) {
                rem.push(p.pop_leading().expect("nonempty"));
            }
        } else {
            rem.push(p.pop_leading().expect("nonempty"));
        }
    }
    Polynomial::from_sorted(f.nvars(), f.order(), rem)
}

/// Bound on elimination steps of a single reduction inside Buchberger's loop.
pub const REDUCTION_STEP_CAP: u64 = 200_000;

/// `reduce` for the Buchberger loop: intermediate degrees are held to the
/// degree cap and the number of elimination steps to `REDUCTION_STEP_CAP`.
fn reduce_capped(f: &Polynomial, basis: &[Polynomial], max_degree: u32) -> Result<Polynomial> {
    let mut p = f.clone();
    let mut rem: Vec<(Monomial, BigInt)> = Vec::new();
    let mut steps: u64 = 0;
    while let Some((m, c)) = p.leading() {
        let (m, c) = (m.clone(), c.clone());
        if let Some(g) = min_reducer(basis, &m) {
            let q = c.div_floor(g.lc());
            if !q.is_zero() {
                steps += 1;
                if steps > REDUCTION_STEP_CAP {
                    return Err(Error::limit("reduction steps", REDUCTION_STEP_CAP));
                }
                let t = m.div(g.lm());
                if t.degree() + g.total_degree() > max_degree {
                    return Err(Error::limit("groebner degree", max_degree));
                }
                p = p.merge(g, &-q, Some(&t));
            }
            if p.leading().is_some_and(|(lm, _)| *lm == m) {
                rem.push(p.pop_leading().expect("nonempty"));
            }
        } else {
            rem.push(p.pop_leading().expect("nonempty"));
        }
    }
    Ok(Polynomial::from_sorted(f.nvars(), f.order(), rem))
}

fn s_poly(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let m = f.lm().lcm(g.lm());
    let c = f.lc().lcm(g.lc());
    let a = f.mul_term(&m.div(f.lm()), &(&c / f.lc()));
    a.merge(g, &-(&c / g.lc()), Some(&m.div(g.lm())))
}

fn g_poly(f: &Polynomial, g: &Polynomial) -> Option<Polynomial> {
    let (a, b) = (f.lc(), g.lc());
    if (b % a).is_zero() || (a % b).is_zero() {
        return None;
    }
    let e = a.extended_gcd(b);
    let m = f.lm().lcm(g.lm());
    let p = f.mul_term(&m.div(f.lm()), &e.x);
    Some(p.merge(g, &e.y, Some(&m.div(g.lm()))))
}

/// Computes the reduced strong Groebner basis of the ideal generated by `gens`.
pub fn strong_groebner(
    gens: &[Polynomial],
    nvars: usize,
    order: TermOrder,
    limits: GbLimits,
) -> Result<StrongGb> {
    for g in gens {
        if g.nvars() != nvars {
            return Err(Error::VarCountMismatch(g.nvars(), nvars));
        }
    }
    let mut basis: Vec<Polynomial> = Vec::new();
    let mut heap: BinaryHeap<Reverse<(u32, usize, usize)>> = BinaryHeap::new();
    let mut pairs_done: u64 = 0;

    let add = |h: Polynomial, basis: &mut Vec<Polynomial>, heap: &mut BinaryHeap<_>| -> Result<()> {
        if h.total_degree() > limits.max_degree {
            return Err(Error::limit("groebner degree", limits.max_degree));
        }
        let h = h.normalize_sign();
        let j = basis.len();
        for (i, g) in basis.iter().enumerate() {
            let deg = g.lm().lcm(h.lm()).degree();
            heap.push(Reverse((deg, j, i)));
        }
        basis.push(h);
        Ok(())
    };

    let mut input: Vec<Polynomial> = gens.iter().map(|g| g.with_order(order)).collect();
    input.sort_by(|a, b| match (a.leading(), b.leading()) {
        (Some(x), Some(y)) => order.cmp(x.0, y.0).then_with(|| x.1.abs().cmp(&y.1.abs())),
        (None, _) => std::cmp::Ordering::Less,
        (_, None) => std::cmp::Ordering::Greater,
    });
    for g in input {
        let h = reduce_capped(&g.normalize_sign(), &basis, limits.max_degree)?;
        if !h.is_zero() {
            add(h, &mut basis, &mut heap)?;
        }
    }

    while let Some(Reverse((_, j, i))) = heap.pop() {
        pairs_done += 1;
        if pairs_done > limits.max_pairs {
            return Err(Error::limit("groebner pairs", limits.max_pairs));
        }
        let (f, g) = (basis[i].clone(), basis[j].clone());
        let coprime = f.lm().coprime(g.lm()) && f.lc().gcd(g.lc()).is_one();
        if !coprime {
            let h = reduce_capped(&s_poly(&f, &g), &basis, limits.max_degree)?;
            if !h.is_zero() {
                add(h, &mut basis, &mut heap)?;
            }
        }
        if let Some(gp) = g_poly(&f, &g) {
            let h = reduce_capped(&gp, &basis, limits.max_degree)?;
            if !h.is_zero() {
                add(h, &mut basis, &mut heap)?;
            }
        }
    }
    Ok(StrongGb::interreduce(basis, nvars, order))
}

impl StrongGb {
    fn interreduce(mut basis: Vec<Polynomial>, nvars: usize, order: TermOrder) -> StrongGb {
        basis.sort_by(|a, b| order.cmp(a.lm(), b.lm()).then_with(|| a.lc().cmp(b.lc())));
        let mut kept: Vec<Polynomial> = Vec::new();
        for g in basis {
            let redundant = kept
                .iter()
                .any(|h| h.lm().divides(g.lm()) && (g.lc() % h.lc()).is_zero());
            if !redundant {
                kept.push(g);
            }
        }
        let mut out = Vec::with_capacity(kept.len());
        for k in 0..kept.len() {
            let g = &kept[k];
            let head = Polynomial::term(nvars, order, g.lm().clone(), g.lc().clone());
            let tail = g.sub(&head).expect("same ring");
            let others: Vec<Polynomial> = kept
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != k)
                .map(|(_, p)| p.clone())
                .collect();
            out.push(head.add(&reduce(&tail, &others)).expect("same ring"));
        }
        StrongGb { nvars, order, basis: out }
    }

    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> TermOrder {
        self.order
    }

    /// Canonical normal form of `p` modulo the ideal.
    pub fn normal_form(&self, p: &Polynomial) -> Polynomial {
        let p = if p.order() == self.order { p.clone() } else { p.with_order(self.order) };
        reduce(&p, &self.basis)
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        self.normal_form(p).is_zero()
    }

    pub fn is_unit(&self) -> bool {
        self.basis.iter().any(|g| g.lm().is_one() && g.lc().is_one())
    }

    /// Non-negative generator of the ideal's intersection with `Z`.
    ///
    /// Every degree-compatible or elimination order puts constants last, so
    /// a constant in the ideal is reduced by a constant basis element.
    pub fn integer_part(&self) -> BigInt {
        self.basis
            .iter()
            .find(|g| g.lm().is_one())
            .map(|g| g.lc().clone())
            .unwrap_or_default()
    }

    /// Smallest positive leading coefficient among basis elements whose
    /// leading monomial divides `m`. In a strong basis this generates the
    /// ideal of leading coefficients at `m`.
    pub fn lc_ideal_at(&self, m: &Monomial) -> Option<BigInt> {
        min_reducer(&self.basis, m).map(|g| g.lc().clone())
    }

    /// Basis element realising [`Self::lc_ideal_at`].
    pub fn reducer_at(&self, m: &Monomial) -> Option<&Polynomial> {
        min_reducer(&self.basis, m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Ring;

    fn gb(r: &Ring, gens: &[&str]) -> StrongGb {
        let gens: Vec<_> = gens.iter().map(|s| r.parse(s).unwrap()).collect();
        strong_groebner(&gens, r.nvars(), r.order(), GbLimits::default()).unwrap()
    }

    fn show(r: &Ring, g: &StrongGb) -> Vec<String> {
        g.basis().iter().map(|p| r.display(p)).collect()
    }

    #[test]
    fn mixed_leading_coefficients() {
        let r = Ring::with_names(2, &["x", "y"]);
        let g = gb(&r, &["2*x", "3*y"]);
        assert_eq!(show(&r, &g), vec!["3*y", "2*x", "x*y"]);
        assert!(g.contains(&r.parse("x*y").unwrap()));
        assert!(!g.contains(&r.parse("x").unwrap()));
    }

    #[test]
    fn integer_ideals_collapse_to_gcd() {
        let r = Ring::integers();
        let g = gb(&r, &["12", "18"]);
        assert_eq!(show(&r, &g), vec!["6"]);
        assert_eq!(g.integer_part(), BigInt::from(6));
    }

    #[test]
    fn univariate_mixed() {
        let r = Ring::with_names(1, &["x"]);
        let g = gb(&r, &["4*x", "x^2"]);
        assert_eq!(show(&r, &g), vec!["4*x", "x^2"]);
        let g = gb(&r, &["2*x + 2", "x^2 + 3", "4"]);
        // x^3 = -3x, and -x = x + 2 because 2x + 2 lies in the ideal, so x^3 = x + 4 = x.
        assert_eq!(g.integer_part(), BigInt::from(4));
        assert!(g.contains(&r.parse("2*x + 2").unwrap()));
        assert_eq!(r.display(&g.normal_form(&r.parse("x^3").unwrap())), "x");
    }

    #[test]
    fn unit_ideal_detected() {
        let r = Ring::with_names(1, &["x"]);
        let g = gb(&r, &["2*x + 1", "x"]);
        assert!(g.is_unit());
        assert_eq!(show(&r, &g), vec!["1"]);
    }

    #[test]
    fn degree_cap_is_enforced() {
        let r = Ring::polynomial(1);
        let gens = vec![r.parse("x1^50 + 1").unwrap()];
        let err = strong_groebner(&gens, 1, r.order(), GbLimits::default()).unwrap_err();
        assert!(err.is_resource());
    }
}
