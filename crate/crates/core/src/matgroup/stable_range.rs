//! Shortening of unimodular tuples, the stable-range step used by the
//! normal form for conjugates.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::finite_ring::{Elem, FiniteRing, QIdeal};
use crate::lattice::factor;

/// Box radius for the direct search over integer shortenings.
const SEARCH_RADIUS: i64 = 12;

/// Stable range of `Z`.
pub const INTEGER_STABLE_RANGE: usize = 2;

fn gcd_all(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
}

/// Coefficients `a` with `sum a_i v_i = gcd(v)`, the gcd taken nonnegative.
pub fn bezout(v: &[BigInt]) -> (BigInt, Vec<BigInt>) {
    let mut g = BigInt::zero();
    let mut coeffs: Vec<BigInt> = Vec::with_capacity(v.len());
    for x in v {
        let e = g.extended_gcd(x);
        for c in coeffs.iter_mut() {
            *c *= &e.x;
        }
        coeffs.push(e.y);
        g = e.gcd;
    }
    if g.is_negative() {
        g = -g;
        for c in coeffs.iter_mut() {
            *c = -c.clone();
        }
    }
    (g, coeffs)
}

/// Integer values in the order `0, 1, -1, 2, -2, ...`.
fn ranked(k: i64) -> i64 {
    if k % 2 == 1 {
        (k + 1) / 2
    } else {
        -(k / 2)
    }
}

/// Steps `idx` through `[0, top]^n` in lexicographic order.
fn advance(idx: &mut [i64], top: i64) -> bool {
    for p in (0..idx.len()).rev() {
        if idx[p] < top {
            idx[p] += 1;
            return true;
        }
        idx[p] = 0;
    }
    false
}

fn shortened(v: &[BigInt], s: &[BigInt]) -> Vec<BigInt> {
    let last = &v[v.len() - 1];
    v[..v.len() - 1].iter().zip(s).map(|(r, t)| r + t * last).collect()
}

/// Finds `s` such that `(r_1 + s_1 r_{n+1}, ..., r_n + s_n r_{n+1})` is
/// unimodular over `Z`. Candidates are tried by growing box radius and, within
/// a radius, lexicographically in the order `0 < 1 < -1 < 2 < ...`; if the box
/// is exhausted a CRT construction is used.
pub fn shorten_integer(v: &[BigInt]) -> Result<Vec<BigInt>> {
    if v.len() < 2 {
        return Err(Error::pre("need a tuple of length at least 2"));
    }
    if !gcd_all(v).is_one() {
        return Err(Error::Validation("tuple is not unimodular".into()));
    }
    let n = v.len() - 1;
    for radius in 0..=2 * SEARCH_RADIUS {
        let mut idx = vec![0i64; n];
        loop {
            if idx.contains(&radius) {
                let s: Vec<BigInt> = idx.iter().map(|&k| BigInt::from(ranked(k))).collect();
                if gcd_all(&shortened(v, &s)).is_one() {
                    return Ok(s);
                }
            }
            if !advance(&mut idx, radius) {
                break;
            }
        }
    }
    shorten_by_crt(v)
}

fn shorten_by_crt(v: &[BigInt]) -> Result<Vec<BigInt>> {
    let n = v.len() - 1;
    let c = &v[n];
    if c.is_zero() {
        return Ok(vec![BigInt::zero(); n]);
    }
    if n == 1 {
        for target in [BigInt::one(), -BigInt::one()] {
            let diff = target - &v[0];
            if (&diff % c).is_zero() {
                return Ok(vec![diff / c]);
            }
        }
        return Err(Error::Validation("a unimodular pair over Z need not shorten to a unit".into()));
    }
    let mut s = vec![BigInt::zero(); n];
    if v[1..n].iter().all(|x| x.is_zero()) {
        s[1] = BigInt::one();
    }
    let rest: Vec<BigInt> = (1..n).map(|k| &v[k] + &s[k] * c).collect();
    let g = gcd_all(&rest);
    let mut modulus = BigInt::one();
    let mut s1 = BigInt::zero();
    for (p, _) in factor(&g, 1_000_000)? {
        let pick = if (c % &p).is_zero() || !(&v[0] % &p).is_zero() { BigInt::zero() } else { BigInt::one() };
        // s1 = pick (mod p), combined with the residues fixed so far.
        let e = modulus.extended_gcd(&p);
        let t = ((&pick - &s1) * &e.x).mod_floor(&p);
        s1 += &modulus * t;
        modulus *= &p;
        s1 = s1.mod_floor(&modulus);
    }
    s[0] = s1;
    if !gcd_all(&shortened(v, &s)).is_one() {
        return Err(Error::Validation("shortening failed".into()));
    }
    Ok(s)
}

/// Shortening over a finite ring by exhaustive search.
pub struct FiniteShortener<'a> {
    q: &'a FiniteRing,
    maximal: Vec<QIdeal>,
    stable_range: OnceLock<Result<usize>>,
}

/// Bound on the number of candidate tuples examined in a finite search.
pub const SEARCH_CAP: u64 = 10_000_000;

impl<'a> FiniteShortener<'a> {
    pub fn new(q: &'a FiniteRing) -> FiniteShortener<'a> {
        let proper: Vec<QIdeal> = q.all_ideals().into_iter().filter(|i| !i.is_whole(q)).collect();
        let maximal = proper
            .iter()
            .filter(|m| !proper.iter().any(|o| o.len() > m.len() && m.is_subset(o)))
            .cloned()
            .collect();
        FiniteShortener { q, maximal, stable_range: OnceLock::new() }
    }

    pub fn ring(&self) -> &FiniteRing {
        self.q
    }

    pub fn is_unimodular(&self, v: &[Elem]) -> bool {
        self.maximal.iter().all(|m| v.iter().any(|&x| !m.contains(x)))
    }

    fn candidates(&self, n: usize) -> Result<impl Iterator<Item = Vec<Elem>> + '_> {
        let size = self.q.order() as u64;
        let total = size.checked_pow(n as u32).filter(|&t| t <= SEARCH_CAP);
        let total = total.ok_or_else(|| Error::limit("finite search", SEARCH_CAP))?;
        Ok((0..total).map(move |mut k| {
            let mut t = vec![0; n];
            for slot in t.iter_mut().rev() {
                *slot = (k % size) as Elem;
                k /= size;
            }
            t
        }))
    }

    fn shortened(&self, v: &[Elem], s: &[Elem]) -> Vec<Elem> {
        let last = v[v.len() - 1];
        v[..v.len() - 1].iter().zip(s).map(|(&r, &t)| self.q.add(r, self.q.mul(t, last))).collect()
    }

    /// Lexicographically first `s` (in element order) making the shortened
    /// tuple unimodular.
    pub fn shorten(&self, v: &[Elem]) -> Result<Vec<Elem>> {
        if v.len() < 2 {
            return Err(Error::pre("need a tuple of length at least 2"));
        }
        if !self.is_unimodular(v) {
            return Err(Error::Validation("tuple is not unimodular".into()));
        }
        let n = v.len() - 1;
        for s in self.candidates(n)? {
            if self.is_unimodular(&self.shortened(v, &s)) {
                return Ok(s);
            }
        }
        Err(Error::Validation("no shortening exists".into()))
    }

    /// Coefficients `a` with `sum a_i v_i = target`.
    pub fn combination(&self, v: &[Elem], target: Elem) -> Result<Vec<Elem>> {
        for a in self.candidates(v.len())? {
            let mut acc = self.q.zero();
            for (&x, &y) in a.iter().zip(v) {
                acc = self.q.add(acc, self.q.mul(x, y));
            }
            if acc == target {
                return Ok(a);
            }
        }
        Err(Error::Validation("target is not in the ideal generated by the tuple".into()))
    }

    /// Smallest `n <= 3` such that every unimodular `(n+1)`-tuple shortens,
    /// checked exhaustively and cached.
    pub fn stable_range(&self) -> Result<usize> {
        self.stable_range.get_or_init(|| self.compute_stable_range()).clone()
    }

    fn compute_stable_range(&self) -> Result<usize> {
        'outer: for n in 1..=3 {
            for v in self.candidates(n + 1)? {
                if self.is_unimodular(&v) && self.shorten(&v).is_err() {
                    continue 'outer;
                }
            }
            return Ok(n);
        }
        Err(Error::limit("stable range tuple length", 4))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn integer_shortening() {
        assert_eq!(shorten_integer(&ints(&[1, 0, 0])).unwrap(), ints(&[0, 0]));
        let v = ints(&[6, 10, 15]);
        let s = shorten_integer(&v).unwrap();
        assert!(gcd_all(&shortened(&v, &s)).is_one());
        assert!(shorten_integer(&ints(&[2, 4])).is_err());
        let v = ints(&[30030, 0, 1]);
        assert!(gcd_all(&shortened(&v, &shorten_by_crt(&v).unwrap())).is_one());
    }

    #[test]
    fn bezout_coefficients() {
        let v = ints(&[6, 10, 15]);
        let (g, a) = bezout(&v);
        assert!(g.is_one());
        let s: BigInt = a.iter().zip(&v).map(|(x, y)| x * y).sum();
        assert!(s.is_one());
    }

    #[test]
    fn finite_rings_have_stable_range_one() {
        for n in [4, 6, 8, 12] {
            let q = FiniteRing::integers_mod(n).unwrap();
            assert_eq!(FiniteShortener::new(&q).stable_range().unwrap(), 1);
        }
    }
}
