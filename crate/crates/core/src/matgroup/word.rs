//! Words in elementary matrices and the diagonal words realising central
//! scalars.

use crate::error::{Error, Result};
use crate::finite_ring::{Elem, FiniteRing};
use crate::ring::{Polynomial, Ring};

use super::fmat::FMat;
use super::rmat::RMatrix;

/// One factor `E_ij(r)`; indices are zero-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Letter<T> {
    pub i: usize,
    pub j: usize,
    pub r: T,
}

/// A product of elementary matrices, evaluated left to right.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ElementaryWord<T> {
    pub letters: Vec<Letter<T>>,
}

impl<T> Default for ElementaryWord<T> {
    fn default() -> Self {
        ElementaryWord { letters: Vec::new() }
    }
}

impl<T: Clone> ElementaryWord<T> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, i: usize, j: usize, r: T) {
        self.letters.push(Letter { i, j, r });
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut letters = self.letters.clone();
        letters.extend(other.letters.iter().cloned());
        ElementaryWord { letters }
    }

    fn check(&self, d: usize) -> Result<()> {
        for l in &self.letters {
            if l.i == l.j || l.i >= d || l.j >= d {
                return Err(Error::pre(format!("invalid elementary index ({}, {}) for d = {d}", l.i + 1, l.j + 1)));
            }
        }
        Ok(())
    }
}

impl ElementaryWord<Polynomial> {
    pub fn eval(&self, ring: &Ring, d: usize) -> Result<RMatrix> {
        self.check(d)?;
        let mut m = RMatrix::identity(ring, d);
        for l in &self.letters {
            m = m.mul(ring, &RMatrix::elementary(ring, d, l.i, l.j, &l.r)?)?;
        }
        Ok(m)
    }

    /// Reversed letters with negated entries.
    pub fn inverse(&self) -> Self {
        ElementaryWord {
            letters: self.letters.iter().rev().map(|l| Letter { i: l.i, j: l.j, r: l.r.neg() }).collect(),
        }
    }

    pub fn display(&self, ring: &Ring) -> String {
        let parts: Vec<String> =
            self.letters.iter().map(|l| format!("E{}{}({})", l.i + 1, l.j + 1, ring.display(&l.r))).collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join(" ")
        }
    }
}

impl ElementaryWord<Elem> {
    pub fn eval(&self, q: &FiniteRing, d: usize) -> Result<FMat> {
        self.check(d)?;
        let mut m = FMat::identity(q, d);
        for l in &self.letters {
            m = m.mul(q, &FMat::elementary(q, d, l.i, l.j, l.r));
        }
        Ok(m)
    }

    pub fn inverse(&self, q: &FiniteRing) -> Self {
        ElementaryWord {
            letters: self.letters.iter().rev().map(|l| Letter { i: l.i, j: l.j, r: q.neg(l.r) }).collect(),
        }
    }

    pub fn display(&self, q: &FiniteRing) -> String {
        let parts: Vec<String> =
            self.letters.iter().map(|l| format!("E{}{}({})", l.i + 1, l.j + 1, q.display(l.r))).collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join(" ")
        }
    }
}

/// Units `u` of `q` with `u^d = 1`, in element order.
pub fn units_order_dividing(q: &FiniteRing, d: u64) -> Vec<Elem> {
    let mut us: Vec<Elem> = q.units().into_iter().filter(|&u| q.pow(u, d) == q.one()).collect();
    us.sort_unstable_by_key(|&u| sort_key(q, u));
    us
}

/// Sort key putting integer residues in numeric order.
fn sort_key(q: &FiniteRing, u: Elem) -> (Vec<u64>, Elem) {
    (q.coords(u).to_vec(), u)
}

/// `W_ij(x, y) = E_ij(x) E_ji(-y) E_ij(x)`.
pub fn w_word(q: &FiniteRing, i: usize, j: usize, x: Elem, y: Elem) -> ElementaryWord<Elem> {
    let mut w = ElementaryWord::new();
    w.push(i, j, x);
    w.push(j, i, q.neg(y));
    w.push(i, j, x);
    w
}

/// `D_ij(x, y) = W_ij(x, y) W_ij(-1, -1)`; with `y = x^-1` this is the
/// diagonal matrix with `x` at `i` and `x^-1` at `j`.
pub fn d_word(q: &FiniteRing, i: usize, j: usize, x: Elem, y: Elem) -> ElementaryWord<Elem> {
    let m1 = q.neg(q.one());
    w_word(q, i, j, x, y).concat(&w_word(q, i, j, m1, m1))
}

/// The word `D_12(u) D_23(u^2) ... D_{d-1,d}(u^{d-1})`, which evaluates to
/// `u * Id_d` whenever `u^d = 1`.
pub fn center_word(q: &FiniteRing, d: usize, u: Elem) -> Result<ElementaryWord<Elem>> {
    if d < 2 {
        return Err(Error::pre("dimension must be at least 2"));
    }
    if q.pow(u, d as u64) != q.one() {
        return Err(Error::Validation(format!("{} is not a unit of order dividing {d}", q.display(u))));
    }
    let mut w = ElementaryWord::new();
    if u == q.one() {
        return Ok(w);
    }
    for k in 1..d {
        let x = q.pow(u, k as u64);
        let y = q.inverse(x).expect("power of a unit");
        w = w.concat(&d_word(q, k - 1, k, x, y));
    }
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn units_of_small_order() {
        let z7 = FiniteRing::integers_mod(7).unwrap();
        let got: Vec<String> = units_order_dividing(&z7, 3).iter().map(|&u| z7.display(u)).collect();
        assert_eq!(got, ["1", "2", "4"]);
        let z8 = FiniteRing::integers_mod(8).unwrap();
        assert_eq!(units_order_dividing(&z8, 3), vec![z8.one()]);
        assert_eq!(units_order_dividing(&FiniteRing::integers_mod(5).unwrap(), 4).len(), 4);
    }

    #[test]
    fn center_word_mod_seven() {
        let q = FiniteRing::integers_mod(7).unwrap();
        let two = q.from_int(2);
        let w = center_word(&q, 3, two).unwrap();
        assert_eq!(w.len(), 12);
        assert_eq!(w.eval(&q, 3).unwrap(), FMat::scalar(&q, 3, two));
        assert!(center_word(&q, 3, q.one()).unwrap().is_empty());
        assert!(center_word(&q, 3, q.from_int(3)).is_err());
    }

    #[test]
    fn signed_swap() {
        let z = Ring::integers();
        let mut w = ElementaryWord::new();
        w.push(0, 1, z.one());
        w.push(1, 0, z.constant(-1));
        w.push(0, 1, z.one());
        let m = w.eval(&z, 3).unwrap();
        assert_eq!(m, RMatrix::from_ints(&z, &[vec![0, 1, 0], vec![-1, 0, 0], vec![0, 0, 1]]).unwrap());
        let both = w.concat(&w.inverse()).eval(&z, 3).unwrap();
        assert!(both.is_identity(&z));
    }
}
