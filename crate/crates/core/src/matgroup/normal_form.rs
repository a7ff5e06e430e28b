//! Normal form for conjugates: for `d` above the stable range every `g` in
//! `SL_d` has a conjugate `W^-1 g W = h v h' v' n` with `h, h'` in the first
//! horizontal group, `v, v'` in the first vertical group, `h' = E_12(-1)` and
//! `n` fixing the first basis vector on both sides.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::finite_ring::{Elem, FiniteRing};
use crate::ring::Ring;

use super::fmat::FMat;
use super::rmat::RMatrix;
use super::stable_range::{bezout, shorten_integer, FiniteShortener, INTEGER_STABLE_RANGE};
use super::word::ElementaryWord;

/// Coefficient ring for the decomposition.
pub trait Backend {
    type E: Clone + PartialEq + Debug;
    fn zero(&self) -> Self::E;
    fn one(&self) -> Self::E;
    fn add(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn mul(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn neg(&self, a: &Self::E) -> Self::E;
    fn stable_range(&self) -> Result<usize>;
    fn shorten(&self, v: &[Self::E]) -> Result<Vec<Self::E>>;
    /// Coefficients `a` with `sum a_i v_i = target`.
    fn combination(&self, v: &[Self::E], target: &Self::E) -> Result<Vec<Self::E>>;

    fn sub(&self, a: &Self::E, b: &Self::E) -> Self::E {
        self.add(a, &self.neg(b))
    }
}

pub struct IntegerBackend;

impl Backend for IntegerBackend {
    type E = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }

    fn one(&self) -> BigInt {
        BigInt::one()
    }

    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }

    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }

    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }

    fn stable_range(&self) -> Result<usize> {
        Ok(INTEGER_STABLE_RANGE)
    }

    fn shorten(&self, v: &[BigInt]) -> Result<Vec<BigInt>> {
        shorten_integer(v)
    }

    fn combination(&self, v: &[BigInt], target: &BigInt) -> Result<Vec<BigInt>> {
        let (g, a) = bezout(v);
        if g.is_zero() || !(target % &g).is_zero() {
            return Err(Error::Validation("target is not in the ideal generated by the tuple".into()));
        }
        let k = target / g;
        Ok(a.into_iter().map(|x| x * &k).collect())
    }
}

pub struct FiniteBackend<'a>(pub FiniteShortener<'a>);

impl<'a> FiniteBackend<'a> {
    pub fn new(q: &'a FiniteRing) -> Self {
        FiniteBackend(FiniteShortener::new(q))
    }
}

impl Backend for FiniteBackend<'_> {
    type E = Elem;

    fn zero(&self) -> Elem {
        self.0.ring().zero()
    }

    fn one(&self) -> Elem {
        self.0.ring().one()
    }

    fn add(&self, a: &Elem, b: &Elem) -> Elem {
        self.0.ring().add(*a, *b)
    }

    fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        self.0.ring().mul(*a, *b)
    }

    fn neg(&self, a: &Elem) -> Elem {
        self.0.ring().neg(*a)
    }

    fn stable_range(&self) -> Result<usize> {
        self.0.stable_range()
    }

    fn shorten(&self, v: &[Elem]) -> Result<Vec<Elem>> {
        self.0.shorten(v)
    }

    fn combination(&self, v: &[Elem], target: &Elem) -> Result<Vec<Elem>> {
        self.0.combination(v, *target)
    }
}

pub type Mat<E> = Vec<Vec<E>>;

pub fn identity<B: Backend>(b: &B, d: usize) -> Mat<B::E> {
    (0..d).map(|i| (0..d).map(|j| if i == j { b.one() } else { b.zero() }).collect()).collect()
}

pub fn elementary<B: Backend>(b: &B, d: usize, i: usize, j: usize, r: &B::E) -> Mat<B::E> {
    let mut m = identity(b, d);
    m[i][j] = r.clone();
    m
}

pub fn mat_mul<B: Backend>(b: &B, x: &Mat<B::E>, y: &Mat<B::E>) -> Mat<B::E> {
    let d = x.len();
    (0..d)
        .map(|i| {
            (0..d)
                .map(|j| (0..d).fold(b.zero(), |acc, k| b.add(&acc, &b.mul(&x[i][k], &y[k][j]))))
                .collect()
        })
        .collect()
}

pub fn det<B: Backend>(b: &B, m: &Mat<B::E>) -> B::E {
    match m.len() {
        0 => b.one(),
        1 => m[0][0].clone(),
        n => {
            let mut acc = b.zero();
            for c in 0..n {
                let minor: Mat<B::E> = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|(k, _)| *k != c).map(|(_, x)| x.clone()).collect())
                    .collect();
                let t = b.mul(&m[0][c], &det(b, &minor));
                acc = if c % 2 == 0 { b.add(&acc, &t) } else { b.sub(&acc, &t) };
            }
            acc
        }
    }
}

pub fn eval_word<B: Backend>(b: &B, d: usize, w: &ElementaryWord<B::E>) -> Mat<B::E> {
    let mut m = identity(b, d);
    for l in &w.letters {
        m = mat_mul(b, &m, &elementary(b, d, l.i, l.j, &l.r));
    }
    m
}

fn word_inverse<B: Backend>(b: &B, w: &ElementaryWord<B::E>) -> ElementaryWord<B::E> {
    let mut out = ElementaryWord::new();
    for l in w.letters.iter().rev() {
        out.push(l.i, l.j, b.neg(&l.r));
    }
    out
}

/// `L g L^-1` for an elementary `L = E_ij(r)`, by row and column operations.
fn conjugate_elementary<B: Backend>(b: &B, g: &mut Mat<B::E>, i: usize, j: usize, r: &B::E) {
    let d = g.len();
    let row_j = g[j].clone();
    for k in 0..d {
        g[i][k] = b.add(&g[i][k], &b.mul(r, &row_j[k]));
    }
    for row in g.iter_mut() {
        row[j] = b.sub(&row[j], &b.mul(&row[i], r));
    }
}

/// The decomposition `W^-1 g W = h v h' v' n`.
#[derive(Clone, Debug)]
pub struct NormalForm<E> {
    pub conjugator: ElementaryWord<E>,
    pub h: Mat<E>,
    pub v: Mat<E>,
    pub h_prime: Mat<E>,
    pub v_prime: Mat<E>,
    pub n: Mat<E>,
}

pub fn normal_form_conjugate<B: Backend>(b: &B, g: &Mat<B::E>) -> Result<NormalForm<B::E>> {
    let d = g.len();
    if d < 2 || g.iter().any(|r| r.len() != d) {
        return Err(Error::pre("need a square matrix of size at least 2"));
    }
    let sr = b.stable_range()?;
    if d <= sr {
        return Err(Error::pre(format!("dimension {d} does not exceed the stable range {sr}")));
    }
    if det(b, g) != b.one() {
        return Err(Error::pre("matrix does not have determinant 1"));
    }
    let mut cur = g.clone();
    let mut conj = ElementaryWord::new();

    // Make (r_1, r_3, ..., r_d) unimodular by conjugating with E_i2(s_i).
    let others: Vec<usize> = (0..d).filter(|&i| i != 1).collect();
    let mut tuple: Vec<B::E> = others.iter().map(|&i| cur[i][0].clone()).collect();
    tuple.push(cur[1][0].clone());
    let s = b.shorten(&tuple)?;
    for (&i, si) in others.iter().zip(&s) {
        if *si != b.zero() {
            conjugate_elementary(b, &mut cur, i, 1, si);
            conj.push(i, 1, b.neg(si));
        }
    }

    // Solve s_1 r_1 + s_3 r_3 + ... = 1 - r_1 - r_2 and conjugate by E_2j(s_j).
    let short: Vec<B::E> = others.iter().map(|&i| cur[i][0].clone()).collect();
    let target = b.sub(&b.sub(&b.one(), &cur[0][0]), &cur[1][0]);
    let c = b.combination(&short, &target)?;
    for (&j, sj) in others.iter().zip(&c).skip(1) {
        if *sj != b.zero() {
            conjugate_elementary(b, &mut cur, 1, j, sj);
            conj.push(1, j, b.neg(sj));
        }
    }
    let s1 = c[0].clone();

    // g'' = h_1 v_1 g' has a one in the corner.
    let v1 = elementary(b, d, 1, 0, &s1);
    let h1 = elementary(b, d, 0, 1, &b.one());
    let g2 = mat_mul(b, &h1, &mat_mul(b, &v1, &cur));
    if g2[0][0] != b.one() {
        return Err(Error::Numerical("corner entry did not normalise to one".into()));
    }
    let mut v2 = identity(b, d);
    let mut v_prime = identity(b, d);
    for k in 1..d {
        v2[k][0] = b.neg(&g2[k][0]);
        v_prime[k][0] = g2[k][0].clone();
    }
    let m = mat_mul(b, &v2, &g2);
    let mut h2 = identity(b, d);
    let mut h = identity(b, d);
    for j in 1..d {
        h2[0][j] = b.neg(&m[0][j]);
        h[0][j] = m[0][j].clone();
        if m[0][j] != b.zero() {
            conj.push(0, j, b.neg(&m[0][j]));
        }
    }
    let n = mat_mul(b, &m, &h2);
    Ok(NormalForm {
        conjugator: conj,
        h,
        v: elementary(b, d, 1, 0, &b.neg(&s1)),
        h_prime: elementary(b, d, 0, 1, &b.neg(&b.one())),
        v_prime,
        n,
    })
}

/// Re-multiplies both sides and checks the shape of every factor.
pub fn verify<B: Backend>(b: &B, g: &Mat<B::E>, nf: &NormalForm<B::E>) -> bool {
    let d = g.len();
    let w = eval_word(b, d, &nf.conjugator);
    let wi = eval_word(b, d, &word_inverse(b, &nf.conjugator));
    let lhs = mat_mul(b, &mat_mul(b, &wi, g), &w);
    let mut rhs = mat_mul(b, &nf.h, &nf.v);
    for f in [&nf.h_prime, &nf.v_prime, &nf.n] {
        rhs = mat_mul(b, &rhs, f);
    }
    let id = identity(b, d);
    let differs_only = |m: &Mat<B::E>, keep: &dyn Fn(usize, usize) -> bool| {
        (0..d).all(|i| (0..d).all(|j| keep(i, j) || m[i][j] == id[i][j]))
    };
    let horizontal = |m: &Mat<B::E>| differs_only(m, &|i, j| i == 0 && j > 0);
    let vertical = |m: &Mat<B::E>| differs_only(m, &|i, j| j == 0 && i > 0);
    let embedded = differs_only(&nf.n, &|i, j| i > 0 && j > 0);
    lhs == rhs
        && horizontal(&nf.h)
        && vertical(&nf.v)
        && nf.h_prime == elementary(b, d, 0, 1, &b.neg(&b.one()))
        && vertical(&nf.v_prime)
        && embedded
}

/// Decomposition of an integer matrix given as an [`RMatrix`] over `Z`.
pub fn normal_form_integer(ring: &Ring, g: &RMatrix) -> Result<NormalForm<BigInt>> {
    if ring.nvars() != 0 || !ring.relations().is_empty() {
        return Err(Error::pre("the integer backend needs the ring Z"));
    }
    let m = g.to_ints().ok_or_else(|| Error::pre("entries are not integers"))?;
    normal_form_conjugate(&IntegerBackend, &m)
}

pub fn normal_form_finite(q: &FiniteRing, g: &FMat) -> Result<NormalForm<Elem>> {
    normal_form_conjugate(&FiniteBackend::new(q), &g.rows())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(rows: &[&[i64]]) -> Mat<BigInt> {
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    #[test]
    fn identity_and_elementary() {
        let b = IntegerBackend;
        for g in [identity(&b, 3), elementary(&b, 3, 0, 2, &BigInt::from(5))] {
            let nf = normal_form_conjugate(&b, &g).unwrap();
            assert!(verify(&b, &g, &nf));
        }
    }

    #[test]
    fn dense_integer_matrix() {
        let b = IntegerBackend;
        let g = ints(&[&[2, 3, 1], &[1, 2, 1], &[3, 5, 3]]);
        assert_eq!(det(&b, &g), BigInt::one());
        let nf = normal_form_conjugate(&b, &g).unwrap();
        assert!(verify(&b, &g, &nf));
        assert!(normal_form_conjugate(&b, &ints(&[&[2, 1], &[1, 1]])).is_err());
    }

    #[test]
    fn finite_backend() {
        let q = FiniteRing::integers_mod(6).unwrap();
        let g = FMat::elementary(&q, 2, 0, 1, q.from_int(5)).mul(&q, &FMat::elementary(&q, 2, 1, 0, q.from_int(3)));
        let nf = normal_form_finite(&q, &g).unwrap();
        assert!(verify(&FiniteBackend::new(&q), &g.rows(), &nf));
    }
}
