//! Square matrices over a finite ring, stored row-major.

use crate::error::{Error, Result};
use crate::finite_ring::{Elem, FiniteRing};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FMat {
    d: usize,
    e: Vec<Elem>,
}

impl FMat {
    pub fn from_rows(q: &FiniteRing, rows: Vec<Vec<Elem>>) -> Result<FMat> {
        let d = rows.len();
        if rows.iter().any(|r| r.len() != d) {
            return Err(Error::pre("matrix must be square"));
        }
        let e: Vec<Elem> = rows.into_iter().flatten().collect();
        if e.iter().any(|&x| x as usize >= q.order()) {
            return Err(Error::pre("entry outside the ring"));
        }
        Ok(FMat { d, e })
    }

    pub fn identity(q: &FiniteRing, d: usize) -> FMat {
        FMat::scalar(q, d, q.one())
    }

    pub fn scalar(q: &FiniteRing, d: usize, u: Elem) -> FMat {
        let mut e = vec![q.zero(); d * d];
        for i in 0..d {
            e[i * d + i] = u;
        }
        FMat { d, e }
    }

    /// `E_ij(r)` with zero-based indices.
    pub fn elementary(q: &FiniteRing, d: usize, i: usize, j: usize, r: Elem) -> FMat {
        let mut m = FMat::identity(q, d);
        m.e[i * d + j] = r;
        m
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn get(&self, i: usize, j: usize) -> Elem {
        self.e[i * self.d + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Elem) {
        self.e[i * self.d + j] = v;
    }

    pub fn entries(&self) -> &[Elem] {
        &self.e
    }

    pub fn rows(&self) -> Vec<Vec<Elem>> {
        self.e.chunks(self.d).map(|c| c.to_vec()).collect()
    }

    pub fn mul(&self, q: &FiniteRing, other: &FMat) -> FMat {
        let d = self.d;
        let mut e = vec![q.zero(); d * d];
        for i in 0..d {
            for k in 0..d {
                let a = self.e[i * d + k];
                if a == 0 {
                    continue;
                }
                for j in 0..d {
                    let b = other.e[k * d + j];
                    if b != 0 {
                        e[i * d + j] = q.add(e[i * d + j], q.mul(a, b));
                    }
                }
            }
        }
        FMat { d, e }
    }

    pub fn det(&self, q: &FiniteRing) -> Elem {
        det_rec(q, &self.rows())
    }

    /// Inverse through the adjugate; requires a unit determinant.
    pub fn inverse(&self, q: &FiniteRing) -> Result<FMat> {
        let det = self.det(q);
        let inv = q.inverse(det).ok_or_else(|| Error::pre("determinant is not a unit"))?;
        let d = self.d;
        let rows = self.rows();
        let mut e = vec![q.zero(); d * d];
        for i in 0..d {
            for j in 0..d {
                let minor: Vec<Vec<Elem>> = rows
                    .iter()
                    .enumerate()
                    .filter(|(r, _)| *r != j)
                    .map(|(_, row)| row.iter().enumerate().filter(|(c, _)| *c != i).map(|(_, &x)| x).collect())
                    .collect();
                let mut c = det_rec(q, &minor);
                if (i + j) % 2 == 1 {
                    c = q.neg(c);
                }
                e[i * d + j] = q.mul(c, inv);
            }
        }
        Ok(FMat { d, e })
    }

    /// `[a, b] = a b a^-1 b^-1`.
    pub fn commutator(q: &FiniteRing, a: &FMat, b: &FMat) -> Result<FMat> {
        Ok(a.mul(q, b).mul(q, &a.inverse(q)?).mul(q, &b.inverse(q)?))
    }

    /// `g x g^-1`.
    pub fn conjugate(&self, q: &FiniteRing, g: &FMat) -> Result<FMat> {
        Ok(g.mul(q, self).mul(q, &g.inverse(q)?))
    }

    pub fn is_identity(&self, q: &FiniteRing) -> bool {
        *self == FMat::identity(q, self.d)
    }

    /// The scalar `u` if the matrix is `u * Id`.
    pub fn scalar_value(&self) -> Option<Elem> {
        let d = self.d;
        let u = self.e[0];
        for i in 0..d {
            for j in 0..d {
                let want = if i == j { u } else { 0 };
                if self.e[i * d + j] != want {
                    return None;
                }
            }
        }
        Some(u)
    }

    /// Entrywise image under a ring map given as a lookup table.
    pub fn map(&self, f: &[Elem]) -> FMat {
        FMat { d: self.d, e: self.e.iter().map(|&x| f[x as usize]).collect() }
    }

    pub fn display(&self, q: &FiniteRing) -> String {
        let rows: Vec<String> = self
            .rows()
            .iter()
            .map(|r| r.iter().map(|&x| q.display(x)).collect::<Vec<_>>().join(", "))
            .collect();
        format!("[[{}]]", rows.join("], ["))
    }
}

fn det_rec(q: &FiniteRing, m: &[Vec<Elem>]) -> Elem {
    match m.len() {
        0 => q.one(),
        1 => m[0][0],
        2 => q.sub(q.mul(m[0][0], m[1][1]), q.mul(m[0][1], m[1][0])),
        n => {
            let mut acc = q.zero();
            for c in 0..n {
                if m[0][c] == 0 {
                    continue;
                }
                let minor: Vec<Vec<Elem>> = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|(k, _)| *k != c).map(|(_, &x)| x).collect())
                    .collect();
                let t = q.mul(m[0][c], det_rec(q, &minor));
                acc = if c % 2 == 0 { q.add(acc, t) } else { q.sub(acc, t) };
            }
            acc
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_and_commutator() {
        let q = FiniteRing::integers_mod(8).unwrap();
        let a = FMat::elementary(&q, 3, 0, 1, q.from_int(3));
        let b = FMat::elementary(&q, 3, 1, 2, q.from_int(5));
        let c = FMat::commutator(&q, &a, &b).unwrap();
        assert_eq!(c, FMat::elementary(&q, 3, 0, 2, q.from_int(15)));
        let g = a.mul(&q, &b).mul(&q, &FMat::elementary(&q, 3, 2, 0, q.from_int(7)));
        assert!(g.mul(&q, &g.inverse(&q).unwrap()).is_identity(&q));
        assert_eq!(g.det(&q), q.one());
    }
}
