//! Square matrices over a presented ring, entries kept in normal form.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::ring::{Polynomial, Ring};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RMatrix {
    d: usize,
    e: Vec<Polynomial>,
}

impl RMatrix {
    pub fn from_rows(ring: &Ring, rows: Vec<Vec<Polynomial>>) -> Result<RMatrix> {
        let d = rows.len();
        if rows.iter().any(|r| r.len() != d) {
            return Err(Error::pre("matrix must be square"));
        }
        let e = rows
            .into_iter()
            .flatten()
            .map(|p| ring.reduce(&p))
            .collect::<Result<Vec<_>>>()?;
        Ok(RMatrix { d, e })
    }

    pub fn from_ints(ring: &Ring, rows: &[Vec<i64>]) -> Result<RMatrix> {
        let rows = rows.iter().map(|r| r.iter().map(|&x| ring.constant(x)).collect()).collect();
        RMatrix::from_rows(ring, rows)
    }

    pub fn identity(ring: &Ring, d: usize) -> RMatrix {
        let mut e = vec![ring.zero(); d * d];
        for i in 0..d {
            e[i * d + i] = ring.one();
        }
        RMatrix { d, e }
    }

    /// `E_ij(r)` with zero-based indices.
    pub fn elementary(ring: &Ring, d: usize, i: usize, j: usize, r: &Polynomial) -> Result<RMatrix> {
        if i == j || i >= d || j >= d {
            return Err(Error::pre(format!("invalid elementary index ({}, {})", i + 1, j + 1)));
        }
        let mut m = RMatrix::identity(ring, d);
        m.e[i * d + j] = ring.reduce(r)?;
        Ok(m)
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.e[i * self.d + j]
    }

    pub fn rows(&self) -> Vec<Vec<Polynomial>> {
        self.e.chunks(self.d).map(|c| c.to_vec()).collect()
    }

    pub fn entries(&self) -> &[Polynomial] {
        &self.e
    }

    pub fn mul(&self, ring: &Ring, other: &RMatrix) -> Result<RMatrix> {
        if self.d != other.d {
            return Err(Error::pre("dimension mismatch"));
        }
        let d = self.d;
        let mut e = Vec::with_capacity(d * d);
        for i in 0..d {
            for j in 0..d {
                let mut acc = ring.zero();
                for k in 0..d {
                    acc = acc.add(&self.e[i * d + k].mul(&other.e[k * d + j])?)?;
                }
                e.push(ring.reduce(&acc)?);
            }
        }
        Ok(RMatrix { d, e })
    }

    pub fn det(&self, ring: &Ring) -> Result<Polynomial> {
        ring.reduce(&det_rec(&self.rows())?)
    }

    /// Inverse via the adjugate; the determinant must be `1` or `-1`.
    pub fn inverse(&self, ring: &Ring) -> Result<RMatrix> {
        let det = self.det(ring)?;
        let sign = if ring.eq_elem(&det, &ring.one())? {
            BigInt::from(1)
        } else if ring.eq_elem(&det, &ring.constant(-1))? {
            BigInt::from(-1)
        } else {
            return Err(Error::pre("determinant is not a unit"));
        };
        let d = self.d;
        let rows = self.rows();
        let mut e = Vec::with_capacity(d * d);
        for i in 0..d {
            for j in 0..d {
                let minor: Vec<Vec<Polynomial>> = rows
                    .iter()
                    .enumerate()
                    .filter(|(r, _)| *r != j)
                    .map(|(_, row)| row.iter().enumerate().filter(|(c, _)| *c != i).map(|(_, x)| x.clone()).collect())
                    .collect();
                let mut c = det_rec(&minor)?;
                if (i + j) % 2 == 1 {
                    c = c.neg();
                }
                e.push(ring.reduce(&c.scale(&sign))?);
            }
        }
        Ok(RMatrix { d, e })
    }

    pub fn is_identity(&self, ring: &Ring) -> bool {
        *self == RMatrix::identity(ring, self.d)
    }

    /// Integer entries when the ring has no variables.
    pub fn to_ints(&self) -> Option<Vec<Vec<BigInt>>> {
        self.rows()
            .iter()
            .map(|r| r.iter().map(|p| p.as_constant()).collect::<Option<Vec<_>>>())
            .collect()
    }

    pub fn display(&self, ring: &Ring) -> String {
        let rows: Vec<String> = self
            .rows()
            .iter()
            .map(|r| r.iter().map(|x| ring.display(x)).collect::<Vec<_>>().join(", "))
            .collect();
        format!("[[{}]]", rows.join("], ["))
    }
}

fn det_rec(m: &[Vec<Polynomial>]) -> Result<Polynomial> {
    match m.len() {
        0 => Err(Error::pre("empty matrix")),
        1 => Ok(m[0][0].clone()),
        2 => m[0][0].mul(&m[1][1])?.sub(&m[0][1].mul(&m[1][0])?),
        n => {
            let mut acc = Polynomial::zero(m[0][0].nvars(), m[0][0].order());
            for c in 0..n {
                if m[0][c].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<Polynomial>> = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|(k, _)| *k != c).map(|(_, x)| x.clone()).collect())
                    .collect();
                let t = m[0][c].mul(&det_rec(&minor)?)?;
                acc = if c % 2 == 0 { acc.add(&t)? } else { acc.sub(&t)? };
            }
            Ok(acc)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symbolic_inverse() {
        let r = Ring::with_names(2, &["a", "b"]);
        let a = RMatrix::elementary(&r, 3, 0, 1, &r.parse("a").unwrap()).unwrap();
        let b = RMatrix::elementary(&r, 3, 2, 0, &r.parse("b^2 + 1").unwrap()).unwrap();
        let g = a.mul(&r, &b).unwrap();
        assert_eq!(g.det(&r).unwrap(), r.one());
        assert!(g.mul(&r, &g.inverse(&r).unwrap()).unwrap().is_identity(&r));
    }

    #[test]
    fn invalid_inputs() {
        let z = Ring::integers();
        assert!(RMatrix::elementary(&z, 3, 1, 1, &z.one()).is_err());
        assert!(RMatrix::from_ints(&z, &[vec![2, 0], vec![0, 1]]).unwrap().inverse(&z).is_err());
    }
}
