//! Integer matrices of `SL_d(Z)` and word balls in the elementary generators.

use std::collections::HashSet;

use num_integer::Integer;
use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::finite_ring::FiniteRing;
use crate::matgroup::{FMat, RMatrix};
use crate::ring::Ring;

/// Largest absolute entry allowed in ball elements.
pub const ENTRY_BOUND: i64 = 1_000_000_000;
pub const BALL_CAP: usize = 2_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntMat {
    d: usize,
    e: Vec<i64>,
}

impl IntMat {
    pub fn identity(d: usize) -> IntMat {
        let mut e = vec![0; d * d];
        for i in 0..d {
            e[i * d + i] = 1;
        }
        IntMat { d, e }
    }

    pub fn elementary(d: usize, i: usize, j: usize, r: i64) -> IntMat {
        let mut m = IntMat::identity(d);
        m.e[i * d + j] = r;
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<IntMat> {
        let d = rows.len();
        if rows.iter().any(|r| r.len() != d) {
            return Err(Error::pre("matrix must be square"));
        }
        Ok(IntMat { d, e: rows.concat() })
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.e[i * self.d + j]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.e.chunks(self.d).map(|c| c.to_vec()).collect()
    }

    pub fn mul(&self, other: &IntMat) -> Result<IntMat> {
        let d = self.d;
        let mut e = vec![0i64; d * d];
        for i in 0..d {
            for j in 0..d {
                let s: i128 = (0..d).map(|k| self.e[i * d + k] as i128 * other.e[k * d + j] as i128).sum();
                if s.abs() > ENTRY_BOUND as i128 {
                    return Err(Error::limit("matrix entry", ENTRY_BOUND as u64));
                }
                e[i * d + j] = s as i64;
            }
        }
        Ok(IntMat { d, e })
    }

    pub fn det(&self) -> i64 {
        det_rec(&self.rows())
    }

    /// Adjugate inverse of a determinant-one matrix.
    pub fn inverse(&self) -> Result<IntMat> {
        if self.det() != 1 {
            return Err(Error::pre("determinant is not 1"));
        }
        let d = self.d;
        let rows = self.rows();
        let mut e = vec![0; d * d];
        for i in 0..d {
            for j in 0..d {
                let minor: Vec<Vec<i64>> = rows
                    .iter()
                    .enumerate()
                    .filter(|(r, _)| *r != j)
                    .map(|(_, row)| row.iter().enumerate().filter(|(c, _)| *c != i).map(|(_, &x)| x).collect())
                    .collect();
                let c = if d == 1 { 1 } else { det_rec(&minor) };
                e[i * d + j] = if (i + j) % 2 == 1 { -c } else { c };
            }
        }
        Ok(IntMat { d, e })
    }

    pub fn conjugate(&self, h: &IntMat) -> Result<IntMat> {
        h.mul(self)?.mul(&h.inverse()?)
    }

    pub fn is_identity(&self) -> bool {
        *self == IntMat::identity(self.d)
    }

    /// Nonnegative generator of the level: the ideal of entries of `g - Id`.
    pub fn sl_level(&self) -> i64 {
        let d = self.d;
        let mut g = 0i64;
        for i in 0..d {
            for j in 0..d {
                let x = self.e[i * d + j] - if i == j { 1 } else { 0 };
                g = g.gcd(&x);
            }
        }
        g
    }

    /// Generator of the smallest `J` with `g` scalar modulo `J`.
    pub fn sltil_level(&self) -> i64 {
        let d = self.d;
        let mut g = 0i64;
        for i in 0..d {
            for j in 0..d {
                let x = if i == j { self.e[i * d + i] - self.e[0] } else { self.e[i * d + j] };
                g = g.gcd(&x);
            }
        }
        g
    }

    pub fn to_rmatrix(&self, ring: &Ring) -> Result<RMatrix> {
        let rows: Vec<Vec<i64>> = self.rows();
        RMatrix::from_ints(ring, &rows)
    }

    /// Entrywise reduction into a finite quotient of `Z` or of a ring over `Z`.
    pub fn reduce(&self, q: &FiniteRing) -> FMat {
        let rows = self.rows().iter().map(|r| r.iter().map(|&x| q.from_int(x)).collect()).collect();
        FMat::from_rows(q, rows).expect("square")
    }
}

fn det_rec(m: &[Vec<i64>]) -> i64 {
    match m.len() {
        0 => 1,
        1 => m[0][0],
        n => (0..n)
            .filter(|&c| m[0][c] != 0)
            .map(|c| {
                let minor: Vec<Vec<i64>> = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|(k, _)| *k != c).map(|(_, &x)| x).collect())
                    .collect();
                let t = m[0][c] * det_rec(&minor);
                if c % 2 == 0 {
                    t
                } else {
                    -t
                }
            })
            .sum(),
    }
}

/// The generators `E_ij(1)` and `E_ij(-1)`, in index order.
pub fn unit_elementaries(d: usize) -> Vec<IntMat> {
    let mut gens = Vec::new();
    for i in 0..d {
        for j in 0..d {
            if i != j {
                gens.push(IntMat::elementary(d, i, j, 1));
                gens.push(IntMat::elementary(d, i, j, -1));
            }
        }
    }
    gens
}

/// Distinct elements of word length at most `radius`, in breadth-first order.
pub fn word_ball(d: usize, radius: usize, cap: usize) -> Result<Vec<IntMat>> {
    let gens = unit_elementaries(d);
    let mut seen: HashSet<IntMat> = HashSet::from([IntMat::identity(d)]);
    let mut out = vec![IntMat::identity(d)];
    let mut layer = 0..1;
    for _ in 0..radius {
        let start = out.len();
        for k in layer.clone() {
            for g in &gens {
                let y = out[k].mul(g)?;
                if seen.insert(y.clone()) {
                    out.push(y);
                    if out.len() > cap {
                        return Err(Error::limit("ball size", cap));
                    }
                }
            }
        }
        layer = start..out.len();
    }
    Ok(out)
}

/// `n` distinct ball elements chosen by a seeded generator, in ball order.
pub fn sample_ball(ball: &[IntMat], n: usize, seed: u64) -> Vec<IntMat> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut idx = sample(&mut rng, ball.len(), n.min(ball.len())).into_vec();
    idx.sort_unstable();
    idx.into_iter().map(|k| ball[k].clone()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matgroup::sltil_level;

    #[test]
    fn ball_growth_and_levels() {
        assert_eq!(word_ball(3, 1, BALL_CAP).unwrap().len(), 13);
        let ball = word_ball(3, 2, BALL_CAP).unwrap();
        // E_ij(1)E_ij(-1) = Id, and E_ij(±1)^2 = E_ij(±2) are new.
        assert!(ball.contains(&IntMat::elementary(3, 0, 1, 2)));
        assert!(ball.iter().all(|g| g.det() == 1 && g.mul(&g.inverse().unwrap()).unwrap().is_identity()));
        let z = Ring::integers();
        for g in ball.iter().step_by(7) {
            let lvl = sltil_level(&z, &g.to_rmatrix(&z).unwrap()).unwrap();
            assert_eq!(lvl.integer_part().unwrap(), num_bigint::BigInt::from(g.sltil_level().abs()));
        }
        assert_eq!(IntMat::elementary(3, 0, 1, 6).sl_level(), 6);
    }

    #[test]
    fn seeded_sample_is_stable() {
        let ball = word_ball(3, 3, BALL_CAP).unwrap();
        assert_eq!(sample_ball(&ball, 10, 7), sample_ball(&ball, 10, 7));
        assert_ne!(sample_ball(&ball, 10, 7), sample_ball(&ball, 10, 8));
    }
}
