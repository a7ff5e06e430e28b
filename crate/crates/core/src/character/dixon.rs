//! Irreducible characters from class-sum structure constants.
//!
//! The central characters `ω_χ(C) = |C| χ(g_C) / χ(1)` are the common
//! eigenvectors of the class multiplication matrices. A random real
//! combination of those matrices has simple spectrum with probability one,
//! so the null vectors of `M - λ` for its eigenvalues `λ` are exactly the
//! `ω_χ`. Degrees follow from the first orthogonality relation.

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::group::{FiniteGroup, GElem};
use crate::error::{Error, Result};

pub const CLASS_CAP: usize = 60;
pub const ORTHOGONALITY_TOL: f64 = 1e-6;
const ATTEMPTS: usize = 12;
const SEPARATION: f64 = 1e-6;

/// A class function: one value per conjugacy class, in class order.
#[derive(Clone, Debug, PartialEq)]
pub struct ClassFunction {
    pub values: Vec<Complex64>,
}

impl ClassFunction {
    pub fn degree(&self) -> f64 {
        self.values[0].re
    }

    /// `<f, g> = (1/|G|) Σ_C |C| f(C) conj(g(C))`.
    pub fn inner(&self, other: &ClassFunction, table: &CharacterTable) -> Complex64 {
        let total: Complex64 = self
            .values
            .iter()
            .zip(&other.values)
            .zip(&table.class_sizes)
            .map(|((a, b), &s)| a * b.conj() * s as f64)
            .sum();
        total / table.order as f64
    }

    pub fn approx_eq(&self, other: &ClassFunction, tol: f64) -> bool {
        self.values.len() == other.values.len()
            && self.values.iter().zip(&other.values).all(|(a, b)| (a - b).norm() <= tol)
    }
}

#[derive(Clone, Debug)]
pub struct CharacterTable {
    pub order: usize,
    pub classes: Vec<Vec<GElem>>,
    pub class_sizes: Vec<usize>,
    /// Class of each element.
    pub class_of: Vec<usize>,
    /// Sorted by degree, then by values.
    pub characters: Vec<ClassFunction>,
}

impl CharacterTable {
    pub fn degrees(&self) -> Vec<u64> {
        self.characters.iter().map(|c| c.degree().round() as u64).collect()
    }

    pub fn value(&self, chi: usize, g: GElem) -> Complex64 {
        self.characters[chi].values[self.class_of[g as usize]]
    }

    /// Largest deviations from the two orthogonality relations.
    pub fn orthogonality_errors(&self) -> (f64, f64) {
        let n = self.characters.len();
        let mut first: f64 = 0.0;
        for a in 0..n {
            for b in 0..n {
                let want = if a == b { 1.0 } else { 0.0 };
                let ip = self.characters[a].inner(&self.characters[b], self);
                first = first.max((ip - Complex64::new(want, 0.0)).norm());
            }
        }
        let mut second: f64 = 0.0;
        let k = self.classes.len();
        for c in 0..k {
            for e in 0..k {
                let s: Complex64 = self.characters.iter().map(|chi| chi.values[c] * chi.values[e].conj()).sum();
                let want = if c == e { (self.order / self.class_sizes[c]) as f64 } else { 0.0 };
                second = second.max((s - Complex64::new(want, 0.0)).norm());
            }
        }
        (first, second)
    }

    /// Splits a class function into irreducible constituents with their
    /// inner products, skipping those below `tol`.
    pub fn decompose(&self, f: &ClassFunction, tol: f64) -> Vec<(usize, Complex64)> {
        self.characters
            .iter()
            .enumerate()
            .map(|(i, chi)| (i, f.inner(chi, self)))
            .filter(|(_, c)| c.norm() > tol)
            .collect()
    }
}

/// `m[j][k][l] = #{(x, y) in C_j x C_k : x y = z_l}` for fixed representatives `z_l`.
fn structure_constants(g: &FiniteGroup, classes: &[Vec<GElem>], class_of: &[usize]) -> Vec<DMatrix<f64>> {
    let k = classes.len();
    let mut m = vec![DMatrix::<f64>::zeros(k, k); k];
    for (l, cl) in classes.iter().enumerate() {
        let z = cl[0];
        for (j, cj) in classes.iter().enumerate() {
            for &x in cj {
                let y = g.mul(g.inv(x), z);
                m[j][(class_of[y as usize], l)] += 1.0;
            }
        }
    }
    m
}

pub fn character_table(g: &FiniteGroup, seed: u64) -> Result<CharacterTable> {
    let classes = g.conjugacy_classes();
    if classes.len() > CLASS_CAP {
        return Err(Error::limit("class count", CLASS_CAP));
    }
    let mut class_of = vec![0; g.order()];
    for (c, cl) in classes.iter().enumerate() {
        for &x in cl {
            class_of[x as usize] = c;
        }
    }
    let class_sizes: Vec<usize> = classes.iter().map(Vec::len).collect();
    let mats = structure_constants(g, &classes, &class_of);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..ATTEMPTS {
        let coeffs: Vec<f64> = (0..mats.len()).map(|_| rng.gen_range(-1.0..1.0)).collect();
        if let Some(omegas) = split(&mats, &coeffs) {
            let characters = omegas
                .into_iter()
                .map(|w| normalize(&w, &class_sizes, g.order()))
                .collect::<Vec<_>>();
            let mut table = CharacterTable { order: g.order(), classes, class_sizes, class_of, characters };
            sort_characters(&mut table.characters);
            let (first, second) = table.orthogonality_errors();
            if first > ORTHOGONALITY_TOL || second > ORTHOGONALITY_TOL {
                return Err(Error::Numerical(format!("orthogonality defect {first:.2e} / {second:.2e}")));
            }
            return Ok(table);
        }
    }
    Err(Error::Numerical("class-sum spectrum stayed degenerate".into()))
}

/// Central characters as common eigenvectors, or `None` if the combination
/// has a repeated eigenvalue.
fn split(mats: &[DMatrix<f64>], coeffs: &[f64]) -> Option<Vec<Vec<Complex64>>> {
    let k = mats[0].nrows();
    let mut m = DMatrix::<f64>::zeros(k, k);
    for (a, &c) in mats.iter().zip(coeffs) {
        m += a * c;
    }
    let eig = m.complex_eigenvalues();
    for a in 0..k {
        for b in a + 1..k {
            if (eig[a] - eig[b]).norm() < SEPARATION {
                return None;
            }
        }
    }
    let mc = m.map(|x| Complex64::new(x, 0.0));
    let mut out = Vec::with_capacity(k);
    for lambda in eig.iter() {
        let shifted = &mc - DMatrix::<Complex64>::identity(k, k) * *lambda;
        let svd = shifted.svd(false, true);
        let v_t = svd.v_t?;
        let (idx, _) = svd
            .singular_values
            .iter()
            .enumerate()
            .min_by(|a, b| a.1.total_cmp(b.1))?;
        let v: Vec<Complex64> = v_t.row(idx).iter().map(|z| z.conj()).collect();
        if v[0].norm() < SEPARATION {
            return None;
        }
        let v: Vec<Complex64> = v.iter().map(|z| z / v[0]).collect();
        for a in mats {
            let j_eig = (0..k).map(|c| v[c] * a[(0, c)]).sum::<Complex64>();
            for r in 0..k {
                let av: Complex64 = (0..k).map(|c| v[c] * a[(r, c)]).sum();
                if (av - j_eig * v[r]).norm() > 1e-6 * (1.0 + j_eig.norm()) {
                    return None;
                }
            }
        }
        out.push(v);
    }
    Some(out)
}

fn normalize(omega: &[Complex64], sizes: &[usize], order: usize) -> ClassFunction {
    let s: f64 = omega.iter().zip(sizes).map(|(w, &c)| w.norm_sqr() / c as f64).sum();
    let degree = (order as f64 / s).sqrt().round();
    let values = omega
        .iter()
        .zip(sizes)
        .map(|(w, &c)| clean(w * degree / c as f64))
        .collect();
    ClassFunction { values }
}

/// Snaps values within `1e-10` of a Gaussian integer, and zeroes tiny parts.
fn clean(z: Complex64) -> Complex64 {
    let snap = |x: f64| {
        let r = x.round();
        if (x - r).abs() < 1e-10 {
            r + 0.0
        } else {
            x
        }
    };
    Complex64::new(snap(z.re), snap(z.im))
}

fn sort_characters(chars: &mut [ClassFunction]) {
    let key = |c: &ClassFunction| -> Vec<i64> {
        c.values
            .iter()
            .flat_map(|z| [(z.re * 1e6).round() as i64, (z.im * 1e6).round() as i64])
            .collect()
    };
    chars.sort_by(|a, b| {
        a.degree()
            .total_cmp(&b.degree())
            .then_with(|| key(a).cmp(&key(b)))
    });
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::finite_ring::FiniteRing;
    use crate::matgroup::{el_generators, generate_subgroup, FMat, ELEMENT_CAP};

    fn el(n: u64, d: usize) -> FiniteGroup {
        let q = Arc::new(FiniteRing::integers_mod(n).unwrap());
        let set = generate_subgroup(&q, d, &el_generators(&q, d), ELEMENT_CAP).unwrap();
        FiniteGroup::from_set(q, &set).unwrap()
    }

    #[test]
    fn sl3_f2_degrees() {
        let t = character_table(&el(2, 3), 1).unwrap();
        assert_eq!(t.degrees(), vec![1, 3, 3, 6, 7, 8]);
        assert_eq!(t.degrees().iter().map(|d| d * d).sum::<u64>(), 168);
    }

    #[test]
    fn symmetric_group_on_three_letters() {
        let t = character_table(&el(2, 2), 5).unwrap();
        assert_eq!(t.degrees(), vec![1, 1, 2]);
    }

    #[test]
    fn cyclic_of_order_four() {
        let q = Arc::new(FiniteRing::integers_mod(4).unwrap());
        let c4 = generate_subgroup(&q, 2, &[FMat::elementary(&q, 2, 0, 1, q.one())], ELEMENT_CAP).unwrap();
        let g = FiniteGroup::from_set(q, &c4).unwrap();
        let t = character_table(&g, 0).unwrap();
        assert_eq!(t.degrees(), vec![1, 1, 1, 1]);
        let gen = g.generators()[0];
        let mut values: Vec<(i64, i64)> = t
            .characters
            .iter()
            .map(|c| {
                let z = c.values[t.class_of[gen as usize]];
                (z.re.round() as i64, z.im.round() as i64)
            })
            .collect();
        values.sort();
        assert_eq!(values, vec![(-1, 0), (0, -1), (0, 1), (1, 0)]);
    }
}
