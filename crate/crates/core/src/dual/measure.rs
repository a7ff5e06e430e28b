//! Finitely supported probability measures on the dual with exact rational
//! masses.

use std::collections::BTreeMap;
use std::f64::consts::TAU;

use num_complex::Complex64;
use num_rational::Rational64;
use num_traits::{ToPrimitive, Zero};

use crate::finite_ring::Elem;

use super::model::FiniteModel;

/// Masses indexed by dual element index; absent entries are zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Measure {
    masses: BTreeMap<usize, Rational64>,
}

impl Measure {
    pub fn point(k: usize) -> Measure {
        Measure { masses: BTreeMap::from([(k, Rational64::from_integer(1))]) }
    }

    /// Uniform probability on a finite set of dual indices.
    pub fn uniform(support: &[usize]) -> Measure {
        let w = Rational64::new(1, support.len() as i64);
        let mut masses = BTreeMap::new();
        for &k in support {
            *masses.entry(k).or_insert_with(Rational64::zero) += w;
        }
        Measure { masses }
    }

    pub fn masses(&self) -> &BTreeMap<usize, Rational64> {
        &self.masses
    }

    pub fn mass(&self, k: usize) -> Rational64 {
        self.masses.get(&k).copied().unwrap_or_else(Rational64::zero)
    }

    pub fn support(&self) -> Vec<usize> {
        self.masses.iter().filter(|(_, m)| !m.is_zero()).map(|(&k, _)| k).collect()
    }

    pub fn total(&self) -> Rational64 {
        self.masses.values().copied().sum()
    }

    /// Convex combination `sum w_i mu_i`.
    pub fn mixture(parts: &[(Rational64, Measure)]) -> Measure {
        let mut masses: BTreeMap<usize, Rational64> = BTreeMap::new();
        for (w, mu) in parts {
            for (&k, &m) in &mu.masses {
                *masses.entry(k).or_insert_with(Rational64::zero) += w * m;
            }
        }
        masses.retain(|_, m| !m.is_zero());
        Measure { masses }
    }

    /// `t_* mu`: translate by the dual element with index `t`.
    pub fn translate(&self, model: &FiniteModel<'_>, t: usize) -> Measure {
        Measure { masses: self.masses.iter().map(|(&k, &m)| (model.dual_add(k, t), m)).collect() }
    }

    /// Push-forward along a permutation of the dual.
    pub fn push(&self, perm: &[usize]) -> Measure {
        Measure { masses: self.masses.iter().map(|(&k, &m)| (perm[k], m)).collect() }
    }

    /// `g_* mu = mu` for every elementary generator.
    pub fn is_invariant(&self, model: &FiniteModel<'_>) -> bool {
        model.dual_permutations().iter().all(|p| self.push(p) == *self)
    }

    pub fn has_atoms(&self) -> bool {
        self.masses.values().any(|m| *m > Rational64::zero())
    }

    pub fn convolve(&self, model: &FiniteModel<'_>, other: &Measure) -> Measure {
        let mut masses: BTreeMap<usize, Rational64> = BTreeMap::new();
        for (&a, &x) in &self.masses {
            for (&b, &y) in &other.masses {
                *masses.entry(model.dual_add(a, b)).or_insert_with(Rational64::zero) += x * y;
            }
        }
        masses.retain(|_, m| !m.is_zero());
        Measure { masses }
    }

    /// `sum_chi mu(chi) chi(gamma)`.
    pub fn fourier(&self, model: &FiniteModel<'_>, gamma: &[Elem]) -> Complex64 {
        let m = model.exponent() as f64;
        self.masses
            .iter()
            .map(|(&k, &w)| {
                let phase = TAU * model.pairing(&model.dual_element(k), gamma) as f64 / m;
                Complex64::from_polar(w.to_f64().unwrap_or(0.0), phase)
            })
            .sum()
    }
}

/// Haar probability of a subgroup of the dual.
pub fn haar(subgroup: &[usize]) -> Measure {
    Measure::uniform(subgroup)
}

/// The closed form `[gamma in Ann(H)] t(gamma)` for the transform of the
/// translated Haar measure `t_* lambda_H`.
pub fn translated_haar_transform(model: &FiniteModel<'_>, ann_h: &[usize], t: usize, gamma: &[Elem]) -> Complex64 {
    if ann_h.binary_search(&model.vector_index(gamma)).is_err() {
        return Complex64::zero();
    }
    let phase = TAU * model.pairing(&model.dual_element(t), gamma) as f64 / model.exponent() as f64;
    Complex64::from_polar(1.0, phase)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dual::model::MODEL_CAP;
    use crate::finite_ring::FiniteRing;

    #[test]
    fn haar_transforms() {
        let q = FiniteRing::integers_mod(4).unwrap();
        let m = FiniteModel::build(&q, 2, MODEL_CAP).unwrap();
        let all: Vec<usize> = (0..m.size()).collect();
        assert!(haar(&all).fourier(&m, &[q.one(), 0]).norm() < 1e-9);
        assert!((Measure::point(0).fourier(&m, &[q.one(), q.one()]) - 1.0).norm() < 1e-9);
        let two = q.ideal(&[q.from_int(2)]);
        let h = m.annihilator_of_ideal(&two);
        let mu = haar(&h);
        assert!((mu.fourier(&m, &[q.from_int(2), 0]) - 1.0).norm() < 1e-9);
        assert!(mu.fourier(&m, &[q.one(), 0]).norm() < 1e-9);
    }

    #[test]
    fn convolution() {
        let q = FiniteRing::integers_mod(6).unwrap();
        let m = FiniteModel::build(&q, 1, MODEL_CAP).unwrap();
        assert_eq!(Measure::point(2).convolve(&m, &Measure::point(5)), Measure::point(1));
        let h1 = m.annihilator_of_ideal(&q.ideal(&[q.from_int(2)]));
        let h2 = m.annihilator_of_ideal(&q.ideal(&[q.from_int(3)]));
        let conv = haar(&h1).convolve(&m, &haar(&h2));
        let sum: Vec<usize> = (0..m.size()).collect();
        assert_eq!(conv, haar(&sum));
        assert!(conv.has_atoms());
    }
}
