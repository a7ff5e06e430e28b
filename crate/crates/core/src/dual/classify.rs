//! Invariant ergodic measures on the dual of `Q^d`: the parametric family
//! `mu_{I, omega}` against the orbit decomposition.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::error::Result;

use super::measure::Measure;
use super::model::FiniteModel;

/// One parametric measure `mu_{I, omega}` and its verification flags.
#[derive(Clone, Debug)]
pub struct ParametricMeasure {
    pub ideal: String,
    pub annihilator_order: usize,
    pub orbit_cosets: usize,
    pub measure: Measure,
    pub invariant: bool,
    pub ergodic: bool,
    /// Index of an earlier entry expanding to the same measure.
    pub duplicate_of: Option<usize>,
    /// Whether the ideal is the whole ring, the only depth ideal of a finite
    /// ring.
    pub depth_parameter: bool,
}

#[derive(Clone, Debug)]
pub struct Classification {
    pub parametric: Vec<ParametricMeasure>,
    pub orbits: Vec<Vec<usize>>,
    pub orbit_measures: Vec<Measure>,
    /// Ergodic measures from the parametric list, deduplicated.
    pub ergodic_parametric: usize,
    pub collisions: usize,
    pub bijection: bool,
}

impl Classification {
    pub fn orbit_sizes(&self) -> Vec<usize> {
        let mut s: Vec<usize> = self.orbits.iter().map(|o| o.len()).collect();
        s.sort_unstable();
        s
    }
}

pub fn classify_measures(model: &FiniteModel<'_>) -> Result<Classification> {
    let q = model.ring();
    let orbits = model.dual_orbits();
    let mut orbit_of = vec![0usize; model.size()];
    for (n, o) in orbits.iter().enumerate() {
        for &k in o {
            orbit_of[k] = n;
        }
    }
    let orbit_measures: Vec<Measure> = orbits.iter().map(|o| Measure::uniform(o)).collect();

    let mut parametric: Vec<ParametricMeasure> = Vec::new();
    let mut first: BTreeMap<Measure, usize> = BTreeMap::new();
    for ideal in q.all_ideals() {
        let k_i = model.annihilator_of_ideal(&ideal);
        let mut coset_of = vec![usize::MAX; model.size()];
        let mut cosets: Vec<Vec<usize>> = Vec::new();
        for x in 0..model.size() {
            if coset_of[x] == usize::MAX {
                let c: Vec<usize> = k_i.iter().map(|&h| model.dual_add(x, h)).collect();
                for &y in &c {
                    coset_of[y] = cosets.len();
                }
                cosets.push(c);
            }
        }
        let mut seen = vec![false; cosets.len()];
        for start in 0..cosets.len() {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut omega = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(c) = queue.pop_front() {
                for p in model.dual_permutations() {
                    let image = coset_of[p[cosets[c][0]]];
                    if !seen[image] {
                        seen[image] = true;
                        omega.push(image);
                        queue.push_back(image);
                    }
                }
            }
            let support: Vec<usize> = omega.iter().flat_map(|&c| cosets[c].iter().copied()).collect();
            let measure = Measure::uniform(&support);
            let touched: BTreeSet<usize> = support.iter().map(|&k| orbit_of[k]).collect();
            let index = parametric.len();
            let duplicate_of = first.get(&measure).copied();
            if duplicate_of.is_none() {
                first.insert(measure.clone(), index);
            }
            parametric.push(ParametricMeasure {
                ideal: ideal.display(q),
                annihilator_order: k_i.len(),
                orbit_cosets: omega.len(),
                invariant: measure.is_invariant(model),
                ergodic: touched.len() == 1,
                measure,
                duplicate_of,
                depth_parameter: ideal.is_whole(q),
            });
        }
    }

    let ergodic: BTreeSet<&Measure> =
        parametric.iter().filter(|p| p.ergodic && p.duplicate_of.is_none()).map(|p| &p.measure).collect();
    let from_orbits: BTreeSet<&Measure> = orbit_measures.iter().collect();
    let depth_list: BTreeSet<&Measure> = parametric.iter().filter(|p| p.depth_parameter).map(|p| &p.measure).collect();
    let bijection = ergodic == from_orbits
        && depth_list == from_orbits
        && from_orbits.len() == orbits.len()
        && parametric.iter().all(|p| p.invariant);
    Ok(Classification {
        ergodic_parametric: ergodic.len(),
        collisions: parametric.iter().filter(|p| p.duplicate_of.is_some()).count(),
        parametric,
        orbits,
        orbit_measures,
        bijection,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dual::model::MODEL_CAP;
    use crate::finite_ring::FiniteRing;

    #[test]
    fn z4_squared() {
        let q = FiniteRing::integers_mod(4).unwrap();
        let m = FiniteModel::build(&q, 2, MODEL_CAP).unwrap();
        let c = classify_measures(&m).unwrap();
        assert_eq!(c.orbit_sizes(), vec![1, 3, 12]);
        assert!(c.bijection);
        assert_eq!(c.ergodic_parametric, 3);
        assert!(c.collisions > 0);
    }

    #[test]
    fn f2_squared() {
        let q = FiniteRing::integers_mod(2).unwrap();
        let m = FiniteModel::build(&q, 2, MODEL_CAP).unwrap();
        let c = classify_measures(&m).unwrap();
        assert_eq!(c.orbit_sizes(), vec![1, 3]);
        assert!(c.bijection);
    }
}
