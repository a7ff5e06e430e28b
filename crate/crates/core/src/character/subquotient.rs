//! The subquotient `A = (SLtil_d(I) ∩ EL_d(Q)) / EL_d(K)` of a finite model
//! `Q`, its character table and the action of `EL_d(Q)` on its characters.

use std::sync::Arc;

use num_complex::Complex64;

use super::dixon::{character_table, CharacterTable, ClassFunction};
use super::group::{FiniteGroup, GElem};
use crate::error::{Error, Result};
use crate::finite_ring::{FiniteRing, QIdeal};
use crate::matgroup::{el_generators, el_subgroup, generate_subgroup, in_sltil, FMat};

/// Largest character orbit followed under the ambient action.
pub const ORBIT_CAP: usize = 10_000;
pub const VALUE_TOL: f64 = 1e-6;

pub struct Subquotient {
    q: Arc<FiniteRing>,
    d: usize,
    level: QIdeal,
    kernel: QIdeal,
    group: FiniteGroup,
    ambient: Vec<FMat>,
    center_index: usize,
    table: CharacterTable,
    /// For each ambient generator `g`, class `c` maps to the class of `g c g^-1`.
    class_perms: Vec<Vec<usize>>,
    /// Elements of `A` fixed by every ambient conjugation.
    central: Vec<bool>,
}

impl std::fmt::Debug for Subquotient {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Subquotient({:?}, order {})", self.q, self.group.order())
    }
}

/// Builds `A` for ideals `kernel ⊆ level` of `Q`.
pub fn subquotient_a(q: Arc<FiniteRing>, d: usize, level: &QIdeal, kernel: &QIdeal, cap: usize, seed: u64) -> Result<Subquotient> {
    if !kernel.is_subset(level) {
        return Err(Error::pre("kernel ideal must lie in the level ideal"));
    }
    let ambient = el_generators(&q, d);
    let el = generate_subgroup(&q, d, &ambient, cap)?;
    let upper = el.filter(|g| in_sltil(&q, g, level));
    let lower = el_subgroup(&q, d, kernel, cap)?;
    let group = FiniteGroup::quotient(q.clone(), &upper, &lower)?;
    let table = character_table(&group, seed)?;
    let mut class_perms = Vec::with_capacity(ambient.len());
    let mut central = vec![true; group.order()];
    for g in &ambient {
        let mut perm = Vec::with_capacity(table.classes.len());
        for cl in &table.classes {
            perm.push(table.class_of[group.conjugate_by(cl[0], g)? as usize]);
        }
        class_perms.push(perm);
        for (a, c) in central.iter_mut().enumerate() {
            if *c && group.conjugate_by(a as GElem, g)? != a as GElem {
                *c = false;
            }
        }
    }
    let fixed = central.iter().filter(|&&c| c).count();
    Ok(Subquotient {
        q,
        d,
        level: level.clone(),
        kernel: kernel.clone(),
        center_index: group.order() / fixed,
        group,
        ambient,
        table,
        class_perms,
        central,
    })
}

impl Subquotient {
    pub fn ring(&self) -> &Arc<FiniteRing> {
        &self.q
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn level(&self) -> &QIdeal {
        &self.level
    }

    pub fn kernel(&self) -> &QIdeal {
        &self.kernel
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn table(&self) -> &CharacterTable {
        &self.table
    }

    pub fn ambient_generators(&self) -> &[FMat] {
        &self.ambient
    }

    /// `[A : A ∩ Z(EL_d(Q)/EL_d(K))]`.
    pub fn center_index(&self) -> usize {
        self.center_index
    }

    pub fn is_central(&self, a: GElem) -> bool {
        self.central[a as usize]
    }

    pub fn class_of_matrix(&self, g: &FMat) -> Option<usize> {
        self.group.element_of(g).map(|a| self.table.class_of[a as usize])
    }

    /// `ψ ↦ ψ(g^-1 · g)` for the ambient generator `g`.
    pub fn act(&self, generator: usize, f: &ClassFunction) -> ClassFunction {
        let perm = &self.class_perms[generator];
        ClassFunction { values: perm.iter().map(|&c| f.values[c]).collect() }
    }

    pub fn orbit(&self, f: &ClassFunction) -> Result<Vec<ClassFunction>> {
        let mut orbit = vec![f.clone()];
        let mut k = 0;
        while k < orbit.len() {
            for g in 0..self.class_perms.len() {
                let h = self.act(g, &orbit[k]);
                if !orbit.iter().any(|o| o.approx_eq(&h, VALUE_TOL)) {
                    orbit.push(h);
                    if orbit.len() > ORBIT_CAP {
                        return Err(Error::limit("character orbit", ORBIT_CAP));
                    }
                }
            }
            k += 1;
        }
        Ok(orbit)
    }

    pub fn irreducible_index(&self, f: &ClassFunction) -> Option<usize> {
        self.table.characters.iter().position(|chi| chi.approx_eq(f, VALUE_TOL))
    }

    /// Elements on which every character of the orbit takes its degree.
    pub fn joint_kernel(&self, orbit: &[ClassFunction]) -> Vec<GElem> {
        (0..self.group.order() as GElem)
            .filter(|&a| {
                let c = self.table.class_of[a as usize];
                orbit.iter().all(|psi| (psi.values[c] - psi.values[0]).norm() <= VALUE_TOL)
            })
            .collect()
    }

    /// Image of `SLtil_d(K)` in `A`.
    pub fn kernel_image(&self) -> Vec<GElem> {
        (0..self.group.order() as GElem)
            .filter(|&a| in_sltil(&self.q, self.group.rep(a), &self.kernel))
            .collect()
    }

    /// Orbit data is essential when its joint kernel lies in the `SLtil_d(K)` image.
    pub fn is_essential(&self, orbit: &[ClassFunction]) -> bool {
        let image = self.kernel_image();
        self.joint_kernel(orbit).iter().all(|a| image.binary_search(a).is_ok())
    }

    /// `(1/|O|) Σ ψ(c)/ψ(1)` at class `c`.
    pub fn orbit_average(&self, orbit: &[ClassFunction], class: usize) -> Complex64 {
        let s: Complex64 = orbit.iter().map(|psi| psi.values[class] / psi.values[0]).sum();
        s / orbit.len() as f64
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matgroup::ELEMENT_CAP;

    #[test]
    fn trivial_and_full_models() {
        let f2 = Arc::new(FiniteRing::integers_mod(2).unwrap());
        let zero = f2.zero_ideal();
        let a = subquotient_a(f2.clone(), 3, &zero, &zero, ELEMENT_CAP, 1).unwrap();
        assert_eq!((a.group().order(), a.center_index()), (1, 1));
        let full = subquotient_a(f2.clone(), 3, &f2.whole(), &zero, ELEMENT_CAP, 1).unwrap();
        assert_eq!((full.group().order(), full.center_index()), (168, 168));
        let top = subquotient_a(f2.clone(), 3, &f2.whole(), &f2.whole(), ELEMENT_CAP, 1).unwrap();
        assert_eq!(top.group().order(), 1);
    }

    #[test]
    fn congruence_kernel_mod_four() {
        let q = Arc::new(FiniteRing::integers_mod(4).unwrap());
        let two = q.ideal(&[q.from_int(2)]);
        let a = subquotient_a(q.clone(), 2, &two, &q.zero_ideal(), ELEMENT_CAP, 3).unwrap();
        assert_eq!(a.group().order(), 8);
        assert!(a.group().is_abelian());
        let mut sizes = Vec::new();
        let mut seen: Vec<ClassFunction> = Vec::new();
        let mut essential = 0;
        for chi in &a.table().characters {
            if seen.iter().any(|s| s.approx_eq(chi, VALUE_TOL)) {
                continue;
            }
            let orbit = a.orbit(chi).unwrap();
            essential += a.is_essential(&orbit) as usize;
            sizes.push(orbit.len());
            seen.extend(orbit);
        }
        sizes.sort();
        assert_eq!(sizes.iter().sum::<usize>(), 8);
        assert_eq!(sizes, vec![1, 1, 3, 3]);
        assert!(essential >= 1);
        let wide = subquotient_a(q.clone(), 3, &two, &q.zero_ideal(), ELEMENT_CAP, 3).unwrap_err();
        assert!(wide.is_resource());
    }
}
