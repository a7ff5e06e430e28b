//! Character triples `(I, K, O)` and the traces they induce on `EL_d(R)`.
//!
//! The trace vanishes off `SLtil_d(I)`. On `SLtil_d(I)` it factors through
//! the finite subquotient `A` of the model `Q = R/K` and equals the orbit
//! average of normalized characters.

use std::sync::Arc;

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::ball::IntMat;
use super::dixon::ClassFunction;
use super::group::GElem;
use super::subquotient::{subquotient_a, Subquotient, VALUE_TOL};
use crate::depth::{compute_depth, finite_index_test, DepthBounds, DepthStatus};
use crate::error::{Error, Result};
use crate::finite_ring::FiniteRing;
use crate::ideal::Ideal;
use crate::matgroup::{sltil_level, FMat, RMatrix};
use crate::ring::Ring;

pub const PSD_TOL: f64 = 1e-8;
pub const CONJUGATION_TOL: f64 = 1e-12;
pub const SAMPLE_CAP: usize = 64;
const EVAL_TOL: f64 = 1e-9;

/// Values of a character of `A`, each attached to a representative matrix
/// over `R` whose reduction lies in the class.
#[derive(Clone, Debug)]
pub struct ClassValues {
    pub entries: Vec<(RMatrix, Complex64)>,
}

#[derive(Clone, Debug)]
pub struct CharacterTriple {
    pub ring: Ring,
    pub d: usize,
    pub level: Ideal,
    pub kernel: Ideal,
    pub orbit: Vec<ClassValues>,
}

impl CharacterTriple {
    /// A triple whose orbit consists of the listed rows of the model's table.
    pub fn from_table(level: &Ideal, kernel: &Ideal, model: &Subquotient, characters: &[usize]) -> Result<CharacterTriple> {
        let ring = kernel.ring().clone();
        let q = model.ring();
        let table = model.table();
        let mut orbit = Vec::new();
        for &k in characters {
            let chi = table.characters.get(k).ok_or_else(|| Error::pre("character index out of range"))?;
            let mut entries = Vec::new();
            for (cl, v) in table.classes.iter().zip(&chi.values) {
                entries.push((lift(&ring, q, model.group().rep(cl[0]))?, *v));
            }
            orbit.push(ClassValues { entries });
        }
        Ok(CharacterTriple { ring, d: model.dim(), level: level.clone(), kernel: kernel.clone(), orbit })
    }
}

fn lift(ring: &Ring, q: &FiniteRing, g: &FMat) -> Result<RMatrix> {
    let rows = g.rows().iter().map(|r| r.iter().map(|&x| q.lift(x).clone()).collect()).collect();
    RMatrix::from_rows(ring, rows)
}

/// The finite model `Q = R/K` with `A = (SLtil_d(Ī) ∩ EL_d(Q)) / 1`, or
/// `None` when `K` has infinite index.
pub fn triple_model(t: &CharacterTriple, cap: usize, seed: u64) -> Result<Option<Subquotient>> {
    if !t.kernel.is_subset(&t.level)? {
        return Err(Error::pre("kernel ideal must lie in the level ideal"));
    }
    if !finite_index_test(&t.kernel)?.is_finite() {
        return Ok(None);
    }
    let q = Arc::new(FiniteRing::from_ideal(&t.kernel)?);
    let level = q.image(&t.level)?;
    let zero = q.zero_ideal();
    subquotient_a(q, t.d, &level, &zero, cap, seed).map(Some)
}

/// Class function on `A` described by the given class values.
pub fn resolve(model: &Subquotient, values: &ClassValues) -> Result<ClassFunction> {
    let q = model.ring();
    let mut out: Vec<Option<Complex64>> = vec![None; model.table().classes.len()];
    for (rep, v) in &values.entries {
        let rows = rep
            .rows()
            .iter()
            .map(|r| r.iter().map(|p| q.from_poly(p)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let g = FMat::from_rows(q, rows)?;
        let c = model
            .class_of_matrix(&g)
            .ok_or_else(|| Error::Validation("class representative is not in the subquotient".into()))?;
        match out[c] {
            Some(w) if (w - v).norm() > VALUE_TOL => {
                return Err(Error::Validation("inconsistent values on one class".into()));
            }
            _ => out[c] = Some(*v),
        }
    }
    let values = out
        .into_iter()
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::Validation("character misses a conjugacy class".into()))?;
    Ok(ClassFunction { values })
}

#[derive(Clone, Debug, PartialEq)]
pub struct TripleReport {
    pub computed_depth: String,
    pub depth_status: DepthStatus,
    /// `mfi(K) = I`.
    pub level_matches: bool,
    pub subquotient_order: Option<usize>,
    pub center_index: Option<usize>,
    /// Every member of `O` is an irreducible character of `A`.
    pub irreducible: Option<bool>,
    /// `O` is one orbit of the ambient action.
    pub single_orbit: Option<bool>,
    pub essential: Option<bool>,
    pub failures: Vec<String>,
    pub passed: bool,
}

pub fn validate_triple(t: &CharacterTriple, bounds: DepthBounds, cap: usize, seed: u64) -> Result<TripleReport> {
    let depth = compute_depth(&t.kernel, bounds)?;
    let level_matches = depth.ideal.equals(&t.level)?;
    let mut failures = Vec::new();
    if !level_matches {
        failures.push(format!("mfi(K) = {} differs from I = {}", depth.ideal.to_text()?, t.level.to_text()?));
    }
    if depth.status != DepthStatus::Certified {
        failures.push("depth of K is only bound-limited".into());
    }
    let model = if t.kernel.is_subset(&t.level)? {
        triple_model(t, cap, seed)?
    } else {
        failures.push("K is not contained in I".into());
        None
    };
    let (mut irreducible, mut single_orbit, mut essential) = (None, None, None);
    if let Some(m) = &model {
        let resolved: std::result::Result<Vec<ClassFunction>, Error> = t.orbit.iter().map(|cv| resolve(m, cv)).collect();
        match resolved {
            Err(e) => {
                failures.push(e.to_string());
                irreducible = Some(false);
                single_orbit = Some(false);
                essential = Some(false);
            }
            Ok(o) => {
                let irr = !o.is_empty() && o.iter().all(|f| m.irreducible_index(f).is_some());
                let closed = match o.first() {
                    None => false,
                    Some(first) => {
                        let orbit = m.orbit(first)?;
                        orbit.len() == o.len() && orbit.iter().all(|x| o.iter().any(|y| y.approx_eq(x, VALUE_TOL)))
                    }
                };
                let ess = m.is_essential(&o);
                if !irr {
                    failures.push("orbit contains a non-irreducible class function".into());
                }
                if !closed {
                    failures.push("O is not a single orbit of the ambient action".into());
                }
                if !ess {
                    failures.push("joint kernel of O is not inside the SLtil(K) image".into());
                }
                irreducible = Some(irr);
                single_orbit = Some(closed);
                essential = Some(ess);
            }
        }
    }
    let passed = level_matches
        && depth.status == DepthStatus::Certified
        && irreducible == Some(true)
        && single_orbit == Some(true)
        && essential == Some(true);
    Ok(TripleReport {
        computed_depth: depth.ideal.to_text()?,
        depth_status: depth.status,
        level_matches,
        subquotient_order: model.as_ref().map(|m| m.group().order()),
        center_index: model.as_ref().map(|m| m.center_index()),
        irreducible,
        single_orbit,
        essential,
        failures,
        passed,
    })
}

/// `φ = (1/|O|) Σ_{ψ∈O} ψ/ψ(1)` on `SLtil_d(I)`, extended by zero.
#[derive(Debug)]
pub struct InducedTrace {
    ring: Ring,
    d: usize,
    level: Ideal,
    kernel: Ideal,
    model: Option<Subquotient>,
    orbit: Vec<ClassFunction>,
    /// Generators of `I` and `K` when `R = Z`.
    integer_gens: Option<(i64, i64)>,
}

impl InducedTrace {
    pub fn new(t: &CharacterTriple, cap: usize, seed: u64) -> Result<InducedTrace> {
        let model = triple_model(t, cap, seed)?;
        let orbit = match &model {
            Some(m) => t.orbit.iter().map(|cv| resolve(m, cv)).collect::<Result<Vec<_>>>()?,
            None => Vec::new(),
        };
        if model.is_some() && orbit.is_empty() {
            return Err(Error::pre("the orbit is empty"));
        }
        let integer_gens = if t.ring.nvars() == 0 && t.ring.relations().is_empty() {
            let g = |i: &Ideal| -> Result<i64> {
                i.integer_part()?.to_i64().ok_or_else(|| Error::limit("ideal generator", i64::MAX as u64))
            };
            Some((g(&t.level)?, g(&t.kernel)?))
        } else {
            None
        };
        Ok(InducedTrace {
            ring: t.ring.clone(),
            d: t.d,
            level: t.level.clone(),
            kernel: t.kernel.clone(),
            model,
            orbit,
            integer_gens,
        })
    }

    pub fn model(&self) -> Option<&Subquotient> {
        self.model.as_ref()
    }

    pub fn orbit(&self) -> &[ClassFunction] {
        &self.orbit
    }

    pub fn level(&self) -> &Ideal {
        &self.level
    }

    pub fn kernel(&self) -> &Ideal {
        &self.kernel
    }

    /// Generator of `K` when `R = Z`.
    pub fn kernel_generator(&self) -> Option<i64> {
        self.integer_gens.map(|(_, k)| k)
    }

    pub fn level_generator(&self) -> Option<i64> {
        self.integer_gens.map(|(i, _)| i)
    }

    fn model_value(&self, g: &FMat) -> Result<Complex64> {
        let m = self.model.as_ref().ok_or_else(|| Error::pre("element lies outside the finite model"))?;
        let c = m
            .class_of_matrix(g)
            .ok_or_else(|| Error::pre("element lies outside the enumerated subquotient"))?;
        Ok(m.orbit_average(&self.orbit, c))
    }

    pub fn eval(&self, g: &RMatrix) -> Result<Complex64> {
        if g.dim() != self.d {
            return Err(Error::pre("dimension mismatch"));
        }
        if !sltil_level(&self.ring, g)?.is_subset(&self.level)? {
            return Ok(Complex64::new(0.0, 0.0));
        }
        let m = self.model.as_ref().ok_or_else(|| Error::pre("element lies outside the finite model"))?;
        let q = m.ring();
        let rows = g
            .rows()
            .iter()
            .map(|r| r.iter().map(|p| q.from_poly(p)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        self.model_value(&FMat::from_rows(q, rows)?)
    }

    /// Image in `A` of an integer matrix lying in `SLtil_d(I)`.
    pub fn image(&self, g: &IntMat) -> Result<Option<GElem>> {
        let (i, _) = self.integer_gens.ok_or_else(|| Error::pre("integer evaluation needs R = Z"))?;
        if !divides(i, g.sltil_level()) {
            return Ok(None);
        }
        let m = self.model.as_ref().ok_or_else(|| Error::pre("element lies outside the finite model"))?;
        Ok(m.group().element_of(&g.reduce(m.ring())))
    }

    /// Fast path for `R = Z`.
    pub fn eval_int(&self, g: &IntMat) -> Result<Complex64> {
        let (i, _) = self.integer_gens.ok_or_else(|| Error::pre("integer evaluation needs R = Z"))?;
        if g.dim() != self.d {
            return Err(Error::pre("dimension mismatch"));
        }
        if !divides(i, g.sltil_level()) {
            return Ok(Complex64::new(0.0, 0.0));
        }
        let m = self.model.as_ref().ok_or_else(|| Error::pre("element lies outside the finite model"))?;
        self.model_value(&g.reduce(m.ring()))
    }

    /// Elements of `SLtil_d(I)` whose image in `A` is central modulo `EL_d(K)`.
    pub fn is_virtually_central(&self, g: &IntMat) -> Result<bool> {
        let m = match &self.model {
            Some(m) => m,
            None => return Ok(false),
        };
        Ok(self.image(g)?.is_some_and(|a| m.is_central(a)))
    }
}

/// `(i) ⊇ (l)` in `Z`.
fn divides(i: i64, l: i64) -> bool {
    if i == 0 {
        l == 0
    } else {
        l % i == 0
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct AxiomReport {
    pub gram_min_eigenvalue: f64,
    pub positive_definite: bool,
    pub conjugation_defect: f64,
    pub conjugation_invariant: bool,
    pub identity_value: Complex64,
    pub normalized: bool,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.positive_definite && self.conjugation_invariant && self.normalized
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct TraceReport {
    pub sample_size: usize,
    pub trace: AxiomReport,
    pub square: AxiomReport,
    pub central_checked: usize,
    pub schur_defect: f64,
    pub schur: bool,
    /// Generator of the ideal spanned by levels of sampled `φ = 1` elements.
    pub kernel_generator: i64,
    pub kernel_contained: bool,
    pub passed: bool,
}

/// Minimum eigenvalue of a Hermitian matrix through its real symmetric form.
pub fn hermitian_min_eigenvalue(h: &[Vec<Complex64>]) -> f64 {
    let n = h.len();
    let m = DMatrix::<f64>::from_fn(2 * n, 2 * n, |r, c| {
        let z = h[r % n][c % n];
        match (r < n, c < n) {
            (true, true) | (false, false) => z.re,
            (true, false) => -z.im,
            (false, true) => z.im,
        }
    });
    SymmetricEigen::new(m).eigenvalues.iter().copied().fold(f64::INFINITY, f64::min)
}

fn axioms(phi: &dyn Fn(&IntMat) -> Result<Complex64>, sample: &[IntMat]) -> Result<AxiomReport> {
    let d = sample.first().map_or(0, IntMat::dim);
    let inverses = sample.iter().map(IntMat::inverse).collect::<Result<Vec<_>>>()?;
    let mut gram = vec![vec![Complex64::new(0.0, 0.0); sample.len()]; sample.len()];
    for (i, g) in sample.iter().enumerate() {
        for (j, hinv) in inverses.iter().enumerate() {
            gram[i][j] = phi(&hinv.mul(g)?)?;
        }
    }
    let gram_min_eigenvalue = hermitian_min_eigenvalue(&gram);
    let mut conjugation_defect: f64 = 0.0;
    for g in sample {
        let base = phi(g)?;
        for h in sample {
            conjugation_defect = conjugation_defect.max((phi(&g.conjugate(h)?)? - base).norm());
        }
    }
    let identity_value = phi(&IntMat::identity(d))?;
    Ok(AxiomReport {
        gram_min_eigenvalue,
        positive_definite: gram_min_eigenvalue >= -PSD_TOL,
        conjugation_defect,
        conjugation_invariant: conjugation_defect <= CONJUGATION_TOL,
        identity_value,
        normalized: (identity_value - 1.0).norm() <= CONJUGATION_TOL,
    })
}

/// Trace axioms for `φ` and `|φ|^2` on a sample, Schur multiplicativity on
/// the given central elements, and containment of the sampled kernel ideal
/// in `(k)`.
pub fn trace_checks(
    phi: &dyn Fn(&IntMat) -> Result<Complex64>,
    sample: &[IntMat],
    central: &[IntMat],
    k: i64,
) -> Result<TraceReport> {
    if sample.is_empty() || sample.len() > SAMPLE_CAP {
        return Err(Error::pre(format!("sample size must be between 1 and {SAMPLE_CAP}")));
    }
    let trace = axioms(phi, sample)?;
    let square = |g: &IntMat| -> Result<Complex64> { Ok(Complex64::new(phi(g)?.norm_sqr(), 0.0)) };
    let square = axioms(&square, sample)?;
    let mut schur_defect: f64 = 0.0;
    for z in central {
        let pz = phi(z)?;
        for g in sample {
            schur_defect = schur_defect.max((phi(&g.mul(z)?)? - phi(g)? * pz).norm());
        }
    }
    let mut kernel_generator = 0i64;
    for g in sample {
        if (phi(g)? - 1.0).norm() <= EVAL_TOL {
            kernel_generator = kernel_generator.gcd(&g.sl_level());
        }
    }
    let kernel_contained = divides(k, kernel_generator);
    let schur = schur_defect <= EVAL_TOL;
    let passed = trace.passed() && square.passed() && schur && kernel_contained;
    Ok(TraceReport {
        sample_size: sample.len(),
        trace,
        square,
        central_checked: central.len(),
        schur_defect,
        schur,
        kernel_generator,
        kernel_contained,
        passed,
    })
}

/// Up to `n` non-identity ball elements that are central in the model, in ball order.
pub fn central_sample(trace: &InducedTrace, ball: &[IntMat], n: usize) -> Result<Vec<IntMat>> {
    let mut out = Vec::new();
    for g in ball {
        if out.len() == n {
            break;
        }
        if !g.is_identity() && trace.is_virtually_central(g)? {
            out.push(g.clone());
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq)]
pub struct RoundTrip {
    pub ball_size: usize,
    /// Generator of the ideal spanned by levels of ball elements with `φ = 1`.
    pub kernel_generator: i64,
    pub kernel_matches: bool,
    /// Generator of the smallest `J` with `φ` vanishing off `SLtil(J)` on the ball.
    pub level_generator: i64,
    pub level_matches: bool,
    /// `φ = 1` on every ball element of the congruence subgroup `SL_d(Z, K)`.
    pub congruence_constant: bool,
    pub classes_hit: usize,
    pub classes_total: usize,
    /// Table rows found in the restriction of `φ` to `A`.
    pub recovered: Vec<usize>,
    pub expected: Vec<usize>,
    pub orbit_matches: bool,
    pub passed: bool,
}

/// Re-extracts the kernel ideal, level ideal and orbit from values of `φ`
/// on a ball over `Z`.
pub fn round_trip(trace: &InducedTrace, ball: &[IntMat]) -> Result<RoundTrip> {
    let (i, k) = trace.integer_gens.ok_or_else(|| Error::pre("round trip needs R = Z"))?;
    let m = trace.model.as_ref().ok_or_else(|| Error::pre("round trip needs a finite model"))?;
    let table = m.table();
    let mut kernel_generator = 0i64;
    let mut level_generator = 0i64;
    let mut congruence_constant = true;
    let mut restricted: Vec<Option<Complex64>> = vec![None; table.classes.len()];
    for g in ball {
        let v = trace.eval_int(g)?;
        if (v - 1.0).norm() <= EVAL_TOL {
            kernel_generator = kernel_generator.gcd(&g.sl_level());
        }
        if v.norm() > EVAL_TOL {
            level_generator = level_generator.gcd(&g.sltil_level());
        }
        if divides(k, g.sl_level()) && (v - 1.0).norm() > CONJUGATION_TOL {
            congruence_constant = false;
        }
        if let Some(a) = trace.image(g)? {
            restricted[table.class_of[a as usize]].get_or_insert(v);
        }
    }
    let classes_hit = restricted.iter().filter(|v| v.is_some()).count();
    let mut expected: Vec<usize> = trace.orbit.iter().filter_map(|f| m.irreducible_index(f)).collect();
    expected.sort_unstable();
    let recovered = if classes_hit == restricted.len() {
        let f = ClassFunction { values: restricted.iter().map(|v| v.expect("hit")).collect() };
        table.decompose(&f, VALUE_TOL).into_iter().map(|(c, _)| c).collect()
    } else {
        Vec::new()
    };
    let kernel_matches = kernel_generator.abs() == k.abs();
    let level_matches = level_generator.abs() == i.abs();
    let orbit_matches = !recovered.is_empty() && recovered == expected;
    Ok(RoundTrip {
        ball_size: ball.len(),
        kernel_generator,
        kernel_matches,
        level_generator,
        level_matches,
        congruence_constant,
        classes_hit,
        classes_total: restricted.len(),
        recovered,
        expected,
        orbit_matches,
        passed: kernel_matches && level_matches && congruence_constant && orbit_matches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::character::ball::{sample_ball, word_ball, BALL_CAP};
    use crate::matgroup::ELEMENT_CAP;

    fn z_ideal(n: i64) -> Ideal {
        let z = Ring::integers();
        Ideal::new(&z, vec![z.constant(n)]).unwrap()
    }

    fn deg7_triple() -> (CharacterTriple, Subquotient) {
        let probe = CharacterTriple { ring: Ring::integers(), d: 3, level: z_ideal(1), kernel: z_ideal(2), orbit: vec![] };
        let m = triple_model(&probe, ELEMENT_CAP, 1).unwrap().unwrap();
        let seven = m.table().degrees().iter().position(|&d| d == 7).unwrap();
        (CharacterTriple::from_table(&z_ideal(1), &z_ideal(2), &m, &[seven]).unwrap(), m)
    }

    #[test]
    fn deg7_triple_validates_and_evaluates() {
        let (t, m) = deg7_triple();
        let report = validate_triple(&t, DepthBounds::default(), ELEMENT_CAP, 1).unwrap();
        assert!(report.passed, "{report:?}");
        assert_eq!(report.center_index, Some(168));
        let phi = InducedTrace::new(&t, ELEMENT_CAP, 1).unwrap();
        // E_12(1) reduces to a transvection, on which the degree-7 character is -1.
        let e12 = IntMat::elementary(3, 0, 1, 1);
        assert!((phi.eval_int(&e12).unwrap() - Complex64::new(-1.0 / 7.0, 0.0)).norm() < 1e-12);
        let z = Ring::integers();
        let r = e12.to_rmatrix(&z).unwrap();
        assert!((phi.eval(&r).unwrap() - phi.eval_int(&e12).unwrap()).norm() < 1e-12);
        assert_eq!(m.group().order(), 168);
    }

    #[test]
    fn mismatched_level_and_open_orbit_fail() {
        let (mut t, _) = deg7_triple();
        let zx = Ring::with_names(1, &["x"]);
        let bad = CharacterTriple {
            ring: zx.clone(),
            d: 3,
            level: Ideal::parse(&zx, &["x"]).unwrap(),
            kernel: Ideal::parse(&zx, &["2"]).unwrap(),
            orbit: vec![],
        };
        let r = validate_triple(&bad, DepthBounds::default(), ELEMENT_CAP, 1).unwrap();
        assert!(!r.level_matches && !r.passed);
        assert_eq!(r.computed_depth, "(2)");
        // The two degree-3 characters are swapped by no inner automorphism,
        // so a pair of them is not a single orbit.
        let m = triple_model(&t, ELEMENT_CAP, 1).unwrap().unwrap();
        let threes: Vec<usize> = (0..6).filter(|&c| m.table().degrees()[c] == 3).collect();
        t = CharacterTriple::from_table(&z_ideal(1), &z_ideal(2), &m, &threes).unwrap();
        let r = validate_triple(&t, DepthBounds::default(), ELEMENT_CAP, 1).unwrap();
        assert_eq!(r.single_orbit, Some(false));
        assert!(!r.passed);
    }

    #[test]
    fn trivial_triple_is_constant() {
        let t = CharacterTriple { ring: Ring::integers(), d: 3, level: z_ideal(1), kernel: z_ideal(1), orbit: vec![] };
        let m = triple_model(&t, ELEMENT_CAP, 1).unwrap().unwrap();
        assert_eq!(m.group().order(), 1);
        let t = CharacterTriple::from_table(&z_ideal(1), &z_ideal(1), &m, &[0]).unwrap();
        let phi = InducedTrace::new(&t, ELEMENT_CAP, 1).unwrap();
        let ball = word_ball(3, 2, BALL_CAP).unwrap();
        assert!(ball.iter().all(|g| phi.eval_int(g).unwrap() == Complex64::new(1.0, 0.0)));
        let f = |g: &IntMat| phi.eval_int(g);
        let report = trace_checks(&f, &sample_ball(&ball, 20, 3), &[], 1).unwrap();
        assert!(report.passed);
    }

    #[test]
    fn zero_level_vanishes_on_elementaries() {
        let t = CharacterTriple { ring: Ring::integers(), d: 3, level: z_ideal(0), kernel: z_ideal(0), orbit: vec![] };
        let phi = InducedTrace::new(&t, ELEMENT_CAP, 1).unwrap();
        assert!(phi.model().is_none());
        assert_eq!(phi.eval_int(&IntMat::elementary(3, 0, 1, 1)).unwrap(), Complex64::new(0.0, 0.0));
        assert!(phi.eval_int(&IntMat::identity(3)).is_err());
    }

    #[test]
    fn corrupted_trace_is_not_positive_definite() {
        let (t, _) = deg7_triple();
        let phi = InducedTrace::new(&t, ELEMENT_CAP, 1).unwrap();
        let ball = word_ball(3, 3, BALL_CAP).unwrap();
        let sample = sample_ball(&ball, 24, 11);
        let good = |g: &IntMat| phi.eval_int(g);
        assert!(trace_checks(&good, &sample, &[], 2).unwrap().trace.positive_definite);
        let target = sample.iter().find(|g| phi.eval_int(g).unwrap().norm() > 0.1).unwrap().clone();
        let bad = |g: &IntMat| {
            let v = phi.eval_int(g)?;
            Ok(if *g == target || *g == target.inverse()? { -v } else { v })
        };
        let flipped = |g: &IntMat| if g.is_identity() { Ok(Complex64::new(-1.0, 0.0)) } else { good(g) };
        assert!(!trace_checks(&flipped, &sample, &[], 2).unwrap().trace.positive_definite);
        let report = trace_checks(&bad, &sample, &[], 2).unwrap();
        assert!(!report.passed);
    }
}
