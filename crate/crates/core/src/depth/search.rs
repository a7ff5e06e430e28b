//! Depth ideals: membership in the largest finite-index extension `mfi(I)`,
//! bounded searches for new members and certified closure.
//!
//! `r ∈ mfi(I)` exactly when `(I + (r))/I ≅ R/(I : r)` is finite. Candidates
//! for `mfi(I)` come from two sources: single terms and short binomials over
//! normal monomials, and the colon ideals `I : L_t` where
//! `L_t = (t!, x_i^{t+t!} - x_i^t)`. Each `L_t` has finite index and the
//! chain `L_1 ⊇ L_2 ⊇ ...` is eventually inside every finite-index ideal,
//! so `I : L_t` increases to `mfi(I)`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::finite::finite_index_test;
use crate::error::Result;
use crate::ideal::Ideal;
use crate::lattice::factor;
use crate::ring::{Monomial, Polynomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DepthBounds {
    /// Maximal degree of candidate monomials, and length of the colon chain.
    pub degree: u32,
    /// Coefficients of candidates range over `1..=coeff`.
    pub coeff: u32,
}

impl Default for DepthBounds {
    fn default() -> Self {
        DepthBounds { degree: 4, coeff: 6 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DepthStatus {
    Certified,
    BoundLimited,
}

/// Why a candidate ideal is known to equal its own `mfi`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DepthCertificate {
    /// `R/I` is finite, so `mfi(I) = R`.
    FiniteQuotient,
    /// The ideal is the whole ring.
    UnitIdeal,
    /// Every strong basis element is monic, so `R/I` is a free abelian group
    /// and has no nonzero finite ideal.
    FreeQuotient,
    /// `I = (p)` with `p` prime and at least one variable: `R/I` is a
    /// polynomial ring over `F_p` with no relations, an infinite domain.
    PrimeField { prime: BigInt },
}

#[derive(Clone, Debug)]
pub struct DepthResult {
    pub ideal: Ideal,
    pub status: DepthStatus,
    pub certificate: Option<DepthCertificate>,
    /// Elements adjoined during the closure, in order.
    pub witnesses: Vec<Polynomial>,
}

#[derive(Clone, Debug)]
pub enum DepthVerdict {
    CertifiedYes(DepthCertificate),
    CertifiedNo { witness: Polynomial },
    BoundedYes,
}

/// `r ∈ mfi(I)`: the colon `I : (I + (r))` has finite index.
pub fn depth_membership(r: &Polynomial, ideal: &Ideal) -> Result<bool> {
    let colon = ideal.quotient_element(r)?;
    Ok(finite_index_test(&colon)?.is_finite())
}

/// Monomials of degree at most `deg` that are not reducible to zero with a
/// monic basis element, ordered by degree then term order.
fn normal_monomials(ideal: &Ideal, deg: u32) -> Result<Vec<Monomial>> {
    let ring = ideal.ring();
    let k = ring.nvars();
    let gb = ideal.gb()?;
    let mut all = vec![Monomial::one(k)];
    let mut frontier = all.clone();
    for _ in 0..deg {
        let mut next = Vec::new();
        for m in &frontier {
            let last = m.0.iter().rposition(|&e| e > 0).unwrap_or(0);
            for i in last..k {
                next.push(m.mul(&Monomial::var(k, i, 1)));
            }
        }
        all.extend(next.iter().cloned());
        frontier = next;
    }
    let order = ring.order();
    all.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| order.cmp(a, b)));
    all.dedup();
    Ok(all.into_iter().filter(|m| gb.lc_ideal_at(m).is_none_or(|a| !a.is_one())).collect())
}

fn factorial(t: u32) -> u64 {
    (1..=u64::from(t)).product()
}

/// Generators of `I : L_t`, skipping any `t` whose computation exceeds limits.
fn chain_candidates(ideal: &Ideal, bounds: DepthBounds) -> Vec<Polynomial> {
    let ring = ideal.ring();
    let mut out = Vec::new();
    for t in 2..=bounds.degree.min(4) {
        let f = factorial(t);
        let e_lo = t;
        let e_hi = t + f as u32;
        if e_hi > ring.limits().max_degree / 2 {
            break;
        }
        let mut gens = vec![ring.constant(f)];
        for i in 0..ring.nvars() {
            let x = ring.var(i);
            gens.push(x.pow(e_hi).sub(&x.pow(e_lo)).expect("same ring"));
        }
        let Ok(l) = Ideal::new(ring, gens) else { continue };
        if let Ok(c) = ideal.quotient(&l) {
            if let Ok(gb) = c.gb() {
                out.extend(gb.basis().iter().cloned());
            }
        }
    }
    out
}

fn local_candidates(ideal: &Ideal, bounds: DepthBounds) -> Result<Vec<Polynomial>> {
    let ring = ideal.ring();
    let monos = normal_monomials(ideal, bounds.degree)?;
    let mut out = Vec::new();
    for m in &monos {
        for c in 1..=bounds.coeff {
            out.push(Polynomial::term(ring.nvars(), ring.order(), m.clone(), BigInt::from(c)));
        }
    }
    let small: Vec<&Monomial> = monos.iter().filter(|m| m.degree() <= 2).collect();
    for (a, m1) in small.iter().enumerate() {
        for m2 in &small[..a] {
            for c in 1..=bounds.coeff as i64 {
                for s in [c, -c] {
                    out.push(Polynomial::from_terms(
                        ring.nvars(),
                        ring.order(),
                        vec![((*m1).clone(), BigInt::one()), ((*m2).clone(), BigInt::from(s))],
                    ));
                }
            }
        }
    }
    Ok(out)
}

fn candidates(ideal: &Ideal, bounds: DepthBounds) -> Result<Vec<Polynomial>> {
    let mut out = chain_candidates(ideal, bounds);
    out.extend(local_candidates(ideal, bounds)?);
    Ok(out)
}

/// A proof that `I` is a depth ideal, when one of the known sufficient
/// conditions applies.
pub fn depth_certificate(ideal: &Ideal) -> Result<Option<DepthCertificate>> {
    let gb = ideal.gb()?;
    if gb.is_unit() {
        return Ok(Some(DepthCertificate::UnitIdeal));
    }
    if gb.basis().iter().all(|g| g.lc().is_one()) {
        return Ok(Some(DepthCertificate::FreeQuotient));
    }
    if ideal.ring().nvars() > 0 {
        if let [g] = gb.basis() {
            if let Some(p) = g.as_constant() {
                let f = factor(&p, super::finite::FACTOR_CAP)?;
                if f.len() == 1 && f[0].1 == 1 {
                    return Ok(Some(DepthCertificate::PrimeField { prime: p }));
                }
            }
        }
    }
    Ok(None)
}

/// Decides whether `I = mfi(I)` as far as the bounds allow.
pub fn is_depth(ideal: &Ideal, bounds: DepthBounds) -> Result<DepthVerdict> {
    if ideal.is_unit()? {
        return Ok(DepthVerdict::CertifiedYes(DepthCertificate::UnitIdeal));
    }
    if finite_index_test(ideal)?.is_finite() {
        return Ok(DepthVerdict::CertifiedNo { witness: ideal.ring().one() });
    }
    if let Some(c) = depth_certificate(ideal)? {
        return Ok(DepthVerdict::CertifiedYes(c));
    }
    for r in candidates(ideal, bounds)? {
        if !ideal.contains(&r)? && depth_membership(&r, ideal)? {
            return Ok(DepthVerdict::CertifiedNo { witness: r });
        }
    }
    Ok(DepthVerdict::BoundedYes)
}

/// Greedy closure `I ⊆ D ⊆ mfi(I)`: adjoin candidates lying in `mfi(D)`
/// until a full pass adds nothing. `D` always has finite index over `I`.
pub fn compute_depth(ideal: &Ideal, bounds: DepthBounds) -> Result<DepthResult> {
    if finite_index_test(ideal)?.is_finite() {
        return Ok(DepthResult {
            ideal: Ideal::unit(ideal.ring()),
            status: DepthStatus::Certified,
            certificate: Some(DepthCertificate::FiniteQuotient),
            witnesses: vec![ideal.ring().one()],
        });
    }
    let mut d = ideal.clone();
    let mut witnesses = Vec::new();
    loop {
        let mut grew = false;
        for r in candidates(&d, bounds)? {
            if d.contains(&r)? {
                continue;
            }
            if depth_membership(&r, &d)? {
                d = d.with_element(r.clone())?;
                witnesses.push(r);
                grew = true;
            }
        }
        if !grew {
            break;
        }
    }
    let d = Ideal::new(d.ring(), d.gb()?.basis().to_vec())?;
    let certificate = depth_certificate(&d)?;
    let status = if certificate.is_some() { DepthStatus::Certified } else { DepthStatus::BoundLimited };
    Ok(DepthResult { ideal: d, status, certificate, witnesses })
}

/// `I` and `J` are commensurable: both `(I∩J) : I` and `(I∩J) : J` have finite index.
pub fn commensurable(i: &Ideal, j: &Ideal) -> Result<bool> {
    let ij = i.intersect(j)?;
    Ok(finite_index_test(&ij.quotient(i)?)?.is_finite()
        && finite_index_test(&ij.quotient(j)?)?.is_finite())
}

/// Smallest `N > 0` with `N * r ∈ I`, if any.
pub fn torsion_order(r: &Polynomial, ideal: &Ideal) -> Result<Option<BigInt>> {
    let c = ideal.quotient_element(r)?.integer_part()?;
    Ok(if c.is_zero() { None } else { Some(c) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Ring;

    fn zx() -> Ring {
        Ring::with_names(1, &["x"])
    }

    #[test]
    fn membership_examples() {
        let r = zx();
        let i = Ideal::parse(&r, &["4*x", "x^2"]).unwrap();
        assert!(depth_membership(&r.parse("x").unwrap(), &i).unwrap());
        assert!(!depth_membership(&r.parse("1").unwrap(), &i).unwrap());
        let j = Ideal::parse(&r, &["x^3"]).unwrap();
        assert!(!depth_membership(&r.parse("x^2").unwrap(), &j).unwrap());
    }

    #[test]
    fn closures() {
        let r = zx();
        let d = compute_depth(&Ideal::parse(&r, &["4*x", "x^2"]).unwrap(), DepthBounds::default()).unwrap();
        assert_eq!(d.ideal.to_text().unwrap(), "(x)");
        assert_eq!(d.status, DepthStatus::Certified);
        let d = compute_depth(&Ideal::parse(&r, &["x^2"]).unwrap(), DepthBounds::default()).unwrap();
        assert_eq!(d.ideal.to_text().unwrap(), "(x^2)");
        assert_eq!(d.certificate, Some(DepthCertificate::FreeQuotient));
        let z = Ring::integers();
        let d = compute_depth(&Ideal::parse(&z, &["12"]).unwrap(), DepthBounds::default()).unwrap();
        assert!(d.ideal.is_unit().unwrap());
    }

    #[test]
    fn sum_of_depth_ideals_need_not_be_depth() {
        let r = zx();
        let a = Ideal::parse(&r, &["2"]).unwrap();
        let b = Ideal::parse(&r, &["x"]).unwrap();
        assert!(matches!(is_depth(&a, DepthBounds::default()).unwrap(), DepthVerdict::CertifiedYes(_)));
        assert!(matches!(is_depth(&b, DepthBounds::default()).unwrap(), DepthVerdict::CertifiedYes(_)));
        let s = a.sum(&b).unwrap();
        assert!(matches!(is_depth(&s, DepthBounds::default()).unwrap(), DepthVerdict::CertifiedNo { .. }));
        assert!(!commensurable(&a, &b).unwrap());
    }

    #[test]
    fn torsion_elements_found_by_closure() {
        let r = zx();
        // x is idempotent and 6-torsion modulo I, so (I + (x))/I has six elements.
        let i = Ideal::parse(&r, &["6*x", "x^2 - x"]).unwrap();
        let d = compute_depth(&i, DepthBounds::default()).unwrap();
        assert!(d.ideal.contains(&r.parse("x").unwrap()).unwrap());
        assert_eq!(torsion_order(&r.parse("x").unwrap(), &i).unwrap(), Some(BigInt::from(6)));
    }
}
