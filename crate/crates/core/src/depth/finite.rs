//! Deciding whether `R/I` is finite, and computing its additive structure.

use std::collections::{BTreeSet, HashMap, VecDeque};

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::lattice::{factor, smith_normal_form};
use crate::ring::{Monomial, Polynomial};

/// Trial-division bound used when factoring `I ∩ Z`.
pub const FACTOR_CAP: u64 = 1_000_000;

/// Largest staircase enumerated for structure computations.
pub const STAIRCASE_CAP: usize = 200_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FiniteIndex {
    Finite,
    Infinite,
}

/// `x_var^m - x_var^n` lies in the ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerRelation {
    pub var: usize,
    pub n: u32,
    pub m: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FinitenessCertificate {
    /// `N ∈ I` and `x_i^{m_i} - x_i^{n_i} ∈ I` for every variable.
    Finite {
        n: BigInt,
        relations: Vec<PowerRelation>,
        cardinality: BigInt,
    },
    /// `I ∩ Z = 0`, so `Z` embeds in `R/I`.
    NoIntegerPart,
    /// Modulo `prime` no basis element has a pure power of `var` as leading
    /// monomial, so `F_p[x]/I` has positive dimension.
    PositiveDimensional { prime: BigInt, var: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinitenessVerdict {
    pub status: FiniteIndex,
    pub certificate: FinitenessCertificate,
}

impl FinitenessVerdict {
    pub fn is_finite(&self) -> bool {
        self.status == FiniteIndex::Finite
    }
}

/// Normal monomials of a finite quotient with the size of their coefficient range.
#[derive(Clone, Debug)]
pub struct Staircase {
    pub monomials: Vec<Monomial>,
    pub bounds: Vec<BigInt>,
}

impl Staircase {
    pub fn cardinality(&self) -> BigInt {
        self.bounds.iter().product()
    }
}

/// Staircase of a strong basis; errors when the quotient is infinite.
pub fn staircase(ideal: &Ideal) -> Result<Staircase> {
    let gb = ideal.gb()?;
    let k = ideal.ring().nvars();
    let mut seen: BTreeSet<Monomial> = BTreeSet::new();
    let mut queue = VecDeque::from([Monomial::one(k)]);
    let mut out: Vec<(Monomial, BigInt)> = Vec::new();
    while let Some(m) = queue.pop_front() {
        if !seen.insert(m.clone()) {
            continue;
        }
        match gb.lc_ideal_at(&m) {
            None => return Err(Error::pre("quotient is infinite")),
            Some(a) if a.is_one() => continue,
            Some(a) => {
                if out.len() >= STAIRCASE_CAP {
                    return Err(Error::limit("staircase size", STAIRCASE_CAP));
                }
                for i in 0..k {
                    queue.push_back(m.mul(&Monomial::var(k, i, 1)));
                }
                out.push((m, a));
            }
        }
    }
    let order = ideal.ring().order();
    out.sort_by(|a, b| order.cmp(&a.0, &b.0));
    let (monomials, bounds) = out.into_iter().unzip();
    Ok(Staircase { monomials, bounds })
}

/// Decides finiteness of `R/I` with a certificate either way.
pub fn finite_index_test(ideal: &Ideal) -> Result<FinitenessVerdict> {
    let c = ideal.integer_part()?;
    if c.is_zero() {
        return Ok(FinitenessVerdict {
            status: FiniteIndex::Infinite,
            certificate: FinitenessCertificate::NoIntegerPart,
        });
    }
    let ring = ideal.ring();
    let k = ring.nvars();
    if k > 0 && !c.is_one() {
        for (p, _) in factor(&c, FACTOR_CAP)? {
            let modp = ideal.with_element(ring.constant(p.clone()))?;
            let gb = modp.gb()?;
            for var in 0..k {
                let has_pure = gb.basis().iter().any(|g| {
                    g.lm().pure_power_var() == Some(var) && !(g.lc() % &p).is_zero()
                });
                if !has_pure {
                    return Ok(FinitenessVerdict {
                        status: FiniteIndex::Infinite,
                        certificate: FinitenessCertificate::PositiveDimensional { prime: p, var },
                    });
                }
            }
        }
    }
    let stair = staircase(ideal)?;
    let cardinality = stair.cardinality();
    let bound = cardinality.to_u64().unwrap_or(u64::MAX);
    let mut relations = Vec::with_capacity(k);
    for var in 0..k {
        relations.push(power_relation(ideal, var, bound)?);
    }
    Ok(FinitenessVerdict {
        status: FiniteIndex::Finite,
        certificate: FinitenessCertificate::Finite { n: c, relations, cardinality },
    })
}

/// First repetition among the normal forms of `x_var^0, x_var^1, ...`.
fn power_relation(ideal: &Ideal, var: usize, bound: u64) -> Result<PowerRelation> {
    let ring = ideal.ring();
    let x = ring.var(var);
    let mut seen: HashMap<Polynomial, u32> = HashMap::new();
    let mut cur = ideal.normal_form(&ring.one())?;
    let mut e: u32 = 0;
    loop {
        if let Some(&n) = seen.get(&cur) {
            return Ok(PowerRelation { var, n, m: e });
        }
        if u64::from(e) > bound {
            return Err(Error::pre("power sequence did not repeat"));
        }
        seen.insert(cur.clone(), e);
        cur = ideal.normal_form(&cur.mul(&x)?)?;
        e += 1;
    }
}

/// Finite abelian group `⊕ Z/d_j` with an explicit basis.
#[derive(Clone, Debug)]
pub struct AbGroup {
    /// Invariant factors, each greater than one, `d_1 | d_2 | ...`.
    pub invariants: Vec<BigInt>,
    /// Normal monomials spanning the quotient.
    pub monomials: Vec<Monomial>,
    /// Coordinates of each normal monomial in the chosen basis.
    pub coords: Vec<Vec<BigInt>>,
    /// Basis elements as normal forms, one per invariant factor.
    pub generators: Vec<Polynomial>,
}

impl AbGroup {
    pub fn order(&self) -> BigInt {
        self.invariants.iter().product()
    }

    /// Coordinates of a normal form in the chosen basis.
    pub fn coordinates(&self, nf: &Polynomial) -> Result<Vec<BigInt>> {
        let mut out = vec![BigInt::zero(); self.invariants.len()];
        for (m, c) in nf.terms() {
            let idx = self
                .monomials
                .iter()
                .position(|x| x == m)
                .ok_or_else(|| Error::pre("polynomial is not a normal form"))?;
            for (j, o) in out.iter_mut().enumerate() {
                *o += c * &self.coords[idx][j];
            }
        }
        for (o, d) in out.iter_mut().zip(&self.invariants) {
            *o = num_integer::Integer::mod_floor(o, d);
        }
        Ok(out)
    }
}

/// Additive structure of a finite quotient `R/I` via Smith normal form.
pub fn cardinality_and_structure(ideal: &Ideal) -> Result<(BigInt, AbGroup)> {
    if !finite_index_test(ideal)?.is_finite() {
        return Err(Error::pre("quotient is infinite"));
    }
    let stair = staircase(ideal)?;
    let gb = ideal.gb()?;
    let n = stair.monomials.len();
    let index: HashMap<&Monomial, usize> = stair.monomials.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut rows = Vec::with_capacity(n);
    for (m, a) in stair.monomials.iter().zip(&stair.bounds) {
        let g = gb.reducer_at(m).expect("finite staircase");
        let h = g.mul_term(&m.div(g.lm()), &BigInt::one());
        let head = Polynomial::term(h.nvars(), h.order(), m.clone(), a.clone());
        let tail = gb.normal_form(&h.sub(&head)?);
        let mut row = vec![BigInt::zero(); n];
        row[index[m]] += a;
        for (t, c) in tail.terms() {
            row[index[t]] += c;
        }
        rows.push(row);
    }
    let snf = smith_normal_form(&rows);
    let ring = ideal.ring();
    let keep: Vec<usize> = (0..snf.diagonal.len()).filter(|&j| !snf.diagonal[j].is_one()).collect();
    let invariants: Vec<BigInt> = keep.iter().map(|&j| snf.diagonal[j].clone()).collect();
    let coords = (0..n)
        .map(|i| {
            keep.iter()
                .zip(&invariants)
                .map(|(&j, d)| num_integer::Integer::mod_floor(&snf.right[i][j], d))
                .collect()
        })
        .collect();
    let mut generators = Vec::with_capacity(keep.len());
    for &j in &keep {
        let terms = stair
            .monomials
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), snf.right_inv[j][i].clone()))
            .collect();
        let p = Polynomial::from_terms(ring.nvars(), ring.order(), terms);
        generators.push(gb.normal_form(&p));
    }
    let group = AbGroup { invariants, monomials: stair.monomials.clone(), coords, generators };
    Ok((stair.cardinality(), group))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Ring;

    fn invariants(r: &Ring, gens: &[&str]) -> Vec<i64> {
        let i = Ideal::parse(r, gens).unwrap();
        let (card, g) = cardinality_and_structure(&i).unwrap();
        assert_eq!(card, g.order());
        g.invariants.iter().map(|d| d.to_i64().unwrap()).collect()
    }

    #[test]
    fn finiteness_examples() {
        let r = Ring::with_names(1, &["x"]);
        let v = finite_index_test(&Ideal::parse(&r, &["4", "x^2 - x"]).unwrap()).unwrap();
        assert!(v.is_finite());
        match v.certificate {
            FinitenessCertificate::Finite { n, relations, cardinality } => {
                assert_eq!(n, BigInt::from(4));
                assert_eq!(cardinality, BigInt::from(16));
                assert_eq!(relations, vec![PowerRelation { var: 0, n: 1, m: 2 }]);
            }
            other => panic!("unexpected {other:?}"),
        }
        let v = finite_index_test(&Ideal::parse(&r, &["x"]).unwrap()).unwrap();
        assert_eq!(v.certificate, FinitenessCertificate::NoIntegerPart);
        let v = finite_index_test(&Ideal::parse(&r, &["6", "2*x"]).unwrap()).unwrap();
        assert_eq!(
            v.certificate,
            FinitenessCertificate::PositiveDimensional { prime: BigInt::from(2), var: 0 }
        );
    }

    #[test]
    fn structure_examples() {
        let r = Ring::with_names(1, &["x"]);
        assert_eq!(invariants(&r, &["4", "x^2 - x"]), vec![4, 4]);
        assert_eq!(invariants(&r, &["2", "x^2"]), vec![2, 2]);
        assert_eq!(invariants(&r, &["4", "2*x + 2", "x^2 + 1"]), vec![2, 4]);
        assert_eq!(invariants(&Ring::integers(), &["12"]), vec![12]);
        assert_eq!(invariants(&Ring::integers(), &["1"]), Vec::<i64>::new());
    }

    #[test]
    fn coordinates_round_trip() {
        let r = Ring::with_names(1, &["x"]);
        let i = Ideal::parse(&r, &["4", "2*x + 2", "x^2 + 1"]).unwrap();
        let (_, g) = cardinality_and_structure(&i).unwrap();
        for (j, gen) in g.generators.iter().enumerate() {
            let c = g.coordinates(gen).unwrap();
            for (l, x) in c.iter().enumerate() {
                assert_eq!(*x, if l == j { BigInt::one() } else { BigInt::zero() });
            }
        }
    }
}
