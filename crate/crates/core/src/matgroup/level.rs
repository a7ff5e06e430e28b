//! Congruence levels: the smallest ideals `I` with `g` in `SL_d(I)` or in
//! `SLtil_d(I)`, and the map `iota(g) = g - Id` modulo `K`.

use crate::error::{Error, Result};
use crate::finite_ring::{Elem, FiniteRing, QIdeal};
use crate::ideal::Ideal;
use crate::ring::{Polynomial, Ring};

use super::fmat::FMat;
use super::rmat::RMatrix;

fn check_sl(ring: &Ring, g: &RMatrix) -> Result<()> {
    if !ring.eq_elem(&g.det(ring)?, &ring.one())? {
        return Err(Error::pre("matrix does not have determinant 1"));
    }
    Ok(())
}

/// Ideal generated by the entries of `g - Id`.
pub fn sl_level(ring: &Ring, g: &RMatrix) -> Result<Ideal> {
    check_sl(ring, g)?;
    let d = g.dim();
    let mut gens = Vec::new();
    for i in 0..d {
        for j in 0..d {
            let x = if i == j { g.get(i, j).sub(&ring.one())? } else { g.get(i, j).clone() };
            if !x.is_zero() {
                gens.push(x);
            }
        }
    }
    Ideal::new(ring, gens)
}

/// Ideal generated by the off-diagonal entries and the differences
/// `g_ii - g_11`.
pub fn sltil_level(ring: &Ring, g: &RMatrix) -> Result<Ideal> {
    check_sl(ring, g)?;
    let d = g.dim();
    let mut gens = Vec::new();
    for i in 0..d {
        for j in 0..d {
            let x = if i == j { g.get(i, i).sub(g.get(0, 0))? } else { g.get(i, j).clone() };
            if !x.is_zero() {
                gens.push(x);
            }
        }
    }
    Ideal::new(ring, gens)
}

/// `iota(g) = g - Id` reduced modulo `K`, defined when the level of `g` lies
/// in `F` and `F^2` lies in `K`.
pub fn iota(ring: &Ring, g: &RMatrix, f: &Ideal, k: &Ideal) -> Result<Vec<Vec<Polynomial>>> {
    if !sl_level(ring, g)?.is_subset(f)? {
        return Err(Error::pre("level of g is not contained in F"));
    }
    if !f.product(f)?.is_subset(k)? {
        return Err(Error::pre("F^2 is not contained in K"));
    }
    let d = g.dim();
    let mut rows = Vec::with_capacity(d);
    for i in 0..d {
        let mut row = Vec::with_capacity(d);
        for j in 0..d {
            let x = if i == j { g.get(i, j).sub(&ring.one())? } else { g.get(i, j).clone() };
            row.push(k.normal_form(&x)?);
        }
        rows.push(row);
    }
    Ok(rows)
}

pub fn fin_sl_level(q: &FiniteRing, g: &FMat) -> QIdeal {
    let d = g.dim();
    let mut gens = Vec::new();
    for i in 0..d {
        for j in 0..d {
            let x = if i == j { q.sub(g.get(i, j), q.one()) } else { g.get(i, j) };
            gens.push(x);
        }
    }
    q.ideal(&gens)
}

pub fn fin_sltil_level(q: &FiniteRing, g: &FMat) -> QIdeal {
    q.ideal(&sltil_gens(q, g))
}

fn sltil_gens(q: &FiniteRing, g: &FMat) -> Vec<Elem> {
    let d = g.dim();
    let mut gens = Vec::new();
    for i in 0..d {
        for j in 0..d {
            let x = if i == j { q.sub(g.get(i, i), g.get(0, 0)) } else { g.get(i, j) };
            gens.push(x);
        }
    }
    gens
}

/// `g` lies in `SL_d(J)`: it reduces to the identity modulo `J`.
pub fn in_sl(q: &FiniteRing, g: &FMat, j: &QIdeal) -> bool {
    let d = g.dim();
    (0..d).all(|a| {
        (0..d).all(|b| {
            let x = if a == b { q.sub(g.get(a, b), q.one()) } else { g.get(a, b) };
            j.contains(x)
        })
    })
}

/// `g` lies in `SLtil_d(J)`: it reduces to a scalar modulo `J`.
pub fn in_sltil(q: &FiniteRing, g: &FMat, j: &QIdeal) -> bool {
    sltil_gens(q, g).into_iter().all(|x| j.contains(x))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn levels_over_integers() {
        let z = Ring::integers();
        let g = RMatrix::elementary(&z, 3, 0, 1, &z.constant(6)).unwrap();
        let six = Ideal::parse(&z, &["6"]).unwrap();
        assert!(sl_level(&z, &g).unwrap().equals(&six).unwrap());
        assert!(sltil_level(&z, &g).unwrap().equals(&six).unwrap());
        let diag = RMatrix::from_ints(&z, &[vec![-1, 0, 0], vec![0, -1, 0], vec![0, 0, 1]]).unwrap();
        assert!(sltil_level(&z, &diag).unwrap().equals(&Ideal::parse(&z, &["2"]).unwrap()).unwrap());
        let id = RMatrix::identity(&z, 3);
        assert_eq!(sl_level(&z, &id).unwrap().to_text().unwrap(), "(0)");
        assert!(sl_level(&z, &RMatrix::from_ints(&z, &[vec![2, 0], vec![0, 1]]).unwrap()).is_err());
    }

    #[test]
    fn iota_is_additive() {
        let z = Ring::integers();
        let f = Ideal::parse(&z, &["2"]).unwrap();
        let k = Ideal::parse(&z, &["4"]).unwrap();
        let g1 = RMatrix::elementary(&z, 3, 0, 1, &z.constant(2)).unwrap();
        let g2 = RMatrix::elementary(&z, 3, 1, 0, &z.constant(2)).unwrap();
        let a = iota(&z, &g1, &f, &k).unwrap();
        assert_eq!(a[0][1], z.constant(2));
        let b = iota(&z, &g2, &f, &k).unwrap();
        let ab = iota(&z, &g1.mul(&z, &g2).unwrap(), &f, &k).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let s = k.normal_form(&a[i][j].add(&b[i][j]).unwrap()).unwrap();
                assert_eq!(ab[i][j], s);
            }
        }
        let e1 = RMatrix::elementary(&z, 3, 0, 1, &z.one()).unwrap();
        assert!(iota(&z, &e1, &f, &k).is_err());
    }
}
