//! Closed-form structure predicates for `SL_d` and their brute-force
//! counterparts on finite models.

use std::collections::{BTreeSet, HashSet};

use crate::error::Result;
use crate::finite_ring::{Elem, FiniteRing, QIdeal};
use crate::ring::{Polynomial, Ring};

use super::enumerate::{
    el_generators, el_subgroup, f_subgroup, generate_subgroup, normal_closure, sl_elements, GroupSet,
};
use super::fmat::FMat;
use super::level::in_sltil;
use super::rmat::RMatrix;
use super::word::units_order_dividing;

fn commutator_sym(ring: &Ring, a: &RMatrix, b: &RMatrix) -> Result<RMatrix> {
    a.mul(ring, b)?.mul(ring, &a.inverse(ring)?)?.mul(ring, &b.inverse(ring)?)
}

/// Expected value of `[E_ij(a), E_kl(b)]` from the Steinberg relations, for
/// `(k, l) != (j, i)`.
fn steinberg(ring: &Ring, d: usize, (i, j): (usize, usize), (k, l): (usize, usize), a: &Polynomial, b: &Polynomial) -> Result<RMatrix> {
    if j == k && i != l {
        RMatrix::elementary(ring, d, i, l, &a.mul(b)?)
    } else if i == l && j != k {
        RMatrix::elementary(ring, d, k, j, &a.mul(b)?.neg())
    } else {
        Ok(RMatrix::identity(ring, d))
    }
}

/// Checks every commutation relation between elementary matrices with
/// symbolic entries `a`, `b` in dimension `d`. Returns the number of index
/// patterns checked and the failures.
pub fn check_commutation_relations(d: usize) -> Result<(usize, Vec<String>)> {
    let ring = Ring::with_names(2, &["a", "b"]);
    let (a, b) = (ring.var(0), ring.var(1));
    let pairs: Vec<(usize, usize)> = (0..d).flat_map(|i| (0..d).map(move |j| (i, j))).filter(|(i, j)| i != j).collect();
    let mut count = 0;
    let mut failures = Vec::new();
    for &p in &pairs {
        for &r in &pairs {
            if r == (p.1, p.0) {
                continue;
            }
            count += 1;
            let x = RMatrix::elementary(&ring, d, p.0, p.1, &a)?;
            let y = RMatrix::elementary(&ring, d, r.0, r.1, &b)?;
            if commutator_sym(&ring, &x, &y)? != steinberg(&ring, d, p, r, &a, &b)? {
                failures.push(format!("[E{}{}(a), E{}{}(b)]", p.0 + 1, p.1 + 1, r.0 + 1, r.1 + 1));
            }
        }
    }
    Ok((count, failures))
}

/// `[E_ij(x), H_k] = E_kj` and `[E_ij(x), V_k] = E_ik` for all distinct
/// `i, j, k`, with a generic horizontal (vertical) element
/// `prod_l E_kl(y_l)` (`prod_l E_lk(y_l)`).
pub fn check_horizontal_vertical(d: usize) -> Result<(usize, Vec<String>)> {
    let names: Vec<String> = std::iter::once("x".to_string()).chain((1..=d).map(|l| format!("y{l}"))).collect();
    let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    let ring = Ring::with_names(d + 1, &refs);
    let x = ring.var(0);
    let y = |l: usize| ring.var(l + 1);
    let mut count = 0;
    let mut failures = Vec::new();
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                if i == j || j == k || i == k {
                    continue;
                }
                count += 2;
                let e = RMatrix::elementary(&ring, d, i, j, &x)?;
                let mut hor = RMatrix::identity(&ring, d);
                let mut ver = RMatrix::identity(&ring, d);
                for l in (0..d).filter(|&l| l != k) {
                    hor = hor.mul(&ring, &RMatrix::elementary(&ring, d, k, l, &y(l))?)?;
                    ver = ver.mul(&ring, &RMatrix::elementary(&ring, d, l, k, &y(l))?)?;
                }
                let want_h = RMatrix::elementary(&ring, d, k, j, &x.mul(&y(i))?.neg())?;
                if commutator_sym(&ring, &e, &hor)? != want_h {
                    failures.push(format!("[E{}{}, H{}]", i + 1, j + 1, k + 1));
                }
                let want_v = RMatrix::elementary(&ring, d, i, k, &x.mul(&y(j))?)?;
                if commutator_sym(&ring, &e, &ver)? != want_v {
                    failures.push(format!("[E{}{}, V{}]", i + 1, j + 1, k + 1));
                }
            }
        }
    }
    Ok((count, failures))
}

/// `V_i(Q)`: identity off column `i`.
pub fn vertical_group(q: &FiniteRing, d: usize, i: usize) -> Result<GroupSet> {
    let gens: Vec<FMat> = (0..d)
        .filter(|&k| k != i)
        .flat_map(|k| q.additive_basis().iter().map(move |&b| (k, b)))
        .map(|(k, b)| FMat::elementary(q, d, k, i, b))
        .collect();
    generate_subgroup(q, d, &gens, usize::MAX)
}

/// `H_i(Q)`: identity off row `i`.
pub fn horizontal_group(q: &FiniteRing, d: usize, i: usize) -> Result<GroupSet> {
    let gens: Vec<FMat> = (0..d)
        .filter(|&k| k != i)
        .flat_map(|k| q.additive_basis().iter().map(move |&b| (k, b)))
        .map(|(k, b)| FMat::elementary(q, d, i, k, b))
        .collect();
    generate_subgroup(q, d, &gens, usize::MAX)
}

/// `g` normalizes `V_i` iff `g_ij = 0` for all `j != i`.
pub fn normalizes_vertical(g: &FMat, i: usize) -> bool {
    (0..g.dim()).all(|j| j == i || g.get(i, j) == 0)
}

/// `g` normalizes `H_i` iff `g_ji = 0` for all `j != i`.
pub fn normalizes_horizontal(g: &FMat, i: usize) -> bool {
    (0..g.dim()).all(|j| j == i || g.get(j, i) == 0)
}

/// `g` centralizes `E_ij(x)` iff the entries `g_ki` (`k != i`) and `g_jl`
/// (`l != j`) and the difference `g_ii - g_jj` all lie in `Ann(x)`.
pub fn centralizes_elementary(q: &FiniteRing, g: &FMat, i: usize, j: usize, x: Elem) -> bool {
    let ann = |a: Elem| q.mul(a, x) == 0;
    let d = g.dim();
    (0..d).all(|k| k == i || ann(g.get(k, i)))
        && (0..d).all(|l| l == j || ann(g.get(j, l)))
        && ann(q.sub(g.get(i, i), g.get(j, j)))
}

/// `g` lies in `Z(SL_d) x V_i`: a central scalar times a vertical element.
pub fn in_center_times_vertical(q: &FiniteRing, g: &FMat, i: usize) -> bool {
    let d = g.dim();
    let u = g.get(i, i);
    q.pow(u, d as u64) == q.one()
        && (0..d).all(|r| (0..d).all(|c| c == i && r != i || g.get(r, c) == if r == c { u } else { 0 }))
}

fn conjugates_into(q: &FiniteRing, g: &FMat, gi: &FMat, set: &GroupSet) -> bool {
    set.iter().all(|x| set.member(&g.mul(q, x).mul(q, gi)))
}

fn commutes(q: &FiniteRing, a: &FMat, b: &FMat) -> bool {
    a.mul(q, b) == b.mul(q, a)
}

/// Agreement counts of a predicate against its brute-force oracle.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Agreement {
    pub name: String,
    pub checked: usize,
    pub mismatches: usize,
}

/// Runs every closed-form predicate against brute force over all of
/// `SL_d(Q)`.
pub fn predicate_suite(q: &FiniteRing, d: usize) -> Result<Vec<Agreement>> {
    let group = sl_elements(q, d, usize::MAX)?.sorted();
    let inverses: Vec<FMat> = group.iter().map(|g| g.inverse(q)).collect::<Result<_>>()?;
    let mut out = Vec::new();

    for i in 0..d {
        let ver = vertical_group(q, d, i)?;
        let hor = horizontal_group(q, d, i)?;
        let mut a = Agreement { name: format!("normalizer of V{}", i + 1), ..Default::default() };
        let mut b = Agreement { name: format!("normalizer of H{}", i + 1), ..Default::default() };
        let mut c = Agreement { name: format!("centralizer of V{}", i + 1), ..Default::default() };
        for (g, gi) in group.iter().zip(&inverses) {
            a.checked += 1;
            if normalizes_vertical(g, i) != conjugates_into(q, g, gi, &ver) {
                a.mismatches += 1;
            }
            b.checked += 1;
            if normalizes_horizontal(g, i) != conjugates_into(q, g, gi, &hor) {
                b.mismatches += 1;
            }
            c.checked += 1;
            if in_center_times_vertical(q, g, i) != ver.iter().all(|v| commutes(q, g, v)) {
                c.mismatches += 1;
            }
        }
        out.extend([a, b, c]);
    }

    let mut cen = Agreement { name: "centralizer of E_ij(x)".into(), ..Default::default() };
    for i in 0..d {
        for j in (0..d).filter(|&j| j != i) {
            for x in q.elements() {
                let e = FMat::elementary(q, d, i, j, x);
                for g in &group {
                    cen.checked += 1;
                    if centralizes_elementary(q, g, i, j, x) != commutes(q, g, &e) {
                        cen.mismatches += 1;
                    }
                }
            }
        }
    }
    out.push(cen);

    let gens = el_generators(q, d);
    let el = generate_subgroup(q, d, &gens, usize::MAX)?;
    let scalars: BTreeSet<FMat> =
        units_order_dividing(q, d as u64).into_iter().map(|u| FMat::scalar(q, d, u)).collect();
    let z_sl: BTreeSet<FMat> = group.iter().filter(|g| gens.iter().all(|e| commutes(q, g, e))).cloned().collect();
    let z_el: BTreeSet<FMat> = el.iter().filter(|g| gens.iter().all(|e| commutes(q, g, e))).cloned().collect();
    out.push(Agreement {
        name: "Z(EL) = Z(SL) = scalars".into(),
        checked: group.len() + el.len(),
        mismatches: usize::from(z_sl != scalars) + usize::from(z_el != scalars),
    });
    Ok(out)
}

/// Center of `SL_d(Q)` by exhaustive search over all `d x d` matrices,
/// keeping those of determinant one that commute with every `E_ij(1)`.
pub fn center_brute_force(q: &FiniteRing, d: usize) -> Vec<FMat> {
    let n = q.order() as Elem;
    let pairs: Vec<(usize, usize)> = (0..d).flat_map(|i| (0..d).map(move |j| (i, j))).filter(|(i, j)| i != j).collect();
    let mut e = vec![0 as Elem; d * d];
    let mut out = Vec::new();
    loop {
        if pairs.iter().all(|&(i, j)| commutes_with_unit_elementary(q, &e, d, i, j)) {
            let g = FMat::from_rows(q, e.chunks(d).map(|c| c.to_vec()).collect()).expect("entries in range");
            if g.det(q) == q.one() {
                out.push(g);
            }
        }
        let mut k = 0;
        loop {
            if k == e.len() {
                return out;
            }
            e[k] += 1;
            if e[k] < n {
                break;
            }
            e[k] = 0;
            k += 1;
        }
    }
}

/// Compares `g E_ij(1)` with `E_ij(1) g` entry by entry, without allocating.
fn commutes_with_unit_elementary(q: &FiniteRing, g: &[Elem], d: usize, i: usize, j: usize) -> bool {
    for r in 0..d {
        for c in 0..d {
            let left = if c == j { q.add(g[r * d + c], g[r * d + i]) } else { g[r * d + c] };
            let right = if r == i { q.add(g[r * d + c], g[j * d + c]) } else { g[r * d + c] };
            if left != right {
                return false;
            }
        }
    }
    true
}

/// Orders and outcome of the containment `EL_d(I^2) <= F_d(I)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TitsCheck {
    pub el_square_order: usize,
    pub f_order: usize,
    pub contained: bool,
}

pub fn tits_check(q: &FiniteRing, d: usize, i: &QIdeal, cap: usize) -> Result<TitsCheck> {
    let i2 = i.product(q, i);
    let el = el_subgroup(q, d, &i2, cap)?;
    let f = f_subgroup(q, d, i, cap)?;
    Ok(TitsCheck { el_square_order: el.len(), f_order: f.len(), contained: el.is_subset(&f) })
}

/// The two sides of `Z(EL_d(Q)/EL_d(I)) = SLtil_d(I)/EL_d(I)`, as subgroups
/// of `EL_d(Q)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BorevichVavilov {
    pub el_order: usize,
    pub el_ideal_order: usize,
    pub center_preimage_order: usize,
    pub sltil_order: usize,
    pub equal: bool,
}

pub fn borevich_vavilov(q: &FiniteRing, d: usize, i: &QIdeal, cap: usize) -> Result<BorevichVavilov> {
    let gens = el_generators(q, d);
    let el = generate_subgroup(q, d, &gens, cap)?;
    let el_i = el_subgroup(q, d, i, cap)?;
    let mut center = HashSet::new();
    for g in el.iter() {
        let gi = g.inverse(q)?;
        let central = gens.iter().all(|a| {
            let ai = a.inverse(q).expect("elementary");
            el_i.member(&g.mul(q, a).mul(q, &gi).mul(q, &ai))
        });
        if central {
            center.insert(g.clone());
        }
    }
    let center = GroupSet::from_elements(d, center);
    let sltil = sl_elements(q, d, cap)?.filter(|g| in_sltil(q, g, i));
    let sltil_in_el = sltil.filter(|g| el.member(g));
    Ok(BorevichVavilov {
        el_order: el.len(),
        el_ideal_order: el_i.len(),
        center_preimage_order: center.len(),
        sltil_order: sltil.len(),
        equal: center == sltil_in_el,
    })
}

/// Conjugacy classes of a group under conjugation by its generators.
pub fn conjugacy_classes(q: &FiniteRing, group: &GroupSet, gens: &[FMat]) -> Result<Vec<Vec<FMat>>> {
    let pairs: Vec<(FMat, FMat)> = gens.iter().map(|a| Ok((a.clone(), a.inverse(q)?))).collect::<Result<_>>()?;
    let mut seen: HashSet<FMat> = HashSet::new();
    let mut classes = Vec::new();
    for g in group.sorted() {
        if seen.contains(&g) {
            continue;
        }
        seen.insert(g.clone());
        let mut class = vec![g];
        let mut k = 0;
        while k < class.len() {
            let x = class[k].clone();
            for (a, ai) in &pairs {
                let y = a.mul(q, &x).mul(q, ai);
                if seen.insert(y.clone()) {
                    class.push(y);
                }
            }
            k += 1;
        }
        class.sort_unstable();
        classes.push(class);
    }
    Ok(classes)
}

/// One EL-normalized subgroup `H` with its level ideal `J` and the orders of
/// `EL_d(J) <= H <= SLtil_d(J)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalSubgroupLevel {
    pub order: usize,
    pub level: String,
    pub lower_order: usize,
    pub upper_order: usize,
    pub sandwiched: bool,
}

/// Enumerates all subgroups of `SL_d(Q)` normalized by `EL_d(Q)` (as joins
/// of normal closures of single elements) and checks each against the
/// sandwich `EL_d(J) <= H <= SLtil_d(J)`.
pub fn normal_structure(q: &FiniteRing, d: usize, cap: usize) -> Result<Vec<NormalSubgroupLevel>> {
    let gens = el_generators(q, d);
    let sl = sl_elements(q, d, cap)?;
    let classes = conjugacy_classes(q, &sl, &gens)?;
    let mut subgroups: Vec<(Vec<FMat>, GroupSet)> = Vec::new();
    let mut keys: HashSet<Vec<FMat>> = HashSet::new();
    let mut add = |seeds: Vec<FMat>, subgroups: &mut Vec<(Vec<FMat>, GroupSet)>| -> Result<bool> {
        let n = normal_closure(q, d, &seeds, &gens, cap)?;
        let key = n.sorted();
        if keys.insert(key) {
            subgroups.push((seeds, n));
            Ok(true)
        } else {
            Ok(false)
        }
    };
    for class in &classes {
        add(vec![class[0].clone()], &mut subgroups)?;
    }
    let mut start = 0;
    loop {
        let end = subgroups.len();
        let mut grew = false;
        for a in 0..end {
            for b in start.max(a + 1)..end {
                if subgroups[a].1.is_subset(&subgroups[b].1) || subgroups[b].1.is_subset(&subgroups[a].1) {
                    continue;
                }
                let mut seeds = subgroups[a].0.clone();
                seeds.extend(subgroups[b].0.iter().cloned());
                grew |= add(seeds, &mut subgroups)?;
            }
        }
        if !grew {
            break;
        }
        start = end;
    }
    subgroups.sort_by_key(|(_, h)| h.len());
    let mut out = Vec::new();
    for (_, h) in &subgroups {
        let mut entries: BTreeSet<Elem> = BTreeSet::new();
        for g in h.iter() {
            for r in 0..d {
                for c in 0..d {
                    entries.insert(if r == c { q.sub(g.get(r, r), g.get(0, 0)) } else { g.get(r, c) });
                }
            }
        }
        let j = q.ideal(&entries.into_iter().collect::<Vec<_>>());
        let lower = el_subgroup(q, d, &j, cap)?;
        let upper = sl.filter(|g| in_sltil(q, g, &j));
        out.push(NormalSubgroupLevel {
            order: h.len(),
            level: j.display(q),
            lower_order: lower.len(),
            upper_order: upper.len(),
            sandwiched: lower.is_subset(h) && h.is_subset(&upper),
        });
    }
    Ok(out)
}

/// `[SLtil_d(I) : SLtil_d(K)]` computed by enumeration.
pub fn sltil_index(q: &FiniteRing, d: usize, i: &QIdeal, k: &QIdeal, cap: usize) -> Result<(usize, usize)> {
    let sl = sl_elements(q, d, cap)?;
    let big = sl.filter(|g| in_sltil(q, g, i)).len();
    let small = sl.filter(|g| in_sltil(q, g, k)).len();
    Ok((big, small))
}
