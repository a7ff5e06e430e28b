use std::collections::HashSet;

use noether_core::depth::{compute_depth, finite_index_test, staircase, DepthBounds, DepthStatus};
use noether_core::ideal::Ideal;
use noether_core::ring::{Polynomial, Ring};
use num_bigint::BigInt;
use num_traits::One;
use proptest::prelude::*;

fn zx() -> Ring {
    Ring::with_names(1, &["x"])
}

fn zxy() -> Ring {
    Ring::with_names(2, &["x", "y"])
}

fn ideal(r: &Ring, gens: &[&str]) -> Ideal {
    Ideal::parse(r, gens).unwrap()
}

/// `|I/J|` by closing the images of `m·g` under addition, where `m` runs over
/// the normal monomials of a finite-index ideal `A` with `A·I ⊆ J`.
fn enumerate(i: &Ideal, j: &Ideal, a: &Ideal, cap: usize) -> Option<usize> {
    let gens: Vec<Polynomial> = staircase(a)
        .unwrap()
        .monomials
        .iter()
        .flat_map(|m| i.generators().iter().map(move |g| g.mul_term(m, &BigInt::one())))
        .map(|p| j.normal_form(&p).unwrap())
        .filter(|p| !p.is_zero())
        .collect();
    let zero = i.ring().zero();
    let mut seen = HashSet::from([zero.clone()]);
    let mut stack = vec![zero];
    while let Some(x) = stack.pop() {
        for g in &gens {
            let y = j.normal_form(&x.add(g).unwrap()).unwrap();
            if seen.insert(y.clone()) {
                if seen.len() > cap {
                    return None;
                }
                stack.push(y);
            }
        }
    }
    Some(seen.len())
}

#[test]
fn colon_times_ideal_has_finite_index() {
    let (x, xy) = (zx(), zxy());
    let pairs: Vec<(&Ring, &[&str], &[&str], usize)> = vec![
        (&x, &["x"], &["2*x", "x^2"], 2),
        (&x, &["x"], &["4*x", "x^3"], 16),
        (&x, &["2", "x"], &["4", "2*x", "x^2"], 4),
        (&x, &["x^2 + 1"], &["5*x^2 + 5", "x^3 + x"], 5),
        (&xy, &["x", "y"], &["3*x", "3*y", "x^2", "x*y", "y^2"], 9),
    ];
    for (r, a, b, size) in pairs {
        let (i, j) = (ideal(r, a), ideal(r, b));
        let colon = j.quotient(&i).unwrap();
        assert!(finite_index_test(&colon).unwrap().is_finite());
        assert_eq!(enumerate(&i, &j, &colon, 10_000), Some(size), "|I/J| for {a:?} ⊇ {b:?}");
        let ci = colon.product(&i).unwrap();
        let n = enumerate(&i, &ci, &ci.quotient(&i).unwrap(), 100_000);
        assert!(n.is_some_and(|n| n >= size), "I/(J:I)I for {a:?} ⊇ {b:?}");
    }
}

#[test]
fn infinite_index_passes_to_quotients() {
    let x = zx();
    let i = ideal(&x, &["x"]);
    let j = ideal(&x, &["2*x", "x^2"]);
    for l in [&["0"][..], &["2*x^2"], &["x^3 - x^2"], &["4*x", "2*x^3"]] {
        let l = ideal(&x, l);
        assert!(l.is_subset(&j).unwrap());
        assert!(!finite_index_test(&l.quotient(&j).unwrap()).unwrap().is_finite());
        let li = l.quotient(&i).unwrap();
        let ji = j.quotient(&i).unwrap();
        assert!(!finite_index_test(&li.quotient(&ji).unwrap()).unwrap().is_finite(), "L = {}", l.to_text().unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn binomials_divide(n in 0u32..5, gap in 1u32..5, extra in 0u32..5, l in 1u32..5) {
        let r = zx();
        let (m, big_n) = (n + gap, n + extra);
        let big_m = big_n + l * gap;
        let p = r.parse(&format!("x^{m} - x^{n}")).unwrap();
        let q = r.parse(&format!("x^{big_m} - x^{big_n}")).unwrap();
        let quotient = q.divexact(&p).unwrap();
        prop_assert_eq!(quotient.mul(&p).unwrap(), q);
    }

    #[test]
    fn binomials_without_divisibility_do_not_divide(n in 0u32..5, gap in 2u32..6, extra in 0u32..5, k in 1u32..12) {
        prop_assume!(k % gap != 0);
        let r = zx();
        let m = n + gap;
        let p = r.parse(&format!("x^{m} - x^{n}")).unwrap();
        let q = r.parse(&format!("x^{} - x^{}", n + extra + k, n + extra)).unwrap();
        prop_assert!(q.divexact(&p).is_err());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn depth_is_monotone(a in 1u32..3, b in 0u32..3, c in 1i64..5, d in 1i64..5) {
        let r = zx();
        let i = ideal(&r, &[&format!("{c}*x^{a}")]);
        let j = ideal(&r, &[&format!("{}*x^{}", c * d, a + b), &format!("{}*x^{}", c * d * 2, a + b + 1)]);
        prop_assert!(j.is_subset(&i).unwrap());
        let (di, dj) = (
            compute_depth(&i, DepthBounds::default()).unwrap(),
            compute_depth(&j, DepthBounds::default()).unwrap(),
        );
        if di.status == DepthStatus::Certified && dj.status == DepthStatus::Certified {
            prop_assert!(dj.ideal.is_subset(&di.ideal).unwrap());
        }
        prop_assert!(i.is_subset(&di.ideal).unwrap() && j.is_subset(&dj.ideal).unwrap());
    }
}
