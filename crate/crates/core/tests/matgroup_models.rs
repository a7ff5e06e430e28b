use std::time::Instant;

use noether_core::finite_ring::FiniteRing;
use noether_core::matgroup::predicates::{
    borevich_vavilov, center_brute_force, normal_structure, predicate_suite, sltil_index,
};
use noether_core::matgroup::{center_word, units_order_dividing, FMat, ELEMENT_CAP};

#[test]
fn predicates_over_sl3_mod_3() {
    let t = Instant::now();
    let q = FiniteRing::integers_mod(3).unwrap();
    for a in predicate_suite(&q, 3).unwrap() {
        assert!(a.checked > 0);
        assert_eq!(a.mismatches, 0, "{}", a.name);
    }
    eprintln!("predicates mod 3: {:?}", t.elapsed());
}

#[test]
fn center_of_sl3_mod_7() {
    let t = Instant::now();
    let q = FiniteRing::integers_mod(7).unwrap();
    let center = center_brute_force(&q, 3);
    let want: Vec<FMat> = units_order_dividing(&q, 3).into_iter().map(|u| FMat::scalar(&q, 3, u)).collect();
    let mut got = center.clone();
    got.sort();
    let mut want = want;
    want.sort();
    assert_eq!(got, want);
    assert_eq!(got.len(), 3);
    eprintln!("center mod 7: {:?}", t.elapsed());
}

#[test]
fn center_words_over_small_rings() {
    for n in [5, 7, 8, 9] {
        let q = FiniteRing::integers_mod(n).unwrap();
        for d in [3, 4] {
            for u in units_order_dividing(&q, d as u64) {
                let w = center_word(&q, d, u).unwrap();
                assert_eq!(w.eval(&q, d).unwrap(), FMat::scalar(&q, d, u));
            }
        }
    }
}

#[test]
fn borevich_vavilov_mod_4() {
    let t = Instant::now();
    let q = FiniteRing::integers_mod(4).unwrap();
    let i = q.ideal(&[q.from_int(2)]);
    let bv = borevich_vavilov(&q, 3, &i, ELEMENT_CAP).unwrap();
    assert!(bv.equal, "{bv:?}");
    assert_eq!(bv.el_order, 43008);
    eprintln!("bv: {bv:?} {:?}", t.elapsed());
}

#[test]
fn normal_structure_mod_4() {
    let t = Instant::now();
    let q = FiniteRing::integers_mod(4).unwrap();
    let levels = normal_structure(&q, 3, ELEMENT_CAP).unwrap();
    for l in &levels {
        assert!(l.sandwiched, "{l:?}");
    }
    let zero = q.zero_ideal();
    let two = q.ideal(&[q.from_int(2)]);
    let (big, small) = sltil_index(&q, 3, &two, &zero, ELEMENT_CAP).unwrap();
    assert_eq!(big % small, 0);
    eprintln!("normal structure: {levels:?} index {} {:?}", big / small, t.elapsed());
}
