use num_bigint::BigInt;
use proptest::prelude::*;

use noether_core::finite_ring::FiniteRing;
use noether_core::ideal::Ideal;
use noether_core::matgroup::normal_form::{normal_form_conjugate, verify, IntegerBackend};
use noether_core::matgroup::{fin_sltil_level, in_sltil, sltil_level, ElementaryWord, FMat, RMatrix};
use noether_core::ring::Ring;

fn letters(max_len: usize, bound: i64) -> impl Strategy<Value = Vec<(usize, usize, i64)>> {
    prop::collection::vec((0usize..3, 0usize..3, -bound..=bound), 0..=max_len)
        .prop_map(|v| v.into_iter().filter(|(i, j, _)| i != j).collect())
}

fn int_word(z: &Ring, ls: &[(usize, usize, i64)]) -> ElementaryWord<noether_core::ring::Polynomial> {
    let mut w = ElementaryWord::new();
    for &(i, j, r) in ls {
        w.push(i, j, z.constant(r));
    }
    w
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn normal_form_of_random_words(ls in letters(12, 5)) {
        let z = Ring::integers();
        let g = int_word(&z, &ls).eval(&z, 3).unwrap();
        let m: Vec<Vec<BigInt>> = g.to_ints().unwrap();
        let nf = normal_form_conjugate(&IntegerBackend, &m).unwrap();
        prop_assert!(verify(&IntegerBackend, &m, &nf));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn word_evaluation_is_a_homomorphism(a in letters(6, 4), b in letters(6, 4)) {
        let z = Ring::integers();
        let (wa, wb) = (int_word(&z, &a), int_word(&z, &b));
        let prod = wa.concat(&wb).eval(&z, 3).unwrap();
        prop_assert_eq!(prod, wa.eval(&z, 3).unwrap().mul(&z, &wb.eval(&z, 3).unwrap()).unwrap());
        let inv = wa.inverse().eval(&z, 3).unwrap();
        prop_assert_eq!(inv, wa.eval(&z, 3).unwrap().inverse(&z).unwrap());
    }

    #[test]
    fn sltil_level_is_minimal_over_z(ls in letters(6, 4), m in 1i64..40) {
        let z = Ring::integers();
        let g: RMatrix = int_word(&z, &ls).eval(&z, 3).unwrap();
        let j = Ideal::parse(&z, &[&m.to_string()]).unwrap();
        let ints = g.to_ints().unwrap();
        let big = BigInt::from(m);
        let scalar = (0..3).all(|r| (0..3).all(|c| {
            let x = if r == c { &ints[r][r] - &ints[0][0] } else { ints[r][c].clone() };
            (x % &big) == BigInt::from(0)
        }));
        prop_assert_eq!(scalar, sltil_level(&z, &g).unwrap().is_subset(&j).unwrap());
    }

    #[test]
    fn sltil_level_is_minimal_mod_12(ls in letters(8, 11), gen in 0i64..12) {
        let q = FiniteRing::integers_mod(12).unwrap();
        let mut g = FMat::identity(&q, 3);
        for &(i, j, r) in &ls {
            g = g.mul(&q, &FMat::elementary(&q, 3, i, j, q.from_int(r)));
        }
        let j = q.ideal(&[q.from_int(gen)]);
        prop_assert_eq!(in_sltil(&q, &g, &j), fin_sltil_level(&q, &g).is_subset(&j));
    }
}
