use num_complex::Complex64;
use proptest::prelude::*;

use noether_core::dual::{
    all_subgroups, classify_measures, haar, invariant_subgroup_check, translated_haar_transform, FiniteModel,
    Measure, MODEL_CAP,
};
use noether_core::finite_ring::FiniteRing;
use noether_core::ideal::Ideal;
use noether_core::matgroup::FMat;
use noether_core::ring::Ring;

fn dual_numbers() -> FiniteRing {
    let r = Ring::with_names(1, &["t"]);
    FiniteRing::from_ideal(&Ideal::parse(&r, &["2", "t^2"]).unwrap()).unwrap()
}

#[test]
fn dual_numbers_model_factors() {
    let q = dual_numbers();
    let m = FiniteModel::build(&q, 2, MODEL_CAP).unwrap();
    assert_eq!(m.factors(), &[2, 2, 2, 2]);
    assert!(m.verify_pairing());
}

#[test]
fn classification_matches_orbits() {
    let rings = [FiniteRing::integers_mod(4).unwrap(), FiniteRing::integers_mod(6).unwrap(), dual_numbers()];
    for q in &rings {
        for d in [2, 3] {
            let m = FiniteModel::build(q, d, MODEL_CAP).unwrap();
            let c = classify_measures(&m).unwrap();
            assert!(c.bijection, "{} d={d}", q.label());
            assert_eq!(c.ergodic_parametric, c.orbits.len());
            for p in &c.parametric {
                assert!(p.invariant);
            }
        }
    }
}

#[test]
fn invariant_subgroups_are_ideal_powers() {
    let cases = [(FiniteRing::integers_mod(4).unwrap(), 2), (FiniteRing::integers_mod(2).unwrap(), 3)];
    for (q, d) in &cases {
        let m = FiniteModel::build(q, *d, MODEL_CAP).unwrap();
        let subs = all_subgroups(&m, 10_000).unwrap();
        let mut invariant = 0;
        for s in &subs {
            let c = invariant_subgroup_check(&m, s);
            assert_eq!(c.invariant, c.equals_ideal_power);
            invariant += usize::from(c.invariant);
        }
        assert_eq!(invariant, q.all_ideals().len());
    }
}

#[test]
fn fourier_of_translated_haar() {
    for n in [4, 6] {
        let q = FiniteRing::integers_mod(n).unwrap();
        let m = FiniteModel::build(&q, 2, MODEL_CAP).unwrap();
        for ideal in q.all_ideals() {
            let h = m.annihilator_of_ideal(&ideal);
            let ann_h = m.annihilator_of_dual(&h);
            for t in 0..m.size() {
                let mu = haar(&h).translate(&m, t);
                for k in 0..m.size() {
                    let gamma = m.vector(k);
                    let want = translated_haar_transform(&m, &ann_h, t, &gamma);
                    assert!((mu.fourier(&m, &gamma) - want).norm() <= 1e-9);
                }
            }
        }
    }
}

fn random_element(q: &FiniteRing, d: usize, word: &[(usize, usize, u32)]) -> FMat {
    let mut g = FMat::identity(q, d);
    for &(i, j, r) in word {
        if i != j {
            g = g.mul(q, &FMat::elementary(q, d, i, j, r % q.order() as u32));
        }
    }
    g
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn dual_action_is_an_action(
        w1 in prop::collection::vec((0usize..2, 0usize..2, 0u32..6), 0..6),
        w2 in prop::collection::vec((0usize..2, 0usize..2, 0u32..6), 0..6),
        chi in 0usize..36,
    ) {
        let q = FiniteRing::integers_mod(6).unwrap();
        let m = FiniteModel::build(&q, 2, MODEL_CAP).unwrap();
        let (g1, g2) = (random_element(&q, 2, &w1), random_element(&q, 2, &w2));
        let c = m.dual_element(chi);
        let lhs = m.dual_action(&g1.mul(&q, &g2), &c).unwrap();
        let rhs = m.dual_action(&g1, &m.dual_action(&g2, &c).unwrap()).unwrap();
        prop_assert_eq!(&lhs, &rhs);
        let gi = g1.inverse(&q).unwrap();
        let moved = m.dual_action(&g1, &c).unwrap();
        for k in 0..m.size() {
            let v = m.vector(k);
            prop_assert_eq!(m.pairing(&moved, &v), m.pairing(&c, &m.act(&gi, &v)));
        }
    }

    #[test]
    fn convolution_theorem(a in prop::collection::vec(0usize..16, 1..5), b in prop::collection::vec(0usize..16, 1..5), k in 0usize..16) {
        let q = FiniteRing::integers_mod(4).unwrap();
        let m = FiniteModel::build(&q, 2, MODEL_CAP).unwrap();
        let (mu, nu) = (Measure::uniform(&a), Measure::uniform(&b));
        let gamma = m.vector(k);
        let lhs: Complex64 = mu.convolve(&m, &nu).fourier(&m, &gamma);
        prop_assert!((lhs - mu.fourier(&m, &gamma) * nu.fourier(&m, &gamma)).norm() <= 1e-9);
        prop_assert!(mu.convolve(&m, &nu).has_atoms());
    }
}
