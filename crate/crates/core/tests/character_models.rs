use std::sync::Arc;
use std::time::Instant;

use noether_core::character::{
    central_sample, character_table, round_trip, sample_ball, trace_checks, triple_model, validate_triple,
    word_ball, CharacterTriple, FiniteGroup, InducedTrace, IntMat, TripleJson, BALL_CAP,
};
use noether_core::depth::DepthBounds;
use noether_core::finite_ring::FiniteRing;
use noether_core::ideal::Ideal;
use noether_core::matgroup::{el_generators, generate_subgroup, FMat, ELEMENT_CAP};
use noether_core::ring::Ring;
use proptest::prelude::*;

fn z_ideal(n: i64) -> Ideal {
    let z = Ring::integers();
    Ideal::new(&z, vec![z.constant(n)]).unwrap()
}

fn triple_with_degree(k: i64, degree: u64) -> CharacterTriple {
    let probe = CharacterTriple { ring: Ring::integers(), d: 3, level: z_ideal(1), kernel: z_ideal(k), orbit: vec![] };
    let m = triple_model(&probe, ELEMENT_CAP, 7).unwrap().unwrap();
    let row = m.table().degrees().iter().position(|&d| d == degree).unwrap();
    CharacterTriple::from_table(&z_ideal(1), &z_ideal(k), &m, &[row]).unwrap()
}

#[test]
fn degree_seven_round_trip_on_radius_four_ball() {
    let start = Instant::now();
    let t = triple_with_degree(2, 7);
    assert!(validate_triple(&t, DepthBounds::default(), ELEMENT_CAP, 7).unwrap().passed);
    let phi = InducedTrace::new(&t, ELEMENT_CAP, 7).unwrap();
    let ball = word_ball(3, 4, BALL_CAP).unwrap();
    let sample = sample_ball(&ball, 40, 7);
    let central = central_sample(&phi, &ball, 8).unwrap();
    assert!(!central.is_empty());
    let f = |g: &IntMat| phi.eval_int(g);
    let report = trace_checks(&f, &sample, &central, 2).unwrap();
    assert!(report.passed, "{report:?}");
    assert!(report.trace.gram_min_eigenvalue >= -1e-8);
    let rt = round_trip(&phi, &ball).unwrap();
    assert!(rt.passed, "{rt:?}");
    assert_eq!((rt.kernel_generator.abs(), rt.level_generator.abs()), (2, 1));
    assert_eq!(rt.classes_hit, 6);
    assert!(start.elapsed().as_secs() < 180);
}

#[test]
fn mod_three_models_round_trip() {
    let ball = word_ball(3, 3, BALL_CAP).unwrap();
    let probe = CharacterTriple { ring: Ring::integers(), d: 3, level: z_ideal(1), kernel: z_ideal(3), orbit: vec![] };
    let m = triple_model(&probe, ELEMENT_CAP, 7).unwrap().unwrap();
    assert_eq!(m.group().order(), 5616);
    assert_eq!(m.table().characters.len(), 12);
    let degrees = m.table().degrees();
    assert_eq!(degrees.iter().map(|d| d * d).sum::<u64>(), 5616);
    // SL_3(F_3) is simple, so every nontrivial character recovers the full
    // congruence kernel of level 3.
    for row in 1..degrees.len() {
        let t = CharacterTriple::from_table(&z_ideal(1), &z_ideal(3), &m, &[row]).unwrap();
        assert!(validate_triple(&t, DepthBounds::default(), ELEMENT_CAP, 7).unwrap().passed);
        let phi = InducedTrace::new(&t, ELEMENT_CAP, 7).unwrap();
        let rt = round_trip(&phi, &ball).unwrap();
        assert!(rt.kernel_matches && rt.level_matches && rt.congruence_constant, "row {row}: {rt:?}");
        if rt.classes_hit == rt.classes_total {
            assert!(rt.orbit_matches, "row {row}: {rt:?}");
        }
    }
}

#[test]
fn triple_json_round_trip() {
    let t = triple_with_degree(2, 7);
    let j = TripleJson::from_triple(&t).unwrap();
    let text = serde_json::to_string(&j).unwrap();
    let back = TripleJson::parse_str(&text).unwrap().to_triple().unwrap();
    let r = validate_triple(&back, DepthBounds::default(), ELEMENT_CAP, 7).unwrap();
    assert!(r.passed);
    assert_eq!(TripleJson::from_triple(&back).unwrap(), j);
}

#[test]
fn orthogonality_on_corpus() {
    for (n, d) in [(2, 2), (3, 2), (4, 2), (5, 2), (2, 3), (3, 3)] {
        let q = Arc::new(FiniteRing::integers_mod(n).unwrap());
        let set = generate_subgroup(&q, d, &el_generators(&q, d), ELEMENT_CAP).unwrap();
        let g = FiniteGroup::from_set(q, &set).unwrap();
        let t = character_table(&g, 7).unwrap();
        let (first, second) = t.orthogonality_errors();
        assert!(first < 1e-6 && second < 1e-6, "Z/{n}, d={d}");
        assert_eq!(t.characters.len(), t.classes.len());
        assert_eq!(t.degrees().iter().map(|x| x * x).sum::<u64>() as usize, g.order());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn random_subgroups_satisfy_orthogonality(
        n in prop::sample::select(vec![2u64, 3, 4, 5, 6]),
        letters in prop::collection::vec((0usize..2, 1i64..6), 1..3),
        seed in 0u64..1000,
    ) {
        let q = Arc::new(FiniteRing::integers_mod(n).unwrap());
        let gens: Vec<FMat> = letters
            .iter()
            .map(|&(k, r)| if k == 0 { FMat::elementary(&q, 2, 0, 1, q.from_int(r)) } else { FMat::elementary(&q, 2, 1, 0, q.from_int(r)) })
            .collect();
        let set = generate_subgroup(&q, 2, &gens, ELEMENT_CAP).unwrap();
        let g = FiniteGroup::from_set(q, &set).unwrap();
        let t = character_table(&g, seed).unwrap();
        let (first, second) = t.orthogonality_errors();
        prop_assert!(first < 1e-6 && second < 1e-6);
        let sizes: usize = t.class_sizes.iter().sum();
        prop_assert_eq!(sizes, g.order());
        for chi in &t.characters {
            let norm: f64 = t.classes.iter().zip(&chi.values).map(|(c, v)| c.len() as f64 * v.norm_sqr()).sum();
            prop_assert!((norm - g.order() as f64).abs() < 1e-6);
        }
    }
}
