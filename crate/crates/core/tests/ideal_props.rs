use noether_core::ideal::Ideal;
use noether_core::ring::{Monomial, Polynomial, Ring, TermOrder};
use num_bigint::BigInt;
use proptest::prelude::*;

fn poly_strategy(nvars: usize, max_deg: u32, max_coeff: i64) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(
        (prop::collection::vec(0..=max_deg, nvars), -max_coeff..=max_coeff),
        1..4,
    )
    .prop_map(move |terms| {
        let terms = terms
            .into_iter()
            .filter(|(e, _)| e.iter().sum::<u32>() <= max_deg)
            .map(|(e, c)| (Monomial(e), BigInt::from(c)))
            .collect();
        Polynomial::from_terms(nvars, TermOrder::GrevLex, terms)
    })
}

fn ring(n: usize) -> Ring {
    Ring::polynomial(n)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn normal_forms_are_canonical(
        gens in prop::collection::vec(poly_strategy(2, 2, 4), 1..3),
        f in poly_strategy(2, 3, 6),
        mult in prop::collection::vec(poly_strategy(2, 1, 3), 3),
    ) {
        let r = ring(2);
        let i = Ideal::new(&r, gens.clone()).unwrap();
        for g in &gens {
            prop_assert!(i.contains(g).unwrap());
        }
        let nf = i.normal_form(&f).unwrap();
        prop_assert_eq!(i.normal_form(&nf).unwrap(), nf.clone());
        prop_assert!(i.contains(&f.sub(&nf).unwrap()).unwrap());
        let mut shifted = f.clone();
        for (g, m) in gens.iter().zip(&mult) {
            shifted = shifted.add(&g.mul(m).unwrap()).unwrap();
        }
        prop_assert_eq!(i.normal_form(&shifted).unwrap(), nf);
    }

    #[test]
    fn intersection_and_colon_laws(
        a in prop::collection::vec(poly_strategy(1, 3, 5), 1..3),
        b in prop::collection::vec(poly_strategy(1, 3, 5), 1..3),
        g in poly_strategy(1, 2, 4),
    ) {
        let r = ring(1);
        let i = Ideal::new(&r, a).unwrap();
        let j = Ideal::new(&r, b).unwrap();
        let ij = i.intersect(&j).unwrap();
        prop_assert!(ij.is_subset(&i).unwrap() && ij.is_subset(&j).unwrap());
        prop_assert!(i.product(&j).unwrap().is_subset(&ij).unwrap());
        if !g.is_zero() {
            let c = i.quotient_element(&g).unwrap();
            prop_assert!(i.is_subset(&c).unwrap());
            for p in c.gb().unwrap().basis() {
                prop_assert!(i.contains(&p.mul(&g).unwrap()).unwrap());
            }
            // Maximality: (I : g) * g = I ∩ (g).
            let back = Ideal::new(&r, c.gb().unwrap().basis().iter().map(|p| p.mul(&g).unwrap()).collect()).unwrap();
            let ig = i.intersect(&Ideal::principal(&r, g.clone()).unwrap()).unwrap();
            prop_assert!(back.equals(&ig).unwrap());
        }
    }
}
