mod common;

use common::*;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tatecx::groebner::{buchberger, QuotientRing};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn std_basis_sizes_match_hilbert_function(seed in 0u64..100_000) {
        let q = random_case(seed).ring;
        let h = q.hilbert_series(8);
        for j in 0..=8 {
            prop_assert_eq!(q.std_monomials(j).len(), h.values[j as usize]);
        }
    }

    #[test]
    fn artinian_iff_pure_powers_iff_dimension_zero(seed in 0u64..100_000, drop in 0usize..4) {
        let case = random_case(seed);
        let r = case.ring.ring().clone();
        // dropping the generators that mention one variable may destroy artinianity
        let v = drop % r.nvars();
        let gens: Vec<_> = case.ring.groebner_basis().polys.iter()
            .filter(|p| p.terms().iter().all(|(m, _)| m.0[v] == 0) || seed % 2 == 0)
            .cloned()
            .collect();
        let q = QuotientRing::new(r.clone(), &gens).unwrap();
        let leads = q.leading_monomials();
        let pure = (0..r.nvars()).all(|w| leads.iter().any(|m| m.pure_power_var() == Some(w)));
        prop_assert_eq!(q.is_artinian(), pure);
        prop_assert_eq!(q.is_artinian(), q.krull_dimension() == 0);
    }

    #[test]
    fn buchberger_ignores_input_order(seed in 0u64..100_000) {
        let case = random_case(seed);
        let r = case.ring.ring();
        let mut gens: Vec<_> = case.ring.groebner_basis().polys.clone();
        gens.extend(case.ideal.iter().cloned());
        let a = buchberger(r, &gens).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        gens.shuffle(&mut rng);
        let b = buchberger(r, &gens).unwrap();
        prop_assert_eq!(a.polys, b.polys);
    }
}
