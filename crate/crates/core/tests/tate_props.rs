mod common;

use common::*;
use proptest::prelude::*;
use tatecx::tate::{build_complete_tate, build_two_step_tate, extract_tate_data, tate_basis, tate_rank_series};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn two_step_complex_is_a_minimal_complex(seed in 0u64..100_000) {
        let case = random_case(seed);
        let q = &case.ring;
        let data = extract_tate_data(q, &case.ideal, None, 0).unwrap();
        let n = data.g() + 3;
        let p = build_two_step_tate(&data, n).unwrap();
        prop_assert!(p.complex.verify(q).is_ok());
        prop_assert!(p.complex.is_minimal(q));
        let idx: Vec<i64> = (0..=n as i64).collect();
        let h = p.complex.homology(q, &idx, 0).unwrap();
        let quot = q.extend(&case.ideal).unwrap();
        for j in 0..=q.top_degree().unwrap() {
            prop_assert_eq!(h.dim(0, j), quot.dim(j));
        }
        prop_assert!(h.is_zero_at(1));
    }

    #[test]
    fn rank_series_counts_basis(f in 0usize..=6, g in 0usize..=4) {
        let series = tate_rank_series(f, g, 8);
        for (i, &s) in series.iter().enumerate() {
            prop_assert_eq!(tate_basis(f, g, i).len() as u64, s);
        }
    }

    #[test]
    fn complete_tate_is_a_complex_with_mirrored_ranks(seed in 0u64..100_000) {
        let case = random_case(seed);
        let q = &case.ring;
        let data = extract_tate_data(q, &case.ideal, None, 0).unwrap();
        let (f, g) = (data.f() as i64, data.g() as i64);
        prop_assume!(g <= f);
        let (lo, hi) = (-g - 2, f + 2);
        let t = build_complete_tate(&data, lo, hi).unwrap();
        // the identity for α is equivalent to τ² = 0 on the cone
        prop_assert!(t.complex.verify(q).is_ok());
        let m = f - g - 1;
        for i in lo..=hi {
            if (lo..=hi).contains(&(m - i)) {
                prop_assert_eq!(t.rank(i), t.rank(m - i));
            }
        }
        if g >= 1 {
            prop_assert!(t.complex.is_minimal(q));
        }
    }
}
