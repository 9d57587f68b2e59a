mod common;

use common::*;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tatecx::homalg::linalg::{mul, rank, Matrix};
use tatecx::homalg::{GradedFreeModule, GradedMap};
use tatecx::polyring::{Field, Poly, PrimeField};
use tatecx::tate::{build_koszul, extract_tate_data};

fn random_map(
    q: &tatecx::groebner::QuotientRing<PrimeField>,
    source: &GradedFreeModule,
    target: &GradedFreeModule,
    rng: &mut ChaCha8Rng,
) -> GradedMap<PrimeField> {
    let r = q.ring();
    let entries = target
        .twists
        .iter()
        .map(|&b| {
            source
                .twists
                .iter()
                .map(|&a| if a >= b && rng.gen_bool(0.7) { q.normal_form(&random_form(r, a - b, 3, rng)) } else { Poly::zero() })
                .collect()
        })
        .collect();
    GradedMap::new(q, source.clone(), target.clone(), entries).unwrap()
}

fn random_module(rng: &mut ChaCha8Rng) -> GradedFreeModule {
    let n = rng.gen_range(1..=3);
    GradedFreeModule::new((0..n).map(|_| rng.gen_range(0..=3)).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn matrix_at_degree_respects_composition(seed in 0u64..100_000) {
        let q = random_case(seed).ring;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (a, b, c) = (random_module(&mut rng), random_module(&mut rng), random_module(&mut rng));
        let n = random_map(&q, &a, &b, &mut rng);
        let m = random_map(&q, &b, &c, &mut rng);
        let mn = m.compose(&q, &n);
        let field = q.field();
        for j in 0..=6 {
            let lhs = mn.matrix_at_degree(&q, j);
            let rhs = mul(field, &m.matrix_at_degree(&q, j), &n.matrix_at_degree(&q, j));
            prop_assert_eq!(lhs.rows, rhs.rows);
        }
    }

    #[test]
    fn rank_plus_nullity_on_differentials(seed in 0u64..100_000) {
        let case = random_case(seed);
        let k = build_koszul(&case.ring, &case.ideal).unwrap();
        let field = case.ring.field();
        for i in 1..=case.ideal.len() as i64 {
            for j in 0..=6 {
                let m: Matrix<u64> = k.differential(i).unwrap().matrix_at_degree(&case.ring, j);
                let ker = tatecx::homalg::linalg::kernel(field, &m);
                prop_assert_eq!(rank(field, &m) + ker.len(), m.ncols);
            }
        }
    }

    #[test]
    fn euler_characteristic_of_koszul_complexes(seed in 0u64..100_000) {
        let case = random_case(seed);
        let q = &case.ring;
        let k = build_koszul(q, &case.ideal).unwrap();
        let f = case.ideal.len() as i64;
        let h = k.homology(q, &(0..=f).collect::<Vec<_>>(), 0).unwrap();
        let top = q.top_degree().unwrap() + 3 * f;
        for j in 0..=top {
            let chi: i64 = (0..=f).map(|i| if i % 2 == 0 { 1 } else { -1 } * h.dim(i, j) as i64).sum();
            prop_assert_eq!(k.euler_characteristic(q, j), chi);
        }
    }

    #[test]
    fn cycle_count_is_invariant_under_change_of_basis(seed in 0u64..100_000) {
        let case = random_case(seed);
        let q = &case.ring;
        let data = extract_tate_data(q, &case.ideal, None, 0).unwrap();
        let g = data.g();
        prop_assume!(g > 0);
        let r = q.ring();
        let field = q.field();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        // unitriangular changes within each degree, plus ring multiples of lower-degree cycles
        let mut mixed = data.cycles.clone();
        for j in 0..g {
            for k in 0..g {
                if k == j || data.cycle_degrees[k] > data.cycle_degrees[j] || (data.cycle_degrees[k] == data.cycle_degrees[j] && k > j) {
                    continue;
                }
                let d = data.cycle_degrees[j] - data.cycle_degrees[k];
                let coef = q.normal_form(&random_form(r, d, 2, &mut rng));
                for i in 0..data.f() {
                    let t = r.mul(&coef, &mixed[k][i]);
                    mixed[j][i] = q.normal_form(&r.add(&mixed[j][i], &t));
                }
            }
            let s = field.random_nonzero(&mut rng);
            for i in 0..data.f() {
                mixed[j][i] = r.scale(&mixed[j][i], &s);
            }
        }
        let again = extract_tate_data(q, &data.generators, Some(&mixed), 0).unwrap();
        prop_assert_eq!(again.g(), g);
    }
}
