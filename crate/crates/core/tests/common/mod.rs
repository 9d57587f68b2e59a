#![allow(dead_code)]

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tatecx::groebner::QuotientRing;
use tatecx::polyring::{Field, Monomial, Poly, PolyRing, PolyRingSpec, PrimeField};

pub const P: u32 = 32003;

pub fn gf() -> PrimeField {
    PrimeField::new(P).unwrap()
}

pub fn ring(vars: &[&str]) -> Arc<PolyRing<PrimeField>> {
    PolyRing::new(PolyRingSpec::new(vars).unwrap(), gf())
}

pub fn quotient(vars: &[&str], c: &[&str]) -> Arc<QuotientRing<PrimeField>> {
    let r = ring(vars);
    let c = parse(&r, c);
    Arc::new(QuotientRing::new(r, &c).unwrap())
}

pub fn parse<F: Field>(r: &PolyRing<F>, s: &[&str]) -> Vec<Poly<F>> {
    s.iter().map(|t| r.parse(t).unwrap()).collect()
}

pub const EX_D_VARS: [&str; 5] = ["x1", "x2", "x3", "x4", "x5"];
pub const EX_D_C: [&str; 8] =
    ["x1^2 - x2*x3", "x2^2 - x3*x5", "x3^2 - x1*x4", "x4^2", "x5^2", "x3*x4", "x2*x5", "x4*x5"];
pub const EX_D_I: [&str; 2] = ["x1 + x2 + x4", "x2 + x3 + x5"];
pub const EX_D_A: [&str; 2] = [
    "x1^2 + x1*x4 - x2^2 - x2*x3 + 2*x2*x5 - x3^2 + x3*x4 + x3*x5 + x4*x5 + 2*x5^2",
    "x1*x4 + x2^2 + x2*x5 - x3^2 - x3*x4 - x3*x5 + x4^2 - x4*x5",
];
/// Columns of the coefficient matrix, one per cycle.
pub const EX_D_PHI: [[&str; 2]; 2] = [["x1 - x2", "-x3 + x4 + 2*x5"], ["x4", "x2 - x3 - x4"]];

pub fn ex_d() -> (Arc<QuotientRing<PrimeField>>, Vec<Poly<PrimeField>>) {
    let q = quotient(&EX_D_VARS, &EX_D_C);
    let i = parse(q.ring(), &EX_D_I);
    (q, i)
}

pub fn ex_d_phi(q: &QuotientRing<PrimeField>) -> Vec<Vec<Poly<PrimeField>>> {
    EX_D_PHI.iter().map(|col| parse(q.ring(), col)).collect()
}

/// A random homogeneous polynomial of degree `d` with up to `terms` terms.
pub fn random_form<R: Rng>(r: &PolyRing<PrimeField>, d: i64, terms: usize, rng: &mut R) -> Poly<PrimeField> {
    let mons = r.spec().monomials_of_degree(d);
    let picked: Vec<Monomial> = mons.choose_multiple(rng, terms.min(mons.len())).cloned().collect();
    r.from_terms(picked.into_iter().map(|m| (m, rng.gen_range(1..P as u64))).collect())
}

/// A random artinian instance: pure powers of every variable plus a few
/// random forms in `C`, and one or two random forms of degree at most 2 in
/// `I`. Every fourth seed gives a known qci family instead: `I` is
/// generated by variables whose squares lie in `C`.
pub struct Case {
    pub seed: u64,
    pub ring: Arc<QuotientRing<PrimeField>>,
    pub ideal: Vec<Poly<PrimeField>>,
}

const NAMES: [&str; 4] = ["x", "y", "z", "w"];

pub fn random_case(seed: u64) -> Case {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(1..=4usize);
    let r = ring(&NAMES[..n]);
    let qci_family = seed.is_multiple_of(4);
    let mut c = Vec::new();
    for v in 0..n {
        let k = if qci_family && v == 0 { 2 } else { rng.gen_range(2..=3u32) };
        c.push(r.pow(&r.var(v), k));
    }
    let ideal = if qci_family {
        // extra relations avoid x so that x stays an exact zero divisor
        if n > 1 {
            let sub = ring(&NAMES[1..n]);
            let g = random_form(&sub, 2, 2, &mut rng);
            let lifted: Vec<_> = g
                .terms()
                .iter()
                .map(|(m, k)| {
                    let mut e = vec![0];
                    e.extend_from_slice(&m.0);
                    (Monomial(e), *k)
                })
                .collect();
            c.push(r.from_terms(lifted));
        }
        vec![r.var(0)]
    } else {
        for _ in 0..rng.gen_range(0..=2) {
            let d = rng.gen_range(2..=3);
            c.push(random_form(&r, d, 3, &mut rng));
        }
        let count = rng.gen_range(1..=2);
        (0..count)
            .map(|_| {
                let d = rng.gen_range(1..=2);
                random_form(&r, d, 2, &mut rng)
            })
            .collect()
    };
    let q = Arc::new(QuotientRing::new(r, &c).unwrap());
    let ideal = ideal.into_iter().map(|p| q.normal_form(&p)).filter(|p| !p.is_zero()).collect::<Vec<_>>();
    let ideal = if ideal.is_empty() { vec![q.ring().var(0)] } else { ideal };
    Case { seed, ring: q, ideal }
}
