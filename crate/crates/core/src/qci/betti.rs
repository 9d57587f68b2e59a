use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::QuotientRing;
use crate::homalg::HomologyTable;
use crate::polyring::{Field, Poly, PolyRing};
use crate::tate::{build_two_step_tate, TateData};

/// How each monomial of `a_j` is attributed to a variable when writing
/// `a_j = Σ_i c_ij x_i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Splitting {
    /// The lowest-index variable dividing the monomial.
    #[default]
    LowestIndex,
    /// A seeded random dividing variable.
    Random(u64),
}

/// Graded Betti numbers `b_{i,j} = dim Tor_i^S(R, k)_j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BettiTable {
    pub hom_bound: usize,
    pub table: HomologyTable,
}

impl BettiTable {
    pub fn get(&self, i: i64, j: i64) -> usize {
        self.table.dim(i, j)
    }

    pub fn total(&self, i: i64) -> usize {
        self.table.total(i)
    }

    /// Nonzero `((i, j), b_ij)` pairs in `(i, j)` order.
    pub fn entries(&self) -> Vec<((i64, i64), usize)> {
        self.table.entries.iter().map(|e| ((e.index, e.degree), e.dim)).collect()
    }
}

/// `a = Σ_i c_i x_i` with the chosen attribution of monomials.
pub(crate) fn split_by_variables<F: Field>(ring: &PolyRing<F>, a: &Poly<F>, splitting: Splitting, rng: &mut ChaCha8Rng) -> Vec<Poly<F>> {
    let n = ring.nvars();
    let mut parts: Vec<Vec<_>> = vec![Vec::new(); n];
    for (m, c) in a.terms() {
        let support: Vec<usize> = m.support().collect();
        let v = match splitting {
            Splitting::LowestIndex => support[0],
            Splitting::Random(_) => support[rng.gen_range(0..support.len())],
        };
        let mut e = m.clone();
        e.0[v] -= 1;
        parts[v].push((e, c.clone()));
    }
    parts.into_iter().map(|t| ring.from_terms(t)).collect()
}

/// Betti numbers of `R = Q/C` over the complete intersection `S = Q/A`,
/// read off the Tate resolution of `k` over `S` tensored with `R`.
///
/// For non-artinian `R` the table covers internal degrees up to
/// `degree_bound` only.
pub fn betti_over_ci<F: Field>(
    ring: &Arc<PolyRing<F>>,
    a: &[Poly<F>],
    c: &[Poly<F>],
    hom_bound: usize,
    degree_bound: i64,
    splitting: Splitting,
) -> Result<BettiTable> {
    let a: Vec<Poly<F>> = a.iter().filter(|p| !p.is_zero()).cloned().collect();
    for p in &a {
        ring.require_homogeneous(p)?;
        if p.terms().iter().any(|(m, _)| m.total_exponent() < 2) {
            return Err(Error::NotContained(format!("A is not inside m^2: {}", ring.print(p))));
        }
    }
    let s = QuotientRing::new(ring.clone(), &a)?;
    if s.krull_dimension() + a.len() != ring.nvars() {
        return Err(Error::NotCompleteIntersection(format!(
            "dim Q/A = {} but {} - {} was expected",
            s.krull_dimension(),
            ring.nvars(),
            a.len()
        )));
    }
    let r = Arc::new(QuotientRing::new(ring.clone(), c)?);
    if let Some(p) = a.iter().find(|p| !r.contains(p)) {
        return Err(Error::NotContained(format!("A is not inside C: {}", ring.print(p))));
    }
    let seed = match splitting {
        Splitting::Random(s) => s,
        Splitting::LowestIndex => 0,
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // entries live in R, where some variables may vanish; degrees come from Q
    let vars: Vec<Poly<F>> = (0..ring.nvars()).map(|v| r.normal_form(&ring.var(v))).collect();
    let var_degrees: Vec<i64> = ring.spec().weights.iter().map(|&w| w as i64).collect();
    let mut cycles = Vec::with_capacity(a.len());
    let mut cycle_degrees = Vec::with_capacity(a.len());
    for p in &a {
        cycle_degrees.push(ring.require_homogeneous(p)?.unwrap_or(0));
        let parts = split_by_variables(ring, p, splitting, &mut rng);
        cycles.push(parts.iter().map(|c| r.normal_form(c)).collect::<Vec<_>>());
    }
    let data = TateData::from_parts_unchecked(r.clone(), vars, var_degrees, cycles, cycle_degrees);
    let p = build_two_step_tate(&data, hom_bound.max(1))?;
    let indices: Vec<i64> = (0..=hom_bound as i64).collect();
    let table = p.complex.homology(&r, &indices, degree_bound)?;
    Ok(BettiTable { hom_bound, table })
}
