use std::collections::HashMap;
use std::sync::Arc;

use serde::Serialize;

use super::TateData;
use crate::error::{Error, Result};
use crate::groebner::QuotientRing;
use crate::homalg::{GradedChainComplex, GradedFreeModule, GradedMap};
use crate::polyring::{Field, Poly};

/// Basis element `θ_S ⊗ w_1^(q_1) ... w_g^(q_g)` of the two-step Tate complex.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct TateBasisElement {
    pub subset: Vec<usize>,
    pub powers: Vec<u32>,
}

impl TateBasisElement {
    pub fn homological_degree(&self) -> usize {
        self.subset.len() + 2 * self.powers.iter().sum::<u32>() as usize
    }

    pub fn is_exterior(&self) -> bool {
        self.powers.iter().all(|&q| q == 0)
    }
}

/// Sorted `p`-subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, p: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, p: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == p {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < p - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if p <= n {
        rec(0, n, p, &mut Vec::new(), &mut out);
    }
    out
}

/// Exponent tuples of length `g` summing to `total`, lexicographically
/// largest first.
pub fn compositions(g: usize, total: u32) -> Vec<Vec<u32>> {
    fn rec(k: usize, g: usize, rem: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if k + 1 == g {
            cur.push(rem);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for e in (0..=rem).rev() {
            cur.push(e);
            rec(k + 1, g, rem - e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if g == 0 {
        if total == 0 {
            out.push(Vec::new());
        }
    } else {
        rec(0, g, total, &mut Vec::new(), &mut out);
    }
    out
}

/// Basis of `P_i`: by total divided-power degree, then exponent tuple, then
/// exterior subset.
pub fn tate_basis(f: usize, g: usize, i: usize) -> Vec<TateBasisElement> {
    let mut out = Vec::new();
    for qt in 0..=(i / 2) {
        let p = i - 2 * qt;
        if p > f {
            continue;
        }
        for q in compositions(g, qt as u32) {
            for s in subsets(f, p) {
                out.push(TateBasisElement { subset: s, powers: q.clone() });
            }
        }
    }
    out
}

/// First `n + 1` coefficients of `(1 + t)^f / (1 - t^2)^g`.
pub fn tate_rank_series(f: usize, g: usize, n: usize) -> Vec<u64> {
    let mut c = vec![0u64; n + 1];
    c[0] = 1;
    for _ in 0..f {
        for k in (1..=n).rev() {
            c[k] += c[k - 1];
        }
    }
    for _ in 0..g {
        for k in 2..=n {
            c[k] += c[k - 2];
        }
    }
    c
}

/// `(-1)^{#{s in S : s > i}}` and the sorted union, or `None` when `i ∈ S`.
pub(crate) fn wedge_right(s: &[usize], i: usize) -> Option<(bool, Vec<usize>)> {
    if s.contains(&i) {
        return None;
    }
    let after = s.iter().filter(|&&x| x > i).count();
    let mut u = s.to_vec();
    let pos = u.partition_point(|&x| x < i);
    u.insert(pos, i);
    Some((after % 2 == 1, u))
}

/// The two-step Tate complex `P = ∧F ⊗ D G` truncated at `N`.
///
/// The complex carries `P_{N+1}` as well and a zero module in index `-1`,
/// so `H_i(P)` is exact for `0 <= i <= N`.
#[derive(Debug, Clone)]
pub struct TwoStepTate<F: Field> {
    pub data: TateData<F>,
    pub bound: usize,
    pub complex: GradedChainComplex<F>,
    pub bases: Vec<Vec<TateBasisElement>>,
}

impl<F: Field> TwoStepTate<F> {
    pub fn ring(&self) -> &Arc<QuotientRing<F>> {
        &self.data.ring
    }

    pub fn rank(&self, i: i64) -> usize {
        self.complex.rank(i)
    }

    pub fn module(&self, i: usize) -> GradedFreeModule {
        self.complex.module(i as i64)
    }

    /// `∂_i: P_i -> P_{i-1}` for `1 <= i <= N + 1`.
    pub fn differential(&self, i: usize) -> &GradedMap<F> {
        self.complex.differential(i as i64).expect("index within the built range")
    }

    /// The subcomplex `P_0 .. P_N` padded by zero modules on both sides.
    pub fn bounded(&self) -> Result<GradedChainComplex<F>> {
        let n = self.bound as i64;
        let mut modules: Vec<GradedFreeModule> = (-1..=n).map(|i| self.complex.module(i)).collect();
        modules.push(GradedFreeModule::zero());
        let mut maps: Vec<GradedMap<F>> = (0..=n).map(|i| self.complex.differential(i).unwrap().clone()).collect();
        maps.push(GradedMap::zero(GradedFreeModule::zero(), self.complex.module(n)));
        GradedChainComplex::new(-1, modules, maps)
    }
}

pub(crate) fn twist_of(data: &TateData<impl Field>, e: &TateBasisElement) -> i64 {
    e.subset.iter().map(|&s| data.generator_degrees[s]).sum::<i64>()
        + e.powers.iter().zip(&data.cycle_degrees).map(|(&q, &d)| q as i64 * d).sum::<i64>()
}

/// Matrix of `∂_i` between the given bases of `P_i` and `P_{i-1}`.
fn differential_entries<F: Field>(
    data: &TateData<F>,
    source: &[TateBasisElement],
    target: &[TateBasisElement],
) -> Vec<Vec<Poly<F>>> {
    let ring = &data.ring;
    let r = ring.ring();
    let index: HashMap<&TateBasisElement, usize> = target.iter().enumerate().map(|(k, e)| (e, k)).collect();
    let mut entries = vec![vec![Poly::zero(); source.len()]; target.len()];
    for (c, e) in source.iter().enumerate() {
        for (k, &s) in e.subset.iter().enumerate() {
            let mut sub = e.subset.clone();
            sub.remove(k);
            let t = TateBasisElement { subset: sub, powers: e.powers.clone() };
            let row = index[&t];
            let b = &data.generators[s];
            let term = if k % 2 == 0 { b.clone() } else { r.neg(b) };
            entries[row][c] = r.add(&entries[row][c], &term);
        }
        let outer_negative = e.subset.len() % 2 == 1;
        for (j, z) in data.cycles.iter().enumerate() {
            if e.powers[j] == 0 {
                continue;
            }
            let mut powers = e.powers.clone();
            powers[j] -= 1;
            for (i, cij) in z.iter().enumerate() {
                if cij.is_zero() {
                    continue;
                }
                let Some((neg, sub)) = wedge_right(&e.subset, i) else { continue };
                let t = TateBasisElement { subset: sub, powers: powers.clone() };
                let row = index[&t];
                let term = if neg ^ outer_negative { r.neg(cij) } else { cij.clone() };
                entries[row][c] = r.add(&entries[row][c], &term);
            }
        }
    }
    for row in entries.iter_mut() {
        for p in row.iter_mut() {
            *p = ring.normal_form(p);
        }
    }
    entries
}

/// Builds `P_0, ..., P_{N+1}` with
/// `∂(θ_S ⊗ w^(q)) = d(θ_S) ⊗ w^(q) + (-1)^|S| Σ_j (θ_S ∧ z_j) ⊗ w^(q - e_j)`.
pub fn build_two_step_tate<F: Field>(data: &TateData<F>, n: usize) -> Result<TwoStepTate<F>> {
    if n < 1 {
        return Err(Error::Shape("the homological bound must be at least 1".into()));
    }
    let (f, g) = (data.f(), data.g());
    let bases: Vec<Vec<TateBasisElement>> = (0..=n + 1).map(|i| tate_basis(f, g, i)).collect();
    let modules: Vec<GradedFreeModule> = bases
        .iter()
        .map(|b| GradedFreeModule::new(b.iter().map(|e| twist_of(data, e)).collect()))
        .collect();
    let mut all_modules = vec![GradedFreeModule::zero()];
    all_modules.extend(modules.iter().cloned());
    let mut maps = vec![GradedMap::zero(modules[0].clone(), GradedFreeModule::zero())];
    for i in 1..=n + 1 {
        let entries = differential_entries(data, &bases[i], &bases[i - 1]);
        maps.push(GradedMap::new(&data.ring, modules[i].clone(), modules[i - 1].clone(), entries)?);
    }
    let complex = GradedChainComplex::new(-1, all_modules, maps)?;
    Ok(TwoStepTate { data: data.clone(), bound: n, complex, bases })
}

/// The Koszul complex `0 -> ∧^f F -> ... -> F -> R -> 0` on `gens`, with
/// zero modules in indices `-1` and `f + 1`.
pub fn build_koszul<F: Field>(ring: &Arc<QuotientRing<F>>, gens: &[Poly<F>]) -> Result<GradedChainComplex<F>> {
    let mut degrees = Vec::with_capacity(gens.len());
    for (k, b) in gens.iter().enumerate() {
        if ring.contains(b) {
            return Err(Error::ZeroGenerator(k));
        }
        match ring.ring().require_homogeneous(b)? {
            Some(d) => degrees.push(d),
            None => return Err(Error::ZeroGenerator(k)),
        }
    }
    let data = TateData::from_parts_unchecked(ring.clone(), gens.iter().map(|b| ring.normal_form(b)).collect(), degrees, vec![], vec![]);
    let f = gens.len();
    let bases: Vec<Vec<TateBasisElement>> = (0..=f).map(|p| tate_basis(f, 0, p)).collect();
    let modules: Vec<GradedFreeModule> = bases
        .iter()
        .map(|b| GradedFreeModule::new(b.iter().map(|e| twist_of(&data, e)).collect()))
        .collect();
    let mut all = vec![GradedFreeModule::zero()];
    all.extend(modules.iter().cloned());
    all.push(GradedFreeModule::zero());
    let mut maps = vec![GradedMap::zero(modules[0].clone(), GradedFreeModule::zero())];
    for p in 1..=f {
        let entries = differential_entries(&data, &bases[p], &bases[p - 1]);
        maps.push(GradedMap::new(ring, modules[p].clone(), modules[p - 1].clone(), entries)?);
    }
    maps.push(GradedMap::zero(GradedFreeModule::zero(), modules[f].clone()));
    GradedChainComplex::new(-1, all, maps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{PolyRing, PolyRingSpec, PrimeField};
    use proptest::prelude::*;

    fn binom(n: u64, k: u64) -> u64 {
        if k > n {
            return 0;
        }
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn rank_series_examples() {
        assert_eq!(tate_rank_series(2, 2, 5), vec![1, 2, 3, 4, 5, 6]);
        assert_eq!(tate_rank_series(3, 0, 4), vec![1, 3, 3, 1, 0]);
        assert_eq!(tate_rank_series(1, 1, 4), vec![1, 1, 1, 1, 1]);
    }

    #[test]
    fn basis_orders() {
        assert_eq!(subsets(3, 2), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert_eq!(compositions(2, 2), vec![vec![2, 0], vec![1, 1], vec![0, 2]]);
        assert_eq!(compositions(0, 1), Vec::<Vec<u32>>::new());
        let b = tate_basis(2, 1, 2);
        assert_eq!(b[0], TateBasisElement { subset: vec![0, 1], powers: vec![0] });
        assert_eq!(b[1], TateBasisElement { subset: vec![], powers: vec![1] });
    }

    #[test]
    fn wedge_signs() {
        assert_eq!(wedge_right(&[0, 2], 1), Some((true, vec![0, 1, 2])));
        assert_eq!(wedge_right(&[0], 1), Some((false, vec![0, 1])));
        assert_eq!(wedge_right(&[1], 1), None);
    }

    #[test]
    fn koszul_on_two_variables() {
        let r = PolyRing::new(PolyRingSpec::new(&["x", "y"]).unwrap(), PrimeField::new(32003).unwrap());
        let q = Arc::new(QuotientRing::new(r.clone(), &[]).unwrap());
        let k = build_koszul(&q, &[r.var(0), r.var(1)]).unwrap();
        assert_eq!(k.module(2).twists, vec![2]);
        let d2 = k.differential(2).unwrap();
        assert_eq!(d2.entries, vec![vec![r.neg(&r.var(1))], vec![r.var(0)]]);
        k.verify(&q).unwrap();
        let h = k.homology(&q, &[1, 2], 6).unwrap();
        assert!(h.entries.is_empty());
        assert_eq!(h.up_to_degree, Some(6));
        assert!(matches!(build_koszul(&q, &[Poly::zero()]), Err(Error::ZeroGenerator(0))));
    }

    proptest! {
        #[test]
        fn basis_size_matches_binomial_formula(f in 0usize..6, g in 0usize..4, i in 0usize..8) {
            let expected: u64 = (0..=i / 2)
                .map(|q| binom(f as u64, (i - 2 * q) as u64) * if g == 0 { (q == 0) as u64 } else { binom((g + q - 1) as u64, q as u64) })
                .sum();
            prop_assert_eq!(tate_basis(f, g, i).len() as u64, expected);
            prop_assert_eq!(tate_rank_series(f, g, i)[i], expected);
        }
    }
}
