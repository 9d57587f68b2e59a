use std::collections::HashMap;

use super::two_step::{build_two_step_tate, subsets, TateBasisElement, TwoStepTate};
use super::TateData;
use crate::error::{Error, Result};
use crate::groebner::QuotientRing;
use crate::homalg::{GradedChainComplex, GradedFreeModule, GradedMap};
use crate::polyring::{Field, Poly, PolyRing};

/// The minimal two-step complete Tate complex on a window.
///
/// `T_i = (P_i ⊗ ∧^g G) ⊕ (P_{f-g-1-i})^∨` where `∨ = Hom(-, R(-σ))`, with
/// the top summand listed first in every `T_i`.
#[derive(Debug, Clone)]
pub struct CompleteTate<F: Field> {
    pub complex: GradedChainComplex<F>,
    pub p: TwoStepTate<F>,
    /// `α_i: P_i ⊗ ∧^g G -> (P_{f-g-i})^∨` for every `i` in the window
    /// where it can be nonzero.
    pub alpha: Vec<(i64, GradedMap<F>)>,
}

impl<F: Field> CompleteTate<F> {
    pub fn lo(&self) -> i64 {
        self.complex.lo
    }

    pub fn hi(&self) -> i64 {
        self.complex.hi
    }

    pub fn rank(&self, i: i64) -> usize {
        self.complex.rank(i)
    }

    pub fn alpha(&self, i: i64) -> Option<&GradedMap<F>> {
        self.alpha.iter().find(|(k, _)| *k == i).map(|(_, m)| m)
    }
}

/// Sign of the permutation sorting the concatenation of the given lists.
fn concat_sign(parts: &[&[usize]]) -> bool {
    let all: Vec<usize> = parts.iter().flat_map(|p| p.iter().copied()).collect();
    let mut inversions = 0usize;
    for a in 0..all.len() {
        for b in a + 1..all.len() {
            if all[a] > all[b] {
                inversions += 1;
            }
        }
    }
    inversions % 2 == 1
}

/// Determinant of a square polynomial matrix by cofactor expansion.
pub(crate) fn determinant<F: Field>(ring: &PolyRing<F>, m: &[Vec<Poly<F>>]) -> Poly<F> {
    let n = m.len();
    if n == 0 {
        return ring.one();
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = Poly::zero();
    for (c, a) in m[0].iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        let minor: Vec<Vec<Poly<F>>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|(k, _)| *k != c).map(|(_, p)| p.clone()).collect())
            .collect();
        let t = ring.mul(a, &determinant(ring, &minor));
        acc = if c % 2 == 0 { ring.add(&acc, &t) } else { ring.sub(&acc, &t) };
    }
    acc
}

/// Coefficients of `z_1 ∧ ... ∧ z_g = Σ_U det(C[U, :]) θ_U`.
pub fn wedge_of_cycles<F: Field>(data: &TateData<F>) -> HashMap<Vec<usize>, Poly<F>> {
    let r = data.ring.ring();
    let (f, g) = (data.f(), data.g());
    let mut out = HashMap::new();
    for u in subsets(f, g) {
        let m: Vec<Vec<Poly<F>>> = u.iter().map(|&i| (0..g).map(|j| data.cycles[j][i].clone()).collect()).collect();
        let d = data.ring.normal_form(&determinant(r, &m));
        if !d.is_zero() {
            out.insert(u, d);
        }
    }
    out
}

fn top_part(p: &TwoStepTate<impl Field>, i: i64) -> Vec<i64> {
    let gamma = p.data.gamma();
    if i < 0 {
        return Vec::new();
    }
    p.module(i as usize).twists.iter().map(|a| a + gamma).collect()
}

fn bottom_part(p: &TwoStepTate<impl Field>, i: i64) -> Vec<i64> {
    let (f, g) = (p.data.f() as i64, p.data.g() as i64);
    let k = f - g - 1 - i;
    if k < 0 {
        return Vec::new();
    }
    let sigma = p.data.sigma();
    p.module(k as usize).twists.iter().map(|a| sigma - a).collect()
}

/// `α_i` as a matrix from the basis of `P_i` to the dual basis of
/// `P_{f-g-i}`: `θ_S` goes to `θ_{S'} ↦ s_i · [θ_S ∧ z_1 ∧ ... ∧ z_g ∧ θ_{S'}]`
/// with `s_i = (-1)^{i(i-1)/2 + i g}`, read against `v_1 ∧ ... ∧ v_f`.
fn alpha_entries<F: Field>(
    p: &TwoStepTate<F>,
    wedge: &HashMap<Vec<usize>, Poly<F>>,
    i: usize,
) -> Vec<Vec<Poly<F>>> {
    let data = &p.data;
    let r = data.ring.ring();
    let (f, g) = (data.f(), data.g());
    let k = f - g - i;
    let source: &[TateBasisElement] = &p.bases[i];
    let target: &[TateBasisElement] = &p.bases[k];
    let mut entries = vec![vec![Poly::zero(); source.len()]; target.len()];
    let s_negative = ((i * (i.saturating_sub(1)) / 2) + i * g) % 2 == 1;
    for (c, e) in source.iter().enumerate() {
        if !e.is_exterior() {
            continue;
        }
        for (row, t) in target.iter().enumerate() {
            if !t.is_exterior() || e.subset.iter().any(|x| t.subset.contains(x)) {
                continue;
            }
            let u: Vec<usize> = (0..f).filter(|x| !e.subset.contains(x) && !t.subset.contains(x)).collect();
            let Some(det) = wedge.get(&u) else { continue };
            let negative = s_negative ^ concat_sign(&[&e.subset, &u, &t.subset]);
            entries[row][c] = if negative { r.neg(det) } else { det.clone() };
        }
    }
    entries
}

/// Builds `T_lo, ..., T_hi` with `τ_i = [[∂_i, 0], [α_i, -∂^∨_{f-g-i}]]`.
pub fn build_complete_tate<F: Field>(data: &TateData<F>, lo: i64, hi: i64) -> Result<CompleteTate<F>> {
    let (f, g) = (data.f() as i64, data.g() as i64);
    if g > f {
        return Err(Error::GExceedsF { f: data.f(), g: data.g() });
    }
    if lo > hi {
        return Err(Error::EmptyWindow { lo, hi });
    }
    let top_needed = hi.max(f - g - 1 - lo).max(1) as usize;
    let p = build_two_step_tate(data, top_needed)?;
    let ring: &QuotientRing<F> = &data.ring;
    let wedge = wedge_of_cycles(data);

    let modules: Vec<GradedFreeModule> = (lo..=hi)
        .map(|i| GradedFreeModule::new(top_part(&p, i)).direct_sum(&GradedFreeModule::new(bottom_part(&p, i))))
        .collect();
    let mut maps = Vec::new();
    let mut alpha = Vec::new();
    for i in lo + 1..=hi {
        let (st, sb) = (top_part(&p, i).len(), bottom_part(&p, i).len());
        let (tt, tb) = (top_part(&p, i - 1).len(), bottom_part(&p, i - 1).len());
        let mut entries = vec![vec![Poly::zero(); st + sb]; tt + tb];
        if i >= 1 {
            let d = p.differential(i as usize);
            for (r, row) in d.entries.iter().enumerate() {
                for (c, x) in row.iter().enumerate() {
                    entries[r][c] = x.clone();
                }
            }
        }
        let k = f - g - i;
        if k >= 1 {
            // -∂_k^T: (P_{k-1})^∨ -> (P_k)^∨
            let d = p.differential(k as usize);
            for (r, row) in d.entries.iter().enumerate() {
                for (c, x) in row.iter().enumerate() {
                    if !x.is_zero() {
                        entries[tt + c][st + r] = ring.ring().neg(x);
                    }
                }
            }
        }
        if i >= 0 && k >= 0 {
            let a = alpha_entries(&p, &wedge, i as usize);
            for (r, row) in a.iter().enumerate() {
                for (c, x) in row.iter().enumerate() {
                    entries[tt + r][c] = x.clone();
                }
            }
            let src = GradedFreeModule::new(top_part(&p, i));
            let tgt = GradedFreeModule::new(bottom_part(&p, i - 1));
            alpha.push((i, GradedMap::new(ring, src, tgt, a)?));
        }
        let idx = |j: i64| (j - lo) as usize;
        maps.push(GradedMap::new(ring, modules[idx(i)].clone(), modules[idx(i - 1)].clone(), entries)?);
    }
    let complex = GradedChainComplex::new(lo, modules, maps)?;
    Ok(CompleteTate { complex, p, alpha })
}
