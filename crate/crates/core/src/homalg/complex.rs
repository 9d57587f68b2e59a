use std::collections::HashMap;

use rayon::prelude::*;
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use super::linalg::{is_zero, mul, rank};
use super::module::{GradedFreeModule, GradedMap};
use crate::error::{Error, Result};
use crate::groebner::QuotientRing;
use crate::polyring::Field;

/// A bounded chain complex `C_hi -> ... -> C_lo` of graded free modules
/// with differentials of degree zero. Outside `[lo, hi]` the modules are
/// zero.
#[derive(Debug, Clone)]
pub struct GradedChainComplex<F: Field> {
    pub lo: i64,
    pub hi: i64,
    modules: Vec<GradedFreeModule>,
    /// `maps[k]` is `d_{lo+1+k}: C_{lo+1+k} -> C_{lo+k}`.
    maps: Vec<GradedMap<F>>,
}

/// One nonzero homology dimension `dim H_i(C)_j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomologyEntry {
    pub index: i64,
    pub degree: i64,
    pub dim: usize,
}

/// Homology dimensions over a set of indices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomologyTable {
    pub indices: Vec<i64>,
    /// Nonzero entries sorted by `(index, degree)`; serialized as a map
    /// `"i,j" -> dim`.
    #[serde(rename = "dims", serialize_with = "keyed_entries")]
    pub entries: Vec<HomologyEntry>,
    /// When set, only degrees up to this bound were examined.
    pub up_to_degree: Option<i64>,
}

fn keyed_entries<S: Serializer>(entries: &[HomologyEntry], s: S) -> std::result::Result<S::Ok, S::Error> {
    let mut map = s.serialize_map(Some(entries.len()))?;
    for e in entries {
        map.serialize_entry(&format!("{},{}", e.index, e.degree), &e.dim)?;
    }
    map.end()
}

impl HomologyTable {
    pub fn is_zero_at(&self, i: i64) -> bool {
        !self.entries.iter().any(|e| e.index == i)
    }

    pub fn dim(&self, i: i64, j: i64) -> usize {
        self.entries.iter().find(|e| e.index == i && e.degree == j).map_or(0, |e| e.dim)
    }

    pub fn total(&self, i: i64) -> usize {
        self.entries.iter().filter(|e| e.index == i).map(|e| e.dim).sum()
    }

    pub fn first_nonzero(&self) -> Option<&HomologyEntry> {
        self.entries.first()
    }
}

impl<F: Field> GradedChainComplex<F> {
    pub fn new(lo: i64, modules: Vec<GradedFreeModule>, maps: Vec<GradedMap<F>>) -> Result<Self> {
        if modules.is_empty() {
            return Err(Error::Shape("a complex needs at least one module".into()));
        }
        let hi = lo + modules.len() as i64 - 1;
        if maps.len() + 1 != modules.len() {
            return Err(Error::Shape(format!(
                "{} modules need {} differentials, got {}",
                modules.len(),
                modules.len() - 1,
                maps.len()
            )));
        }
        for (k, d) in maps.iter().enumerate() {
            if d.source != modules[k + 1] || d.target != modules[k] {
                return Err(Error::Shape(format!(
                    "differential {} does not match its modules",
                    lo + 1 + k as i64
                )));
            }
        }
        Ok(GradedChainComplex { lo, hi, modules, maps })
    }

    pub fn module(&self, i: i64) -> GradedFreeModule {
        if i < self.lo || i > self.hi {
            GradedFreeModule::zero()
        } else {
            self.modules[(i - self.lo) as usize].clone()
        }
    }

    pub fn modules(&self) -> &[GradedFreeModule] {
        &self.modules
    }

    pub fn rank(&self, i: i64) -> usize {
        self.module(i).rank()
    }

    /// `d_i: C_i -> C_{i-1}`, for `lo < i <= hi`.
    pub fn differential(&self, i: i64) -> Option<&GradedMap<F>> {
        if i <= self.lo || i > self.hi {
            None
        } else {
            Some(&self.maps[(i - self.lo - 1) as usize])
        }
    }

    /// Checks `d_{i-1} ∘ d_i = 0` for every composable pair.
    pub fn verify(&self, ring: &QuotientRing<F>) -> Result<()> {
        let bad = (self.lo + 2..=self.hi).into_par_iter().find_first(|&i| {
            let d = self.differential(i).unwrap();
            let e = self.differential(i - 1).unwrap();
            !e.compose(ring, d).is_zero(ring)
        });
        match bad {
            Some(i) => Err(Error::BoundariesNotCycles(i)),
            None => Ok(()),
        }
    }

    /// True when every differential has entries in the maximal ideal.
    pub fn is_minimal(&self, ring: &QuotientRing<F>) -> bool {
        self.maps.par_iter().all(|d| d.is_minimal(ring))
    }

    pub fn dim(&self, ring: &QuotientRing<F>, i: i64, j: i64) -> usize {
        self.module(i).dim(ring, j)
    }

    pub fn differential_rank(&self, ring: &QuotientRing<F>, i: i64, j: i64) -> usize {
        match self.differential(i) {
            Some(d) => rank(ring.field(), &d.matrix_at_degree(ring, j)),
            None => 0,
        }
    }

    /// Degrees where `C_i` can be nonzero: all of them for artinian rings,
    /// otherwise cut at `bound`. The flag reports whether a cut happened.
    pub fn degree_range(&self, ring: &QuotientRing<F>, i: i64, bound: i64) -> (Vec<i64>, bool) {
        let m = self.module(i);
        let (Some(a), Some(b)) = (m.min_twist(), m.max_twist()) else {
            return (Vec::new(), false);
        };
        match ring.top_degree() {
            Some(top) => ((a..=b + top).collect(), false),
            None if ring.is_artinian() => (Vec::new(), false),
            None => ((a..=bound).collect(), true),
        }
    }

    /// `dim H_i(C)_j` for an interior index.
    pub fn homology_dim(&self, ring: &QuotientRing<F>, i: i64, j: i64) -> Result<usize> {
        if i <= self.lo || i >= self.hi {
            return Err(Error::OutsideInterior { index: i, lo: self.lo, hi: self.hi });
        }
        let c = self.dim(ring, i, j);
        Ok(c - self.differential_rank(ring, i, j) - self.differential_rank(ring, i + 1, j))
    }

    /// Homology at the given interior indices, over full support for
    /// artinian rings and up to degree `bound` otherwise.
    pub fn homology(&self, ring: &QuotientRing<F>, indices: &[i64], bound: i64) -> Result<HomologyTable> {
        for &i in indices {
            if i <= self.lo || i >= self.hi {
                return Err(Error::OutsideInterior { index: i, lo: self.lo, hi: self.hi });
            }
        }
        let mut truncated = false;
        let mut cells = Vec::new();
        for &i in indices {
            let (js, cut) = self.degree_range(ring, i, bound);
            truncated |= cut;
            cells.extend(js.into_iter().map(|j| (i, j)));
        }
        let mut rank_keys: Vec<(i64, i64)> =
            cells.iter().flat_map(|&(i, j)| [(i, j), (i + 1, j)]).collect();
        rank_keys.sort();
        rank_keys.dedup();
        let ranks: HashMap<(i64, i64), usize> = rank_keys
            .par_iter()
            .map(|&(i, j)| ((i, j), self.differential_rank(ring, i, j)))
            .collect();
        let mut entries: Vec<HomologyEntry> = cells
            .par_iter()
            .filter_map(|&(i, j)| {
                let d = self.dim(ring, i, j) - ranks[&(i, j)] - ranks[&(i + 1, j)];
                (d > 0).then_some(HomologyEntry { index: i, degree: j, dim: d })
            })
            .collect();
        entries.sort_by_key(|e| (e.index, e.degree));
        let mut indices = indices.to_vec();
        indices.sort();
        Ok(HomologyTable { indices, entries, up_to_degree: truncated.then_some(bound) })
    }

    /// `D_k = Hom(C_{-k}, R)` with differential `D_k -> D_{k-1}` the
    /// transpose of `d_{1-k}`.
    pub fn dual(&self) -> GradedChainComplex<F> {
        let modules: Vec<GradedFreeModule> = (-self.hi..=-self.lo).map(|k| self.module(-k).dual()).collect();
        let maps: Vec<GradedMap<F>> =
            (-self.hi + 1..=-self.lo).map(|k| self.differential(1 - k).unwrap().transpose()).collect();
        GradedChainComplex { lo: -self.hi, hi: -self.lo, modules, maps }
    }

    /// The subcomplex on `[lo, hi]` (brutal truncation).
    pub fn truncate(&self, lo: i64, hi: i64) -> Result<GradedChainComplex<F>> {
        if lo < self.lo || hi > self.hi || lo > hi {
            return Err(Error::EmptyWindow { lo, hi });
        }
        let modules = (lo..=hi).map(|i| self.module(i)).collect();
        let maps = (lo + 1..=hi).map(|i| self.differential(i).unwrap().clone()).collect();
        GradedChainComplex::new(lo, modules, maps)
    }

    /// `Σ (-1)^i dim C_{i,j}` over the window.
    pub fn euler_characteristic(&self, ring: &QuotientRing<F>, j: i64) -> i64 {
        (self.lo..=self.hi)
            .map(|i| {
                let d = self.dim(ring, i, j) as i64;
                if i.rem_euclid(2) == 0 {
                    d
                } else {
                    -d
                }
            })
            .sum()
    }

    /// Checks `d_{i-1} d_i = 0` degreewise on field matrices; a slower
    /// cross-check of [`Self::verify`].
    pub fn verify_at_degree(&self, ring: &QuotientRing<F>, j: i64) -> bool {
        (self.lo + 2..=self.hi).all(|i| {
            let a = self.differential(i - 1).unwrap().matrix_at_degree(ring, j);
            let b = self.differential(i).unwrap().matrix_at_degree(ring, j);
            a.ncols == 0 || b.ncols == 0 || is_zero(ring.field(), &mul(ring.field(), &a, &b))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{PolyRing, PolyRingSpec, PrimeField};

    /// `0 -> R(-1) --x--> R -> 0` over `k[x]/(x^2)`.
    fn mult_by_x() -> (QuotientRing<PrimeField>, GradedChainComplex<PrimeField>) {
        let r = PolyRing::new(PolyRingSpec::new(&["x"]).unwrap(), PrimeField::new(32003).unwrap());
        let q = QuotientRing::new(r.clone(), &[r.parse("x^2").unwrap()]).unwrap();
        let m0 = GradedFreeModule::new(vec![0]);
        let m1 = GradedFreeModule::new(vec![1]);
        let d1 = GradedMap::new(&q, m1.clone(), m0.clone(), vec![vec![r.var(0)]]).unwrap();
        let z = GradedFreeModule::zero();
        let cx = GradedChainComplex::new(
            -1,
            vec![z.clone(), m0.clone(), m1.clone(), z.clone()],
            vec![
                GradedMap::zero(m0.clone(), z.clone()),
                d1,
                GradedMap::zero(z.clone(), m1.clone()),
            ],
        )
        .unwrap();
        (q, cx)
    }

    #[test]
    fn homology_of_multiplication() {
        let (q, cx) = mult_by_x();
        cx.verify(&q).unwrap();
        let h = cx.homology(&q, &[0, 1], 10).unwrap();
        // H_0 = R/x = k in degree 0; H_1 = ann(x)(-1) = k in degree 2
        assert_eq!(h.entries, vec![
            HomologyEntry { index: 0, degree: 0, dim: 1 },
            HomologyEntry { index: 1, degree: 2, dim: 1 },
        ]);
        assert!(h.up_to_degree.is_none());
        assert!(cx.homology(&q, &[2], 10).is_err());
    }

    #[test]
    fn dual_reverses_indices() {
        let (q, cx) = mult_by_x();
        let d = cx.dual();
        assert_eq!((d.lo, d.hi), (-2, 1));
        assert_eq!(d.module(-1).twists, vec![-1]);
        d.verify(&q).unwrap();
        let h = d.homology(&q, &[-1, 0], 0).unwrap();
        assert_eq!(h.total(-1) + h.total(0), 2);
    }

    #[test]
    fn euler_characteristic_matches_hilbert_difference() {
        let (q, cx) = mult_by_x();
        // χ_j = dim R_j - dim R_{j-1}
        assert_eq!(cx.euler_characteristic(&q, 0), 1);
        assert_eq!(cx.euler_characteristic(&q, 1), 0);
        assert_eq!(cx.euler_characteristic(&q, 2), -1);
        assert!((0..3).all(|j| cx.verify_at_degree(&q, j)));
    }
}
