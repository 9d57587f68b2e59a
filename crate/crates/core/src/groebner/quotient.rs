use std::collections::HashMap;
use std::sync::Arc;

use parking_lot::RwLock;
use serde::Serialize;

use super::{buchberger, reduce, ReducedGB};
use crate::error::{Error, Result};
use crate::polyring::{Field, Monomial, Poly, PolyRing};

/// Standard monomials of one degree, sorted descending in the ring order.
#[derive(Debug, Clone)]
pub struct StdBasis {
    pub degree: i64,
    pub monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl StdBasis {
    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }
}

/// Truncated Hilbert function of a quotient ring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HilbertData {
    /// `values[j] = dim R_j` for `0 <= j <= up_to`.
    pub values: Vec<usize>,
    pub up_to: i64,
    pub krull_dim: usize,
    pub artinian: bool,
    pub top_degree: Option<i64>,
}

/// `R = Q/C` for a graded polynomial ring `Q` and homogeneous ideal `C`.
///
/// Normal forms of monomials and standard bases per degree are memoized, so
/// a single instance can be shared across threads.
pub struct QuotientRing<F: Field> {
    ring: Arc<PolyRing<F>>,
    gb: ReducedGB<F>,
    leads: Vec<Monomial>,
    krull: usize,
    top: Option<i64>,
    bases: RwLock<HashMap<i64, Arc<StdBasis>>>,
    nf_cache: RwLock<HashMap<Monomial, Arc<Poly<F>>>>,
}

impl<F: Field> std::fmt::Debug for QuotientRing<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("QuotientRing")
            .field("vars", &self.ring.spec().names)
            .field("gb", &self.gb.polys)
            .finish()
    }
}

impl<F: Field> QuotientRing<F> {
    pub fn new(ring: Arc<PolyRing<F>>, gens: &[Poly<F>]) -> Result<Self> {
        for g in gens {
            if !ring.belongs(g) {
                return Err(Error::RingMismatch);
            }
        }
        let gb = buchberger(&ring, gens)?;
        let leads = gb.leading_monomials();
        if leads.iter().any(|m| m.is_one()) {
            return Err(Error::UnitIdeal);
        }
        let krull = krull_from_leads(ring.nvars(), &leads);
        let mut q = QuotientRing {
            ring,
            gb,
            leads,
            krull,
            top: None,
            bases: RwLock::new(HashMap::new()),
            nf_cache: RwLock::new(HashMap::new()),
        };
        if krull == 0 {
            let bound = q.socle_degree_bound();
            q.top = (0..=bound).rev().find(|&j| q.dim(j) > 0);
        }
        Ok(q)
    }

    /// `Q/(C + extra)` over the same polynomial ring.
    pub fn extend(&self, extra: &[Poly<F>]) -> Result<Self> {
        let mut gens = self.gb.polys.clone();
        gens.extend(extra.iter().cloned());
        Self::new(self.ring.clone(), &gens)
    }

    pub fn ring(&self) -> &Arc<PolyRing<F>> {
        &self.ring
    }

    pub fn field(&self) -> &F {
        self.ring.field()
    }

    pub fn groebner_basis(&self) -> &ReducedGB<F> {
        &self.gb
    }

    pub fn leading_monomials(&self) -> &[Monomial] {
        &self.leads
    }

    pub fn is_standard(&self, m: &Monomial) -> bool {
        !self.leads.iter().any(|l| l.divides(m))
    }

    /// Normal form of a monomial, memoized.
    pub fn monomial_nf(&self, m: &Monomial) -> Arc<Poly<F>> {
        if let Some(p) = self.nf_cache.read().get(m) {
            return p.clone();
        }
        let p = self.ring.monomial(m.clone());
        let nf = Arc::new(if self.is_standard(m) {
            p
        } else {
            reduce(&self.ring, &p, &self.gb.polys, &self.leads)
        });
        self.nf_cache.write().insert(m.clone(), nf.clone());
        nf
    }

    pub fn normal_form(&self, p: &Poly<F>) -> Poly<F> {
        let mut acc = Poly::zero();
        for (m, c) in p.terms() {
            let nf = self.monomial_nf(m);
            acc = self.ring.add_scaled(&acc, &nf, c);
        }
        acc
    }

    pub fn contains(&self, p: &Poly<F>) -> bool {
        self.normal_form(p).is_zero()
    }

    /// Product in `R`, in normal form.
    pub fn mul(&self, a: &Poly<F>, b: &Poly<F>) -> Poly<F> {
        self.normal_form(&self.ring.mul(a, b))
    }

    pub fn std_monomials(&self, degree: i64) -> Arc<StdBasis> {
        if let Some(b) = self.bases.read().get(&degree) {
            return b.clone();
        }
        let monomials = self
            .ring
            .spec()
            .monomials_of_degree_filtered(degree, |m| self.is_standard(m));
        let index = monomials.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        let b = Arc::new(StdBasis { degree, monomials, index });
        self.bases.write().insert(degree, b.clone());
        b
    }

    pub fn dim(&self, degree: i64) -> usize {
        if degree < 0 {
            return 0;
        }
        if let Some(top) = self.top {
            if degree > top {
                return 0;
            }
        }
        self.std_monomials(degree).len()
    }

    /// Dense coordinates of a homogeneous element of degree `degree` in the
    /// standard monomial basis.
    pub fn coords(&self, p: &Poly<F>, degree: i64) -> Vec<F::Elem> {
        let basis = self.std_monomials(degree);
        let mut out = vec![self.field().zero(); basis.len()];
        for (m, c) in self.normal_form(p).terms() {
            let i = basis.index_of(m).expect("normal form has the requested degree");
            out[i] = c.clone();
        }
        out
    }

    pub fn from_coords(&self, degree: i64, coords: &[F::Elem]) -> Poly<F> {
        let basis = self.std_monomials(degree);
        self.ring.from_terms(
            basis
                .monomials
                .iter()
                .zip(coords)
                .filter(|(_, c)| !self.field().is_zero(c))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        )
    }

    pub fn krull_dimension(&self) -> usize {
        self.krull
    }

    pub fn is_artinian(&self) -> bool {
        self.krull == 0
    }

    /// Largest degree with `R_j != 0`, when `R` is artinian.
    pub fn top_degree(&self) -> Option<i64> {
        self.top
    }

    /// Weighted degree of the lcm of all leading monomials: the numerator of
    /// the Hilbert series has no terms beyond it.
    pub fn numerator_degree_bound(&self) -> i64 {
        let n = self.ring.nvars();
        let l = self.leads.iter().fold(Monomial::one(n), |acc, m| acc.lcm(m));
        self.ring.degree_of(&l)
    }

    pub fn hilbert_series(&self, up_to: i64) -> HilbertData {
        let values = (0..=up_to.max(-1)).map(|j| self.dim(j)).collect();
        HilbertData {
            values,
            up_to,
            krull_dim: self.krull,
            artinian: self.is_artinian(),
            top_degree: self.top,
        }
    }

    fn socle_degree_bound(&self) -> i64 {
        let spec = self.ring.spec();
        (0..self.ring.nvars())
            .map(|v| {
                let k = self
                    .leads
                    .iter()
                    .filter(|m| m.pure_power_var() == Some(v))
                    .map(|m| m.0[v])
                    .min()
                    .expect("artinian ring has a pure power per variable");
                spec.weights[v] as i64 * (k as i64 - 1)
            })
            .sum()
    }
}

/// Largest size of a variable set containing the support of no lead.
fn krull_from_leads(n: usize, leads: &[Monomial]) -> usize {
    let supports: Vec<u64> = leads
        .iter()
        .map(|m| m.support().fold(0u64, |acc, v| acc | (1 << v)))
        .collect();
    assert!(n < 64, "at most 63 variables");
    let mut best = 0;
    for s in 0u64..(1u64 << n) {
        let size = s.count_ones() as usize;
        if size > best && supports.iter().all(|&t| t & !s != 0) {
            best = size;
        }
    }
    best
}
