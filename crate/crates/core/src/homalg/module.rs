use serde::Serialize;

use super::linalg::Matrix;
use crate::error::{Error, Result};
use crate::groebner::QuotientRing;
use crate::polyring::{Field, Poly};

/// `R(-a_1) ⊕ ... ⊕ R(-a_r)`; the k-th basis vector has degree `twists[k]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize)]
pub struct GradedFreeModule {
    pub twists: Vec<i64>,
}

impl GradedFreeModule {
    pub fn new(twists: Vec<i64>) -> Self {
        GradedFreeModule { twists }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.twists.len()
    }

    pub fn is_zero(&self) -> bool {
        self.twists.is_empty()
    }

    pub fn min_twist(&self) -> Option<i64> {
        self.twists.iter().copied().min()
    }

    pub fn max_twist(&self) -> Option<i64> {
        self.twists.iter().copied().max()
    }

    /// `Hom_R(F, R)` with the dual basis.
    pub fn dual(&self) -> Self {
        GradedFreeModule { twists: self.twists.iter().map(|a| -a).collect() }
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut twists = self.twists.clone();
        twists.extend(&other.twists);
        GradedFreeModule { twists }
    }

    /// Offsets of each summand in the degree-`j` vector space, plus its total
    /// dimension.
    pub fn layout<F: Field>(&self, ring: &QuotientRing<F>, j: i64) -> (Vec<usize>, usize) {
        let mut offsets = Vec::with_capacity(self.rank());
        let mut total = 0;
        for &a in &self.twists {
            offsets.push(total);
            total += ring.dim(j - a);
        }
        (offsets, total)
    }

    pub fn dim<F: Field>(&self, ring: &QuotientRing<F>, j: i64) -> usize {
        self.twists.iter().map(|&a| ring.dim(j - a)).sum()
    }

    /// Coordinates of a homogeneous element of degree `j`, given as a column
    /// of polynomials.
    pub fn coords<F: Field>(&self, ring: &QuotientRing<F>, v: &[Poly<F>], j: i64) -> Vec<F::Elem> {
        let mut out = Vec::with_capacity(self.dim(ring, j));
        for (p, &a) in v.iter().zip(&self.twists) {
            if ring.dim(j - a) == 0 {
                continue;
            }
            out.extend(ring.coords(p, j - a));
        }
        out
    }

    pub fn from_coords<F: Field>(&self, ring: &QuotientRing<F>, c: &[F::Elem], j: i64) -> Vec<Poly<F>> {
        let (offsets, _) = self.layout(ring, j);
        self.twists
            .iter()
            .zip(offsets)
            .map(|(&a, o)| {
                let d = ring.dim(j - a);
                if d == 0 {
                    Poly::zero()
                } else {
                    ring.from_coords(j - a, &c[o..o + d])
                }
            })
            .collect()
    }
}

/// A homogeneous map of degree zero between graded free modules, stored as
/// a polynomial matrix (rows index the target basis, columns the source).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedMap<F: Field> {
    pub source: GradedFreeModule,
    pub target: GradedFreeModule,
    pub entries: Vec<Vec<Poly<F>>>,
}

impl<F: Field> GradedMap<F> {
    pub fn zero(source: GradedFreeModule, target: GradedFreeModule) -> Self {
        let entries = vec![vec![Poly::zero(); source.rank()]; target.rank()];
        GradedMap { source, target, entries }
    }

    /// Validates shape and that entry `(r, c)` is homogeneous of degree
    /// `source[c] - target[r]`.
    pub fn new(
        ring: &QuotientRing<F>,
        source: GradedFreeModule,
        target: GradedFreeModule,
        entries: Vec<Vec<Poly<F>>>,
    ) -> Result<Self> {
        if entries.len() != target.rank() || entries.iter().any(|r| r.len() != source.rank()) {
            return Err(Error::Shape(format!(
                "expected a {}x{} matrix",
                target.rank(),
                source.rank()
            )));
        }
        for (r, row) in entries.iter().enumerate() {
            for (c, p) in row.iter().enumerate() {
                if let Some(d) = ring.ring().require_homogeneous(p)? {
                    if d != source.twists[c] - target.twists[r] {
                        return Err(Error::Inhomogeneous(format!(
                            "entry ({r}, {c}) has degree {d}, expected {}",
                            source.twists[c] - target.twists[r]
                        )));
                    }
                }
            }
        }
        Ok(GradedMap { source, target, entries })
    }

    pub fn apply(&self, ring: &QuotientRing<F>, v: &[Poly<F>]) -> Vec<Poly<F>> {
        let r = ring.ring();
        self.entries
            .iter()
            .map(|row| {
                let mut acc = Poly::zero();
                for (p, x) in row.iter().zip(v) {
                    if !p.is_zero() && !x.is_zero() {
                        acc = r.add(&acc, &r.mul(p, x));
                    }
                }
                ring.normal_form(&acc)
            })
            .collect()
    }

    /// `self ∘ other` reduced modulo the quotient ideal.
    pub fn compose(&self, ring: &QuotientRing<F>, other: &GradedMap<F>) -> GradedMap<F> {
        let r = ring.ring();
        let mut entries = vec![vec![Poly::zero(); other.source.rank()]; self.target.rank()];
        for (i, row) in self.entries.iter().enumerate() {
            for (k, a) in row.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (j, b) in other.entries[k].iter().enumerate() {
                    if !b.is_zero() {
                        entries[i][j] = r.add(&entries[i][j], &r.mul(a, b));
                    }
                }
            }
        }
        for row in entries.iter_mut() {
            for p in row.iter_mut() {
                *p = ring.normal_form(p);
            }
        }
        GradedMap { source: other.source.clone(), target: self.target.clone(), entries }
    }

    /// `Hom(-, R)` of the map: the transposed matrix between dual modules.
    pub fn transpose(&self) -> GradedMap<F> {
        let mut entries = vec![vec![Poly::zero(); self.target.rank()]; self.source.rank()];
        for (r, row) in self.entries.iter().enumerate() {
            for (c, p) in row.iter().enumerate() {
                entries[c][r] = p.clone();
            }
        }
        GradedMap { source: self.target.dual(), target: self.source.dual(), entries }
    }

    pub fn is_zero(&self, ring: &QuotientRing<F>) -> bool {
        self.entries.iter().flatten().all(|p| ring.contains(p))
    }

    /// True when no entry is a nonzero constant, i.e. the image lies in `m F`.
    pub fn is_minimal(&self, ring: &QuotientRing<F>) -> bool {
        self.entries.iter().flatten().all(|p| {
            let nf = ring.normal_form(p);
            nf.terms().iter().all(|(m, _)| !m.is_one())
        })
    }

    /// The linear map `source_j -> target_j` in standard monomial bases.
    pub fn matrix_at_degree(&self, ring: &QuotientRing<F>, j: i64) -> Matrix<F::Elem> {
        let field = ring.field();
        let (t_off, t_dim) = self.target.layout(ring, j);
        let s_dim = self.source.dim(ring, j);
        // built as columns, then transposed into row-major form
        let mut cols: Vec<Vec<F::Elem>> = Vec::with_capacity(s_dim);
        for (c, &a) in self.source.twists.iter().enumerate() {
            let basis = ring.std_monomials(j - a);
            if ring.dim(j - a) == 0 {
                continue;
            }
            for s in &basis.monomials {
                let mut col = vec![field.zero(); t_dim];
                for (r, row) in self.entries.iter().enumerate() {
                    let p = &row[c];
                    if p.is_zero() {
                        continue;
                    }
                    let b = self.target.twists[r];
                    let tb = ring.std_monomials(j - b);
                    for (m, coef) in p.terms() {
                        let nf = ring.monomial_nf(&m.mul(s));
                        for (u, x) in nf.terms() {
                            let idx = t_off[r] + tb.index_of(u).expect("degree of normal form");
                            let t = field.mul(coef, x);
                            col[idx] = field.add(&col[idx], &t);
                        }
                    }
                }
                cols.push(col);
            }
        }
        Matrix::from_columns(&cols, t_dim, field.zero())
    }
}

/// Multiplication by a ring element on a graded free module, degree `j`
/// to degree `j + deg p`.
pub fn multiplication_matrix<F: Field>(
    ring: &QuotientRing<F>,
    module: &GradedFreeModule,
    p: &Poly<F>,
    j: i64,
) -> Matrix<F::Elem> {
    let d = ring.ring().require_homogeneous(p).ok().flatten().unwrap_or(0);
    let n = module.rank();
    let shifted = GradedFreeModule::new(module.twists.iter().map(|a| a - d).collect());
    let mut entries = vec![vec![Poly::zero(); n]; n];
    for (k, row) in entries.iter_mut().enumerate() {
        row[k] = p.clone();
    }
    let map = GradedMap { source: shifted, target: module.clone(), entries };
    map.matrix_at_degree(ring, j + d)
}
