use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use super::field::Field;
use super::monomial::{Monomial, PolyRingSpec};
use crate::error::{Error, Result};

/// Sparse polynomial in canonical form: nonzero coefficients, monomials
/// strictly descending in the ring's order. The zero polynomial has no terms.
pub struct Poly<F: Field> {
    terms: Vec<(Monomial, F::Elem)>,
}

impl<F: Field> Clone for Poly<F> {
    fn clone(&self) -> Self {
        Self { terms: self.terms.clone() }
    }
}

impl<F: Field> PartialEq for Poly<F> {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl<F: Field> Eq for Poly<F> {}

impl<F: Field> std::hash::Hash for Poly<F> {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.terms.hash(state)
    }
}

impl<F: Field> fmt::Debug for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.terms.iter()).finish()
    }
}

impl<F: Field> Default for Poly<F> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<F: Field> Poly<F> {
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    /// Wraps terms that are already canonical for some ring.
    pub(crate) fn from_sorted_terms(terms: Vec<(Monomial, F::Elem)>) -> Self {
        Self { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(Monomial, F::Elem)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, F::Elem)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn leading_coeff(&self) -> Option<&F::Elem> {
        self.terms.first().map(|(_, c)| c)
    }

    fn nvars(&self) -> Option<usize> {
        self.terms.first().map(|(m, _)| m.nvars())
    }
}

/// Result of [`PolyRing::homogeneous_degree`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Homogeneity {
    /// The zero polynomial, homogeneous of every degree.
    Zero,
    Degree(i64),
    Inhomogeneous,
}

/// A weighted polynomial ring over an exact field. Polynomials do not carry
/// their ring; all arithmetic goes through this context.
#[derive(Debug, Clone)]
pub struct PolyRing<F: Field> {
    spec: PolyRingSpec,
    field: F,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

impl<F: Field> PolyRing<F> {
    pub fn new(spec: PolyRingSpec, field: F) -> Arc<Self> {
        Arc::new(Self { spec, field })
    }

    pub fn spec(&self) -> &PolyRingSpec {
        &self.spec
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.spec.nvars()
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.spec.cmp(a, b)
    }

    pub fn degree_of(&self, m: &Monomial) -> i64 {
        self.spec.degree(m)
    }

    pub fn constant(&self, c: F::Elem) -> Poly<F> {
        self.term(Monomial::one(self.nvars()), c)
    }

    pub fn one(&self) -> Poly<F> {
        self.constant(self.field.one())
    }

    pub fn int(&self, n: i64) -> Poly<F> {
        self.constant(self.field.from_i64(n))
    }

    pub fn var(&self, v: usize) -> Poly<F> {
        self.term(Monomial::var(self.nvars(), v), self.field.one())
    }

    pub fn monomial(&self, m: Monomial) -> Poly<F> {
        self.term(m, self.field.one())
    }

    pub fn term(&self, m: Monomial, c: F::Elem) -> Poly<F> {
        if self.field.is_zero(&c) {
            Poly::zero()
        } else {
            Poly { terms: vec![(m, c)] }
        }
    }

    /// Builds a canonical polynomial from arbitrary (possibly repeated,
    /// unsorted, zero) terms.
    pub fn from_terms(&self, mut terms: Vec<(Monomial, F::Elem)>) -> Poly<F> {
        terms.sort_by(|a, b| self.cmp(&b.0, &a.0));
        let mut out: Vec<(Monomial, F::Elem)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = self.field.add(lc, &c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !self.field.is_zero(c));
        Poly { terms: out }
    }

    /// True when every monomial has the right number of exponents.
    pub fn belongs(&self, p: &Poly<F>) -> bool {
        p.nvars().is_none_or(|n| n == self.nvars())
    }

    fn check(&self, p: &Poly<F>) -> Result<()> {
        if self.belongs(p) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    /// Checked binary operation.
    pub fn poly_op(&self, op: PolyOp, a: &Poly<F>, b: &Poly<F>) -> Result<Poly<F>> {
        self.check(a)?;
        self.check(b)?;
        Ok(match op {
            PolyOp::Add => self.add(a, b),
            PolyOp::Sub => self.sub(a, b),
            PolyOp::Mul => self.mul(a, b),
        })
    }

    /// Checked scalar multiplication.
    pub fn scalar_op(&self, c: &F::Elem, a: &Poly<F>) -> Result<Poly<F>> {
        self.check(a)?;
        Ok(self.scale(a, c))
    }

    pub fn add(&self, a: &Poly<F>, b: &Poly<F>) -> Poly<F> {
        self.add_scaled(a, b, &self.field.one())
    }

    pub fn sub(&self, a: &Poly<F>, b: &Poly<F>) -> Poly<F> {
        self.add_scaled(a, b, &self.field.neg(&self.field.one()))
    }

    /// `a + c*b` by merging.
    pub fn add_scaled(&self, a: &Poly<F>, b: &Poly<F>, c: &F::Elem) -> Poly<F> {
        let f = &self.field;
        if f.is_zero(c) || b.is_zero() {
            return a.clone();
        }
        let mut out = Vec::with_capacity(a.terms.len() + b.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < a.terms.len() && j < b.terms.len() {
            match self.cmp(&a.terms[i].0, &b.terms[j].0) {
                Ordering::Greater => {
                    out.push(a.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((b.terms[j].0.clone(), f.mul(c, &b.terms[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let s = f.add(&a.terms[i].1, &f.mul(c, &b.terms[j].1));
                    if !f.is_zero(&s) {
                        out.push((a.terms[i].0.clone(), s));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a.terms[i..].iter().cloned());
        out.extend(b.terms[j..].iter().map(|(m, x)| (m.clone(), f.mul(c, x))));
        Poly { terms: out }
    }

    pub fn neg(&self, a: &Poly<F>) -> Poly<F> {
        Poly { terms: a.terms.iter().map(|(m, c)| (m.clone(), self.field.neg(c))).collect() }
    }

    pub fn scale(&self, a: &Poly<F>, c: &F::Elem) -> Poly<F> {
        if self.field.is_zero(c) {
            return Poly::zero();
        }
        Poly { terms: a.terms.iter().map(|(m, x)| (m.clone(), self.field.mul(x, c))).collect() }
    }

    /// `c * m * a`; multiplication by a monomial preserves the order.
    pub fn mul_term(&self, a: &Poly<F>, m: &Monomial, c: &F::Elem) -> Poly<F> {
        if self.field.is_zero(c) {
            return Poly::zero();
        }
        Poly {
            terms: a.terms.iter().map(|(am, x)| (am.mul(m), self.field.mul(x, c))).collect(),
        }
    }

    pub fn mul(&self, a: &Poly<F>, b: &Poly<F>) -> Poly<F> {
        if a.is_zero() || b.is_zero() {
            return Poly::zero();
        }
        let (small, big) = if a.len() <= b.len() { (a, b) } else { (b, a) };
        let mut acc = Poly::zero();
        for (m, c) in &small.terms {
            acc = self.add(&acc, &self.mul_term(big, m, c));
        }
        acc
    }

    pub fn pow(&self, a: &Poly<F>, e: u32) -> Poly<F> {
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.mul(&acc, a);
        }
        acc
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self, a: &Poly<F>) -> Poly<F> {
        match a.leading_coeff() {
            None => Poly::zero(),
            Some(c) => self.scale(a, &self.field.inv(c).expect("leading coefficient is nonzero")),
        }
    }

    pub fn homogeneous_degree(&self, p: &Poly<F>) -> Homogeneity {
        let mut it = p.terms.iter().map(|(m, _)| self.degree_of(m));
        let Some(d) = it.next() else {
            return Homogeneity::Zero;
        };
        if it.all(|e| e == d) {
            Homogeneity::Degree(d)
        } else {
            Homogeneity::Inhomogeneous
        }
    }

    /// Degree of a homogeneous nonzero polynomial, error otherwise.
    pub fn require_homogeneous(&self, p: &Poly<F>) -> Result<Option<i64>> {
        match self.homogeneous_degree(p) {
            Homogeneity::Zero => Ok(None),
            Homogeneity::Degree(d) => Ok(Some(d)),
            Homogeneity::Inhomogeneous => Err(Error::Inhomogeneous(self.print(p))),
        }
    }

    /// Substitutes `images[v]` (polynomials of `target`) for variable `v`.
    pub fn substitute<G: Field<Elem = F::Elem>>(
        &self,
        p: &Poly<F>,
        target: &PolyRing<G>,
        images: &[Poly<G>],
    ) -> Poly<G> {
        let mut powers: Vec<Vec<Poly<G>>> = vec![vec![target.one()]; self.nvars()];
        let mut acc = Poly::zero();
        for (m, c) in &p.terms {
            let mut t = target.constant(c.clone());
            for (v, &e) in m.exps().iter().enumerate() {
                while powers[v].len() <= e as usize {
                    let next = target.mul(powers[v].last().unwrap(), &images[v]);
                    powers[v].push(next);
                }
                if e > 0 {
                    t = target.mul(&t, &powers[v][e as usize]);
                }
            }
            acc = target.add(&acc, &t);
        }
        acc
    }

    pub fn parse(&self, text: &str) -> Result<Poly<F>> {
        super::parse::parse_polynomial(text, self)
    }

    pub fn print(&self, p: &Poly<F>) -> String {
        super::parse::print_polynomial(p, self)
    }
}
