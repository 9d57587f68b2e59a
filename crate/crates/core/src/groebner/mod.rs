//! Buchberger Gröbner bases for homogeneous ideals and the quotient rings
//! they define.

mod quotient;

pub use quotient::{HilbertData, QuotientRing, StdBasis};

use std::collections::BTreeSet;

use crate::error::Result;
use crate::polyring::{Field, Monomial, MonomialOrder, Poly, PolyRing};

/// A reduced Gröbner basis: monic, sorted by ascending leading monomial.
#[derive(Debug, Clone)]
pub struct ReducedGB<F: Field> {
    pub polys: Vec<Poly<F>>,
    pub order: MonomialOrder,
    pub is_reduced: bool,
}

impl<F: Field> ReducedGB<F> {
    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.polys.iter().map(|p| p.leading_monomial().unwrap().clone()).collect()
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }
}

/// Full reduction of `p` by a list of monic polynomials with the given leads.
pub(crate) fn reduce<F: Field>(
    ring: &PolyRing<F>,
    p: &Poly<F>,
    basis: &[Poly<F>],
    leads: &[Monomial],
) -> Poly<F> {
    let field = ring.field();
    let mut rest = p.clone();
    let mut rem: Vec<(Monomial, F::Elem)> = Vec::new();
    while let Some((m, c)) = rest.terms().first().cloned() {
        match leads.iter().position(|l| l.divides(&m)) {
            Some(k) => {
                let q = leads[k].quotient_of(&m).unwrap();
                let sub = ring.mul_term(&basis[k], &q, &field.neg(&c));
                rest = ring.add(&rest, &sub);
            }
            None => {
                rem.push((m, c));
                let mut terms = rest.into_terms();
                terms.remove(0);
                rest = Poly::from_sorted_terms(terms);
            }
        }
    }
    Poly::from_sorted_terms(rem)
}

fn s_polynomial<F: Field>(ring: &PolyRing<F>, f: &Poly<F>, g: &Poly<F>) -> Poly<F> {
    let one = ring.field().one();
    let lf = f.leading_monomial().unwrap();
    let lg = g.leading_monomial().unwrap();
    let l = lf.lcm(lg);
    let a = ring.mul_term(f, &lf.quotient_of(&l).unwrap(), &one);
    let b = ring.mul_term(g, &lg.quotient_of(&l).unwrap(), &one);
    ring.sub(&a, &b)
}

/// Reduced Gröbner basis of the ideal generated by homogeneous `gens`.
///
/// Pairs are processed by ascending degree of their lcm; the product and
/// chain criteria discard pairs known to reduce to zero. The output depends
/// only on the ideal and the monomial order.
pub fn buchberger<F: Field>(ring: &PolyRing<F>, gens: &[Poly<F>]) -> Result<ReducedGB<F>> {
    for g in gens {
        ring.require_homogeneous(g)?;
    }
    let mut basis: Vec<Poly<F>> = Vec::new();
    let mut leads: Vec<Monomial> = Vec::new();
    // (degree of lcm, i, j)
    let mut pending: BTreeSet<(i64, usize, usize)> = BTreeSet::new();

    let push = |p: Poly<F>,
                    basis: &mut Vec<Poly<F>>,
                    leads: &mut Vec<Monomial>,
                    pending: &mut BTreeSet<(i64, usize, usize)>| {
        let p = ring.monic(&p);
        let lm = p.leading_monomial().unwrap().clone();
        let k = basis.len();
        for (i, li) in leads.iter().enumerate() {
            pending.insert((ring.degree_of(&li.lcm(&lm)), i, k));
        }
        basis.push(p);
        leads.push(lm);
    };

    let mut sorted: Vec<&Poly<F>> = gens.iter().filter(|g| !g.is_zero()).collect();
    sorted.sort_by_key(|g| ring.degree_of(g.leading_monomial().unwrap()));
    for g in sorted {
        let r = reduce(ring, g, &basis, &leads);
        if !r.is_zero() {
            push(r, &mut basis, &mut leads, &mut pending);
        }
    }

    while let Some(&(deg, i, j)) = pending.iter().next() {
        pending.remove(&(deg, i, j));
        let (li, lj) = (&leads[i], &leads[j]);
        if li.is_coprime(lj) {
            continue;
        }
        let l = li.lcm(lj);
        let chain = (0..leads.len()).any(|k| {
            if k == i || k == j || !leads[k].divides(&l) {
                return false;
            }
            let key = |a: usize, b: usize| {
                let (a, b) = (a.min(b), a.max(b));
                (ring.degree_of(&leads[a].lcm(&leads[b])), a, b)
            };
            !pending.contains(&key(i, k)) && !pending.contains(&key(j, k))
        });
        if chain {
            continue;
        }
        let s = s_polynomial(ring, &basis[i], &basis[j]);
        let r = reduce(ring, &s, &basis, &leads);
        if !r.is_zero() {
            push(r, &mut basis, &mut leads, &mut pending);
        }
    }

    Ok(interreduce(ring, basis))
}

fn interreduce<F: Field>(ring: &PolyRing<F>, basis: Vec<Poly<F>>) -> ReducedGB<F> {
    let leads: Vec<Monomial> = basis.iter().map(|p| p.leading_monomial().unwrap().clone()).collect();
    // keep one element per minimal lead
    let mut keep: Vec<usize> = Vec::new();
    for (i, li) in leads.iter().enumerate() {
        let redundant = leads
            .iter()
            .enumerate()
            .any(|(k, lk)| k != i && lk.divides(li) && (lk != li || k < i));
        if !redundant {
            keep.push(i);
        }
    }
    let mut minimal: Vec<Poly<F>> = keep.iter().map(|&i| basis[i].clone()).collect();
    minimal.sort_by(|a, b| ring.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
    let mut reduced = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<Poly<F>> =
            minimal.iter().enumerate().filter(|(k, _)| *k != i).map(|(_, p)| p.clone()).collect();
        let other_leads: Vec<Monomial> =
            others.iter().map(|p| p.leading_monomial().unwrap().clone()).collect();
        let r = reduce(ring, &minimal[i], &others, &other_leads);
        reduced.push(ring.monic(&r));
    }
    ReducedGB { polys: reduced, order: ring.spec().order, is_reduced: true }
}

/// Checks that every S-polynomial of `gb` reduces to zero and that no
/// leading monomial divides a monomial of another element.
pub fn is_reduced_groebner_basis<F: Field>(ring: &PolyRing<F>, gb: &[Poly<F>]) -> bool {
    let leads: Vec<Monomial> = gb.iter().map(|p| p.leading_monomial().unwrap().clone()).collect();
    for (i, p) in gb.iter().enumerate() {
        if !ring.field().is_one(p.leading_coeff().unwrap()) {
            return false;
        }
        for (k, l) in leads.iter().enumerate() {
            if k != i && p.terms().iter().any(|(m, _)| l.divides(m)) {
                return false;
            }
        }
    }
    for i in 0..gb.len() {
        for j in i + 1..gb.len() {
            let s = s_polynomial(ring, &gb[i], &gb[j]);
            if !reduce(ring, &s, gb, &leads).is_zero() {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{PolyRingSpec, PrimeField, Rationals};
    use std::sync::Arc;

    fn xy() -> Arc<PolyRing<Rationals>> {
        PolyRing::new(PolyRingSpec::new(&["x", "y"]).unwrap(), Rationals)
    }

    #[test]
    fn monomial_ideal_is_its_own_basis() {
        let r = xy();
        let gens = vec![r.parse("x^2").unwrap(), r.parse("x*y").unwrap()];
        let gb = buchberger(&r, &gens).unwrap();
        assert_eq!(gb.polys.len(), 2);
        assert!(gb.polys.contains(&gens[0]) && gb.polys.contains(&gens[1]));
    }

    #[test]
    fn zero_ideal() {
        let r = xy();
        assert!(buchberger(&r, &[]).unwrap().is_empty());
        assert!(buchberger(&r, &[Poly::zero()]).unwrap().is_empty());
    }

    #[test]
    fn weighted_pair() {
        let spec = PolyRingSpec::with_weights(vec!["x".into(), "y".into()], vec![1, 2], Default::default())
            .unwrap();
        let r = PolyRing::new(spec, Rationals);
        let gens = vec![r.parse("x^2 - y").unwrap(), r.parse("y^2").unwrap()];
        let gb = buchberger(&r, &gens).unwrap();
        assert_eq!(gb.polys, gens);
    }

    #[test]
    fn rejects_inhomogeneous() {
        let r = xy();
        assert!(buchberger(&r, &[r.parse("x^2 - y").unwrap()]).is_err());
    }

    #[test]
    fn input_order_does_not_matter() {
        let r = PolyRing::new(PolyRingSpec::new(&["x", "y", "z"]).unwrap(), PrimeField::new(32003).unwrap());
        let gens: Vec<_> = ["x^2 - y*z", "x*y - z^2", "y^3 + x*z^2"].iter().map(|s| r.parse(s).unwrap()).collect();
        let a = buchberger(&r, &gens).unwrap();
        let rev: Vec<_> = gens.iter().rev().cloned().collect();
        let b = buchberger(&r, &rev).unwrap();
        assert_eq!(a.polys, b.polys);
        assert!(is_reduced_groebner_basis(&r, &a.polys));
    }
}
