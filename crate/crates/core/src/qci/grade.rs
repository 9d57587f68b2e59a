use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::minimalize_ideal_generators;
use crate::error::Result;
use crate::groebner::QuotientRing;
use crate::polyring::{Field, Poly};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GradeCertificate {
    /// Every element of positive degree annihilates the socle.
    Artinian,
    /// Elements of `I` forming a regular sequence, in the order found.
    RegularSequence { elements: Vec<String> },
}

/// Lower bound (exact when flagged) for the grade of `I` on `R`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GradeEvidence {
    pub value: usize,
    pub exact: bool,
    pub certificate: GradeCertificate,
    /// `dim R - dim R/I`, which bounds the grade from above.
    pub upper_bound: usize,
}

/// A random homogeneous element of `I` of degree `d`: generators of degree
/// `d` with random scalars plus lower-degree generators times random
/// combinations of standard monomials.
fn random_element<F: Field, R: Rng>(
    ring: &QuotientRing<F>,
    gens: &[(i64, Poly<F>)],
    d: i64,
    rng: &mut R,
) -> Poly<F> {
    let r = ring.ring();
    let field = ring.field();
    let mut acc = Poly::zero();
    for (e, b) in gens.iter().filter(|(e, _)| *e <= d) {
        let basis = ring.std_monomials(d - e);
        for m in &basis.monomials {
            let c = field.random_nonzero(rng);
            acc = r.add(&acc, &r.mul_term(b, m, &c));
        }
    }
    ring.normal_form(&acc)
}

/// `r` is regular on `A` iff `HS(A/rA) = (1 - t^d) HS(A)`. Both series share
/// the denominator `Π (1 - t^{w_v})`, and their numerators have degree at
/// most the lcm bounds, so comparing coefficients up to `bound` decides it.
fn is_regular<F: Field>(current: &QuotientRing<F>, next: &QuotientRing<F>, d: i64, min_bound: i64) -> bool {
    let bound = min_bound
        .max(current.numerator_degree_bound() + d)
        .max(next.numerator_degree_bound());
    (0..=bound).all(|j| next.dim(j) + current.dim(j - d) == current.dim(j))
}

/// Greedy search for a regular sequence inside `I`.
///
/// Grade is exact when `R` is artinian, when the quotient by the sequence
/// becomes artinian, or when the sequence has length `μ(I)`.
pub fn grade_probe<F: Field>(
    ring: &QuotientRing<F>,
    gens: &[Poly<F>],
    trials: usize,
    degree_bound: i64,
    seed: u64,
) -> Result<GradeEvidence> {
    let minimal = minimalize_ideal_generators(ring, gens)?;
    let quotient = ring.extend(&minimal)?;
    let upper_bound = ring.krull_dimension() - quotient.krull_dimension();
    if ring.is_artinian() {
        return Ok(GradeEvidence { value: 0, exact: true, certificate: GradeCertificate::Artinian, upper_bound });
    }
    let r = ring.ring();
    let with_deg: Vec<(i64, Poly<F>)> = minimal
        .iter()
        .map(|b| (r.require_homogeneous(b).ok().flatten().unwrap_or(0), b.clone()))
        .collect();
    let mut degrees: Vec<i64> = with_deg.iter().map(|(d, _)| *d).collect();
    degrees.sort();
    degrees.dedup();

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut sequence: Vec<Poly<F>> = Vec::new();
    let mut current = ring.extend(&[])?;
    while sequence.len() < minimal.len() && !current.is_artinian() {
        let mut found = None;
        for t in 0..trials.max(1) {
            let d = degrees[t % degrees.len()];
            let cand = random_element(&current, &with_deg, d, &mut rng);
            if cand.is_zero() {
                continue;
            }
            let next = current.extend(std::slice::from_ref(&cand))?;
            if is_regular(&current, &next, d, degree_bound) {
                found = Some((cand, next));
                break;
            }
        }
        match found {
            Some((c, next)) => {
                sequence.push(c);
                current = next;
            }
            None => break,
        }
    }
    let exact = current.is_artinian() || sequence.len() == minimal.len();
    Ok(GradeEvidence {
        value: sequence.len(),
        exact,
        certificate: GradeCertificate::RegularSequence { elements: sequence.iter().map(|p| r.print(p)).collect() },
        upper_bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{PolyRing, PolyRingSpec, PrimeField};

    fn q(vars: &[&str], c: &[&str]) -> QuotientRing<PrimeField> {
        let r = PolyRing::new(PolyRingSpec::new(vars).unwrap(), PrimeField::new(32003).unwrap());
        let c: Vec<_> = c.iter().map(|s| r.parse(s).unwrap()).collect();
        QuotientRing::new(r, &c).unwrap()
    }

    fn parse(q: &QuotientRing<PrimeField>, s: &[&str]) -> Vec<Poly<PrimeField>> {
        s.iter().map(|t| q.ring().parse(t).unwrap()).collect()
    }

    #[test]
    fn artinian_rings_have_grade_zero() {
        let r = q(&["x"], &["x^2"]);
        let g = grade_probe(&r, &parse(&r, &["x"]), 5, 4, 1).unwrap();
        assert_eq!((g.value, g.exact, g.certificate), (0, true, GradeCertificate::Artinian));
    }

    #[test]
    fn variables_form_a_regular_sequence() {
        let r = q(&["x", "y"], &[]);
        let g = grade_probe(&r, &parse(&r, &["x", "y"]), 20, 6, 7).unwrap();
        assert_eq!((g.value, g.exact, g.upper_bound), (2, true, 2));
    }

    #[test]
    fn x2_xy_has_grade_one_without_certificate_of_exactness() {
        let r = q(&["x", "y"], &[]);
        let g = grade_probe(&r, &parse(&r, &["x^2", "x*y"]), 20, 6, 7).unwrap();
        assert_eq!((g.value, g.exact, g.upper_bound), (1, false, 1));
    }

    #[test]
    fn zero_divisor_is_not_regular() {
        let a = q(&["x", "y"], &["x*y"]);
        let next = a.extend(&parse(&a, &["x"])).unwrap();
        assert!(!is_regular(&a, &next, 1, 4));
        let next = a.extend(&parse(&a, &["x + y"])).unwrap();
        assert!(is_regular(&a, &next, 1, 4));
    }
}
