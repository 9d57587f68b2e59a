use std::sync::Arc;

use serde::Serialize;

use super::minimalize_ideal_generators;
use crate::error::{Error, Result};
use crate::groebner::QuotientRing;
use crate::homalg::linalg::{solve, Matrix};
use crate::homalg::HomologyTable;
use crate::polyring::{Field, Monomial, Poly, PolyRing, PolyRingSpec};
use crate::tate::{build_two_step_tate, extract_tate_data, TateData};

/// Ideals `A ⊆ B` and `C` in a polynomial ring `Q̃`, with a substitution
/// `ρ` into the ring `R` carrying the ideal of interest.
#[derive(Debug, Clone)]
pub struct CIPairData<F: Field> {
    pub ambient: Arc<PolyRing<F>>,
    pub a: Vec<Poly<F>>,
    pub b: Vec<Poly<F>>,
    pub c: Vec<Poly<F>>,
    pub target: Arc<QuotientRing<F>>,
    /// `substitution[v]` is the image of ambient variable `v` in `R`.
    pub substitution: Vec<Poly<F>>,
}

impl<F: Field> CIPairData<F> {
    pub fn rho(&self, p: &Poly<F>) -> Poly<F> {
        let image = self.ambient.substitute(p, self.target.ring(), &self.substitution);
        self.target.normal_form(&image)
    }
}

fn fresh_name(taken: &[String], base: String) -> String {
    let mut name = base;
    while taken.contains(&name) {
        name = format!("_{name}");
    }
    name
}

/// `p` viewed in a ring with extra trailing variables.
fn embed<F: Field>(p: &Poly<F>, ambient: &PolyRing<F>) -> Poly<F> {
    let n = ambient.nvars();
    ambient.from_terms(
        p.terms()
            .iter()
            .map(|(m, c)| {
                let mut e = m.0.clone();
                e.resize(n, 0);
                (Monomial(e), c.clone())
            })
            .collect(),
    )
}

/// The generic nested complete-intersection lift: new variables `bt_i`
/// and `ct_i_j` of degrees `deg b_i` and `deg z_j - deg b_i`,
/// `C̃ = C + (bt_i - b_i) + (ct_i_j - c_ij)`, `A = (Σ_i bt_i ct_i_j)_j`,
/// `B = (bt_i)`.
///
/// A coefficient `c_ij = 0` whose variable would have degree `<= 0` is left
/// out; a nonzero one is a grading obstruction. Fails when `g > f`.
pub fn generic_lift<F: Field>(data: &TateData<F>) -> Result<CIPairData<F>> {
    let ring = &data.ring;
    let base = ring.ring();
    let spec = base.spec();
    let n0 = base.nvars();
    let (f, g) = (data.f(), data.g());
    if g > f {
        // A would lie in an ideal of height f and cannot be a complete intersection
        return Err(Error::GExceedsF { f, g });
    }
    let mut names = spec.names.clone();
    let mut weights = spec.weights.clone();
    let mut bt = Vec::with_capacity(f);
    for i in 0..f {
        let d = data.generator_degrees[i];
        if d <= 0 {
            return Err(Error::GradingObstruction(format!("generator {} has degree {d}", i + 1)));
        }
        let name = fresh_name(&names, format!("bt{}", i + 1));
        bt.push(names.len());
        names.push(name);
        weights.push(d as u32);
    }
    // ct[i][j] = variable index, if present
    let mut ct = vec![vec![None; g]; f];
    for j in 0..g {
        for i in 0..f {
            let d = data.cycle_degrees[j] - data.generator_degrees[i];
            let c = &data.cycles[j][i];
            if d <= 0 {
                if c.is_zero() {
                    continue;
                }
                return Err(Error::GradingObstruction(format!(
                    "coefficient c_{}{} is nonzero but its lift would have degree {d}",
                    i + 1,
                    j + 1
                )));
            }
            let name = fresh_name(&names, format!("ct{}_{}", i + 1, j + 1));
            ct[i][j] = Some(names.len());
            names.push(name);
            weights.push(d as u32);
        }
    }
    let ambient = PolyRing::new(PolyRingSpec::with_weights(names, weights, spec.order)?, base.field().clone());

    let mut c: Vec<Poly<F>> = ring.groebner_basis().polys.iter().map(|p| embed(p, &ambient)).collect();
    let mut substitution: Vec<Poly<F>> = (0..n0).map(|v| base.var(v)).collect();
    for i in 0..f {
        let b = &data.generators[i];
        c.push(ambient.sub(&ambient.var(bt[i]), &embed(b, &ambient)));
        substitution.push(b.clone());
    }
    for j in 0..g {
        for i in 0..f {
            if let Some(v) = ct[i][j] {
                let cij = &data.cycles[j][i];
                c.push(ambient.sub(&ambient.var(v), &embed(cij, &ambient)));
                debug_assert_eq!(substitution.len(), v);
                substitution.push(cij.clone());
            }
        }
    }
    let a: Vec<Poly<F>> = (0..g)
        .map(|j| {
            (0..f).fold(Poly::zero(), |acc, i| match ct[i][j] {
                Some(v) => ambient.add(&acc, &ambient.mul(&ambient.var(bt[i]), &ambient.var(v))),
                None => acc,
            })
        })
        .collect();
    let b: Vec<Poly<F>> = bt.iter().map(|&v| ambient.var(v)).collect();
    let pair = CIPairData { ambient, a, b, c, target: ring.clone(), substitution };

    let lifted = QuotientRing::new(pair.ambient.clone(), &pair.c)?;
    if let Some(j) = pair.a.iter().position(|p| !lifted.contains(p)) {
        return Err(Error::NotContained(format!("lifted relation {} is not in C̃", j + 1)));
    }
    Ok(pair)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairCheck {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairReport {
    pub checks: Vec<PairCheck>,
    /// `H_i` of the two-step Tate complex over `R` built from the pair,
    /// which computes `Tor_i^S(S/B, R)`.
    pub tor: Option<HomologyTable>,
    pub tor_vanishes: Option<bool>,
    pub passed: bool,
}

impl PairReport {
    pub fn check(&self, name_prefix: &str) -> Option<&PairCheck> {
        self.checks.iter().find(|c| c.name.starts_with(name_prefix))
    }
}

/// Writes each `a_j` as `Σ_i c_ij b_i` in the polynomial ring by linear
/// algebra in the degree of `a_j`.
fn cofactors<F: Field>(ambient: &Arc<PolyRing<F>>, a: &[Poly<F>], b: &[Poly<F>]) -> Result<Option<Vec<Vec<Poly<F>>>>> {
    let free = QuotientRing::new(ambient.clone(), &[])?;
    let field = ambient.field();
    let mut out = Vec::with_capacity(a.len());
    for aj in a {
        let Some(d) = ambient.require_homogeneous(aj)? else {
            out.push(vec![Poly::zero(); b.len()]);
            continue;
        };
        let mut labels = Vec::new();
        let mut cols = Vec::new();
        for (i, bi) in b.iter().enumerate() {
            let Some(e) = ambient.require_homogeneous(bi)? else { continue };
            for m in &free.std_monomials(d - e).monomials {
                labels.push((i, m.clone()));
                cols.push(free.coords(&ambient.mul_term(bi, m, &field.one()), d));
            }
        }
        let dim = free.dim(d);
        let rhs = free.coords(aj, d);
        let x = if cols.is_empty() {
            rhs.iter().all(|c| field.is_zero(c)).then(Vec::new)
        } else {
            solve(field, &Matrix::from_columns(&cols, dim, field.zero()), &rhs)
        };
        let Some(x) = x else { return Ok(None) };
        let mut c = vec![Poly::zero(); b.len()];
        for ((i, m), coef) in labels.into_iter().zip(x) {
            if !field.is_zero(&coef) {
                c[i] = ambient.add(&c[i], &ambient.term(m, coef));
            }
        }
        out.push(c);
    }
    Ok(Some(out))
}

/// Structural checks for a nested pair and the Tor-vanishing test
/// `Tor_i^S(S/B, R) = 0` for `1 <= i <= N`.
pub fn nested_pair_verify<F: Field>(
    pair: &CIPairData<F>,
    expected: &[Poly<F>],
    hom_bound: usize,
    degree_bound: i64,
) -> Result<PairReport> {
    let amb = &pair.ambient;
    let target = &pair.target;
    let n = amb.nvars();
    let mut checks = Vec::new();
    let mut push = |name: &str, passed: bool, detail: String| {
        checks.push(PairCheck { name: name.to_string(), passed, detail });
    };

    let b_ring = QuotientRing::new(amb.clone(), &pair.b)?;
    let outside: Vec<usize> = (0..pair.a.len()).filter(|&j| !b_ring.contains(&pair.a[j])).collect();
    let contained = outside.is_empty();
    push(
        "A ⊆ B",
        contained,
        if contained { "every generator of A reduces to 0 modulo B".into() } else { format!("A ⊄ B: generators {outside:?} of A are not in B") },
    );

    let a_ring = QuotientRing::new(amb.clone(), &pair.a)?;
    let a_ci = a_ring.krull_dimension() + pair.a.len() == n;
    let b_ci = b_ring.krull_dimension() + pair.b.len() == n;
    push(
        "(a) A and B are complete intersections",
        a_ci && b_ci,
        format!(
            "dim Q/A = {} with {} generators, dim Q/B = {} with {} generators, {n} variables",
            a_ring.krull_dimension(),
            pair.a.len(),
            b_ring.krull_dimension(),
            pair.b.len()
        ),
    );

    let rho_b: Vec<Poly<F>> = pair.b.iter().map(|p| pair.rho(p)).collect();
    let mu = minimalize_ideal_generators(target, &rho_b)?.len();
    push("(b) #B = μ(BR)", mu == pair.b.len(), format!("#B = {}, μ(BR) = {mu}", pair.b.len()));

    let i_ring = target.extend(expected)?;
    let br_ring = target.extend(&rho_b)?;
    let same = rho_b.iter().all(|p| i_ring.contains(p)) && expected.iter().all(|p| br_ring.contains(p));
    push("(c) BR = I", same, if same { "mutual membership holds".into() } else { "BR and I differ".into() });

    let a_zero = pair.a.iter().all(|p| pair.rho(p).is_zero());
    let c_zero = pair.c.iter().all(|p| pair.rho(p).is_zero());
    push(
        "(d) ρ(A) = 0 and ρ(C) = 0",
        a_zero && c_zero,
        format!("ρ(A) = 0: {a_zero}, ρ(C) = 0: {c_zero}"),
    );

    let mut tor = None;
    let mut tor_vanishes = None;
    let structural_ok = contained && checks.iter().all(|c| c.passed);
    let e_result: std::result::Result<String, String> = if !contained {
        Err("skipped: A ⊄ B".into())
    } else {
        match cofactors(amb, &pair.a, &pair.b)? {
            None => Err("A ⊄ B in the polynomial ring".into()),
            Some(cof) => {
                let phi: Vec<Vec<Poly<F>>> =
                    cof.iter().map(|col| col.iter().map(|c| pair.rho(c)).collect()).collect();
                let built: Result<TateData<F>> = extract_tate_data(target, &rho_b, Some(&phi), degree_bound);
                match built {
                    Err(e) => Err(format!("the coefficient matrix does not give minimal Tate data: {e}")),
                    Ok(data) => {
                        let p = build_two_step_tate(&data, hom_bound.max(1))?;
                        let idx: Vec<i64> = (1..=hom_bound.max(1) as i64).collect();
                        let h = p.complex.homology(target, &idx, degree_bound)?;
                        let vanishes = h.entries.is_empty();
                        let scope = match h.up_to_degree {
                            Some(d) => format!(" up to internal degree {d}"),
                            None => String::new(),
                        };
                        tor_vanishes = Some(vanishes);
                        tor = Some(h);
                        if vanishes {
                            Ok(format!("Tor_i(S/B, R) = 0 for 1 <= i <= {hom_bound}{scope}"))
                        } else {
                            Err(format!("Tor_i(S/B, R) is nonzero for some 1 <= i <= {hom_bound}{scope}"))
                        }
                    }
                }
            }
        }
    };
    let e_ok = e_result.is_ok();
    let detail = match e_result {
        Ok(s) | Err(s) => s,
    };
    checks.push(PairCheck { name: "(e) Tor vanishing".into(), passed: e_ok, detail });
    let passed = structural_ok && e_ok;
    Ok(PairReport { checks, tor, tor_vanishes, passed })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::PrimeField;

    fn setup(vars: &[&str], c: &[&str]) -> Arc<QuotientRing<PrimeField>> {
        let r = PolyRing::new(PolyRingSpec::new(vars).unwrap(), PrimeField::new(32003).unwrap());
        let c: Vec<_> = c.iter().map(|s| r.parse(s).unwrap()).collect();
        Arc::new(QuotientRing::new(r, &c).unwrap())
    }

    #[test]
    fn dual_numbers_lift() {
        let q = setup(&["x"], &["x^2"]);
        let x = q.ring().var(0);
        let data = extract_tate_data(&q, std::slice::from_ref(&x), None, 0).unwrap();
        let pair = generic_lift(&data).unwrap();
        assert_eq!(pair.ambient.spec().names, vec!["x", "bt1", "ct1_1"]);
        assert_eq!(pair.ambient.spec().weights, vec![1, 1, 1]);
        assert_eq!(pair.a.len(), 1);
        let report = nested_pair_verify(&pair, &[x], 4, 0).unwrap();
        assert!(report.passed, "{report:?}");
        assert_eq!(report.tor_vanishes, Some(true));
    }

    #[test]
    fn regular_sequence_lift_is_trivial() {
        let q = setup(&["x", "y"], &[]);
        let r = q.ring();
        let gens = vec![r.var(0), r.var(1)];
        let data = extract_tate_data(&q, &gens, None, 6).unwrap();
        let pair = generic_lift(&data).unwrap();
        assert!(pair.a.is_empty());
        assert_eq!(pair.b.len(), 2);
        assert!(nested_pair_verify(&pair, &gens, 3, 6).unwrap().passed);
    }

    #[test]
    fn corrupted_pair_fails_containment() {
        let q = setup(&["x"], &["x^2"]);
        let x = q.ring().var(0);
        let data = extract_tate_data(&q, std::slice::from_ref(&x), None, 0).unwrap();
        let mut pair = generic_lift(&data).unwrap();
        pair.a = vec![pair.ambient.parse("ct1_1^2").unwrap()];
        let report = nested_pair_verify(&pair, &[x], 3, 0).unwrap();
        assert!(!report.passed);
        let c = report.check("A ⊆ B").unwrap();
        assert!(!c.passed && c.detail.starts_with("A ⊄ B"));
    }

    #[test]
    fn name_clashes_are_avoided() {
        let q = setup(&["bt1", "y"], &["bt1^2"]);
        let data = extract_tate_data(&q, &[q.ring().var(0)], None, 6).unwrap();
        let pair = generic_lift(&data).unwrap();
        assert_eq!(pair.ambient.spec().names[2], "_bt1");
    }
}
