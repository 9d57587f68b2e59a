use std::sync::Arc;

use serde::Serialize;

use super::check::{qci_check, QciOptions, Verdict};
use super::lift::CIPairData;
use crate::error::Result;
use crate::groebner::QuotientRing;
use crate::polyring::{Field, Poly};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeriesCheck {
    pub up_to: i64,
    /// Coefficients of `H_{R/I} H_S`.
    pub lhs: Vec<u128>,
    /// Coefficients of `H_{S/B} H_R`.
    pub rhs: Vec<u128>,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DimensionReport {
    pub skipped: bool,
    pub verdict: Verdict,
    /// `μ(I) - μ(H_1)`, the grade of a qci ideal.
    pub grade: i64,
    pub dim_r: usize,
    pub dim_r_mod_i: usize,
    pub holds: bool,
    pub series: Option<SeriesCheck>,
}

fn series<F: Field>(q: &QuotientRing<F>, d: i64) -> Vec<u128> {
    (0..=d).map(|j| q.dim(j) as u128).collect()
}

fn truncated_product(a: &[u128], b: &[u128]) -> Vec<u128> {
    (0..a.len()).map(|k| (0..=k).map(|i| a[i] * b[k - i]).sum()).collect()
}

/// Checks `grade I = dim R - dim R/I` for a qci ideal and, given a nested
/// pair, `H_{R/I} H_S ≡ H_{S/B} H_R mod t^{D+1}`.
pub fn dimension_theorem_check<F: Field>(
    ring: &Arc<QuotientRing<F>>,
    gens: &[Poly<F>],
    pair: Option<&CIPairData<F>>,
    degree_bound: i64,
) -> Result<DimensionReport> {
    let opts = QciOptions { deg_bound: degree_bound, ..Default::default() };
    let cert = qci_check(ring, gens, &opts)?;
    let grade = cert.f as i64 - cert.g as i64;
    let r_mod_i = ring.extend(gens)?;
    let dim_r = ring.krull_dimension();
    let dim_r_mod_i = r_mod_i.krull_dimension();
    let skipped = cert.verdict != Verdict::Qci;
    let mut holds = !skipped && grade == dim_r as i64 - dim_r_mod_i as i64;

    let series = match pair {
        Some(p) if !skipped => {
            let s = QuotientRing::new(p.ambient.clone(), &p.a)?;
            let s_mod_b = s.extend(&p.b)?;
            let lhs = truncated_product(&series(&r_mod_i, degree_bound), &series(&s, degree_bound));
            let rhs = truncated_product(&series(&s_mod_b, degree_bound), &series(&p.target, degree_bound));
            let ok = lhs == rhs;
            holds &= ok;
            Some(SeriesCheck { up_to: degree_bound, lhs, rhs, holds: ok })
        }
        _ => None,
    };
    Ok(DimensionReport { skipped, verdict: cert.verdict, grade, dim_r, dim_r_mod_i, holds, series })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{PolyRing, PolyRingSpec, PrimeField};
    use crate::qci::generic_lift;
    use crate::tate::extract_tate_data;

    fn q(vars: &[&str], c: &[&str]) -> Arc<QuotientRing<PrimeField>> {
        let r = PolyRing::new(PolyRingSpec::new(vars).unwrap(), PrimeField::new(32003).unwrap());
        let c: Vec<_> = c.iter().map(|s| r.parse(s).unwrap()).collect();
        Arc::new(QuotientRing::new(r, &c).unwrap())
    }

    #[test]
    fn regular_sequence() {
        let r = q(&["x", "y"], &[]);
        let gens = vec![r.ring().var(0), r.ring().var(1)];
        let rep = dimension_theorem_check(&r, &gens, None, 6).unwrap();
        assert!(!rep.skipped && rep.holds);
        assert_eq!((rep.grade, rep.dim_r, rep.dim_r_mod_i), (2, 2, 0));
    }

    #[test]
    fn lifted_pair_satisfies_series_identity() {
        let r = q(&["x"], &["x^2"]);
        let gens = vec![r.ring().var(0)];
        let data = extract_tate_data(&r, &gens, None, 4).unwrap();
        let pair = generic_lift(&data).unwrap();
        let rep = dimension_theorem_check(&r, &gens, Some(&pair), 8).unwrap();
        assert!(rep.holds, "{rep:?}");
        assert!(rep.series.unwrap().holds);
    }

    #[test]
    fn non_qci_is_skipped() {
        let r = q(&["x", "y"], &[]);
        let gens: Vec<_> = ["x^2", "x*y"].iter().map(|s| r.ring().parse(s).unwrap()).collect();
        let rep = dimension_theorem_check(&r, &gens, None, 6).unwrap();
        assert!(rep.skipped && !rep.holds);
    }
}
