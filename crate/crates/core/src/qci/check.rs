use std::sync::Arc;

use serde::Serialize;

use super::grade::{grade_probe, GradeEvidence};
use crate::error::Result;
use crate::groebner::QuotientRing;
use crate::homalg::{HomologyEntry, HomologyTable};
use crate::polyring::{Field, Poly};
use crate::tate::{build_complete_tate, build_two_step_tate, extract_tate_data, TateData};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Qci,
    NotQci,
    Inconclusive,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Qci => "qci",
            Verdict::NotQci => "not_qci",
            Verdict::Inconclusive => "inconclusive",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Hypothesis {
    /// `0 <= f - g <= grade`.
    Holds,
    Fails,
    /// The grade is only a lower bound and `f - g` exceeds it.
    Unverified,
}

#[derive(Debug, Clone)]
pub struct QciOptions<F: Field> {
    /// Homological bound; the effective bound is at least `g + 2`.
    pub hom_bound: Option<usize>,
    /// Internal degree bound for non-artinian rings.
    pub deg_bound: i64,
    pub phi_override: Option<Vec<Vec<Poly<F>>>>,
    pub check_t: bool,
    /// Window for the complete Tate complex; defaults to `[-(g+2), f+2]`.
    pub t_window: Option<(i64, i64)>,
    pub lutz_mode: bool,
    pub trials: usize,
    pub seed: u64,
}

impl<F: Field> Default for QciOptions<F> {
    fn default() -> Self {
        QciOptions {
            hom_bound: None,
            deg_bound: 12,
            phi_override: None,
            check_t: false,
            t_window: None,
            lutz_mode: false,
            trials: 20,
            seed: 0x7a7e,
        }
    }
}

/// Consecutive vanishing indices `start .. start + len - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Window {
    pub start: i64,
    pub len: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CompleteTateCheck {
    pub window: (i64, i64),
    pub homology: HomologyTable,
    pub dual_homology: HomologyTable,
    pub ranks: Vec<(i64, usize)>,
    pub exact: bool,
    pub minimal: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QciCertificate {
    pub f: usize,
    pub g: usize,
    pub generators: Vec<String>,
    pub generator_degrees: Vec<i64>,
    pub cycle_degrees: Vec<i64>,
    pub grade: GradeEvidence,
    pub hypothesis: Hypothesis,
    pub hypothesis_ok: bool,
    pub artinian: bool,
    pub hom_bound: usize,
    pub deg_bound: Option<i64>,
    pub ranks_p: Vec<usize>,
    pub homology_p: HomologyTable,
    pub windows: Vec<Window>,
    pub lutz_windows: Option<Vec<Window>>,
    pub witness: Option<HomologyEntry>,
    pub complete_tate: Option<CompleteTateCheck>,
    pub verdict: Verdict,
    pub reason: String,
}

/// Starts `s >= min_start` with `H_s = ... = H_{s+len-1} = 0` inside `1..=n`.
fn vanishing_windows(h: &HomologyTable, n: usize, len: usize, min_start: i64) -> Vec<Window> {
    let n = n as i64;
    let len_i = len as i64;
    (min_start..=n - len_i + 1)
        .filter(|&s| (s..s + len_i).all(|i| h.is_zero_at(i)))
        .map(|start| Window { start, len })
        .collect()
}

/// Runs minimalization, Tate data extraction, the grade probe, the
/// homology of the two-step Tate complex, and the window scan.
pub fn qci_check<F: Field>(
    ring: &Arc<QuotientRing<F>>,
    gens: &[Poly<F>],
    opts: &QciOptions<F>,
) -> Result<QciCertificate> {
    let data = extract_tate_data(ring, gens, opts.phi_override.as_deref(), opts.deg_bound)?;
    let grade = grade_probe(ring, &data.generators, opts.trials, opts.deg_bound, opts.seed)?;
    qci_check_with(ring, data, grade, opts)
}

pub(crate) fn qci_check_with<F: Field>(
    ring: &Arc<QuotientRing<F>>,
    data: TateData<F>,
    grade: GradeEvidence,
    opts: &QciOptions<F>,
) -> Result<QciCertificate> {
    let (f, g) = (data.f(), data.g());
    let artinian = ring.is_artinian();
    let n = opts.hom_bound.unwrap_or(g + 3).max(g + 2);
    let d = opts.deg_bound;

    let p = build_two_step_tate(&data, n)?;
    let indices: Vec<i64> = (1..=n as i64).collect();
    let homology_p = p.complex.homology(ring, &indices, d)?;
    let ranks_p = (0..=n as i64).map(|i| p.rank(i)).collect();
    let windows = vanishing_windows(&homology_p, n, g + 1, 1);
    let lutz_windows = (opts.lutz_mode && f + 1 > grade.value)
        .then(|| vanishing_windows(&homology_p, n, f - grade.value + 1, 2));
    let witness = homology_p.first_nonzero().cloned();

    let fg = f as i64 - g as i64;
    let hypothesis = if fg < 0 {
        Hypothesis::Fails
    } else if fg as usize <= grade.value {
        // a lower bound for the grade suffices here
        Hypothesis::Holds
    } else if grade.exact {
        Hypothesis::Fails
    } else {
        Hypothesis::Unverified
    };
    let hypothesis_ok = hypothesis == Hypothesis::Holds;

    let ci_certificate = g == 0 && grade.exact && grade.value == f;
    let (verdict, reason) = if g > f {
        (Verdict::NotQci, format!("g = {g} exceeds f = {f}"))
    } else if hypothesis == Hypothesis::Fails {
        (Verdict::NotQci, format!("f - g = {fg} exceeds the exact grade {}", grade.value))
    } else if let Some(w) = &witness {
        (Verdict::NotQci, format!("H_{}(P) is nonzero in degree {}", w.index, w.degree))
    } else if artinian && hypothesis_ok && !windows.is_empty() {
        (Verdict::Qci, format!("H_i(P) = 0 for 1 <= i <= {n} over the full support"))
    } else if ci_certificate {
        (Verdict::Qci, format!("the generators form a regular sequence of length {f}"))
    } else if !artinian {
        (Verdict::Inconclusive, format!("H_i(P) vanishes for 1 <= i <= {n} only up to internal degree {d}"))
    } else {
        (Verdict::Inconclusive, "hypothesis 0 <= f - g <= grade not verified".to_string())
    };

    let complete_tate = if opts.check_t && g <= f {
        let (lo, hi) = opts.t_window.unwrap_or((-(g as i64 + 2), f as i64 + 2));
        let t = build_complete_tate(&data, lo, hi)?;
        t.complex.verify(ring)?;
        let idx: Vec<i64> = (lo + 1..hi).collect();
        let homology = t.complex.homology(ring, &idx, d)?;
        let dual = t.complex.dual();
        let didx: Vec<i64> = (-hi + 1..-lo).collect();
        let dual_homology = dual.homology(ring, &didx, d)?;
        let exact = homology.entries.is_empty() && dual_homology.entries.is_empty();
        Some(CompleteTateCheck {
            window: (lo, hi),
            ranks: (lo..=hi).map(|i| (i, t.rank(i))).collect(),
            minimal: t.complex.is_minimal(ring),
            homology,
            dual_homology,
            exact,
        })
    } else {
        None
    };

    let r = ring.ring();
    Ok(QciCertificate {
        f,
        g,
        generators: data.generators.iter().map(|b| r.print(b)).collect(),
        generator_degrees: data.generator_degrees.clone(),
        cycle_degrees: data.cycle_degrees.clone(),
        grade,
        hypothesis,
        hypothesis_ok,
        artinian,
        hom_bound: n,
        deg_bound: (!artinian).then_some(d),
        ranks_p,
        homology_p,
        windows,
        lutz_windows,
        witness,
        complete_tate,
        verdict,
        reason,
    })
}
