use std::fmt::Write;
use std::sync::Arc;

use anyhow::{bail, Context, Result};
use serde_json::{json, Value};
use tatecx::groebner::QuotientRing;
use tatecx::polyring::{Field, Poly, PolyRing};
use tatecx::qci::{
    betti_over_ci, dimension_theorem_check, generic_lift, minimalize_ideal_generators, nested_pair_verify,
    qci_check, CIPairData, PairReport, QciOptions, Splitting, Verdict,
};
use tatecx::tate::{build_complete_tate, build_koszul, build_two_step_tate, extract_tate_data, tate_rank_series, TateData};

use crate::report::{homology_grid, list, to_value};
use crate::session::Loaded;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Command {
    Gb,
    Hilbert,
    Koszul,
    Qci,
    Tate,
    CompleteTate,
    Betti,
    Lift,
    Pair,
    DimCheck,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Gb => "gb",
            Command::Hilbert => "hilbert",
            Command::Koszul => "koszul",
            Command::Qci => "qci",
            Command::Tate => "tate",
            Command::CompleteTate => "complete-tate",
            Command::Betti => "betti",
            Command::Lift => "lift",
            Command::Pair => "pair",
            Command::DimCheck => "dim-check",
        }
    }
}

/// Options after merging flags, session options and defaults.
#[derive(Debug, Clone)]
pub struct Settings {
    pub hom_bound: Option<usize>,
    pub deg_bound: i64,
    pub trials: usize,
    pub seed: u64,
    pub check_t: bool,
    pub lutz: bool,
    pub t_window: Option<(i64, i64)>,
    pub splitting: Splitting,
}

pub struct Outcome {
    pub result: Value,
    pub human: String,
    pub inconclusive: bool,
    /// Homological bound actually used, when the command has one.
    pub hom_bound: Option<usize>,
}

fn print_all<F: Field>(ring: &PolyRing<F>, polys: &[Poly<F>]) -> Vec<String> {
    polys.iter().map(|p| ring.print(p)).collect()
}

fn tate_data<F: Field>(s: &Loaded<F>, set: &Settings) -> Result<TateData<F>> {
    extract_tate_data(&s.quotient, &s.ideal, s.phi.as_deref(), set.deg_bound).context("extracting Tate data")
}

pub fn run<F: Field>(cmd: Command, s: &Loaded<F>, set: &Settings) -> Result<Outcome> {
    match cmd {
        Command::Gb => gb(s),
        Command::Hilbert => hilbert(s, set),
        Command::Koszul => koszul(s, set),
        Command::Qci => qci(s, set),
        Command::Tate => tate(s, set),
        Command::CompleteTate => complete_tate(s, set),
        Command::Betti => betti(s, set),
        Command::Lift => lift(s, set),
        Command::Pair => pair(s, set),
        Command::DimCheck => dim_check(s, set),
    }
}

fn definite(result: Value, human: String, hom_bound: Option<usize>) -> Outcome {
    Outcome { result, human, inconclusive: false, hom_bound }
}

fn gb<F: Field>(s: &Loaded<F>) -> Result<Outcome> {
    let r = &s.ring;
    let c = print_all(r, &s.quotient.groebner_basis().polys);
    let ci = s.quotient.extend(&s.ideal).context("key `ideal`")?;
    let ci_gb = print_all(r, &ci.groebner_basis().polys);
    let human = format!("GB(C) [{}]: {}\nGB(C + I) [{}]: {}\n", c.len(), list(&c), ci_gb.len(), list(&ci_gb));
    Ok(definite(
        json!({ "order": r.spec().order, "quotient": c, "quotient_plus_ideal": ci_gb }),
        human,
        None,
    ))
}

fn hilbert<F: Field>(s: &Loaded<F>, set: &Settings) -> Result<Outcome> {
    let d = set.deg_bound;
    let hr = s.quotient.hilbert_series(d);
    let ri = s.quotient.extend(&s.ideal).context("key `ideal`")?;
    let hri = ri.hilbert_series(d);
    let mut human = String::new();
    let _ = writeln!(human, "dim R = {}, dim R/I = {}", hr.krull_dim, hri.krull_dim);
    let _ = writeln!(human, "H_R     : {:?}", hr.values);
    let _ = writeln!(human, "H_(R/I) : {:?}", hri.values);
    Ok(definite(json!({ "ring": to_value(&hr), "ring_mod_ideal": to_value(&hri) }), human, None))
}

fn koszul<F: Field>(s: &Loaded<F>, set: &Settings) -> Result<Outcome> {
    let gens = minimalize_ideal_generators(&s.quotient, &s.ideal)?;
    let k = build_koszul(&s.quotient, &gens)?;
    let f = gens.len();
    let idx: Vec<i64> = (0..=f as i64).collect();
    let h = k.homology(&s.quotient, &idx, set.deg_bound)?;
    let ranks: Vec<usize> = (0..=f as i64).map(|i| k.rank(i)).collect();
    let printed = print_all(&s.ring, &gens);
    let human = format!("minimal generators: {}\nranks: {ranks:?}\n{}", list(&printed), homology_grid("H_i(K)", &h));
    Ok(definite(json!({ "generators": printed, "f": f, "ranks": ranks, "homology": to_value(&h) }), human, None))
}

fn qci_options<F: Field>(s: &Loaded<F>, set: &Settings) -> QciOptions<F> {
    QciOptions {
        hom_bound: set.hom_bound,
        deg_bound: set.deg_bound,
        phi_override: s.phi.clone(),
        check_t: set.check_t,
        t_window: set.t_window,
        lutz_mode: set.lutz,
        trials: set.trials,
        seed: set.seed,
    }
}

fn qci<F: Field>(s: &Loaded<F>, set: &Settings) -> Result<Outcome> {
    let cert = qci_check(&s.quotient, &s.ideal, &qci_options(s, set))?;
    let mut human = String::new();
    let _ = writeln!(human, "verdict: {} ({})", cert.verdict.as_str(), cert.reason);
    let _ = writeln!(human, "f = {}, g = {}, generators: {}", cert.f, cert.g, list(&cert.generators));
    let _ = writeln!(
        human,
        "grade >= {}{} (dim R - dim R/I = {}), hypothesis {:?}",
        cert.grade.value,
        if cert.grade.exact { " exact" } else { "" },
        cert.grade.upper_bound,
        cert.hypothesis
    );
    let _ = writeln!(human, "ranks P_0..P_{}: {:?}", cert.hom_bound, cert.ranks_p);
    human.push_str(&homology_grid("H_i(P)", &cert.homology_p));
    let starts: Vec<i64> = cert.windows.iter().map(|w| w.start).collect();
    let _ = writeln!(human, "vanishing windows of length {}: starts {starts:?}", cert.g + 1);
    if let Some(lw) = &cert.lutz_windows {
        let starts: Vec<i64> = lw.iter().map(|w| w.start).collect();
        let _ = writeln!(human, "Lutz windows: starts {starts:?}");
    }
    if let Some(w) = &cert.witness {
        let _ = writeln!(human, "witness: dim H_{}(P)_{} = {}", w.index, w.degree, w.dim);
    }
    if let Some(t) = &cert.complete_tate {
        let _ = writeln!(human, "complete Tate on [{}, {}]: exact = {}, minimal = {}", t.window.0, t.window.1, t.exact, t.minimal);
    }
    Ok(Outcome {
        inconclusive: cert.verdict == Verdict::Inconclusive,
        hom_bound: Some(cert.hom_bound),
        result: to_value(&cert),
        human,
    })
}

fn tate<F: Field>(s: &Loaded<F>, set: &Settings) -> Result<Outcome> {
    let data = tate_data(s, set)?;
    let n = set.hom_bound.unwrap_or(data.g() + 3).max(1);
    let p = build_two_step_tate(&data, n)?;
    let idx: Vec<i64> = (0..=n as i64).collect();
    let h = p.complex.homology(&s.quotient, &idx, set.deg_bound)?;
    let ranks: Vec<usize> = (0..=n as i64).map(|i| p.rank(i)).collect();
    let expected = tate_rank_series(data.f(), data.g(), n);
    let human = format!("f = {}, g = {}\nranks P_0..P_{n}: {ranks:?}\n{}", data.f(), data.g(), homology_grid("H_i(P)", &h));
    Ok(definite(
        json!({
            "f": data.f(),
            "g": data.g(),
            "generator_degrees": data.generator_degrees,
            "cycle_degrees": data.cycle_degrees,
            "ranks": ranks,
            "rank_series": expected,
            "homology": to_value(&h),
        }),
        human,
        Some(n),
    ))
}

fn complete_tate<F: Field>(s: &Loaded<F>, set: &Settings) -> Result<Outcome> {
    let data = tate_data(s, set)?;
    let (f, g) = (data.f() as i64, data.g() as i64);
    if g > f {
        bail!("g = {g} exceeds f = {f}; the complete Tate complex is not defined");
    }
    let (lo, hi) = set.t_window.unwrap_or((-(g + 2), f + 2));
    let t = build_complete_tate(&data, lo, hi)?;
    t.complex.verify(&s.quotient)?;
    let ring = &s.quotient;
    let h = t.complex.homology(ring, &(lo + 1..hi).collect::<Vec<_>>(), set.deg_bound)?;
    let dual = t.complex.dual();
    let dh = dual.homology(ring, &(-hi + 1..-lo).collect::<Vec<_>>(), set.deg_bound)?;
    let ranks: Vec<(i64, usize)> = (lo..=hi).map(|i| (i, t.rank(i))).collect();
    let mirror = f - g - 1;
    let symmetric = (lo..=hi).filter(|i| (lo..=hi).contains(&(mirror - i))).all(|i| t.rank(i) == t.rank(mirror - i));
    let exact = h.entries.is_empty() && dh.entries.is_empty();
    let minimal = t.complex.is_minimal(ring);
    let mut human = format!("window [{lo}, {hi}], ranks: {ranks:?}\n");
    human.push_str(&homology_grid("H_i(T)", &h));
    human.push_str(&homology_grid("H^i(T*)", &dh));
    let _ = writeln!(human, "exact = {exact}, minimal = {minimal}, rank T_i = rank T_{{{mirror}-i}}: {symmetric}");
    Ok(definite(
        json!({
            "f": f,
            "g": g,
            "window": [lo, hi],
            "ranks": ranks,
            "homology": to_value(&h),
            "dual_homology": to_value(&dh),
            "exact": exact,
            "minimal": minimal,
            "rank_symmetry": symmetric,
        }),
        human,
        None,
    ))
}

fn betti<F: Field>(s: &Loaded<F>, set: &Settings) -> Result<Outcome> {
    let Some(p) = &s.pair else { bail!("key `pair`: betti needs `pair.a` for the complete intersection A") };
    let n = set.hom_bound.unwrap_or(s.ring.nvars() + 3);
    let table = betti_over_ci(&s.ring, &p.a, &s.quotient_gens, n, set.deg_bound, set.splitting)?;
    let mut human = homology_grid("b_ij = dim Tor_i^(Q/A)(R, k)_j", &table.table);
    let totals: Vec<usize> = (0..=n as i64).map(|i| table.total(i)).collect();
    let _ = writeln!(human, "totals: {totals:?}");
    Ok(definite(json!({ "betti": to_value(&table.table), "totals": totals }), human, Some(n)))
}

fn pair_human(report: &PairReport) -> String {
    let mut out = String::new();
    for c in &report.checks {
        let _ = writeln!(out, "[{}] {}: {}", if c.passed { "pass" } else { "FAIL" }, c.name, c.detail);
    }
    let _ = writeln!(out, "overall: {}", if report.passed { "pass" } else { "FAIL" });
    out
}

fn lift<F: Field>(s: &Loaded<F>, set: &Settings) -> Result<Outcome> {
    let data = tate_data(s, set)?;
    let n = set.hom_bound.unwrap_or(data.g() + 1).max(1);
    let pair = generic_lift(&data)?;
    let report = nested_pair_verify(&pair, &data.generators, n, set.deg_bound)?;
    let amb = &pair.ambient;
    let spec = amb.spec();
    let substitution: Vec<Value> = spec
        .names
        .iter()
        .zip(&pair.substitution)
        .map(|(v, img)| json!([v, s.ring.print(img)]))
        .collect();
    let mut human = format!(
        "ambient: {} with weights {:?}\nA: {}\nB: {}\n",
        list(&spec.names),
        spec.weights,
        list(&print_all(amb, &pair.a)),
        list(&print_all(amb, &pair.b))
    );
    human.push_str(&pair_human(&report));
    Ok(definite(
        json!({
            "ambient": { "variables": spec.names, "weights": spec.weights },
            "a": print_all(amb, &pair.a),
            "b": print_all(amb, &pair.b),
            "c": print_all(amb, &pair.c),
            "substitution": substitution,
            "verification": to_value(&report),
        }),
        human,
        Some(n),
    ))
}

fn session_pair<F: Field>(s: &Loaded<F>) -> Result<CIPairData<F>> {
    let Some(p) = &s.pair else { bail!("key `pair`: this command needs a pair block") };
    Ok(CIPairData {
        ambient: s.ring.clone(),
        a: p.a.clone(),
        b: p.b.clone(),
        c: s.quotient_gens.clone(),
        target: s.quotient.clone(),
        substitution: p.substitution.clone(),
    })
}

fn pair<F: Field>(s: &Loaded<F>, set: &Settings) -> Result<Outcome> {
    let pair = session_pair(s)?;
    let n = set.hom_bound.unwrap_or(pair.a.len() + 1).max(1);
    let report = nested_pair_verify(&pair, &s.ideal, n, set.deg_bound)?;
    let human = pair_human(&report);
    Ok(definite(to_value(&report), human, Some(n)))
}

fn dim_check<F: Field>(s: &Loaded<F>, set: &Settings) -> Result<Outcome> {
    let pair = s.pair.as_ref().map(|_| session_pair(s)).transpose()?;
    let rep = dimension_theorem_check(&s.quotient, &s.ideal, pair.as_ref(), set.deg_bound)?;
    let mut human = String::new();
    if rep.skipped {
        let _ = writeln!(human, "skipped: verdict is {}", rep.verdict.as_str());
    } else {
        let _ = writeln!(
            human,
            "grade I = {} vs dim R - dim R/I = {} - {}: {}",
            rep.grade,
            rep.dim_r,
            rep.dim_r_mod_i,
            if rep.grade == rep.dim_r as i64 - rep.dim_r_mod_i as i64 { "holds" } else { "FAILS" }
        );
        if let Some(sc) = &rep.series {
            let _ = writeln!(human, "H_(R/I) H_S     : {:?}", sc.lhs);
            let _ = writeln!(human, "H_(S/B) H_R     : {:?}", sc.rhs);
            let _ = writeln!(human, "series identity mod t^{}: {}", sc.up_to + 1, if sc.holds { "holds" } else { "FAILS" });
        }
    }
    Ok(Outcome {
        inconclusive: rep.verdict == Verdict::Inconclusive,
        result: to_value(&rep),
        human,
        hom_bound: None,
    })
}

/// Default internal-degree bound: the top degree for artinian rings, else 12.
pub fn default_deg_bound<F: Field>(q: &Arc<QuotientRing<F>>) -> i64 {
    q.top_degree().unwrap_or(12)
}
