use std::sync::Arc;

use super::build_koszul;
use crate::error::{Error, Result};
use crate::groebner::QuotientRing;
use crate::homalg::linalg::{rank, Matrix};
use crate::homalg::{minimal_generators, GradedChainComplex};
use crate::polyring::{Field, Poly};
use crate::qci::minimalize_ideal_generators;

/// Generators `b_1..b_f` of `I` (the map `ξ`) and 1-cycles `z_1..z_g` of the
/// Koszul complex on them (the map `φ`), with internal degrees.
#[derive(Debug, Clone)]
pub struct TateData<F: Field> {
    pub ring: Arc<QuotientRing<F>>,
    pub generators: Vec<Poly<F>>,
    pub generator_degrees: Vec<i64>,
    /// `cycles[j][i] = c_ij` with `z_j = Σ_i c_ij v_i`.
    pub cycles: Vec<Vec<Poly<F>>>,
    pub cycle_degrees: Vec<i64>,
    /// Set when `H_1` was only examined up to this internal degree.
    pub h1_up_to: Option<i64>,
}

impl<F: Field> TateData<F> {
    pub fn f(&self) -> usize {
        self.generators.len()
    }

    pub fn g(&self) -> usize {
        self.cycles.len()
    }

    /// `σ = Σ deg b_i`, the degree of the orientation `v_1 ∧ ... ∧ v_f`.
    pub fn sigma(&self) -> i64 {
        self.generator_degrees.iter().sum()
    }

    /// `γ = Σ deg z_j`, the degree of `∧^g G`.
    pub fn gamma(&self) -> i64 {
        self.cycle_degrees.iter().sum()
    }

    pub(crate) fn from_parts_unchecked(
        ring: Arc<QuotientRing<F>>,
        generators: Vec<Poly<F>>,
        generator_degrees: Vec<i64>,
        cycles: Vec<Vec<Poly<F>>>,
        cycle_degrees: Vec<i64>,
    ) -> Self {
        TateData { ring, generators, generator_degrees, cycles, cycle_degrees, h1_up_to: None }
    }

    /// Tate data from explicit generators and cycles. Only homogeneity and
    /// the cycle condition `Σ_i b_i c_ij = 0` are checked; minimality is not.
    pub fn from_parts(ring: Arc<QuotientRing<F>>, generators: Vec<Poly<F>>, cycles: Vec<Vec<Poly<F>>>) -> Result<Self> {
        let generators: Vec<Poly<F>> = generators.iter().map(|b| ring.normal_form(b)).collect();
        let mut generator_degrees = Vec::with_capacity(generators.len());
        for (k, b) in generators.iter().enumerate() {
            match ring.ring().require_homogeneous(b)? {
                Some(d) => generator_degrees.push(d),
                None => return Err(Error::ZeroGenerator(k)),
            }
        }
        let cycles: Vec<Vec<Poly<F>>> =
            cycles.iter().map(|z| z.iter().map(|c| ring.normal_form(c)).collect()).collect();
        let cycle_degrees = cycle_degrees(&ring, &generator_degrees, &cycles)?;
        for (j, z) in cycles.iter().enumerate() {
            if !is_cycle(&ring, &generators, z) {
                return Err(Error::NotACycle(j));
            }
        }
        Ok(TateData { ring, generators, generator_degrees, cycles, cycle_degrees, h1_up_to: None })
    }
}

fn is_cycle<F: Field>(ring: &QuotientRing<F>, gens: &[Poly<F>], z: &[Poly<F>]) -> bool {
    let r = ring.ring();
    let s = gens.iter().zip(z).fold(Poly::zero(), |acc, (b, c)| r.add(&acc, &r.mul(b, c)));
    ring.contains(&s)
}

/// Internal degree of each cycle column, from its nonzero entries.
fn cycle_degrees<F: Field>(ring: &QuotientRing<F>, gen_degrees: &[i64], cycles: &[Vec<Poly<F>>]) -> Result<Vec<i64>> {
    let f = gen_degrees.len();
    let mut out = Vec::with_capacity(cycles.len());
    for (j, z) in cycles.iter().enumerate() {
        if z.len() != f {
            return Err(Error::Shape(format!("cycle {j} has {} entries, expected {f}", z.len())));
        }
        let mut deg = None;
        for (i, c) in z.iter().enumerate() {
            if let Some(d) = ring.ring().require_homogeneous(c)? {
                let total = d + gen_degrees[i];
                match deg {
                    None => deg = Some(total),
                    Some(e) if e != total => {
                        return Err(Error::Inhomogeneous(format!("cycle {j} mixes degrees {e} and {total}")))
                    }
                    _ => {}
                }
            }
        }
        match deg {
            Some(d) => out.push(d),
            None => return Err(Error::NotMinimalGeneration(format!("cycle {j} is zero"))),
        }
    }
    Ok(out)
}

/// Minimal generators `b` of `I` and cycles `z` whose classes minimally
/// generate `H_1` of the Koszul complex on `b`.
///
/// With `phi_override` (columns are the cycles) the generators must already
/// be minimal and are kept in the given order; the supplied cycles are
/// checked to be 1-cycles whose classes minimally generate `H_1`.
/// For non-artinian rings `H_1` is examined up to internal degree
/// `degree_bound`.
pub fn extract_tate_data<F: Field>(
    ring: &Arc<QuotientRing<F>>,
    gens: &[Poly<F>],
    phi_override: Option<&[Vec<Poly<F>>]>,
    degree_bound: i64,
) -> Result<TateData<F>> {
    let minimal = minimalize_ideal_generators(ring, gens)?;
    let generators = match phi_override {
        Some(_) => {
            if minimal.len() != gens.len() {
                return Err(Error::NotMinimalGeneration(format!(
                    "{} generators given but the ideal needs only {}",
                    gens.len(),
                    minimal.len()
                )));
            }
            gens.iter().map(|b| ring.normal_form(b)).collect()
        }
        None => minimal,
    };
    let koszul = build_koszul(ring, &generators)?;
    let generator_degrees: Vec<i64> = koszul.module(1).twists.clone();
    let (degrees, truncated) = koszul.degree_range(ring, 1, degree_bound);
    let found = minimal_generators(
        ring,
        &koszul.module(1),
        koszul.differential(2),
        koszul.differential(1),
        degrees.iter().copied(),
    )?;
    let data = match phi_override {
        None => TateData {
            ring: ring.clone(),
            generators,
            generator_degrees,
            cycle_degrees: found.iter().map(|z| z.degree).collect(),
            cycles: found.into_iter().map(|z| z.coords).collect(),
            h1_up_to: None,
        },
        Some(phi) => {
            let mut data = TateData::from_parts(ring.clone(), generators, phi.to_vec())?;
            if data.g() != found.len() {
                return Err(Error::NotMinimalGeneration(format!(
                    "{} cycles given but H_1 needs {} generators",
                    data.g(),
                    found.len()
                )));
            }
            check_generates_cycles(ring, &koszul, &data, &degrees)?;
            data.generator_degrees = generator_degrees;
            data
        }
    };
    Ok(TateData { h1_up_to: truncated.then_some(degree_bound), ..data })
}

/// In every degree, boundaries plus the submodule spanned by the given
/// cycles must fill all of `Z_1`.
fn check_generates_cycles<F: Field>(
    ring: &QuotientRing<F>,
    koszul: &GradedChainComplex<F>,
    data: &TateData<F>,
    degrees: &[i64],
) -> Result<()> {
    let field = ring.field();
    let r = ring.ring();
    let f1 = koszul.module(1);
    for &j in degrees {
        let z_dim = f1.dim(ring, j) - koszul.differential_rank(ring, 1, j);
        let b = koszul.differential(2).unwrap().matrix_at_degree(ring, j);
        let mut cols: Vec<Vec<F::Elem>> = (0..b.ncols).map(|c| b.column(c)).collect();
        for (z, &d) in data.cycles.iter().zip(&data.cycle_degrees) {
            for m in &ring.std_monomials(j - d).monomials {
                let mp = r.monomial(m.clone());
                let v: Vec<Poly<F>> = z.iter().map(|c| ring.normal_form(&r.mul(c, &mp))).collect();
                cols.push(f1.coords(ring, &v, j));
            }
        }
        let span = if cols.is_empty() {
            0
        } else {
            rank(field, &Matrix::from_columns(&cols, f1.dim(ring, j), field.zero()))
        };
        if span < z_dim {
            return Err(Error::NotMinimalGeneration(format!(
                "the given cycles miss part of H_1 in degree {j}"
            )));
        }
    }
    Ok(())
}
