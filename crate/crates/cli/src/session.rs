//! Session files: a JSON document describing a ring, an ideal and options.
//!
//! ```json
//! {
//!   "schema": 1,
//!   "field": "GF(32003)",
//!   "variables": ["x", "y"],
//!   "weights": [1, 2],
//!   "order": "grevlex",
//!   "quotient": ["x^4"],
//!   "ideal": ["x^2 - y"],
//!   "phi": [["x"]],
//!   "pair": { "a": ["..."], "b": ["..."], "substitution": { "x": "..." } },
//!   "options": { "hom_bound": 5, "deg_bound": 12, "trials": 20, "seed": 31358,
//!                "check_t": false, "lutz_mode": false, "t_window": [-3, 4],
//!                "splitting_seed": 7 }
//! }
//! ```
//! Only `schema`, `field`, `variables` and `ideal` are required.

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

use anyhow::{bail, Context, Result};
use serde::{Deserialize, Serialize};
use tatecx::groebner::QuotientRing;
use tatecx::polyring::{Field, FieldSpec, MonomialOrder, Poly, PolyRing, PolyRingSpec};

pub const SCHEMA_VERSION: u32 = 1;
pub const DEFAULT_SEED: u64 = 0x7a7e;

#[derive(Debug, Clone, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct SessionFile {
    pub schema: u32,
    pub field: String,
    pub variables: Vec<String>,
    #[serde(default)]
    pub weights: Option<Vec<u32>>,
    #[serde(default)]
    pub order: Option<MonomialOrder>,
    #[serde(default)]
    pub quotient: Vec<String>,
    pub ideal: Vec<String>,
    /// Rows index generators, columns index cycles.
    #[serde(default)]
    pub phi: Option<Vec<Vec<String>>>,
    #[serde(default)]
    pub pair: Option<PairBlock>,
    #[serde(default)]
    pub options: Options,
}

#[derive(Debug, Clone, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct PairBlock {
    pub a: Vec<String>,
    pub b: Vec<String>,
    /// Image of each variable in the quotient ring; omitted variables map
    /// to themselves.
    #[serde(default)]
    pub substitution: BTreeMap<String, String>,
}

#[derive(Debug, Clone, Default, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct Options {
    pub hom_bound: Option<usize>,
    pub deg_bound: Option<i64>,
    pub trials: Option<usize>,
    pub seed: Option<u64>,
    pub check_t: Option<bool>,
    pub lutz_mode: Option<bool>,
    pub t_window: Option<(i64, i64)>,
    pub splitting_seed: Option<u64>,
}

impl SessionFile {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
        let session: SessionFile =
            serde_json::from_str(&text).with_context(|| format!("invalid session file {}", path.display()))?;
        if session.schema != SCHEMA_VERSION {
            bail!("key `schema`: unsupported version {} (expected {SCHEMA_VERSION})", session.schema);
        }
        Ok(session)
    }

    pub fn field_spec(&self) -> Result<FieldSpec> {
        FieldSpec::parse(&self.field).with_context(|| "key `field`")
    }
}

/// A session with every polynomial parsed.
pub struct Loaded<F: Field> {
    pub ring: Arc<PolyRing<F>>,
    pub quotient: Arc<QuotientRing<F>>,
    pub quotient_gens: Vec<Poly<F>>,
    pub ideal: Vec<Poly<F>>,
    pub phi: Option<Vec<Vec<Poly<F>>>>,
    pub pair: Option<LoadedPair<F>>,
}

pub struct LoadedPair<F: Field> {
    pub a: Vec<Poly<F>>,
    pub b: Vec<Poly<F>>,
    pub substitution: Vec<Poly<F>>,
}

fn parse_list<F: Field>(ring: &PolyRing<F>, key: &str, items: &[String]) -> Result<Vec<Poly<F>>> {
    items
        .iter()
        .enumerate()
        .map(|(k, s)| ring.parse(s).with_context(|| format!("key `{key}[{k}]`: cannot parse `{s}`")))
        .collect()
}

impl<F: Field> Loaded<F> {
    pub fn new(session: &SessionFile, field: F) -> Result<Self> {
        let n = session.variables.len();
        let weights = session.weights.clone().unwrap_or_else(|| vec![1; n]);
        let spec = PolyRingSpec::with_weights(session.variables.clone(), weights, session.order.unwrap_or_default())
            .context("keys `variables`/`weights`")?;
        let ring = PolyRing::new(spec, field);
        let quotient_gens = parse_list(&ring, "quotient", &session.quotient)?;
        let quotient = Arc::new(QuotientRing::new(ring.clone(), &quotient_gens).context("key `quotient`")?);
        let ideal = parse_list(&ring, "ideal", &session.ideal)?;
        let phi = match &session.phi {
            None => None,
            Some(rows) => {
                let parsed: Vec<Vec<Poly<F>>> = rows
                    .iter()
                    .enumerate()
                    .map(|(i, row)| parse_list(&ring, &format!("phi[{i}]"), row))
                    .collect::<Result<_>>()?;
                let g = parsed.first().map_or(0, Vec::len);
                if parsed.iter().any(|r| r.len() != g) {
                    bail!("key `phi`: rows have different lengths");
                }
                Some((0..g).map(|j| parsed.iter().map(|r| r[j].clone()).collect()).collect())
            }
        };
        let pair = match &session.pair {
            None => None,
            Some(p) => {
                let mut substitution: Vec<Poly<F>> = (0..n).map(|v| ring.var(v)).collect();
                for (name, image) in &p.substitution {
                    let v = ring
                        .spec()
                        .var_index(name)
                        .with_context(|| format!("key `pair.substitution`: unknown variable `{name}`"))?;
                    substitution[v] = ring
                        .parse(image)
                        .with_context(|| format!("key `pair.substitution.{name}`: cannot parse `{image}`"))?;
                }
                Some(LoadedPair {
                    a: parse_list(&ring, "pair.a", &p.a)?,
                    b: parse_list(&ring, "pair.b", &p.b)?,
                    substitution,
                })
            }
        };
        Ok(Loaded { ring, quotient, quotient_gens, ideal, phi, pair })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use tatecx::polyring::PrimeField;

    fn from_str(s: &str) -> SessionFile {
        serde_json::from_str(s).unwrap()
    }

    #[test]
    fn defaults_apply() {
        let s = from_str(r#"{"schema":1,"field":"GF(7)","variables":["x","y"],"ideal":["x"]}"#);
        let l = Loaded::new(&s, PrimeField::new(7).unwrap()).unwrap();
        assert_eq!(l.ring.spec().weights, vec![1, 1]);
        assert!(l.quotient.groebner_basis().polys.is_empty());
        assert!(l.phi.is_none() && l.pair.is_none());
    }

    #[test]
    fn phi_rows_become_cycle_columns() {
        let s = from_str(r#"{"schema":1,"field":"GF(7)","variables":["x","y"],"ideal":["x","y"],"phi":[["y","x"],["-x","0"]]}"#);
        let l = Loaded::new(&s, PrimeField::new(7).unwrap()).unwrap();
        let phi = l.phi.unwrap();
        let r = &l.ring;
        assert_eq!(phi.len(), 2);
        assert_eq!(phi[0], vec![r.parse("y").unwrap(), r.parse("-x").unwrap()]);
        assert_eq!(phi[1], vec![r.parse("x").unwrap(), Poly::zero()]);
    }

    #[test]
    fn substitution_defaults_to_identity() {
        let s = from_str(
            r#"{"schema":1,"field":"GF(7)","variables":["x","y"],"ideal":["x"],"pair":{"a":[],"b":["x"],"substitution":{"y":"x"}}}"#,
        );
        let l = Loaded::new(&s, PrimeField::new(7).unwrap()).unwrap();
        let p = l.pair.unwrap();
        assert_eq!(p.substitution, vec![l.ring.var(0), l.ring.var(0)]);
    }
}
