use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exponent vector, one entry per ring variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, v: usize) -> Self {
        let mut e = vec![0; nvars];
        e[v] = 1;
        Monomial(e)
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Number of variables counted with multiplicity (ignores weights).
    pub fn total_exponent(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial(other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect()))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Variables with a positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().filter(|(_, &e)| e > 0).map(|(v, _)| v)
    }

    /// Index of the only variable in the support, when the monomial is a pure power.
    pub fn pure_power_var(&self) -> Option<usize> {
        let mut it = self.support();
        let v = it.next()?;
        it.next().is_none().then_some(v)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MonomialOrder {
    /// Weighted degree first, ties broken by reverse lexicographic order on
    /// the raw exponents (the last variable decides).
    #[default]
    Grevlex,
    /// Pure lexicographic order with `x1 > x2 > ...`.
    Lex,
}

/// Variables, positive weights and the monomial order of a polynomial ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PolyRingSpec {
    pub names: Vec<String>,
    pub weights: Vec<u32>,
    pub order: MonomialOrder,
}

impl PolyRingSpec {
    /// Standard-graded ring with grevlex order.
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Self> {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        let weights = vec![1; names.len()];
        Self::with_weights(names, weights, MonomialOrder::Grevlex)
    }

    pub fn with_weights(names: Vec<String>, weights: Vec<u32>, order: MonomialOrder) -> Result<Self> {
        if names.len() != weights.len() {
            return Err(Error::InvalidRing(format!(
                "{} variables but {} weights",
                names.len(),
                weights.len()
            )));
        }
        for (i, n) in names.iter().enumerate() {
            if !is_identifier(n) {
                return Err(Error::InvalidRing(format!("`{n}` is not a valid variable name")));
            }
            if names[..i].contains(n) {
                return Err(Error::InvalidRing(format!("variable `{n}` declared twice")));
            }
        }
        if let Some(w) = weights.iter().position(|&w| w == 0) {
            return Err(Error::InvalidRing(format!("weight of `{}` must be positive", names[w])));
        }
        Ok(Self { names, weights, order })
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn degree(&self, m: &Monomial) -> i64 {
        m.0.iter().zip(&self.weights).map(|(&e, &w)| e as i64 * w as i64).sum()
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self.order {
            MonomialOrder::Grevlex => self
                .degree(a)
                .cmp(&self.degree(b))
                .then_with(|| {
                    for (x, y) in a.0.iter().zip(&b.0).rev() {
                        if x != y {
                            return y.cmp(x);
                        }
                    }
                    Ordering::Equal
                }),
            MonomialOrder::Lex => a.0.cmp(&b.0),
        }
    }

    /// All monomials of weighted degree `d`, sorted descending.
    pub fn monomials_of_degree(&self, d: i64) -> Vec<Monomial> {
        self.monomials_of_degree_filtered(d, |_| true)
    }

    /// Monomials of weighted degree `d` whose every partial prefix passes
    /// `keep` (used for pruning by divisibility), sorted descending.
    pub(crate) fn monomials_of_degree_filtered(
        &self,
        d: i64,
        keep: impl Fn(&Monomial) -> bool,
    ) -> Vec<Monomial> {
        let mut out = Vec::new();
        if d < 0 {
            return out;
        }
        let n = self.nvars();
        let mut cur = Monomial::one(n);
        fn rec(
            spec: &PolyRingSpec,
            v: usize,
            rem: i64,
            cur: &mut Monomial,
            keep: &dyn Fn(&Monomial) -> bool,
            out: &mut Vec<Monomial>,
        ) {
            if v == spec.nvars() {
                if rem == 0 {
                    out.push(cur.clone());
                }
                return;
            }
            let w = spec.weights[v] as i64;
            let max = rem / w;
            for e in 0..=max {
                cur.0[v] = e as u32;
                if !keep(cur) {
                    break;
                }
                rec(spec, v + 1, rem - e * w, cur, keep, out);
            }
            cur.0[v] = 0;
        }
        if n == 0 {
            if d == 0 {
                out.push(cur);
            }
            return out;
        }
        rec(self, 0, d, &mut cur, &keep, &mut out);
        out.sort_by(|a, b| self.cmp(b, a));
        out
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}
