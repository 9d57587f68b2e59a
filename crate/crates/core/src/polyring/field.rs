//! Exact coefficient fields.
//!
//! Two fields are supported: the rationals (arbitrary precision) and prime
//! fields GF(p) with `p < 2^31`, stored as machine-word residues.

use std::fmt::Debug;
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Which field the coefficients live in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldSpec {
    Rationals,
    Prime(u32),
}

impl FieldSpec {
    /// Checks primality and the word-size bound for prime fields.
    pub fn validate(&self) -> Result<()> {
        match *self {
            FieldSpec::Rationals => Ok(()),
            FieldSpec::Prime(p) => {
                if p >= (1u32 << 31) {
                    return Err(Error::InvalidField(format!("p = {p} is not below 2^31")));
                }
                if !is_prime(p as u64) {
                    return Err(Error::InvalidField(format!("{p} is not prime")));
                }
                Ok(())
            }
        }
    }

    /// Parses `QQ`, `Q`, `GF32003`, `GF(32003)` or `GFp` style names.
    pub fn parse(text: &str) -> Result<Self> {
        let t = text.trim();
        let spec = match t {
            "QQ" | "Q" | "rationals" => FieldSpec::Rationals,
            _ => {
                let body = t
                    .strip_prefix("GF")
                    .ok_or_else(|| Error::InvalidField(format!("unknown field `{t}`")))?;
                let body = body.trim_start_matches('(').trim_end_matches(')');
                let p: u32 = body
                    .parse()
                    .map_err(|_| Error::InvalidField(format!("bad prime in `{t}`")))?;
                FieldSpec::Prime(p)
            }
        };
        spec.validate()?;
        Ok(spec)
    }
}

impl std::fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "QQ"),
            FieldSpec::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// A field of coefficients, used as a context object: elements carry no
/// reference to their field.
pub trait Field: Clone + Debug + Send + Sync + 'static {
    type Elem: Clone + PartialEq + Eq + Hash + Debug + Send + Sync;

    fn spec(&self) -> FieldSpec;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn from_i64(&self, n: i64) -> Self::Elem;
    /// The element `num/den`; fails when `den` vanishes in the field.
    fn from_fraction(&self, num: &BigInt, den: &BigInt) -> Result<Self::Elem>;
    /// Canonical text form, parseable by the polynomial parser.
    fn format(&self, a: &Self::Elem) -> String;
    /// True when the printed form starts with a minus sign.
    fn is_negative(&self, a: &Self::Elem) -> bool;
    /// A uniformly chosen nonzero element (small integers over QQ).
    fn random_nonzero<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    /// In-place reduced row echelon form of a row-major matrix; returns the
    /// pivot columns in increasing order.
    fn rref(&self, rows: &mut Vec<Vec<Self::Elem>>, ncols: usize) -> Vec<usize> {
        gauss_jordan(self, rows, ncols)
    }
}

/// Plain Gauss-Jordan elimination over any field.
pub(crate) fn gauss_jordan<F: Field>(
    field: &F,
    rows: &mut Vec<Vec<F::Elem>>,
    ncols: usize,
) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !field.is_zero(&rows[i][c])) else {
            continue;
        };
        rows.swap(r, p);
        let inv = field.inv(&rows[r][c]).expect("pivot is nonzero");
        if !field.is_one(&inv) {
            for x in rows[r][c..].iter_mut() {
                *x = field.mul(x, &inv);
            }
        }
        let (head, tail) = rows.split_at_mut(r);
        let (prow, rest) = tail.split_first_mut().unwrap();
        for other in head.iter_mut().chain(rest.iter_mut()) {
            if field.is_zero(&other[c]) {
                continue;
            }
            let factor = other[c].clone();
            for k in c..ncols {
                if field.is_zero(&prow[k]) {
                    continue;
                }
                let t = field.mul(&factor, &prow[k]);
                other[k] = field.sub(&other[k], &t);
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

/// GF(p) with residues in `[0, p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self> {
        FieldSpec::Prime(p).validate()?;
        Ok(Self { p: p as u64 })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn pow(&self, mut base: u64, mut e: u64) -> u64 {
        let mut acc = 1u64;
        base %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            e >>= 1;
        }
        acc
    }

    fn reduce_big(&self, n: &BigInt) -> u64 {
        let m = n.mod_floor(&BigInt::from(self.p));
        m.to_u64().expect("residue fits in u64")
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn spec(&self) -> FieldSpec {
        FieldSpec::Prime(self.p as u32)
    }
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            None
        } else {
            Some(self.pow(*a, self.p - 2))
        }
    }
    fn from_i64(&self, n: i64) -> u64 {
        n.rem_euclid(self.p as i64) as u64
    }
    fn from_fraction(&self, num: &BigInt, den: &BigInt) -> Result<u64> {
        let d = self.reduce_big(den);
        let inv = self.inv(&d).ok_or_else(|| {
            Error::CoefficientNotInField(format!("{num}/{den} has a denominator divisible by {}", self.p))
        })?;
        Ok(self.reduce_big(num) * inv % self.p)
    }
    fn format(&self, a: &u64) -> String {
        // symmetric representative in (-p/2, p/2]
        if *a > self.p / 2 {
            format!("-{}", self.p - a)
        } else {
            a.to_string()
        }
    }
    fn is_negative(&self, a: &u64) -> bool {
        *a > self.p / 2
    }
    fn random_nonzero<R: Rng + ?Sized>(&self, rng: &mut R) -> u64 {
        rng.gen_range(1..self.p)
    }
}

/// The rationals, arbitrary precision.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn spec(&self) -> FieldSpec {
        FieldSpec::Rationals
    }
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }
    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }
    fn from_fraction(&self, num: &BigInt, den: &BigInt) -> Result<BigRational> {
        if den.is_zero() {
            return Err(Error::CoefficientNotInField(format!("{num}/0")));
        }
        Ok(BigRational::new(num.clone(), den.clone()))
    }
    fn format(&self, a: &BigRational) -> String {
        if a.is_integer() {
            a.numer().to_string()
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }
    fn is_negative(&self, a: &BigRational) -> bool {
        a.is_negative()
    }
    fn random_nonzero<R: Rng + ?Sized>(&self, rng: &mut R) -> BigRational {
        let mut n = 0i64;
        while n == 0 {
            n = rng.gen_range(-9..=9);
        }
        self.from_i64(n)
    }

    /// Fraction-free elimination: rows are scaled to primitive integer
    /// vectors, eliminated by integer cross-multiplication with content
    /// removal, and normalised to the rational RREF at the end.
    fn rref(&self, rows: &mut Vec<Vec<BigRational>>, ncols: usize) -> Vec<usize> {
        let mut ints: Vec<Vec<BigInt>> = rows.iter().map(|r| primitive_integer_row(r)).collect();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..ncols {
            if r == ints.len() {
                break;
            }
            let Some(p) = (r..ints.len()).find(|&i| !ints[i][c].is_zero()) else {
                continue;
            };
            ints.swap(r, p);
            let (head, tail) = ints.split_at_mut(r);
            let (prow, rest) = tail.split_first_mut().unwrap();
            let pv = prow[c].clone();
            for other in head.iter_mut().chain(rest.iter_mut()) {
                if other[c].is_zero() {
                    continue;
                }
                let g = pv.gcd(&other[c]);
                let a = &pv / &g;
                let b = &other[c] / &g;
                for k in 0..ncols {
                    other[k] = &a * &other[k] - &b * &prow[k];
                }
                make_primitive(other);
            }
            pivots.push(c);
            r += 1;
        }
        ints.truncate(r);
        *rows = ints
            .into_iter()
            .zip(&pivots)
            .map(|(row, &c)| {
                let lead = row[c].clone();
                row.into_iter().map(|x| BigRational::new(x, lead.clone())).collect()
            })
            .collect();
        pivots
    }
}

fn primitive_integer_row(row: &[BigRational]) -> Vec<BigInt> {
    let mut l = BigInt::one();
    for x in row {
        l = l.lcm(x.denom());
    }
    let mut out: Vec<BigInt> = row.iter().map(|x| x.numer() * (&l / x.denom())).collect();
    make_primitive(&mut out);
    out
}

fn make_primitive(row: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for x in row.iter() {
        g = g.gcd(x);
    }
    if !g.is_zero() && !g.is_one() {
        for x in row.iter_mut() {
            *x = &*x / &g;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_arithmetic() {
        let f = PrimeField::new(5).unwrap();
        assert_eq!(f.mul(&2, &3), 1);
        assert_eq!(f.inv(&2), Some(3));
        assert_eq!(f.from_i64(-1), 4);
        assert_eq!(f.format(&4), "-1");
        assert!(f.from_fraction(&BigInt::from(1), &BigInt::from(5)).is_err());
    }

    #[test]
    fn field_spec_parsing() {
        assert_eq!(FieldSpec::parse("GF(32003)").unwrap(), FieldSpec::Prime(32003));
        assert_eq!(FieldSpec::parse("GF7").unwrap(), FieldSpec::Prime(7));
        assert_eq!(FieldSpec::parse("QQ").unwrap(), FieldSpec::Rationals);
        assert!(FieldSpec::parse("GF(32004)").is_err());
        assert!(FieldSpec::parse("GF(2147483659)").is_err());
        assert!(FieldSpec::parse("RR").is_err());
    }

    #[test]
    fn fraction_free_rref_matches_gauss_jordan() {
        let q = Rationals;
        let m = |v: &[i64]| v.iter().map(|&x| q.from_i64(x)).collect::<Vec<_>>();
        let mut a = vec![m(&[2, 4, 1]), m(&[1, 2, 3]), m(&[3, 6, 4])];
        let mut b = a.clone();
        let pa = q.rref(&mut a, 3);
        let pb = gauss_jordan(&q, &mut b, 3);
        assert_eq!(pa, pb);
        assert_eq!(a, b);
        assert_eq!(pa, vec![0, 2]);
    }
}
