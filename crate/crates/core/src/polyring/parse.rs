//! Text form of polynomials.
//!
//! ```text
//! poly    := ['+'|'-'] term (('+'|'-') term)*
//! term    := [coeff '*'] varpow ('*' varpow)* | coeff
//! varpow  := var ['^' nat]
//! coeff   := int | int '/' int
//! ```
//! Whitespace is allowed between tokens.

use num_bigint::BigInt;

use super::field::Field;
use super::monomial::Monomial;
use super::poly::{Poly, PolyRing};
use crate::error::{Error, Result};

struct Lexer<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn peek_tok(&mut self) -> Option<char> {
        self.skip_ws();
        self.peek()
    }

    fn bump(&mut self) {
        if let Some(c) = self.peek() {
            self.pos += c.len_utf8();
        }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax { pos: self.pos, msg: msg.into() })
    }

    fn nat(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.bump();
        }
        if start == self.pos {
            return self.err("expected a number");
        }
        Ok(self.src[start..self.pos].parse().expect("digits"))
    }

    fn ident(&mut self) -> Result<&'a str> {
        self.skip_ws();
        let start = self.pos;
        match self.peek() {
            Some(c) if c.is_ascii_alphabetic() || c == '_' => self.bump(),
            _ => return self.err("expected a variable"),
        }
        while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == '_') {
            self.bump();
        }
        Ok(&self.src[start..self.pos])
    }
}

pub(crate) fn parse_polynomial<F: Field>(text: &str, ring: &PolyRing<F>) -> Result<Poly<F>> {
    let field = ring.field();
    let mut lx = Lexer { src: text, pos: 0 };
    let mut terms = Vec::new();
    let mut first = true;
    loop {
        let negative = match lx.peek_tok() {
            Some('+') => {
                lx.bump();
                false
            }
            Some('-') => {
                lx.bump();
                true
            }
            None if first => return lx.err("empty polynomial"),
            _ if first => false,
            Some(c) => return lx.err(format!("unexpected `{c}`")),
            None => break,
        };
        first = false;
        let (m, mut c) = parse_term(&mut lx, ring)?;
        if negative {
            c = field.neg(&c);
        }
        terms.push((m, c));
        if lx.peek_tok().is_none() {
            break;
        }
    }
    Ok(ring.from_terms(terms))
}

fn parse_term<F: Field>(lx: &mut Lexer<'_>, ring: &PolyRing<F>) -> Result<(Monomial, F::Elem)> {
    let field = ring.field();
    let mut mono = Monomial::one(ring.nvars());
    let mut coeff = field.one();
    let mut expect_factor = true;
    if matches!(lx.peek_tok(), Some(c) if c.is_ascii_digit()) {
        let num = lx.nat()?;
        let den = if lx.peek_tok() == Some('/') {
            lx.bump();
            lx.nat()?
        } else {
            BigInt::from(1)
        };
        coeff = field.from_fraction(&num, &den)?;
        if lx.peek_tok() == Some('*') {
            lx.bump();
        } else {
            expect_factor = false;
        }
    }
    while expect_factor {
        let at = lx.pos;
        let name = lx.ident()?;
        let v = ring
            .spec()
            .var_index(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        let e = if lx.peek_tok() == Some('^') {
            lx.bump();
            let n = lx.nat()?;
            u32::try_from(n).map_err(|_| Error::Syntax { pos: at, msg: "exponent too large".into() })?
        } else {
            1
        };
        mono.0[v] += e;
        if lx.peek_tok() == Some('*') {
            lx.bump();
        } else {
            expect_factor = false;
        }
    }
    Ok((mono, coeff))
}

pub(crate) fn print_polynomial<F: Field>(p: &Poly<F>, ring: &PolyRing<F>) -> String {
    let field = ring.field();
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (m, c)) in p.terms().iter().enumerate() {
        let neg = field.is_negative(c);
        let abs = if neg { field.neg(c) } else { c.clone() };
        if k == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let factors: Vec<String> = m
            .exps()
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(v, &e)| {
                let name = &ring.spec().names[v];
                if e == 1 {
                    name.clone()
                } else {
                    format!("{name}^{e}")
                }
            })
            .collect();
        let unit = field.is_one(&abs);
        if factors.is_empty() {
            out.push_str(&field.format(&abs));
        } else {
            if !unit {
                out.push_str(&field.format(&abs));
                out.push('*');
            }
            out.push_str(&factors.join("*"));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::field::{PrimeField, Rationals};
    use crate::polyring::monomial::{MonomialOrder, PolyRingSpec};
    use proptest::prelude::*;

    fn five() -> std::sync::Arc<PolyRing<PrimeField>> {
        PolyRing::new(
            PolyRingSpec::new(&["x1", "x2", "x3", "x4", "x5"]).unwrap(),
            PrimeField::new(32003).unwrap(),
        )
    }

    #[test]
    fn parses_generator_of_example_ring() {
        let r = five();
        let p = r.parse("x1^2 - x2*x3").unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(p.leading_monomial().unwrap(), &Monomial(vec![2, 0, 0, 0, 0]));
        assert_eq!(r.print(&p), "x1^2 - x2*x3");
    }

    #[test]
    fn zero_and_constants() {
        let r = five();
        assert!(r.parse("0").unwrap().is_zero());
        assert!(r.parse("x1 - x1").unwrap().is_zero());
        assert_eq!(r.print(&r.parse("-3").unwrap()), "-3");
        assert_eq!(r.print(&r.parse(" 2 * x1 -x2 ").unwrap()), "2*x1 - x2");
    }

    #[test]
    fn weighted_tie_break_puts_x_squared_first() {
        let spec =
            PolyRingSpec::with_weights(vec!["x".into(), "y".into()], vec![1, 2], MonomialOrder::Grevlex)
                .unwrap();
        let r = PolyRing::new(spec, Rationals);
        let p = r.parse("y + x^2").unwrap();
        assert_eq!(r.print(&p), "x^2 + y");
    }

    #[test]
    fn parse_errors() {
        let r = five();
        assert!(matches!(r.parse("x6 + 1"), Err(Error::UnknownVariable(v)) if v == "x6"));
        assert!(matches!(r.parse("x1 +"), Err(Error::Syntax { .. })));
        assert!(matches!(r.parse("x1 x2"), Err(Error::Syntax { .. })));
        assert!(matches!(r.parse(""), Err(Error::Syntax { .. })));
        assert!(matches!(r.parse("1/32003*x1"), Err(Error::CoefficientNotInField(_))));
        let q = PolyRing::new(PolyRingSpec::new(&["x"]).unwrap(), Rationals);
        assert_eq!(q.print(&q.parse("2/4*x + 3").unwrap()), "1/2*x + 3");
    }

    fn arb_terms() -> impl Strategy<Value = Vec<(Vec<u32>, i64, i64)>> {
        prop::collection::vec((prop::collection::vec(0u32..4, 3), -20i64..20, 1i64..5), 0..6)
    }

    proptest! {
        #[test]
        fn print_parse_round_trip_gf(terms in arb_terms()) {
            let r = PolyRing::new(PolyRingSpec::new(&["a", "b", "c"]).unwrap(), PrimeField::new(101).unwrap());
            let p = r.from_terms(terms.into_iter().map(|(e, c, _)| (Monomial(e), r.field().from_i64(c))).collect());
            prop_assert_eq!(r.parse(&r.print(&p)).unwrap(), p);
        }

        #[test]
        fn print_parse_round_trip_qq(terms in arb_terms()) {
            let r = PolyRing::new(PolyRingSpec::new(&["a", "b", "c"]).unwrap(), Rationals);
            let p = r.from_terms(terms.into_iter().map(|(e, n, d)| {
                (Monomial(e), r.field().from_fraction(&BigInt::from(n), &BigInt::from(d)).unwrap())
            }).collect());
            prop_assert_eq!(r.parse(&r.print(&p)).unwrap(), p);
        }
    }
}
