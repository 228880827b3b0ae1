//! Text grammar and machine-readable term lists for polynomials.
//!
//! ```text
//! poly     := term (('+'|'-') term)*
//! term     := [rational] ('*'? factor)*
//! factor   := fam '[' int ']' ('^' nat)? | 'y' ('^' nat)?
//! fam      := a | b | c | cs | d | x
//! rational := int ['/' nat]
//! ```
//!
//! A leading sign on the first term is accepted. Whitespace is ignored.

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::{rational_to_fraction_string, Family, Monomial, Polynomial, Rational, Variable};
use crate::{Error, Result};

impl FromStr for Polynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_polynomial(s)
    }
}

pub fn parse_polynomial(s: &str) -> Result<Polynomial> {
    Parser { src: s, pos: 0 }.polynomial()
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse { offset: self.pos, message: message.into() })
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek_raw() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek_raw(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.peek_raw()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.error(format!("expected `{c}`"))
        }
    }

    fn digits(&mut self) -> Result<&str> {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.peek_raw(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.error("expected digits");
        }
        Ok(&self.src[start..self.pos])
    }

    fn small_int<T: FromStr>(&mut self, what: &str) -> Result<T> {
        let start = self.pos;
        let d = self.digits()?;
        d.parse().or_else(|_| {
            self.pos = start;
            self.error(format!("{what} out of range"))
        })
    }

    fn polynomial(&mut self) -> Result<Polynomial> {
        let mut out = Polynomial::zero();
        let mut negative = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        loop {
            let (c, m) = self.term()?;
            if let Some(m) = m {
                out.accumulate(m, if negative { -c } else { c });
            }
            match self.peek() {
                None => break,
                Some('+') => negative = false,
                Some('-') => negative = true,
                Some(other) => return self.error(format!("unexpected `{other}`")),
            }
            self.pos += 1;
        }
        out.prune();
        Ok(out)
    }

    fn term(&mut self) -> Result<(Rational, Option<Monomial>)> {
        let mut coeff = Rational::one();
        let mut seen = false;
        if matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            coeff = self.rational()?;
            seen = true;
        }
        let mut factors = Vec::new();
        loop {
            let star = self.eat('*');
            match self.peek() {
                Some(c) if c.is_ascii_alphabetic() => {
                    factors.push(self.factor()?);
                    seen = true;
                }
                _ if star => return self.error("expected a factor after `*`"),
                _ => break,
            }
        }
        if !seen {
            return self.error("expected a term");
        }
        let start = self.pos;
        let m = Monomial::normalize(factors).map_err(|e| match e {
            Error::Malformed(message) => Error::Parse { offset: start, message },
            other => other,
        })?;
        Ok((coeff, m))
    }

    fn rational(&mut self) -> Result<Rational> {
        let num: BigInt = self.digits()?.parse().expect("ascii digits");
        if self.eat('/') {
            let den: BigInt = self.digits()?.parse().expect("ascii digits");
            if den.is_zero() {
                return self.error("zero denominator");
            }
            Ok(Rational::new(num, den))
        } else {
            Ok(Rational::from_integer(num))
        }
    }

    fn factor(&mut self) -> Result<(Variable, u32)> {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.peek_raw(), Some(c) if c.is_ascii_alphabetic()) {
            self.pos += 1;
        }
        let name = &self.src[start..self.pos];
        let Some(family) = Family::from_tag(name) else {
            self.pos = start;
            return self.error(format!("unknown variable family `{name}`"));
        };
        let var = if family.is_indexed() {
            self.expect('[')?;
            let negative = self.eat('-');
            let index: i32 = self.small_int("index")?;
            self.expect(']')?;
            Variable::new(family, if negative { -index } else { index })?
        } else {
            if self.peek() == Some('[') {
                return self.error("`y` takes no index");
            }
            Variable::y()
        };
        let exp = if self.eat('^') {
            let e: u32 = self.small_int("exponent")?;
            if e == 0 {
                return self.error("zero exponent");
            }
            e
        } else {
            1
        };
        Ok((var, exp))
    }
}

/// One entry of the machine-readable term list.
///
/// `factors` holds `[family, index, exponent]` triples; the index of `y` is
/// written as 0.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRecord {
    pub coeff: String,
    pub factors: Vec<(String, i32, u32)>,
}

pub fn to_term_records(p: &Polynomial) -> Vec<TermRecord> {
    p.terms()
        .map(|(m, c)| TermRecord {
            coeff: rational_to_fraction_string(c),
            factors: m.factors().iter().map(|(v, e)| (v.family().tag().to_string(), v.index(), *e)).collect(),
        })
        .collect()
}

pub fn from_term_records(records: &[TermRecord]) -> Result<Polynomial> {
    let mut terms = Vec::with_capacity(records.len());
    for r in records {
        let coeff = parse_polynomial(&r.coeff)?
            .as_constant()
            .ok_or_else(|| Error::Malformed(format!("coefficient `{}` is not a number", r.coeff)))?;
        let factors = r
            .factors
            .iter()
            .map(|(tag, index, e)| {
                let family =
                    Family::from_tag(tag).ok_or_else(|| Error::Malformed(format!("unknown family `{tag}`")))?;
                let v = if family.is_indexed() {
                    Variable::new(family, *index)?
                } else if *index == 0 {
                    Variable::y()
                } else {
                    return Err(Error::Malformed(format!("`y` takes no index (got {index})")));
                };
                Ok((v, *e))
            })
            .collect::<Result<Vec<_>>>()?;
        terms.push((coeff, factors));
    }
    Polynomial::from_raw_terms(terms)
}

pub fn to_json_terms(p: &Polynomial) -> String {
    serde_json::to_string(&to_term_records(p)).expect("term records serialize")
}
