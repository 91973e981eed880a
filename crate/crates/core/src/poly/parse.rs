//! Reader for polynomial strings such as `x^2*y-3/2*z+1`.
//!
//! Accepts sums and differences of products of numbers, declared variable
//! names, powers and parenthesised subexpressions. Whitespace is ignored.

use super::polynomial::Polynomial;
use super::ring::Ring;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(i64),
    Ident(String),
    Op(char),
}

fn lex(s: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let cs: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < cs.len() {
        let c = cs[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < cs.len() && cs[i].is_ascii_digit() {
                i += 1;
            }
            let text: String = cs[start..i].iter().collect();
            let v = text
                .parse::<i64>()
                .map_err(|_| Error::Parse(format!("number {text} out of range")))?;
            out.push(Tok::Num(v));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < cs.len() && (cs[i].is_alphanumeric() || cs[i] == '_') {
                i += 1;
            }
            out.push(Tok::Ident(cs[start..i].iter().collect()));
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
        } else {
            return Err(Error::Parse(format!("unexpected character {c:?}")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    ring: &'a Ring,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Op(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = Polynomial::zero(self.ring);
        let mut first = true;
        loop {
            let neg = if self.eat('-') {
                true
            } else {
                let plus = self.eat('+');
                if !first && !plus {
                    break;
                }
                false
            };
            first = false;
            let t = self.product()?;
            acc = if neg { acc.sub(&t)? } else { acc.add(&t)? };
            if !matches!(self.peek(), Some(Tok::Op('+')) | Some(Tok::Op('-'))) {
                break;
            }
        }
        Ok(acc)
    }

    fn product(&mut self) -> Result<Polynomial> {
        let mut acc = self.power()?;
        loop {
            if self.eat('*') {
                acc = acc.mul(&self.power()?)?;
            } else if self.eat('/') {
                let d = self.power()?;
                if !d.is_constant() || d.is_zero() {
                    return Err(Error::Parse("division only by nonzero constants".into()));
                }
                let inv = d.constant_term().inv().map_err(|_| {
                    Error::Parse("division by a constant that vanishes in the field".into())
                })?;
                acc = acc.scale(&inv);
            } else {
                break;
            }
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.eat('^') {
            match self.toks.get(self.pos).cloned() {
                Some(Tok::Num(e)) if e <= u32::MAX as i64 => {
                    self.pos += 1;
                    Ok(base.pow(e as u32))
                }
                _ => Err(Error::Parse("exponent must be a nonnegative integer".into())),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Polynomial> {
        match self.toks.get(self.pos).cloned() {
            Some(Tok::Num(v)) => {
                self.pos += 1;
                Ok(Polynomial::constant(self.ring, self.ring.field().from_i64(v)))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                let i = self
                    .ring
                    .var_index(&name)
                    .ok_or_else(|| Error::Parse(format!("unknown variable {name}")))?;
                Ok(Polynomial::var(self.ring, i))
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(Error::Parse("missing )".into()));
                }
                Ok(e)
            }
            Some(Tok::Op('-')) => {
                self.pos += 1;
                Ok(self.power()?.neg())
            }
            other => Err(Error::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

impl Polynomial {
    /// Parse a polynomial in `ring`'s variables.
    pub fn parse(ring: &Ring, s: &str) -> Result<Polynomial> {
        let toks = lex(s)?;
        if toks.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut p = Parser { toks, pos: 0, ring };
        let out = p.expr()?;
        if p.pos != p.toks.len() {
            return Err(Error::Parse(format!("trailing input in {s:?}")));
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;

    #[test]
    fn round_trip() {
        let r = Ring::standard(Field::Rationals, &["x", "y", "z"]);
        for s in ["x^2*y-3/2*z+1", "0", "-x", "x+y", "2*x*y^3-1/3"] {
            let p = Polynomial::parse(&r, s).unwrap();
            let q = Polynomial::parse(&r, &p.to_string()).unwrap();
            assert_eq!(p, q, "{s}");
        }
        let p = Polynomial::parse(&r, "(x+y)^2 - x*x").unwrap();
        assert_eq!(p.to_string(), "2*x*y+y^2");
    }

    #[test]
    fn errors() {
        let r = Ring::standard(Field::Prime(2), &["x"]);
        assert!(matches!(Polynomial::parse(&r, "w"), Err(Error::Parse(_))));
        assert!(matches!(Polynomial::parse(&r, "x/2"), Err(Error::Parse(_))));
        assert!(matches!(Polynomial::parse(&r, "x+"), Err(Error::Parse(_))));
        assert_eq!(Polynomial::parse(&r, "x+x").unwrap().to_string(), "0");
    }
}
