//! Text form of polynomials.
//!
//! Grammar (whitespace insignificant):
//!
//! ```text
//! expr    := ['+'|'-'] term (('+'|'-') term)*
//! term    := power (['*'] power | '/' integer)*
//! power   := ['-'] atom ['^' integer]
//! atom    := integer | identifier | '(' expr ')'
//! ```
//!
//! `*` may be omitted between factors (`x1^2(x2+x3)`). Identifiers are the
//! ring's variables plus any caller-supplied bindings (e.g. `f`, `g1`).
//! Division is only by a nonzero integer literal, which keeps printed
//! rational coefficients parseable.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;

use super::context::Ring;
use super::field::Field;
use super::polynomial::Polynomial;
use super::PolyError;

impl<F: Field> fmt::Display for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let field = self.field();
        let names = self.ring().names();
        for (idx, (m, c)) in self.terms().iter().enumerate() {
            let negative = field.is_negative(c);
            let abs = if negative { field.neg(c) } else { c.clone() };
            match (idx, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mut factors = Vec::new();
            let abs_is_one = field.is_one(&abs);
            if !abs_is_one || m.is_one() {
                factors.push(field.render(&abs));
            }
            for (i, e) in m.exponents().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(names[i].clone()),
                    _ => factors.push(format!("{}^{}", names[i], e)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>, PolyError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let tok = match c {
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let v: BigInt = text[start..i].parse().expect("digits");
                out.push((start, Tok::Int(v)));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Tok::Ident(text[start..i].to_string())));
                continue;
            }
            _ => {
                return Err(PolyError::Syntax {
                    pos: start,
                    msg: format!("unexpected character `{}`", text[start..].chars().next().unwrap()),
                })
            }
        };
        out.push((start, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a, F: Field> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    ring: &'a Ring<F>,
    bindings: &'a HashMap<String, Polynomial<F>>,
}

impl<'a, F: Field> Parser<'a, F> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.1)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |t| t.0)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, PolyError> {
        Err(PolyError::Syntax {
            pos: self.offset(),
            msg: msg.into(),
        })
    }

    fn expr(&mut self) -> Result<Polynomial<F>, PolyError> {
        let mut acc = Polynomial::zero(self.ring);
        let mut negate = false;
        match self.peek() {
            Some(Tok::Plus) => self.pos += 1,
            Some(Tok::Minus) => {
                self.pos += 1;
                negate = true;
            }
            _ => {}
        }
        loop {
            let t = self.term()?;
            acc = if negate { &acc - &t } else { &acc + &t };
            self.check_cap(&acc)?;
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    negate = false;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    negate = true;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial<F>, PolyError> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    let rhs = self.power()?;
                    acc = self.checked_product(&acc, &rhs)?;
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    let at = self.offset();
                    match self.peek().cloned() {
                        Some(Tok::Int(v)) => {
                            self.pos += 1;
                            let field = self.ring.field();
                            let d = field.from_bigint(&v);
                            let inv = field.inv(&d).ok_or(PolyError::Syntax {
                                pos: at,
                                msg: "division by zero".into(),
                            })?;
                            acc = acc.scale(&inv);
                        }
                        _ => return self.err("expected integer divisor after `/`"),
                    }
                }
                Some(Tok::Int(_)) | Some(Tok::Ident(_)) | Some(Tok::LParen) => {
                    let rhs = self.power()?;
                    acc = self.checked_product(&acc, &rhs)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<Polynomial<F>, PolyError> {
        if let Some(Tok::Minus) = self.peek() {
            self.pos += 1;
            return Ok(-self.power()?);
        }
        let base = self.atom()?;
        if let Some(Tok::Caret) = self.peek() {
            self.pos += 1;
            let at = self.offset();
            let e = match self.peek().cloned() {
                Some(Tok::Int(v)) => {
                    self.pos += 1;
                    v
                }
                _ => return self.err("expected integer exponent after `^`"),
            };
            let cap = self.ring.exponent_cap();
            let e: u32 = match u32::try_from(&e) {
                Ok(e) if e <= cap => e,
                _ => return Err(PolyError::ExponentOverflow { pos: at, cap }),
            };
            // reject before expanding: the top exponent of the result is e times the base's
            let top = base.terms().iter().map(|(m, _)| m.max_exponent()).max().unwrap_or(0);
            if u64::from(top) * u64::from(e) > u64::from(cap) {
                return Err(PolyError::ExponentOverflow { pos: at, cap });
            }
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial<F>, PolyError> {
        let at = self.offset();
        match self.peek().cloned() {
            Some(Tok::Int(v)) => {
                self.pos += 1;
                Ok(Polynomial::constant(self.ring, self.ring.field().from_bigint(&v)))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                if let Some(i) = self.ring.index_of(&name) {
                    Ok(Polynomial::var(self.ring, i))
                } else if let Some(p) = self.bindings.get(&name) {
                    Ok(p.clone())
                } else {
                    Err(PolyError::UnknownIdentifier { pos: at, name })
                }
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let e = self.expr()?;
                match self.peek() {
                    Some(Tok::RParen) => {
                        self.pos += 1;
                        Ok(e)
                    }
                    _ => self.err("expected `)`"),
                }
            }
            Some(t) => self.err(format!("unexpected token {t:?}")),
            None => self.err("unexpected end of input"),
        }
    }

    fn checked_product(
        &self,
        a: &Polynomial<F>,
        b: &Polynomial<F>,
    ) -> Result<Polynomial<F>, PolyError> {
        let p = a * b;
        self.check_cap(&p)?;
        Ok(p)
    }

    fn check_cap(&self, p: &Polynomial<F>) -> Result<(), PolyError> {
        if p.within_exponent_cap() {
            Ok(())
        } else {
            Err(PolyError::ExponentOverflow {
                pos: self.offset(),
                cap: self.ring.exponent_cap(),
            })
        }
    }
}

/// Parses `text` as a polynomial over the ring's variables.
pub fn parse<F: Field>(text: &str, ring: &Ring<F>) -> Result<Polynomial<F>, PolyError> {
    parse_with(text, ring, &HashMap::new())
}

/// Like [`parse`], with extra named polynomials usable as identifiers.
pub fn parse_with<F: Field>(
    text: &str,
    ring: &Ring<F>,
    bindings: &HashMap<String, Polynomial<F>>,
) -> Result<Polynomial<F>, PolyError> {
    let toks = tokenize(text)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end: text.len(),
        ring,
        bindings,
    };
    if p.peek().is_none() {
        return p.err("empty expression");
    }
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(e)
}
