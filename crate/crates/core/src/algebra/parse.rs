//! Text grammar for polynomials.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor (('*'|'/') factor)*        // '/' only by constants
//! factor := '-' factor | atom ['^' ['-'] int]
//! atom   := int | var | '(' expr ')'
//! var    := ('c'|'s'|'t'|'u') digits
//! ```
//!
//! Whitespace is insignificant. `3/2*c1^2 - s2*t4^-2` is accepted.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use super::poly::{power_of, SparsePoly};
use super::rational::Rational;
use super::varset::{Var, VarKind, VarSet};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Var(Var),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let ch = bytes[i] as char;
        let start = i;
        if ch.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let tok = match ch {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            d if d.is_ascii_digit() => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((start, Tok::Int(text[start..i].parse().expect("digits"))));
                continue;
            }
            l => {
                let kind = VarKind::from_letter(l).ok_or_else(|| Error::Parse {
                    pos: start,
                    msg: format!("unexpected character {l:?}"),
                })?;
                i += 1;
                let digits_start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let index: u32 = text[digits_start..i].parse().map_err(|_| Error::Parse {
                    pos: start,
                    msg: format!("variable {l} needs a positive index"),
                })?;
                if index == 0 {
                    return Err(Error::Parse {
                        pos: start,
                        msg: "variable indices start at 1".into(),
                    });
                }
                out.push((start, Tok::Var(Var::new(kind, index))));
                continue;
            }
        };
        out.push((start, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    varset: &'a VarSet,
    end: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.1)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |t| t.0)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.here(),
            msg: msg.into(),
        })
    }

    fn expr(&mut self) -> Result<SparsePoly> {
        let mut acc = match self.peek() {
            Some(Tok::Plus) => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = acc.checked_add(&self.term()?)?;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = acc.checked_sub(&self.term()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<SparsePoly> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    acc = acc.checked_mul(&self.factor()?)?;
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    let at = self.here();
                    let d = self.factor()?;
                    match d.as_constant() {
                        Some(c) if c != Rational::from_integer(0.into()) => {
                            acc = acc.scale(&c.recip());
                        }
                        _ => {
                            return Err(Error::Parse {
                                pos: at,
                                msg: "division only by nonzero constants".into(),
                            })
                        }
                    }
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<SparsePoly> {
        if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            return Ok(-self.factor()?);
        }
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        let negative = if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            true
        } else {
            false
        };
        let e: i32 = match self.peek() {
            Some(Tok::Int(n)) => match i32::try_from(n) {
                Ok(e) => e,
                Err(_) => return self.err("exponent too large"),
            },
            _ => return self.err("expected an integer exponent"),
        };
        self.pos += 1;
        let e = if negative { -e } else { e };
        match power_of(&base, e) {
            Some(p) => Ok(p),
            None => self.err("negative powers apply only to single terms"),
        }
    }

    fn atom(&mut self) -> Result<SparsePoly> {
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                Ok(SparsePoly::constant(
                    self.varset.clone(),
                    Rational::from_integer(n),
                ))
            }
            Some(Tok::Var(v)) => {
                let at = self.here();
                self.pos += 1;
                SparsePoly::var(self.varset.clone(), v).map_err(|_| Error::Parse {
                    pos: at,
                    msg: format!("{v} is not a variable of {}", self.varset),
                })
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return self.err("expected ')'");
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(t) => self.err(format!("unexpected token {t:?}")),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses into a given variable set.
pub fn parse_poly_in(text: &str, varset: &VarSet) -> Result<SparsePoly> {
    let toks = lex(text)?;
    let mut parser = Parser {
        toks,
        pos: 0,
        varset,
        end: text.len(),
    };
    let p = parser.expr()?;
    if parser.pos != parser.toks.len() {
        return parser.err("trailing input");
    }
    Ok(p)
}

/// Parses, inferring the variable set from the largest index used per letter.
pub fn parse_poly(text: &str) -> Result<SparsePoly> {
    let mut counts: BTreeMap<VarKind, u32> = BTreeMap::new();
    for (_, tok) in lex(text)? {
        if let Tok::Var(v) = tok {
            let c = counts.entry(v.kind).or_insert(0);
            *c = (*c).max(v.index);
        }
    }
    let varset = VarSet::from_blocks(counts)?;
    parse_poly_in(text, &varset)
}
