//! Parser for rational-function expressions in `t` with integer literals,
//! `+ - * / ^`, parentheses, implicit multiplication, and named integer parameters.

use num::bigint::BigInt;
use num::Zero;

use super::poly::Poly;
use super::ratfunc::RatFunc;
use super::rational::{qbig, qi};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Op(char),
}

fn lex(s: &str) -> Result<Vec<(usize, Tok)>> {
    let b = s.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < b.len() {
        let c = b[i] as char;
        if c.is_whitespace() || c == '\\' && s[i..].starts_with("\\,") {
            i += if c == '\\' { 2 } else { 1 };
            continue;
        }
        if c.is_ascii_digit() {
            let st = i;
            while i < b.len() && (b[i] as char).is_ascii_digit() {
                i += 1;
            }
            out.push((st, Tok::Num(s[st..i].parse().unwrap())));
        } else if c.is_ascii_alphabetic() {
            let st = i;
            while i < b.len() && ((b[i] as char).is_ascii_alphanumeric() || b[i] == b'_') {
                i += 1;
            }
            out.push((st, Tok::Ident(s[st..i].to_string())));
        } else if "+-*/^()".contains(c) {
            out.push((i, Tok::Op(c)));
            i += 1;
        } else {
            return Err(Error::Parse { pos: i, msg: format!("unexpected {c:?}") });
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    vars: &'a [(&'a str, i64)],
    end: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|x| &x.1)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |x| x.0)
    }

    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Parse { pos: self.here(), msg: msg.to_string() })
    }

    fn expr(&mut self) -> Result<RatFunc> {
        let mut acc = match self.peek() {
            Some(Tok::Op('-')) => {
                self.pos += 1;
                self.term()?.neg()
            }
            Some(Tok::Op('+')) => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(Tok::Op('+')) => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Some(Tok::Op('-')) => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<RatFunc> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(Tok::Op('*')) => {
                    self.pos += 1;
                    acc = acc.mul(&self.power()?);
                }
                Some(Tok::Op('/')) => {
                    self.pos += 1;
                    let d = self.power()?;
                    if d.is_zero() {
                        return self.err("division by zero");
                    }
                    acc = acc.div(&d);
                }
                Some(Tok::Num(_)) | Some(Tok::Ident(_)) | Some(Tok::Op('(')) => {
                    acc = acc.mul(&self.power()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<RatFunc> {
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Op('^')) {
            self.pos += 1;
            let neg = if self.peek() == Some(&Tok::Op('-')) {
                self.pos += 1;
                true
            } else {
                false
            };
            let e = match self.peek().cloned() {
                Some(Tok::Num(n)) => {
                    self.pos += 1;
                    i64::try_from(n).map_err(|_| Error::Parse { pos: self.here(), msg: "exponent".into() })?
                }
                Some(Tok::Op('(')) | Some(Tok::Ident(_)) => {
                    let v = self.atom()?;
                    match v.is_poly().then(|| v.num().degree().unwrap_or(0) == 0).unwrap_or(false) {
                        true => v.num().coeff(0).to_integer().try_into().map_err(|_| Error::Parse {
                            pos: self.here(),
                            msg: "exponent".into(),
                        })?,
                        false => return self.err("exponent must be an integer"),
                    }
                }
                _ => return self.err("expected exponent"),
            };
            if base.is_zero() && (e < 0 || neg) {
                return self.err("zero to a negative power");
            }
            return Ok(base.pow(if neg { -e } else { e }));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<RatFunc> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(RatFunc::constant(qbig(n)))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                if name == "t" {
                    return Ok(RatFunc::poly(Poly::t()));
                }
                match self.vars.iter().find(|(k, _)| *k == name) {
                    Some((_, v)) => Ok(RatFunc::constant(qi(*v))),
                    None => self.err(&format!("unknown symbol {name}")),
                }
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(&Tok::Op(')')) {
                    return self.err("expected ')'");
                }
                self.pos += 1;
                Ok(v)
            }
            Some(Tok::Op('-')) => {
                self.pos += 1;
                Ok(self.power()?.neg())
            }
            _ => self.err("expected operand"),
        }
    }
}

/// Parse `s` with integer bindings such as `[("N", 3)]`.
pub fn parse_ratfunc(s: &str, vars: &[(&str, i64)]) -> Result<RatFunc> {
    let toks = lex(s)?;
    let mut p = Parser { toks, pos: 0, vars, end: s.len() };
    let v = p.expr()?;
    if p.pos != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(v)
}

pub fn parse_poly(s: &str, vars: &[(&str, i64)]) -> Result<Poly> {
    let r = parse_ratfunc(s, vars)?;
    if !r.is_poly() {
        return Err(Error::Parse { pos: 0, msg: format!("not a polynomial: {s}") });
    }
    Ok(r.num().clone())
}

pub fn parse_rational(s: &str) -> Result<super::Q> {
    let p = parse_poly(s, &[])?;
    if p.degree().unwrap_or(0) > 0 {
        return Err(Error::Parse { pos: 0, msg: format!("not a constant: {s}") });
    }
    Ok(if p.is_zero() { super::Q::zero() } else { p.coeff(0) })
}
