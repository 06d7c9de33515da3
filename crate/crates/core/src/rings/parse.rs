//! Element grammar:
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' INT)?
//! atom   := INT | SYMBOL | '(' expr ')'
//! ```
//!
//! Symbols are `x`, `d` (also `∂`) and `theta` (also `θ`, a macro for `x*d`)
//! in the Weyl algebra, and the polynomial variable in ℚ[x]. Division is only
//! by nonzero constants, so `a/b` reads as a rational literal.

use num_bigint::BigInt;
use num_traits::Zero;

use super::{Elem, RingId, UniPoly, WeylOp};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Sym(String),
    Op(char),
}

fn lex(s: &str) -> Result<Vec<(usize, Tok)>> {
    let mut out = Vec::new();
    let mut it = s.char_indices().peekable();
    while let Some(&(pos, c)) = it.peek() {
        if c.is_whitespace() {
            it.next();
        } else if c.is_ascii_digit() {
            let mut lit = String::new();
            while let Some(&(_, d)) = it.peek() {
                if !d.is_ascii_digit() {
                    break;
                }
                lit.push(d);
                it.next();
            }
            out.push((pos, Tok::Num(lit.parse().expect("digits"))));
        } else if c.is_alphabetic() || c == '∂' || c == '_' {
            let mut name = String::new();
            while let Some(&(_, d)) = it.peek() {
                if !(d.is_alphanumeric() || d == '_' || d == '∂') {
                    break;
                }
                name.push(d);
                it.next();
            }
            out.push((pos, Tok::Sym(name)));
        } else if "+-*/^()".contains(c) {
            out.push((pos, Tok::Op(c)));
            it.next();
        } else {
            return Err(Error::Parse { pos, msg: format!("unexpected character `{c}`") });
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    at: usize,
    ring: &'a RingId,
    len: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map(|(p, _)| *p).unwrap_or(self.len)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.pos(), msg: msg.into() })
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Elem> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = acc.add(&self.term()?)?;
            } else if self.eat('-') {
                acc = acc.sub(&self.term()?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Elem> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = acc.mul(&self.unary()?)?;
            } else if self.eat('/') {
                let pos = self.pos();
                let rhs = self.unary()?;
                let c = match rhs.as_constant() {
                    Some(c) if !c.is_zero() => c,
                    _ => return Err(Error::Parse { pos, msg: "division only by nonzero constants".into() }),
                };
                acc = acc.scale(&c.recip()).map_err(|e| Error::Parse { pos, msg: e.to_string() })?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Elem> {
        if self.eat('-') {
            return Ok(self.unary()?.neg());
        }
        self.power()
    }

    fn power(&mut self) -> Result<Elem> {
        let base = self.atom()?;
        if self.eat('^') {
            match self.peek().cloned() {
                Some(Tok::Num(n)) => {
                    self.at += 1;
                    let e: u32 = n.try_into().map_err(|_| Error::Parse { pos: self.pos(), msg: "exponent too large".into() })?;
                    Ok(base.pow(e))
                }
                _ => self.err("exponent must be a non-negative integer literal"),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Elem> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.at += 1;
                Elem::from_rat(self.ring, &n.into())
            }
            Some(Tok::Sym(name)) => {
                self.at += 1;
                self.symbol(&name)
            }
            Some(Tok::Op('(')) => {
                self.at += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return self.err("expected `)`");
                }
                Ok(e)
            }
            Some(t) => self.err(format!("unexpected token {t:?}")),
            None => self.err("unexpected end of input"),
        }
    }

    fn symbol(&self, name: &str) -> Result<Elem> {
        match (self.ring, name) {
            (RingId::Weyl, "x") => Ok(Elem::Weyl(WeylOp::x())),
            (RingId::Weyl, "d" | "∂") => Ok(Elem::Weyl(WeylOp::d())),
            (RingId::Weyl, "theta" | "θ") => Ok(Elem::Weyl(WeylOp::theta())),
            (RingId::QX(v), s) if s == v => Ok(Elem::Poly(UniPoly::var_poly(v.clone()))),
            (_, "x" | "d" | "∂" | "theta" | "θ") => {
                let found = if name == "x" { RingId::qx() } else { RingId::Weyl };
                Err(Error::RingMismatch { expected: self.ring.clone(), found })
            }
            _ => self.err(format!("unknown symbol `{name}` in {}", self.ring)),
        }
    }
}

/// Parses and evaluates an element expression into canonical normal form.
pub fn ring_eval(text: &str, ring: &RingId) -> Result<Elem> {
    let toks = lex(text)?;
    let mut p = Parser { toks, at: 0, ring, len: text.len() };
    let e = p.expr()?;
    if p.at != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(e)
}

pub fn parse_element(text: &str, ring: &RingId) -> Result<Elem> {
    ring_eval(text, ring)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::{int, rat};

    #[test]
    fn weyl_examples() {
        let w = RingId::Weyl;
        assert_eq!(ring_eval("d*x", &w).unwrap().to_string(), "x*d + 1");
        assert_eq!(ring_eval("d^2*x^2", &w).unwrap().to_string(), "x^2*d^2 + 4*x*d + 2");
        assert_eq!(ring_eval("theta", &w).unwrap().to_string(), "x*d");
        assert_eq!(ring_eval("d*x - x*d", &w).unwrap().to_string(), "1");
        assert_eq!(ring_eval("(x+d)^2", &w).unwrap().to_string(), "d^2 + 2*x*d + x^2 + 1");
        assert_eq!(ring_eval("-3/2*x + 1/3", &w).unwrap().to_string(), "-3/2*x + 1/3");
    }

    #[test]
    fn other_rings() {
        assert_eq!(ring_eval("2*(3-5)^3", &RingId::Z).unwrap(), Elem::Int((-16).into()));
        assert!(ring_eval("1/2", &RingId::Z).is_err());
        assert_eq!(ring_eval("6/2", &RingId::Z).unwrap(), Elem::Int(3.into()));
        let p = ring_eval("x^2 - 1/2", &RingId::qx()).unwrap();
        assert_eq!(p.as_poly().unwrap().coeffs(), &[rat(-1, 2), int(0), int(1)]);
    }

    #[test]
    fn errors() {
        assert!(matches!(ring_eval("d + x", &RingId::qx()), Err(Error::RingMismatch { .. })));
        assert!(matches!(ring_eval("x", &RingId::Z), Err(Error::RingMismatch { .. })));
        assert!(matches!(ring_eval("(x", &RingId::Weyl), Err(Error::Parse { .. })));
        assert!(matches!(ring_eval("x^y", &RingId::Weyl), Err(Error::Parse { .. })));
        assert!(matches!(ring_eval("x/d", &RingId::Weyl), Err(Error::Parse { .. })));
        assert!(matches!(ring_eval("x $", &RingId::Weyl), Err(Error::Parse { .. })));
    }

    #[test]
    fn printer_output_reparses() {
        for s in ["d^3*x^2 - 7/3*x*d", "(theta+1)*(theta-2)*d", "x^5 - 1"] {
            let e = ring_eval(s, &RingId::Weyl).unwrap();
            assert_eq!(ring_eval(&e.to_string(), &RingId::Weyl).unwrap(), e);
        }
    }
}
