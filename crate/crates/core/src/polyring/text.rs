//! Plain-text polynomial format.
//!
//! `x[1,1,2]^2*x[2,2,1] - 3/2*s[1]*t[4] + 7`. Coefficients are `p` or `p/q`,
//! terms are joined by ` + ` / ` - `, and a unit coefficient is omitted.

use std::collections::BTreeSet;

use super::{Dims, Monomial, MonomialOrder, Polynomial, Ring, RingRef, VarId};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

pub fn render_polynomial<F: Scalar>(f: &Polynomial<F>) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let ring = f.ring();
    let mut out = String::new();
    for (k, t) in f.terms().iter().enumerate() {
        let neg = t.coeff.is_negative();
        match (k, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let mut factors = Vec::new();
        let unit = t.coeff.abs().is_one();
        if !unit || t.mono.is_one() {
            factors.push(t.coeff.render_abs());
        }
        for v in t.mono.support() {
            let e = t.mono.exponent(v);
            if e == 1 {
                factors.push(ring.var_at(v).to_string());
            } else {
                factors.push(format!("{}^{}", ring.var_at(v), e));
            }
        }
        out.push_str(&factors.join("*"));
    }
    out
}

struct RawTerm<F> {
    coeff: F,
    powers: Vec<(VarId, u32)>,
}

struct Lexer<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(&format!("expected '{}'", c as char)))
        }
    }

    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} at byte {}", self.pos))
    }

    fn integer(&mut self) -> Result<u32> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an integer"));
        }
        std::str::from_utf8(&self.s[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| self.err("integer out of range"))
    }

    fn number<F: Scalar>(&mut self) -> Result<F> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && (self.s[self.pos].is_ascii_digit() || self.s[self.pos] == b'/') {
            self.pos += 1;
        }
        let tok = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
        F::parse_scalar(tok).ok_or_else(|| self.err(&format!("bad coefficient '{tok}'")))
    }

    fn variable(&mut self) -> Result<VarId> {
        let kind = self.peek().ok_or_else(|| self.err("expected a variable"))?;
        self.pos += 1;
        self.expect(b'[')?;
        let a = self.integer()?;
        let v = match kind {
            b'x' | b'z' => {
                self.expect(b',')?;
                let i = self.integer()?;
                self.expect(b',')?;
                let j = self.integer()?;
                if kind == b'x' {
                    VarId::x(a, i, j)
                } else {
                    VarId::z(a, i, j)
                }
            }
            b's' => VarId::S(a),
            b't' => VarId::T(a),
            _ => return Err(self.err("unknown variable family")),
        };
        self.expect(b']')?;
        Ok(v)
    }

    fn term<F: Scalar>(&mut self, negative: bool) -> Result<RawTerm<F>> {
        let mut coeff = F::one();
        let mut powers = Vec::new();
        loop {
            match self.peek() {
                Some(c) if c.is_ascii_digit() => coeff = coeff * self.number::<F>()?,
                Some(b'x' | b'z' | b's' | b't') => {
                    let v = self.variable()?;
                    let e = if self.peek() == Some(b'^') {
                        self.pos += 1;
                        self.integer()?
                    } else {
                        1
                    };
                    powers.push((v, e));
                }
                _ => return Err(self.err("expected a coefficient or variable")),
            }
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else {
                break;
            }
        }
        if negative {
            coeff = -coeff;
        }
        Ok(RawTerm { coeff, powers })
    }

    fn polynomial<F: Scalar>(&mut self) -> Result<Vec<RawTerm<F>>> {
        let mut terms = Vec::new();
        let mut negative = false;
        if self.peek() == Some(b'-') {
            self.pos += 1;
            negative = true;
        } else if self.peek() == Some(b'+') {
            self.pos += 1;
        }
        loop {
            terms.push(self.term(negative)?);
            match self.peek() {
                None => break,
                Some(b'+') => negative = false,
                Some(b'-') => negative = true,
                Some(_) => return Err(self.err("expected '+' or '-'")),
            }
            self.pos += 1;
        }
        Ok(terms)
    }
}

fn parse_raw<F: Scalar>(s: &str) -> Result<Vec<RawTerm<F>>> {
    let mut lx = Lexer { s: s.as_bytes(), pos: 0 };
    lx.polynomial()
}

fn build<F: Scalar>(raw: Vec<RawTerm<F>>, ring: &RingRef) -> Result<Polynomial<F>> {
    let mut terms = Vec::with_capacity(raw.len());
    for t in raw {
        let mut exps = vec![0u32; ring.nvars()];
        for (v, e) in t.powers {
            let k = ring.position(v).ok_or(Error::UnknownVariable(v))?;
            exps[k] += e;
        }
        terms.push((t.coeff, Monomial::from_exponents(exps)));
    }
    Ok(Polynomial::from_terms(ring, terms))
}

/// Parses one polynomial in the given ring.
pub fn parse_polynomial<F: Scalar>(s: &str, ring: &RingRef) -> Result<Polynomial<F>> {
    let s = s.trim();
    if s == "0" {
        return Ok(Polynomial::zero(ring));
    }
    build(parse_raw(s)?, ring)
}

/// Parses an ideal file: one polynomial per line, `#` starts a comment.
///
/// With `dims` given, the ring is the `X` ring of that shape extended by any
/// other variables that occur. Otherwise the shape is the smallest one that
/// contains every `X` index seen.
pub fn parse_polynomial_lines<F: Scalar>(text: &str, dims: Option<Dims>) -> Result<(RingRef, Vec<Polynomial<F>>)> {
    let mut raws = Vec::new();
    for line in text.lines() {
        let body = line.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        if body == "0" {
            raws.push(Vec::new());
        } else {
            raws.push(parse_raw::<F>(body)?);
        }
    }
    let mut seen = BTreeSet::new();
    for raw in &raws {
        for t in raw {
            for (v, _) in &t.powers {
                seen.insert(*v);
            }
        }
    }
    let dims = match dims {
        Some(d) => d,
        None => {
            let (mut m, mut n, mut r) = (1, 1, 1);
            for v in &seen {
                match *v {
                    VarId::X { l, i, j } | VarId::Z { l, i, j } => {
                        r = r.max(l);
                        m = m.max(i);
                        n = n.max(j);
                    }
                    VarId::S(i) => m = m.max(i),
                    VarId::T(_) => {}
                }
            }
            for v in &seen {
                if let VarId::T(j) = *v {
                    while r * n < j {
                        r += 1;
                    }
                }
            }
            Dims::new(m, n, r)
        }
    };
    let mut roster = dims.x_vars();
    for v in &seen {
        if !v.is_x() {
            roster.push(*v);
        }
    }
    let ring = Ring::new(dims, roster, MonomialOrder::Grevlex)?;
    let polys = raws.into_iter().map(|r| build(r, &ring)).collect::<Result<Vec<_>>>()?;
    Ok((ring, polys))
}
