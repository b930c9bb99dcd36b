//! Text grammar for polynomials.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := ('+' | '-') unary | power
//! power  := atom ('^' integer)?
//! atom   := integer ('/' integer)? | identifier | '(' expr ')'
//! ```
//!
//! Whitespace is ignored and `/` is only allowed inside a rational literal.
//! Identifiers must belong to the variable list supplied by the caller.
//! Inputs are bounded in nesting depth, degree and size so hostile text
//! cannot exhaust memory.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::multivariate::{MultiPoly, Vars};
use crate::error::{Error, Result};
use crate::ring::Rational;

const MAX_DEPTH: usize = 128;
const MAX_DEGREE: u32 = 64;
const MAX_EXPONENT: u32 = 1024;
const MAX_DIGITS: usize = 4096;
const MAX_TERM_PRODUCT: usize = 1 << 20;
const MAX_COEFF_BITS: u64 = 1 << 18;

/// Parse over the standard variables `t1, t2, t3`.
pub fn parse_poly(text: &str) -> Result<MultiPoly<Rational>> {
    parse_poly_in(text, &Vars::standard())
}

pub fn parse_poly_in(text: &str, vars: &Vars) -> Result<MultiPoly<Rational>> {
    let tokens = tokenize(text)?;
    let mut p = Parser { tokens, pos: 0, vars, end: text.len() };
    let out = p.expr(0)?;
    if let Some(t) = p.tokens.get(p.pos) {
        return Err(Error::Parse { pos: t.pos, msg: format!("unexpected {}", t.kind.describe()) });
    }
    out.in_vars(vars)
}

#[derive(Debug, Clone, PartialEq)]
enum Kind {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

impl Kind {
    fn describe(&self) -> String {
        match self {
            Kind::Int(n) => format!("number {n}"),
            Kind::Ident(s) => format!("identifier '{s}'"),
            Kind::Plus => "'+'".into(),
            Kind::Minus => "'-'".into(),
            Kind::Star => "'*'".into(),
            Kind::Caret => "'^'".into(),
            Kind::Slash => "'/'".into(),
            Kind::LParen => "'('".into(),
            Kind::RParen => "')'".into(),
        }
    }
}

#[derive(Debug, Clone)]
struct Token {
    kind: Kind,
    pos: usize,
}

fn tokenize(text: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let mut it = text.char_indices().peekable();
    while let Some((pos, ch)) = it.next() {
        let kind = match ch {
            c if c.is_whitespace() => continue,
            '+' => Kind::Plus,
            '-' | '\u{2212}' => Kind::Minus,
            '*' => Kind::Star,
            '^' => Kind::Caret,
            '/' => Kind::Slash,
            '(' => Kind::LParen,
            ')' => Kind::RParen,
            c if c.is_ascii_digit() => {
                let mut end = pos + 1;
                while let Some(&(i, d)) = it.peek() {
                    if !d.is_ascii_digit() {
                        break;
                    }
                    end = i + 1;
                    it.next();
                }
                if end - pos > MAX_DIGITS {
                    return Err(Error::Parse { pos, msg: "number literal too long".into() });
                }
                Kind::Int(text[pos..end].parse().expect("digits"))
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut end = pos + 1;
                while let Some(&(i, d)) = it.peek() {
                    if !(d.is_ascii_alphanumeric() || d == '_') {
                        break;
                    }
                    end = i + 1;
                    it.next();
                }
                Kind::Ident(text[pos..end].to_string())
            }
            c => return Err(Error::Parse { pos, msg: format!("unexpected character {c:?}") }),
        };
        out.push(Token { kind, pos });
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    vars: &'a Vars,
    end: usize,
}

type P = MultiPoly<Rational>;

impl Parser<'_> {
    fn peek(&self) -> Option<&Kind> {
        self.tokens.get(self.pos).map(|t| &t.kind)
    }

    fn here(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |t| t.pos)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.here(), msg: msg.into() })
    }

    fn expr(&mut self, depth: usize) -> Result<P> {
        if depth > MAX_DEPTH {
            return self.err("expression nested too deeply");
        }
        let mut acc = self.term(depth)?;
        loop {
            match self.peek() {
                Some(Kind::Plus) => {
                    self.pos += 1;
                    acc = acc + &self.term(depth)?;
                }
                Some(Kind::Minus) => {
                    self.pos += 1;
                    acc = acc - &self.term(depth)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self, depth: usize) -> Result<P> {
        let mut acc = self.unary(depth)?;
        while let Some(Kind::Star) = self.peek() {
            self.pos += 1;
            let rhs = self.unary(depth)?;
            acc = self.checked_mul(acc, &rhs)?;
        }
        Ok(acc)
    }

    fn checked_mul(&self, a: P, b: &P) -> Result<P> {
        let deg = a.total_degree().unwrap_or(0) + b.total_degree().unwrap_or(0);
        if deg > MAX_DEGREE {
            return self.err(format!("degree exceeds {MAX_DEGREE}"));
        }
        if a.num_terms().saturating_mul(b.num_terms()) > MAX_TERM_PRODUCT {
            return self.err("expression too large");
        }
        Ok(a * b)
    }

    fn unary(&mut self, depth: usize) -> Result<P> {
        if depth > MAX_DEPTH {
            return self.err("expression nested too deeply");
        }
        match self.peek() {
            Some(Kind::Minus) => {
                self.pos += 1;
                Ok(-self.unary(depth + 1)?)
            }
            Some(Kind::Plus) => {
                self.pos += 1;
                self.unary(depth + 1)
            }
            _ => self.power(depth),
        }
    }

    fn power(&mut self, depth: usize) -> Result<P> {
        let base = self.atom(depth)?;
        if let Some(Kind::Caret) = self.peek() {
            self.pos += 1;
            let e = match self.peek() {
                Some(Kind::Int(n)) => n.clone(),
                _ => return self.err("exponent must be a non-negative integer"),
            };
            let e: u32 = match u32::try_from(&e) {
                Ok(v) if v <= MAX_EXPONENT => v,
                _ => return self.err(format!("exponent exceeds {MAX_EXPONENT}")),
            };
            if base.total_degree().unwrap_or(0).saturating_mul(e) > MAX_DEGREE {
                return self.err(format!("degree exceeds {MAX_DEGREE}"));
            }
            let bits = base.terms().map(|(_, c)| c.numer().bits().max(c.denom().bits())).max().unwrap_or(0);
            if bits.saturating_mul(u64::from(e)) > MAX_COEFF_BITS {
                return self.err("coefficient too large");
            }
            self.pos += 1;
            let mut acc = P::one();
            for _ in 0..e {
                acc = self.checked_mul(acc, &base)?;
            }
            return Ok(acc);
        }
        Ok(base)
    }

    fn atom(&mut self, depth: usize) -> Result<P> {
        let Some(kind) = self.peek().cloned() else {
            return self.err("unexpected end of input");
        };
        match kind {
            Kind::Int(n) => {
                self.pos += 1;
                let mut value = Rational::from_integer(n);
                if let Some(Kind::Slash) = self.peek() {
                    self.pos += 1;
                    let d = match self.peek() {
                        Some(Kind::Int(d)) => d.clone(),
                        _ => return self.err("expected an integer denominator after '/'"),
                    };
                    if d.is_zero() {
                        return self.err("zero denominator");
                    }
                    self.pos += 1;
                    value /= Rational::from_integer(d);
                }
                Ok(P::constant(self.vars, value))
            }
            Kind::Ident(name) => match self.vars.index_of(&name) {
                Some(i) => {
                    self.pos += 1;
                    Ok(P::var(self.vars, i))
                }
                None => self.err(format!("unknown variable '{name}' (expected one of {})", self.vars)),
            },
            Kind::LParen => {
                self.pos += 1;
                let inner = self.expr(depth + 1)?;
                match self.peek() {
                    Some(Kind::RParen) => {
                        self.pos += 1;
                        Ok(inner)
                    }
                    _ => self.err("expected ')'"),
                }
            }
            other => self.err(format!("unexpected {}", other.describe())),
        }
    }
}

/// Parse a univariate polynomial in `symbol` with rational coefficients.
pub fn parse_univariate(text: &str, symbol: &str) -> Result<super::UniPoly<Rational>> {
    let vars = Vars::new(&[symbol]);
    let p = parse_poly_in(text, &vars)?;
    Ok(p.to_univariate(0).expect("single variable"))
}
