//! Simple algebraic extensions `Q(a) = Q[x]/(m(x))`.
//!
//! An [`AlgebraicNumber`] is a residue class stored as its reduced
//! representative. Rationals created without reference to a field (through
//! `Zero`, `One` or [`Field::from_rational`]) are compatible with every
//! field, which lets generic polynomial code build constants freely.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::parse::parse_univariate;
use crate::poly::UniPoly;
use crate::ring::{Field, Rational, Ring};

/// `Q[x]/(m)` for a monic squarefree `m`; irreducibility is the caller's
/// responsibility (factorization produces the moduli used in practice).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NumberField {
    min_poly: UniPoly<Rational>,
    symbol: String,
}

impl NumberField {
    pub fn new(min_poly: &UniPoly<Rational>, symbol: &str) -> Result<Arc<Self>> {
        match min_poly.degree() {
            None | Some(0) => return Err(Error::Degenerate("minimal polynomial must be nonconstant".into())),
            _ => {}
        }
        let m = min_poly.monic();
        if m.gcd(&m.derivative()).degree() != Some(0) {
            return Err(Error::InvalidInput(format!(
                "minimal polynomial {} is not squarefree",
                m.to_string_in(symbol)
            )));
        }
        Ok(Arc::new(NumberField { min_poly: m, symbol: symbol.to_string() }))
    }

    pub fn degree(&self) -> usize {
        self.min_poly.degree().unwrap()
    }

    pub fn min_poly(&self) -> &UniPoly<Rational> {
        &self.min_poly
    }

    pub fn symbol(&self) -> &str {
        &self.symbol
    }

    pub fn min_poly_text(&self) -> String {
        self.min_poly.to_string_in(&self.symbol)
    }

    /// The class of `rep`.
    pub fn element(self: &Arc<Self>, rep: &UniPoly<Rational>) -> AlgebraicNumber {
        AlgebraicNumber { field: Some(self.clone()), rep: rep.rem(&self.min_poly) }
    }

    pub fn generator(self: &Arc<Self>) -> AlgebraicNumber {
        self.element(&UniPoly::x())
    }

    pub fn from_rational(self: &Arc<Self>, q: &Rational) -> AlgebraicNumber {
        self.element(&UniPoly::constant(q.clone()))
    }

    /// The roots of the minimal polynomial as formal tags.
    pub fn conjugates(self: &Arc<Self>) -> Vec<Conjugate> {
        let m = &self.min_poly;
        match self.degree() {
            1 => vec![Conjugate::Rational(-m.coeff(0))],
            2 => {
                let a = self.generator();
                let other = self.from_rational(&-m.coeff(1)) - &a;
                vec![Conjugate::Element(a), Conjugate::Element(other)]
            }
            d => {
                let mut out = vec![Conjugate::Element(self.generator())];
                out.extend((1..d).map(|index| Conjugate::Symbolic { index }));
                out
            }
        }
    }

    fn same_as(self: &Arc<Self>, other: &Arc<Self>) -> bool {
        Arc::ptr_eq(self, other) || self.min_poly == other.min_poly
    }
}

/// A formal root of a minimal polynomial.
#[derive(Clone, Debug, PartialEq)]
pub enum Conjugate {
    /// Degree one: the root itself.
    Rational(Rational),
    /// A root expressible in the field (the generator, or for quadratics
    /// the other root `-c1 - a`).
    Element(AlgebraicNumber),
    /// The `index`-th root, kept symbolic.
    Symbolic { index: usize },
}

/// Element of a [`NumberField`].
#[derive(Clone, Serialize, Deserialize)]
#[serde(try_from = "AlgebraicNumberText", into = "AlgebraicNumberText")]
pub struct AlgebraicNumber {
    field: Option<Arc<NumberField>>,
    rep: UniPoly<Rational>,
}

impl AlgebraicNumber {
    pub fn field(&self) -> Option<&Arc<NumberField>> {
        self.field.as_ref()
    }

    /// Reduced representative.
    pub fn rep(&self) -> &UniPoly<Rational> {
        &self.rep
    }

    /// The value when it is rational.
    pub fn to_rational(&self) -> Option<Rational> {
        self.rep.is_constant().then(|| self.rep.coeff(0))
    }

    /// Conjugate under the nontrivial automorphism of a quadratic field.
    pub fn quadratic_conjugate(&self) -> Option<AlgebraicNumber> {
        let f = self.field.as_ref()?;
        if f.degree() != 2 {
            return None;
        }
        // a maps to the other root -c1 - a.
        let (r0, r1) = (self.rep.coeff(0), self.rep.coeff(1));
        let c1 = f.min_poly.coeff(1);
        Some(f.element(&UniPoly::new(vec![r0 - &(r1.clone() * &c1), -r1])))
    }

    fn merged_field(&self, other: &Self) -> Result<Option<Arc<NumberField>>> {
        match (&self.field, &other.field) {
            (Some(a), Some(b)) if !a.same_as(b) => Err(Error::FieldMismatch),
            (Some(a), _) => Ok(Some(a.clone())),
            (None, b) => Ok(b.clone()),
        }
    }

    fn reduce(field: Option<Arc<NumberField>>, rep: UniPoly<Rational>) -> Self {
        let rep = match &field {
            Some(f) if rep.degree() >= Some(f.degree()) => rep.rem(&f.min_poly),
            _ => rep,
        };
        AlgebraicNumber { field, rep }
    }

    /// Checked arithmetic.
    pub fn field_arith(&self, other: &Self, op: FieldOp) -> Result<Self> {
        let field = self.merged_field(other)?;
        Ok(match op {
            FieldOp::Add => Self::reduce(field, self.rep.clone() + &other.rep),
            FieldOp::Sub => Self::reduce(field, self.rep.clone() - &other.rep),
            FieldOp::Mul => Self::reduce(field, self.rep.clone() * &other.rep),
            FieldOp::Div => {
                let inv = other.inv().ok_or(Error::DivisionByZero)?;
                Self::reduce(field, self.rep.clone() * &inv.rep)
            }
        })
    }

    /// Parse the report form `{"min_poly": "...", "rep": "..."}`.
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Document(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }

    fn symbol(&self) -> &str {
        self.field.as_ref().map_or("a", |f| f.symbol())
    }
}

/// Operations accepted by [`AlgebraicNumber::field_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl PartialEq for AlgebraicNumber {
    fn eq(&self, other: &Self) -> bool {
        self.merged_field(other).is_ok() && self.rep == other.rep
    }
}

impl Zero for AlgebraicNumber {
    fn zero() -> Self {
        AlgebraicNumber { field: None, rep: UniPoly::zero() }
    }

    fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }
}

impl One for AlgebraicNumber {
    fn one() -> Self {
        AlgebraicNumber { field: None, rep: UniPoly::one() }
    }
}

macro_rules! forward_op {
    ($trait:ident, $method:ident, $op:ident) => {
        impl<'a> $trait<&'a AlgebraicNumber> for AlgebraicNumber {
            type Output = AlgebraicNumber;

            fn $method(self, rhs: &'a AlgebraicNumber) -> AlgebraicNumber {
                self.field_arith(rhs, FieldOp::$op).expect("operands in the same number field")
            }
        }

        impl $trait for AlgebraicNumber {
            type Output = AlgebraicNumber;

            fn $method(self, rhs: AlgebraicNumber) -> AlgebraicNumber {
                self.$method(&rhs)
            }
        }
    };
}

forward_op!(Add, add, Add);
forward_op!(Sub, sub, Sub);
forward_op!(Mul, mul, Mul);

impl Neg for AlgebraicNumber {
    type Output = AlgebraicNumber;
    fn neg(self) -> Self {
        AlgebraicNumber { field: self.field, rep: -self.rep }
    }
}

impl Ring for AlgebraicNumber {
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        self.field_arith(rhs, FieldOp::Div).ok()
    }

    fn from_i64(n: i64) -> Self {
        Self::from_rational(&Rational::from_i64(n))
    }
}

impl Field for AlgebraicNumber {
    fn inv(&self) -> Option<Self> {
        if self.rep.is_zero() {
            return None;
        }
        let Some(f) = &self.field else {
            return Some(AlgebraicNumber { field: None, rep: UniPoly::constant(self.rep.coeff(0).recip()) });
        };
        if self.rep.is_constant() {
            return Some(f.from_rational(&self.rep.coeff(0).recip()));
        }
        let (g, s, _) = self.rep.xgcd(&f.min_poly);
        (g.degree() == Some(0)).then(|| f.element(&s))
    }

    fn from_rational(q: &Rational) -> Self {
        AlgebraicNumber { field: None, rep: UniPoly::constant(q.clone()) }
    }

    fn rational_coords(&self) -> Vec<Rational> {
        self.rep.coeffs().to_vec()
    }
}

impl fmt::Display for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.rep.to_string_in(self.symbol()))
    }
}

impl fmt::Debug for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.field {
            Some(k) => write!(f, "[{} mod {}]", self, k.min_poly_text()),
            None => write!(f, "[{}]", self),
        }
    }
}

/// Wire form of an [`AlgebraicNumber`].
#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraicNumberText {
    pub min_poly: String,
    pub rep: String,
}

impl From<AlgebraicNumber> for AlgebraicNumberText {
    fn from(a: AlgebraicNumber) -> Self {
        let min_poly = match &a.field {
            Some(f) => f.min_poly_text(),
            None => "a".to_string(),
        };
        AlgebraicNumberText { min_poly, rep: a.to_string() }
    }
}

/// The single identifier used in `text`, if any.
fn symbol_of(text: &str) -> Result<Option<String>> {
    let mut found: Option<String> = None;
    let mut chars = text.char_indices().peekable();
    while let Some((i, c)) = chars.next() {
        if c.is_ascii_alphabetic() || c == '_' {
            let mut end = i + 1;
            while let Some(&(j, d)) = chars.peek() {
                if !(d.is_ascii_alphanumeric() || d == '_') {
                    break;
                }
                end = j + 1;
                chars.next();
            }
            let name = &text[i..end];
            match &found {
                Some(s) if s != name => {
                    return Err(Error::Parse { pos: i, msg: format!("more than one symbol: '{s}' and '{name}'") })
                }
                _ => found = Some(name.to_string()),
            }
        } else if c.is_ascii_digit() {
            while chars.peek().is_some_and(|(_, d)| d.is_ascii_alphanumeric()) {
                chars.next();
            }
        }
    }
    Ok(found)
}

impl TryFrom<AlgebraicNumberText> for AlgebraicNumber {
    type Error = Error;

    fn try_from(t: AlgebraicNumberText) -> Result<Self> {
        let symbol = symbol_of(&t.min_poly)?.unwrap_or_else(|| "a".to_string());
        let m = parse_univariate(&t.min_poly, &symbol)?;
        let field = NumberField::new(&m, &symbol)?;
        let rep = parse_univariate(&t.rep, &symbol)?;
        Ok(field.element(&rep))
    }
}
