//! Sparse multivariate polynomials over a [`Ring`].

use std::borrow::Cow;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::monomial::Monomial;
use super::univariate::UniPoly;
use crate::error::{Error, Result};
use crate::ring::{rational_content, Field, Rational, Ring};

/// Ordered list of variable names, shared cheaply between polynomials.
#[derive(Clone, Debug)]
pub struct Vars(Arc<[String]>);

impl Vars {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Self {
        Vars(names.iter().map(|s| s.as_ref().to_string()).collect())
    }

    /// The projective plane coordinates `t1, t2, t3`.
    pub fn standard() -> Self {
        static STD: OnceLock<Vars> = OnceLock::new();
        STD.get_or_init(|| Vars::new(&["t1", "t2", "t3"])).clone()
    }

    /// Local affine coordinates `u1, u2` used at a point.
    pub fn local() -> Self {
        static LOCAL: OnceLock<Vars> = OnceLock::new();
        LOCAL.get_or_init(|| Vars::new(&["u1", "u2"])).clone()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|v| v == name)
    }
}

impl PartialEq for Vars {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for Vars {}

impl fmt::Display for Vars {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.join(", "))
    }
}

/// Sparse polynomial: a map from exponent vectors to nonzero coefficients,
/// kept in graded-lex order.
///
/// Constants created without a variable context (through `Zero`, `One` or
/// `Ring::from_i64`) adopt the variable list of whatever they are combined
/// with. Combining two polynomials over different variable lists panics in
/// the operator impls; [`arith`] reports it as an error instead.
#[derive(Clone)]
pub struct MultiPoly<R> {
    vars: Option<Vars>,
    terms: BTreeMap<Monomial, R>,
}

/// The operations accepted by [`arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

/// Checked polynomial arithmetic.
pub fn arith<R: Ring>(a: &MultiPoly<R>, b: &MultiPoly<R>, op: ArithOp) -> Result<MultiPoly<R>> {
    a.check_compatible(b)?;
    Ok(match op {
        ArithOp::Add => a.clone() + b,
        ArithOp::Sub => a.clone() - b,
        ArithOp::Mul => a.clone() * b,
    })
}

fn merge_vars(a: &Option<Vars>, b: &Option<Vars>) -> Option<Vars> {
    match (a, b) {
        (Some(x), Some(y)) => {
            assert!(x == y, "polynomials over different variables: [{x}] vs [{y}]");
            Some(x.clone())
        }
        (Some(x), None) | (None, Some(x)) => Some(x.clone()),
        (None, None) => None,
    }
}

impl<R: Ring> MultiPoly<R> {
    pub fn zero_in(vars: &Vars) -> Self {
        MultiPoly { vars: Some(vars.clone()), terms: BTreeMap::new() }
    }

    pub fn constant(vars: &Vars, c: R) -> Self {
        let mut p = Self::zero_in(vars);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(vars.len()), c);
        }
        p
    }

    /// The variable with index `i`.
    pub fn var(vars: &Vars, i: usize) -> Self {
        Self::monomial(vars, Monomial::var(vars.len(), i, 1), R::one())
    }

    pub fn monomial(vars: &Vars, m: Monomial, c: R) -> Self {
        assert_eq!(m.len(), vars.len(), "exponent vector length");
        let mut p = Self::zero_in(vars);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    /// Collect terms, adding coefficients of repeated exponent vectors.
    pub fn from_terms<I, E>(vars: &Vars, terms: I) -> Self
    where
        I: IntoIterator<Item = (E, R)>,
        E: AsRef<[u32]>,
    {
        let mut p = Self::zero_in(vars);
        for (e, c) in terms {
            p.add_term(Monomial::new(e.as_ref()), c);
        }
        p
    }

    /// Add `c * m` in place.
    pub fn add_term(&mut self, m: Monomial, c: R) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = std::mem::replace(o.get_mut(), R::zero()) + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    fn sub_term(&mut self, m: Monomial, c: &R) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(-c.clone());
            }
            Entry::Occupied(mut o) => {
                let s = std::mem::replace(o.get_mut(), R::zero()) - c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn vars(&self) -> Option<&Vars> {
        self.vars.as_ref()
    }

    /// Variable list, falling back to `default` for context-free constants.
    pub fn vars_or(&self, default: &Vars) -> Vars {
        self.vars.clone().unwrap_or_else(|| default.clone())
    }

    pub fn nvars(&self) -> usize {
        self.vars.as_ref().map_or(0, Vars::len)
    }

    /// Error unless both operands can be combined.
    pub fn check_compatible(&self, other: &Self) -> Result<()> {
        match (&self.vars, &other.vars) {
            (Some(a), Some(b)) if a != b => Err(Error::VariableMismatch { left: a.to_string(), right: b.to_string() }),
            _ => Ok(()),
        }
    }

    /// The same polynomial over `vars`; context-free constants are placed
    /// into that variable list.
    pub fn in_vars(&self, vars: &Vars) -> Result<Self> {
        match &self.vars {
            Some(v) if v == vars => Ok(self.clone()),
            Some(v) => Err(Error::VariableMismatch { left: v.to_string(), right: vars.to_string() }),
            None => Ok(Self::constant(vars, self.constant_term())),
        }
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in decreasing graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &R)> {
        self.terms.iter().rev()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Monomial, R)> {
        self.terms.into_iter().rev()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &R)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coeff(&self) -> Option<&R> {
        self.leading_term().map(|(_, c)| c)
    }

    /// Maximal total degree; `None` for zero.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    /// Minimal total degree of a term; `None` for zero.
    pub fn min_degree(&self) -> Option<u32> {
        self.terms.keys().next().map(Monomial::degree)
    }

    /// Degree in variable `i`; zero for the zero polynomial.
    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms.keys().map(|m| m.exp(i)).max().unwrap_or(0)
    }

    pub fn involves(&self, i: usize) -> bool {
        self.terms.keys().any(|m| m.exp(i) > 0)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.degree() == 0)
    }

    pub fn is_homogeneous(&self) -> bool {
        match (self.min_degree(), self.total_degree()) {
            (Some(a), Some(b)) => a == b,
            _ => true,
        }
    }

    pub fn coeff(&self, m: &Monomial) -> R {
        self.terms.get(m).cloned().unwrap_or_else(R::zero)
    }

    pub fn coeff_of(&self, exps: &[u32]) -> R {
        self.coeff(&Monomial::new(exps))
    }

    pub fn constant_term(&self) -> R {
        match self.terms.iter().next() {
            Some((m, c)) if m.degree() == 0 => c.clone(),
            _ => R::zero(),
        }
    }

    /// Sum of the terms of total degree exactly `k`.
    pub fn homogeneous_component(&self, k: u32) -> Self {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().filter(|(m, _)| m.degree() == k).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    /// Drop every term of total degree `>= n`.
    pub fn truncate(&mut self, n: u32) {
        let cut: Vec<Monomial> = self.terms.keys().rev().take_while(|m| m.degree() >= n).cloned().collect();
        for m in cut {
            self.terms.remove(&m);
        }
    }

    pub fn eval(&self, point: &[R]) -> R {
        let mut acc = R::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m.exps()) {
                if e > 0 {
                    t = t * &x.pow_u32(e);
                }
            }
            acc = acc + &t;
        }
        acc
    }

    pub fn map_coeffs<S: Ring>(&self, f: impl Fn(&R) -> S) -> MultiPoly<S> {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let s = f(c);
            if !s.is_zero() {
                terms.insert(m.clone(), s);
            }
        }
        MultiPoly { vars: self.vars.clone(), terms }
    }

    pub fn scale(&self, c: &R) -> Self {
        self.map_coeffs(|a| a.clone() * c)
    }

    /// Multiply by the term `c * m`.
    pub fn mul_term(&self, m: &Monomial, c: &R) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            for (k, a) in &self.terms {
                let v = a.clone() * c;
                if !v.is_zero() {
                    terms.insert(k.mul(m), v);
                }
            }
        }
        MultiPoly { vars: self.vars.clone(), terms }
    }

    /// `self -= c * m * other`, dropping terms of total degree `>= cap`.
    pub fn sub_scaled_term(&mut self, other: &Self, m: &Monomial, c: &R, cap: Option<u32>) {
        if self.vars.is_none() {
            self.vars = other.vars.clone();
        }
        for (k, a) in &other.terms {
            let km = k.mul(m);
            if cap.is_some_and(|n| km.degree() >= n) {
                continue;
            }
            self.sub_term(km, &(a.clone() * c));
        }
    }

    /// Substitute `subs[i]` for variable `i`. The result lives in the
    /// variable list of the substitutes.
    pub fn compose(&self, subs: &[MultiPoly<R>]) -> MultiPoly<R> {
        assert!(self.vars.is_none() || subs.len() == self.nvars(), "one substitute per variable");
        let target = subs.iter().find_map(|s| s.vars.clone());
        let mut powers: Vec<Vec<MultiPoly<R>>> =
            subs.iter().map(|s| vec![MultiPoly::one().with_context(&target), s.clone()]).collect();
        let mut out = MultiPoly { vars: target.clone(), terms: BTreeMap::new() };
        for (m, c) in &self.terms {
            let mut t = MultiPoly::constant_opt(&target, c.clone());
            for (i, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let pw = &mut powers[i];
                while pw.len() <= e as usize {
                    let next = pw.last().unwrap().clone() * &pw[1];
                    pw.push(next);
                }
                t = t * &pw[e as usize];
            }
            out = out + &t;
        }
        out
    }

    fn constant_opt(vars: &Option<Vars>, c: R) -> Self {
        match vars {
            Some(v) => Self::constant(v, c),
            None => {
                let mut p = MultiPoly { vars: None, terms: BTreeMap::new() };
                if !c.is_zero() {
                    p.terms.insert(Monomial::one(0), c);
                }
                p
            }
        }
    }

    fn with_context(self, vars: &Option<Vars>) -> Self {
        match (vars, &self.vars) {
            (Some(v), None) => Self::constant(v, self.constant_term()),
            _ => self,
        }
    }

    /// Iterated partial derivative in variable `i`.
    pub fn partial_derivative(&self, i: usize, order: u32) -> Self {
        let mut out = MultiPoly { vars: self.vars.clone(), terms: BTreeMap::new() };
        for (m, c) in &self.terms {
            let e = m.exp(i);
            if e < order {
                continue;
            }
            let mut factor: i64 = 1;
            for k in 0..order {
                factor *= i64::from(e - k);
            }
            out.add_term(m.with_exp(i, e - order), c.clone() * &R::from_i64(factor));
        }
        out
    }

    /// Set variable `i` to one; the variable stays in the list.
    pub fn dehomogenize(&self, i: usize) -> Self {
        let mut out = MultiPoly { vars: self.vars.clone(), terms: BTreeMap::new() };
        for (m, c) in &self.terms {
            out.add_term(m.with_exp(i, 0), c.clone());
        }
        out
    }

    /// Homogenize to degree `d` with variable `i`, which must not occur.
    pub fn homogenize(&self, i: usize, d: u32) -> Result<Self> {
        if self.involves(i) {
            return Err(Error::Range(format!("variable {i} already occurs in the polynomial")));
        }
        if let Some(td) = self.total_degree() {
            if td > d {
                return Err(Error::Range(format!("homogenization degree {d} below polynomial degree {td}")));
            }
        }
        let mut out = MultiPoly { vars: self.vars.clone(), terms: BTreeMap::new() };
        for (m, c) in &self.terms {
            out.add_term(m.with_exp(i, d - m.degree()), c.clone());
        }
        Ok(out)
    }

    /// View as a univariate polynomial in variable `i` whose coefficients
    /// do not involve that variable.
    pub fn to_uni(&self, i: usize) -> UniPoly<MultiPoly<R>> {
        let deg = self.degree_in(i) as usize;
        let mut coeffs: Vec<MultiPoly<R>> =
            (0..=deg).map(|_| MultiPoly { vars: self.vars.clone(), terms: BTreeMap::new() }).collect();
        for (m, c) in &self.terms {
            let e = m.exp(i) as usize;
            coeffs[e].terms.insert(m.with_exp(i, 0), c.clone());
        }
        UniPoly::new(coeffs)
    }

    /// Inverse of [`to_uni`](Self::to_uni).
    pub fn from_uni(vars: &Vars, i: usize, u: &UniPoly<MultiPoly<R>>) -> Self {
        let mut out = Self::zero_in(vars);
        for (k, c) in u.coeffs().iter().enumerate() {
            for (m, a) in &c.terms {
                let m = if m.len() == vars.len() {
                    m.with_exp(i, k as u32)
                } else {
                    Monomial::var(vars.len(), i, k as u32)
                };
                out.add_term(m, a.clone());
            }
        }
        out
    }

    /// Dense univariate view when only variable `i` occurs.
    pub fn to_univariate(&self, i: usize) -> Option<UniPoly<R>> {
        let mut v = vec![R::zero(); self.degree_in(i) as usize + 1];
        for (m, c) in &self.terms {
            if m.degree() != m.exp(i) {
                return None;
            }
            v[m.exp(i) as usize] = c.clone();
        }
        Some(UniPoly::new(v))
    }

    /// Embed a univariate polynomial as a polynomial in variable `i`.
    pub fn from_univariate(vars: &Vars, i: usize, u: &UniPoly<R>) -> Self {
        Self::from_terms(
            vars,
            u.coeffs()
                .iter()
                .enumerate()
                .map(|(k, c)| (Monomial::var(vars.len(), i, k as u32).exps().to_vec(), c.clone())),
        )
    }

    /// Exact quotient `self / d`, `None` unless `d` divides `self`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let vars = merge_vars(&self.vars, &d.vars);
        let n = vars.as_ref().map_or(0, Vars::len);
        let d = d.clone().with_context(&vars);
        let (dm, dc) = d.leading_term().map(|(m, c)| (pad(m, n).into_owned(), c.clone()))?;
        let mut r = self.clone().with_context(&vars);
        let mut q = MultiPoly { vars, terms: BTreeMap::new() };
        let rest: Vec<(Monomial, R)> = d.terms.iter().rev().skip(1).map(|(m, c)| (m.clone(), c.clone())).collect();
        while let Some((rm, rc)) = r.terms.iter().next_back().map(|(m, c)| (m.clone(), c.clone())) {
            let qm = rm.div(&dm)?;
            let qc = rc.exact_div(&dc)?;
            r.terms.remove(&rm);
            for (m, c) in &rest {
                r.sub_term(m.mul(&qm), &(c.clone() * &qc));
            }
            q.terms.insert(qm, qc);
        }
        Some(q)
    }

    /// Same polynomial over a list of the same length with other names.
    pub fn rename(&self, vars: &Vars) -> Result<Self> {
        if let Some(own) = &self.vars {
            if self.nvars() != vars.len() {
                return Err(Error::VariableMismatch { left: own.to_string(), right: vars.to_string() });
            }
        }
        let mut p = self.in_vars_unchecked(vars);
        p.vars = Some(vars.clone());
        Ok(p)
    }

    fn in_vars_unchecked(&self, vars: &Vars) -> Self {
        match &self.vars {
            Some(_) => self.clone(),
            None => Self::constant(vars, self.constant_term()),
        }
    }

    /// Move variable `i` of `self` to index `map[i]` of `target`.
    pub fn embed(&self, target: &Vars, map: &[usize]) -> Self {
        let mut out = Self::zero_in(target);
        for (m, c) in &self.terms {
            let mut e = vec![0u32; target.len()];
            for (i, &x) in m.exps().iter().enumerate() {
                e[map[i]] += x;
            }
            out.add_term(Monomial::new(&e), c.clone());
        }
        out
    }
}

impl<F: Field> MultiPoly<F> {
    /// Scale so the graded-lex leading coefficient is one.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => self.clone(),
            Some(c) if c.is_one() => self.clone(),
            Some(c) => self.scale(&c.inv().unwrap()),
        }
    }

    /// Divide by the positive rational content of all coefficient
    /// coordinates, leaving a polynomial with coprime integer coordinates.
    pub fn rational_primitive(&self) -> Self {
        let coords: Vec<Rational> = self.terms.values().flat_map(|c| c.rational_coords()).collect();
        let content = rational_content(coords.iter());
        if content.is_one() {
            self.clone()
        } else {
            self.scale(&F::from_rational(&content.recip()))
        }
    }
}

impl MultiPoly<Rational> {
    /// Split as `scale * p` with `p` a primitive integer polynomial whose
    /// leading coefficient is positive.
    pub fn to_primitive_integer(&self) -> (Rational, MultiPoly<BigInt>) {
        let mut content = rational_content(self.terms.values());
        if self.leading_coeff().is_some_and(|c| c < &Rational::zero()) {
            content = -content;
        }
        let p = self.map_coeffs(|c| {
            let v = c / &content;
            debug_assert!(v.is_integer());
            v.to_integer()
        });
        (content, p)
    }

    pub fn from_integer(p: &MultiPoly<BigInt>) -> Self {
        p.map_coeffs(|c| Rational::from_integer(c.clone()))
    }

    /// The polynomial embedded with coefficients in a field containing the
    /// rationals.
    pub fn to_field<F: Field>(&self) -> MultiPoly<F> {
        self.map_coeffs(F::from_rational)
    }
}

impl<R: Ring> PartialEq for MultiPoly<R> {
    fn eq(&self, other: &Self) -> bool {
        match (&self.vars, &other.vars) {
            (Some(a), Some(b)) if a != b => false,
            (Some(_), Some(_)) | (None, None) => self.terms == other.terms,
            _ => self.is_constant() && other.is_constant() && self.constant_term() == other.constant_term(),
        }
    }
}

impl<R: Ring> Zero for MultiPoly<R> {
    fn zero() -> Self {
        MultiPoly { vars: None, terms: BTreeMap::new() }
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<R: Ring> One for MultiPoly<R> {
    fn one() -> Self {
        Self::constant_opt(&None, R::one())
    }
}

fn pad(m: &Monomial, n: usize) -> Cow<'_, Monomial> {
    if m.len() == n {
        Cow::Borrowed(m)
    } else {
        Cow::Owned(Monomial::one(n))
    }
}

impl<'a, R: Ring> Add<&'a MultiPoly<R>> for MultiPoly<R> {
    type Output = MultiPoly<R>;

    fn add(self, rhs: &'a MultiPoly<R>) -> MultiPoly<R> {
        let vars = merge_vars(&self.vars, &rhs.vars);
        let mut out = self.with_context(&vars);
        out.vars = vars;
        let n = out.nvars();
        for (m, c) in &rhs.terms {
            out.add_term(pad(m, n).into_owned(), c.clone());
        }
        out
    }
}

impl<'a, R: Ring> Sub<&'a MultiPoly<R>> for MultiPoly<R> {
    type Output = MultiPoly<R>;

    fn sub(self, rhs: &'a MultiPoly<R>) -> MultiPoly<R> {
        let vars = merge_vars(&self.vars, &rhs.vars);
        let mut out = self.with_context(&vars);
        out.vars = vars;
        let n = out.nvars();
        for (m, c) in &rhs.terms {
            out.sub_term(pad(m, n).into_owned(), c);
        }
        out
    }
}

impl<'a, R: Ring> Mul<&'a MultiPoly<R>> for MultiPoly<R> {
    type Output = MultiPoly<R>;

    fn mul(self, rhs: &'a MultiPoly<R>) -> MultiPoly<R> {
        let vars = merge_vars(&self.vars, &rhs.vars);
        let n = vars.as_ref().map_or(0, Vars::len);
        let mut out = MultiPoly { vars, terms: BTreeMap::new() };
        for (ma, ca) in &self.terms {
            let ma = pad(ma, n);
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(&pad(mb, n)), ca.clone() * cb);
            }
        }
        out
    }
}

impl<R: Ring> Add for MultiPoly<R> {
    type Output = MultiPoly<R>;
    fn add(self, rhs: Self) -> Self {
        self + &rhs
    }
}

impl<R: Ring> Mul for MultiPoly<R> {
    type Output = MultiPoly<R>;
    fn mul(self, rhs: Self) -> Self {
        self * &rhs
    }
}

impl<R: Ring> Neg for MultiPoly<R> {
    type Output = MultiPoly<R>;
    fn neg(self) -> Self {
        MultiPoly { vars: self.vars, terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect() }
    }
}

impl<R: Ring> Ring for MultiPoly<R> {
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        self.div_exact(rhs)
    }

    fn from_i64(n: i64) -> Self {
        Self::constant_opt(&None, R::from_i64(n))
    }
}

/// Render a coefficient so it can stand in front of `*monomial`.
pub(crate) fn coefficient_text(cs: &str) -> (bool, String) {
    let compound = cs.contains(['+', ' ']) || cs.get(1..).is_some_and(|s| s.contains('-'));
    if compound {
        (false, format!("({cs})"))
    } else if let Some(rest) = cs.strip_prefix('-') {
        (true, rest.to_string())
    } else {
        (false, cs.to_string())
    }
}

impl<R: Ring> fmt::Display for MultiPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let names: Vec<String> = match &self.vars {
            Some(v) => v.names().to_vec(),
            None => Vec::new(),
        };
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let (neg, body) = coefficient_text(&c.to_string());
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            let mono: Vec<String> = m
                .exps()
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| if e == 1 { names[i].clone() } else { format!("{}^{}", names[i], e) })
                .collect();
            if mono.is_empty() {
                write!(f, "{body}")?;
            } else if body == "1" {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{}*{}", body, mono.join("*"))?;
            }
        }
        Ok(())
    }
}

impl<R: Ring> fmt::Debug for MultiPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({self})")
    }
}
