//! Dense univariate polynomials.
//!
//! `UniPoly<R>` is itself a [`Ring`], so nested types such as
//! `UniPoly<UniPoly<BigInt>>` model bivariate polynomials for resultant
//! computations.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::ring::{Field, Ring};

/// Dense polynomial with coefficients stored from low to high degree.
/// The coefficient vector never has a trailing zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UniPoly<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> UniPoly<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn constant(c: R) -> Self {
        Self::new(vec![c])
    }

    /// `c * x^k`.
    pub fn monomial(c: R, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut v = vec![R::zero(); k + 1];
        v[k] = c;
        UniPoly { coeffs: v }
    }

    pub fn x() -> Self {
        Self::monomial(R::one(), 1)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    /// Coefficient of `x^k`, zero beyond the degree.
    pub fn coeff(&self, k: usize) -> R {
        self.coeffs.get(k).cloned().unwrap_or_else(R::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lc(&self) -> Option<&R> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn eval(&self, at: &R) -> R {
        let mut acc = R::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * at + c;
        }
        acc
    }

    pub fn scale(&self, c: &R) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::new(self.coeffs.iter().map(|a| a.clone() * c).collect())
    }

    /// Multiply by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut v = vec![R::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        UniPoly { coeffs: v }
    }

    pub fn derivative(&self) -> Self {
        Self::new(self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c.clone() * &R::from_i64(i as i64)).collect())
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> UniPoly<S> {
        UniPoly::new(self.coeffs.iter().map(f).collect())
    }

    /// Divide every coefficient exactly by `c`.
    pub fn exact_div_scalar(&self, c: &R) -> Option<Self> {
        let v: Option<Vec<R>> = self.coeffs.iter().map(|a| a.exact_div(c)).collect();
        v.map(Self::new)
    }

    /// Pseudo-remainder `lc(b)^(deg a - deg b + 1) * a mod b`.
    ///
    /// # Panics
    /// If `b` is zero.
    pub fn pseudo_rem(&self, b: &Self) -> Self {
        let db = b.degree().expect("pseudo-remainder by zero");
        let lb = b.lc().unwrap().clone();
        let mut r = self.clone();
        let Some(da) = r.degree() else {
            return r;
        };
        if da < db {
            return r;
        }
        let mut steps = da - db + 1;
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let lr = r.lc().unwrap().clone();
            let t = b.scale(&lr).shift(dr - db);
            r = r.scale(&lb) - &t;
            steps -= 1;
        }
        if steps > 0 {
            r = r.scale(&lb.pow_u32(steps as u32));
        }
        r
    }

    /// Exact polynomial quotient, `None` if `b` does not divide `self`.
    pub fn div_exact(&self, b: &Self) -> Option<Self> {
        let db = b.degree()?;
        let lb = b.lc().unwrap();
        let mut r = self.clone();
        let Some(da) = r.degree() else {
            return Some(Self::zero());
        };
        if da < db {
            return None;
        }
        let mut q = vec![R::zero(); da - db + 1];
        while let Some(dr) = r.degree() {
            if dr < db {
                return None;
            }
            let c = r.lc().unwrap().exact_div(lb)?;
            r = r - &b.scale(&c).shift(dr - db);
            q[dr - db] = c;
        }
        Some(Self::new(q))
    }
}

impl<F: Field> UniPoly<F> {
    /// Euclidean division.
    ///
    /// # Panics
    /// If `b` is zero.
    pub fn div_rem(&self, b: &Self) -> (Self, Self) {
        let db = b.degree().expect("division by zero polynomial");
        let inv = b.lc().unwrap().inv().unwrap();
        let mut r = self.clone();
        let mut q: Vec<F> = Vec::new();
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            if q.is_empty() {
                q = vec![F::zero(); dr - db + 1];
            }
            let c = r.lc().unwrap().clone() * &inv;
            r = r - &b.scale(&c).shift(dr - db);
            q[dr - db] = c;
        }
        (Self::new(q), r)
    }

    pub fn rem(&self, b: &Self) -> Self {
        self.div_rem(b).1
    }

    /// Scale to leading coefficient one; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.lc() {
            None => Self::zero(),
            Some(l) => self.scale(&l.inv().unwrap()),
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended gcd: returns `(g, s, t)` with `s*self + t*other = g`, `g` monic.
    pub fn xgcd(&self, other: &Self) -> (Self, Self, Self) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::one(), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), Self::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            r0 = std::mem::replace(&mut r1, r);
            let s = s0 - &(q.clone() * &s1);
            s0 = std::mem::replace(&mut s1, s);
            let t = t0 - &(q * &t1);
            t0 = std::mem::replace(&mut t1, t);
        }
        match r0.lc().cloned() {
            None => (r0, s0, t0),
            Some(l) => {
                let inv = l.inv().unwrap();
                (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
            }
        }
    }

    /// Product of the distinct irreducible factors, monic.
    pub fn squarefree_part(&self) -> Self {
        if self.degree().unwrap_or(0) == 0 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }

    /// Yun's algorithm: monic squarefree factors `(a_i, i)` with
    /// `self = lc * prod a_i^i`; factors equal to one are skipped.
    pub fn squarefree_decomposition(&self) -> Vec<(Self, usize)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let f = self.monic();
        let df = f.derivative();
        let a0 = f.gcd(&df);
        let mut b = f.div_rem(&a0).0;
        let mut c = df.div_rem(&a0).0;
        let mut d = c - &b.derivative();
        let mut i = 1;
        loop {
            let a = b.gcd(&d);
            if a.degree().unwrap_or(0) > 0 {
                out.push((a.clone(), i));
            }
            b = b.div_rem(&a).0;
            if b.degree().unwrap_or(0) == 0 {
                break;
            }
            c = d.div_rem(&a).0;
            d = c - &b.derivative();
            i += 1;
        }
        out
    }
}

impl<R: Ring> Zero for UniPoly<R> {
    fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<R: Ring> One for UniPoly<R> {
    fn one() -> Self {
        UniPoly { coeffs: vec![R::one()] }
    }
}

impl<'a, R: Ring> Add<&'a UniPoly<R>> for UniPoly<R> {
    type Output = UniPoly<R>;

    fn add(mut self, rhs: &'a UniPoly<R>) -> UniPoly<R> {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), R::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a = std::mem::replace(a, R::zero()) + b;
        }
        UniPoly::new(self.coeffs)
    }
}

impl<'a, R: Ring> Sub<&'a UniPoly<R>> for UniPoly<R> {
    type Output = UniPoly<R>;

    fn sub(mut self, rhs: &'a UniPoly<R>) -> UniPoly<R> {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), R::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a = std::mem::replace(a, R::zero()) - b;
        }
        UniPoly::new(self.coeffs)
    }
}

impl<'a, R: Ring> Mul<&'a UniPoly<R>> for UniPoly<R> {
    type Output = UniPoly<R>;

    fn mul(self, rhs: &'a UniPoly<R>) -> UniPoly<R> {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut v = vec![R::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                v[i + j] = std::mem::replace(&mut v[i + j], R::zero()) + &(a.clone() * b);
            }
        }
        UniPoly::new(v)
    }
}

impl<R: Ring> Add for UniPoly<R> {
    type Output = UniPoly<R>;
    fn add(self, rhs: Self) -> Self {
        self + &rhs
    }
}

impl<R: Ring> Mul for UniPoly<R> {
    type Output = UniPoly<R>;
    fn mul(self, rhs: Self) -> Self {
        self * &rhs
    }
}

impl<R: Ring> Neg for UniPoly<R> {
    type Output = UniPoly<R>;
    fn neg(self) -> Self {
        UniPoly { coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

impl<R: Ring> Ring for UniPoly<R> {
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        self.div_exact(rhs)
    }

    fn from_i64(n: i64) -> Self {
        Self::constant(R::from_i64(n))
    }
}

impl<R: Ring> fmt::Display for UniPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_in("x"))
    }
}

impl<R: Ring> fmt::Debug for UniPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({})", self)
    }
}

impl<R: Ring> UniPoly<R> {
    /// Render with the given variable name, highest degree first.
    pub fn to_string_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let cs = c.to_string();
            let needs_parens = cs.contains(['+', ' ']) || cs[1..].contains('-');
            let (neg, body) = match cs.strip_prefix('-') {
                Some(rest) if !needs_parens => (true, rest.to_string()),
                _ if needs_parens => (false, format!("({cs})")),
                _ => (false, cs.clone()),
            };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            if mono.is_empty() {
                out.push_str(&body);
            } else if body == "1" {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{body}*{mono}"));
            }
        }
        out
    }
}
