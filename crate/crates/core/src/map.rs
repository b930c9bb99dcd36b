//! Rational maps out of the projective plane, given by coprime forms of one
//! degree in `t1, t2, t3`.

use std::fmt;

use crate::error::{Error, Result};
use crate::poly::{are_coprime, parse_poly, Form, MultiPoly, Vars};
use crate::ring::Rational;

/// `(f1 : ... : fn)` with coprime forms of a common degree.
#[derive(Clone, PartialEq)]
pub struct RationalMap {
    components: Vec<Form>,
    degree: u32,
}

/// A parametrization `P^2 -> P^3` of a surface.
pub type SurfaceParam = RationalMap;

/// A rational map `P^2 -> P^2`.
pub type PlanarMap = RationalMap;

impl RationalMap {
    /// Validate and wrap the components: all nonzero forms in the standard
    /// variables, one common degree, no common factor.
    pub fn new(components: Vec<MultiPoly<Rational>>) -> Result<Self> {
        let map = Self::new_unchecked_gcd(components)?;
        let polys: Vec<MultiPoly<Rational>> = map.components.iter().map(|f| f.poly().clone()).collect();
        if !are_coprime(&polys) {
            return Err(Error::InvalidInput("components share a common factor".into()));
        }
        Ok(map)
    }

    /// As [`RationalMap::new`] without the coprimality check.
    pub fn new_unchecked_gcd(components: Vec<MultiPoly<Rational>>) -> Result<Self> {
        if components.len() < 2 {
            return Err(Error::InvalidInput("a map needs at least two components".into()));
        }
        let std = Vars::standard();
        let mut forms = Vec::with_capacity(components.len());
        for c in components {
            let c = c.in_vars(&std)?;
            forms.push(Form::new(c)?);
        }
        let degree = forms[0].degree();
        if let Some(f) = forms.iter().find(|f| f.degree() != degree) {
            return Err(Error::DegreeMismatch { expected: degree, found: f.degree() });
        }
        Ok(RationalMap { components: forms, degree })
    }

    pub fn surface(components: Vec<MultiPoly<Rational>>) -> Result<Self> {
        Self::with_len(components, 4)
    }

    pub fn planar(components: Vec<MultiPoly<Rational>>) -> Result<Self> {
        Self::with_len(components, 3)
    }

    fn with_len(components: Vec<MultiPoly<Rational>>, n: usize) -> Result<Self> {
        if components.len() != n {
            return Err(Error::InvalidInput(format!("expected {n} components, got {}", components.len())));
        }
        Self::new(components)
    }

    /// Parse components written in `t1, t2, t3`.
    pub fn parse(texts: &[&str]) -> Result<Self> {
        Self::new(texts.iter().map(|t| parse_poly(t)).collect::<Result<_>>()?)
    }

    pub fn identity() -> Self {
        Self::parse(&["t1", "t2", "t3"]).unwrap()
    }

    pub fn components(&self) -> &[Form] {
        &self.components
    }

    pub fn component(&self, i: usize) -> &Form {
        &self.components[i]
    }

    pub fn polys(&self) -> Vec<MultiPoly<Rational>> {
        self.components.iter().map(|f| f.poly().clone()).collect()
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Whether the components agree with `other`'s up to one nonzero scalar.
    pub fn proportional_to(&self, other: &RationalMap) -> bool {
        proportional(&self.polys(), &other.polys())
    }
}

/// Whether `a = c * b` componentwise for one nonzero rational `c`.
pub fn proportional(a: &[MultiPoly<Rational>], b: &[MultiPoly<Rational>]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let mut ratio: Option<Rational> = None;
    for (x, y) in a.iter().zip(b) {
        match (x.leading_term(), y.leading_term()) {
            (None, None) => continue,
            (Some((mx, cx)), Some((my, cy))) if mx == my => {
                let r = cx / cy;
                if ratio.as_ref().is_some_and(|q| q != &r) {
                    return false;
                }
                if x != &y.scale(&r) {
                    return false;
                }
                ratio = Some(r);
            }
            _ => return false,
        }
    }
    ratio.is_some()
}

impl fmt::Display for RationalMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, " : ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for RationalMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalMap[{}]{}", self.degree, self)
    }
}
