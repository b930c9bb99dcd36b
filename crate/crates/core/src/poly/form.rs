use std::fmt;
use std::ops::Deref;

use super::multivariate::MultiPoly;
use crate::error::{Error, Result};
use crate::ring::{Rational, Ring};

/// A nonzero homogeneous polynomial with its degree recorded.
#[derive(Clone)]
pub struct Form<R = Rational> {
    poly: MultiPoly<R>,
    degree: u32,
}

impl<R: Ring> PartialEq for Form<R> {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.poly == other.poly
    }
}

impl<R: Ring> Form<R> {
    pub fn new(poly: MultiPoly<R>) -> Result<Self> {
        let Some(degree) = poly.total_degree() else {
            return Err(Error::Degenerate("the zero polynomial is not a form".into()));
        };
        if !poly.is_homogeneous() {
            return Err(Error::NotHomogeneous(poly.to_string()));
        }
        Ok(Form { poly, degree })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn poly(&self) -> &MultiPoly<R> {
        &self.poly
    }

    pub fn into_poly(self) -> MultiPoly<R> {
        self.poly
    }

    /// Set variable `var` to one.
    pub fn dehomogenize(&self, var: usize) -> MultiPoly<R> {
        self.poly.dehomogenize(var)
    }
}

impl<R: Ring> Deref for Form<R> {
    type Target = MultiPoly<R>;

    fn deref(&self) -> &MultiPoly<R> {
        &self.poly
    }
}

impl Form<Rational> {
    /// The same form with coefficients in a field containing the rationals.
    pub fn to_field<F: crate::ring::Field>(&self) -> Form<F> {
        Form { poly: self.poly.to_field(), degree: self.degree }
    }
}

/// Homogenize with variable `var` to the given degree.
pub fn homogenize<R: Ring>(f: &MultiPoly<R>, var: usize, degree: u32) -> Result<Form<R>> {
    Form::new(f.homogenize(var, degree)?)
}

impl<R: Ring> fmt::Display for Form<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.poly.fmt(f)
    }
}

impl<R: Ring> fmt::Debug for Form<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Form[{}]({})", self.degree, self.poly)
    }
}
