//! Intersection numbers at the origin by Fulton's reduction, run modulo a
//! power of the maximal ideal.
//!
//! Write `m = (u1, u2)` and `I` for the intersection number. Perturbing
//! either curve by an element of `m^n` leaves `min(I, n)` unchanged: if
//! `I < n` then `m^n` lies in `m·(f, g)` locally and Nakayama keeps the
//! ideal. Every Fulton move either preserves the ideal or splits `I` into
//! a sum, so running the moves on truncated polynomials and capping the
//! running total at `n` returns exactly `min(I, n)`. A value below `n` is
//! therefore exact, and a capped value is retried with a larger `n` up to
//! the Bezout bound.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::{Monomial, MultiPoly};
use crate::ring::Field;

/// Degree and leading coefficient of `f(u1, 0)`, or `None` if it vanishes.
fn restriction_top<F: Field>(f: &MultiPoly<F>) -> Option<(u32, F)> {
    f.terms().filter(|(m, _)| m.exp(1) == 0).max_by_key(|(m, _)| m.exp(0)).map(|(m, c)| (m.exp(0), c.clone()))
}

/// Order of `f(u1, 0)` at zero, or `None` if it vanishes.
fn restriction_order<F: Field>(f: &MultiPoly<F>) -> Option<u32> {
    f.terms().filter(|(m, _)| m.exp(1) == 0).map(|(m, _)| m.exp(0)).min()
}

/// `f / u2` for `f` divisible by `u2`.
fn divide_by_u2<F: Field>(f: &MultiPoly<F>) -> MultiPoly<F> {
    let vars = f.vars().expect("local polynomials carry variables").clone();
    MultiPoly::from_terms(&vars, f.terms().map(|(m, c)| ([m.exp(0), m.exp(1) - 1], c.clone())))
}

fn truncated<F: Field>(f: &MultiPoly<F>, n: u32) -> MultiPoly<F> {
    let mut f = f.clone();
    f.truncate(n);
    f
}

/// `min(I, n)` for the curves `f`, `g` at the origin of `u1, u2`.
pub fn intersection_multiplicity_truncated<F: Field>(f: &MultiPoly<F>, g: &MultiPoly<F>, n: u32) -> u32 {
    let (mut f, mut g) = (truncated(f, n), truncated(g, n));
    let mut acc = 0u32;
    loop {
        if acc >= n || f.is_zero() || g.is_zero() {
            return n;
        }
        if !f.constant_term().is_zero() || !g.constant_term().is_zero() {
            return acc;
        }
        match (restriction_top(&f), restriction_top(&g)) {
            (None, None) => return n,
            (None, Some(_)) => {
                acc += restriction_order(&g).unwrap();
                f = divide_by_u2(&f);
            }
            (Some(_), None) => {
                acc += restriction_order(&f).unwrap();
                g = divide_by_u2(&g);
            }
            (Some((r, a)), Some((s, b))) => {
                if r > s {
                    std::mem::swap(&mut f, &mut g);
                }
                let (lo, hi, ca, cb) = if r <= s { (r, s, a, b) } else { (s, r, b, a) };
                let c = cb.div(&ca).expect("nonzero leading coefficient");
                g.sub_scaled_term(&f, &Monomial::new(&[hi - lo, 0]), &c, Some(n));
                g = g.rational_primitive();
            }
        }
    }
}

/// Intersection number at the origin of two polynomials in `u1, u2`.
///
/// Returns [`Error::InfiniteMultiplicity`] when they share a component
/// through the origin.
pub fn intersection_multiplicity_local<F: Field>(f: &MultiPoly<F>, g: &MultiPoly<F>) -> Result<u32> {
    let (Some(df), Some(dg)) = (f.total_degree(), g.total_degree()) else {
        return Err(Error::Degenerate("intersection with the zero polynomial".into()));
    };
    if !f.constant_term().is_zero() || !g.constant_term().is_zero() {
        return Ok(0);
    }
    let bound = df * dg;
    let lowest = f.min_degree().unwrap() * g.min_degree().unwrap();
    let mut n = (lowest + 1).max(8).min(bound + 1);
    loop {
        let v = intersection_multiplicity_truncated(f, g, n);
        if v < n {
            return Ok(v);
        }
        if n > bound {
            return Err(Error::InfiniteMultiplicity);
        }
        n = (2 * n).min(bound + 1);
    }
}
