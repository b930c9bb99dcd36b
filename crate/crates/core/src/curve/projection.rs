//! Intersection numbers at the origin from a resultant.
//!
//! Shear `u1 -> u1 + c*u2` and eliminate `u2`. When the leading coefficient
//! of `f` in `u2` is a unit at `u1 = 0`, the roots of `f` over `u1` are
//! Puiseux series with finite limits, and the order at zero of
//! `Res_u2(f, g)` is the sum of the intersection numbers over all points of
//! the line `u1 = 0`. If `f(0, u2)` and `g(0, u2)` share no root besides
//! zero, the origin is the only such point and the order is exact.

use num_traits::Zero;

use crate::poly::{field_resultant, MultiPoly, UniPoly, Vars};
use crate::ring::Field;

/// Shear values tried before giving up.
const SHEARS: [i64; 9] = [0, 1, -1, 2, -2, 3, -3, 5, -7];

fn shear<F: Field>(f: &MultiPoly<F>, c: &F) -> MultiPoly<F> {
    if c.is_zero() {
        return f.clone();
    }
    let local = Vars::local();
    let u1 = MultiPoly::var(&local, 0) + &MultiPoly::var(&local, 1).scale(c);
    f.compose(&[u1, MultiPoly::var(&local, 1)])
}

fn on_axis<F: Field>(f: &MultiPoly<F>) -> UniPoly<F> {
    let mut v = vec![F::zero(); f.degree_in(1) as usize + 1];
    for (m, c) in f.terms().filter(|(m, _)| m.exp(0) == 0) {
        v[m.exp(1) as usize] = c.clone();
    }
    UniPoly::new(v)
}

fn leading_unit_at_origin<F: Field>(f: &MultiPoly<F>) -> bool {
    let u = f.to_uni(1);
    u.lc().is_some_and(|c| !c.constant_term().is_zero())
}

/// The certified resultant order for one shear, or `None` if the
/// projection does not isolate the origin.
pub fn projected_order<F: Field>(f: &MultiPoly<F>, g: &MultiPoly<F>, c: &F) -> Option<u32> {
    let (mut f, mut g) = (shear(f, c), shear(g, c));
    if !leading_unit_at_origin(&f) {
        if !leading_unit_at_origin(&g) {
            return None;
        }
        std::mem::swap(&mut f, &mut g);
    }
    let (a, b) = (on_axis(&f), on_axis(&g));
    if a.is_zero() || b.is_zero() {
        return None;
    }
    let h = a.gcd(&b);
    if h.degree() != h.order() {
        return None;
    }
    let r = field_resultant(&f, &g, 1).ok()?;
    r.terms().map(|(m, _)| m.exp(0)).min()
}

/// Intersection number at the origin by projection, trying a few shears.
/// `None` means no shear was certified, for instance when the curves share
/// a component.
pub fn intersection_multiplicity_projected<F: Field>(f: &MultiPoly<F>, g: &MultiPoly<F>) -> Option<u32> {
    if f.is_zero() || g.is_zero() {
        return None;
    }
    if !f.constant_term().is_zero() || !g.constant_term().is_zero() {
        return Some(0);
    }
    SHEARS.iter().find_map(|&c| projected_order(f, g, &F::from_i64(c)))
}
