//! Composition and inversion of rational maps of the plane.
//!
//! A birational `S = (s1 : s2 : s3)` is inverted by elimination. With target
//! coordinates `x1, x2, x3`, the curves `x2*s1 - x1*s2` and `x3*s1 - x1*s3`
//! meet, for generic `x`, at the preimage of `x` and at the base points.
//! Eliminating `t2` leaves a polynomial in `t1, x` whose factors are either
//! free of `x` (base points), free of `t1` (special targets), or the single
//! factor `a(x)*t1 + b(x)` carrying the inverse. Stripping both contents
//! isolates it. Every inverse is checked against `S(R) = (t1*w : t2*w : t3*w)`
//! before it is returned.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::map::{PlanarMap, RationalMap};
use crate::poly::{gcd_many, resultant, Monomial, MultiPoly, Vars};
use crate::ring::{rational_content, Rational};

/// An inverse `R` of a planar map `S` with `S(R) = (t1*w : t2*w : t3*w)`,
/// where `w` is the cofactor.
#[derive(Clone, Debug, PartialEq)]
pub struct MapInverse {
    pub inverse: PlanarMap,
    pub cofactor: MultiPoly<Rational>,
}

/// Degree of the coprime components.
pub fn map_degree(map: &RationalMap) -> u32 {
    map.degree()
}

/// Scale a list of polynomials by one rational so the coefficients are
/// coprime integers and the first leading coefficient is positive.
pub fn normalize_scalar(polys: &mut [MultiPoly<Rational>]) {
    let content = rational_content(polys.iter().flat_map(|p| p.terms().map(|(_, c)| c)));
    if content.is_zero() {
        return;
    }
    let sign = polys.iter().find_map(|p| p.leading_coeff()).is_some_and(|c| c.is_negative());
    let s = if sign { -content.recip() } else { content.recip() };
    if !s.is_one() {
        for p in polys.iter_mut() {
            *p = p.scale(&s);
        }
    }
}

/// Divide out the gcd of the components and normalize the scalar.
pub fn remove_common_factor(polys: &[MultiPoly<Rational>]) -> Result<(Vec<MultiPoly<Rational>>, MultiPoly<Rational>)> {
    let g = gcd_many(polys);
    let mut out = polys
        .iter()
        .map(|p| p.div_exact(&g).ok_or_else(|| Error::Internal("gcd does not divide a component".into())))
        .collect::<Result<Vec<_>>>()?;
    normalize_scalar(&mut out);
    Ok((out, g))
}

/// `f(g)`, reduced to coprime components.
pub fn compose_planar(f: &RationalMap, g: &PlanarMap) -> Result<RationalMap> {
    if g.len() != 3 {
        return Err(Error::InvalidInput(format!("the inner map must have 3 components, got {}", g.len())));
    }
    let subs = g.polys();
    let comps: Vec<MultiPoly<Rational>> = f.polys().iter().map(|p| p.compose(&subs)).collect();
    if comps.iter().any(|c| c.is_zero()) {
        return Err(Error::Degenerate("a component of the composition vanishes identically".into()));
    }
    let (comps, _) = remove_common_factor(&comps)?;
    RationalMap::new_unchecked_gcd(comps)
}

fn elimination_vars() -> Vars {
    Vars::new(&["t1", "t2", "x1", "x2", "x3"])
}

/// `t1` or `t2` as a quotient of forms in the target coordinates, read off
/// the factor of `Res(g1, g2)` that is linear in the kept variable.
fn solve_coordinate(
    g1: &MultiPoly<Rational>,
    g2: &MultiPoly<Rational>,
    eliminate: usize,
    keep: usize,
) -> Result<(MultiPoly<Rational>, MultiPoly<Rational>)> {
    let r = resultant(g1, g2, eliminate).map_err(|_| Error::NotBirational { degree: 0 })?;
    if r.is_zero() {
        return Err(Error::NotBirational { degree: 0 });
    }
    let target_content = gcd_many(&r.to_uni(keep).into_coeffs());
    let r = r.div_exact(&target_content).ok_or_else(|| Error::Internal("content does not divide".into()))?;
    let mut by_target: std::collections::BTreeMap<Vec<u32>, Vec<(Monomial, Rational)>> = Default::default();
    for (m, c) in r.terms() {
        by_target.entry(m.exps()[2..].to_vec()).or_default().push((m.clone(), c.clone()));
    }
    let ev = elimination_vars();
    let slices: Vec<MultiPoly<Rational>> = by_target
        .values()
        .map(|ts| MultiPoly::from_terms(&ev, ts.iter().map(|(m, c)| ([m.exp(0), m.exp(1), 0, 0, 0], c.clone()))))
        .collect();
    let source_content = gcd_many(&slices);
    let r = r.div_exact(&source_content).ok_or_else(|| Error::Internal("content does not divide".into()))?;
    let degree = r.degree_in(keep) as usize;
    if degree != 1 {
        return Err(Error::NotBirational { degree });
    }
    let u = r.to_uni(keep);
    let std = Vars::standard();
    let down = |p: &MultiPoly<Rational>| p.embed(&std, &[0, 0, 0, 1, 2]);
    Ok((down(&-u.coeff(0)), down(&u.coeff(1))))
}

/// Inverse of a birational map of the plane, certified by the cofactor
/// identity.
pub fn invert_planar(map: &PlanarMap) -> Result<MapInverse> {
    if map.len() != 3 {
        return Err(Error::InvalidInput(format!("a planar map has 3 components, got {}", map.len())));
    }
    let ev = elimination_vars();
    let s: Vec<MultiPoly<Rational>> = map.polys().iter().map(|p| p.dehomogenize(2).embed(&ev, &[0, 1, 0])).collect();
    let x = |i: usize| MultiPoly::var(&ev, 2 + i);
    let g1 = x(1) * &s[0] - &(x(0) * &s[1]);
    let g2 = x(2) * &s[0] - &(x(0) * &s[2]);
    let (first, second) = rayon::join(|| solve_coordinate(&g1, &g2, 1, 0), || solve_coordinate(&g1, &g2, 0, 1));
    let ((n1, d1), (n2, d2)) = (first?, second?);
    let comps = vec![n1 * &d2, n2 * &d1, d1 * &d2];
    let (comps, _) = remove_common_factor(&comps)?;
    let inverse =
        RationalMap::new_unchecked_gcd(comps).map_err(|e| Error::Internal(format!("inverse is not a map: {e}")))?;
    let cofactor =
        cofactor(map, &inverse).ok_or_else(|| Error::Internal("inverse fails the cofactor identity".into()))?;
    Ok(MapInverse { inverse, cofactor })
}

/// The `w` with `S(R) = (t1*w : t2*w : t3*w)`, if there is one.
pub fn cofactor(s: &PlanarMap, r: &PlanarMap) -> Option<MultiPoly<Rational>> {
    let subs = r.polys();
    let sr: Vec<MultiPoly<Rational>> = s.polys().iter().map(|p| p.compose(&subs)).collect();
    let std = Vars::standard();
    let w = sr[0].div_exact(&MultiPoly::var(&std, 0))?;
    if w.is_zero() {
        return None;
    }
    (1..3).all(|i| sr[i] == MultiPoly::var(&std, i) * &w).then_some(w)
}
