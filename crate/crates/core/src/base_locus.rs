//! Base points of rational maps and their multiplicities.
//!
//! Points are found chart by chart. In the affine chart `t3 = 1`, `t2` is
//! eliminated from random integer combinations of the components by
//! resultants; every irreducible factor `m(t1)` of the gcd of the
//! eliminants defines a field `Q(a)` in which the remaining coordinate is
//! the root of the gcd of the specialized components. When one value of
//! `t1` carries several base points, the chart is sheared and the search
//! repeated. On the line `t3 = 0` the components are binary forms and their
//! gcd gives the points directly.
//!
//! The multiplicity of a base point is the intersection number at the point
//! of two combinations of the components with generic coefficients. Random
//! integer coefficients stand in for generic ones; the generic value is the
//! smallest one observed, and a value is accepted once two draws agree.
//! Each intersection number is read off a certified resultant order when
//! possible, with the Fulton reduction as the fallback.

use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::curve::{intersection_multiplicity_local, intersection_multiplicity_projected, localize, ProjPoint2};
use crate::error::{Error, Result};
use crate::factor::irreducible_factors;
use crate::map::RationalMap;
use crate::number_field::{AlgebraicNumber, NumberField};
use crate::poly::{gcd_many, resultant, Form, MultiPoly, UniPoly, Vars};
use crate::ring::{Field, Rational, Ring};
use crate::rng::{rng, sub_seed, DEFAULT_SEED, DRAW_BOUND};

/// Symbol used for the generator of every point field.
pub const FIELD_SYMBOL: &str = "a";

/// Default bound on the degree of a point field.
pub const DEFAULT_MAX_EXT_DEGREE: usize = 12;

/// Draws tried before a multiplicity is declared non-generic.
pub const MAX_DRAWS: usize = 6;

/// Shears tried when one `t1` value carries several base points.
const MAX_SHEARS: i64 = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BaseLocusOptions {
    pub seed: u64,
    pub max_ext_degree: usize,
}

impl Default for BaseLocusOptions {
    fn default() -> Self {
        BaseLocusOptions { seed: DEFAULT_SEED, max_ext_degree: DEFAULT_MAX_EXT_DEGREE }
    }
}

impl BaseLocusOptions {
    pub fn with_seed(seed: u64) -> Self {
        BaseLocusOptions { seed, ..Default::default() }
    }
}

/// A Galois orbit of base points, represented by one point with
/// coordinates in `Q(a)`. All conjugates share the multiplicity.
#[derive(Clone, PartialEq)]
pub struct ConjugatePointFamily {
    pub field: Arc<NumberField>,
    pub point: ProjPoint2<AlgebraicNumber>,
    pub multiplicity: Option<u32>,
}

impl ConjugatePointFamily {
    /// A family of size one at a rational point, multiplicity unknown.
    pub fn from_rational_point(point: &ProjPoint2<Rational>) -> Self {
        ConjugatePointFamily {
            field: rational_field(&point.coords()[0]),
            point: point.map(AlgebraicNumber::from_rational),
            multiplicity: None,
        }
    }

    /// Number of conjugate points in the family.
    pub fn family_size(&self) -> usize {
        self.field.degree()
    }

    pub fn is_rational(&self) -> bool {
        self.field.degree() == 1
    }

    /// The point over the rationals, for families of size one.
    pub fn rational_point(&self) -> Option<ProjPoint2<Rational>> {
        let c = self.point.coords();
        let q = [c[0].to_rational()?, c[1].to_rational()?, c[2].to_rational()?];
        ProjPoint2::new(q).ok()
    }

    /// Whether every polynomial vanishes at the representative point.
    pub fn lies_on(&self, polys: &[MultiPoly<Rational>]) -> bool {
        polys.iter().all(|p| self.point.eval(&p.to_field::<AlgebraicNumber>()).is_zero())
    }

    fn sort_key(&self) -> (usize, String, String) {
        (self.family_size(), self.field.min_poly_text(), self.point.to_string())
    }
}

impl ConjugatePointFamily {
    /// The point and, for proper families, its field; no multiplicity.
    pub fn location(&self) -> String {
        if self.is_rational() {
            self.point.to_string()
        } else {
            format!("{} with {} = 0", self.point, self.field.min_poly_text())
        }
    }
}

impl fmt::Display for ConjugatePointFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.location())?;
        if let Some(m) = self.multiplicity {
            write!(f, ", multiplicity {m}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for ConjugatePointFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Base points with multiplicities.
#[derive(Clone, Debug, PartialEq)]
pub struct BaseLocusReport {
    pub families: Vec<ConjugatePointFamily>,
    pub total_multiplicity: u64,
}

impl BaseLocusReport {
    pub fn is_empty(&self) -> bool {
        self.families.is_empty()
    }

    /// Number of points counted without multiplicity.
    pub fn point_count(&self) -> usize {
        self.families.iter().map(|f| f.family_size()).sum()
    }

    /// Multiplicities in family order.
    pub fn multiplicities(&self) -> Vec<u32> {
        self.families.iter().map(|f| f.multiplicity.unwrap_or(0)).collect()
    }
}

/// All common zeros of the components, grouped into conjugate families
/// with the multiplicity left unset.
pub fn compute_base_points(components: &[Form], max_ext_degree: usize) -> Result<Vec<ConjugatePointFamily>> {
    let polys: Vec<MultiPoly<Rational>> = components.iter().map(|f| f.poly().clone()).collect();
    if polys.is_empty() {
        return Err(Error::Empty("no components".into()));
    }
    if !crate::poly::are_coprime(&polys) {
        return Err(Error::InvalidInput("components share a common factor".into()));
    }
    let mut families = affine_points(&polys, max_ext_degree)?;
    families.extend(points_at_infinity(&polys, max_ext_degree)?);
    for fam in &families {
        if !fam.lies_on(&polys) {
            return Err(Error::Internal(format!("candidate {fam} is not a common zero")));
        }
    }
    families.sort_by_key(|f| f.sort_key());
    Ok(families)
}

fn rational_field(value: &Rational) -> Arc<NumberField> {
    let m = UniPoly::new(vec![-value.clone(), Rational::one()]);
    NumberField::new(&m, FIELD_SYMBOL).expect("linear polynomials are squarefree")
}

fn random_combination(polys: &[MultiPoly<Rational>], rng: &mut ChaCha8Rng) -> MultiPoly<Rational> {
    let vars = Vars::standard();
    polys.iter().fold(MultiPoly::zero_in(&vars), |acc, p| acc + &p.scale(&Rational::from_i64(rng.gen_range(-50..=50))))
}

/// `p(a, t2)` as a univariate polynomial in `t2` over `Q(a)`.
fn specialize_t1(p: &MultiPoly<Rational>, alpha_powers: &mut Vec<AlgebraicNumber>) -> UniPoly<AlgebraicNumber> {
    let mut coeffs = vec![AlgebraicNumber::zero(); p.degree_in(1) as usize + 1];
    for (m, c) in p.terms() {
        let (a, b) = (m.exp(0) as usize, m.exp(1) as usize);
        while alpha_powers.len() <= a {
            let next = alpha_powers.last().unwrap().clone() * &alpha_powers[1];
            alpha_powers.push(next);
        }
        let term = alpha_powers[a].clone() * &AlgebraicNumber::from_rational(c);
        coeffs[b] = std::mem::replace(&mut coeffs[b], AlgebraicNumber::zero()) + &term;
    }
    UniPoly::new(coeffs)
}

/// Eliminant in `t1` whose roots include the `t1` values of all affine
/// common zeros.
fn eliminant(affine: &[MultiPoly<Rational>]) -> Result<UniPoly<Rational>> {
    let vars = Vars::standard();
    if affine.iter().all(|p| p.degree_in(1) == 0) {
        let g = gcd_many(affine);
        return Ok(g.to_univariate(0).unwrap_or_else(|| UniPoly::constant(Rational::one())));
    }
    let mut rng = rng(0x00E1_1A1A);
    for _ in 0..8 {
        let g: Vec<MultiPoly<Rational>> = (0..3).map(|_| random_combination(affine, &mut rng)).collect();
        if g[0].degree_in(1) == 0 {
            continue;
        }
        let r12 = resultant(&g[0], &g[1], 1).unwrap_or_else(|_| MultiPoly::zero_in(&vars));
        let r13 = resultant(&g[0], &g[2], 1).unwrap_or_else(|_| MultiPoly::zero_in(&vars));
        if r12.is_zero() || r13.is_zero() {
            continue;
        }
        let g = gcd_many(&[r12, r13]);
        return g.to_univariate(0).ok_or_else(|| Error::Internal("eliminant involves t2".into()));
    }
    Err(Error::Internal("random combinations kept sharing a factor".into()))
}

/// Affine zeros of sheared components. `None` if some `t1` value carries
/// more than one point.
fn affine_points_sheared(
    affine: &[MultiPoly<Rational>],
    shear: i64,
    max_ext_degree: usize,
) -> Result<Option<Vec<ConjugatePointFamily>>> {
    let vars = Vars::standard();
    let subs = [
        MultiPoly::var(&vars, 0) + &MultiPoly::var(&vars, 1).scale(&Rational::from_i64(shear)),
        MultiPoly::var(&vars, 1),
        MultiPoly::var(&vars, 2),
    ];
    let sheared: Vec<MultiPoly<Rational>> =
        if shear == 0 { affine.to_vec() } else { affine.iter().map(|p| p.compose(&subs)).collect() };
    let g = eliminant(&sheared)?;
    if g.degree().unwrap_or(0) == 0 {
        return Ok(Some(Vec::new()));
    }
    let mut out = Vec::new();
    for m in irreducible_factors(&g) {
        let k = m.degree().unwrap();
        if k > max_ext_degree {
            return Err(Error::SizeLimit { degree: k, limit: max_ext_degree });
        }
        let field = NumberField::new(&m, FIELD_SYMBOL)?;
        let alpha = field.generator();
        let mut powers = vec![field.from_rational(&Rational::one()), alpha.clone()];
        let mut h = UniPoly::<AlgebraicNumber>::zero();
        for p in &sheared {
            h = h.gcd(&specialize_t1(p, &mut powers));
        }
        if h.is_zero() {
            return Err(Error::Internal("a vertical line lies on every component".into()));
        }
        let h = h.squarefree_part();
        match h.degree() {
            Some(0) => continue,
            Some(1) => {}
            _ => return Ok(None),
        }
        let b = -(h.coeff(0).div(&h.coeff(1)).expect("linear"));
        let one = field.from_rational(&Rational::one());
        let a = alpha + &(b.clone() * &AlgebraicNumber::from_i64(shear));
        let point = ProjPoint2::new([a, b, one])?;
        let field = if k == 1 { rational_field(&point.coords()[0].to_rational().unwrap()) } else { field };
        out.push(ConjugatePointFamily { field, point, multiplicity: None });
    }
    Ok(Some(out))
}

fn affine_points(polys: &[MultiPoly<Rational>], max_ext_degree: usize) -> Result<Vec<ConjugatePointFamily>> {
    let affine: Vec<MultiPoly<Rational>> = polys.iter().map(|p| p.dehomogenize(2)).collect();
    for step in 0..=MAX_SHEARS {
        // 0, 1, -1, 2, -2, ...
        let shear = if step % 2 == 1 { (step + 1) / 2 } else { -(step / 2) };
        if let Some(found) = affine_points_sheared(&affine, shear, max_ext_degree)? {
            return Ok(found);
        }
    }
    Err(Error::Internal("no shear separated the affine base points".into()))
}

fn points_at_infinity(polys: &[MultiPoly<Rational>], max_ext_degree: usize) -> Result<Vec<ConjugatePointFamily>> {
    let vars = Vars::standard();
    let zero = Rational::zero();
    let mut out = Vec::new();
    // Restrictions to t3 = 0 in the chart t1 = 1, as polynomials in t2.
    let on_line: Vec<MultiPoly<Rational>> = polys
        .iter()
        .map(|p| {
            let restricted = MultiPoly::from_terms(
                &vars,
                p.terms().filter(|(m, _)| m.exp(2) == 0).map(|(m, c)| (m.exps().to_vec(), c.clone())),
            );
            restricted.dehomogenize(0)
        })
        .collect();
    if on_line.iter().all(|p| p.is_zero()) {
        return Err(Error::InvalidInput("every component vanishes on the line t3 = 0".into()));
    }
    let g = gcd_many(&on_line);
    let g = g.to_univariate(1).expect("restrictions are univariate in t2");
    if g.degree().unwrap_or(0) > 0 {
        for m in irreducible_factors(&g) {
            let k = m.degree().unwrap();
            if k > max_ext_degree {
                return Err(Error::SizeLimit { degree: k, limit: max_ext_degree });
            }
            let family = if k == 1 {
                let beta = -m.coeff(0);
                let point = ProjPoint2::new([Rational::one(), beta, zero.clone()])?;
                let point = point.map(AlgebraicNumber::from_rational);
                ConjugatePointFamily {
                    field: rational_field(&point.coords()[0].to_rational().unwrap()),
                    point,
                    multiplicity: None,
                }
            } else {
                let field = NumberField::new(&m, FIELD_SYMBOL)?;
                let one = field.from_rational(&Rational::one());
                let point = ProjPoint2::new([one, field.generator(), field.from_rational(&zero)])?;
                ConjugatePointFamily { field, point, multiplicity: None }
            };
            out.push(family);
        }
    }
    // (0:1:0) is invisible in the chart t1 = 1.
    let d = polys[0].total_degree().unwrap_or(0);
    if polys.iter().all(|p| p.coeff_of(&[0, d, 0]).is_zero()) {
        let point = ProjPoint2::new([zero.clone(), Rational::one(), zero.clone()])?.map(AlgebraicNumber::from_rational);
        out.push(ConjugatePointFamily { field: rational_field(&zero), point, multiplicity: None });
    }
    Ok(out)
}

fn draw_coefficients<F: Field>(n: usize, rng: &mut ChaCha8Rng) -> Vec<F> {
    (0..n).map(|_| F::from_i64(rng.gen_range(-DRAW_BOUND..=DRAW_BOUND))).collect()
}

fn combine<F: Field>(locals: &[MultiPoly<F>], coeffs: &[F]) -> MultiPoly<F> {
    let vars = Vars::local();
    locals.iter().zip(coeffs).fold(MultiPoly::zero_in(&vars), |acc, (p, c)| acc + &p.scale(c))
}

/// Generic intersection number at the origin of two combinations of the
/// localized components.
fn agreed_multiplicity<F: Field>(locals: &[MultiPoly<F>], seed: u64) -> Result<u32> {
    let mut rng = rng(seed);
    let mut draws = Vec::new();
    let mut candidate: Option<u32> = None;
    for _ in 0..MAX_DRAWS {
        let w1 = combine(locals, &draw_coefficients::<F>(locals.len(), &mut rng));
        let w2 = combine(locals, &draw_coefficients::<F>(locals.len(), &mut rng));
        if w1.is_zero() || w2.is_zero() {
            continue;
        }
        let v = match intersection_multiplicity_projected(&w1, &w2) {
            Some(v) => v,
            None => intersection_multiplicity_local(&w1, &w2)?,
        };
        draws.push(u64::from(v));
        match candidate {
            Some(c) if c == v => return Ok(v),
            Some(c) => candidate = Some(c.min(v)),
            None => candidate = Some(v),
        }
    }
    Err(Error::GenericityFailure { draws })
}

/// Multiplicity of one base point family, from two generic combinations
/// of the components specialized with the given seed.
pub fn base_point_multiplicity(components: &[Form], family: &ConjugatePointFamily, seed: u64) -> Result<u32> {
    let polys: Vec<&MultiPoly<Rational>> = components.iter().map(|f| f.poly()).collect();
    if let Some(point) = family.rational_point() {
        let locals: Vec<MultiPoly<Rational>> = polys.iter().map(|p| localize(p, &point)).collect();
        if locals.iter().any(|l| !l.constant_term().is_zero()) {
            return Err(Error::InvalidInput(format!("{} is not a base point", family.point)));
        }
        return agreed_multiplicity(&locals, seed);
    }
    let locals: Vec<MultiPoly<AlgebraicNumber>> =
        polys.iter().map(|p| localize(&p.to_field(), &family.point)).collect();
    if locals.iter().any(|l| !l.constant_term().is_zero()) {
        return Err(Error::InvalidInput(format!("{} is not a base point", family.point)));
    }
    agreed_multiplicity(&locals, seed)
}

/// Base points and multiplicities of a map with any number of components.
pub fn base_locus(map: &RationalMap, opts: &BaseLocusOptions) -> Result<BaseLocusReport> {
    let components = map.components();
    let points = compute_base_points(components, opts.max_ext_degree)?;
    let families: Vec<ConjugatePointFamily> = points
        .into_par_iter()
        .enumerate()
        .map(|(i, mut fam)| {
            let m = base_point_multiplicity(components, &fam, sub_seed(opts.seed, i as u64))?;
            fam.multiplicity = Some(m);
            Ok(fam)
        })
        .collect::<Result<_>>()?;
    let total_multiplicity = families.iter().map(|f| f.family_size() as u64 * u64::from(f.multiplicity.unwrap())).sum();
    Ok(BaseLocusReport { families, total_multiplicity })
}

/// Base locus of a map of the plane to itself.
pub fn planar_base_locus(map: &RationalMap, seed: u64) -> Result<BaseLocusReport> {
    if map.len() != 3 {
        return Err(Error::InvalidInput(format!("a planar map has 3 components, got {}", map.len())));
    }
    base_locus(map, &BaseLocusOptions::with_seed(seed))
}
