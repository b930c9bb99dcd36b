//! Transversality of a surface parametrization and its reparametrization
//! to a polynomial one without base points.
//!
//! A parametrization `P = (p1 : p2 : p3 : p4)` is transversal when at every
//! base point the multiplicity of the base locus equals `m^2`, with `m` the
//! smallest multiplicity of a component there. Equivalently the tangent
//! cones of those minimal components share no line.
//!
//! For transversal `P` the reparametrizing map `S` is recovered from the
//! linear system of curves of degree `deg P / sqrt(deg Surf)` with
//! multiplicity `sqrt(mult(A) / deg Surf)` at each base point `A`. Then
//! `Q = P(S^-1)` is polynomial when its last component is a power of a
//! linear form.

use std::fmt;

use num_traits::{One, Zero};

use crate::base_locus::{base_locus, compute_base_points, BaseLocusOptions, BaseLocusReport, ConjugatePointFamily};
use crate::birational::{compose_planar, invert_planar, normalize_scalar};
use crate::curve::{is_trivial_gcd, tangent_cone, tangent_product_gcd, TangentCone};
use crate::error::{Error, Result};
use crate::linear_system::{build_linear_system, DivisorSpec};
use crate::map::{proportional, PlanarMap, RationalMap, SurfaceParam};
use crate::number_field::AlgebraicNumber;
use crate::poly::{Form, Monomial, MultiPoly, Vars};
use crate::ring::{exact_sqrt, Field, Rational, Ring};

/// The local picture at one base point family.
#[derive(Clone, Debug, PartialEq)]
pub struct PointTransversality {
    pub family: ConjugatePointFamily,
    pub multiplicity: u32,
    /// Smallest multiplicity of a component at the point.
    pub local_multiplicity: u32,
    pub is_perfect_square: bool,
    pub tangent_gcd_trivial: bool,
}

/// Why a parametrization fails the transversality test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NotTransversalReason {
    NotPerfectSquare { point: String, multiplicity: u32 },
    SharedTangent { point: String },
}

impl NotTransversalReason {
    pub fn code(&self) -> &'static str {
        match self {
            Self::NotPerfectSquare { .. } => "not-perfect-square",
            Self::SharedTangent { .. } => "shared-tangent",
        }
    }
}

impl fmt::Display for NotTransversalReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::NotPerfectSquare { point, multiplicity } => {
                write!(f, "multiplicity {multiplicity} at {point} is not a perfect square")
            }
            Self::SharedTangent { point } => write!(f, "the minimal components share a tangent at {point}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Transversal,
    NotTransversal(NotTransversalReason),
}

#[derive(Clone, Debug, PartialEq)]
pub struct TransversalityReport {
    pub base_locus: BaseLocusReport,
    pub per_point: Vec<PointTransversality>,
    pub verdict: Verdict,
}

impl TransversalityReport {
    pub fn is_transversal(&self) -> bool {
        self.verdict == Verdict::Transversal
    }
}

/// Why no polynomial parametrization without base points exists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NoPolynomialReason {
    SurfaceDegreeNotSquare { surface_degree: u32 },
    DegreeNotDivisible { map_degree: u32, root: u32 },
    MultiplicityNotSquare { point: String, multiplicity: u32 },
    WrongDimension { dimension: Option<usize> },
    FixedComponent,
    NotLinearPower,
}

impl NoPolynomialReason {
    pub fn code(&self) -> &'static str {
        match self {
            Self::SurfaceDegreeNotSquare { .. } => "surface-degree-not-square",
            Self::DegreeNotDivisible { .. } => "degree-not-divisible",
            Self::MultiplicityNotSquare { .. } => "multiplicity-not-square",
            Self::WrongDimension { .. } => "dimension-not-two",
            Self::FixedComponent => "fixed-component",
            Self::NotLinearPower => "not-linear-power",
        }
    }
}

impl fmt::Display for NoPolynomialReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::SurfaceDegreeNotSquare { surface_degree } => {
                write!(f, "surface degree {surface_degree} is not a perfect square")
            }
            Self::DegreeNotDivisible { map_degree, root } => {
                write!(f, "{root} does not divide the degree {map_degree}")
            }
            Self::MultiplicityNotSquare { point, multiplicity } => {
                write!(f, "multiplicity {multiplicity} at {point} gives no integral requirement")
            }
            Self::WrongDimension { dimension: Some(d) } => write!(f, "the linear system has dimension {d}, not 2"),
            Self::WrongDimension { dimension: None } => write!(f, "the linear system is empty"),
            Self::FixedComponent => write!(f, "the linear system has a fixed component"),
            Self::NotLinearPower => write!(f, "the last component is not a power of a linear form"),
        }
    }
}

/// The reparametrization found by the main algorithm.
#[derive(Clone, Debug, PartialEq)]
pub struct PolynomialReparam {
    /// Normalized result: last component `t3^deg`.
    pub q: SurfaceParam,
    /// `P(R)` before normalization.
    pub q_raw: SurfaceParam,
    pub s_bar: PlanarMap,
    pub r_bar: PlanarMap,
    /// `L` with `q = q_raw(L^-1)`.
    pub projectivity: PlanarMap,
    pub surface_degree: u32,
}

impl PolynomialReparam {
    /// Components with `t3 = 1`.
    pub fn affine(&self) -> Vec<MultiPoly<Rational>> {
        affine_form(&self.q)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum ReparamOutcome {
    AlreadyAlmostPolynomial { parametrization: SurfaceParam, projectivity: PlanarMap },
    Polynomial(Box<PolynomialReparam>),
    NoPolynomialParametrization(NoPolynomialReason),
    NotApplicable(NotTransversalReason),
}

impl ReparamOutcome {
    pub fn name(&self) -> &'static str {
        match self {
            Self::AlreadyAlmostPolynomial { .. } => "already-almost-polynomial",
            Self::Polynomial(_) => "polynomial",
            Self::NoPolynomialParametrization(_) => "no-polynomial-parametrization",
            Self::NotApplicable(_) => "not-applicable",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ReparamResult {
    pub outcome: ReparamOutcome,
    /// Absent when the input was already almost polynomial.
    pub transversality: Option<TransversalityReport>,
}

/// `l` with `f = c * l^deg f`, scaled to a primitive integer form with a
/// positive leading coefficient.
pub fn is_power_of_linear_form(f: &Form) -> Option<Form> {
    let d = f.degree();
    if d == 0 {
        return None;
    }
    let std = Vars::standard();
    let pure = |k: usize, e: u32| Monomial::var(3, k, e);
    let k = (0..3).find(|&k| !f.poly().coeff(&pure(k, d)).is_zero())?;
    let c = f.poly().coeff(&pure(k, d));
    let mut ell = MultiPoly::var(&std, k);
    for j in (0..3).filter(|&j| j != k) {
        let mut e = [0u32; 3];
        e[k] = d - 1;
        e[j] = 1;
        let a = f.poly().coeff(&Monomial::new(&e)) / (&c * &Rational::from_i64(i64::from(d)));
        ell = ell + &MultiPoly::var(&std, j).scale(&a);
    }
    if ell.pow_u32(d).scale(&c) != *f.poly() {
        return None;
    }
    let mut v = [ell];
    normalize_scalar(&mut v);
    let [ell] = v;
    Form::new(ell).ok()
}

/// The projectivity `L = (ti, tj, l)` for a linear form `l`, where the
/// omitted index `k` is the last one with a nonzero coefficient, together
/// with its inverse.
pub fn normalizing_projectivity(ell: &Form) -> Result<(PlanarMap, PlanarMap)> {
    if ell.degree() != 1 {
        return Err(Error::InvalidInput(format!("{ell} is not linear")));
    }
    let std = Vars::standard();
    let a: Vec<Rational> = (0..3).map(|i| ell.poly().coeff(&Monomial::var(3, i, 1))).collect();
    let k = (0..3).rev().find(|&i| !a[i].is_zero()).expect("nonzero linear form");
    let [i, j] = match k {
        0 => [1, 2],
        1 => [0, 2],
        _ => [0, 1],
    };
    let l = RationalMap::planar(vec![MultiPoly::var(&std, i), MultiPoly::var(&std, j), ell.poly().clone()])?;
    let y = |n: usize| MultiPoly::var(&std, n);
    let mut inv = vec![MultiPoly::zero_in(&std); 3];
    inv[i] = y(0);
    inv[j] = y(1);
    inv[k] = (y(2) - &y(0).scale(&a[i]) - &y(1).scale(&a[j])).scale(&a[k].inv().unwrap());
    Ok((l, RationalMap::planar(inv)?))
}

/// `P(L^-1)` scaled so that its last component is exactly `t3^deg`.
pub fn normalize_almost_polynomial(p: &SurfaceParam, ell: &Form) -> Result<(SurfaceParam, PlanarMap)> {
    if p.len() != 4 {
        return Err(Error::InvalidInput("a surface parametrization has 4 components".into()));
    }
    let d = p.degree();
    let last = p.component(3).poly();
    let (l, l_inv) = normalizing_projectivity(ell)?;
    let subs = l_inv.polys();
    let comps: Vec<MultiPoly<Rational>> = p.polys().iter().map(|c| c.compose(&subs)).collect();
    let t3d = Monomial::var(3, 2, d);
    let c = comps[3].coeff(&t3d);
    if c.is_zero() || comps[3].num_terms() != 1 {
        return Err(Error::Internal(format!("{last} is not a power of {ell}")));
    }
    let inv = c.inv().unwrap();
    let comps = comps.iter().map(|q| q.scale(&inv)).collect();
    Ok((RationalMap::surface(comps)?, l))
}

/// Components with `t3 = 1`, in `t1, t2`.
pub fn affine_form(p: &RationalMap) -> Vec<MultiPoly<Rational>> {
    p.polys().iter().take(3).map(|c| c.dehomogenize(2)).collect()
}

fn point_picture(components: &[Form], family: &ConjugatePointFamily) -> Result<PointTransversality> {
    let multiplicity = family.multiplicity.ok_or_else(|| Error::Internal("multiplicity not computed".into()))?;
    let cones: Vec<TangentCone<AlgebraicNumber>> = components
        .iter()
        .map(|f| tangent_cone(&f.to_field::<AlgebraicNumber>(), &family.point))
        .collect::<Result<_>>()?;
    let m = cones.iter().map(|c| c.multiplicity).min().expect("components are nonempty");
    let minimal: Vec<TangentCone<AlgebraicNumber>> = cones.into_iter().filter(|c| c.multiplicity == m).collect();
    let tangent_gcd_trivial = is_trivial_gcd(&tangent_product_gcd(&minimal)?);
    Ok(PointTransversality {
        family: family.clone(),
        multiplicity,
        local_multiplicity: m,
        is_perfect_square: exact_sqrt(u64::from(multiplicity)).is_some(),
        tangent_gcd_trivial,
    })
}

/// Transversality report for an already computed base locus.
pub fn transversality_of(p: &SurfaceParam, base: BaseLocusReport) -> Result<TransversalityReport> {
    let per_point = base.families.iter().map(|fam| point_picture(p.components(), fam)).collect::<Result<Vec<_>>>()?;
    let verdict = if let Some(bad) = per_point.iter().find(|x| !x.is_perfect_square) {
        Verdict::NotTransversal(NotTransversalReason::NotPerfectSquare {
            point: bad.family.location(),
            multiplicity: bad.multiplicity,
        })
    } else if let Some(bad) = per_point.iter().find(|x| !x.tangent_gcd_trivial) {
        Verdict::NotTransversal(NotTransversalReason::SharedTangent { point: bad.family.location() })
    } else {
        Verdict::Transversal
    };
    Ok(TransversalityReport { base_locus: base, per_point, verdict })
}

/// Decide whether `P` is transversal.
pub fn transversality_test(p: &SurfaceParam, opts: &BaseLocusOptions) -> Result<TransversalityReport> {
    transversality_of(p, base_locus(p, opts)?)
}

/// `deg(P)^2` minus the multiplicity of the base locus.
pub fn surface_degree(p: &SurfaceParam, base: &BaseLocusReport) -> Result<u32> {
    let d = u64::from(p.degree());
    match (d * d).checked_sub(base.total_multiplicity) {
        Some(v) if v > 0 => Ok(v as u32),
        _ => Err(Error::InvalidInput(format!(
            "base locus multiplicity {} leaves no surface of positive degree; the input is not proper",
            base.total_multiplicity
        ))),
    }
}

fn almost_polynomial(p: &SurfaceParam) -> Result<Option<(SurfaceParam, PlanarMap)>> {
    match is_power_of_linear_form(p.component(3)) {
        Some(ell) => normalize_almost_polynomial(p, &ell).map(Some),
        None => Ok(None),
    }
}

/// Reparametrize `P` to a polynomial parametrization without base points,
/// when one exists and `P` is transversal. `P` is assumed proper.
pub fn polynomial_reparametrize(p: &SurfaceParam, opts: &BaseLocusOptions) -> Result<ReparamResult> {
    if p.len() != 4 {
        return Err(Error::InvalidInput(format!("a surface parametrization has 4 components, got {}", p.len())));
    }
    if let Some((parametrization, projectivity)) = almost_polynomial(p)? {
        let outcome = ReparamOutcome::AlreadyAlmostPolynomial { parametrization, projectivity };
        return Ok(ReparamResult { outcome, transversality: None });
    }
    let report = transversality_test(p, opts)?;
    let outcome = reparametrize_transversal(p, &report)?;
    Ok(ReparamResult { outcome, transversality: Some(report) })
}

fn reparametrize_transversal(p: &SurfaceParam, report: &TransversalityReport) -> Result<ReparamOutcome> {
    use NoPolynomialReason::*;
    let no = |r| Ok(ReparamOutcome::NoPolynomialParametrization(r));
    if let Verdict::NotTransversal(reason) = &report.verdict {
        return Ok(ReparamOutcome::NotApplicable(reason.clone()));
    }
    let surface_degree = surface_degree(p, &report.base_locus)?;
    let Some(root) = exact_sqrt(u64::from(surface_degree)) else {
        return no(SurfaceDegreeNotSquare { surface_degree });
    };
    let root = root as u32;
    if !p.degree().is_multiple_of(root) {
        return no(DegreeNotDivisible { map_degree: p.degree(), root });
    }
    let degree = p.degree() / root;
    let mut assignments = Vec::new();
    for fam in &report.base_locus.families {
        let m = fam.multiplicity.expect("computed");
        let required = (m % surface_degree == 0).then(|| exact_sqrt(u64::from(m / surface_degree))).flatten();
        match required {
            Some(r) if r > 0 => assignments.push((fam.clone(), r as u32)),
            _ => return no(MultiplicityNotSquare { point: fam.location(), multiplicity: m }),
        }
    }
    let system = build_linear_system(&DivisorSpec::new(degree, assignments)?)?;
    if system.projective_dimension() != Some(2) {
        return no(WrongDimension { dimension: system.projective_dimension() });
    }
    let s_bar = match RationalMap::planar(system.polys()) {
        Ok(s) => s,
        Err(Error::InvalidInput(_)) => return no(FixedComponent),
        Err(e) => return Err(e),
    };
    let r_bar = invert_planar(&s_bar)?.inverse;
    let q_raw = compose_planar(p, &r_bar)?;
    let Some((q, projectivity)) = almost_polynomial(&q_raw)? else {
        return no(NotLinearPower);
    };
    Ok(ReparamOutcome::Polynomial(Box::new(PolynomialReparam { q, q_raw, s_bar, r_bar, projectivity, surface_degree })))
}

/// Post-checks for a polynomial outcome: `q_raw(S) ∝ P`, `q(L(S)) ∝ P`, the
/// last component of `q` is `t3^deg`, `q` has no base points and
/// `deg q = deg P / deg S`.
pub fn verify_polynomial(p: &SurfaceParam, r: &PolynomialReparam) -> Result<()> {
    let fail = |what: &str| Err(Error::Internal(format!("verification failed: {what}")));
    if !proportional(&compose_planar(&r.q_raw, &r.s_bar)?.polys(), &p.polys()) {
        return fail("P(R) composed with S is not P");
    }
    let ls = compose_planar(&r.projectivity, &r.s_bar)?;
    if !proportional(&compose_planar(&r.q, &ls)?.polys(), &p.polys()) {
        return fail("the normalized parametrization does not reproduce P");
    }
    let d = r.q.degree();
    if r.q.component(3).poly() != &MultiPoly::monomial(&Vars::standard(), Monomial::var(3, 2, d), Rational::one()) {
        return fail("last component is not a power of t3");
    }
    if !compute_base_points(r.q.components(), crate::base_locus::DEFAULT_MAX_EXT_DEGREE)?.is_empty() {
        return fail("the result has base points");
    }
    if d * r.s_bar.degree() != p.degree() {
        return fail("degrees do not multiply");
    }
    Ok(())
}
