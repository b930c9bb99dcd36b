//! Local geometry of plane curves: points of the projective plane,
//! localization, multiplicities, tangent cones and intersection numbers.
//!
//! A point `A` is localized in the chart where its last nonzero coordinate
//! is one. The two remaining coordinates, in increasing index order and
//! translated by `A`, become the local variables `u1, u2`.

mod fulton;
mod projection;

use std::fmt;

use crate::error::{Error, Result};
use crate::poly::{Form, MultiPoly, UniPoly, Vars};
use crate::ring::Field;

pub use fulton::{intersection_multiplicity_local, intersection_multiplicity_truncated};
pub use projection::{intersection_multiplicity_projected, projected_order};

/// A point of the projective plane, normalized so its last nonzero
/// coordinate is one.
#[derive(Clone, PartialEq)]
pub struct ProjPoint2<F> {
    coords: [F; 3],
}

impl<F: Field> ProjPoint2<F> {
    pub fn new(coords: [F; 3]) -> Result<Self> {
        let Some(k) = (0..3).rev().find(|&i| !coords[i].is_zero()) else {
            return Err(Error::Degenerate("(0:0:0) is not a projective point".into()));
        };
        let inv = coords[k].inv().expect("nonzero coordinate");
        let mut coords = coords.map(|c| c * &inv);
        coords[k] = F::one();
        Ok(ProjPoint2 { coords })
    }

    pub fn coords(&self) -> &[F; 3] {
        &self.coords
    }

    /// Index of the coordinate normalized to one.
    pub fn chart(&self) -> usize {
        (0..3).rev().find(|&i| !self.coords[i].is_zero()).unwrap()
    }

    /// The two coordinates that become local variables, in order.
    pub fn local_indices(&self) -> [usize; 2] {
        match self.chart() {
            0 => [1, 2],
            1 => [0, 2],
            _ => [0, 1],
        }
    }

    /// Value of a polynomial in the standard variables at this
    /// representative.
    pub fn eval(&self, f: &MultiPoly<F>) -> F {
        f.eval(&self.coords)
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> ProjPoint2<G> {
        ProjPoint2::new([f(&self.coords[0]), f(&self.coords[1]), f(&self.coords[2])]).expect("nonzero image")
    }
}

impl<F: Field> fmt::Display for ProjPoint2<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}:{}:{})", self.coords[0], self.coords[1], self.coords[2])
    }
}

impl<F: Field> fmt::Debug for ProjPoint2<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Move `A` to the origin of its chart. The result lives in `u1, u2`.
pub fn localize<F: Field>(f: &MultiPoly<F>, a: &ProjPoint2<F>) -> MultiPoly<F> {
    let local = Vars::local();
    let k = a.chart();
    let [i, j] = a.local_indices();
    let mut subs = vec![MultiPoly::zero_in(&local); 3];
    subs[k] = MultiPoly::constant(&local, F::one());
    subs[i] = MultiPoly::var(&local, 0) + &MultiPoly::constant(&local, a.coords[i].clone());
    subs[j] = MultiPoly::var(&local, 1) + &MultiPoly::constant(&local, a.coords[j].clone());
    f.compose(&subs)
}

/// Multiplicity of the curve `f = 0` at `A`; zero when `A` is off the curve.
pub fn point_multiplicity<F: Field>(f: &Form<F>, a: &ProjPoint2<F>) -> u32 {
    localize(f, a).min_degree().expect("forms are nonzero")
}

/// Lowest-degree part of a curve at a point, in the local variables.
#[derive(Clone)]
pub struct TangentCone<F> {
    pub point: ProjPoint2<F>,
    pub cone: Form<F>,
    pub multiplicity: u32,
}

impl<F: Field> PartialEq for TangentCone<F> {
    fn eq(&self, other: &Self) -> bool {
        self.point == other.point && self.cone == other.cone
    }
}

impl<F: Field> fmt::Debug for TangentCone<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TangentCone({} at {}, mult {})", self.cone, self.point, self.multiplicity)
    }
}

pub fn tangent_cone<F: Field>(f: &Form<F>, a: &ProjPoint2<F>) -> Result<TangentCone<F>> {
    let local = localize(f, a);
    let m = local.min_degree().expect("forms are nonzero");
    if m == 0 {
        return Err(Error::NotOnCurve);
    }
    let cone = Form::new(local.homogeneous_component(m))?;
    Ok(TangentCone { point: a.clone(), cone, multiplicity: m })
}

/// gcd of the tangent cones at one point. A constant result means no
/// tangent is shared by all the curves.
pub fn tangent_product_gcd<F: Field>(cones: &[TangentCone<F>]) -> Result<Form<F>> {
    let Some(first) = cones.first() else {
        return Err(Error::Empty("no tangent cones given".into()));
    };
    if cones.iter().any(|c| c.point != first.point) {
        return Err(Error::InvalidInput("tangent cones at different points".into()));
    }
    Ok(binary_form_gcd(cones.iter().map(|c| &c.cone)))
}

/// gcd of nonzero binary forms in `u1, u2`, monic in the graded-lex order.
///
/// Each form splits as `u1^k * f'` with `f'(1, u2)` of degree `deg f - k`,
/// so the gcd is `u1^(min k)` times the homogenized univariate gcd.
pub fn binary_form_gcd<'a, F: Field>(forms: impl IntoIterator<Item = &'a Form<F>>) -> Form<F> {
    let local = Vars::local();
    let mut min_k = u32::MAX;
    let mut g: Option<UniPoly<F>> = None;
    for f in forms {
        let k = f.terms().map(|(m, _)| m.exp(0)).min().unwrap();
        min_k = min_k.min(k);
        let mut coeffs = vec![F::zero(); (f.degree() - k) as usize + 1];
        for (m, c) in f.terms() {
            coeffs[m.exp(1) as usize] = c.clone();
        }
        let u = UniPoly::new(coeffs);
        g = Some(match g {
            None => u.monic(),
            Some(h) => h.gcd(&u),
        });
    }
    let g = g.expect("at least one form");
    let e = g.degree().unwrap() as u32;
    let mut out = MultiPoly::zero_in(&local);
    for (i, c) in g.coeffs().iter().enumerate() {
        let i = i as u32;
        out.add_term(crate::poly::Monomial::new(&[min_k + e - i, i]), c.clone());
    }
    Form::new(out.monic()).expect("gcd of forms is a form")
}

/// Intersection number of `f = 0` and `g = 0` at `A`.
///
/// Fails with [`Error::InfiniteMultiplicity`] when the curves share a
/// component through `A`.
pub fn intersection_multiplicity<F: Field>(f: &Form<F>, g: &Form<F>, a: &ProjPoint2<F>) -> Result<u32> {
    let (lf, lg) = (localize(f, a), localize(g, a));
    intersection_multiplicity_local(&lf, &lg)
}

/// Whether every cone is a nonzero constant multiple of `u1^0`, i.e. the
/// gcd is one.
pub fn is_trivial_gcd<F: Field>(g: &Form<F>) -> bool {
    g.degree() == 0 && g.leading_coeff().is_some_and(|c| c.is_one())
}
