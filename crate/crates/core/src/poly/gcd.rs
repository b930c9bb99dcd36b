//! Multivariate greatest common divisors.
//!
//! The general algorithm is the recursive primitive remainder sequence over
//! a gcd domain: integers for rational input (after clearing
//! denominators), the coefficient field itself otherwise. A cheap
//! specialization test certifies the common coprime case first.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::multivariate::MultiPoly;
use super::univariate::UniPoly;
use crate::ring::{Field, Rational, Ring};

/// A ring with computable gcds of elements.
pub trait GcdDomain: Ring {
    fn gcd_elem(&self, other: &Self) -> Self;

    /// Unit normalization of a gcd: positive for integers, no-op for fields.
    fn normalize_unit(self) -> Self {
        self
    }

    /// Whether `self` is a unit of the ring.
    fn is_unit(&self) -> bool;
}

impl GcdDomain for BigInt {
    fn gcd_elem(&self, other: &Self) -> Self {
        self.gcd(other)
    }

    fn normalize_unit(self) -> Self {
        self.abs()
    }

    fn is_unit(&self) -> bool {
        self.abs().is_one()
    }
}

macro_rules! field_gcd_domain {
    ($t:ty) => {
        impl GcdDomain for $t {
            fn gcd_elem(&self, other: &Self) -> Self {
                if self.is_zero() && other.is_zero() {
                    Self::zero()
                } else {
                    Self::one()
                }
            }

            fn is_unit(&self) -> bool {
                !self.is_zero()
            }
        }
    };
}

field_gcd_domain!(Rational);
field_gcd_domain!(crate::number_field::AlgebraicNumber);

/// Highest variable index occurring in either polynomial.
fn main_var<D: Ring>(a: &MultiPoly<D>, b: &MultiPoly<D>) -> Option<usize> {
    let n = a.nvars().max(b.nvars());
    (0..n).rev().find(|&i| (a.nvars() > i && a.involves(i)) || (b.nvars() > i && b.involves(i)))
}

fn content_of<D: GcdDomain>(u: &UniPoly<MultiPoly<D>>) -> MultiPoly<D> {
    let mut c = MultiPoly::zero();
    for coeff in u.coeffs() {
        c = recursive_gcd(&c, coeff);
        if c.is_constant() && c.constant_term().is_unit() {
            break;
        }
    }
    c
}

fn normalize<D: GcdDomain>(p: MultiPoly<D>) -> MultiPoly<D> {
    match p.leading_coeff() {
        Some(c) if !c.clone().normalize_unit().eq(c) => -p,
        _ => p,
    }
}

/// Recursive primitive-PRS gcd over a gcd domain. The result is normalized
/// to a positive leading coefficient for integers and left unscaled for
/// fields.
pub fn recursive_gcd<D: GcdDomain>(a: &MultiPoly<D>, b: &MultiPoly<D>) -> MultiPoly<D> {
    if a.is_zero() {
        return normalize(b.clone());
    }
    if b.is_zero() {
        return normalize(a.clone());
    }
    let Some(v) = main_var(a, b) else {
        let g = a.constant_term().gcd_elem(&b.constant_term()).normalize_unit();
        let vars = a.vars().or(b.vars());
        return match vars {
            Some(vs) => MultiPoly::constant(vs, g),
            None => MultiPoly::one().scale(&g),
        };
    };
    let vars = a.vars().or(b.vars()).cloned().expect("a variable occurs");
    let (a, b) = (a.in_vars(&vars).unwrap(), b.in_vars(&vars).unwrap());
    let (ua, ub) = (a.to_uni(v), b.to_uni(v));
    if ua.degree() == Some(0) {
        return recursive_gcd(&a, &content_of(&ub));
    }
    if ub.degree() == Some(0) {
        return recursive_gcd(&content_of(&ua), &b);
    }
    let ca = content_of(&ua);
    let cb = content_of(&ub);
    let c = recursive_gcd(&ca, &cb);
    let mut pa = ua.map(|x| x.div_exact(&ca).expect("content divides"));
    let mut pb = ub.map(|x| x.div_exact(&cb).expect("content divides"));
    if pa.degree() < pb.degree() {
        std::mem::swap(&mut pa, &mut pb);
    }
    loop {
        let r = pa.pseudo_rem(&pb);
        if r.is_zero() {
            break;
        }
        if r.degree() == Some(0) {
            return normalize(c.in_vars(&vars).unwrap());
        }
        let cr = content_of(&r);
        pa = pb;
        pb = r.map(|x| x.div_exact(&cr).expect("content divides"));
    }
    let cg = content_of(&pb);
    let g = pb.map(|x| x.div_exact(&cg).expect("content divides"));
    let g = MultiPoly::from_uni(&vars, v, &g);
    normalize(g * &c)
}

/// Certify `deg gcd(a, b) = 0` by specializing all variables but one at a
/// time. `None` means the test was inconclusive.
fn coprime_by_specialization<F: Field>(polys: &[&MultiPoly<F>]) -> Option<bool> {
    let nv = polys.iter().map(|p| p.nvars()).max().unwrap_or(0);
    const TRIES: [[i64; 4]; 3] = [[3, -5, 7, 2], [-11, 13, 4, -6], [17, 19, -23, 29]];
    for v in 0..nv {
        if !polys.iter().any(|p| p.nvars() > v && p.involves(v)) {
            continue;
        }
        let mut certified = false;
        for pt in TRIES {
            let vals: Vec<F> = (0..nv).map(|i| F::from_i64(pt[i % 4] + i as i64)).collect();
            let mut lc_survives = false;
            let mut g = UniPoly::<F>::zero();
            for p in polys {
                if p.nvars() <= v {
                    g = g.gcd(&UniPoly::constant(p.constant_term()));
                    continue;
                }
                let u = p.to_uni(v);
                let spec = u.map(|c| c.eval(&vals));
                if !u.is_zero() && spec.degree() == u.degree() && u.degree() > Some(0) {
                    lc_survives = true;
                }
                g = g.gcd(&spec);
            }
            if lc_survives && g.degree() == Some(0) {
                certified = true;
                break;
            }
        }
        if !certified {
            return None;
        }
    }
    Some(true)
}

/// Monic gcd over a field; `gcd(a, 0) = monic(a)`.
pub fn gcd_poly<F: Field + GcdDomain>(a: &MultiPoly<F>, b: &MultiPoly<F>) -> MultiPoly<F> {
    gcd_many(&[a.clone(), b.clone()])
}

/// Monic gcd of a list of polynomials over a field.
pub fn gcd_many<F: Field + GcdDomain>(polys: &[MultiPoly<F>]) -> MultiPoly<F> {
    let nonzero: Vec<&MultiPoly<F>> = polys.iter().filter(|p| !p.is_zero()).collect();
    let vars = polys.iter().find_map(|p| p.vars().cloned());
    let one = || match &vars {
        Some(v) => MultiPoly::constant(v, F::one()),
        None => MultiPoly::one(),
    };
    match nonzero.len() {
        0 => return polys.first().cloned().unwrap_or_else(MultiPoly::zero),
        1 => return nonzero[0].monic(),
        _ => {}
    }
    if nonzero.iter().any(|p| p.is_constant()) {
        return one();
    }
    if coprime_by_specialization(&nonzero) == Some(true) {
        return one();
    }
    let mut g = nonzero[0].clone();
    for p in &nonzero[1..] {
        g = field_gcd(&g, p);
        if g.is_constant() {
            return one();
        }
    }
    g.monic()
}

/// gcd over a field, routed through the integers for rational input.
fn field_gcd<F: Field + GcdDomain>(a: &MultiPoly<F>, b: &MultiPoly<F>) -> MultiPoly<F> {
    if let (Some(qa), Some(qb)) = (as_rational(a), as_rational(b)) {
        let (_, ia) = qa.to_primitive_integer();
        let (_, ib) = qb.to_primitive_integer();
        let g = recursive_gcd(&ia, &ib);
        let g = MultiPoly::from_integer(&g);
        return g.map_coeffs(F::from_rational);
    }
    recursive_gcd(&a.rational_primitive(), &b.rational_primitive())
}

fn as_rational<F: Field>(p: &MultiPoly<F>) -> Option<MultiPoly<Rational>> {
    let any: &dyn std::any::Any = p;
    any.downcast_ref::<MultiPoly<Rational>>().cloned()
}

/// Whether the polynomials share no nonconstant factor.
pub fn are_coprime<F: Field + GcdDomain>(polys: &[MultiPoly<F>]) -> bool {
    gcd_many(polys).is_constant()
}
