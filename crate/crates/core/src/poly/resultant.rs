//! Resultants.
//!
//! The production path is the subresultant remainder sequence, which keeps
//! intermediate coefficients at the size of subresultant determinants. The
//! Sylvester determinant (fraction-free Bareiss elimination) is kept for
//! small operands and as an independent oracle.

use std::any::Any;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::multivariate::MultiPoly;
use super::univariate::UniPoly;
use crate::error::{Error, Result};
use crate::ring::{Field, Rational, Ring};

/// Operand degree at or below which the Sylvester determinant is used.
const SYLVESTER_MAX_DEGREE: usize = 4;

/// Resultant of two univariate polynomials over an integral domain,
/// computed with the subresultant remainder sequence.
///
/// Follows the determinant convention with leading coefficients first, so
/// `Res(a, c) = c^deg(a)` for a constant `c`. Zero when either input is zero.
pub fn subresultant<R: Ring>(a: &UniPoly<R>, b: &UniPoly<R>) -> R {
    let (Some(mut da), Some(mut db)) = (a.degree(), b.degree()) else {
        return R::zero();
    };
    let (mut a, mut b) = (a.clone(), b.clone());
    let mut negate = false;
    if da < db {
        std::mem::swap(&mut a, &mut b);
        std::mem::swap(&mut da, &mut db);
        negate = da % 2 == 1 && db % 2 == 1;
    }
    if db == 0 {
        let r = b.lc().unwrap().pow_u32(da as u32);
        return if negate { -r } else { r };
    }
    let mut g = R::one();
    let mut h = R::one();
    loop {
        let (da, db) = (a.degree().unwrap(), b.degree().unwrap());
        let delta = (da - db) as u32;
        if da % 2 == 1 && db % 2 == 1 {
            negate = !negate;
        }
        let r = a.pseudo_rem(&b);
        a = b;
        if r.is_zero() {
            return R::zero();
        }
        let divisor = g.clone() * &h.pow_u32(delta);
        b = r.exact_div_scalar(&divisor).expect("subresultant division is exact");
        g = a.lc().unwrap().clone();
        h = match delta {
            0 => h,
            1 => g.clone(),
            _ => g.pow_u32(delta).exact_div(&h.pow_u32(delta - 1)).expect("exact h update"),
        };
        if b.degree() == Some(0) {
            break;
        }
    }
    let da = a.degree().unwrap() as u32;
    let lb = b.lc().unwrap().pow_u32(da);
    let r = if da == 1 { lb } else { lb.exact_div(&h.pow_u32(da - 1)).expect("exact final step") };
    if negate {
        -r
    } else {
        r
    }
}

/// Determinant of the Sylvester matrix, by fraction-free elimination.
pub fn sylvester_resultant<R: Ring>(a: &UniPoly<R>, b: &UniPoly<R>) -> R {
    let (Some(m), Some(n)) = (a.degree(), b.degree()) else {
        return R::zero();
    };
    let size = m + n;
    if size == 0 {
        return R::one();
    }
    let mut mat = vec![vec![R::zero(); size]; size];
    for row in 0..n {
        for (k, c) in a.coeffs().iter().rev().enumerate() {
            mat[row][row + k] = c.clone();
        }
    }
    for row in 0..m {
        for (k, c) in b.coeffs().iter().rev().enumerate() {
            mat[n + row][row + k] = c.clone();
        }
    }
    bareiss_determinant(mat)
}

/// Fraction-free Gaussian elimination determinant over an integral domain.
pub fn bareiss_determinant<R: Ring>(mut mat: Vec<Vec<R>>) -> R {
    let n = mat.len();
    let mut sign_flip = false;
    let mut prev = R::one();
    for k in 0..n {
        if mat[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !mat[i][k].is_zero()) else {
                return R::zero();
            };
            mat.swap(k, p);
            sign_flip = !sign_flip;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = mat[k][k].clone() * &mat[i][j] - &(mat[i][k].clone() * &mat[k][j]);
                mat[i][j] = v.exact_div(&prev).expect("Bareiss division is exact");
            }
            mat[i][k] = R::zero();
        }
        prev = mat[k][k].clone();
    }
    let det = mat[n - 1][n - 1].clone();
    if sign_flip {
        -det
    } else {
        det
    }
}

/// Resultant eliminating variable `var`, over any integral domain.
pub fn resultant_in<R: Ring>(a: &MultiPoly<R>, b: &MultiPoly<R>, var: usize) -> Result<MultiPoly<R>> {
    a.check_compatible(b)?;
    if a.is_zero() || b.is_zero() {
        return Err(Error::Degenerate("resultant of a zero polynomial".into()));
    }
    let (ua, ub) = (a.to_uni(var), b.to_uni(var));
    let (da, db) = (ua.degree().unwrap(), ub.degree().unwrap());
    if da == 0 && db == 0 {
        return Err(Error::Degenerate("both operands have degree 0 in the eliminated variable".into()));
    }
    let r = if da.max(db) <= SYLVESTER_MAX_DEGREE { sylvester_resultant(&ua, &ub) } else { subresultant(&ua, &ub) };
    let vars = a.vars().or(b.vars()).cloned();
    Ok(match vars {
        Some(v) => r.in_vars(&v)?,
        None => r,
    })
}

/// Resultant of rational polynomials eliminating variable `var`.
///
/// Denominators and contents are cleared first so the elimination runs over
/// the integers.
pub fn resultant(a: &MultiPoly<Rational>, b: &MultiPoly<Rational>, var: usize) -> Result<MultiPoly<Rational>> {
    a.check_compatible(b)?;
    if a.is_zero() || b.is_zero() {
        return Err(Error::Degenerate("resultant of a zero polynomial".into()));
    }
    let (sa, ia) = a.to_primitive_integer();
    let (sb, ib) = b.to_primitive_integer();
    let r: MultiPoly<BigInt> = resultant_in(&ia, &ib, var)?;
    let (da, db) = (a.degree_in(var), b.degree_in(var));
    let scale = sa.pow_u32(db) * &sb.pow_u32(da);
    let out = MultiPoly::from_integer(&r);
    Ok(if scale.is_one() { out } else { out.scale(&scale) })
}

/// Resultant over a field, taking the integer path for rational inputs.
pub fn field_resultant<F: Field>(a: &MultiPoly<F>, b: &MultiPoly<F>, var: usize) -> Result<MultiPoly<F>> {
    let any_a: &dyn Any = a;
    let any_b: &dyn Any = b;
    if let (Some(ra), Some(rb)) =
        (any_a.downcast_ref::<MultiPoly<Rational>>(), any_b.downcast_ref::<MultiPoly<Rational>>())
    {
        let r = resultant(ra, rb, var)?;
        let boxed: Box<dyn Any> = Box::new(r);
        return Ok(*boxed.downcast::<MultiPoly<F>>().expect("same type"));
    }
    resultant_in(a, b, var)
}
