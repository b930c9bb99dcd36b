//! Linear systems of plane curves of one degree with prescribed
//! multiplicities at base points.
//!
//! A form `f = sum c_k mu_k` over the degree-`d` monomials has multiplicity at
//! least `m` at `A` exactly when the local expansion of `f` at `A` has no
//! terms of degree below `m`. Each such coefficient is linear in the `c_k`.
//! At a point over `Q(a)` the condition is split into one rational equation
//! per power of `a`, so the solution space is computed over `Q` alone.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::base_locus::ConjugatePointFamily;
use crate::curve::{localize, point_multiplicity};
use crate::error::{Error, Result};
use crate::number_field::AlgebraicNumber;
use crate::poly::{Form, Monomial, MultiPoly, Vars};
use crate::ring::{Field, Rational};

/// Degree `d` together with the multiplicity required at each family.
#[derive(Clone, Debug)]
pub struct DivisorSpec {
    pub degree: u32,
    pub assignments: Vec<(ConjugatePointFamily, u32)>,
}

impl DivisorSpec {
    pub fn new(degree: u32, assignments: Vec<(ConjugatePointFamily, u32)>) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidInput("linear systems need degree at least 1".into()));
        }
        if assignments.iter().any(|(_, m)| *m == 0) {
            return Err(Error::InvalidInput("required multiplicities must be positive".into()));
        }
        Ok(DivisorSpec { degree, assignments })
    }
}

/// A canonical basis of a linear system: the reduced echelon form of the
/// solution space with every row scaled to a primitive integer vector.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearSystemBasis {
    pub basis: Vec<Form>,
}

impl LinearSystemBasis {
    /// `None` for the empty system, which contains only the zero form.
    pub fn projective_dimension(&self) -> Option<usize> {
        self.basis.len().checked_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn polys(&self) -> Vec<MultiPoly<Rational>> {
        self.basis.iter().map(|f| f.poly().clone()).collect()
    }
}

/// Degree-`d` monomials in `t1, t2, t3`, largest first in graded-lex order.
pub fn monomial_basis(d: u32) -> Vec<Monomial> {
    let mut out: Vec<Monomial> =
        (0..=d).flat_map(|a| (0..=d - a).map(move |b| Monomial::new(&[a, b, d - a - b]))).collect();
    out.sort_by(|x, y| y.cmp(x));
    out
}

fn family_rows(family: &ConjugatePointFamily, m: u32, monomials: &[Monomial]) -> Vec<Vec<Rational>> {
    let std = Vars::standard();
    let k = family.field.degree();
    let locals: Vec<MultiPoly<AlgebraicNumber>> = monomials
        .iter()
        .map(|mu| localize(&MultiPoly::monomial(&std, mu.clone(), AlgebraicNumber::one()), &family.point))
        .collect();
    let mut rows = Vec::new();
    for total in 0..m {
        for i in 0..=total {
            let target = Monomial::new(&[total - i, i]);
            let column: Vec<Vec<Rational>> = locals
                .iter()
                .map(|l| {
                    let mut c = l.coeff(&target).rational_coords();
                    c.resize(k, Rational::zero());
                    c
                })
                .collect();
            for j in 0..k {
                rows.push(column.iter().map(|c| c[j].clone()).collect());
            }
        }
    }
    rows
}

/// All rational linear conditions on the coefficients of a degree-`d` form,
/// one column per entry of [`monomial_basis`].
pub fn constraint_rows(spec: &DivisorSpec) -> Vec<Vec<Rational>> {
    let monomials = monomial_basis(spec.degree);
    spec.assignments.par_iter().flat_map_iter(|(fam, m)| family_rows(fam, *m, &monomials)).collect()
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(rows: &mut Vec<Vec<Rational>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x = &*x - &(&f * y);
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

/// Rank of a rational matrix with `ncols` columns.
pub fn rank(rows: &[Vec<Rational>], ncols: usize) -> usize {
    rref(&mut rows.to_vec(), ncols).len()
}

fn primitive_integer_row(row: &[Rational]) -> Vec<Rational> {
    let lcm = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = row.iter().map(|x| (x * Rational::from_integer(lcm.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    let sign = ints.iter().find(|x| !x.is_zero()).map_or(BigInt::one(), |x| x.signum());
    let g = g * sign;
    ints.into_iter().map(|x| Rational::from_integer(x / &g)).collect()
}

/// Basis of the degree-`d` forms with the prescribed multiplicities.
pub fn build_linear_system(spec: &DivisorSpec) -> Result<LinearSystemBasis> {
    if spec.degree == 0 {
        return Err(Error::InvalidInput("linear systems need degree at least 1".into()));
    }
    let monomials = monomial_basis(spec.degree);
    let n = monomials.len();
    let mut rows = constraint_rows(spec);
    let pivots = rref(&mut rows, n);
    let mut null: Vec<Vec<Rational>> = (0..n)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![Rational::zero(); n];
            v[free] = Rational::one();
            for (row, &p) in rows.iter().zip(&pivots) {
                v[p] = -row[free].clone();
            }
            v
        })
        .collect();
    rref(&mut null, n);
    let std = Vars::standard();
    let basis = null
        .iter()
        .map(|row| {
            let row = primitive_integer_row(row);
            let poly = MultiPoly::from_terms(
                &std,
                monomials.iter().zip(row).filter(|(_, c)| !c.is_zero()).map(|(m, c)| (m.exps().to_vec(), c)),
            );
            Form::new(poly)
        })
        .collect::<Result<_>>()?;
    Ok(LinearSystemBasis { basis })
}

/// Whether `f` has at least the required multiplicity at every family.
pub fn membership_check(f: &Form, spec: &DivisorSpec) -> Result<bool> {
    if f.degree() != spec.degree {
        return Err(Error::DegreeMismatch { expected: spec.degree, found: f.degree() });
    }
    let g: Form<AlgebraicNumber> = f.to_field();
    Ok(spec.assignments.iter().all(|(fam, m)| point_multiplicity(&g, &fam.point) >= *m))
}
