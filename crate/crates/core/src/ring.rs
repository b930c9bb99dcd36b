//! Coefficient rings.
//!
//! Polynomials in this crate are generic over a [`Ring`]; the exact fields
//! used in practice are [`Rational`] and
//! [`AlgebraicNumber`](crate::number_field::AlgebraicNumber). Integer
//! coefficients ([`BigInt`]) are used internally to keep resultant and gcd
//! computations fraction-free.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Arbitrary-precision rational number, always kept in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

/// A commutative ring with exact arithmetic.
///
/// Operations take the left operand by value and the right one by reference,
/// which is the cheapest form for big-number types.
pub trait Ring:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + Zero
    + One
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + Neg<Output = Self>
    + 'static
{
    /// Exact quotient `self / rhs`, or `None` when `rhs` does not divide `self`.
    fn exact_div(&self, rhs: &Self) -> Option<Self>;

    fn from_i64(n: i64) -> Self;

    /// Integer power by repeated squaring.
    fn pow_u32(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * &base;
            }
        }
        acc
    }
}

/// A field of characteristic zero containing the rationals.
pub trait Field: Ring {
    fn inv(&self) -> Option<Self>;

    fn from_rational(q: &Rational) -> Self;

    /// Coordinates of the element over the rationals. Used to scale
    /// polynomials by rational constants without changing their zero set.
    fn rational_coords(&self) -> Vec<Rational>;

    fn div(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|r| self.clone() * &r)
    }
}

impl Ring for BigInt {
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(rhs);
        r.is_zero().then_some(q)
    }

    fn from_i64(n: i64) -> Self {
        BigInt::from(n)
    }
}

impl Ring for Rational {
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        (!rhs.is_zero()).then(|| self / rhs)
    }

    fn from_i64(n: i64) -> Self {
        Rational::from_integer(BigInt::from(n))
    }
}

impl Field for Rational {
    fn inv(&self) -> Option<Self> {
        (!self.is_zero()).then(|| self.recip())
    }

    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }

    fn rational_coords(&self) -> Vec<Rational> {
        vec![self.clone()]
    }
}

/// Shorthand for the rational `n / d`.
///
/// # Panics
/// If `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// The positive rational `c` such that `values / c` are coprime integers.
/// Returns one when every value is zero.
pub fn rational_content<'a>(values: impl IntoIterator<Item = &'a Rational>) -> Rational {
    let mut num = BigInt::zero();
    let mut den = BigInt::one();
    for v in values {
        if v.is_zero() {
            continue;
        }
        num = num.gcd(v.numer());
        den = den.lcm(v.denom());
    }
    if num.is_zero() {
        Rational::one()
    } else {
        Rational::new(num, den)
    }
}

/// Integer square root when `n` is a perfect square.
pub fn exact_sqrt(n: u64) -> Option<u64> {
    let r = (n as f64).sqrt() as u64;
    (r.saturating_sub(1)..=r + 1).find(|c| c * c == n)
}
