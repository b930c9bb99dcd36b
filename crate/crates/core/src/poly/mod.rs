//! Exact polynomial arithmetic.

mod form;
pub mod gcd;
mod monomial;
mod multivariate;
pub mod parse;
pub mod resultant;
mod univariate;

pub use form::{homogenize, Form};
pub use gcd::{are_coprime, gcd_many, gcd_poly, GcdDomain};
pub use monomial::Monomial;
pub use multivariate::{arith, ArithOp, MultiPoly, Vars};
pub use parse::{parse_poly, parse_poly_in};
pub use resultant::{field_resultant, resultant, resultant_in};
pub use univariate::UniPoly;
