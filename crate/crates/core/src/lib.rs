//! Exact computer algebra for rational surface parametrizations: base
//! loci with multiplicities, a transversality test, and reparametrization
//! into polynomial form.

pub mod base_locus;
pub mod birational;
pub mod curve;
pub mod document;
pub mod error;
pub mod factor;
pub mod linear_system;
pub mod map;
pub mod number_field;
pub mod poly;
pub mod reparam;
pub mod report;
pub mod ring;
pub mod rng;

pub use base_locus::{base_locus, BaseLocusOptions, BaseLocusReport, ConjugatePointFamily};
pub use curve::ProjPoint2;
pub use error::{Error, Result};
pub use map::{PlanarMap, RationalMap, SurfaceParam};
pub use number_field::{AlgebraicNumber, NumberField};
pub use poly::{Form, MultiPoly, UniPoly, Vars};
pub use ring::{Field, Rational, Ring};
