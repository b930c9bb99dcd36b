//! Helpers shared by the integration suites. Everything here is written
//! against the public API only, so it can serve as an independent oracle.

#![allow(dead_code)]

use num_traits::Zero;
use rand::Rng;

use polyrep::base_locus::base_point_multiplicity;
use polyrep::document::InputDocument;
use polyrep::linear_system::{rank, rref};
use polyrep::poly::{parse_poly, Monomial};
use polyrep::{
    AlgebraicNumber, BaseLocusReport, ConjugatePointFamily, MultiPoly, PlanarMap, ProjPoint2, Rational, RationalMap,
    Vars,
};

/// Reference basis of the linear system for the sextic with a conjugate pair
/// of base points.
pub const CONJUGATE_BASIS: [&str; 3] =
    ["-9*t1^2-9*t2^2+9*t1*t3+t2*t3", "-10*t1^2-10*t2^2+9*t1*t3+t3^2", "t1^2+t2^2-t3^2"];

/// Reference basis for the sextic with five rational base points.
pub const RATIONAL_BASIS: [&str; 3] = [
    "203971/12*t1^2*t3-1463501/84*t2^2*t3+3373732/105*t1*t2*t3+1859/4*t1^3+169/2*t2^3-169/2*t1^2*t2-438913/140*t1*t2^2",
    "37443/2*t1^2*t3-538707/28*t2^2*t3+140997/4*t1*t2*t3-507/4*t2^3-507*t1^2*t2-71637/28*t1*t2^2",
    "26747/2*t1^2*t3-384007/28*t2^2*t3-338*t1^2*t2-50441/28*t1*t2^2+100761/4*t1*t2*t3-507/4*t2^3",
];

pub fn fixture(name: &str) -> RationalMap {
    let path = format!("{}/../../fixtures/{name}", env!("CARGO_MANIFEST_DIR"));
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}"));
    InputDocument::from_toml(&text).and_then(|d| d.to_map()).unwrap_or_else(|e| panic!("{path}: {e}"))
}

pub fn map(texts: &[&str]) -> RationalMap {
    RationalMap::parse(texts).unwrap_or_else(|e| panic!("{texts:?}: {e}"))
}

pub fn poly(text: &str) -> MultiPoly<Rational> {
    parse_poly(text).unwrap_or_else(|e| panic!("{text}: {e}"))
}

pub fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Invertible `n x n` integer matrix with entries in `[-bound, bound]`.
pub fn random_invertible(rng: &mut impl Rng, n: usize, bound: i64) -> Vec<Vec<Rational>> {
    loop {
        let m: Vec<Vec<Rational>> =
            (0..n).map(|_| (0..n).map(|_| q(rng.gen_range(-bound..=bound))).collect()).collect();
        if rank(&m, n) == n {
            return m;
        }
    }
}

/// The planar map `t -> M t`.
pub fn linear_map(m: &[Vec<Rational>]) -> PlanarMap {
    let std = Vars::standard();
    let comps = m
        .iter()
        .map(|row| {
            MultiPoly::from_terms(
                &std,
                row.iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(j, c)| (Monomial::var(3, j, 1).exps().to_vec(), c.clone())),
            )
        })
        .collect();
    RationalMap::planar(comps).expect("invertible matrices give projectivities")
}

/// `M P`: mix the components of a map with a constant matrix.
pub fn mix_components(m: &[Vec<Rational>], p: &RationalMap) -> RationalMap {
    let polys = p.polys();
    let comps = m
        .iter()
        .map(|row| row.iter().zip(&polys).fold(MultiPoly::zero_in(&Vars::standard()), |acc, (c, f)| acc + &f.scale(c)))
        .collect();
    RationalMap::new(comps).expect("an invertible mix keeps the components coprime")
}

/// Image of a point under a planar map given by linear forms.
pub fn apply(l: &PlanarMap, a: &ProjPoint2<AlgebraicNumber>) -> ProjPoint2<AlgebraicNumber> {
    let v: Vec<AlgebraicNumber> = l.polys().iter().map(|f| a.eval(&f.to_field())).collect();
    ProjPoint2::new([v[0].clone(), v[1].clone(), v[2].clone()]).expect("projectivities move points to points")
}

/// Family sizes and multiplicities, sorted.
pub fn profile(r: &BaseLocusReport) -> Vec<(usize, u32)> {
    let mut v: Vec<(usize, u32)> = r.families.iter().map(|f| (f.family_size(), f.multiplicity.unwrap_or(0))).collect();
    v.sort();
    v
}

/// Every family of `moved`, carried to the original plane by `back`, is a
/// base point of `original` whose multiplicity, recomputed there, agrees.
/// Together with equal profiles this identifies the two base loci.
pub fn check_transported(
    original: &RationalMap,
    original_report: &BaseLocusReport,
    moved: &BaseLocusReport,
    back: Option<&PlanarMap>,
    seed: u64,
) -> Result<(), String> {
    if profile(original_report) != profile(moved) {
        return Err(format!("profiles differ: {:?} vs {:?}", profile(original_report), profile(moved)));
    }
    for fam in &moved.families {
        let point = match back {
            Some(l) => apply(l, &fam.point),
            None => fam.point.clone(),
        };
        let carried = ConjugatePointFamily { field: fam.field.clone(), point, multiplicity: None };
        if !carried.lies_on(&original.polys()) {
            return Err(format!("{fam} does not go to a base point"));
        }
        let m = base_point_multiplicity(original.components(), &carried, seed).map_err(|e| e.to_string())?;
        if Some(m) != fam.multiplicity {
            return Err(format!("{fam} goes to a point of multiplicity {m}"));
        }
    }
    Ok(())
}

fn coefficient_rows(polys: &[&MultiPoly<Rational>]) -> Vec<Vec<Rational>> {
    let mut monomials: Vec<Monomial> = polys.iter().flat_map(|p| p.terms().map(|(m, _)| m.clone())).collect();
    monomials.sort();
    monomials.dedup();
    monomials.iter().map(|m| polys.iter().map(|p| p.coeff(m)).collect()).collect()
}

/// Dimension of the rational span of some polynomials.
pub fn span_dimension(polys: &[MultiPoly<Rational>]) -> usize {
    let refs: Vec<&MultiPoly<Rational>> = polys.iter().collect();
    rank(&coefficient_rows(&refs), polys.len())
}

/// `c` with `target = sum c_i basis_i`, for linearly independent `basis`.
pub fn coordinates(target: &MultiPoly<Rational>, basis: &[MultiPoly<Rational>]) -> Option<Vec<Rational>> {
    let mut refs: Vec<&MultiPoly<Rational>> = basis.iter().collect();
    refs.push(target);
    let k = basis.len();
    let mut rows = coefficient_rows(&refs);
    let pivots = rref(&mut rows, k + 1);
    if pivots.contains(&k) {
        return None;
    }
    let mut c = vec![Rational::zero(); k];
    for (row, &p) in rows.iter().zip(&pivots) {
        c[p] = row[k].clone();
    }
    Some(c)
}

/// The constant matrix `M` with `target = M source`, if any.
pub fn change_of_basis(target: &RationalMap, source: &RationalMap) -> Option<Vec<Vec<Rational>>> {
    let basis = source.polys();
    target.polys().iter().map(|t| coordinates(t, &basis)).collect()
}
