//! Randomized properties of polynomial arithmetic, gcds and resultants.

mod common;

use num_traits::Zero;
use proptest::prelude::*;

use common::{poly, q};
use polyrep::poly::resultant::{subresultant, sylvester_resultant};
use polyrep::poly::{gcd_poly, homogenize, parse_poly, resultant, Monomial};
use polyrep::{Form, MultiPoly, Rational, UniPoly, Vars};

fn build(terms: &[([u32; 3], i64)]) -> MultiPoly<Rational> {
    MultiPoly::from_terms(&Vars::standard(), terms.iter().map(|(e, c)| (*e, q(*c))))
}

fn small_poly() -> impl Strategy<Value = MultiPoly<Rational>> {
    prop::collection::vec(([0u32..3, 0u32..3, 0u32..3], -5i64..=5), 0..5).prop_map(|t| build(&t))
}

fn nonconstant_poly() -> impl Strategy<Value = MultiPoly<Rational>> {
    small_poly().prop_filter("nonconstant", |p| !p.is_constant())
}

/// A form of the given degree, with at least one nonzero coefficient.
fn form(d: u32) -> impl Strategy<Value = MultiPoly<Rational>> {
    let monomials: Vec<[u32; 3]> = (0..=d).flat_map(|a| (0..=d - a).map(move |b| [a, b, d - a - b])).collect();
    prop::collection::vec(-4i64..=4, monomials.len()).prop_filter_map("zero form", move |cs| {
        let p = build(&monomials.iter().copied().zip(cs).collect::<Vec<_>>());
        (!p.is_zero()).then_some(p)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in small_poly(), b in small_poly(), c in small_poly()) {
        prop_assert_eq!(a.clone() + &b, b.clone() + &a);
        prop_assert_eq!(a.clone() * &b, b.clone() * &a);
        prop_assert_eq!((a.clone() + &b) + &c, a.clone() + &(b.clone() + &c));
        prop_assert_eq!((a.clone() * &b) * &c, a.clone() * &(b.clone() * &c));
        prop_assert_eq!(a.clone() * &(b.clone() + &c), a.clone() * &b + &(a.clone() * &c));
        prop_assert!((a.clone() - &a).is_zero());
    }

    #[test]
    fn gcd_divides_both(a in small_poly(), b in small_poly(), c in nonconstant_poly()) {
        let (x, y) = (a * &c, b * &c);
        let g = gcd_poly(&x, &y);
        if !x.is_zero() {
            prop_assert!(x.div_exact(&g).is_some(), "{} does not divide {}", g, x);
        }
        if !y.is_zero() {
            prop_assert!(y.div_exact(&g).is_some(), "{} does not divide {}", g, y);
        }
        if !x.is_zero() && !y.is_zero() {
            prop_assert!(g.div_exact(&c).is_some(), "common factor {} missing from {}", c, g);
        }
    }

    #[test]
    fn resultant_vanishes_exactly_on_common_factors(a in nonconstant_poly(), b in nonconstant_poly(), c in nonconstant_poly()) {
        let v = 1;
        prop_assume!(a.degree_in(v) + b.degree_in(v) > 0);
        let shares = gcd_poly(&a, &b).involves(v);
        prop_assert_eq!(resultant(&a, &b, v).unwrap().is_zero(), shares);
        prop_assume!(c.involves(v));
        prop_assert!(resultant(&(a.clone() * &c), &(b.clone() * &c), v).unwrap().is_zero());
    }

    #[test]
    fn resultants_of_forms_are_forms(f in (1u32..4).prop_flat_map(form), g in (1u32..4).prop_flat_map(form)) {
        let (d, e) = (f.total_degree().unwrap(), g.total_degree().unwrap());
        prop_assume!(f.degree_in(2) + g.degree_in(2) > 0);
        let r = resultant(&f, &g, 2).unwrap();
        if !r.is_zero() {
            prop_assert!(r.is_homogeneous());
            prop_assert!(!r.involves(2));
            // With smaller degree in t3 the resultant drops powers of the
            // leading coefficients, so the degree law needs full degree.
            if f.degree_in(2) == d && g.degree_in(2) == e {
                prop_assert_eq!(r.total_degree(), Some(d * e));
            }
        }
    }

    #[test]
    fn subresultants_match_sylvester(a in prop::collection::vec(-6i64..=6, 1..7), b in prop::collection::vec(-6i64..=6, 1..7)) {
        let to_uni = |v: &[i64]| UniPoly::new(v.iter().map(|&c| num_bigint::BigInt::from(c)).collect());
        let (a, b) = (to_uni(&a), to_uni(&b));
        prop_assume!(a.degree().is_some() && b.degree().is_some());
        prop_assert_eq!(subresultant(&a, &b), sylvester_resultant(&a, &b));
    }

    #[test]
    fn dehomogenization_round_trip(f in (0u32..5).prop_flat_map(form), var in 0usize..3) {
        let d = f.total_degree().unwrap();
        let back = homogenize(&Form::new(f.clone()).unwrap().dehomogenize(var), var, d).unwrap();
        // Only factors of the variable itself are lost.
        if f.div_exact(&MultiPoly::var(&Vars::standard(), var)).is_none() {
            prop_assert_eq!(back.poly(), &f);
        } else {
            prop_assert!(f.div_exact(back.poly()).is_some());
        }
    }

    #[test]
    fn printing_round_trips(p in small_poly()) {
        prop_assert_eq!(parse_poly(&p.to_string()).unwrap(), p);
    }
}

#[test]
fn fixed_gcd_and_resultant_values() {
    assert_eq!(gcd_poly(&poly("(t1+2*t2)^3*(t1-t2)"), &poly("(t1+2*t2)^2*t3")), poly("(t1+2*t2)^2"));
    assert_eq!(resultant(&poly("t2^2 - t1"), &poly("t2 - 1"), 1).unwrap(), poly("1 - t1"));
    let d = poly("t1^3").partial_derivative(0, 2);
    assert_eq!(d, poly("6*t1"));
    assert!(homogenize(&poly("t1^3 + t2"), 2, 2).is_err());
    assert_eq!(homogenize(&poly("t1^2 + t2"), 2, 4).unwrap().poly(), &poly("t1^2*t3^2 + t2*t3^3"));
    assert_eq!(Monomial::var(3, 1, 2).exps(), &[0, 2, 0]);
}
