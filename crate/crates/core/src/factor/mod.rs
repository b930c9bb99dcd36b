//! Univariate factorization over the rationals (Zassenhaus).
//!
//! A squarefree primitive integer polynomial is factored modulo a small
//! prime, the modular factorization is lifted with quadratic Hensel steps
//! past twice the Mignotte bound, and true factors are recovered by subset
//! recombination with exact trial division.

mod modp;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::poly::UniPoly;
use crate::ring::Rational;
use modp::Fp;

/// Monic irreducible factors of `f` with multiplicities, sorted by degree
/// and then by coefficients. Constants yield an empty list.
pub fn factor_rational(f: &UniPoly<Rational>) -> Vec<(UniPoly<Rational>, usize)> {
    let mut out = Vec::new();
    for (part, mult) in f.squarefree_decomposition() {
        for g in factor_squarefree(&part) {
            out.push((g, mult));
        }
    }
    out.sort_by(|a, b| factor_order(&a.0, &b.0));
    out
}

/// The distinct monic irreducible factors of `f`.
pub fn irreducible_factors(f: &UniPoly<Rational>) -> Vec<UniPoly<Rational>> {
    let mut out = factor_squarefree(&f.squarefree_part());
    out.sort_by(factor_order);
    out
}

/// Whether `f` is irreducible over the rationals.
pub fn is_irreducible(f: &UniPoly<Rational>) -> bool {
    f.degree().unwrap_or(0) >= 1 && factor_rational(f) == vec![(f.monic(), 1)]
}

fn factor_order(a: &UniPoly<Rational>, b: &UniPoly<Rational>) -> std::cmp::Ordering {
    a.degree().cmp(&b.degree()).then_with(|| {
        let key = |p: &UniPoly<Rational>| p.coeffs().iter().rev().cloned().collect::<Vec<_>>();
        key(a).cmp(&key(b))
    })
}

/// Factor a squarefree rational polynomial into monic irreducibles.
fn factor_squarefree(f: &UniPoly<Rational>) -> Vec<UniPoly<Rational>> {
    match f.degree() {
        None | Some(0) => return Vec::new(),
        Some(1) => return vec![f.monic()],
        _ => {}
    }
    let z = primitive_integer(f);
    zassenhaus(&z).into_iter().map(|g| g.map(|c| Rational::from_integer(c.clone())).monic()).collect()
}

/// Primitive integer multiple of `f` with positive leading coefficient.
fn primitive_integer(f: &UniPoly<Rational>) -> UniPoly<BigInt> {
    let content = crate::ring::rational_content(f.coeffs().iter());
    let mut v: Vec<BigInt> = f.coeffs().iter().map(|c| (c / &content).to_integer()).collect();
    if v.last().is_some_and(|c| c.is_negative()) {
        v.iter_mut().for_each(|c| *c = -c.clone());
    }
    UniPoly::new(v)
}

fn int_content(f: &UniPoly<BigInt>) -> BigInt {
    f.coeffs().iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

fn primitive_part(f: &UniPoly<BigInt>) -> UniPoly<BigInt> {
    let c = int_content(f);
    let mut g = f.exact_div_scalar(&c).unwrap();
    if g.lc().is_some_and(|l| l.is_negative()) {
        g = -g;
    }
    g
}

const PRIMES: [u64; 24] = [3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97];

fn reduce_mod(f: &UniPoly<BigInt>, p: u64) -> Vec<u64> {
    let pb = BigInt::from(p);
    let mut v: Vec<u64> = f.coeffs().iter().map(|c| c.mod_floor(&pb).to_u64().unwrap()).collect();
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

/// Factors of a squarefree primitive integer polynomial of degree >= 2.
fn zassenhaus(f: &UniPoly<BigInt>) -> Vec<UniPoly<BigInt>> {
    let n = f.degree().unwrap();
    let lc = f.lc().unwrap().clone();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_fac7);

    // Pick the good prime with the fewest modular factors among a few.
    let mut best: Option<(u64, Vec<Vec<u64>>)> = None;
    let mut tried = 0;
    for &p in PRIMES.iter().chain([101u64, 103, 107, 109, 113, 127, 131, 137, 139, 149].iter()) {
        if (&lc % BigInt::from(p)).is_zero() {
            continue;
        }
        let fp = Fp::new(p);
        let fm = reduce_mod(f, p);
        if fm.len() != n + 1 || modp::degree(&fp.gcd(&fm, &fp.derivative(&fm))) != Some(0) {
            continue;
        }
        let factors = fp.factor_squarefree(&fp.monic(&fm), &mut rng);
        if factors.len() == 1 {
            return vec![f.clone()];
        }
        if best.as_ref().is_none_or(|(_, b)| factors.len() < b.len()) {
            best = Some((p, factors));
        }
        tried += 1;
        if tried >= 5 {
            break;
        }
    }
    let (p, modular) = best.expect("some small prime is good for a squarefree polynomial");

    // Lift past twice the Mignotte-style bound (n+1) 2^n |f|_inf |lc|.
    let max_coeff = f.coeffs().iter().map(|c| c.abs()).max().unwrap();
    let bound = BigInt::from(n + 1) * (BigInt::one() << n) * max_coeff * lc.abs() * 2;
    let mut modulus = BigInt::from(p);
    let mut levels = 0;
    while modulus <= bound {
        modulus = &modulus * &modulus;
        levels += 1;
    }
    let lifted = hensel_lift(f, &modular, p, levels);
    recombine(f, lifted, &modulus)
}

/// Symmetric residue of `c` modulo `m`.
fn sym(c: &BigInt, m: &BigInt) -> BigInt {
    let r = c.mod_floor(m);
    if &r * 2 > *m {
        r - m
    } else {
        r
    }
}

fn reduce_poly(f: &UniPoly<BigInt>, m: &BigInt) -> UniPoly<BigInt> {
    f.map(|c| c.mod_floor(m))
}

/// Division by a monic polynomial modulo `m`.
fn div_rem_monic(a: &UniPoly<BigInt>, b: &UniPoly<BigInt>, m: &BigInt) -> (UniPoly<BigInt>, UniPoly<BigInt>) {
    let db = b.degree().unwrap();
    let mut r: Vec<BigInt> = a.coeffs().to_vec();
    if r.len() <= db {
        return (UniPoly::zero(), reduce_poly(a, m));
    }
    let mut q = vec![BigInt::zero(); r.len() - db];
    for k in (db..r.len()).rev() {
        let c = r[k].mod_floor(m);
        if c.is_zero() {
            continue;
        }
        for (j, bj) in b.coeffs().iter().enumerate() {
            let idx = k - db + j;
            r[idx] = (&r[idx] - &c * bj).mod_floor(m);
        }
        q[k - db] = c;
    }
    r.truncate(db);
    (UniPoly::new(q), reduce_poly(&UniPoly::new(r), m))
}

fn lift_from_fp(v: &[u64]) -> UniPoly<BigInt> {
    UniPoly::new(v.iter().map(|&c| BigInt::from(c)).collect())
}

fn modinv(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.extended_gcd(m);
    debug_assert!(e.gcd.is_one());
    e.x.mod_floor(m)
}

/// One quadratic Hensel step from modulus `m` to `m^2`.
#[allow(clippy::too_many_arguments)]
fn hensel_step(
    f: &UniPoly<BigInt>,
    g: &UniPoly<BigInt>,
    h: &UniPoly<BigInt>,
    s: &UniPoly<BigInt>,
    t: &UniPoly<BigInt>,
    m2: &BigInt,
) -> [UniPoly<BigInt>; 4] {
    let e = reduce_poly(&(f.clone() - &(g.clone() * h)), m2);
    let (q, r) = div_rem_monic(&(s.clone() * &e), h, m2);
    let g2 = reduce_poly(&(g.clone() + &(t.clone() * &e) + &(q * g)), m2);
    let h2 = reduce_poly(&(h.clone() + &r), m2);
    let b = reduce_poly(&(s.clone() * &g2 + &(t.clone() * &h2) - &UniPoly::one()), m2);
    let (c, d) = div_rem_monic(&(s.clone() * &b), &h2, m2);
    let s2 = reduce_poly(&(s.clone() - &d), m2);
    let t2 = reduce_poly(&(t.clone() - &(t.clone() * &b) - &(c * &g2)), m2);
    [g2, h2, s2, t2]
}

/// Lift monic modular factors of `f` to monic factors modulo
/// `p^(2^levels)` using a balanced factor tree.
fn hensel_lift(f: &UniPoly<BigInt>, factors: &[Vec<u64>], p: u64, levels: u32) -> Vec<UniPoly<BigInt>> {
    let mut modulus = BigInt::from(p);
    for _ in 0..levels {
        modulus = &modulus * &modulus;
    }
    if factors.len() == 1 {
        let lc = f.lc().unwrap();
        let inv = modinv(lc, &modulus);
        return vec![reduce_poly(&f.scale(&inv), &modulus)];
    }
    let fp = Fp::new(p);
    let (left, right) = factors.split_at(factors.len() / 2);
    let lc_p = f.lc().unwrap().mod_floor(&BigInt::from(p)).to_u64().unwrap();
    let g0 = fp.scale(&left.iter().fold(vec![1], |a, x| fp.mul(&a, x)), lc_p);
    let h0 = right.iter().fold(vec![1], |a, x| fp.mul(&a, x));
    let (one, s0, t0) = fp.xgcd(&g0, &h0);
    debug_assert_eq!(one, vec![1]);
    let (mut g, mut h, mut s, mut t) = (lift_from_fp(&g0), lift_from_fp(&h0), lift_from_fp(&s0), lift_from_fp(&t0));
    let mut m = BigInt::from(p);
    for _ in 0..levels {
        m = &m * &m;
        [g, h, s, t] = hensel_step(f, &g, &h, &s, &t, &m);
    }
    let mut out = hensel_lift(&g, left, p, levels);
    out.extend(hensel_lift(&h, right, p, levels));
    out
}

fn recombine(f: &UniPoly<BigInt>, mut lifted: Vec<UniPoly<BigInt>>, modulus: &BigInt) -> Vec<UniPoly<BigInt>> {
    let mut rest = f.clone();
    let mut found = Vec::new();
    let mut size = 1;
    'outer: while 2 * size <= lifted.len() {
        let r = lifted.len();
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            let lc = rest.lc().unwrap().clone();
            let prod = idx.iter().fold(UniPoly::constant(lc), |acc, &i| reduce_poly(&(acc * &lifted[i]), modulus));
            let candidate = primitive_part(&prod.map(|c| sym(c, modulus)));
            if let Some(q) = rest.div_exact(&candidate) {
                found.push(candidate);
                rest = q;
                for &i in idx.iter().rev() {
                    lifted.remove(i);
                }
                continue 'outer;
            }
            // next combination in lexicographic order
            let mut k = size;
            while k > 0 && idx[k - 1] == r - size + k - 1 {
                k -= 1;
            }
            if k == 0 {
                break;
            }
            idx[k - 1] += 1;
            for j in k..size {
                idx[j] = idx[j - 1] + 1;
            }
        }
        size += 1;
    }
    if rest.degree() > Some(0) {
        found.push(primitive_part(&rest));
    }
    found
}
