//! Polynomials over a prime field `F_p` with `p < 2^31`, stored as dense
//! coefficient vectors from low to high degree.

use num_bigint::BigUint;
use rand::Rng;

pub(crate) type Poly = Vec<u64>;

#[derive(Clone, Copy, Debug)]
pub(crate) struct Fp {
    pub p: u64,
}

fn trim(mut a: Poly) -> Poly {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

pub(crate) fn degree(a: &Poly) -> Option<usize> {
    a.len().checked_sub(1)
}

impl Fp {
    pub fn new(p: u64) -> Self {
        debug_assert!(p < (1 << 31));
        Fp { p }
    }

    pub fn inv(&self, a: u64) -> u64 {
        self.pow(a, self.p - 2)
    }

    pub fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut acc = 1;
        a %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * a % self.p;
            }
            a = a * a % self.p;
            e >>= 1;
        }
        acc
    }

    #[cfg(test)]
    pub fn add(&self, a: &Poly, b: &Poly) -> Poly {
        let n = a.len().max(b.len());
        let mut out = vec![0; n];
        for (i, o) in out.iter_mut().enumerate() {
            *o = (a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0)) % self.p;
        }
        trim(out)
    }

    pub fn sub(&self, a: &Poly, b: &Poly) -> Poly {
        let n = a.len().max(b.len());
        let mut out = vec![0; n];
        for (i, o) in out.iter_mut().enumerate() {
            *o = (a.get(i).copied().unwrap_or(0) + self.p - b.get(i).copied().unwrap_or(0)) % self.p;
        }
        trim(out)
    }

    pub fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % self.p;
            }
        }
        trim(out)
    }

    pub fn scale(&self, a: &Poly, c: u64) -> Poly {
        trim(a.iter().map(|x| x * c % self.p).collect())
    }

    pub fn monic(&self, a: &Poly) -> Poly {
        match a.last() {
            None => Vec::new(),
            Some(&l) => self.scale(a, self.inv(l)),
        }
    }

    pub fn div_rem(&self, a: &Poly, b: &Poly) -> (Poly, Poly) {
        let db = degree(b).expect("division by zero polynomial");
        let inv = self.inv(*b.last().unwrap());
        let mut r = a.clone();
        if r.len() <= db {
            return (Vec::new(), r);
        }
        let mut q = vec![0u64; r.len() - db];
        for k in (db..r.len()).rev() {
            let c = r[k] * inv % self.p;
            if c == 0 {
                continue;
            }
            q[k - db] = c;
            for (j, &bj) in b.iter().enumerate() {
                let idx = k - db + j;
                r[idx] = (r[idx] + self.p - c * bj % self.p) % self.p;
            }
        }
        (trim(q), trim(r))
    }

    pub fn rem(&self, a: &Poly, b: &Poly) -> Poly {
        self.div_rem(a, b).1
    }

    pub fn gcd(&self, a: &Poly, b: &Poly) -> Poly {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_empty() {
            let r = self.rem(&a, &b);
            a = b;
            b = r;
        }
        self.monic(&a)
    }

    /// `(g, s, t)` with `s*a + t*b = g` monic.
    pub fn xgcd(&self, a: &Poly, b: &Poly) -> (Poly, Poly, Poly) {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (vec![1], Vec::new());
        let (mut t0, mut t1) = (Vec::new(), vec![1]);
        while !r1.is_empty() {
            let (q, r) = self.div_rem(&r0, &r1);
            r0 = std::mem::replace(&mut r1, r);
            let s = self.sub(&s0, &self.mul(&q, &s1));
            s0 = std::mem::replace(&mut s1, s);
            let t = self.sub(&t0, &self.mul(&q, &t1));
            t0 = std::mem::replace(&mut t1, t);
        }
        let inv = self.inv(*r0.last().expect("nonzero gcd"));
        (self.scale(&r0, inv), self.scale(&s0, inv), self.scale(&t0, inv))
    }

    pub fn derivative(&self, a: &Poly) -> Poly {
        trim(a.iter().enumerate().skip(1).map(|(i, &c)| (i as u64 % self.p) * c % self.p).collect())
    }

    /// `base^e mod m`.
    pub fn pow_mod(&self, base: &Poly, e: &BigUint, m: &Poly) -> Poly {
        let mut acc: Poly = vec![1];
        let base = self.rem(base, m);
        for i in (0..e.bits()).rev() {
            acc = self.rem(&self.mul(&acc, &acc), m);
            if e.bit(i) {
                acc = self.rem(&self.mul(&acc, &base), m);
            }
        }
        self.rem(&acc, m)
    }

    /// Distinct-degree factorization of a monic squarefree polynomial:
    /// pairs `(g, d)` where `g` is the product of the degree-`d` factors.
    pub fn distinct_degree(&self, f: &Poly) -> Vec<(Poly, usize)> {
        let mut out = Vec::new();
        let mut f = f.clone();
        let x: Poly = vec![0, 1];
        let mut h = x.clone();
        let p = BigUint::from(self.p);
        let mut d = 0;
        while degree(&f).is_some_and(|n| n >= 2 * (d + 1)) {
            d += 1;
            h = self.pow_mod(&h, &p, &f);
            let g = self.gcd(&self.sub(&h, &x), &f);
            if degree(&g) > Some(0) {
                f = self.div_rem(&f, &g).0;
                h = self.rem(&h, &f);
                out.push((g, d));
            }
        }
        if degree(&f) > Some(0) {
            let n = degree(&f).unwrap();
            out.push((f, n));
        }
        out
    }

    /// Split a monic product of distinct degree-`d` irreducibles.
    pub fn equal_degree<R: Rng>(&self, f: &Poly, d: usize, rng: &mut R) -> Vec<Poly> {
        let n = degree(f).unwrap();
        if n == d {
            return vec![f.clone()];
        }
        let e = (BigUint::from(self.p).pow(d as u32) - 1u32) / 2u32;
        loop {
            let a: Poly = trim((0..n).map(|_| rng.gen_range(0..self.p)).collect());
            if degree(&a).unwrap_or(0) == 0 {
                continue;
            }
            let g = self.gcd(&a, f);
            let split = if degree(&g) > Some(0) && degree(&g) < Some(n) {
                g
            } else {
                let b = self.sub(&self.pow_mod(&a, &e, f), &vec![1]);
                let g = self.gcd(&b, f);
                if degree(&g) == Some(0) || g.is_empty() || degree(&g) == Some(n) {
                    continue;
                }
                g
            };
            let other = self.div_rem(f, &split).0;
            let mut out = self.equal_degree(&split, d, rng);
            out.extend(self.equal_degree(&self.monic(&other), d, rng));
            return out;
        }
    }

    /// Monic irreducible factors of a monic squarefree polynomial.
    pub fn factor_squarefree<R: Rng>(&self, f: &Poly, rng: &mut R) -> Vec<Poly> {
        let mut out = Vec::new();
        for (g, d) in self.distinct_degree(f) {
            out.extend(self.equal_degree(&g, d, rng));
        }
        out
    }
}
