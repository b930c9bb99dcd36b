use smallvec::SmallVec;

/// Exponent vector ordered graded-lexicographically with the first
/// variable largest.
///
/// The total degree is cached in front so the derived ordering compares it
/// first and then the exponents lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Monomial {
    deg: u32,
    exps: SmallVec<[u32; 4]>,
}

impl Monomial {
    pub fn new(exps: &[u32]) -> Self {
        Monomial { deg: exps.iter().sum(), exps: SmallVec::from_slice(exps) }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial { deg: 0, exps: SmallVec::from_elem(0, nvars) }
    }

    /// `x_i^e` in `nvars` variables.
    pub fn var(nvars: usize, i: usize, e: u32) -> Self {
        let mut m = Self::one(nvars);
        m.exps[i] = e;
        m.deg = e;
        m
    }

    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn len(&self) -> usize {
        self.exps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial { deg: self.deg + other.deg, exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect() }
    }

    /// `self / other` when every exponent allows it.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut exps = SmallVec::with_capacity(self.exps.len());
        for (a, b) in self.exps.iter().zip(&other.exps) {
            exps.push(a.checked_sub(*b)?);
        }
        Some(Monomial { deg: self.deg - other.deg, exps })
    }

    /// Copy with exponent `i` replaced by `e`.
    pub fn with_exp(&self, i: usize, e: u32) -> Monomial {
        let mut m = self.clone();
        m.deg = m.deg - m.exps[i] + e;
        m.exps[i] = e;
        m
    }
}
