//! Laurent polynomials in `x = L^(1/r)` with integer coefficients, plus the dense
//! univariate helpers (content, exact division, gcd over Q) used by canonicalization.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// `sum c_k * L^(k/scale)`. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LPolynomial {
    scale: u32,
    terms: BTreeMap<i64, BigInt>,
}

impl LPolynomial {
    pub fn zero(scale: u32) -> Self {
        assert!(scale >= 1, "exponent scale must be positive");
        LPolynomial { scale, terms: BTreeMap::new() }
    }

    pub fn one(scale: u32) -> Self {
        Self::monomial(scale, 0, BigInt::one())
    }

    pub fn monomial(scale: u32, k: i64, c: BigInt) -> Self {
        let mut p = Self::zero(scale);
        p.add_term(k, c);
        p
    }

    pub fn from_terms<I, C>(scale: u32, terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero(scale);
        for (k, c) in terms {
            p.add_term(k, c.into());
        }
        p
    }

    pub fn scale(&self) -> u32 {
        self.scale
    }

    /// Iterates `(k, c)` in increasing exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, k: i64) -> BigInt {
        self.terms.get(&k).cloned().unwrap_or_default()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.terms.values().next_back()
    }

    pub fn add_term(&mut self, k: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(k).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&k);
        }
    }

    /// Re-expresses the polynomial over `new_scale`, which must be a multiple of the
    /// current scale.
    pub fn rescaled(&self, new_scale: u32) -> Self {
        assert!(new_scale.is_multiple_of(self.scale), "scale {new_scale} is not a multiple of {}", self.scale);
        let f = i64::from(new_scale / self.scale);
        LPolynomial {
            scale: new_scale,
            terms: self.terms.iter().map(|(k, c)| (k * f, c.clone())).collect(),
        }
    }

    /// Divides all exponents and the scale by `g`, which must divide all of them.
    pub(crate) fn compressed(&self, g: u32) -> Self {
        debug_assert!(self.scale.is_multiple_of(g));
        let gi = i64::from(g);
        LPolynomial {
            scale: self.scale / g,
            terms: self
                .terms
                .iter()
                .map(|(k, c)| {
                    debug_assert!(k % gi == 0);
                    (k / gi, c.clone())
                })
                .collect(),
        }
    }

    pub fn shifted(&self, by: i64) -> Self {
        LPolynomial {
            scale: self.scale,
            terms: self.terms.iter().map(|(k, c)| (k + by, c.clone())).collect(),
        }
    }

    /// `x -> x^factor` (factor may be negative).
    pub fn exponents_scaled(&self, factor: i64) -> Self {
        LPolynomial {
            scale: self.scale,
            terms: self.terms.iter().map(|(k, c)| (k * factor, c.clone())).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        LPolynomial {
            scale: self.scale,
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }

    pub fn scalar_mul(&self, s: &BigInt) -> Self {
        if s.is_zero() {
            return Self::zero(self.scale);
        }
        LPolynomial {
            scale: self.scale,
            terms: self.terms.iter().map(|(k, c)| (*k, c * s)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.scale, other.scale);
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(*k, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.scale, other.scale);
        let mut out = Self::zero(self.scale);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(a + b, ca * cb);
            }
        }
        out
    }

    /// Evaluates at `x`; `x` must be nonzero when negative exponents are present.
    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for (k, c) in &self.terms {
            let term = BigRational::from_integer(c.clone()) * pow_rational(x, *k);
            acc += term;
        }
        acc
    }

    /// gcd of all exponents together with the scale.
    pub(crate) fn exponent_gcd(&self, start: u32) -> u32 {
        self.terms.keys().fold(start, |g, k| {
            let k = k.unsigned_abs();
            u32::try_from(u64::from(g).gcd(&k)).expect("gcd bounded by scale")
        })
    }

    /// Dense coefficient vector after shifting the lowest exponent to 0.
    pub(crate) fn to_dense(&self) -> (i64, Vec<BigInt>) {
        let Some(lo) = self.min_exp() else {
            return (0, Vec::new());
        };
        let hi = self.max_exp().unwrap();
        let mut v = vec![BigInt::zero(); usize::try_from(hi - lo).unwrap() + 1];
        for (k, c) in &self.terms {
            v[usize::try_from(k - lo).unwrap()] = c.clone();
        }
        (lo, v)
    }

    pub(crate) fn from_dense(scale: u32, shift: i64, dense: &[BigInt]) -> Self {
        let mut p = Self::zero(scale);
        for (i, c) in dense.iter().enumerate() {
            p.add_term(shift + i as i64, c.clone());
        }
        p
    }
}

pub(crate) fn pow_rational(x: &BigRational, k: i64) -> BigRational {
    let base = if k < 0 { x.recip() } else { x.clone() };
    num_traits::pow(base, usize::try_from(k.unsigned_abs()).expect("exponent fits usize"))
}

fn trim(v: &mut Vec<BigInt>) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

pub(crate) fn content(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

/// Primitive part with positive leading coefficient.
pub(crate) fn primitive(v: &[BigInt]) -> Vec<BigInt> {
    let mut c = content(v);
    if c.is_zero() {
        return Vec::new();
    }
    if v.last().is_some_and(|l| l.is_negative()) {
        c = -c;
    }
    let mut out: Vec<BigInt> = v.iter().map(|x| x / &c).collect();
    trim(&mut out);
    out
}

/// Pseudo-remainder of `a` by `b` (both dense, `b` nonzero).
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let lb = &b[db];
    while r.len() > db && !r.is_empty() {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        for x in r.iter_mut() {
            *x *= lb;
        }
        let off = dr - db;
        for (i, bc) in b.iter().enumerate() {
            r[off + i] -= &lr * bc;
        }
        trim(&mut r);
    }
    r
}

/// Primitive gcd over Q of two dense integer polynomials (positive leading coefficient).
pub(crate) fn gcd_dense(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut x = primitive(a);
    let mut y = primitive(b);
    if x.is_empty() {
        return y;
    }
    if y.is_empty() {
        return x;
    }
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        let r = primitive(&pseudo_rem(&x, &y));
        x = y;
        y = r;
    }
    x
}

/// Exact division `a / b` over Z; `b` primitive and dividing `a` over Q.
pub(crate) fn div_exact_dense(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let lb = &b[db];
    if r.len() <= db {
        assert!(r.is_empty(), "inexact polynomial division");
        return Vec::new();
    }
    let mut q = vec![BigInt::zero(); r.len() - db];
    while r.len() > db {
        let dr = r.len() - 1;
        let (c, rem) = r[dr].div_rem(lb);
        assert!(rem.is_zero(), "inexact polynomial division");
        let off = dr - db;
        for (i, bc) in b.iter().enumerate() {
            r[off + i] -= &c * bc;
        }
        q[off] = c;
        trim(&mut r);
    }
    assert!(r.is_empty(), "inexact polynomial division");
    q
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn gcd_of_products() {
        // (x-1)(x+2) and (x-1)(3x+1)
        let a = d(&[-2, 1, 1]);
        let b = d(&[-1, -2, 3]);
        assert_eq!(gcd_dense(&a, &b), d(&[-1, 1]));
    }

    #[test]
    fn gcd_coprime_is_one() {
        assert_eq!(gcd_dense(&d(&[1, 1]), &d(&[-1, 1])), d(&[1]));
    }

    #[test]
    fn exact_division() {
        let a = d(&[-2, 1, 1]);
        assert_eq!(div_exact_dense(&a, &d(&[-1, 1])), d(&[2, 1]));
    }

    #[test]
    fn rescale_and_compress_roundtrip() {
        let p = LPolynomial::from_terms(2, [(1i64, 3i64), (-4, 1)]);
        let q = p.rescaled(6);
        assert_eq!(q.coeff(3), BigInt::from(3));
        assert_eq!(q.compressed(3), p);
    }
}
