use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Rational64};
use num_traits::{One, Signed, Zero};

use super::poly::{content, div_exact_dense, gcd_dense, LPolynomial};
use crate::error::{Error, Result};

/// A rational function in `L^(1/r)` with integer coefficients, always held in
/// canonical form:
///
/// - numerator and denominator are coprime over Q (as polynomials in `x = L^(1/r)`),
/// - the denominator has lowest exponent 0 and a positive leading coefficient,
/// - the integer content is split as `a * N / (b * D)` with `N`, `D` primitive and
///   `gcd(a, b) = 1`,
/// - `r` is minimal.
///
/// Structural equality is therefore value equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MotivicValue {
    num: LPolynomial,
    den: LPolynomial,
}

/// Arithmetic selector for [`mv_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn mv_arith(a: &MotivicValue, b: &MotivicValue, op: ArithOp) -> Result<MotivicValue> {
    match op {
        ArithOp::Add => Ok(a + b),
        ArithOp::Sub => Ok(a - b),
        ArithOp::Mul => Ok(a * b),
        ArithOp::Div => a.checked_div(b),
    }
}

fn lcm_u32(a: u32, b: u32) -> u32 {
    a.lcm(&b)
}

impl MotivicValue {
    /// Builds and canonicalizes `num / den`. Both must share a scale.
    pub fn from_parts(num: LPolynomial, den: LPolynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let scale = lcm_u32(num.scale(), den.scale());
        Ok(Self::canonicalize(num.rescaled(scale), den.rescaled(scale)))
    }

    /// Convenience constructor from `(k, c)` pairs meaning `c * L^(k/scale)`.
    pub fn from_terms(scale: u32, num: &[(i64, i64)], den: &[(i64, i64)]) -> Result<Self> {
        Self::from_parts(
            LPolynomial::from_terms(scale, num.iter().copied()),
            LPolynomial::from_terms(scale, den.iter().copied()),
        )
    }

    /// Polynomial in L with integer exponents.
    pub fn poly(terms: &[(i64, i64)]) -> Self {
        Self::from_terms(1, terms, &[(0, 1)]).expect("denominator is one")
    }

    pub fn zero() -> Self {
        MotivicValue { num: LPolynomial::zero(1), den: LPolynomial::one(1) }
    }

    pub fn one() -> Self {
        Self::integer(1)
    }

    pub fn integer(c: i64) -> Self {
        Self::poly(&[(0, c)])
    }

    /// The Lefschetz class `L`.
    pub fn lefschetz() -> Self {
        Self::poly(&[(1, 1)])
    }

    /// `L^e` for a rational exponent.
    pub fn l_pow(e: Rational64) -> Self {
        let r = u32::try_from(*e.denom()).expect("positive denominator");
        Self::canonicalize(LPolynomial::monomial(r, *e.numer(), BigInt::one()), LPolynomial::one(r))
    }

    pub fn l_pow_int(k: i64) -> Self {
        Self::l_pow(Rational64::from_integer(k))
    }

    pub fn numerator(&self) -> &LPolynomial {
        &self.num
    }

    pub fn denominator(&self) -> &LPolynomial {
        &self.den
    }

    /// All exponents are multiples of `1/scale`.
    pub fn scale(&self) -> u32 {
        self.num.scale()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// True when the value lies in `Z[L]`: integral scale, trivial denominator and no
    /// negative powers.
    pub fn is_polynomial_in_l(&self) -> bool {
        self.scale() == 1
            && self.den == LPolynomial::one(1)
            && self.num.min_exp().is_none_or(|k| k >= 0)
    }

    fn canonicalize(num: LPolynomial, den: LPolynomial) -> Self {
        let scale = num.scale();
        debug_assert_eq!(scale, den.scale());
        if num.is_zero() {
            return Self::zero();
        }
        let (den_lo, den_dense) = den.to_dense();
        let (num_lo, num_dense) = num.to_dense();
        // Powers of x are moved into the numerator so that the denominator starts at x^0.
        let num_shift = num_lo - den_lo;

        let g = gcd_dense(&num_dense, &den_dense);
        let (mut n, mut d) = if g.len() > 1 {
            (div_exact_dense(&num_dense, &g), div_exact_dense(&den_dense, &g))
        } else {
            (num_dense, den_dense)
        };

        let cn = content(&n);
        let cd = content(&d);
        let common = cn.gcd(&cd);
        for c in n.iter_mut() {
            *c /= &common;
        }
        for c in d.iter_mut() {
            *c /= &common;
        }
        if d.last().is_some_and(|c| c.is_negative()) {
            n.iter_mut().for_each(|c| *c = -c.clone());
            d.iter_mut().for_each(|c| *c = -c.clone());
        }

        let num = LPolynomial::from_dense(scale, num_shift, &n);
        let den = LPolynomial::from_dense(scale, 0, &d);
        let g = den.exponent_gcd(num.exponent_gcd(scale));
        if g > 1 {
            MotivicValue { num: num.compressed(g), den: den.compressed(g) }
        } else {
            MotivicValue { num, den }
        }
    }

    fn aligned(&self, other: &Self) -> (LPolynomial, LPolynomial, LPolynomial, LPolynomial) {
        let s = lcm_u32(self.scale(), other.scale());
        (
            self.num.rescaled(s),
            self.den.rescaled(s),
            other.num.rescaled(s),
            other.den.rescaled(s),
        )
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (an, ad, bn, bd) = self.aligned(other);
        Ok(Self::canonicalize(an.mul(&bd), ad.mul(&bn)))
    }

    pub fn recip(&self) -> Result<Self> {
        Self::one().checked_div(self)
    }

    /// Integer power; negative exponents require a nonzero value.
    pub fn pow(&self, k: i64) -> Result<Self> {
        let base = if k < 0 { self.recip()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..k.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// Applies `x -> x^factor` to both numerator and denominator.
    pub(crate) fn substitute_power(&self, factor: i64) -> Self {
        Self::canonicalize(self.num.exponents_scaled(factor), self.den.exponents_scaled(factor))
    }

    /// Evaluates at a given value of `x = L^(1/r)`; `None` on a pole.
    pub(crate) fn eval_at_root(&self, x: &BigRational) -> Option<BigRational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(x) / d)
    }

    /// Human-readable form using `var` for the class symbol.
    pub fn display_with(&self, var: &str) -> String {
        let num = fmt_lpoly(&self.num, var);
        if self.den == LPolynomial::one(self.scale()) {
            return num;
        }
        let wrap = |s: String, p: &LPolynomial| if p.len() > 1 { format!("({s})") } else { s };
        format!("{}/{}", wrap(num, &self.num), wrap(fmt_lpoly(&self.den, var), &self.den))
    }
}

fn fmt_exp(k: i64, scale: u32) -> String {
    let e = Rational64::new(k, i64::from(scale));
    if e.is_integer() {
        e.to_integer().to_string()
    } else {
        format!("({}/{})", e.numer(), e.denom())
    }
}

fn fmt_lpoly(p: &LPolynomial, var: &str) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (k, c)) in p.terms().rev().enumerate() {
        let neg = c.is_negative();
        let mag = c.abs();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mono = match k {
            0 => String::new(),
            _ if k == i64::from(p.scale()) => var.to_string(),
            _ => format!("{var}^{}", fmt_exp(k, p.scale())),
        };
        if mono.is_empty() {
            out.push_str(&mag.to_string());
        } else if mag.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&format!("{mag}*{mono}"));
        }
    }
    out
}

impl fmt::Display for MotivicValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("L"))
    }
}

impl Add for &MotivicValue {
    type Output = MotivicValue;
    fn add(self, other: &MotivicValue) -> MotivicValue {
        let (an, ad, bn, bd) = self.aligned(other);
        MotivicValue::canonicalize(an.mul(&bd).add(&bn.mul(&ad)), ad.mul(&bd))
    }
}

impl Sub for &MotivicValue {
    type Output = MotivicValue;
    fn sub(self, other: &MotivicValue) -> MotivicValue {
        self + &(-other)
    }
}

impl Mul for &MotivicValue {
    type Output = MotivicValue;
    fn mul(self, other: &MotivicValue) -> MotivicValue {
        let (an, ad, bn, bd) = self.aligned(other);
        MotivicValue::canonicalize(an.mul(&bn), ad.mul(&bd))
    }
}

impl Neg for &MotivicValue {
    type Output = MotivicValue;
    fn neg(self) -> MotivicValue {
        MotivicValue { num: self.num.neg(), den: self.den.clone() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for MotivicValue {
            type Output = MotivicValue;
            fn $m(self, other: MotivicValue) -> MotivicValue {
                (&self).$m(&other)
            }
        }
        impl $tr<&MotivicValue> for MotivicValue {
            type Output = MotivicValue;
            fn $m(self, other: &MotivicValue) -> MotivicValue {
                (&self).$m(other)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for MotivicValue {
    type Output = MotivicValue;
    fn neg(self) -> MotivicValue {
        -&self
    }
}

impl std::iter::Sum for MotivicValue {
    fn sum<I: Iterator<Item = MotivicValue>>(iter: I) -> Self {
        iter.fold(MotivicValue::zero(), |a, b| a + b)
    }
}

impl From<i64> for MotivicValue {
    fn from(c: i64) -> Self {
        MotivicValue::integer(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l() -> MotivicValue {
        MotivicValue::lefschetz()
    }

    #[test]
    fn ring_identity() {
        let v = &(&l() - &MotivicValue::one()) + &MotivicValue::one();
        assert_eq!(v, l());
    }

    #[test]
    fn half_powers_merge() {
        let h = MotivicValue::l_pow(Rational64::new(1, 2));
        assert_eq!(h.scale(), 2);
        let v = &h * &h;
        assert_eq!(v, l());
        assert_eq!(v.scale(), 1);
    }

    #[test]
    fn common_factor_cancels() {
        let a = MotivicValue::poly(&[(2, 1), (1, -1)]);
        let b = MotivicValue::poly(&[(1, 1), (0, -1)]);
        assert_eq!(mv_arith(&a, &b, ArithOp::Div).unwrap(), l());
    }

    #[test]
    fn division_by_zero() {
        assert_eq!(
            mv_arith(&l(), &MotivicValue::zero(), ArithOp::Div),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn canonical_denominator_shape() {
        // 1/(L^2 - L) -> L^-1 / (L - 1)
        let v = MotivicValue::from_terms(1, &[(0, 1)], &[(2, 1), (1, -1)]).unwrap();
        assert_eq!(v.numerator(), &LPolynomial::from_terms(1, [(-1i64, 1i64)]));
        assert_eq!(v.denominator(), &LPolynomial::from_terms(1, [(1i64, 1i64), (0, -1)]));
        // sign normalization: 1/(1 - L) has a positive leading denominator coefficient
        let w = MotivicValue::from_terms(1, &[(0, 1)], &[(0, 1), (1, -1)]).unwrap();
        assert_eq!(w.numerator().coeff(0), BigInt::from(-1));
        assert_eq!(w.to_string(), "-1/(L - 1)");
    }

    #[test]
    fn content_is_split() {
        let v = MotivicValue::from_terms(1, &[(1, 4), (0, 2)], &[(1, 6)]).unwrap();
        // (4L+2)/(6L) = (2L+1)/(3L)
        assert_eq!(v.to_string(), "(2 + L^-1)/3");
        assert_eq!(v,MotivicValue::from_terms(1, &[(0, 2), (-1, 1)], &[(0, 3)]).unwrap());
        assert_eq!(v.denominator(), &LPolynomial::from_terms(1, [(0i64, 3i64)]));
    }

    #[test]
    fn display_forms() {
        assert_eq!(MotivicValue::poly(&[(3, 1), (2, 2)]).to_string(), "L^3 + 2*L^2");
        assert_eq!(MotivicValue::l_pow(Rational64::new(-1, 2)).to_string(), "L^(-1/2)");
        assert_eq!(MotivicValue::zero().to_string(), "0");
        let v = MotivicValue::from_terms(1, &[(1, 1)], &[(1, 1), (0, -1)]).unwrap();
        assert_eq!(v.to_string(), "L/(L - 1)");
    }

    #[test]
    fn polynomial_predicate() {
        assert!(MotivicValue::poly(&[(3, 1), (2, 2)]).is_polynomial_in_l());
        assert!(!MotivicValue::l_pow_int(-1).is_polynomial_in_l());
        assert!(!MotivicValue::l_pow(Rational64::new(1, 2)).is_polynomial_in_l());
    }
}
