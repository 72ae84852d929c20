//! Realizations of motivic values (point count, Euler characteristic, Poincare
//! polynomial, virtual dimension) and the series/duality transforms.

use std::fmt;

use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use num_traits::One;

use super::poly::LPolynomial;
use super::value::MotivicValue;
use crate::arith::{exact_root, prime_power};
use crate::error::{Error, Result};

/// `sum_{n >= 0} c * L^(e n) = c / (1 - L^e)`, defined for `e < 0`.
pub fn geometric_sum(c: &MotivicValue, e: Rational64) -> Result<MotivicValue> {
    if e >= Rational64::from_integer(0) {
        return Err(Error::DivergentSeries(e.to_string()));
    }
    let one_minus = &MotivicValue::one() - &MotivicValue::l_pow(e);
    c.checked_div(&one_minus)
}

/// Substitutes `q` for `L`.
pub fn eval_point_count(v: &MotivicValue, q: u64) -> Result<BigRational> {
    if prime_power(q).is_none() {
        return Err(Error::InvalidFieldSize(format!("{q} is not a prime power")));
    }
    let r = v.scale();
    let root = exact_root(q, r).ok_or(Error::FractionalPowerUnevaluable { q, r })?;
    v.eval_at_root(&BigRational::from_integer(BigInt::from(root)))
        .ok_or(Error::PoleAtQ(q))
}

/// Substitutes 1 for `L`; removable singularities are already cancelled by the
/// canonical form, so a vanishing denominator is a genuine pole.
pub fn euler_char(v: &MotivicValue) -> Result<BigRational> {
    v.eval_at_root(&BigRational::one()).ok_or(Error::PoleAtOne)
}

/// A value of the Poincare realization, a rational function in `T` with `L = T^2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PoincareValue(MotivicValue);

impl PoincareValue {
    /// The underlying rational function, with its class symbol read as `T`.
    pub fn as_rational_function(&self) -> &MotivicValue {
        &self.0
    }

    /// Evaluation at `T = 1`.
    pub fn at_one(&self) -> Result<BigRational> {
        euler_char(&self.0)
    }
}

impl fmt::Display for PoincareValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.display_with("T"))
    }
}

pub fn poincare(v: &MotivicValue) -> PoincareValue {
    PoincareValue(v.substitute_power(2))
}

/// Virtual dimension in `L`-units; `NegInfinity` for the zero value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Dimension {
    NegInfinity,
    Finite(Rational64),
}

impl fmt::Display for Dimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dimension::NegInfinity => f.write_str("-inf"),
            Dimension::Finite(d) => write!(f, "{d}"),
        }
    }
}

pub fn mv_dimension(v: &MotivicValue) -> Dimension {
    match (v.numerator().max_exp(), v.denominator().max_exp()) {
        (Some(n), Some(d)) => Dimension::Finite(Rational64::new(n - d, i64::from(v.scale()))),
        _ => Dimension::NegInfinity,
    }
}

/// `v(L^-1) * L^(d-1)`.
pub fn duality_transform(v: &MotivicValue, d: i64) -> MotivicValue {
    &v.substitute_power(-1) * &MotivicValue::l_pow_int(d - 1)
}

/// Partial sum `sum_{n < terms} c * L^(e n)`, used by tests as a truncation oracle.
pub fn geometric_partial_sum(c: &MotivicValue, e: Rational64, terms: u32) -> MotivicValue {
    let r = u32::try_from(*e.denom()).expect("positive denominator");
    let mut p = LPolynomial::zero(r);
    for n in 0..terms {
        p.add_term(e.numer() * i64::from(n), BigInt::one());
    }
    c * &MotivicValue::from_parts(p, LPolynomial::one(r)).expect("nonzero denominator")
}
