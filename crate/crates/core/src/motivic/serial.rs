//! Record form `{ "scale": r, "num": [[k, c], ...], "den": [[k, c], ...] }` and
//! `"a/b"` rational strings.

use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::poly::LPolynomial;
use super::value::MotivicValue;
use crate::error::{Error, Result};

/// Coefficients are emitted as JSON integers when they fit in `i64`, and as decimal
/// strings otherwise.
#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum Coeff {
    Small(i64),
    Big(String),
}

impl From<&BigInt> for Coeff {
    fn from(c: &BigInt) -> Self {
        i64::try_from(c).map_or_else(|_| Coeff::Big(c.to_string()), Coeff::Small)
    }
}

impl Coeff {
    fn to_bigint(&self) -> std::result::Result<BigInt, String> {
        match self {
            Coeff::Small(c) => Ok(BigInt::from(*c)),
            Coeff::Big(s) => s.parse().map_err(|_| format!("bad coefficient {s:?}")),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct Record {
    scale: u32,
    num: Vec<(i64, Coeff)>,
    den: Vec<(i64, Coeff)>,
}

fn terms(p: &LPolynomial) -> Vec<(i64, Coeff)> {
    p.terms().map(|(k, c)| (k, Coeff::from(c))).collect()
}

impl Serialize for MotivicValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        Record { scale: self.scale(), num: terms(self.numerator()), den: terms(self.denominator()) }
            .serialize(s)
    }
}

impl<'de> Deserialize<'de> for MotivicValue {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rec = Record::deserialize(d)?;
        if rec.scale == 0 {
            return Err(D::Error::custom("scale must be positive"));
        }
        let build = |ts: &[(i64, Coeff)]| -> std::result::Result<LPolynomial, D::Error> {
            let mut p = LPolynomial::zero(rec.scale);
            for (k, c) in ts {
                p.add_term(*k, c.to_bigint().map_err(D::Error::custom)?);
            }
            Ok(p)
        };
        MotivicValue::from_parts(build(&rec.num)?, build(&rec.den)?).map_err(D::Error::custom)
    }
}

pub fn rational_string(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn parse_big_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid rational {s:?}"));
    match s.split_once('/') {
        Some((a, b)) => {
            let a: BigInt = a.trim().parse().map_err(|_| bad())?;
            let b: BigInt = b.trim().parse().map_err(|_| bad())?;
            if b == BigInt::from(0) {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(BigRational::new(a, b))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

pub fn parse_rational64(s: &str) -> Result<Rational64> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid rational {s:?}"));
    match s.split_once('/') {
        Some((a, b)) => {
            let a: i64 = a.trim().parse().map_err(|_| bad())?;
            let b: i64 = b.trim().parse().map_err(|_| bad())?;
            if b == 0 {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(Rational64::new(a, b))
        }
        None => Ok(Rational64::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Serde adapter for `BigRational` fields as `"a/b"` strings.
pub mod big_rational_str {
    use super::*;

    pub fn serialize<S: Serializer>(r: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&rational_string(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<BigRational, D::Error> {
        let s = String::deserialize(d)?;
        parse_big_rational(&s).map_err(D::Error::custom)
    }
}
