use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use num_traits::{One, Zero};
use serde::Serialize;

use super::rep::{d_v, sht, QuasiLinearExponent, RepDatum};
use crate::arith::power_of;
use crate::covers::count_extensions;
use crate::error::{Error, Result};
use crate::motivic::{duality_transform, euler_char, geometric_sum, MotivicValue};

fn l() -> MotivicValue {
    MotivicValue::lefschetz()
}

fn lp(k: i64) -> MotivicValue {
    MotivicValue::l_pow_int(k)
}

fn one() -> MotivicValue {
    MotivicValue::one()
}

fn require_klt(rep: &RepDatum) -> Result<u64> {
    let dv = d_v(rep);
    if dv < rep.p() {
        return Err(Error::NotStringilyKlt { dv, p: rep.p() });
    }
    Ok(dv)
}

/// `sum_s L^(s - sht(s))` over `1 <= s <= p-1`.
fn residue_sum(rep: &RepDatum) -> MotivicValue {
    (1..rep.p())
        .map(|s| lp(s as i64 - sht(rep, s).expect("s < p") as i64))
        .sum()
}

/// `sum_j nu(covers with jump j) L^F(j)`, where the `j = 0` stratum is a point
/// and the jump-`j` stratum has measure `(L-1) L^(j-1-floor(j/p))`.
pub fn integrate_over_covers(p: u64, f: &QuasiLinearExponent) -> Result<MotivicValue> {
    if f.period() != p {
        return Err(Error::InvalidRepresentation(format!(
            "exponent has period {}, expected {p}",
            f.period()
        )));
    }
    let slope = Rational64::from_integer(p as i64 - 1 + f.a);
    let mut total = lp(f.b0);
    for s in 1..p {
        let first = &(&l() - &one()) * &lp(s as i64 - 1 + f.b[(s - 1) as usize]);
        total = &total + &geometric_sum(&first, slope)?;
    }
    Ok(total)
}

/// Stringy motivic invariant of the quotient stack `[V/G]`.
pub fn m_st(rep: &RepDatum) -> Result<MotivicValue> {
    let dv = require_klt(rep)? as i64;
    let (p, d, l_) = (rep.p() as i64, rep.dim() as i64, rep.blocks() as i64);
    let twisted = &(&lp(l_ - 1) * &(&l() - &one())) * &residue_sum(rep);
    let closed = &lp(d) + &geometric_sum(&twisted, Rational64::from_integer(p - 1 - dv))?;

    let integral = integrate_over_covers(rep.p(), &QuasiLinearExponent::minus_sht(rep))?;
    let by_strata = &lp(d) + &(&lp(l_) * &(&integral - &one()));
    if closed != by_strata {
        return Err(Error::InternalMismatch(format!(
            "M_st closed form {closed} differs from the stratum sum {by_strata}"
        )));
    }
    Ok(closed)
}

/// Stringy Euler number `1 + (p-1)/(D_V - p + 1)`, checked against `m_st` at `L = 1`.
pub fn e_st(rep: &RepDatum) -> Result<BigRational> {
    let dv = require_klt(rep)? as i64;
    let p = rep.p() as i64;
    let closed = BigRational::one() + BigRational::new((p - 1).into(), (dv - p + 1).into());
    let realized = euler_char(&m_st(rep)?)?;
    if closed != realized {
        return Err(Error::InternalMismatch(format!(
            "e_st closed form {closed} differs from the Euler characteristic {realized}"
        )));
    }
    Ok(closed)
}

/// Necessary conditions for a crepant resolution `Y -> V/G`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrepantReport {
    pub dv: u64,
    pub dv_equals_p: bool,
    pub polynomial_class: bool,
    pub euler_is_p: bool,
    /// `[Y]` if a crepant resolution exists.
    pub candidate_class_of_y: Option<MotivicValue>,
}

impl CrepantReport {
    pub fn all(&self) -> bool {
        self.dv_equals_p && self.polynomial_class && self.euler_is_p
    }
}

pub fn crepant_diagnostic(rep: &RepDatum) -> CrepantReport {
    let dv = d_v(rep);
    let m = m_st(rep).ok();
    let polynomial_class = m.as_ref().is_some_and(MotivicValue::is_polynomial_in_l);
    let euler_is_p = m
        .as_ref()
        .and_then(|m| euler_char(m).ok())
        .is_some_and(|e| e == BigRational::from_integer(rep.p().into()));
    CrepantReport {
        dv,
        dv_equals_p: dv == rep.p(),
        polynomial_class,
        euler_is_p,
        candidate_class_of_y: m.filter(|_| dv == rep.p() && polynomial_class),
    }
}

/// Class of the central fiber `E_0`: the integral of `L^(-sht)` over the cover moduli.
pub fn e0_class(rep: &RepDatum) -> Result<MotivicValue> {
    require_klt(rep)?;
    integrate_over_covers(rep.p(), &QuasiLinearExponent::minus_sht(rep))
}

/// `#E_0(F_q) = 1 + (p-1)/p sum_j N_{q,j} / q^sht(j)`, with the sum over each
/// residue class of `j` mod `p` evaluated as a geometric series.
pub fn point_count_e0(rep: &RepDatum, q: u64) -> Result<BigRational> {
    let dv = require_klt(rep)?;
    let p = rep.p();
    power_of(p, q)?;
    let big = |n: num_bigint::BigUint| BigRational::from_integer(BigInt::from(n));
    let qpow = |k: u64| BigRational::from_integer(BigInt::from(q).pow(k as u32));

    let mut sum = BigRational::zero();
    for s in 1..p {
        let first = big(count_extensions(q, s)?) / qpow(sht(rep, s)?);
        // consecutive terms in the residue class differ by N_{q,s+p} / (N_{q,s} q^D_V)
        let ratio = big(count_extensions(q, s + p)?) / big(count_extensions(q, s)?) / qpow(dv);
        if ratio >= BigRational::one() {
            return Err(Error::DivergentSeries(format!("point-count ratio {ratio}")));
        }
        sum += first / (BigRational::one() - ratio);
    }
    Ok(BigRational::one() + BigRational::new((p - 1).into(), p.into()) * sum)
}

/// Stringy invariant of the projectivization, from its definition in terms of
/// `M_st(X)`; cross-checked against the simplified closed form.
pub fn m_st_projectivization(rep: &RepDatum) -> Result<MotivicValue> {
    let dv = require_klt(rep)? as i64;
    let (p, d, l_) = (rep.p() as i64, rep.dim() as i64, rep.blocks() as i64);
    let lm1 = &l() - &one();
    let outer = &lp(d) - &lp(l_);

    let m = m_st(rep)?;
    let by_definition = &outer.checked_div(&lm1)?
        + &(&(&m - &outer) * &(&lp(l_) - &one())).checked_div(&(&lp(l_) * &lm1))?;

    let projective_space = (&lp(d) - &one()).checked_div(&lm1)?;
    let twisted = geometric_sum(
        &(&(&lp(l_) - &one()) * &residue_sum(rep)).checked_div(&l())?,
        Rational64::from_integer(p - 1 - dv),
    )?;
    let closed = &projective_space + &twisted;
    if closed != by_definition {
        return Err(Error::InternalMismatch(format!(
            "projectivization: definition gives {by_definition}, closed form gives {closed}"
        )));
    }
    Ok(closed)
}

/// `M(L^-1) L^(d-1) = M(L)` for the projectivization, `d = dim V`.
pub fn poincare_duality_check(rep: &RepDatum) -> Result<bool> {
    let w = m_st_projectivization(rep)?;
    Ok(duality_transform(&w, rep.dim() as i64) == w)
}
