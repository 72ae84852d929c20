//! Small integer helpers shared across modules.

use crate::error::{Error, Result};

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Returns `(p, e)` with `q = p^e`, `p` prime and `e >= 1`.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2u64;
    while p * p <= q && !q.is_multiple_of(p) {
        p += 1;
    }
    if !q.is_multiple_of(p) {
        p = q;
    }
    let mut rest = q;
    let mut e = 0u32;
    while rest.is_multiple_of(p) {
        rest /= p;
        e += 1;
    }
    (rest == 1).then_some((p, e))
}

/// Validates that `q` is a power of the prime `p` and returns the exponent.
pub fn power_of(p: u64, q: u64) -> Result<u32> {
    if !is_prime(p) {
        return Err(Error::InvalidFieldSize(format!("characteristic {p} is not prime")));
    }
    match prime_power(q) {
        Some((base, e)) if base == p => Ok(e),
        Some(_) => Err(Error::BaseMismatch { p, q }),
        None => Err(Error::InvalidFieldSize(format!("{q} is not a prime power"))),
    }
}

/// Exact integer `r`-th root of `n`, if any.
pub fn exact_root(n: u64, r: u32) -> Option<u64> {
    if r == 1 {
        return Some(n);
    }
    let approx = (n as f64).powf(1.0 / f64::from(r)).round() as u64;
    (approx.saturating_sub(1)..=approx + 1).find(|&cand| cand.checked_pow(r) == Some(n))
}
