//! Point counts of the strata of representative polynomials.

use num_bigint::BigUint;
use num_traits::{One, Pow};

use crate::arith::prime_power;
use crate::error::{Error, Result};

fn characteristic(q: u64) -> Result<u64> {
    prime_power(q)
        .map(|(p, _)| p)
        .ok_or_else(|| Error::InvalidFieldSize(format!("{q} is not a prime power")))
}

/// Number of representative polynomials over `F_q` with jump `j`:
/// `(q-1) q^(j-1-floor(j/p))`, and 1 for `j = 0`.
pub fn count_rep_covers(q: u64, j: u64) -> Result<BigUint> {
    let p = characteristic(q)?;
    if j == 0 {
        return Ok(BigUint::one());
    }
    if j.is_multiple_of(p) {
        return Err(Error::InvalidJump { p, j });
    }
    Ok(BigUint::from(q - 1) * BigUint::from(q).pow(j - 1 - j / p))
}

/// Number of Artin-Schreier extensions of `F_q((t))` with jump `j > 0`:
/// `p / (p-1)` times [`count_rep_covers`].
pub fn count_extensions(q: u64, j: u64) -> Result<BigUint> {
    let p = characteristic(q)?;
    if j == 0 {
        return Err(Error::InvalidJump { p, j });
    }
    Ok(count_rep_covers(q, j)? * p / (p - 1))
}

/// Total number of representative polynomials with jump at most `max_j`.
pub fn count_classes_up_to(q: u64, max_j: u64) -> Result<BigUint> {
    let p = characteristic(q)?;
    (0..=max_j)
        .filter(|j| *j == 0 || j % p != 0)
        .map(|j| count_rep_covers(q, j))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn rep_counts() {
        assert_eq!(count_rep_covers(2, 0).unwrap(), n(1));
        assert_eq!(count_rep_covers(2, 3).unwrap(), n(2));
        assert_eq!(count_rep_covers(4, 1).unwrap(), n(3));
        assert_eq!(count_rep_covers(3, 3), Err(Error::InvalidJump { p: 3, j: 3 }));
        assert!(matches!(count_rep_covers(6, 1), Err(Error::InvalidFieldSize(_))));
    }

    #[test]
    fn extension_counts() {
        for m in 0..10u32 {
            assert_eq!(count_extensions(2, 2 * m as u64 + 1).unwrap(), n(2).pow(m + 1));
        }
        assert_eq!(count_extensions(3, 1).unwrap(), n(3));
        assert_eq!(count_extensions(2, 1).unwrap(), n(2));
        assert!(count_extensions(2, 0).is_err());
        // large jumps stay exact
        assert_eq!(count_extensions(2, 201).unwrap(), n(2).pow(101u32));
    }

    #[test]
    fn class_count_identity() {
        for q in [2u64, 3, 4, 5, 7, 8, 9] {
            let p = characteristic(q).unwrap();
            for big_j in 0..25 {
                assert_eq!(
                    count_classes_up_to(q, big_j).unwrap(),
                    n(q).pow(big_j - big_j / p),
                    "q={q} J={big_j}"
                );
            }
        }
    }
}
