use num_rational::Rational64;
use num_traits::One;

use crate::arith::is_prime;
use crate::error::{Error, Result};
use crate::motivic::{geometric_sum, MotivicValue};

fn lp(e: Rational64) -> MotivicValue {
    MotivicValue::l_pow(e)
}

fn lpi(k: i64) -> MotivicValue {
    MotivicValue::l_pow_int(k)
}

/// Stringy invariant from a simple normal crossing model: each stratum `E_I°`
/// contributes `[E_I°] prod_{i in I} (L - 1)/(L^(1 + a_i) - 1)`.
pub fn snc_stringy(strata: &[(MotivicValue, Vec<Rational64>)]) -> Result<MotivicValue> {
    let lm1 = &MotivicValue::lefschetz() - &MotivicValue::one();
    let mut total = MotivicValue::zero();
    for (class, coeffs) in strata {
        let mut term = class.clone();
        for &a in coeffs {
            if a <= -Rational64::one() {
                return Err(Error::NotKlt(format!("discrepancy coefficient {a} <= -1")));
            }
            let den = &lp(Rational64::one() + a) - &MotivicValue::one();
            term = (&term * &lm1).checked_div(&den)?;
        }
        total = &total + &term;
    }
    Ok(total)
}

/// `M_st(A^d, a H)` for a hyperplane `H`.
pub fn m_st_smooth_pair(d: i64, a: Rational64) -> Result<MotivicValue> {
    if a >= Rational64::one() {
        return Err(Error::NotKlt(format!("boundary coefficient {a} >= 1")));
    }
    snc_stringy(&[
        (&lpi(d) - &lpi(d - 1), vec![]),
        (lpi(d - 1), vec![-a]),
    ])
}

/// `M_st([A^2/G], a Y)` for `V = V_2`, where `Y` is the image of the reflecting
/// hyperplane. Computed in closed form and as a sum over twisted sectors.
pub fn m_st_stack_pair(p: u64, a: Rational64) -> Result<MotivicValue> {
    if !is_prime(p) {
        return Err(Error::InvalidRepresentation(format!("p = {p} is not prime")));
    }
    let pi = p as i64;
    let bound = Rational64::from_integer(2 - pi);
    if a >= bound {
        return Err(Error::NotKlt(format!("coefficient {a} must be below {bound}")));
    }
    let l2_l = &lpi(2) - &lpi(1);
    let slope = a + Rational64::from_integer(pi - 2);
    let closed = geometric_sum(&l2_l, slope)?;

    // untwisted sector
    let untwisted = geometric_sum(&l2_l, a - 1)?;
    // sum_{n >= 1} sum_{j in N', j < np} L^((a-1)n + j - floor(j/p)) (L-1)^2; for
    // j = mp + s the inner sum over n > m is L^((a-1)(m+1)) / (1 - L^(a-1)), then
    // the sum over m is geometric with ratio L^(a + p - 2)
    let lm1 = &lpi(1) - &MotivicValue::one();
    let residues: MotivicValue = (1..pi).map(lpi).sum();
    let seed = &(&(&lm1 * &lm1) * &residues) * &lp(a - 1);
    let twisted = geometric_sum(&geometric_sum(&seed, a - 1)?, slope)?;
    let series = &untwisted + &twisted;

    if series != closed {
        return Err(Error::InternalMismatch(format!(
            "stack pair: closed form {closed}, twisted-sector sum {series}"
        )));
    }
    Ok(closed)
}

/// Partial twisted-sector sum up to `n <= terms`, summed term by term with no
/// closed-form manipulation. Used to check the exchange of summation order.
pub fn stack_pair_partial(p: u64, a: Rational64, terms: u32) -> MotivicValue {
    let pi = p as i64;
    let lm1 = &lpi(1) - &MotivicValue::one();
    let mut total = MotivicValue::zero();
    for n in 1..=terms as i64 {
        for j in (1..n * pi).filter(|j| j % pi != 0) {
            let e = (a - 1) * n + Rational64::from_integer(j - j / pi);
            total = &total + &lp(e);
        }
    }
    &(&lm1 * &lm1) * &total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::motivic::eval_point_count;
    use num_rational::BigRational;
    use num_traits::{Signed, Zero};

    fn r(n: i64, d: i64) -> Rational64 {
        Rational64::new(n, d)
    }

    fn quotient(num: &MotivicValue, e: Rational64) -> MotivicValue {
        num.checked_div(&(&MotivicValue::one() - &lp(e))).unwrap()
    }

    #[test]
    fn snc_examples() {
        let x = MotivicValue::poly(&[(3, 1), (0, 2)]);
        assert_eq!(snc_stringy(&[(x.clone(), vec![])]).unwrap(), x);

        // crepant resolution of A^3/(Z/3): all discrepancies zero
        let zero = Rational64::zero();
        let strata = vec![
            (MotivicValue::poly(&[(3, 1), (1, -1)]), vec![]),
            (lpi(2), vec![zero]),
            (lpi(2), vec![zero]),
            (lpi(1), vec![zero, zero]),
        ];
        assert_eq!(snc_stringy(&strata).unwrap(), MotivicValue::poly(&[(3, 1), (2, 2)]));

        let half = snc_stringy(&[(lpi(1), vec![r(-1, 2)])]).unwrap();
        let expect = (&lpi(1) * &(&lpi(1) - &MotivicValue::one()))
            .checked_div(&(&lp(r(1, 2)) - &MotivicValue::one()))
            .unwrap();
        assert_eq!(half, expect);
        assert_eq!(half.scale(), 2);
        assert!(matches!(snc_stringy(&[(lpi(1), vec![r(-1, 1)])]), Err(Error::NotKlt(_))));
    }

    #[test]
    fn smooth_pair_examples() {
        let l2_l = &lpi(2) - &lpi(1);
        assert_eq!(m_st_smooth_pair(2, Rational64::zero()).unwrap(), lpi(2));
        assert_eq!(m_st_smooth_pair(2, r(-1, 1)).unwrap(), quotient(&l2_l, r(-2, 1)));
        let half = m_st_smooth_pair(2, r(1, 2)).unwrap();
        assert_eq!(half, quotient(&l2_l, r(-1, 2)));
        assert_eq!(half.scale(), 2);
        assert!(matches!(m_st_smooth_pair(2, r(1, 1)), Err(Error::NotKlt(_))));
    }

    #[test]
    fn stack_pair_examples() {
        assert_eq!(m_st_stack_pair(2, r(-1, 1)).unwrap(), lpi(2));
        assert_eq!(m_st_stack_pair(3, r(-2, 1)).unwrap(), lpi(2));
        assert!(matches!(m_st_stack_pair(2, Rational64::zero()), Err(Error::NotKlt(_))));
        assert!(m_st_stack_pair(5, r(-7, 2)).is_ok());
    }

    #[test]
    fn smooth_and_stack_pairs_agree() {
        for p in [2i64, 3, 5, 7] {
            for a in [r(0, 1), r(1, 2), r(-1, 1), r(-5, 3), r(2, 3), r(-7, 4)] {
                assert_eq!(
                    m_st_smooth_pair(2, a).unwrap(),
                    m_st_stack_pair(p as u64, a + 1 - p).unwrap(),
                    "p = {p}, a = {a}"
                );
            }
        }
    }

    #[test]
    fn twisted_partial_sums_approach_the_closed_form() {
        // the tail after n terms is O(q^(N (a + p - 2))) in point counts
        let (p, a) = (3u64, r(-3, 1));
        let exact = &m_st_stack_pair(p, a).unwrap()
            - &geometric_sum(&(&lpi(2) - &lpi(1)), a - 1).unwrap();
        let q = 3;
        let target = eval_point_count(&exact, q).unwrap();
        let mut last_gap: Option<BigRational> = None;
        for n in [4u32, 8, 12] {
            let partial = eval_point_count(&stack_pair_partial(p, a, n), q).unwrap();
            let gap = (&target - &partial).abs();
            if let Some(prev) = &last_gap {
                assert!(gap < *prev);
            }
            last_gap = Some(gap);
        }
        assert!(last_gap.unwrap() < BigRational::new(1.into(), 1000.into()));
    }
}
