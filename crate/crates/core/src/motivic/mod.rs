//! Exact arithmetic on rational functions in fractional powers of the Lefschetz
//! class `L`, and their realizations.
//!
//! Every value computed by this crate lives in this sub-ring: a quotient of two
//! Laurent polynomials in `x = L^(1/r)` with integer coefficients. Values are kept
//! in a canonical form so that `==` is value equality.

mod poly;
mod realize;
mod serial;
mod value;

pub use poly::LPolynomial;
pub use realize::{
    duality_transform, euler_char, eval_point_count, geometric_partial_sum, geometric_sum,
    mv_dimension, poincare, Dimension, PoincareValue,
};
pub use serial::{big_rational_str, parse_big_rational, parse_rational64, rational_string};
pub use value::{mv_arith, ArithOp, MotivicValue};

#[cfg(test)]
mod props {
    use num_rational::Rational64;
    use proptest::prelude::*;

    use super::*;

    /// Small random values with scale 1 or 2, possibly with a nontrivial denominator.
    fn value() -> impl Strategy<Value = MotivicValue> {
        let terms = || prop::collection::vec((-3i64..4, -3i64..4), 0..4);
        (prop_oneof![Just(1u32), Just(2u32)], terms(), terms(), any::<bool>()).prop_map(
            |(scale, num, den, poly_only)| {
                let den = if poly_only || den.iter().all(|(_, c)| *c == 0) {
                    vec![(0, 1)]
                } else {
                    den
                };
                let den_poly = LPolynomial::from_terms(scale, den.iter().copied());
                let den_poly = if den_poly.is_zero() { LPolynomial::one(scale) } else { den_poly };
                MotivicValue::from_parts(LPolynomial::from_terms(scale, num.iter().copied()), den_poly)
                    .unwrap()
            },
        )
    }

    fn integral_value() -> impl Strategy<Value = MotivicValue> {
        value().prop_filter("integral scale", |v| v.scale() == 1)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn ring_laws(a in value(), b in value(), c in value()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a - &a, MotivicValue::zero());
        }

        #[test]
        fn division_inverts_multiplication(a in value(), b in value()) {
            prop_assume!(!b.is_zero());
            prop_assert_eq!(&a.checked_div(&b).unwrap() * &b, a);
        }

        #[test]
        fn euler_matches_poincare_at_one(v in integral_value()) {
            if let (Ok(e), Ok(p)) = (euler_char(&v), poincare(&v).at_one()) {
                prop_assert_eq!(e, p);
            }
        }

        #[test]
        fn point_count_is_a_ring_homomorphism(a in integral_value(), b in integral_value(), q in prop::sample::select(vec![2u64, 3, 4, 5, 7, 9])) {
            let (pa, pb) = (eval_point_count(&a, q), eval_point_count(&b, q));
            if let (Ok(pa), Ok(pb)) = (pa, pb) {
                prop_assert_eq!(eval_point_count(&(&a * &b), q).unwrap(), &pa * &pb);
                prop_assert_eq!(eval_point_count(&(&a + &b), q).unwrap(), &pa + &pb);
            }
        }

        #[test]
        fn geometric_sum_identity(c in value(), num in -5i64..0, den in 1i64..4) {
            let e = Rational64::new(num, den);
            let s = geometric_sum(&c, e).unwrap();
            let one_minus = &MotivicValue::one() - &MotivicValue::l_pow(e);
            prop_assert_eq!(&one_minus * &s, c);
        }

        #[test]
        fn duality_is_an_involution(v in value(), d in -3i64..6) {
            prop_assert_eq!(duality_transform(&duality_transform(&v, d), d), v);
        }

        #[test]
        fn serde_roundtrip(v in value()) {
            let s = serde_json::to_string(&v).unwrap();
            prop_assert_eq!(serde_json::from_str::<MotivicValue>(&s).unwrap(), v);
        }
    }
}
