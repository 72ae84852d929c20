//! Polynomial identity checks for explicit invariant rings of `Z/p` in
//! characteristic `p`.

mod action;
mod poly;
mod verify;

pub use action::{apply_action, catalan_mod, norm, GroupAction};
pub use poly::MultiPoly;
pub use verify::{
    check_reflection, check_v2v2, check_v3, reflection_jacobian_check, reflection_setup,
    v2v2_relation, v3_relation, verify_v2v2_relation, verify_v3_relation, QuadraticForm,
    ReflectionReport, V2V2Generators, V2V2Report, V3Report,
};

#[cfg(test)]
mod props {
    use proptest::prelude::*;

    use super::*;

    const VARS: [&str; 3] = ["x", "y", "z"];

    fn poly(p: u64, max_deg: u32) -> impl Strategy<Value = MultiPoly> {
        prop::collection::vec((0..p, 0..=max_deg, 0..=max_deg, 0..=max_deg), 0..6).prop_map(
            move |terms| {
                let zero = MultiPoly::zero(p, &VARS);
                terms
                    .into_iter()
                    .filter(|(_, a, b, c)| a + b + c <= max_deg)
                    .fold(zero.clone(), |acc, (k, a, b, c)| &acc + &zero.monomial_like(k as i64, &[a, b, c]))
            },
        )
    }

    fn action(p: u64) -> GroupAction {
        let vs = MultiPoly::variables(p, &VARS);
        let (x, y, z) = (&vs[0], &vs[1], &vs[2]);
        GroupAction::new(vec![x.clone(), y - x, &(x - y) + z]).unwrap()
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]

        #[test]
        fn substitution_is_a_ring_homomorphism(f in poly(5, 3), g in poly(5, 3), imgs in prop::collection::vec(poly(5, 2), 3)) {
            prop_assert_eq!((&f * &g).substitute(&imgs), &f.substitute(&imgs) * &g.substitute(&imgs));
            prop_assert_eq!((&f + &g).substitute(&imgs), &f.substitute(&imgs) + &g.substitute(&imgs));
        }

        #[test]
        fn derivative_is_a_derivation(f in poly(7, 4), g in poly(7, 4), i in 0usize..3) {
            let lhs = (&f * &g).derivative(i);
            let rhs = &(&f * &g.derivative(i)) + &(&g * &f.derivative(i));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn norms_are_invariant(f in poly(3, 3)) {
            let act = action(3);
            prop_assert!(act.is_invariant(&norm(&act, &f)));
        }

        #[test]
        fn perturbed_relations_fail(e in prop::collection::vec(0u32..3, 4), c in 1i64..5) {
            let base = v3_relation(5);
            let bump = base.monomial_like(c, &e);
            let r = check_v3(5, &(&base + &bump), QuadraticForm::Invariant).unwrap();
            prop_assert!(!r.ok);

            let base = v2v2_relation();
            let mut e5 = e.clone();
            e5.push(1);
            let r = check_v2v2(&(&base + &base.monomial_like(1, &e5)), &V2V2Generators::standard());
            prop_assert!(!r.ok);
        }
    }

    #[test]
    fn standard_actions_have_order_p() {
        for (p, dims) in [(2u64, vec![2, 2]), (3, vec![3, 2, 1]), (5, vec![5, 3]), (7, vec![4])] {
            let act = GroupAction::standard(p, &dims).unwrap();
            assert!(act.has_order_p());
            let vars = act.variables();
            let mut start = 0;
            for &d in &dims {
                let mut f = vars[start].clone();
                for i in 1..d as usize {
                    f = act.delta(&f);
                    assert_eq!(f, vars[start + i]);
                }
                assert!(act.delta(&f).is_zero());
                start += d as usize;
            }
        }
        for p in [3u64, 5, 7] {
            assert!(action(p).has_order_p());
        }
    }

    #[test]
    fn perturbed_reflection_generators_fail() {
        let (act, mut gens) = reflection_setup(3, 3).unwrap();
        gens[0] = &gens[0] + &gens[0].var_like(0);
        let r = check_reflection(3, &act, &gens);
        assert!(!r.invariance_ok);
        let (act, mut gens) = reflection_setup(3, 3).unwrap();
        gens[2] = gens[2].pow(2);
        assert!(!check_reflection(3, &act, &gens).det_ok);
    }
}
