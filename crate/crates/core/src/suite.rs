//! The acceptance battery: nine groups of exact checks, runnable from the CLI
//! (`suite`) and from the test harness.

use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::covers::{
    enumerate_covers, reduce, reduce_with_witness, verify_jump, CensusOptions, Fq, GaloisField,
    LaurentSeries,
};
use crate::invariant_rings::{
    reflection_jacobian_check, v3_relation, verify_v2v2_relation, verify_v3_relation, MultiPoly,
};
use crate::motivic::{euler_char, eval_point_count, geometric_sum, MotivicValue};
use crate::stringy::{
    d_v, e0_class, e_st, integrate_over_covers, m_st, m_st_projectivization, m_st_smooth_pair,
    m_st_stack_pair, point_count_e0, poincare_duality_check, sht, QuasiLinearExponent, RepDatum,
};

pub const DEFAULT_SEED: u64 = 20_240_601;

/// Criterion keys in execution order, usable with `--only`.
pub const CRITERIA: [(&str, &str); 9] = [
    ("examples", "stringy invariants of the worked examples"),
    ("euler", "stringy Euler number equals the Euler characteristic of M_st"),
    ("duality", "Poincare duality of the projectivization"),
    ("pointcount", "point count of E_0 equals the weighted count of extensions"),
    ("census", "cover census matches the stratum counts"),
    ("jumps", "valuation-theoretic jump matches the representative polynomial"),
    ("invariants", "invariant-ring relations and the reflection Jacobian"),
    ("pairs", "smooth pair equals stack pair"),
    ("properties", "randomized property checks"),
];

#[derive(Debug, Clone, Serialize)]
pub struct CriterionReport {
    pub id: usize,
    pub key: String,
    pub title: String,
    pub passed: bool,
    pub checks: u64,
    pub failures: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub seed: u64,
    pub passed: bool,
    pub criteria: Vec<CriterionReport>,
}

const MAX_FAILURES: usize = 20;

#[derive(Default)]
struct Checker {
    checks: u64,
    failures: Vec<String>,
    failed: u64,
}

impl Checker {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failed += 1;
            if self.failures.len() < MAX_FAILURES {
                self.failures.push(what());
            }
        }
    }

    /// Records `Err` as a failure and returns the value on success.
    fn ok<T, E: std::fmt::Display>(&mut self, r: Result<T, E>, what: impl FnOnce() -> String) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.check(false, || format!("{}: {e}", what()));
                None
            }
        }
    }

    fn finish(mut self, id: usize) -> CriterionReport {
        let (key, title) = CRITERIA[id - 1];
        if self.failed as usize > self.failures.len() {
            let more = self.failed as usize - self.failures.len();
            self.failures.push(format!("... and {more} more"));
        }
        CriterionReport {
            id,
            key: key.to_string(),
            title: title.to_string(),
            passed: self.failed == 0,
            checks: self.checks,
            failures: self.failures,
        }
    }
}

fn lp(k: i64) -> MotivicValue {
    MotivicValue::l_pow_int(k)
}

fn rep(p: u64, dims: &[u64]) -> RepDatum {
    RepDatum::new(p, dims.to_vec()).expect("fixture representation")
}

/// Non-trivial block multisets of length at most 3 with `D_V >= p`, for `p` in `primes`.
pub fn klt_grid(primes: &[u64]) -> Vec<RepDatum> {
    let mut out = Vec::new();
    for &p in primes {
        for len in 1..=3 {
            let mut dims = vec![1u64; len];
            loop {
                if let Ok(r) = RepDatum::new(p, dims.clone()) {
                    if d_v(&r) >= p {
                        out.push(r);
                    }
                }
                // next non-increasing sequence
                let Some(i) = (0..len).rev().find(|&i| dims[i] < if i == 0 { p } else { dims[i - 1] }) else {
                    break;
                };
                dims[i] += 1;
                for x in dims.iter_mut().skip(i + 1) {
                    *x = 1;
                }
            }
        }
    }
    out
}

fn examples() -> CriterionReport {
    let mut c = Checker::default();
    let cases = [
        (rep(3, &[3]), &lp(3) + &MotivicValue::poly(&[(2, 2)])),
        (rep(2, &[2, 2]), &lp(4) + &lp(3)),
    ];
    for (r, expect) in cases {
        if let Some(m) = c.ok(m_st(&r), || format!("m_st {r}")) {
            c.check(m == expect, || format!("m_st {r} = {m}, expected {expect}"));
        }
    }
    for p in [2u64, 3, 5] {
        let r = rep(p, &vec![2; p as usize]);
        let expect: MotivicValue =
            std::iter::once(lp(2 * p as i64)).chain((1..p).map(|s| lp((p + s) as i64))).sum();
        if let Some(m) = c.ok(m_st(&r), || format!("m_st {r}")) {
            c.check(m == expect, || format!("m_st {r} = {m}, expected {expect}"));
        }
    }
    // V_p^l: sht(s) = l (s-1)(p-1)/2
    for (p, l) in [(3i64, 1i64), (3, 2), (5, 1)] {
        let r = rep(p as u64, &vec![p as u64; l as usize]);
        let lm1 = &lp(1) - &MotivicValue::one();
        let sum: MotivicValue = (1..p).map(|s| lp(s - l * (s - 1) * (p - 1) / 2)).sum();
        let expect = geometric_sum(&(&(&lm1 * &lp(l - 1)) * &sum), Rational64::from_integer(p - 1 - l * p * (p - 1) / 2))
            .map(|g| &lp(p * l) + &g);
        if let (Some(m), Some(e)) = (c.ok(m_st(&r), || format!("m_st {r}")), c.ok(expect, || "closed form".into())) {
            c.check(m == e, || format!("m_st {r} = {m}, closed form {e}"));
        }
    }
    c.finish(1)
}

fn euler(grid: &[RepDatum]) -> CriterionReport {
    let mut c = Checker::default();
    for r in grid {
        let (p, dv) = (r.p() as i64, d_v(r) as i64);
        let closed = BigRational::from_integer(1.into()) + BigRational::new((p - 1).into(), (dv - p + 1).into());
        let Some(m) = c.ok(m_st(r), || format!("m_st {r}")) else { continue };
        let Some(chi) = c.ok(euler_char(&m), || format!("euler_char {r}")) else { continue };
        let Some(e) = c.ok(e_st(r), || format!("e_st {r}")) else { continue };
        c.check(chi == closed && e == closed, || format!("{r}: e_st {e}, chi {chi}, closed {closed}"));
    }
    c.finish(2)
}

fn duality(grid: &[RepDatum]) -> CriterionReport {
    let mut c = Checker::default();
    for r in grid {
        // the projectivization cross-checks its definition against the closed form
        c.ok(m_st_projectivization(r), || format!("projectivization {r}"));
        if let Some(ok) = c.ok(poincare_duality_check(r), || format!("duality {r}")) {
            c.check(ok, || format!("duality fails for {r}"));
        }
    }
    c.finish(3)
}

fn pointcount(grid: &[RepDatum]) -> CriterionReport {
    let mut c = Checker::default();
    for r in grid.iter().filter(|r| r.p() <= 3) {
        let Some(e0) = c.ok(e0_class(r), || format!("e0 {r}")) else { continue };
        for k in 1..=3 {
            let q = r.p().pow(k);
            let lhs = c.ok(point_count_e0(r, q), || format!("point count {r} q={q}"));
            let rhs = c.ok(eval_point_count(&e0, q), || format!("eval {r} q={q}"));
            if let (Some(a), Some(b)) = (lhs, rhs) {
                c.check(a == b, || format!("{r}, q = {q}: weighted count {a}, #E0 {b}"));
            }
        }
    }
    let r = rep(2, &[2, 2]);
    for q in [2u64, 4, 8] {
        if let Some(n) = c.ok(point_count_e0(&r, q), || format!("point count {r} q={q}")) {
            c.check(n == BigRational::from_integer(BigInt::from(q + 1)), || format!("{r}, q = {q}: {n}"));
        }
    }
    c.finish(4)
}

const CENSUS_CASES: [(u64, u64, u64); 3] = [(2, 2, 8), (2, 4, 4), (3, 3, 5)];

fn census(workers: usize) -> (CriterionReport, CriterionReport) {
    let mut c5 = Checker::default();
    let mut c6 = Checker::default();
    for (p, q, big_j) in CENSUS_CASES {
        let opts = CensusOptions { workers, ..Default::default() };
        let Some(rep) = c5.ok(enumerate_covers(p, q, big_j, &opts), || format!("census {p},{q},{big_j}")) else {
            continue;
        };
        let ch = &rep.checks;
        let tag = format!("p={p} q={q} J={big_j}");
        c5.check(ch.histogram_matches, || format!("{tag}: jump histogram {:?}", rep.jump_histogram));
        c5.check(ch.fibers_uniform, || format!("{tag}: fibers not all {}", rep.expected_fiber));
        c5.check(ch.total_matches, || format!("{tag}: {} classes, expected {}", rep.distinct, rep.expected_distinct));
        c5.check(ch.witnesses_sound && ch.idempotent, || format!("{tag}: reduction checks {ch:?}"));

        let field = GaloisField::new(p, q).expect("census field");
        for form in rep.normal_forms.iter().filter(|f| f.jump > 0) {
            let cl = crate::covers::ASCoverClass::new(form.rep.clone(), 0);
            if let Some(ok) = c6.ok(verify_jump(&field, &cl, None), || format!("{tag}: {}", form.rep_display)) {
                c6.check(ok, || format!("{tag}: jump oracle disagrees on {}", form.rep_display));
            }
        }
    }
    (c5.finish(5), c6.finish(6))
}

fn invariants() -> CriterionReport {
    let mut c = Checker::default();
    for p in [3u64, 5, 7, 11] {
        if let Some(r) = c.ok(verify_v3_relation(p), || format!("v3 p={p}")) {
            c.check(r.ok && r.generators_invariant, || format!("v3 p={p}: residual {}", r.residual));
        }
    }
    let big = MultiPoly::zero(3, &["X", "Y", "Z", "W"]);
    let expect = [(-1, [3, 0, 1, 0]), (1, [0, 0, 0, 3]), (-1, [0, 2, 0, 0]), (1, [2, 0, 0, 2])]
        .iter()
        .fold(big.clone(), |acc, (k, e)| &acc + &big.monomial_like(*k, e));
    c.check(v3_relation(3) == expect, || format!("p = 3 relation reads {}", v3_relation(3)));
    let r = verify_v2v2_relation();
    c.check(r.ok && r.invariance_ok, || format!("v2v2: residual {}", r.residual));
    for (p, d) in [(2u64, 2u64), (3, 2), (5, 4)] {
        if let Some(r) = c.ok(reflection_jacobian_check(p, d), || format!("reflection {p},{d}")) {
            c.check(r.invariance_ok && r.det_ok, || format!("reflection {p},{d}: det {}", r.determinant));
        }
    }
    c.finish(7)
}

fn pairs() -> CriterionReport {
    let mut c = Checker::default();
    let coeffs = [(-2, 1), (-1, 1), (-1, 2), (0, 1), (1, 2)];
    for p in [2i64, 3, 5] {
        for (n, d) in coeffs {
            let a = Rational64::new(n, d);
            let smooth = c.ok(m_st_smooth_pair(2, a), || format!("smooth pair a={a}"));
            let stack = c.ok(m_st_stack_pair(p as u64, a + 1 - p), || format!("stack pair p={p} a={a}"));
            if let (Some(x), Some(y)) = (smooth, stack) {
                c.check(x == y, || format!("p = {p}, a = {a}: {x} vs {y}"));
            }
        }
    }
    c.finish(8)
}

fn random_value(rng: &mut ChaCha8Rng, polynomial: bool) -> MotivicValue {
    let scale = if rng.gen_bool(0.7) { 1 } else { 2 };
    let mut terms = |n: usize| -> Vec<(i64, i64)> {
        (0..n).map(|_| (rng.gen_range(-3..5), rng.gen_range(-4..5))).collect()
    };
    let num = terms(3);
    let den = if polynomial { vec![(0, 1)] } else { terms(2) };
    MotivicValue::from_terms(scale, &num, &den).unwrap_or_else(|_| MotivicValue::one())
}

fn random_rep(rng: &mut ChaCha8Rng) -> RepDatum {
    loop {
        let p = [2u64, 3, 5, 7][rng.gen_range(0..4)];
        let len = rng.gen_range(1..=4);
        let dims = (0..len).map(|_| rng.gen_range(1..=p)).collect();
        if let Ok(r) = RepDatum::new(p, dims) {
            return r;
        }
    }
}

pub const SERIES_PER_FIELD: usize = 1000;

fn properties(seed: u64) -> CriterionReport {
    let mut c = Checker::default();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    for _ in 0..50 {
        let r = random_rep(&mut rng);
        let p = r.p();
        for n in 0..=20 {
            for s in 1..p {
                let (a, b) = (sht(&r, n * p + s), sht(&r, s));
                c.check(
                    matches!((a, b), (Ok(a), Ok(b)) if a == d_v(&r) * n + b),
                    || format!("sht decomposition fails for {r} at n={n}, s={s}"),
                );
            }
        }
    }

    let mut klt = 0;
    while klt < 30 {
        let r = random_rep(&mut rng);
        if d_v(&r) < r.p() {
            continue;
        }
        klt += 1;
        let m = c.ok(m_st(&r), || format!("m_st {r}"));
        let integral = c.ok(integrate_over_covers(r.p(), &QuasiLinearExponent::minus_sht(&r)), || format!("integral {r}"));
        if let (Some(m), Some(i)) = (m, integral) {
            let by_strata = &lp(r.dim() as i64) + &(&lp(r.blocks() as i64) * &(&i - &MotivicValue::one()));
            c.check(m == by_strata, || format!("{r}: m_st {m}, strata {by_strata}"));
        }
    }

    for _ in 0..100 {
        let v = random_value(&mut rng, false);
        let e = Rational64::new(-rng.gen_range(1..6), rng.gen_range(1..4));
        if let Some(s) = c.ok(geometric_sum(&v, e), || format!("geometric_sum {v}, {e}")) {
            let back = &(&MotivicValue::one() - &MotivicValue::l_pow(e)) * &s;
            c.check(back == v, || format!("geometric identity fails for {v}, {e}"));
        }
    }

    for _ in 0..100 {
        let (a, b) = (random_value(&mut rng, false), random_value(&mut rng, false));
        let q = [2u64, 3, 4, 5, 7, 9][rng.gen_range(0..6)];
        if let (Ok(x), Ok(y)) = (eval_point_count(&a, q), eval_point_count(&b, q)) {
            let prod = eval_point_count(&(&a * &b), q);
            let sum = eval_point_count(&(&a + &b), q);
            c.check(prod.as_ref() == Ok(&(&x * &y)), || format!("#_{q}({a} * {b})"));
            c.check(sum.as_ref() == Ok(&(&x + &y)), || format!("#_{q}({a} + {b})"));
        }
    }

    for (p, q) in [(2u64, 2u64), (2, 4), (3, 3), (5, 5)] {
        let k = GaloisField::new(p, q).expect("field");
        for _ in 0..SERIES_PER_FIELD {
            let n = rng.gen_range(0..8);
            let terms: Vec<(i64, Fq)> = (0..n).map(|_| (rng.gen_range(-40..6), Fq(rng.gen_range(0..q)))).collect();
            let f = LaurentSeries::polynomial(&k, terms);
            let Some(r) = c.ok(reduce_with_witness(&k, &f), || format!("reduce over F_{q}")) else { continue };
            let again = reduce(&k, &r.class.lift(&k));
            c.check(again.as_ref() == Ok(&r.class), || format!("reduce not idempotent on {}", f.format(&k)));
            // the witness accounts for everything at exponents <= 0
            let diff = f.sub(&k, &r.class.lift(&k)).sub(&k, &r.witness.wp(&k));
            c.check(diff.part_below(1).is_zero_to_prec(), || format!("unsound witness for {}", f.format(&k)));
        }
    }
    c.finish(9)
}

/// Runs the selected criteria (all when `only` is empty) and reports them in the
/// fixed order of [`CRITERIA`]. The output depends only on `seed` and `only`.
pub fn run(seed: u64, only: &[String]) -> Result<SuiteReport, String> {
    for key in only {
        if !CRITERIA.iter().any(|(k, _)| k == key) {
            let known: Vec<_> = CRITERIA.iter().map(|(k, _)| *k).collect();
            return Err(format!("unknown criterion {key:?}; known: {}", known.join(", ")));
        }
    }
    let wanted = |key: &str| only.is_empty() || only.iter().any(|k| k == key);
    let grid = klt_grid(&[2, 3, 5]);
    let grid = &grid;

    type Job<'a> = Box<dyn FnOnce() -> Vec<CriterionReport> + Send + 'a>;
    let jobs: Vec<(bool, Job)> = vec![
        (wanted("examples"), Box::new(|| vec![examples()])),
        (wanted("euler"), Box::new(|| vec![euler(grid)])),
        (wanted("duality"), Box::new(|| vec![duality(grid)])),
        (wanted("pointcount"), Box::new(|| vec![pointcount(grid)])),
        (
            wanted("census") || wanted("jumps"),
            Box::new(|| {
                let (a, b) = census(2);
                vec![a, b]
            }),
        ),
        (wanted("invariants"), Box::new(|| vec![invariants()])),
        (wanted("pairs"), Box::new(|| vec![pairs()])),
        (wanted("properties"), Box::new(move || vec![properties(seed)])),
    ];
    let mut results: Vec<CriterionReport> = std::thread::scope(|s| {
        let handles: Vec<_> = jobs.into_iter().filter(|(w, _)| *w).map(|(_, f)| s.spawn(f)).collect();
        handles.into_iter().flat_map(|h| h.join().expect("criterion panicked")).collect()
    });
    results.retain(|r| wanted(&r.key));
    results.sort_by_key(|r| r.id);
    Ok(SuiteReport { seed, passed: results.iter().all(|r| r.passed), criteria: results })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_is_sorted_and_klt() {
        let g = klt_grid(&[2, 3, 5]);
        assert!(g.iter().all(|r| d_v(r) >= r.p()));
        assert!(g.contains(&rep(3, &[3])) && g.contains(&rep(2, &[2, 2])) && g.contains(&rep(5, &[5, 5, 5])));
        assert!(!g.contains(&rep(3, &[2, 2])));
    }

    #[test]
    fn only_filters_and_rejects_unknown_keys() {
        let r = run(1, &["pairs".to_string(), "examples".to_string()]).unwrap();
        let keys: Vec<_> = r.criteria.iter().map(|c| c.key.as_str()).collect();
        assert_eq!(keys, ["examples", "pairs"]);
        assert!(r.passed);
        assert!(run(1, &["nope".to_string()]).is_err());
    }
}
