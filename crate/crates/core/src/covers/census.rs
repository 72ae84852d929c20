//! Brute-force census of all polar parts `sum_{i=1}^J c_i t^(-i)` over `F_q`.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use serde::Serialize;

use super::count::{count_classes_up_to, count_rep_covers};
use super::field::{Fq, GaloisField};
use super::reduce::{reduce_dense, RepPoly};
use crate::error::{Error, Result};

pub const DEFAULT_LIMIT: u64 = 10_000_000;

#[derive(Debug, Clone)]
pub struct CensusOptions {
    /// Refuse to enumerate more than this many inputs.
    pub limit: u64,
    /// Worker threads; the report does not depend on this.
    pub workers: usize,
}

impl Default for CensusOptions {
    fn default() -> Self {
        CensusOptions { limit: DEFAULT_LIMIT, workers: 1 }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CensusForm {
    #[serde(skip)]
    pub rep: RepPoly,
    pub rep_display: String,
    pub jump: u64,
    pub fiber: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct CensusChecks {
    /// Every fiber has `q^floor(J/p)` elements.
    pub fibers_uniform: bool,
    /// Jump-`j` counts equal the stratum count formula for each `j <= J`.
    pub histogram_matches: bool,
    /// The number of normal forms is `q^(J - floor(J/p))`.
    pub total_matches: bool,
    /// `f - wp(witness)` equals the normal form for every input.
    pub witnesses_sound: bool,
    /// Reducing a normal form returns it unchanged.
    pub idempotent: bool,
}

impl CensusChecks {
    pub fn all(&self) -> bool {
        self.fibers_uniform
            && self.histogram_matches
            && self.total_matches
            && self.witnesses_sound
            && self.idempotent
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CensusReport {
    pub p: u64,
    pub q: u64,
    pub max_exp: u64,
    pub inputs: u64,
    pub normal_forms: Vec<CensusForm>,
    pub distinct: u64,
    pub expected_distinct: String,
    pub expected_fiber: u64,
    pub jump_histogram: BTreeMap<u64, u64>,
    pub expected_histogram: BTreeMap<u64, String>,
    pub checks: CensusChecks,
}

impl CensusReport {
    pub fn passed(&self) -> bool {
        self.checks.all()
    }
}

#[derive(Default)]
struct Partial {
    fibers: BTreeMap<RepPoly, u64>,
    unsound: u64,
    not_idempotent: u64,
}

impl Partial {
    fn merge(&mut self, other: Partial) {
        for (rep, n) in other.fibers {
            *self.fibers.entry(rep).or_default() += n;
        }
        self.unsound += other.unsound;
        self.not_idempotent += other.not_idempotent;
    }
}

fn scan(field: &GaloisField, big_j: usize, range: std::ops::Range<u64>) -> Partial {
    let q = field.order();
    let mut out = Partial::default();
    let mut input = vec![Fq::ZERO; big_j + 1];
    let mut neg = vec![Fq::ZERO; big_j + 1];
    let mut wit = vec![Fq::ZERO; big_j + 1];
    for n in range {
        let mut m = n;
        for c in input.iter_mut().skip(1) {
            *c = Fq(m % q);
            m /= q;
        }
        neg.copy_from_slice(&input);
        wit.fill(Fq::ZERO);
        let rep = reduce_dense(field, &mut neg, Some(&mut wit)).expect("indices are in range");

        if !witness_sound(field, &input, &wit, &rep) {
            out.unsound += 1;
        }
        let mut again = vec![Fq::ZERO; big_j + 1];
        for (i, c) in rep.terms() {
            again[i as usize] = c;
        }
        if reduce_dense(field, &mut again, None).ok().as_ref() != Some(&rep) {
            out.not_idempotent += 1;
        }
        *out.fibers.entry(rep).or_default() += 1;
    }
    out
}

/// Checks `f - wp(w) = rep` coefficientwise on the polar part.
fn witness_sound(field: &GaloisField, f: &[Fq], w: &[Fq], rep: &RepPoly) -> bool {
    let p = field.characteristic() as usize;
    let mut lhs = f.to_vec();
    for (i, &b) in w.iter().enumerate().skip(1) {
        if b.is_zero() {
            continue;
        }
        if i * p >= lhs.len() {
            return false;
        }
        lhs[i * p] = field.sub(lhs[i * p], field.frobenius(b));
        lhs[i] = field.add(lhs[i], b);
    }
    lhs.iter().enumerate().skip(1).all(|(i, c)| *c == rep.coeff(i as u64))
}

pub fn enumerate_covers(
    p: u64,
    q: u64,
    max_exp: u64,
    opts: &CensusOptions,
) -> Result<CensusReport> {
    let field = GaloisField::new(p, q)?;
    let size = BigUint::from(q).pow(max_exp as u32);
    let inputs = u64::try_from(&size)
        .ok()
        .filter(|n| *n <= opts.limit)
        .ok_or_else(|| Error::EnumerationTooLarge { size: size.to_string(), limit: opts.limit })?;

    let big_j = max_exp as usize;
    let workers = opts.workers.max(1).min(inputs.max(1) as usize) as u64;
    let chunk = inputs.div_ceil(workers);
    let mut total = Partial::default();
    std::thread::scope(|s| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                let field = &field;
                let range = (w * chunk).min(inputs)..((w + 1) * chunk).min(inputs);
                s.spawn(move || scan(field, big_j, range))
            })
            .collect();
        for h in handles {
            total.merge(h.join().expect("census worker panicked"));
        }
    });

    let expected_fiber = q.pow((max_exp / p) as u32);
    let mut jump_histogram = BTreeMap::new();
    let normal_forms: Vec<CensusForm> = total
        .fibers
        .iter()
        .map(|(rep, &fiber)| {
            *jump_histogram.entry(rep.jump()).or_insert(0) += 1;
            CensusForm { rep: rep.clone(), rep_display: rep.format(&field), jump: rep.jump(), fiber }
        })
        .collect();
    let mut expected_histogram = BTreeMap::new();
    for j in (0..=max_exp).filter(|j| *j == 0 || j % p != 0) {
        expected_histogram.insert(j, count_rep_covers(q, j)?);
    }
    let histogram_matches = expected_histogram.len() == jump_histogram.len()
        && expected_histogram
            .iter()
            .all(|(j, n)| jump_histogram.get(j).map(|&m| BigUint::from(m)) == Some(n.clone()));
    let expected_distinct = count_classes_up_to(q, max_exp)?;

    let checks = CensusChecks {
        fibers_uniform: normal_forms.iter().all(|f| f.fiber == expected_fiber),
        histogram_matches,
        total_matches: BigUint::from(normal_forms.len()) == expected_distinct,
        witnesses_sound: total.unsound == 0,
        idempotent: total.not_idempotent == 0,
    };
    Ok(CensusReport {
        p,
        q,
        max_exp,
        inputs,
        distinct: normal_forms.len() as u64,
        normal_forms,
        expected_distinct: expected_distinct.to_string(),
        expected_fiber,
        jump_histogram,
        expected_histogram: expected_histogram.into_iter().map(|(j, n)| (j, n.to_string())).collect(),
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn census(p: u64, q: u64, j: u64) -> CensusReport {
        enumerate_covers(p, q, j, &CensusOptions::default()).unwrap()
    }

    #[test]
    fn small_census_examples() {
        let r = census(2, 2, 2);
        let forms: Vec<_> = r.normal_forms.iter().map(|f| (f.rep_display.as_str(), f.fiber)).collect();
        assert_eq!(forms, vec![("0", 2), ("t^-1", 2)]);
        assert!(r.passed());

        let r = census(2, 2, 1);
        assert_eq!(r.distinct, 2);
        assert!(r.normal_forms.iter().all(|f| f.fiber == 1));

        let r = census(3, 3, 3);
        assert_eq!((r.distinct, r.expected_fiber), (9, 3));
        assert!(r.passed());
    }

    #[test]
    fn report_is_independent_of_workers() {
        let one = census(2, 4, 4);
        let many = enumerate_covers(2, 4, 4, &CensusOptions { workers: 5, ..Default::default() }).unwrap();
        assert_eq!(serde_json::to_string(&one).unwrap(), serde_json::to_string(&many).unwrap());
        assert!(one.passed());
    }

    #[test]
    fn guard() {
        let err = enumerate_covers(2, 2, 30, &CensusOptions::default()).unwrap_err();
        assert!(matches!(err, Error::EnumerationTooLarge { .. }));
        let small = CensusOptions { limit: 10, workers: 1 };
        assert!(enumerate_covers(3, 3, 3, &small).is_err());
    }
}
