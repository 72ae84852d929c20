use std::collections::BTreeMap;

use super::field::{Fq, GaloisField};

/// Sentinel precision for series that are exact Laurent polynomials.
pub const EXACT: i64 = i64::MAX / 4;

/// Truncated Laurent series over `F_q`: coefficients are known for every exponent
/// `<= prec` and unknown above. Sparse, with no stored zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LaurentSeries {
    coeffs: BTreeMap<i64, Fq>,
    prec: i64,
}

fn clamp(x: i64) -> i64 {
    x.min(EXACT)
}

impl LaurentSeries {
    pub fn zero(prec: i64) -> Self {
        LaurentSeries { coeffs: BTreeMap::new(), prec }
    }

    pub fn exact_zero() -> Self {
        Self::zero(EXACT)
    }

    pub fn monomial(k: i64, c: Fq) -> Self {
        let mut s = Self::exact_zero();
        s.set(k, c);
        s
    }

    /// Exact Laurent polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn polynomial(field: &GaloisField, terms: impl IntoIterator<Item = (i64, Fq)>) -> Self {
        let mut s = Self::exact_zero();
        for (k, c) in terms {
            let cur = s.coeff(k);
            s.set(k, field.add(cur, c));
        }
        s
    }

    pub fn prec(&self) -> i64 {
        self.prec
    }

    pub fn is_exact(&self) -> bool {
        self.prec >= EXACT
    }

    pub fn coeff(&self, k: i64) -> Fq {
        self.coeffs.get(&k).copied().unwrap_or(Fq::ZERO)
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, Fq)> + '_ {
        self.coeffs.iter().map(|(k, c)| (*k, *c))
    }

    fn set(&mut self, k: i64, c: Fq) {
        if k > self.prec {
            return;
        }
        if c.is_zero() {
            self.coeffs.remove(&k);
        } else {
            self.coeffs.insert(k, c);
        }
    }

    /// Adds `c t^k`; ignored above the precision.
    pub fn add_term(mut self, field: &GaloisField, k: i64, c: Fq) -> Self {
        let cur = self.coeff(k);
        self.set(k, field.add(cur, c));
        self
    }

    /// No nonzero coefficient at exponents `<= prec`.
    pub fn is_zero_to_prec(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Order of the lowest known nonzero coefficient.
    pub fn valuation(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    /// Lower bound on the order: the valuation, or `prec + 1` when nothing nonzero
    /// is known.
    fn order_bound(&self) -> i64 {
        self.valuation().unwrap_or(clamp(self.prec.saturating_add(1)))
    }

    pub fn truncated(&self, prec: i64) -> Self {
        let prec = prec.min(self.prec);
        LaurentSeries {
            coeffs: self.coeffs.range(..=prec).map(|(k, c)| (*k, *c)).collect(),
            prec,
        }
    }

    pub fn with_prec(mut self, prec: i64) -> Self {
        self.prec = prec.min(self.prec);
        self.coeffs.retain(|k, _| *k <= prec);
        self
    }

    /// Terms with exponent strictly below `bound`.
    pub fn part_below(&self, bound: i64) -> Self {
        LaurentSeries {
            coeffs: self.coeffs.range(..bound).map(|(k, c)| (*k, *c)).collect(),
            prec: EXACT,
        }
    }

    pub fn add(&self, field: &GaloisField, other: &Self) -> Self {
        let mut out = LaurentSeries::zero(self.prec.min(other.prec));
        for (k, c) in self.coeffs.range(..=out.prec) {
            out.set(*k, *c);
        }
        for (k, c) in other.coeffs.range(..=out.prec) {
            let cur = out.coeff(*k);
            out.set(*k, field.add(cur, *c));
        }
        out
    }

    pub fn neg(&self, field: &GaloisField) -> Self {
        LaurentSeries {
            coeffs: self.coeffs.iter().map(|(k, c)| (*k, field.neg(*c))).collect(),
            prec: self.prec,
        }
    }

    pub fn sub(&self, field: &GaloisField, other: &Self) -> Self {
        self.add(field, &other.neg(field))
    }

    pub fn scale(&self, field: &GaloisField, c: Fq) -> Self {
        let mut out = LaurentSeries::zero(self.prec);
        for (k, x) in &self.coeffs {
            out.set(*k, field.mul(c, *x));
        }
        out
    }

    pub fn scale_int(&self, field: &GaloisField, c: u64) -> Self {
        self.scale(field, field.from_prime_field(c as i64))
    }

    /// Multiplication by `t^n`.
    pub fn shift(&self, n: i64) -> Self {
        LaurentSeries {
            coeffs: self.coeffs.iter().map(|(k, c)| (k + n, *c)).collect(),
            prec: if self.is_exact() { EXACT } else { clamp(self.prec + n) },
        }
    }

    /// Product; the result is exact up to `min(prec_a + ord_b, prec_b + ord_a)`.
    pub fn mul(&self, field: &GaloisField, other: &Self) -> Self {
        let known = |a: &Self, b: &Self| {
            if a.is_exact() {
                EXACT
            } else {
                clamp(a.prec.saturating_add(b.order_bound()))
            }
        };
        let prec = known(self, other).min(known(other, self));
        let mut out = LaurentSeries::zero(prec);
        for (a, ca) in &self.coeffs {
            for (b, cb) in &other.coeffs {
                let k = a + b;
                if k > prec {
                    continue;
                }
                let cur = out.coeff(k);
                out.set(k, field.add(cur, field.mul(*ca, *cb)));
            }
        }
        out
    }

    /// `x^p`: coefficients are raised to the p-th power and exponents scaled by `p`.
    pub fn frobenius(&self, field: &GaloisField) -> Self {
        let p = field.characteristic() as i64;
        let prec = if self.is_exact() {
            EXACT
        } else {
            clamp(p.saturating_mul(self.prec.saturating_add(1)) - 1)
        };
        let mut out = LaurentSeries::zero(prec);
        for (k, c) in &self.coeffs {
            out.set(k * p, field.frobenius(*c));
        }
        out
    }

    /// Artin-Schreier operator `x^p - x`.
    pub fn wp(&self, field: &GaloisField) -> Self {
        self.frobenius(field).sub(field, self)
    }

    pub fn format(&self, field: &GaloisField) -> String {
        let mut parts = Vec::new();
        for (k, c) in self.terms() {
            let coef = field.format_element(c);
            let mono = match k {
                0 => String::new(),
                1 => "t".to_string(),
                k => format!("t^{k}"),
            };
            parts.push(match (coef.as_str(), mono.is_empty()) {
                (_, true) => coef,
                ("1", false) => mono,
                (c, false) if c.contains('+') => format!("({c})*{mono}"),
                (c, false) => format!("{c}*{mono}"),
            });
        }
        let body = if parts.is_empty() { "0".to_string() } else { parts.join(" + ") };
        if self.is_exact() {
            body
        } else {
            format!("{body} + O(t^{})", self.prec + 1)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wp_of_inverse_t_over_f2() {
        let f = GaloisField::prime(2).unwrap();
        let s = LaurentSeries::monomial(-1, Fq(1));
        let expect = LaurentSeries::polynomial(&f, [(-2, Fq(1)), (-1, Fq(1))]);
        assert_eq!(s.wp(&f), expect);
        assert_eq!(LaurentSeries::exact_zero().wp(&f), LaurentSeries::exact_zero());
    }

    #[test]
    fn precision_tracking() {
        let f = GaloisField::prime(3).unwrap();
        // (t^-1 + O(t^3)) * (t^2 + O(t^5)): known up to min(2 + 2, 4 - 1) = 3
        let a = LaurentSeries::monomial(-1, Fq(1)).with_prec(2);
        let b = LaurentSeries::monomial(2, Fq(1)).with_prec(4);
        let c = a.mul(&f, &b);
        assert_eq!(c.prec(), 3);
        assert_eq!(c.coeff(1), Fq(1));
        // frobenius of a series known to t^2 is known to t^8
        assert_eq!(a.frobenius(&f).prec(), 8);
        // wp keeps the input precision for prec >= -1
        assert_eq!(a.wp(&f).prec(), 2);
        let neg = LaurentSeries::monomial(-3, Fq(1)).with_prec(-2);
        assert_eq!(neg.frobenius(&f).prec(), -4);
        assert_eq!(neg.wp(&f).prec(), -4);
    }

    #[test]
    fn zero_series_product_precision() {
        let f = GaloisField::prime(2).unwrap();
        let z = LaurentSeries::zero(4);
        let m = LaurentSeries::monomial(-2, Fq(1));
        let prod = z.mul(&f, &m);
        assert!(prod.is_zero_to_prec());
        assert_eq!(prod.prec(), 2);
    }

    #[test]
    fn formatting() {
        let f = GaloisField::new(2, 4).unwrap();
        let s = LaurentSeries::polynomial(&f, [(-3, Fq(3)), (0, Fq(1))]);
        assert_eq!(s.format(&f), "(1+y)*t^-3 + 1");
        assert_eq!(LaurentSeries::monomial(1, Fq(2)).with_prec(3).format(&f), "y*t + O(t^4)");
    }
}
