//! Reduction of Laurent series modulo `wp` to representative normal form.

use std::collections::BTreeMap;

use super::field::{Fq, GaloisField};
use super::laurent::LaurentSeries;
use crate::error::{Error, Result};

/// `sum c_i t^(-i)` over indices `i > 0` prime to `p`, with no constant term.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct RepPoly {
    coeffs: BTreeMap<u64, Fq>,
}

impl RepPoly {
    pub fn zero() -> Self {
        RepPoly::default()
    }

    /// Builds from `(i, c)` pairs meaning `c t^(-i)`; zero coefficients are dropped.
    pub fn new(p: u64, terms: impl IntoIterator<Item = (u64, Fq)>) -> Result<Self> {
        let mut coeffs = BTreeMap::new();
        for (i, c) in terms {
            if i == 0 || i % p == 0 {
                return Err(Error::InvalidRepresentation(format!(
                    "index {i} of a representative polynomial must be positive and prime to {p}"
                )));
            }
            if !c.is_zero() {
                coeffs.insert(i, c);
            }
        }
        Ok(RepPoly { coeffs })
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `t^(-i)`.
    pub fn coeff(&self, i: u64) -> Fq {
        self.coeffs.get(&i).copied().unwrap_or(Fq::ZERO)
    }

    /// `(i, c)` pairs for the terms `c t^(-i)`, in increasing `i`.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (u64, Fq)> + '_ {
        self.coeffs.iter().map(|(i, c)| (*i, *c))
    }

    /// Largest index, 0 for the zero polynomial.
    pub fn jump(&self) -> u64 {
        self.coeffs.keys().next_back().copied().unwrap_or(0)
    }

    pub fn to_series(&self, field: &GaloisField) -> LaurentSeries {
        LaurentSeries::polynomial(field, self.terms().map(|(i, c)| (-(i as i64), c)))
    }

    pub fn format(&self, field: &GaloisField) -> String {
        self.to_series(field).format(field)
    }
}

/// A `Z/p`-cover of the punctured formal disk: a representative polynomial and a
/// class in `F_q / wp(F_q) = F_p`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ASCoverClass {
    pub rep: RepPoly,
    pub const_class: u64,
}

impl ASCoverClass {
    pub fn new(rep: RepPoly, const_class: u64) -> Self {
        ASCoverClass { rep, const_class }
    }

    pub fn is_trivial(&self) -> bool {
        self.rep.is_zero() && self.const_class == 0
    }

    pub fn jump(&self) -> u64 {
        ramification_jump(self)
    }

    /// `rep + c * theta` with `theta` the field's fixed trace-one element.
    pub fn lift(&self, field: &GaloisField) -> LaurentSeries {
        let c = field.scale(self.const_class, field.trace_one());
        self.rep.to_series(field).add_term(field, 0, c)
    }
}

/// Result of [`reduce_with_witness`]: `f - lift(class) - wp(witness)` has only
/// strictly positive exponents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduction {
    pub class: ASCoverClass,
    pub witness: LaurentSeries,
}

/// Class of `F_q / wp(F_q)`, realized by the absolute trace.
pub fn const_class(field: &GaloisField, c: Fq) -> u64 {
    field.trace(c)
}

pub fn ramification_jump(cl: &ASCoverClass) -> u64 {
    cl.rep.jump()
}

pub fn reduce(field: &GaloisField, f: &LaurentSeries) -> Result<ASCoverClass> {
    reduce_with_witness(field, f).map(|r| r.class)
}

pub fn reduce_with_witness(field: &GaloisField, f: &LaurentSeries) -> Result<Reduction> {
    if f.prec() < 0 {
        return Err(Error::InsufficientPrecision(format!(
            "series known only up to t^{}, the constant term is needed",
            f.prec()
        )));
    }
    let depth = f.valuation().map_or(0, |v| (-v).max(0)) as usize;
    let mut neg = vec![Fq::ZERO; depth + 1];
    for (k, c) in f.terms().take_while(|(k, _)| *k < 0) {
        neg[(-k) as usize] = c;
    }
    let mut wit = vec![Fq::ZERO; depth + 1];
    let rep = reduce_dense(field, &mut neg, Some(&mut wit))?;

    let f0 = f.coeff(0);
    let class = const_class(field, f0);
    let rest = field.sub(f0, field.scale(class, field.trace_one()));
    let w0 = field
        .wp_preimage(rest)
        .expect("trace-zero elements lie in the image of wp");

    let mut witness = LaurentSeries::monomial(0, w0);
    for (i, c) in wit.iter().enumerate().skip(1) {
        witness = witness.add_term(field, -(i as i64), *c);
    }
    Ok(Reduction { class: ASCoverClass::new(rep, class), witness })
}

/// Reduces the polar part `sum neg[i] t^(-i)` in place, returning the normal form.
/// When `witness` is given, the `b` with `b t^(-i)` subtracted under `wp` are
/// accumulated at index `i`.
pub(crate) fn reduce_dense(
    field: &GaloisField,
    neg: &mut [Fq],
    mut witness: Option<&mut [Fq]>,
) -> Result<RepPoly> {
    let p = field.characteristic() as usize;
    for i in (1..neg.len()).rev() {
        if i % p != 0 || neg[i].is_zero() {
            continue;
        }
        // f - wp(b t^(-i/p)) with b^p = neg[i] kills t^(-i) and adds b at t^(-i/p)
        let b = field.pth_root(neg[i]);
        neg[i] = Fq::ZERO;
        neg[i / p] = field.add(neg[i / p], b);
        if let Some(w) = witness.as_deref_mut() {
            w[i / p] = field.add(w[i / p], b);
        }
    }
    RepPoly::new(
        p as u64,
        neg.iter().enumerate().skip(1).filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i as u64, *c)),
    )
}

/// Parameters of the uniformizer `s = t^(l q - c) g^l` for jump `j`:
/// `j = p q - r` with `1 <= r <= p-1`, and `l r = p c + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct UniformizerParams {
    pub q: u64,
    pub r: u64,
    pub l: u64,
    pub c: u64,
}

impl UniformizerParams {
    /// Exponent of `t` in the uniformizer.
    pub fn t_exponent(&self) -> i64 {
        (self.l * self.q) as i64 - self.c as i64
    }
}

pub fn uniformizer_params(p: u64, j: u64) -> Result<UniformizerParams> {
    if j == 0 || j.is_multiple_of(p) {
        return Err(Error::InvalidJump { p, j });
    }
    let q = j.div_ceil(p);
    let r = p * q - j;
    let l = (1..p).find(|l| l * r % p == 1).expect("r is a unit mod p");
    let c = (l * r - 1) / p;
    Ok(UniformizerParams { q, r, l, c })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn series(field: &GaloisField, terms: &[(i64, i64)]) -> LaurentSeries {
        LaurentSeries::polynomial(field, terms.iter().map(|&(k, c)| (k, field.from_prime_field(c))))
    }

    #[test]
    fn const_class_examples() {
        let f2 = GaloisField::prime(2).unwrap();
        assert_eq!(const_class(&f2, Fq(0)), 0);
        assert_eq!(const_class(&f2, Fq(1)), 1);
        let f9 = GaloisField::new(3, 9).unwrap();
        for x in f9.elements() {
            assert_eq!(const_class(&f9, f9.wp(x)), 0);
        }
    }

    #[test]
    fn reduce_examples() {
        let f2 = GaloisField::prime(2).unwrap();
        let f3 = GaloisField::prime(3).unwrap();
        let t_inv = |f: &GaloisField| RepPoly::new(f.characteristic(), [(1, Fq(1))]).unwrap();

        assert_eq!(reduce(&f2, &LaurentSeries::exact_zero()).unwrap(), ASCoverClass::default());
        assert_eq!(
            reduce(&f2, &series(&f2, &[(-2, 1)])).unwrap(),
            ASCoverClass::new(t_inv(&f2), 0)
        );
        assert_eq!(
            reduce(&f3, &series(&f3, &[(-3, 1)])).unwrap(),
            ASCoverClass::new(t_inv(&f3), 0)
        );
        let tail = series(&f2, &[(0, 1), (1, 1), (2, 5)]);
        assert_eq!(reduce(&f2, &tail).unwrap(), ASCoverClass::new(RepPoly::zero(), 1));
    }

    #[test]
    fn reduce_needs_the_constant_term() {
        let f2 = GaloisField::prime(2).unwrap();
        let s = LaurentSeries::monomial(-3, Fq(1)).with_prec(-1);
        assert!(matches!(reduce(&f2, &s), Err(Error::InsufficientPrecision(_))));
    }

    #[test]
    fn nested_p_powers_over_f4() {
        // t^-4 -> t^-2 (coefficient sqrt) -> t^-1
        let f4 = GaloisField::new(2, 4).unwrap();
        let y = Fq(2);
        let r = reduce_with_witness(&f4, &LaurentSeries::monomial(-4, y)).unwrap();
        assert_eq!(r.class.rep.terms().collect::<Vec<_>>(), vec![(1, f4.pth_root(f4.pth_root(y)))]);
        let diff = LaurentSeries::monomial(-4, y)
            .sub(&f4, &r.class.lift(&f4))
            .sub(&f4, &r.witness.wp(&f4));
        assert!(diff.is_zero_to_prec());
    }

    #[test]
    fn jumps() {
        let f2 = GaloisField::prime(2).unwrap();
        assert_eq!(ASCoverClass::new(RepPoly::zero(), 1).jump(), 0);
        let r = RepPoly::new(2, [(3, Fq(1)), (1, Fq(1))]).unwrap();
        assert_eq!(ramification_jump(&ASCoverClass::new(r.clone(), 0)), 3);
        assert_eq!(r.format(&f2), "t^-3 + t^-1");
        assert!(RepPoly::new(2, [(2, Fq(1))]).is_err());
    }

    #[test]
    fn uniformizer_params_examples() {
        let up = |p, j| {
            let u = uniformizer_params(p, j).unwrap();
            (u.q, u.r, u.l, u.c)
        };
        assert_eq!(up(3, 2), (1, 1, 1, 0));
        assert_eq!(up(2, 1), (1, 1, 1, 0));
        assert_eq!(up(5, 3), (1, 2, 3, 1));
        for p in [2u64, 3, 5, 7] {
            for j in (1..40).filter(|j| j % p != 0) {
                let u = uniformizer_params(p, j).unwrap();
                assert_eq!(p as i64 * u.t_exponent() - (u.l * j) as i64, 1);
            }
        }
        assert!(uniformizer_params(3, 6).is_err());
    }
}
