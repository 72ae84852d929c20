//! Arithmetic in the integral closure `k((t))[g] / (g^p - g + f)` of a ramified
//! cover, used as an independent check of the ramification jump.

use std::sync::Arc;

use super::field::{Fq, GaloisField};
use super::laurent::LaurentSeries;
use super::reduce::{uniformizer_params, ASCoverClass};
use crate::error::{Error, Result};

/// The cover ring attached to a class with jump `j > 0`.
#[derive(Debug)]
pub struct CoverRing {
    field: GaloisField,
    class: ASCoverClass,
    f: LaurentSeries,
    j: u64,
}

impl CoverRing {
    pub fn new(field: GaloisField, class: ASCoverClass) -> Result<Arc<Self>> {
        let j = class.jump();
        if j == 0 {
            return Err(Error::Unramified);
        }
        let f = class.lift(&field);
        Ok(Arc::new(CoverRing { field, class, f, j }))
    }

    pub fn field(&self) -> &GaloisField {
        &self.field
    }

    pub fn class(&self) -> &ASCoverClass {
        &self.class
    }

    pub fn jump(&self) -> u64 {
        self.j
    }

    fn p(&self) -> usize {
        self.field.characteristic() as usize
    }
}

/// `sum a_i g^i` for `i < p`, each `a_i` a truncated Laurent series.
#[derive(Debug, Clone)]
pub struct OEElement {
    ring: Arc<CoverRing>,
    comps: Vec<LaurentSeries>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OEOp {
    Add,
    Sub,
    Mul,
    Sigma,
    Delta,
}

impl OEElement {
    pub fn new(ring: &Arc<CoverRing>, mut comps: Vec<LaurentSeries>) -> Result<Self> {
        let p = ring.p();
        if comps.len() > p {
            return Err(Error::InvalidRepresentation(format!(
                "{} components given, the basis has {p} elements",
                comps.len()
            )));
        }
        comps.resize(p, LaurentSeries::exact_zero());
        Ok(OEElement { ring: Arc::clone(ring), comps })
    }

    /// `a g^i`.
    pub fn term(ring: &Arc<CoverRing>, i: usize, a: LaurentSeries) -> Result<Self> {
        let mut comps = vec![LaurentSeries::exact_zero(); i + 1];
        comps[i] = a;
        Self::new(ring, comps)
    }

    /// `c t^n g^i`.
    pub fn monomial(ring: &Arc<CoverRing>, i: usize, n: i64, c: Fq) -> Result<Self> {
        Self::term(ring, i, LaurentSeries::monomial(n, c))
    }

    pub fn ring(&self) -> &Arc<CoverRing> {
        &self.ring
    }

    pub fn comps(&self) -> &[LaurentSeries] {
        &self.comps
    }

    /// Truncates every component to exponents `<= prec`.
    pub fn with_prec(mut self, prec: i64) -> Self {
        self.comps = self.comps.into_iter().map(|a| a.with_prec(prec)).collect();
        self
    }

    fn same_ring(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::InvalidRepresentation(
                "elements belong to different cover rings".into(),
            ))
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        let k = &self.ring.field;
        let comps = self.comps.iter().zip(&other.comps).map(|(a, b)| a.add(k, b)).collect();
        Ok(OEElement { ring: Arc::clone(&self.ring), comps })
    }

    pub fn neg(&self) -> Self {
        let k = &self.ring.field;
        OEElement {
            ring: Arc::clone(&self.ring),
            comps: self.comps.iter().map(|a| a.neg(k)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        let k = &self.ring.field;
        let p = self.ring.p();
        let mut prod = vec![LaurentSeries::exact_zero(); 2 * p - 1];
        for (i, a) in self.comps.iter().enumerate() {
            for (j, b) in other.comps.iter().enumerate() {
                prod[i + j] = prod[i + j].add(k, &a.mul(k, b));
            }
        }
        // g^(p+m) = g^(m+1) - f g^m, from the top degree down
        for d in (p..2 * p - 1).rev() {
            let top = std::mem::replace(&mut prod[d], LaurentSeries::exact_zero());
            let m = d - p;
            prod[m + 1] = prod[m + 1].add(k, &top);
            prod[m] = prod[m].sub(k, &top.mul(k, &self.ring.f));
        }
        prod.truncate(p);
        Ok(OEElement { ring: Arc::clone(&self.ring), comps: prod })
    }

    pub fn pow(&self, n: u32) -> Result<Self> {
        let mut acc = OEElement::term(&self.ring, 0, LaurentSeries::monomial(0, Fq(1)))?;
        for _ in 0..n {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// The generator of `Z/p`, acting by `g -> g + 1`.
    pub fn sigma(&self) -> Self {
        let k = &self.ring.field;
        let p = self.ring.p();
        let mut out = vec![LaurentSeries::exact_zero(); p];
        for (i, a) in self.comps.iter().enumerate() {
            // (g+1)^i = sum C(i, m) g^m
            let mut binom = 1u64;
            for (m, slot) in out.iter_mut().enumerate().take(i + 1) {
                if m > 0 {
                    binom = binom * (i - m + 1) as u64 / m as u64;
                }
                let c = binom % p as u64;
                if c != 0 {
                    *slot = slot.add(k, &a.scale_int(k, c));
                }
            }
        }
        OEElement { ring: Arc::clone(&self.ring), comps: out }
    }

    /// `sigma - id`.
    pub fn delta(&self) -> Self {
        self.sigma().sub(self).expect("same ring")
    }

    /// Normalized valuation of the cover: `v(g^i t^n) = n p - i j`.
    pub fn valuation(&self) -> Result<i64> {
        let p = self.ring.p() as i64;
        let j = self.ring.j as i64;
        let mut known: Option<i64> = None;
        let mut bound: Option<i64> = None;
        for (i, a) in self.comps.iter().enumerate() {
            let shift = i as i64 * j;
            match a.valuation() {
                Some(o) => {
                    let v = p * o - shift;
                    known = Some(known.map_or(v, |k| k.min(v)));
                }
                None if a.is_exact() => {}
                None => {
                    let b = p * (a.prec() + 1) - shift;
                    bound = Some(bound.map_or(b, |x| x.min(b)));
                }
            }
        }
        match (known, bound) {
            (Some(v), Some(b)) if b <= v => Err(Error::ZeroOrBelowPrecision),
            (Some(v), _) => Ok(v),
            (None, _) => Err(Error::ZeroOrBelowPrecision),
        }
    }
}

pub fn oe_arith(x: &OEElement, y: Option<&OEElement>, op: OEOp) -> Result<OEElement> {
    let need = || {
        y.ok_or_else(|| Error::InvalidRepresentation(format!("{op:?} needs a second operand")))
    };
    match op {
        OEOp::Add => x.add(need()?),
        OEOp::Sub => x.sub(need()?),
        OEOp::Mul => x.mul(need()?),
        OEOp::Sigma => Ok(x.sigma()),
        OEOp::Delta => Ok(x.delta()),
    }
}

pub fn oe_valuation(x: &OEElement) -> Result<i64> {
    x.valuation()
}

/// Default precision for [`verify_jump`].
pub fn default_jump_prec(j: u64) -> i64 {
    2 * (j as i64 + 1) + 2
}

/// Valuations of the uniformizer `s` and of `sigma(s) - s`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct JumpWitness {
    pub v_s: i64,
    pub v_delta_s: i64,
}

/// Builds the uniformizer `s = t^(l q - c) g^l` and measures `v(s)` and
/// `v(sigma(s) - s)` with coefficients tracked up to `t^prec`.
pub fn jump_witness(field: &GaloisField, cl: &ASCoverClass, prec: i64) -> Result<JumpWitness> {
    let ring = CoverRing::new(field.clone(), cl.clone())?;
    let params = uniformizer_params(field.characteristic(), ring.j)?;
    let s = OEElement::monomial(&ring, params.l as usize, params.t_exponent(), Fq(1))?
        .with_prec(prec);
    let insufficient = |what: &'static str| {
        move |e: Error| match e {
            Error::ZeroOrBelowPrecision => Error::InsufficientPrecision(format!(
                "valuation of {what} not resolved with coefficients up to t^{prec}"
            )),
            e => e,
        }
    };
    let v_s = s.valuation().map_err(insufficient("s"))?;
    let v_delta_s = s.delta().valuation().map_err(insufficient("sigma(s) - s"))?;
    Ok(JumpWitness { v_s, v_delta_s })
}

/// True iff `v(s) = 1` and `v(sigma(s) - s) = j + 1`.
pub fn verify_jump(field: &GaloisField, cl: &ASCoverClass, prec: Option<i64>) -> Result<bool> {
    let j = cl.jump();
    let w = jump_witness(field, cl, prec.unwrap_or_else(|| default_jump_prec(j)))?;
    Ok(w.v_s == 1 && w.v_delta_s == j as i64 + 1)
}

#[cfg(test)]
mod tests {
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    use super::*;
    use crate::covers::reduce::RepPoly;

    fn ring(p: u64, q: u64, terms: &[(u64, u64)]) -> Arc<CoverRing> {
        let k = GaloisField::new(p, q).unwrap();
        let rep = RepPoly::new(p, terms.iter().map(|&(i, c)| (i, Fq(c)))).unwrap();
        CoverRing::new(k, ASCoverClass::new(rep, 0)).unwrap()
    }

    #[test]
    fn sigma_and_delta() {
        let r = ring(3, 3, &[(2, 1)]);
        let g = OEElement::monomial(&r, 1, 0, Fq(1)).unwrap();
        let one = OEElement::monomial(&r, 0, 0, Fq(1)).unwrap();
        let sg = g.sigma();
        assert_eq!(sg.comps()[0], one.comps()[0]);
        assert_eq!(sg.comps()[1], g.comps()[1]);
        // delta(g h) = h for h in k((t))
        let h = LaurentSeries::polynomial(r.field(), [(-1, Fq(2)), (4, Fq(1))]);
        let gh = OEElement::term(&r, 1, h.clone()).unwrap();
        let d = gh.delta();
        assert_eq!(d.comps()[0], h);
        assert!(d.comps()[1].is_zero_to_prec() && d.comps()[2].is_zero_to_prec());
    }

    #[test]
    fn defining_relation() {
        // g * g^(p-1) = g - f
        let r = ring(3, 3, &[(2, 1), (1, 2)]);
        let g = OEElement::monomial(&r, 1, 0, Fq(1)).unwrap();
        let g2 = OEElement::monomial(&r, 2, 0, Fq(1)).unwrap();
        let prod = g.mul(&g2).unwrap();
        let k = r.field();
        assert_eq!(prod.comps()[1], LaurentSeries::monomial(0, Fq(1)));
        assert_eq!(prod.comps()[0], r.class().lift(k).neg(k));
        assert!(prod.comps()[2].is_zero_to_prec());
    }

    #[test]
    fn valuation_examples() {
        let r = ring(2, 2, &[(1, 1)]);
        assert_eq!(OEElement::monomial(&r, 1, 0, Fq(1)).unwrap().valuation().unwrap(), -1);
        let r = ring(5, 5, &[(3, 1)]);
        assert_eq!(OEElement::monomial(&r, 2, 1, Fq(1)).unwrap().valuation().unwrap(), -1);
        let r = ring(3, 3, &[(2, 1)]);
        assert_eq!(OEElement::monomial(&r, 1, 1, Fq(1)).unwrap().valuation().unwrap(), 1);
        let zero = OEElement::new(&r, vec![]).unwrap();
        assert_eq!(zero.valuation(), Err(Error::ZeroOrBelowPrecision));
        let unresolved = OEElement::monomial(&r, 0, 5, Fq(1)).unwrap().with_prec(1);
        let mixed = unresolved.add(&OEElement::monomial(&r, 1, 2, Fq(1)).unwrap().with_prec(1));
        assert_eq!(mixed.unwrap().valuation(), Err(Error::ZeroOrBelowPrecision));
    }

    #[test]
    fn verify_jump_examples() {
        let k2 = GaloisField::prime(2).unwrap();
        let cl = ASCoverClass::new(RepPoly::new(2, [(1, Fq(1))]).unwrap(), 0);
        assert_eq!(jump_witness(&k2, &cl, 6).unwrap(), JumpWitness { v_s: 1, v_delta_s: 2 });
        assert!(verify_jump(&k2, &cl, None).unwrap());

        let k3 = GaloisField::prime(3).unwrap();
        let cl = ASCoverClass::new(RepPoly::new(3, [(2, Fq(1))]).unwrap(), 0);
        assert_eq!(jump_witness(&k3, &cl, 8).unwrap().v_delta_s, 3);

        let unramified = ASCoverClass::new(RepPoly::zero(), 1);
        assert_eq!(verify_jump(&k2, &unramified, None), Err(Error::Unramified));

        assert!(matches!(
            verify_jump(&k3, &cl, Some(-3)),
            Err(Error::InsufficientPrecision(_))
        ));
    }

    #[test]
    fn uniformizer_powers_have_valuation_k() {
        for (p, q, terms) in [(2u64, 4u64, vec![(5u64, 2u64), (1, 1)]), (5, 5, vec![(3, 1)]), (3, 9, vec![(7, 4), (4, 1)])] {
            let r = ring(p, q, &terms);
            let u = uniformizer_params(p, r.jump()).unwrap();
            let s = OEElement::monomial(&r, u.l as usize, u.t_exponent(), Fq(1)).unwrap();
            for k in 1..=5u32 {
                assert_eq!(s.pow(k).unwrap().valuation().unwrap(), k as i64);
            }
        }
    }

    #[test]
    fn delta_raises_valuation_by_the_jump() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for (p, q, terms) in [(2u64, 2u64, vec![(3u64, 1u64)]), (3, 3, vec![(5, 2), (1, 1)]), (5, 5, vec![(2, 3)]), (2, 4, vec![(1, 3)])] {
            let r = ring(p, q, &terms);
            let j = r.jump() as i64;
            let mut checked = 0;
            while checked < 40 {
                let comps: Vec<LaurentSeries> = (0..p)
                    .map(|_| {
                        let terms = (0..3).map(|_| (rng.gen_range(-4..6), Fq(rng.gen_range(0..q))));
                        LaurentSeries::polynomial(r.field(), terms).with_prec(12)
                    })
                    .collect();
                let h = OEElement::new(&r, comps).unwrap();
                let Ok(v) = h.valuation() else { continue };
                if v.rem_euclid(p as i64) == 0 {
                    continue;
                }
                assert_eq!(h.delta().valuation().unwrap(), v + j);
                checked += 1;
            }
        }
    }
}
