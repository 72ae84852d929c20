use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

/// Sparse polynomial over `F_p` in a fixed, named list of variables.
///
/// Operands of binary operations must share `p` and the variable list; mixing
/// rings is a programming error and panics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly {
    p: u64,
    vars: Arc<[String]>,
    terms: BTreeMap<Vec<u32>, u64>,
}

impl MultiPoly {
    pub fn zero(p: u64, vars: &[&str]) -> Self {
        MultiPoly { p, vars: vars.iter().map(|v| v.to_string()).collect(), terms: BTreeMap::new() }
    }

    fn empty_like(&self) -> Self {
        MultiPoly { p: self.p, vars: Arc::clone(&self.vars), terms: BTreeMap::new() }
    }

    pub fn constant_like(&self, c: i64) -> Self {
        let mut out = self.empty_like();
        out.add_term(vec![0; self.vars.len()], c.rem_euclid(self.p as i64) as u64);
        out
    }

    /// The variable with index `i` in the same ring as `self`.
    pub fn var_like(&self, i: usize) -> Self {
        let mut e = vec![0; self.vars.len()];
        e[i] = 1;
        let mut out = self.empty_like();
        out.add_term(e, 1);
        out
    }

    /// All variables of the ring `F_p[vars]`.
    pub fn variables(p: u64, vars: &[&str]) -> Vec<Self> {
        let zero = Self::zero(p, vars);
        (0..vars.len()).map(|i| zero.var_like(i)).collect()
    }

    /// `c * prod vars^exps`.
    pub fn monomial_like(&self, c: i64, exps: &[u32]) -> Self {
        assert_eq!(exps.len(), self.vars.len(), "exponent vector length");
        let mut out = self.empty_like();
        out.add_term(exps.to_vec(), c.rem_euclid(self.p as i64) as u64);
        out
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn var_names(&self) -> &[String] {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], u64)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), *c))
    }

    pub fn coeff(&self, exps: &[u32]) -> u64 {
        self.terms.get(exps).copied().unwrap_or(0)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// The constant coefficient if the polynomial is constant.
    pub fn as_constant(&self) -> Option<u64> {
        match self.terms.len() {
            0 => Some(0),
            1 => self.terms.iter().next().filter(|(e, _)| e.iter().all(|&x| x == 0)).map(|(_, c)| *c),
            _ => None,
        }
    }

    fn add_term(&mut self, e: Vec<u32>, c: u64) {
        let c = c % self.p;
        if c == 0 {
            return;
        }
        let sum = (self.coeff(&e) + c) % self.p;
        if sum == 0 {
            self.terms.remove(&e);
        } else {
            self.terms.insert(e, sum);
        }
    }

    fn same_ring(&self, other: &Self) {
        assert!(
            self.p == other.p && self.vars == other.vars,
            "polynomials over different rings"
        );
    }

    pub fn scale(&self, c: i64) -> Self {
        let c = c.rem_euclid(self.p as i64) as u64;
        let mut out = self.empty_like();
        for (e, x) in &self.terms {
            out.add_term(e.clone(), x * c);
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = self.constant_like(1);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            k >>= 1;
        }
        acc
    }

    /// Substitutes `images[i]` for variable `i`; the images fix the target ring.
    pub fn substitute(&self, images: &[MultiPoly]) -> MultiPoly {
        assert_eq!(images.len(), self.vars.len(), "one image per variable");
        let target = images.first().map(|x| x.empty_like()).unwrap_or_else(|| self.empty_like());
        let mut out = target.clone();
        for (e, c) in &self.terms {
            let mut term = target.constant_like(*c as i64);
            for (img, &k) in images.iter().zip(e) {
                if k > 0 {
                    term = &term * &img.pow(k);
                }
            }
            out = &out + &term;
        }
        out
    }

    /// Formal partial derivative with respect to variable `i`.
    pub fn derivative(&self, i: usize) -> Self {
        let mut out = self.empty_like();
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[i] -= 1;
            out.add_term(e2, c * (e[i] as u64 % self.p));
        }
        out
    }

    /// Terms in graded-lex order: higher total degree first, then lexicographically
    /// larger exponent vectors first.
    pub fn sorted_terms(&self) -> Vec<(&[u32], u64)> {
        let mut ts: Vec<_> = self.terms().collect();
        ts.sort_by(|(a, _), (b, _)| grlex(b, a));
        ts
    }
}

fn grlex(a: &[u32], b: &[u32]) -> Ordering {
    let (da, db): (u32, u32) = (a.iter().sum(), b.iter().sum());
    da.cmp(&db).then_with(|| a.cmp(b))
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .sorted_terms()
            .into_iter()
            .map(|(e, c)| {
                let mut factors: Vec<String> = e
                    .iter()
                    .zip(self.vars.iter())
                    .filter(|(k, _)| **k > 0)
                    .map(|(k, v)| if *k == 1 { v.clone() } else { format!("{v}^{k}") })
                    .collect();
                if c != 1 || factors.is_empty() {
                    factors.insert(0, c.to_string());
                }
                factors.join("*")
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;

    fn add(self, other: &MultiPoly) -> MultiPoly {
        self.same_ring(other);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), *c);
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;

    fn neg(self) -> MultiPoly {
        self.scale(-1)
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;

    fn sub(self, other: &MultiPoly) -> MultiPoly {
        self + &(-other)
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;

    fn mul(self, other: &MultiPoly) -> MultiPoly {
        self.same_ring(other);
        let mut out = self.empty_like();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb % self.p);
            }
        }
        out
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for MultiPoly {
            type Output = MultiPoly;
            fn $m(self, other: MultiPoly) -> MultiPoly {
                (&self).$m(&other)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_mod_p() {
        let [x, y] = <[MultiPoly; 2]>::try_from(MultiPoly::variables(3, &["x", "y"])).unwrap();
        let f = &x + &y;
        assert_eq!(f.pow(3), &x.pow(3) + &y.pow(3));
        assert!((&f - &f).is_zero());
        assert_eq!((&x * &y).scale(4).to_string(), "x*y");
        assert_eq!((&(&x.pow(2) * &y) - &y.scale(2)).to_string(), "x^2*y + y");
        assert_eq!(x.constant_like(-1).to_string(), "2");
    }

    #[test]
    fn grlex_display() {
        let vs = MultiPoly::variables(5, &["x", "y", "z"]);
        let f = &(&(&vs[2].pow(2) + &vs[0]) + &(&vs[0] * &vs[1]).scale(3)) + &vs[1].pow(2);
        assert_eq!(f.to_string(), "3*x*y + y^2 + z^2 + x");
    }

    #[test]
    fn substitution_and_derivative() {
        let vs = MultiPoly::variables(7, &["x", "y"]);
        let (x, y) = (&vs[0], &vs[1]);
        let f = &x.pow(3) + &(x * y).scale(2);
        let g = f.substitute(&[y.clone(), x.clone()]);
        assert_eq!(g, &y.pow(3) + &(x * y).scale(2));
        assert_eq!(f.derivative(0), &x.pow(2).scale(3) + &y.scale(2));
        // d/dx x^7 = 0 in characteristic 7
        assert!(x.pow(7).derivative(0).is_zero());
    }
}
