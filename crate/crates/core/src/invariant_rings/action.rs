use num_bigint::BigUint;
use num_integer::binomial;

use super::poly::MultiPoly;
use crate::error::{Error, Result};

/// A linear action of `Z/p` given by the images of the variables under a generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupAction {
    images: Vec<MultiPoly>,
}

impl GroupAction {
    pub fn new(images: Vec<MultiPoly>) -> Result<Self> {
        let Some(first) = images.first() else {
            return Err(Error::InvalidRepresentation("action on zero variables".into()));
        };
        if images.len() != first.var_names().len() {
            return Err(Error::InvalidRepresentation(format!(
                "{} images for {} variables",
                images.len(),
                first.var_names().len()
            )));
        }
        if images.iter().any(|f| f.total_degree().unwrap_or(1) > 1) {
            return Err(Error::InvalidRepresentation("images must be linear".into()));
        }
        Ok(GroupAction { images })
    }

    /// The block action on `x_{l,1..d_l}`: `x_{l,i} -> x_{l,i} + x_{l,i+1}`, the last
    /// variable of each block fixed. Variables are named `x{l}{i}` (1-based), or
    /// `x{l}_{i}` once an index reaches 10.
    pub fn standard(p: u64, dims: &[u64]) -> Result<Self> {
        let sep = if dims.len() < 10 && dims.iter().all(|&d| d < 10) { "" } else { "_" };
        let names: Vec<String> = dims
            .iter()
            .enumerate()
            .flat_map(|(l, &d)| (1..=d).map(move |i| format!("x{}{sep}{i}", l + 1)))
            .collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        let vars = MultiPoly::variables(p, &refs);
        let mut images = Vec::with_capacity(vars.len());
        let mut start = 0;
        for &d in dims {
            for i in 0..d as usize {
                let v = &vars[start + i];
                images.push(if i + 1 < d as usize { v + &vars[start + i + 1] } else { v.clone() });
            }
            start += d as usize;
        }
        Self::new(images)
    }

    pub fn characteristic(&self) -> u64 {
        self.images[0].characteristic()
    }

    pub fn images(&self) -> &[MultiPoly] {
        &self.images
    }

    pub fn variables(&self) -> Vec<MultiPoly> {
        (0..self.images.len()).map(|i| self.images[0].var_like(i)).collect()
    }

    /// `sigma^k(f)`.
    pub fn apply(&self, f: &MultiPoly, k: u64) -> MultiPoly {
        (0..k).fold(f.clone(), |g, _| g.substitute(&self.images))
    }

    /// `sigma(f) - f`.
    pub fn delta(&self, f: &MultiPoly) -> MultiPoly {
        &self.apply(f, 1) - f
    }

    /// `sigma^p` fixes every variable.
    pub fn has_order_p(&self) -> bool {
        let p = self.characteristic();
        self.variables().iter().all(|x| self.apply(x, p) == *x)
    }

    pub fn is_invariant(&self, f: &MultiPoly) -> bool {
        self.apply(f, 1) == *f
    }
}

pub fn apply_action(act: &GroupAction, f: &MultiPoly, k: u64) -> MultiPoly {
    act.apply(f, k)
}

/// `prod_{k < p} sigma^k(f)`.
pub fn norm(act: &GroupAction, f: &MultiPoly) -> MultiPoly {
    let mut acc = f.constant_like(1);
    let mut g = f.clone();
    for _ in 0..act.characteristic() {
        acc = &acc * &g;
        g = act.apply(&g, 1);
    }
    acc
}

/// The `i`-th Catalan number `binom(2i, i)/(i+1)` reduced mod `p`.
pub fn catalan_mod(i: u64, p: u64) -> u64 {
    let c = binomial(BigUint::from(2 * i), BigUint::from(i)) / BigUint::from(i + 1);
    (c % BigUint::from(p)).try_into().expect("residue fits")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_action() {
        let act = GroupAction::standard(3, &[3]).unwrap();
        let x = act.variables();
        assert_eq!(apply_action(&act, &x[0], 1), &x[0] + &x[1]);
        assert_eq!(apply_action(&act, &x[0], 0), x[0]);
        assert!(act.has_order_p());
        // delta walks down the block and dies after d steps
        let mut f = x[0].clone();
        for next in x.iter().skip(1) {
            f = act.delta(&f);
            assert_eq!(&f, next);
        }
        assert!(act.delta(&f).is_zero());
    }

    #[test]
    fn norms() {
        let vs = MultiPoly::variables(2, &["x", "y"]);
        let act = GroupAction::new(vec![vs[0].clone(), &vs[0] + &vs[1]]).unwrap();
        assert_eq!(norm(&act, &vs[1]).to_string(), "x*y + y^2");
        assert_eq!(norm(&act, &vs[0].constant_like(1)), vs[0].constant_like(1));

        let vs = MultiPoly::variables(3, &["x", "y", "z"]);
        let (x, y, z) = (&vs[0], &vs[1], &vs[2]);
        let act = GroupAction::new(vec![x.clone(), y - x, &(x - y) + z]).unwrap();
        assert_eq!(apply_action(&act, y, 1), y - x);
        assert_eq!(norm(&act, y), &y.pow(3) - &(&x.pow(2) * y));
        assert!(act.has_order_p());
    }

    #[test]
    fn catalan() {
        assert_eq!(catalan_mod(1, 7), 1);
        assert_eq!(catalan_mod(2, 3), 2);
        assert_eq!(catalan_mod(4, 5), 4);
        assert_eq!(catalan_mod(0, 5), 1);
    }

    #[test]
    fn rejects_bad_actions() {
        let vs = MultiPoly::variables(3, &["x", "y"]);
        assert!(GroupAction::new(vec![vs[0].clone()]).is_err());
        assert!(GroupAction::new(vec![vs[0].pow(2), vs[1].clone()]).is_err());
    }
}
