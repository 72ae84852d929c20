use serde::Serialize;

use super::action::{catalan_mod, norm, GroupAction};
use super::poly::MultiPoly;
use crate::arith::is_prime;
use crate::error::{Error, Result};

/// Which quadratic invariant plays the role of `d` in the `V_3` relation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum QuadraticForm {
    /// `y^2 - 2xz - xy`, invariant in every characteristic.
    Invariant,
    /// `y^2 + xz - xy`, invariant only in characteristic 3.
    Literal,
}

impl QuadraticForm {
    fn build(self, x: &MultiPoly, y: &MultiPoly, z: &MultiPoly) -> MultiPoly {
        let xz = x * z;
        let base = &y.pow(2) - &(x * y);
        match self {
            QuadraticForm::Invariant => &base - &xz.scale(2),
            QuadraticForm::Literal => &base + &xz,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct V3Report {
    pub p: u64,
    pub ok: bool,
    pub quadratic_form: QuadraticForm,
    pub d: String,
    /// The relation in `X, Y, Z, W`.
    pub relation: String,
    /// `X, N_y, N_z, d` are all invariant.
    pub generators_invariant: bool,
    pub literal_form_invariant: bool,
    pub residual: String,
}

fn v3_action(p: u64) -> (GroupAction, [MultiPoly; 3]) {
    let vs = MultiPoly::variables(p, &["x", "y", "z"]);
    let (x, y, z) = (&vs[0], &vs[1], &vs[2]);
    let act = GroupAction::new(vec![x.clone(), y - x, &(x - y) + z]).expect("linear");
    (act, [x.clone(), y.clone(), z.clone()])
}

/// `2X^p Z + W^p - Y^2 + sum_{i=2}^{(p+1)/2} (-1)^i C_{i-1} X^(2(p-i)) W^i` in `F_p[X,Y,Z,W]`.
pub fn v3_relation(p: u64) -> MultiPoly {
    let r = MultiPoly::zero(p, &["X", "Y", "Z", "W"]);
    let pi = p as u32;
    let mut rel = &(&r.monomial_like(2, &[pi, 0, 1, 0]) + &r.monomial_like(1, &[0, 0, 0, pi]))
        - &r.monomial_like(1, &[0, 2, 0, 0]);
    for i in 2..=p.div_ceil(2) {
        let sign = if i % 2 == 0 { 1 } else { -1 };
        let c = sign * catalan_mod(i - 1, p) as i64;
        rel = &rel + &r.monomial_like(c, &[2 * (pi - i as u32), 0, 0, i as u32]);
    }
    rel
}

/// Substitutes `X = x, Y = N(y), Z = N(z), W = d` into `relation`.
pub fn check_v3(p: u64, relation: &MultiPoly, form: QuadraticForm) -> Result<V3Report> {
    if p < 3 || !is_prime(p) {
        return Err(Error::InvalidRepresentation(format!("p = {p} must be an odd prime")));
    }
    let (act, [x, y, z]) = v3_action(p);
    let ny = norm(&act, &y);
    let nz = norm(&act, &z);
    let d = form.build(&x, &y, &z);
    let generators_invariant = [&x, &ny, &nz, &d].iter().all(|g| act.is_invariant(g));
    let literal_form_invariant = act.is_invariant(&QuadraticForm::Literal.build(&x, &y, &z));
    let residual = relation.substitute(&[x, ny, nz, d.clone()]);
    Ok(V3Report {
        p,
        ok: residual.is_zero(),
        quadratic_form: form,
        d: d.to_string(),
        relation: relation.to_string(),
        generators_invariant,
        literal_form_invariant,
        residual: residual.to_string(),
    })
}

pub fn verify_v3_relation(p: u64) -> Result<V3Report> {
    check_v3(p, &v3_relation(p), QuadraticForm::Invariant)
}

/// The five generators `V, W, X, Y, Z` of the invariants of `V_2 + V_2` in characteristic 2.
#[derive(Debug, Clone)]
pub struct V2V2Generators {
    pub action: GroupAction,
    pub gens: [MultiPoly; 5],
}

impl V2V2Generators {
    /// `V = x12, W = x22, X = N(x11), Y = N(x21), Z = x11 x22 + x21 x12`.
    pub fn standard() -> Self {
        let action = GroupAction::standard(2, &[2, 2]).expect("valid blocks");
        let v = action.variables();
        let (x11, x12, x21, x22) = (&v[0], &v[1], &v[2], &v[3]);
        let gens = [
            x12.clone(),
            x22.clone(),
            norm(&action, x11),
            norm(&action, x21),
            &(x11 * x22) + &(x21 * x12),
        ];
        V2V2Generators { action, gens }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct V2V2Report {
    pub ok: bool,
    pub invariance_ok: bool,
    pub relation: String,
    pub assignment: Vec<(String, String)>,
    pub residual: String,
}

/// `W^2 X + V^2 Y + V W Z + Z^2` in `F_2[V,W,X,Y,Z]`.
pub fn v2v2_relation() -> MultiPoly {
    let r = MultiPoly::zero(2, &["V", "W", "X", "Y", "Z"]);
    [[0, 2, 1, 0, 0], [2, 0, 0, 1, 0], [1, 1, 0, 0, 1], [0, 0, 0, 0, 2]]
        .iter()
        .map(|e| r.monomial_like(1, e))
        .fold(r.clone(), |acc, m| &acc + &m)
}

pub fn check_v2v2(relation: &MultiPoly, g: &V2V2Generators) -> V2V2Report {
    let invariance_ok = g.gens.iter().all(|f| g.action.is_invariant(f));
    let residual = relation.substitute(&g.gens);
    let assignment = ["V", "W", "X", "Y", "Z"]
        .iter()
        .zip(&g.gens)
        .map(|(n, f)| (n.to_string(), f.to_string()))
        .collect();
    V2V2Report {
        ok: residual.is_zero(),
        invariance_ok,
        relation: relation.to_string(),
        assignment,
        residual: residual.to_string(),
    }
}

pub fn verify_v2v2_relation() -> V2V2Report {
    check_v2v2(&v2v2_relation(), &V2V2Generators::standard())
}

#[derive(Debug, Clone, Serialize)]
pub struct ReflectionReport {
    pub p: u64,
    pub d: u64,
    pub invariance_ok: bool,
    pub det_ok: bool,
    pub generators: Vec<String>,
    pub determinant: String,
}

/// The reflection action `x -> x + y` on `F_p[x, y, z_1, ..., z_{d-2}]`, with the
/// generators `x^p - x y^(p-1), y, z_1, ...` of its invariant ring.
pub fn reflection_setup(p: u64, d: u64) -> Result<(GroupAction, Vec<MultiPoly>)> {
    if !is_prime(p) {
        return Err(Error::InvalidRepresentation(format!("p = {p} is not prime")));
    }
    if d < 2 {
        return Err(Error::InvalidRepresentation(format!("dimension {d} must be at least 2")));
    }
    let names: Vec<String> = ["x".to_string(), "y".to_string()]
        .into_iter()
        .chain((1..=d - 2).map(|i| format!("z{i}")))
        .collect();
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let vs = MultiPoly::variables(p, &refs);
    let (x, y) = (&vs[0], &vs[1]);
    let mut images = vec![x + y, y.clone()];
    images.extend(vs[2..].iter().cloned());
    let act = GroupAction::new(images)?;

    let pi = p as u32;
    let mut gens = vec![&x.pow(pi) - &(x * &y.pow(pi - 1)), y.clone()];
    gens.extend(vs[2..].iter().cloned());
    Ok((act, gens))
}

pub fn check_reflection(p: u64, act: &GroupAction, gens: &[MultiPoly]) -> ReflectionReport {
    let n = gens.len();
    let invariance_ok = gens.iter().all(|g| act.is_invariant(g));
    let jac: Vec<Vec<MultiPoly>> =
        gens.iter().map(|g| (0..n).map(|i| g.derivative(i)).collect()).collect();
    let det = determinant(&jac);
    let mut target = vec![0u32; n];
    target[1] = p as u32 - 1;
    let det_ok = det.len() == 1 && det.coeff(&target) != 0;
    ReflectionReport {
        p,
        d: n as u64,
        invariance_ok,
        det_ok,
        generators: gens.iter().map(MultiPoly::to_string).collect(),
        determinant: det.to_string(),
    }
}

pub fn reflection_jacobian_check(p: u64, d: u64) -> Result<ReflectionReport> {
    let (act, gens) = reflection_setup(p, d)?;
    Ok(check_reflection(p, &act, &gens))
}

/// Laplace expansion along the first row, skipping zero entries.
fn determinant(m: &[Vec<MultiPoly>]) -> MultiPoly {
    let n = m.len();
    let zero = m[0][0].constant_like(0);
    if n == 1 {
        return m[0][0].clone();
    }
    let mut total = zero;
    for (j, entry) in m[0].iter().enumerate() {
        if entry.is_zero() {
            continue;
        }
        let minor: Vec<Vec<MultiPoly>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, e)| e.clone()).collect())
            .collect();
        let term = entry * &determinant(&minor);
        total = if j % 2 == 0 { &total + &term } else { &total - &term };
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn v3_small_primes() {
        let r = verify_v3_relation(3).unwrap();
        assert!(r.ok && r.generators_invariant && r.literal_form_invariant);
        let big = MultiPoly::zero(3, &["X", "Y", "Z", "W"]);
        let expect = [(-1, [3, 0, 1, 0]), (1, [0, 0, 0, 3]), (-1, [0, 2, 0, 0]), (1, [2, 0, 0, 2])]
            .iter()
            .fold(big.clone(), |acc, (c, e)| &acc + &big.monomial_like(*c, e));
        assert_eq!(v3_relation(3), expect);
        for p in [5, 7, 11] {
            let r = verify_v3_relation(p).unwrap();
            assert!(r.ok && r.generators_invariant, "p = {p}: {}", r.residual);
            assert!(!r.literal_form_invariant);
        }
        assert!(verify_v3_relation(2).is_err());
    }

    #[test]
    fn v3_literal_form_fails_beyond_three() {
        assert!(check_v3(3, &v3_relation(3), QuadraticForm::Literal).unwrap().ok);
        assert!(!check_v3(5, &v3_relation(5), QuadraticForm::Literal).unwrap().ok);
    }

    #[test]
    fn v2v2_relation_and_controls() {
        let r = verify_v2v2_relation();
        assert!(r.ok && r.invariance_ok, "{}", r.residual);

        // (V, X) <-> (W, Y) is a symmetry of the relation
        let mut g = V2V2Generators::standard();
        g.gens.swap(0, 1);
        g.gens.swap(2, 3);
        assert!(check_v2v2(&v2v2_relation(), &g).ok);

        let mut g = V2V2Generators::standard();
        g.gens[4] = &g.gens[4] + &g.gens[0];
        let bad = check_v2v2(&v2v2_relation(), &g);
        assert!(!bad.ok);
        assert_ne!(bad.residual, "0");
    }

    #[test]
    fn reflection_examples() {
        let r = reflection_jacobian_check(2, 2).unwrap();
        assert!(r.invariance_ok && r.det_ok);
        assert_eq!(r.determinant, "y");
        let r = reflection_jacobian_check(3, 2).unwrap();
        assert!(r.invariance_ok && r.det_ok);
        assert_eq!(r.determinant, "2*y^2");
        let r = reflection_jacobian_check(5, 4).unwrap();
        assert!(r.invariance_ok && r.det_ok);
        assert!(reflection_jacobian_check(4, 2).is_err());
        assert!(reflection_jacobian_check(3, 1).is_err());
    }
}
