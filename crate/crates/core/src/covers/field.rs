//! Finite fields `F_q = F_p[y]/(m(y))` with a deterministically chosen modulus.

use std::fmt;

use crate::arith::{is_prime, power_of};
use crate::error::{Error, Result};

/// An element of a [`GaloisField`], encoded as the integer `sum a_i p^i` where
/// `a_i` is the coefficient of `y^i`. Only meaningful together with its field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Fq(pub u64);

impl Fq {
    pub const ZERO: Fq = Fq(0);

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// `F_q` for `q = p^e`. For `e > 1` the modulus is the smallest monic irreducible
/// polynomial of degree `e`, ordering candidates by the integer encoding of their
/// lower coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaloisField {
    p: u64,
    e: u32,
    q: u64,
    /// Lower coefficients `m_0..m_{e-1}` of the monic modulus.
    modulus: Vec<u64>,
    trace_one: Fq,
}

impl GaloisField {
    pub fn new(p: u64, q: u64) -> Result<Self> {
        let e = power_of(p, q)?;
        if q > 1 << 32 {
            return Err(Error::InvalidFieldSize(format!("q = {q} is too large")));
        }
        let modulus = if e == 1 { vec![0] } else { smallest_irreducible(p, e) };
        let mut field = GaloisField { p, e, q, modulus, trace_one: Fq(1) };
        field.trace_one = field
            .elements()
            .find(|&x| field.trace(x) == 1)
            .expect("absolute trace is surjective");
        Ok(field)
    }

    pub fn prime(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidFieldSize(format!("{p} is not prime")));
        }
        Self::new(p, p)
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.e
    }

    pub fn order(&self) -> u64 {
        self.q
    }

    /// Coefficients `m_0, ..., m_{e-1}, 1` of the modulus.
    pub fn modulus(&self) -> Vec<u64> {
        let mut m = self.modulus.clone();
        m.push(1);
        m
    }

    pub fn elements(&self) -> impl Iterator<Item = Fq> {
        (0..self.q).map(Fq)
    }

    pub fn from_prime_field(&self, c: i64) -> Fq {
        Fq(c.rem_euclid(self.p as i64) as u64)
    }

    pub fn from_digits(&self, digits: &[u64]) -> Result<Fq> {
        if digits.len() > self.e as usize {
            return Err(Error::Parse(format!(
                "element has {} coefficients but the field has degree {}",
                digits.len(),
                self.e
            )));
        }
        let mut v = 0u64;
        for &d in digits.iter().rev() {
            v = v * self.p + d % self.p;
        }
        Ok(Fq(v))
    }

    pub fn digits(&self, x: Fq) -> Vec<u64> {
        let mut v = x.0;
        (0..self.e)
            .map(|_| {
                let d = v % self.p;
                v /= self.p;
                d
            })
            .collect()
    }

    pub fn add(&self, a: Fq, b: Fq) -> Fq {
        if self.e == 1 {
            return Fq((a.0 + b.0) % self.p);
        }
        let (da, db) = (self.digits(a), self.digits(b));
        let s: Vec<u64> = da.iter().zip(&db).map(|(x, y)| (x + y) % self.p).collect();
        self.encode(&s)
    }

    pub fn neg(&self, a: Fq) -> Fq {
        if self.e == 1 {
            return Fq((self.p - a.0) % self.p);
        }
        let s: Vec<u64> = self.digits(a).iter().map(|x| (self.p - x) % self.p).collect();
        self.encode(&s)
    }

    pub fn sub(&self, a: Fq, b: Fq) -> Fq {
        self.add(a, self.neg(b))
    }

    pub fn scale(&self, c: u64, a: Fq) -> Fq {
        let c = c % self.p;
        if self.e == 1 {
            return Fq(c * a.0 % self.p);
        }
        let s: Vec<u64> = self.digits(a).iter().map(|x| x * c % self.p).collect();
        self.encode(&s)
    }

    fn encode(&self, digits: &[u64]) -> Fq {
        Fq(digits.iter().rev().fold(0, |v, &d| v * self.p + d))
    }

    pub fn mul(&self, a: Fq, b: Fq) -> Fq {
        if self.e == 1 {
            return Fq(a.0 * b.0 % self.p);
        }
        let (da, db) = (self.digits(a), self.digits(b));
        let e = self.e as usize;
        let mut prod = vec![0u64; 2 * e - 1];
        for (i, x) in da.iter().enumerate() {
            if *x == 0 {
                continue;
            }
            for (k, y) in db.iter().enumerate() {
                prod[i + k] = (prod[i + k] + x * y) % self.p;
            }
        }
        // y^e = -sum m_i y^i
        for deg in (e..prod.len()).rev() {
            let c = prod[deg];
            if c == 0 {
                continue;
            }
            prod[deg] = 0;
            for (i, m) in self.modulus.iter().enumerate() {
                let idx = deg - e + i;
                prod[idx] = (prod[idx] + (self.p - m) * c) % self.p;
            }
        }
        prod.truncate(e);
        self.encode(&prod)
    }

    pub fn pow(&self, a: Fq, mut k: u64) -> Fq {
        let mut base = a;
        let mut acc = Fq(1);
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: Fq) -> Option<Fq> {
        (!a.is_zero()).then(|| self.pow(a, self.q - 2))
    }

    pub fn frobenius(&self, a: Fq) -> Fq {
        self.pow(a, self.p)
    }

    /// The inverse of Frobenius, `a^(p^(e-1))`.
    pub fn pth_root(&self, a: Fq) -> Fq {
        (1..self.e).fold(a, |x, _| self.frobenius(x))
    }

    /// Absolute trace `F_q -> F_p`, returned as an integer in `0..p`.
    pub fn trace(&self, a: Fq) -> u64 {
        let mut acc = Fq(0);
        let mut x = a;
        for _ in 0..self.e {
            acc = self.add(acc, x);
            x = self.frobenius(x);
        }
        debug_assert!(acc.0 < self.p, "trace must land in the prime field");
        acc.0
    }

    /// Fixed element with trace 1, used to lift classes of `F_q / wp(F_q)`.
    pub fn trace_one(&self) -> Fq {
        self.trace_one
    }

    /// Artin-Schreier operator `x^p - x`.
    pub fn wp(&self, a: Fq) -> Fq {
        self.sub(self.frobenius(a), a)
    }

    /// Some `x` with `x^p - x = c`, found by solving the `F_p`-linear system.
    pub fn wp_preimage(&self, c: Fq) -> Option<Fq> {
        let e = self.e as usize;
        let p = self.p;
        // Columns: images of the basis y^k under wp.
        let cols: Vec<Vec<u64>> = (0..e)
            .map(|k| {
                let mut d = vec![0; e];
                d[k] = 1;
                self.digits(self.wp(self.encode(&d)))
            })
            .collect();
        let mut rows: Vec<Vec<u64>> = (0..e)
            .map(|r| {
                let mut row: Vec<u64> = cols.iter().map(|col| col[r]).collect();
                row.push(self.digits(c)[r]);
                row
            })
            .collect();
        let mut pivot_cols = Vec::new();
        let mut rank = 0;
        for col in 0..e {
            let Some(pr) = (rank..e).find(|&r| rows[r][col] != 0) else {
                continue;
            };
            rows.swap(rank, pr);
            let inv = mod_inv(rows[rank][col], p);
            for x in rows[rank].iter_mut() {
                *x = *x * inv % p;
            }
            let pivot = rows[rank].clone();
            for (r, row) in rows.iter_mut().enumerate().take(e) {
                let f = row[col];
                if r != rank && f != 0 {
                    for (x, y) in row.iter_mut().zip(&pivot) {
                        *x = (*x + (p - f) * y) % p;
                    }
                }
            }
            pivot_cols.push(col);
            rank += 1;
        }
        if rows[rank..].iter().any(|r| r[e] != 0) {
            return None;
        }
        let mut sol = vec![0u64; e];
        for (r, &col) in pivot_cols.iter().enumerate() {
            sol[col] = rows[r][e];
        }
        Some(self.encode(&sol))
    }

    /// Parses `"3"` (prime-field integer) or `"a0+a1*y+a2*y^2"`.
    pub fn parse_element(&self, s: &str) -> Result<Fq> {
        let s = s.trim();
        if let Ok(c) = s.parse::<i64>() {
            return Ok(self.from_prime_field(c));
        }
        let mut digits = vec![0u64; self.e as usize];
        let cleaned = s.replace(' ', "").replace('-', "+-");
        for term in cleaned.split('+').filter(|t| !t.is_empty()) {
            let (coef, power) = parse_monomial(term)
                .ok_or_else(|| Error::Parse(format!("bad field element term {term:?}")))?;
            if power >= self.e as usize {
                return Err(Error::Parse(format!(
                    "power y^{power} exceeds field degree {}",
                    self.e
                )));
            }
            let c = coef.rem_euclid(self.p as i64) as u64;
            digits[power] = (digits[power] + c) % self.p;
        }
        Ok(self.encode(&digits))
    }

    pub fn format_element(&self, x: Fq) -> String {
        if self.e == 1 {
            return x.0.to_string();
        }
        let parts: Vec<String> = self
            .digits(x)
            .iter()
            .enumerate()
            .filter(|(_, &d)| d != 0)
            .map(|(i, &d)| match (i, d) {
                (0, d) => d.to_string(),
                (1, 1) => "y".to_string(),
                (1, d) => format!("{d}*y"),
                (i, 1) => format!("y^{i}"),
                (i, d) => format!("{d}*y^{i}"),
            })
            .collect();
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join("+")
        }
    }

    pub fn display(&self, x: Fq) -> FqDisplay<'_> {
        FqDisplay { field: self, x }
    }
}

pub struct FqDisplay<'a> {
    field: &'a GaloisField,
    x: Fq,
}

impl fmt::Display for FqDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.field.format_element(self.x))
    }
}

fn parse_monomial(term: &str) -> Option<(i64, usize)> {
    let (coef_part, var_part) = match term.find('y') {
        None => return term.parse().ok().map(|c| (c, 0)),
        Some(pos) => (&term[..pos], &term[pos..]),
    };
    let coef = match coef_part.trim_end_matches('*') {
        "" => 1,
        "-" => -1,
        c => c.parse().ok()?,
    };
    let power = match var_part.strip_prefix('y')? {
        "" => 1,
        rest => rest.strip_prefix('^')?.parse().ok()?,
    };
    Some((coef, power))
}

pub(crate) fn mod_inv(a: u64, p: u64) -> u64 {
    let mut r = 1u64;
    let mut b = a % p;
    let mut k = p - 2;
    while k > 0 {
        if k & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        k >>= 1;
    }
    r
}

/// Remainder of `a` modulo the monic `m` over `F_p` (dense, low degree first).
fn poly_rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    let dm = m.len() - 1;
    while r.len() > dm {
        let c = *r.last().unwrap();
        let off = r.len() - 1 - dm;
        if c != 0 {
            for (i, mc) in m.iter().enumerate() {
                r[off + i] = (r[off + i] + (p - mc * c % p)) % p;
            }
        }
        r.pop();
    }
    r
}

fn smallest_irreducible(p: u64, e: u32) -> Vec<u64> {
    let e = e as usize;
    let count = p.pow(e as u32);
    (0..count)
        .map(|n| {
            let mut lower = Vec::with_capacity(e);
            let mut v = n;
            for _ in 0..e {
                lower.push(v % p);
                v /= p;
            }
            lower
        })
        .find(|lower| {
            let mut m = lower.clone();
            m.push(1);
            is_irreducible(&m, p)
        })
        .expect("irreducible polynomials exist in every degree")
}

/// Trial division by every monic polynomial of degree `1..=deg/2`.
fn is_irreducible(m: &[u64], p: u64) -> bool {
    let deg = m.len() - 1;
    for d in 1..=deg / 2 {
        for n in 0..p.pow(d as u32) {
            let mut f = Vec::with_capacity(d + 1);
            let mut v = n;
            for _ in 0..d {
                f.push(v % p);
                v /= p;
            }
            f.push(1);
            if poly_rem(m, &f, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}
