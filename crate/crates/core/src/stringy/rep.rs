use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::is_prime;
use crate::error::{Error, Result};
use crate::motivic::MotivicValue;

/// A representation `V = V_{d_1} + ... + V_{d_l}` of `Z/p` in characteristic `p`,
/// where `V_d` is the indecomposable of dimension `d` (one Jordan block).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawRep")]
pub struct RepDatum {
    p: u64,
    dims: Vec<u64>,
}

#[derive(Deserialize)]
struct RawRep {
    p: u64,
    dims: Vec<u64>,
}

impl TryFrom<RawRep> for RepDatum {
    type Error = Error;

    fn try_from(raw: RawRep) -> Result<Self> {
        RepDatum::new(raw.p, raw.dims)
    }
}

impl RepDatum {
    pub fn new(p: u64, dims: Vec<u64>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidRepresentation(format!("p = {p} is not prime")));
        }
        if let Some(d) = dims.iter().find(|&&d| d == 0 || d > p) {
            return Err(Error::InvalidRepresentation(format!(
                "block size {d} outside 1..={p}"
            )));
        }
        if dims.iter().all(|&d| d == 1) {
            return Err(Error::InvalidRepresentation(
                "the representation is trivial (all blocks of size 1)".into(),
            ));
        }
        Ok(RepDatum { p, dims })
    }

    /// Parses a comma-separated block list such as `"3,2,2"`.
    pub fn parse(p: u64, dims: &str) -> Result<Self> {
        let dims = dims
            .split(',')
            .map(|d| {
                d.trim()
                    .parse::<u64>()
                    .map_err(|_| Error::Parse(format!("bad block size {d:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(p, dims)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn dims(&self) -> &[u64] {
        &self.dims
    }

    /// Total dimension `d`.
    pub fn dim(&self) -> u64 {
        self.dims.iter().sum()
    }

    /// Number of blocks `l`.
    pub fn blocks(&self) -> u64 {
        self.dims.len() as u64
    }

    /// The group acts by pseudo-reflections iff `V = V_2 + V_1 + ... + V_1`.
    pub fn has_reflection(&self) -> bool {
        let mut big = self.dims.iter().filter(|&&d| d > 1);
        big.next() == Some(&2) && big.next().is_none()
    }

    /// Direct sum of two representations of the same group.
    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        if self.p != other.p {
            return Err(Error::InvalidRepresentation(format!(
                "cannot add representations for p = {} and p = {}",
                self.p, other.p
            )));
        }
        Self::new(self.p, self.dims.iter().chain(&other.dims).copied().collect())
    }
}

impl fmt::Display for RepDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let blocks: Vec<String> = self.dims.iter().map(|d| format!("V{d}")).collect();
        write!(f, "{} (p = {})", blocks.join(" + "), self.p)
    }
}

/// `D_V = sum d(d-1)/2` over the blocks.
pub fn d_v(rep: &RepDatum) -> u64 {
    rep.dims.iter().map(|d| d * (d - 1) / 2).sum()
}

fn check_jump(p: u64, j: u64) -> Result<()> {
    if j != 0 && j.is_multiple_of(p) {
        Err(Error::InvalidJump { p, j })
    } else {
        Ok(())
    }
}

/// Shift number `sum_blocks sum_{i=1}^{d-1} floor(i j / p)`.
pub fn sht(rep: &RepDatum, j: u64) -> Result<u64> {
    check_jump(rep.p, j)?;
    Ok(rep
        .dims
        .iter()
        .map(|&d| (1..d).map(|i| i * j / rep.p).sum::<u64>())
        .sum())
}

/// Motivic measure of `A^l x {covers with jump j}`: `L^d` for `j = 0`, else
/// `(L - 1) L^(l + j - 1 - floor(j/p))`.
pub fn stratum_measure(rep: &RepDatum, j: u64) -> Result<MotivicValue> {
    check_jump(rep.p, j)?;
    if j == 0 {
        return Ok(MotivicValue::l_pow_int(rep.dim() as i64));
    }
    let e = rep.blocks() as i64 + j as i64 - 1 - (j / rep.p) as i64;
    Ok(&(&MotivicValue::lefschetz() - &MotivicValue::one()) * &MotivicValue::l_pow_int(e))
}

/// A function on jumps of the form `F(0) = b0`, `F(np + s) = a n + b[s-1]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuasiLinearExponent {
    pub b0: i64,
    pub a: i64,
    pub b: Vec<i64>,
}

impl QuasiLinearExponent {
    pub fn new(p: u64, b0: i64, a: i64, b: Vec<i64>) -> Result<Self> {
        if b.len() as u64 != p - 1 {
            return Err(Error::InvalidRepresentation(format!(
                "{} residue offsets given, expected {}",
                b.len(),
                p - 1
            )));
        }
        Ok(QuasiLinearExponent { b0, a, b })
    }

    /// `-sht_V`, with slope `-D_V`.
    pub fn minus_sht(rep: &RepDatum) -> Self {
        let b = (1..rep.p).map(|s| -(sht(rep, s).expect("s < p") as i64)).collect();
        QuasiLinearExponent { b0: 0, a: -(d_v(rep) as i64), b }
    }

    pub fn period(&self) -> u64 {
        self.b.len() as u64 + 1
    }

    pub fn eval(&self, j: u64) -> Result<i64> {
        let p = self.period();
        check_jump(p, j)?;
        if j == 0 {
            return Ok(self.b0);
        }
        Ok(self.a * (j / p) as i64 + self.b[(j % p - 1) as usize])
    }
}
