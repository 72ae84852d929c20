use thiserror::Error;

/// Errors raised by the value ring, the cover machinery and the stringy formulas.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero value")]
    DivisionByZero,
    #[error("geometric series with ratio L^({0}) diverges: the exponent must be negative")]
    DivergentSeries(String),
    #[error("q = {q} is not a perfect {r}-th power, cannot evaluate L^(1/{r})")]
    FractionalPowerUnevaluable { q: u64, r: u32 },
    #[error("denominator vanishes at L = {0}")]
    PoleAtQ(u64),
    #[error("denominator vanishes at L = 1")]
    PoleAtOne,
    #[error("invalid field size: {0}")]
    InvalidFieldSize(String),
    #[error("q = {q} is not a power of the characteristic p = {p}")]
    BaseMismatch { p: u64, q: u64 },
    #[error("insufficient precision: {0}")]
    InsufficientPrecision(String),
    #[error("invalid ramification jump {j} for p = {p}")]
    InvalidJump { p: u64, j: u64 },
    #[error("cover is unramified (jump 0), no uniformizer construction applies")]
    Unramified,
    #[error("element is zero or its valuation lies beyond the tracked precision")]
    ZeroOrBelowPrecision,
    #[error("enumeration of {size} inputs exceeds the limit {limit}")]
    EnumerationTooLarge { size: String, limit: u64 },
    #[error("not stringily Kawamata log terminal: D_V = {dv} < p = {p}")]
    NotStringilyKlt { dv: u64, p: u64 },
    #[error("not Kawamata log terminal: {0}")]
    NotKlt(String),
    #[error("internal mismatch between two computation routes: {0}")]
    InternalMismatch(String),
    #[error("invalid representation: {0}")]
    InvalidRepresentation(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// True for violated mathematical preconditions, as opposed to malformed input
    /// or internal failures.
    pub fn is_precondition(&self) -> bool {
        matches!(
            self,
            Error::NotStringilyKlt { .. }
                | Error::NotKlt(_)
                | Error::DivergentSeries(_)
                | Error::PoleAtOne
                | Error::PoleAtQ(_)
                | Error::FractionalPowerUnevaluable { .. }
                | Error::InvalidJump { .. }
                | Error::Unramified
                | Error::BaseMismatch { .. }
                | Error::InvalidFieldSize(_)
                | Error::InvalidRepresentation(_)
                | Error::EnumerationTooLarge { .. }
                | Error::InsufficientPrecision(_)
                | Error::ZeroOrBelowPrecision
                | Error::DivisionByZero
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
