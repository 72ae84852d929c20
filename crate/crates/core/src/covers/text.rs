use super::field::GaloisField;
use super::laurent::LaurentSeries;
use crate::error::{Error, Result};

/// Parses `"-3:1,-1:2,0:1+y"` into the exact Laurent polynomial `t^-3 + 2t^-1 + (1+y)`.
/// Repeated exponents are summed; an empty string is zero.
pub fn parse_series(field: &GaloisField, s: &str) -> Result<LaurentSeries> {
    let mut terms = Vec::new();
    for item in s.split(',').map(str::trim).filter(|x| !x.is_empty()) {
        let (exp, coeff) = item
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("expected exponent:coefficient, got {item:?}")))?;
        let exp: i64 = exp
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad exponent in {item:?}")))?;
        terms.push((exp, field.parse_element(coeff)?));
    }
    Ok(LaurentSeries::polynomial(field, terms))
}
