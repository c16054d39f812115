use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::AlgebraError;

/// Arbitrary-precision rational, always stored reduced with a positive
/// denominator.
pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Formats as `"p/q"` in lowest terms, or `"p"` when the denominator is 1.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

pub fn parse_rational(s: &str) -> Result<Rational, AlgebraError> {
    let s = s.trim();
    let bad = || AlgebraError::BadNumber(s.to_string());
    if let Some((n, d)) = s.split_once('/') {
        let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
        let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
        if d == BigInt::from(0) {
            return Err(bad());
        }
        Ok(Rational::new(n, d))
    } else {
        Ok(Rational::from_integer(
            BigInt::from_str(s).map_err(|_| bad())?,
        ))
    }
}
