//! Exact rational scalars.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Base field element. `BigRational` keeps itself in lowest terms with a
/// positive denominator.
pub type Scalar = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScalarParseError {
    #[error("zero denominator in rational `{0}`")]
    ZeroDenominator(String),
    #[error("malformed rational `{0}`")]
    Malformed(String),
}

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

pub fn ratio(num: i64, den: i64) -> Scalar {
    Scalar::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"p/q"` or `"p"` into a reduced rational.
pub fn parse_scalar(text: &str) -> Result<Scalar, ScalarParseError> {
    let trimmed = text.trim();
    let (num, den) = match trimmed.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (trimmed, "1"),
    };
    let num = BigInt::from_str(num).map_err(|_| ScalarParseError::Malformed(text.to_string()))?;
    let den = BigInt::from_str(den).map_err(|_| ScalarParseError::Malformed(text.to_string()))?;
    if den.is_zero() {
        return Err(ScalarParseError::ZeroDenominator(text.to_string()));
    }
    Ok(Scalar::new(num, den))
}

/// Canonical wire form: `"p/q"` in lowest terms, or `"p"` for integers.
pub fn format_scalar(value: &Scalar) -> String {
    value.to_string()
}

/// `(-1)^k` as a scalar.
pub fn sign(negative: bool) -> Scalar {
    if negative {
        -Scalar::one()
    } else {
        Scalar::one()
    }
}

pub fn is_unit_sign(value: &Scalar) -> bool {
    value.is_integer() && value.abs().is_one()
}
