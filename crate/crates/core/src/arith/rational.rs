use num_bigint::BigInt;
use num_rational::BigRational;

use crate::{Error, Result};

/// Exact fraction, always reduced with a positive denominator.
pub type Rational = BigRational;

/// Parses a decimal integer such as `"-187"`.
pub fn parse_bigint(s: &str) -> Result<BigInt> {
    s.trim()
        .parse()
        .map_err(|_| Error::Parse(format!("not an integer: {s:?}")))
}

/// Parses `"p/q"` or `"p"`. The result is reduced.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (parse_bigint(n)?, parse_bigint(d)?),
        None => (parse_bigint(s)?, BigInt::from(1)),
    };
    if den == BigInt::from(0) {
        return Err(Error::Parse(format!("zero denominator: {s:?}")));
    }
    Ok(Rational::new(num, den))
}

/// Serde adapter writing a [`BigInt`] as a decimal string.
pub mod serde_bigint {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(value: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&value.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let text = String::deserialize(d)?;
        super::parse_bigint(&text).map_err(serde::de::Error::custom)
    }
}

/// Serde adapter writing a [`Rational`] as `"p/q"` (or `"p"` when integral).
pub mod serde_rational {
    use serde::{Deserialize, Deserializer, Serializer};

    use super::Rational;

    pub fn serialize<S: Serializer>(value: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&value.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let text = String::deserialize(d)?;
        super::parse_rational(&text).map_err(serde::de::Error::custom)
    }
}
