//! Exact arithmetic kernel: rationals, dense matrices and univariate polynomials over Q.
//!
//! Nothing in here touches floating point. Rationals are `num_rational::BigRational`
//! (always reduced, positive denominator); the matrix and polynomial types are thin
//! owned wrappers around vectors of those.

mod matrix;
mod poly;

pub use matrix::{QMatrix, SquareSolution};
pub use poly::QPolynomial;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

use num_traits::{One, Zero};

/// Rational from a pair of machine integers.
pub fn rat(numer: i64, denom: i64) -> BigRational {
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Rational from an integer.
pub fn int(value: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(value))
}

pub fn is_integer(q: &BigRational) -> bool {
    q.denom().is_one()
}

/// Formats as `p/q`, or `p` when the denominator is 1.
pub fn format_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn parse_rational(text: &str) -> Option<BigRational> {
    let text = text.trim();
    match text.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                return None;
            }
            Some(BigRational::new(p, q))
        }
        None => text.parse::<BigInt>().ok().map(BigRational::from_integer),
    }
}

/// Serde adapters that write exact quantities as `"p/q"` strings.
pub mod serde_q {
    use super::{format_rational, parse_rational, BigInt, BigRational};
    use serde::{de, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(q: &BigRational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(q))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigRational, D::Error> {
        let text = String::deserialize(d)?;
        parse_rational(&text).ok_or_else(|| de::Error::custom(format!("not a rational: {text:?}")))
    }

    pub mod vec {
        use super::*;
        use serde::ser::SerializeSeq;

        pub fn serialize<S: Serializer>(v: &[BigRational], s: S) -> Result<S::Ok, S::Error> {
            let mut seq = s.serialize_seq(Some(v.len()))?;
            for q in v {
                seq.serialize_element(&format_rational(q))?;
            }
            seq.end()
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigRational>, D::Error> {
            let texts = Vec::<String>::deserialize(d)?;
            texts
                .iter()
                .map(|t| {
                    parse_rational(t)
                        .ok_or_else(|| de::Error::custom(format!("not a rational: {t:?}")))
                })
                .collect()
        }
    }

    /// Integers as decimal strings; keeps counts beyond 2^53 intact in JSON.
    pub mod int {
        use super::*;

        pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
            s.serialize_str(&v.to_string())
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
            let text = String::deserialize(d)?;
            text.parse().map_err(de::Error::custom)
        }
    }

    pub mod int_vec {
        use super::*;
        use serde::ser::SerializeSeq;

        pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
            let mut seq = s.serialize_seq(Some(v.len()))?;
            for x in v {
                seq.serialize_element(&x.to_string())?;
            }
            seq.end()
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
            let texts = Vec::<String>::deserialize(d)?;
            texts
                .iter()
                .map(|t| t.parse().map_err(de::Error::custom))
                .collect()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_text_format() {
        assert_eq!(format_rational(&rat(8, 3)), "8/3");
        assert_eq!(format_rational(&rat(-4, 2)), "-2");
        assert_eq!(format_rational(&rat(0, 5)), "0");
        assert_eq!(parse_rational("9/2"), Some(rat(9, 2)));
        assert_eq!(parse_rational(" -6/4 "), Some(rat(-3, 2)));
        assert_eq!(parse_rational("17"), Some(int(17)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("x"), None);
    }

    #[test]
    fn canonical_sign_and_lowest_terms() {
        let q = rat(6, -4);
        assert_eq!(q.numer(), &BigInt::from(-3));
        assert_eq!(q.denom(), &BigInt::from(2));
    }
}
