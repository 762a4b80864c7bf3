//! Arbitrary-precision rationals and their canonical text form.

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::error::{Error, Result};

/// Exact fraction in lowest terms with a positive denominator.
pub type Rational = num_rational::BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Canonical text: `"p"` for integers, `"p/q"` otherwise.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

/// Parses the canonical text form. Non-canonical spellings such as `"2/4"`,
/// `"3/1"`, `"+1"` or `"1/-2"` are rejected so that text round-trips exactly.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::InvalidRational(s.to_string());
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let numer = parse_int(num).ok_or_else(bad)?;
    let value = match den {
        None => Rational::from_integer(numer),
        Some(d) => {
            if d.starts_with('-') {
                return Err(bad());
            }
            let denom = parse_int(d).ok_or_else(bad)?;
            if !denom.is_positive() || denom.is_one() {
                return Err(bad());
            }
            let r = Rational::new(numer.clone(), denom.clone());
            if *r.numer() != numer || *r.denom() != denom {
                return Err(bad());
            }
            r
        }
    };
    Ok(value)
}

fn parse_int(s: &str) -> Option<BigInt> {
    let digits = s.strip_prefix('-').unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    if digits.len() > 1 && digits.starts_with('0') {
        return None;
    }
    if s.starts_with('-') && digits == "0" {
        return None;
    }
    s.parse().ok()
}
