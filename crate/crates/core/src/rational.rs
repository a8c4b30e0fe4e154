//! Helpers for exact rationals in their textual `p/q` form.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("malformed rational literal {0:?}")]
pub struct RationalParseError(pub String);

/// Parses `"3"`, `"-2/6"` or `" 1/3 "`. Denominators must be positive and
/// nonzero; the value is returned in lowest terms.
pub fn parse_rational(text: &str) -> Result<Rational, RationalParseError> {
    let err = || RationalParseError(text.to_string());
    let t = text.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (t, None),
    };
    let num = BigInt::from_str(num).map_err(|_| err())?;
    let den = match den {
        Some(d) => {
            if d.starts_with('-') || d.starts_with('+') {
                return Err(err());
            }
            BigInt::from_str(d).map_err(|_| err())?
        }
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(err());
    }
    Ok(Rational::new(num, den))
}

/// Reduced `p/q` with the denominator omitted when it is one.
pub fn format_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Approximate decimal digit count of the larger of numerator and denominator.
pub fn decimal_digits(q: &Rational) -> u64 {
    let bits = q.numer().bits().max(q.denom().bits());
    // log10(2) ~ 0.30103
    bits * 30103 / 100000 + 1
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_normalizes() {
        assert_eq!(parse_rational("2/6").unwrap(), frac(1, 3));
        assert_eq!(parse_rational("-4").unwrap(), int(-4));
        assert_eq!(parse_rational(" 3 / 9 ").unwrap(), frac(1, 3));
        assert_eq!(format_rational(&frac(4, 8)), "1/2");
        assert_eq!(format_rational(&int(7)), "7");
        assert_eq!(format_rational(&frac(-1, 3)), "-1/3");
    }

    #[test]
    fn rejects_garbage() {
        for bad in ["", "1/0", "a", "1/-3", "1/2/3", "0.5"] {
            assert!(parse_rational(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn digit_estimate() {
        assert_eq!(decimal_digits(&int(1)), 1);
        let big = parse_rational("123456789012345678901234567890").unwrap();
        assert!((30..=31).contains(&decimal_digits(&big)));
    }
}
