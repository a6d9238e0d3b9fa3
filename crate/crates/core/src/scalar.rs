//! Exact rational scalars.
//!
//! The ground field is the rationals, kept exact throughout: `Scalar` is an
//! arbitrary-precision fraction stored in lowest terms with a positive
//! denominator, so equality of computed values is literal equality.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Scalar = BigRational;

/// Scalar from an integer.
pub fn int(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

/// Scalar from a numerator/denominator pair.
pub fn frac(num: i64, den: i64) -> Scalar {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn one() -> Scalar {
    Scalar::one()
}

/// Parse a rational literal: an optional sign, digits, and an optional
/// `/denominator` part, e.g. `-3`, `1/2`, `7`.
pub fn parse_rational(s: &str) -> Result<Scalar> {
    let t = s.trim();
    let bad = || Error::Invalid(format!("not a rational literal: `{s}`"));
    let (num_str, den_str) = match t.split_once('/') {
        Some((a, b)) => (a.trim(), Some(b.trim())),
        None => (t, None),
    };
    let num: BigInt = num_str.parse().map_err(|_| bad())?;
    let den: BigInt = match den_str {
        Some(d) => d.parse().map_err(|_| bad())?,
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(Error::DivisionByZero(s.to_string()));
    }
    Ok(BigRational::new(num, den))
}

/// Render a scalar as `n` or `n/d`, matching what `parse_rational` accepts.
pub fn display(x: &Scalar) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// True when the scalar is a negative number (used for sign-aware printing).
pub fn is_negative(x: &Scalar) -> bool {
    x.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display_round_trip() {
        for s in ["0", "3", "-3", "1/2", "-5/7", "10/4"] {
            let x = parse_rational(s).unwrap();
            let back = parse_rational(&display(&x)).unwrap();
            assert_eq!(x, back);
        }
        assert_eq!(display(&parse_rational("10/4").unwrap()), "5/2");
        assert_eq!(display(&parse_rational("-0").unwrap()), "0");
    }

    #[test]
    fn lowest_terms_invariant() {
        let x = frac(6, -8);
        assert_eq!(x, frac(-3, 4));
        assert_eq!(display(&x), "-3/4");
    }

    #[test]
    fn zero_denominator_rejected() {
        assert!(matches!(parse_rational("1/0"), Err(Error::DivisionByZero(_))));
    }

    #[test]
    fn garbage_rejected() {
        assert!(parse_rational("a/b").is_err());
        assert!(parse_rational("1.5").is_err());
        assert!(parse_rational("").is_err());
    }
}
