//! Exact rational scalars.
//!
//! [`Scalar`] is `num_rational::BigRational`, which keeps every value in
//! lowest terms with a positive denominator after each operation.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Scalar = num_rational::BigRational;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

pub fn ratio(p: i64, q: i64) -> Scalar {
    assert!(q != 0, "zero denominator");
    Scalar::new(BigInt::from(p), BigInt::from(q))
}

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn one() -> Scalar {
    Scalar::one()
}

/// Parses `"p"` or `"p/q"` with optional leading sign on `p`.
pub fn parse(text: &str) -> Result<Scalar> {
    let t = text.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (t, None),
    };
    let bad = || Error::BadRational(text.to_string());
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = match den {
        Some(d) => d.parse().map_err(|_| bad())?,
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(Error::ZeroDenominator(text.to_string()));
    }
    Ok(Scalar::new(num, den))
}

/// Formats as `"p/q"`, or `"p"` when the denominator is one.
pub fn format(q: &Scalar) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!(parse("3").unwrap(), int(3));
        assert_eq!(parse("-6/4").unwrap(), ratio(-3, 2));
        assert_eq!(parse("6/-4").unwrap(), ratio(-3, 2));
        assert_eq!(parse(" 0/7 ").unwrap(), zero());
    }

    #[test]
    fn parse_errors() {
        assert_eq!(parse("1/0").unwrap_err().code(), "zero-denominator");
        assert_eq!(parse("x").unwrap_err().code(), "bad-rational");
        assert_eq!(parse("1/2/3").unwrap_err().code(), "bad-rational");
    }

    #[test]
    fn normalized_after_arithmetic() {
        let a = ratio(2, 4) + ratio(1, 6);
        assert_eq!(format(&a), "2/3");
        let b = ratio(-3, 9) * ratio(-6, 1);
        assert_eq!(format(&b), "2");
        assert!(b.denom() > &BigInt::zero());
    }
}
