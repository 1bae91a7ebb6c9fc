//! Exact rational scalars.
//!
//! All coefficients live in `Q`, an arbitrary precision rational kept in
//! lowest terms with a positive denominator, so structural equality is
//! mathematical equality.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Q = BigRational;

pub fn q(num: i64, den: i64) -> Q {
    Q::new(BigInt::from(num), BigInt::from(den))
}

pub fn qi(v: i64) -> Q {
    Q::from_integer(BigInt::from(v))
}

/// Parses `p/q`, `p`, or a signed variant of either.
pub fn parse_fraction(s: &str) -> Result<Q> {
    let s = s.trim();
    let bad = || Error::Parse(format!("`{s}` is not a fraction"));
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Q::new(num, den))
}

/// Canonical `p/q` string; integers are still written with `/1` so the
/// interchange format has a single shape.
pub fn format_fraction(x: &Q) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Compares `|x|` against one exactly.
pub fn cmp_abs_one(x: &Q) -> Ordering {
    x.numer().abs().cmp(x.denom())
}

pub fn pow(x: &Q, e: i64) -> Q {
    if e >= 0 {
        num_traits::pow(x.clone(), e as usize)
    } else {
        num_traits::pow(x.recip(), (-e) as usize)
    }
}

pub fn to_f64(x: &Q) -> f64 {
    x.to_f64().unwrap_or_else(|| {
        // Fall back on a scaled quotient when the parts overflow f64.
        let shift = x.numer().bits().max(x.denom().bits()) as i64 - 900;
        let scale = BigInt::one() << shift.max(0) as usize;
        let n = (x.numer() / &scale).to_f64().unwrap_or(0.0);
        let d = (x.denom() / &scale).to_f64().unwrap_or(1.0);
        n / d
    })
}

pub fn is_zero(x: &Q) -> bool {
    x.is_zero()
}

pub fn product<'a>(it: impl IntoIterator<Item = &'a Q>) -> Q {
    it.into_iter().fold(Q::one(), |acc, x| acc * x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_are_canonical() {
        assert_eq!(parse_fraction("6/8").unwrap(), q(3, 4));
        assert_eq!(parse_fraction("-2/-4").unwrap(), q(1, 2));
        assert_eq!(parse_fraction(" 5 ").unwrap(), qi(5));
        assert_eq!(format_fraction(&q(-6, 8)), "-3/4");
        assert_eq!(format_fraction(&qi(1)), "1/1");
        assert!(parse_fraction("1/0").is_err());
        assert!(parse_fraction("x").is_err());
    }

    #[test]
    fn modulus_comparison() {
        assert_eq!(cmp_abs_one(&q(-3, 4)), Ordering::Less);
        assert_eq!(cmp_abs_one(&q(-4, 4)), Ordering::Equal);
        assert_eq!(cmp_abs_one(&q(5, 4)), Ordering::Greater);
    }

    #[test]
    fn integer_powers() {
        assert_eq!(pow(&q(2, 3), 3), q(8, 27));
        assert_eq!(pow(&q(2, 3), -2), q(9, 4));
        assert_eq!(pow(&q(2, 3), 0), qi(1));
    }
}
