//! Rational scalars and the small integer combinatorics the rest of the crate
//! leans on.

use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Error, Result};

pub type Rational = BigRational;

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

pub fn frac(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn from_u128(value: u128) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// Parses `"p/q"`, `"p"` or a plain decimal such as `"0.25"`.
pub fn parse(text: &str) -> Result<Rational> {
    let text = text.trim();
    if let Some((whole, fractional)) = text.split_once('.') {
        if text.contains('/') {
            return Err(Error::parse(
                "rational",
                format!("malformed number {text:?}"),
            ));
        }
        let negative = whole.starts_with('-');
        let digits = format!("{}{}", whole.trim_start_matches(['-', '+']), fractional);
        let numer = BigInt::from_str(&digits)
            .map_err(|_| Error::parse("rational", format!("malformed number {text:?}")))?;
        let denom = num_traits::pow(BigInt::from(10), fractional.len());
        let value = Rational::new(numer, denom);
        return Ok(if negative { -value } else { value });
    }
    let value = Rational::from_str(text)
        .map_err(|_| Error::parse("rational", format!("malformed number {text:?}")))?;
    Ok(value)
}

/// Lowest-terms `"p/q"` (or `"p"` when the denominator is one).
pub fn format(value: &Rational) -> String {
    value.to_string()
}

/// Decimal approximation to `digits` significant digits.
pub fn approx(value: &Rational, digits: usize) -> String {
    let as_float = value.to_f64().unwrap_or(f64::NAN);
    format!("{:.*e}", digits.saturating_sub(1), as_float)
}

pub fn is_integer(value: &Rational) -> bool {
    value.denom().is_one()
}

pub fn is_nonnegative_integer(value: &Rational) -> bool {
    is_integer(value) && !value.is_negative()
}

/// Least common multiple of the denominators.
pub fn common_denominator<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, value| acc.lcm(value.denom()))
}

pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * u128::from(n - i) / u128::from(i + 1);
    }
    acc
}

/// Binomial coefficient that is zero for negative `k`, as used by the
/// dimension formula of two-row Specht modules.
pub fn binomial_signed(n: i64, k: i64) -> u128 {
    if k < 0 || n < 0 || k > n {
        0
    } else {
        binomial(n as u64, k as u64)
    }
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

pub fn factorial_rational(n: u64) -> Rational {
    Rational::from_integer(factorial(n))
}

pub fn binomial_rational(n: u64, k: u64) -> Rational {
    if k > n {
        return Rational::zero();
    }
    Rational::from_integer(factorial(n) / (factorial(k) * factorial(n - k)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_integers_and_decimals() {
        assert_eq!(parse("1/2").unwrap(), frac(1, 2));
        assert_eq!(parse("-6/4").unwrap(), frac(-3, 2));
        assert_eq!(parse("7").unwrap(), int(7));
        assert_eq!(parse("0.25").unwrap(), frac(1, 4));
        assert_eq!(parse("-1.5").unwrap(), frac(-3, 2));
        assert!(parse("1/0").is_err());
        assert!(parse("abc").is_err());
        assert!(parse("1.5/2").is_err());
    }

    #[test]
    fn formats_lowest_terms() {
        assert_eq!(format(&frac(4, -6)), "-2/3");
        assert_eq!(format(&int(5)), "5");
    }

    #[test]
    fn approx_has_requested_precision() {
        assert_eq!(approx(&frac(1, 3), 12), "3.33333333333e-1");
        assert_eq!(approx(&int(0), 3), "0.00e0");
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial_signed(4, -1), 0);
        assert_eq!(binomial(60, 30), 118264581564861424);
        assert_eq!(binomial_rational(6, 3), int(20));
        assert_eq!(factorial(5), BigInt::from(120));
    }
}
