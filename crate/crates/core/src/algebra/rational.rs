//! Exact rationals.
//!
//! [`Scalar`] is an arbitrary-precision rational kept in lowest terms with a
//! positive denominator. The textual form is `"p/q"`, or `"p"` when the
//! denominator is one.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Scalar {
    assert!(d != 0, "zero denominator");
    Scalar::new(BigInt::from(n), BigInt::from(d))
}

pub fn is_integer(s: &Scalar) -> bool {
    s.denom().is_one()
}

/// Parses `"p/q"` or `"p"` (optional sign on the numerator, surrounding
/// whitespace allowed). Zero denominators are rejected.
pub fn parse_scalar(text: &str) -> Result<Scalar> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num: BigInt = parse_int(num)?;
    let den: BigInt = parse_int(den)?;
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {text:?}")));
    }
    Ok(Scalar::new(num, den))
}

fn parse_int(text: &str) -> Result<BigInt> {
    let digits = text.strip_prefix(['+', '-']).unwrap_or(text);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse(format!("invalid integer {text:?}")));
    }
    text.parse::<BigInt>()
        .map_err(|e| Error::Parse(format!("invalid integer {text:?}: {e}")))
}

pub fn format_scalar(s: &Scalar) -> String {
    if s.denom().is_one() {
        s.numer().to_string()
    } else {
        format!("{}/{}", s.numer(), s.denom())
    }
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn to_f64(s: &Scalar) -> f64 {
    use num_traits::ToPrimitive;
    s.to_f64().unwrap_or(f64::NAN)
}

pub fn gcd_i64(a: i64, b: i64) -> i64 {
    a.gcd(&b)
}

pub fn abs(s: &Scalar) -> Scalar {
    s.abs()
}
