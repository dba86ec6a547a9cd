//! Scalar types used for probability evaluation.
//!
//! Algebra is done over exact integers; only the evaluation of a Hilbert
//! numerator at a probability table needs a field. Everything downstream of
//! that is generic over [`Scalar`], with exact rationals as the default.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Num, One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact rational numbers.
pub type Rational = BigRational;

/// A field-like numeric type probabilities can live in.
pub trait Scalar: Num + Clone + PartialOrd + Debug + Send + Sync {
    fn from_bigint(value: &BigInt) -> Self;
    fn from_rational(value: &Rational) -> Self;
    fn to_f64(&self) -> f64;
    /// Slack allowed when checking identities such as rows summing to one.
    fn tolerance() -> Self;
}

impl Scalar for Rational {
    fn from_bigint(value: &BigInt) -> Self {
        Rational::from_integer(value.clone())
    }

    fn from_rational(value: &Rational) -> Self {
        value.clone()
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn tolerance() -> Self {
        Rational::zero()
    }
}

macro_rules! impl_float_scalar {
    ($f:ty, $tol:expr) => {
        impl Scalar for $f {
            fn from_bigint(value: &BigInt) -> Self {
                value.to_f64().unwrap_or(f64::NAN) as $f
            }

            fn from_rational(value: &Rational) -> Self {
                ToPrimitive::to_f64(value).unwrap_or(f64::NAN) as $f
            }

            fn to_f64(&self) -> f64 {
                *self as f64
            }

            fn tolerance() -> Self {
                $tol
            }
        }
    };
}

impl_float_scalar!(f32, 1e-5);
impl_float_scalar!(f64, 1e-9);

/// Parses `0.25`, `1/4`, `3` or `-1.5e-2` into an exact rational.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    if text.is_empty() {
        return None;
    }
    if let Some((num, den)) = text.split_once('/') {
        let num: BigInt = num.trim().parse().ok()?;
        let den: BigInt = den.trim().parse().ok()?;
        if den.is_zero() {
            return None;
        }
        return Some(Rational::new(num, den));
    }
    let (mantissa, exp) = match text.find(['e', 'E']) {
        Some(pos) => (&text[..pos], text[pos + 1..].parse::<i32>().ok()?),
        None => (text, 0),
    };
    let (negative, mantissa) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let digits: BigInt = format!("{int_part}{frac_part}0").parse().ok()?;
    let digits = digits / BigInt::from(10);
    let scale = exp - frac_part.len() as i32;
    let ten = BigInt::from(10);
    let mut value = if scale >= 0 {
        Rational::from_integer(digits * num_traits::pow(ten, scale as usize))
    } else {
        Rational::new(digits, num_traits::pow(ten, (-scale) as usize))
    };
    if negative {
        value = -value;
    }
    Some(value)
}

/// Parses a rational and rejects malformed input with a line-tagged error.
pub fn parse_rational_at(text: &str, line: usize) -> Result<Rational> {
    parse_rational(text).ok_or_else(|| Error::Parse {
        line,
        message: format!("not a number: {text:?}"),
    })
}

/// Renders a rational as a decimal string.
///
/// Terminating decimals are printed exactly; anything else is rounded to
/// `max_digits` fractional digits and suffixed with `...`.
pub fn to_decimal(value: &Rational, max_digits: usize) -> String {
    let negative = value.is_negative();
    let value = value.abs();
    let (numer, denom) = (value.numer().clone(), value.denom().clone());
    let (int_part, mut rem) = numer.div_rem(&denom);
    let mut out = String::new();
    if negative {
        out.push('-');
    }
    out.push_str(&int_part.to_string());
    if rem.is_zero() {
        return out;
    }
    out.push('.');
    let ten = BigInt::from(10);
    for _ in 0..max_digits {
        rem *= &ten;
        let (digit, r) = rem.div_rem(&denom);
        out.push_str(&digit.to_string());
        rem = r;
        if rem.is_zero() {
            return out;
        }
    }
    out.push_str("...");
    out
}

/// Exact text form: a terminating decimal when there is one, otherwise a
/// fraction `p/q`.
pub fn to_exact_string(value: &Rational) -> String {
    let mut d = value.denom().clone();
    for p in [2u32, 5] {
        let p = BigInt::from(p);
        while (&d % &p).is_zero() {
            d /= &p;
        }
    }
    if d.is_one() {
        to_decimal(value, usize::MAX)
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

/// One as a rational.
pub fn one() -> Rational {
    Rational::one()
}
