//! Exact rational scalars.
//!
//! `Rational` is `num_rational::BigRational`, which keeps every value in
//! lowest terms with a positive denominator. The helpers here fix the
//! textual form used in structure files: `"p"` for integers, `"p/q"`
//! otherwise, never floats.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// `numer / denom`, normalized. Panics on a zero denominator.
pub fn ratio(numer: i64, denom: i64) -> Rational {
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

/// Parses an optionally signed integer, or `integer/positive-integer`.
pub fn parse_rational(text: &str) -> Result<Rational, String> {
    let s = text.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let numer = parse_int(num).ok_or_else(|| format!("`{text}` is not a rational number"))?;
    let denom = match den {
        None => BigInt::one(),
        Some(d) => {
            if d.starts_with(['+', '-']) {
                return Err(format!("`{text}`: denominator must be an unsigned positive integer"));
            }
            let d = parse_int(d).ok_or_else(|| format!("`{text}` is not a rational number"))?;
            if d.is_zero() {
                return Err(format!("`{text}`: zero denominator"));
            }
            d
        }
    };
    Ok(BigRational::new(numer, denom))
}

fn parse_int(s: &str) -> Option<BigInt> {
    let digits = s.strip_prefix(['+', '-']).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Coefficient formatting used when printing linear combinations.
pub(crate) fn format_coefficient(r: &Rational, first: bool) -> String {
    let sign = if r.is_negative() {
        if first {
            "-"
        } else {
            " - "
        }
    } else if first {
        ""
    } else {
        " + "
    };
    let magnitude = r.abs();
    if magnitude.is_one() {
        sign.to_string()
    } else {
        format!("{sign}{}", format_rational(&magnitude))
    }
}
