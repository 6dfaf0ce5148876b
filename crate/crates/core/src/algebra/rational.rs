//! Exact rationals. Backed by `num`'s `BigRational`, which keeps values in
//! lowest terms with a positive denominator.

use num::bigint::BigInt;
use num::{One, Zero};

use crate::error::{Error, Result};

pub type Rational = num::BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Formats as `"n/d"`, always with the denominator.
pub fn format_rational(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n
        .parse()
        .map_err(|_| Error::Parse(format!("bad numerator in {s:?}")))?;
    let d: BigInt = d
        .parse()
        .map_err(|_| Error::Parse(format!("bad denominator in {s:?}")))?;
    if d.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Rational::new(n, d))
}

/// Integer value of an integral rational, if it fits.
pub fn to_i64(q: &Rational) -> Option<i64> {
    use num::ToPrimitive;
    if q.is_integer() {
        q.numer().to_i64()
    } else {
        None
    }
}

pub fn to_f64(q: &Rational) -> f64 {
    use num::ToPrimitive;
    q.to_f64().unwrap_or(f64::NAN)
}

pub fn sign_pow(e: i64) -> Rational {
    if e.rem_euclid(2) == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}
