//! Exact rational helpers: parsing, integer parts, distance to the nearest
//! integer, powers of two.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// The exact scalar used everywhere: an arbitrary-precision rational.
pub type ExactRational = BigRational;

/// Parse `"p/q"` or `"p"` (decimal integers, optional leading `-`) into an
/// exact rational.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let parse_int = |t: &str| -> Result<BigInt> {
        t.trim()
            .parse::<BigInt>()
            .map_err(|e| Error::InvalidInput(format!("bad integer {t:?}: {e}")))
    };
    match s.split_once('/') {
        None => Ok(BigRational::from_integer(parse_int(s)?)),
        Some((n, d)) => {
            let num = parse_int(n)?;
            let den = parse_int(d)?;
            if den.is_zero() {
                return Err(Error::InvalidInput(format!("zero denominator in {s:?}")));
            }
            Ok(BigRational::new(num, den))
        }
    }
}

/// Rational `n/d` from machine integers. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Rational from a machine integer.
pub fn rat_int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// `floor(x)` as an integer.
pub fn floor_int(x: &BigRational) -> BigInt {
    x.floor().to_integer()
}

/// `ceil(x)` as an integer.
pub fn ceil_int(x: &BigRational) -> BigInt {
    x.ceil().to_integer()
}

/// `2^k` as an exact rational; `k` may be negative.
pub fn pow2(k: i64) -> BigRational {
    let mag = BigInt::one() << k.unsigned_abs() as usize;
    if k >= 0 {
        BigRational::from_integer(mag)
    } else {
        BigRational::new(BigInt::one(), mag)
    }
}

/// Exact distance from `x` to the nearest integer, in `[0, 1/2]`.
pub fn dist_to_int(x: &BigRational) -> BigRational {
    let frac = x - BigRational::from_integer(floor_int(x));
    let alt = BigRational::one() - &frac;
    if frac <= alt {
        frac
    } else {
        alt
    }
}

/// Fractional part `x - floor(x)` in `[0, 1)`.
pub fn frac_part(x: &BigRational) -> BigRational {
    x - BigRational::from_integer(floor_int(x))
}

/// Absolute value.
pub fn abs(x: &BigRational) -> BigRational {
    if x.is_negative() {
        -x
    } else {
        x.clone()
    }
}
