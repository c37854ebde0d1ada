//! Certified enclosures of transcendental values: pi, natural logarithms,
//! and cosine/sine at rational multiples of a full turn.
//!
//! Every function returns a `RatInterval` guaranteed to contain the true
//! value. Series are evaluated in exact rational arithmetic with explicit
//! tail bounds; intermediate results are rounded outward to dyadic
//! denominators to cap coefficient growth.

use crate::error::{Error, Result};
use crate::interval::RatInterval;
use crate::rational::{floor_int, frac_part, pow2, rat};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Enclosure of `atanh(t)` for rational `|t| <= 2/5`, width about `2^-bits`.
fn atanh_small(t: &BigRational, bits: u32) -> RatInterval {
    let abs_t = if t.is_negative() { -t } else { t.clone() };
    debug_assert!(abs_t <= rat(2, 5), "series argument out of range");
    let guard = bits + 16;
    let t2 = t * t;
    let one_minus_t2 = BigRational::one() - &t2;
    let target = pow2(-(bits as i64 + 4));
    let mut power = RatInterval::point(t.clone()); // t^(2i+1)
    let mut sum = RatInterval::point(BigRational::zero());
    let mut i: u64 = 0;
    loop {
        let term = power.mul_rat(&BigRational::new(BigInt::one(), BigInt::from(2 * i + 1)));
        sum = sum.add(&term).dyadic_round(guard);
        power = power.mul_rat(&t2).dyadic_round(guard);
        i += 1;
        // Tail after the last added term: |next|/(1 - t^2) bounds the rest.
        let next_mag = power.abs().hi() / BigRational::from_integer(BigInt::from(2 * i + 1));
        let tail = next_mag / &one_minus_t2;
        if tail < target {
            let lo = sum.lo() - &tail;
            let hi = sum.hi() + &tail;
            return RatInterval::new(lo, hi).expect("ordered").dyadic_round(bits + 8);
        }
    }
}

/// Enclosure of `atan(1/k)` for integer `k >= 2` (alternating series).
fn atan_recip(k: u64, bits: u32) -> RatInterval {
    let guard = bits + 16;
    let x = BigRational::new(BigInt::one(), BigInt::from(k));
    let x2 = &x * &x;
    let target = pow2(-(bits as i64 + 4));
    let mut power = RatInterval::point(x); // x^(2i+1)
    let mut sum = RatInterval::point(BigRational::zero());
    let mut i: u64 = 0;
    loop {
        let coeff = BigRational::new(
            if i % 2 == 0 { BigInt::one() } else { -BigInt::one() },
            BigInt::from(2 * i + 1),
        );
        let term = power.mul_rat(&coeff);
        sum = sum.add(&term).dyadic_round(guard);
        power = power.mul_rat(&x2).dyadic_round(guard);
        i += 1;
        // Alternating with strictly decreasing terms: remainder bounded by
        // the magnitude of the next term.
        let next_mag = power.abs().hi() / BigRational::from_integer(BigInt::from(2 * i + 1));
        if next_mag < target {
            let lo = sum.lo() - &next_mag;
            let hi = sum.hi() + &next_mag;
            return RatInterval::new(lo, hi).expect("ordered").dyadic_round(bits + 8);
        }
    }
}

/// Enclosure of pi (Machin: `pi = 16 atan(1/5) - 4 atan(1/239)`).
pub fn pi(bits: u32) -> RatInterval {
    let a5 = atan_recip(5, bits + 8).mul_rat(&rat(16, 1));
    let a239 = atan_recip(239, bits + 8).mul_rat(&rat(4, 1));
    a5.sub(&a239).dyadic_round(bits)
}

/// Enclosure of `ln 2 = 2 atanh(1/3)`.
pub fn ln2(bits: u32) -> RatInterval {
    atanh_small(&rat(1, 3), bits + 4).mul_rat(&rat(2, 1)).dyadic_round(bits)
}

/// Enclosure of `ln x` for a positive rational `x`, width about `2^-bits`.
///
/// Range-reduces `x = 2^e * m` with `m` in `[2/3, 4/3]`, then
/// `ln m = 2 atanh((m-1)/(m+1))` with `|(m-1)/(m+1)| <= 1/5`.
pub fn ln_rat(x: &BigRational, bits: u32) -> Result<RatInterval> {
    if !x.is_positive() {
        return Err(Error::OutOfRange(format!("ln of non-positive value {x}")));
    }
    let mut e: i64 = x.numer().bits() as i64 - x.denom().bits() as i64;
    let mut m = x * pow2(-e);
    let lo_lim = rat(2, 3);
    let hi_lim = rat(4, 3);
    while m < lo_lim {
        m = m * rat(2, 1);
        e -= 1;
    }
    while m > hi_lim {
        m = m / rat(2, 1);
        e += 1;
    }
    let t = (&m - BigRational::one()) / (&m + BigRational::one());
    let ln_m = atanh_small(&t, bits + 8).mul_rat(&rat(2, 1));
    let result = if e == 0 {
        ln_m
    } else {
        let l2 = ln2(bits + 8).mul_rat(&BigRational::from_integer(BigInt::from(e)));
        ln_m.add(&l2)
    };
    Ok(result.dyadic_round(bits))
}

/// Enclosure of `ln` over an interval of positive rationals (monotone
/// extension: `[ln lo, ln hi]`).
pub fn ln_of_interval(iv: &RatInterval, bits: u32) -> Result<RatInterval> {
    let lo = ln_rat(iv.lo(), bits)?;
    let hi = ln_rat(iv.hi(), bits)?;
    RatInterval::new(lo.lo().clone(), hi.hi().clone())
}

/// Enclosure of `cos(2 pi t)` for rational `t`, width about `2^-bits`.
/// Exact (point) results at quarter-integer `t`.
pub fn cos2pi(t: &BigRational, bits: u32) -> RatInterval {
    let (quadrant, theta) = quadrant_reduce(t, bits);
    match quadrant {
        0 => cos_series(&theta, bits),
        1 => sin_series(&theta, bits).neg(),
        2 => cos_series(&theta, bits).neg(),
        _ => sin_series(&theta, bits),
    }
}

/// Enclosure of `sin(2 pi t)` for rational `t`, width about `2^-bits`.
pub fn sin2pi(t: &BigRational, bits: u32) -> RatInterval {
    let (quadrant, theta) = quadrant_reduce(t, bits);
    match quadrant {
        0 => sin_series(&theta, bits),
        1 => cos_series(&theta, bits),
        2 => sin_series(&theta, bits).neg(),
        _ => cos_series(&theta, bits).neg(),
    }
}

/// Reduce `t` mod 1 to a quadrant index and an angle interval
/// `theta = 2 pi u` with `u` in `[0, 1/4)`.
fn quadrant_reduce(t: &BigRational, bits: u32) -> (u8, RatInterval) {
    let r = frac_part(t);
    let four_r = &r * BigRational::from_integer(BigInt::from(4));
    let quadrant = floor_int(&four_r).to_u8().unwrap_or(3).min(3);
    let u = &r - BigRational::new(BigInt::from(quadrant), BigInt::from(4));
    let two_u = &u + &u;
    (quadrant, pi(bits + 16).mul_rat(&two_u))
}

/// `cos` of a nonnegative angle interval within `[0, pi/2 + eps]`.
fn cos_series(theta: &RatInterval, bits: u32) -> RatInterval {
    let guard = bits + 16;
    let theta2 = theta.square().dyadic_round(guard);
    let target = pow2(-(bits as i64 + 4));
    let mut term = RatInterval::point(BigRational::one()); // theta^(2i)/(2i)!
    let mut sum = RatInterval::point(BigRational::zero());
    let mut i: u64 = 0;
    loop {
        let signed = if i % 2 == 0 { term.clone() } else { term.neg() };
        sum = sum.add(&signed).dyadic_round(guard);
        // next |term| = theta^(2i+2) / (2i+2)!
        let denom = BigRational::from_integer(BigInt::from((2 * i + 1) * (2 * i + 2)));
        term = term.mul(&theta2).mul_rat(&denom.recip()).dyadic_round(guard);
        i += 1;
        let next_mag = term.abs().hi().clone();
        // Terms decrease strictly once (2i)(2i-1) > theta^2, which holds for
        // all i >= 2 here (theta < 1.58, theta^2 < 2.5 < 12).
        if i >= 2 && next_mag < target {
            let lo = sum.lo() - &next_mag;
            let hi = sum.hi() + &next_mag;
            return RatInterval::new(lo, hi).expect("ordered").dyadic_round(bits + 8);
        }
    }
}

/// `sin` of a nonnegative angle interval within `[0, pi/2 + eps]`.
fn sin_series(theta: &RatInterval, bits: u32) -> RatInterval {
    let guard = bits + 16;
    let theta2 = theta.square().dyadic_round(guard);
    let target = pow2(-(bits as i64 + 4));
    let mut term = theta.clone(); // theta^(2i+1)/(2i+1)!
    let mut sum = RatInterval::point(BigRational::zero());
    let mut i: u64 = 0;
    loop {
        let signed = if i % 2 == 0 { term.clone() } else { term.neg() };
        sum = sum.add(&signed).dyadic_round(guard);
        let denom = BigRational::from_integer(BigInt::from((2 * i + 2) * (2 * i + 3)));
        term = term.mul(&theta2).mul_rat(&denom.recip()).dyadic_round(guard);
        i += 1;
        let next_mag = term.abs().hi().clone();
        if i >= 2 && next_mag < target {
            let lo = sum.lo() - &next_mag;
            let hi = sum.hi() + &next_mag;
            return RatInterval::new(lo, hi).expect("ordered").dyadic_round(bits + 8);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn assert_encloses(iv: &RatInterval, approx_n: i64, approx_d: i64, slack_exp: i64) {
        // |iv - approx| <= 2^slack_exp and iv is narrow
        let a = rat(approx_n, approx_d);
        let slack = pow2(slack_exp);
        assert!(iv.lo() <= &(&a + &slack), "lo too high: {:?} vs {a}", iv.lo());
        assert!(iv.hi() >= &(&a - &slack), "hi too low: {:?} vs {a}", iv.hi());
    }

    #[test]
    fn pi_digits() {
        let p = pi(96);
        // 3.14159265358979323846...
        assert!(p.lo() > &rat(314159265358979, 100000000000000));
        assert!(p.hi() < &rat(314159265358980, 100000000000000));
        assert!(p.width() <= pow2(-94));
    }

    #[test]
    fn ln2_digits() {
        let l = ln2(96);
        // 0.69314718055994530942...
        assert!(l.lo() > &rat(693147180559945, 1000000000000000));
        assert!(l.hi() < &rat(693147180559946, 1000000000000000));
    }

    #[test]
    fn ln_various() {
        // ln 10 = 2.302585092994046...
        let l10 = ln_rat(&rat(10, 1), 80).unwrap();
        assert!(l10.lo() > &rat(2302585092994045, 1000000000000000));
        assert!(l10.hi() < &rat(2302585092994047, 1000000000000000));
        // ln(1) = 0 exactly representable
        let l1 = ln_rat(&rat(1, 1), 80).unwrap();
        assert!(l1.contains(&rat(0, 1)));
        assert!(l1.width() <= pow2(-78));
        // ln(3/7) = -0.8472978603872034...
        let l37 = ln_rat(&rat(3, 7), 80).unwrap();
        assert_encloses(&l37, -8472978603872034, 10000000000000000, -50);
        // ln multiplicativity: ln(6) ~ ln2 + ln3
        let l6 = ln_rat(&rat(6, 1), 80).unwrap();
        let l2 = ln_rat(&rat(2, 1), 80).unwrap();
        let l3 = ln_rat(&rat(3, 1), 80).unwrap();
        let sum = l2.add(&l3);
        assert!(sum.lo() <= l6.hi() && l6.lo() <= sum.hi(), "intervals must overlap");
        assert!(ln_rat(&rat(-1, 2), 32).is_err());
        assert!(ln_rat(&rat(0, 1), 32).is_err());
    }

    #[test]
    fn cos_sin_quarter_points_exact() {
        let one = rat(1, 1);
        let zero = rat(0, 1);
        let c0 = cos2pi(&zero, 64);
        assert_eq!(c0.lo(), c0.hi());
        assert_eq!(c0.lo(), &one);
        let chalf = cos2pi(&rat(1, 2), 64);
        assert_eq!(chalf.lo(), chalf.hi());
        assert_eq!(chalf.lo(), &rat(-1, 1));
        let cq = cos2pi(&rat(1, 4), 64);
        assert_eq!(cq.lo(), cq.hi());
        assert_eq!(cq.lo(), &zero);
        let sq = sin2pi(&rat(1, 4), 64);
        assert_eq!(sq.lo(), &one);
        let s34 = sin2pi(&rat(3, 4), 64);
        assert_eq!(s34.lo(), &rat(-1, 1));
        // Full turns reduce
        let c5 = cos2pi(&rat(21, 4), 64); // = cos(2 pi / 4) = 0
        assert_eq!(c5.lo(), &zero);
    }

    #[test]
    fn cos_sin_known_values() {
        // cos(2 pi / 6) = 1/2, sin(2 pi / 6) = sqrt(3)/2 = 0.8660254...
        let c6 = cos2pi(&rat(1, 6), 80);
        assert_encloses(&c6, 1, 2, -70);
        let s6 = sin2pi(&rat(1, 6), 80);
        assert_encloses(&s6, 8660254037844387, 10000000000000000, -48);
        // cos(2 pi / 8) = sqrt(2)/2 = 0.7071067811865476
        let c8 = cos2pi(&rat(1, 8), 80);
        assert_encloses(&c8, 7071067811865476, 10000000000000000, -48);
        // symmetry: cos(2 pi (1 - t)) = cos(2 pi t)
        let t = rat(2, 7);
        let a = cos2pi(&t, 80);
        let b = cos2pi(&(rat(1, 1) - &t), 80);
        assert!(a.lo() <= b.hi() && b.lo() <= a.hi());
        // sin(2 pi (1 - t)) = -sin(2 pi t)
        let sa = sin2pi(&t, 80);
        let sb = sin2pi(&(rat(1, 1) - &t), 80).neg();
        assert!(sa.lo() <= sb.hi() && sb.lo() <= sa.hi());
        // Pythagorean check at t = 3/11
        let t2 = rat(3, 11);
        let c = cos2pi(&t2, 80);
        let s = sin2pi(&t2, 80);
        let pyth = c.square().add(&s.square());
        assert!(pyth.contains(&rat(1, 1)));
        assert!(pyth.width() < pow2(-60));
    }

    #[test]
    fn negative_arguments_reduce_mod_one() {
        // cos(2 pi (-1/3)) = cos(2 pi (2/3)) = -1/2
        let c = cos2pi(&rat(-1, 3), 80);
        assert_encloses(&c, -1, 2, -70);
    }
}
