//! Quadratic surds `(p + sqrt(d)) / q` and their exact continued fraction
//! streams with period detection.
//!
//! The representation keeps the classical divisibility invariant
//! `q | d - p^2`, which makes every continued fraction step exact integer
//! arithmetic. Streams of quotients are eventually periodic; the expansion
//! routine detects the cycle from repeated `(p, q)` states.

use crate::error::{Error, Result};
use crate::interval::{sqrt_rational_bounds, RatInterval};
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::HashMap;

/// The quadratic irrational `(p + sqrt(d)) / q` with `d` a positive
/// non-square integer and `q != 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Surd {
    p: BigInt,
    d: BigUint,
    q: BigInt,
}

impl Surd {
    /// Build `(p + sqrt(d)) / q`, normalizing internally so that
    /// `q` divides `d - p^2` (scale numerator and denominator by `|q|`
    /// when the raw triple does not satisfy it).
    pub fn new(p: BigInt, d: BigUint, q: BigInt) -> Result<Self> {
        if q.is_zero() {
            return Err(Error::InvalidSurd("zero denominator".into()));
        }
        if d.is_zero() {
            return Err(Error::InvalidSurd("radicand must be positive".into()));
        }
        let s = d.sqrt();
        if &s * &s == d {
            return Err(Error::InvalidSurd(format!(
                "radicand {d} is a perfect square; the value is rational"
            )));
        }
        let dd = BigInt::from(d.clone());
        if (&dd - &p * &p).mod_floor(&q).is_zero() {
            return Ok(Surd { p, d, q });
        }
        // Scale to restore the invariant: multiply p, q by |q| and d by q^2.
        let qa = q.abs();
        let p2 = &p * &qa;
        let d2 = (&dd * &qa * &qa).to_biguint().expect("positive");
        let q2 = &q * &qa;
        Ok(Surd { p: p2, d: d2, q: q2 })
    }

    /// `sqrt(d)` itself.
    pub fn sqrt_of(d: u64) -> Result<Self> {
        Self::new(BigInt::zero(), BigUint::from(d), BigInt::one())
    }

    /// The golden ratio `(1 + sqrt(5)) / 2`.
    pub fn golden() -> Self {
        Self::new(BigInt::one(), BigUint::from(5u32), BigInt::from(2))
            .expect("valid surd")
    }

    pub fn p(&self) -> &BigInt {
        &self.p
    }

    pub fn d(&self) -> &BigUint {
        &self.d
    }

    pub fn q(&self) -> &BigInt {
        &self.q
    }

    /// Exact floor. Uses only the integer square root: for `q > 0`,
    /// `floor((p + sqrt(d))/q) = floor((p + isqrt(d))/q)`; for `q < 0` the
    /// irrationality of `sqrt(d)` gives
    /// `floor((p + sqrt(d))/q) = floor((p + isqrt(d) + 1)/q)`.
    pub fn floor(&self) -> BigInt {
        let s = BigInt::from(self.d.sqrt());
        if self.q.is_positive() {
            (&self.p + &s).div_floor(&self.q)
        } else {
            (&self.p + &s + BigInt::one()).div_floor(&self.q)
        }
    }

    /// One continued fraction step: returns the quotient `a = floor(self)`
    /// and the successor surd `1 / (self - a)`.
    pub fn cf_step(&self) -> (BigInt, Surd) {
        let a = self.floor();
        // self - a = (p - a q + sqrt(d)) / q; reciprocal is
        // (p' + sqrt(d)) / q' with p' = a q - p, q' = (d - p'^2) / q.
        let p_next = &a * &self.q - &self.p;
        let num = BigInt::from(self.d.clone()) - &p_next * &p_next;
        let q_next = num / &self.q; // exact by the invariant
        debug_assert!(!q_next.is_zero(), "radicand is non-square");
        (
            a,
            Surd { p: p_next, d: self.d.clone(), q: q_next },
        )
    }

    /// Certified enclosure of the value with width about `2^-bits`.
    pub fn enclose(&self, bits: u32) -> RatInterval {
        let extra = bits + 8;
        let (lo_s, hi_s) =
            sqrt_rational_bounds(&BigRational::from_integer(BigInt::from(self.d.clone())), extra);
        let sqrt_iv = RatInterval::new(lo_s, hi_s).expect("ordered");
        let p = BigRational::from_integer(self.p.clone());
        let qinv = BigRational::from_integer(self.q.clone()).recip();
        sqrt_iv.add_rat(&p).mul_rat(&qinv)
    }
}

/// A continued fraction expansion of a quadratic surd: the quotients
/// produced, plus the detected cycle when one appeared within the budget.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurdCfExpansion {
    /// Quotients `b0, b1, ...` in order (b0 may be any sign; later
    /// quotients are positive).
    pub quotients: Vec<BigInt>,
    /// `Some((start, len))` when the quotient stream is periodic with
    /// `quotients[start..start+len]` repeating forever.
    pub period: Option<(usize, usize)>,
}

impl SurdCfExpansion {
    /// The quotient at any index, unrolling the period when present.
    pub fn quotient_at(&self, idx: usize) -> Option<BigInt> {
        if idx < self.quotients.len() {
            return Some(self.quotients[idx].clone());
        }
        let (start, len) = self.period?;
        let off = (idx - start) % len;
        Some(self.quotients[start + off].clone())
    }
}

/// Expand a surd into continued fraction quotients, detecting the period
/// from the first repeated internal state. Stops early (with
/// `period = None`) after `max_terms` quotients if no cycle appeared.
pub fn surd_cf_stream(surd: &Surd, max_terms: usize) -> SurdCfExpansion {
    let mut quotients = Vec::new();
    let mut seen: HashMap<(BigInt, BigInt), usize> = HashMap::new();
    let mut state = surd.clone();
    for idx in 0..max_terms {
        let key = (state.p.clone(), state.q.clone());
        if let Some(&start) = seen.get(&key) {
            return SurdCfExpansion { quotients, period: Some((start, idx - start)) };
        }
        seen.insert(key, idx);
        let (a, next) = state.cf_step();
        quotients.push(a);
        state = next;
    }
    SurdCfExpansion { quotients, period: None }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn sqrt2_stream() {
        let e = surd_cf_stream(&Surd::sqrt_of(2).unwrap(), 32);
        assert_eq!(e.quotients, ints(&[1, 2]));
        assert_eq!(e.period.unwrap(), (1, 1));
        for idx in 1..10 {
            assert_eq!(e.quotient_at(idx), Some(BigInt::from(2)));
        }
    }

    #[test]
    fn sqrt3_stream() {
        let e = surd_cf_stream(&Surd::sqrt_of(3).unwrap(), 32);
        assert_eq!(e.quotients, ints(&[1, 1, 2]));
        assert_eq!(e.period.unwrap(), (1, 2));
        // Unrolled: 1, 1, 2, 1, 2, 1, 2, ...
        assert_eq!(e.quotient_at(3), Some(BigInt::one()));
        assert_eq!(e.quotient_at(4), Some(BigInt::from(2)));
        assert_eq!(e.quotient_at(101), Some(BigInt::one()));
    }

    #[test]
    fn sqrt7_stream() {
        let e = surd_cf_stream(&Surd::sqrt_of(7).unwrap(), 32);
        assert_eq!(e.quotients[..5], ints(&[2, 1, 1, 1, 4])[..]);
        assert_eq!(e.period.unwrap(), (1, 4));
    }

    #[test]
    fn golden_is_all_ones() {
        let e = surd_cf_stream(&Surd::golden(), 16);
        assert_eq!(e.period.unwrap(), (0, 1));
        assert!(e.quotients.iter().all(|a| a == &BigInt::one()));
        assert_eq!(e.quotient_at(1000), Some(BigInt::one()));
    }

    #[test]
    fn floor_handles_negative_denominator() {
        // (0 + sqrt(2)) / (-1) = -1.414... -> floor -2
        let s = Surd::new(BigInt::zero(), BigUint::from(2u32), BigInt::from(-1)).unwrap();
        assert_eq!(s.floor(), BigInt::from(-2));
        // (0 + sqrt(2)) / (-2) = -0.707... -> floor -1
        let s2 = Surd::new(BigInt::zero(), BigUint::from(2u32), BigInt::from(-2)).unwrap();
        assert_eq!(s2.floor(), BigInt::from(-1));
        // (-3 + sqrt(2)) / 2 = -0.79... -> floor -1
        let s3 = Surd::new(BigInt::from(-3), BigUint::from(2u32), BigInt::from(2)).unwrap();
        assert_eq!(s3.floor(), BigInt::from(-1));
    }

    #[test]
    fn rejects_perfect_squares_and_zero_denominator() {
        assert!(Surd::sqrt_of(9).is_err());
        assert!(Surd::new(BigInt::one(), BigUint::from(5u32), BigInt::zero()).is_err());
    }

    #[test]
    fn enclosure_brackets_value() {
        let s = Surd::golden();
        let iv = s.enclose(64);
        // phi = 1.6180339887498949...
        let lo = BigRational::new(BigInt::from(161803u64), BigInt::from(100000u64));
        let hi = BigRational::new(BigInt::from(161804u64), BigInt::from(100000u64));
        assert!(iv.lo() > &lo && iv.hi() < &hi);
        let width_bound = BigRational::new(BigInt::one(), BigInt::one() << 60);
        assert!(iv.width() < width_bound);
    }

    #[test]
    fn invariant_normalization() {
        // (1 + sqrt(7)) / 3: 3 does not divide 7 - 1 = 6... it does; pick
        // (1 + sqrt(7)) / 4 where 4 does not divide 6.
        let s = Surd::new(BigInt::one(), BigUint::from(7u32), BigInt::from(4)).unwrap();
        // Value must be unchanged: (1 + sqrt 7)/4 = (4 + sqrt 112)/16.
        let iv = s.enclose(64);
        // (1 + 2.6457513...) / 4 = 0.91143783...
        let lo = BigRational::new(BigInt::from(91143u64), BigInt::from(100000u64));
        let hi = BigRational::new(BigInt::from(91144u64), BigInt::from(100000u64));
        assert!(iv.lo() > &lo && iv.hi() < &hi);
        // Stream still works and is periodic.
        let e = surd_cf_stream(&s, 64);
        assert!(e.period.is_some());
    }
}
