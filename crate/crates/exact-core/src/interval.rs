//! Closed rational intervals with outward rounding.
//!
//! `RatInterval` is the workhorse enclosure type: all certified real
//! computations produce an interval guaranteed to contain the true value.
//! `dyadic_round` snaps endpoints outward to denominators `2^bits`, which
//! caps coefficient growth in long interval computations.

use crate::error::{Error, Result};
use crate::rational::{ceil_int, dist_to_int, floor_int, pow2};
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// A closed interval `[lo, hi]` with exact rational endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatInterval {
    lo: BigRational,
    hi: BigRational,
}

impl RatInterval {
    /// Interval from endpoints; fails unless `lo <= hi`.
    pub fn new(lo: BigRational, hi: BigRational) -> Result<Self> {
        if lo > hi {
            return Err(Error::InvalidInput(format!(
                "interval endpoints out of order: {lo} > {hi}"
            )));
        }
        Ok(RatInterval { lo, hi })
    }

    /// Degenerate interval `[r, r]`.
    pub fn point(r: BigRational) -> Self {
        RatInterval { lo: r.clone(), hi: r }
    }

    /// Interval from machine-integer fractions `lo_n/lo_d`, `hi_n/hi_d`.
    pub fn from_parts(lo_n: i64, lo_d: i64, hi_n: i64, hi_d: i64) -> Result<Self> {
        Self::new(
            BigRational::new(BigInt::from(lo_n), BigInt::from(lo_d)),
            BigRational::new(BigInt::from(hi_n), BigInt::from(hi_d)),
        )
    }

    pub fn lo(&self) -> &BigRational {
        &self.lo
    }

    pub fn hi(&self) -> &BigRational {
        &self.hi
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn mid(&self) -> BigRational {
        (&self.lo + &self.hi) / BigRational::from_integer(BigInt::from(2))
    }

    /// Midpoint as `f64`, for reports only.
    pub fn mid_f64(&self) -> f64 {
        self.mid().to_f64().unwrap_or(f64::NAN)
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_interval(&self, other: &RatInterval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    /// Does `[lo, hi]` contain an integer?
    pub fn contains_integer(&self) -> bool {
        ceil_int(&self.lo) <= floor_int(&self.hi)
    }

    /// Smallest interval containing both.
    pub fn hull(&self, other: &RatInterval) -> RatInterval {
        RatInterval {
            lo: if self.lo <= other.lo { self.lo.clone() } else { other.lo.clone() },
            hi: if self.hi >= other.hi { self.hi.clone() } else { other.hi.clone() },
        }
    }

    pub fn neg(&self) -> RatInterval {
        RatInterval { lo: -&self.hi, hi: -&self.lo }
    }

    pub fn add(&self, other: &RatInterval) -> RatInterval {
        RatInterval { lo: &self.lo + &other.lo, hi: &self.hi + &other.hi }
    }

    pub fn sub(&self, other: &RatInterval) -> RatInterval {
        RatInterval { lo: &self.lo - &other.hi, hi: &self.hi - &other.lo }
    }

    pub fn mul(&self, other: &RatInterval) -> RatInterval {
        let cands = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let mut lo = cands[0].clone();
        let mut hi = cands[0].clone();
        for c in &cands[1..] {
            if *c < lo {
                lo = c.clone();
            }
            if *c > hi {
                hi = c.clone();
            }
        }
        RatInterval { lo, hi }
    }

    pub fn add_rat(&self, r: &BigRational) -> RatInterval {
        RatInterval { lo: &self.lo + r, hi: &self.hi + r }
    }

    pub fn sub_rat(&self, r: &BigRational) -> RatInterval {
        RatInterval { lo: &self.lo - r, hi: &self.hi - r }
    }

    pub fn mul_rat(&self, r: &BigRational) -> RatInterval {
        if r.is_negative() {
            RatInterval { lo: &self.hi * r, hi: &self.lo * r }
        } else {
            RatInterval { lo: &self.lo * r, hi: &self.hi * r }
        }
    }

    /// Reciprocal; fails if the interval contains zero.
    pub fn recip(&self) -> Result<RatInterval> {
        if self.contains_zero() {
            return Err(Error::OutOfRange("reciprocal of interval containing zero".into()));
        }
        Ok(RatInterval { lo: self.hi.recip(), hi: self.lo.recip() })
    }

    /// `[min |x|, max |x|]` over the interval.
    pub fn abs(&self) -> RatInterval {
        if !self.lo.is_negative() {
            self.clone()
        } else if !self.hi.is_positive() {
            self.neg()
        } else {
            let mhi = {
                let a = -&self.lo;
                if a >= self.hi {
                    a
                } else {
                    self.hi.clone()
                }
            };
            RatInterval { lo: BigRational::zero(), hi: mhi }
        }
    }

    /// `[min x^2, max x^2]` (tighter than `self.mul(self)` around zero).
    pub fn square(&self) -> RatInterval {
        let a = self.abs();
        RatInterval { lo: &a.lo * &a.lo, hi: &a.hi * &a.hi }
    }

    /// Round endpoints outward to denominator `2^bits`.
    pub fn dyadic_round(&self, bits: u32) -> RatInterval {
        let scale = pow2(bits as i64);
        let inv = pow2(-(bits as i64));
        let lo = BigRational::from_integer(floor_int(&(&self.lo * &scale))) * &inv;
        let hi = BigRational::from_integer(ceil_int(&(&self.hi * &scale))) * &inv;
        RatInterval { lo, hi }
    }

    /// Certified square root enclosure with endpoint gap at most `2^-bits`.
    /// Exact when both endpoints are perfect squares of rationals.
    pub fn sqrt(&self, bits: u32) -> Result<RatInterval> {
        if self.lo.is_negative() {
            return Err(Error::OutOfRange("sqrt of interval with negative part".into()));
        }
        let (lo, _) = sqrt_rational_bounds(&self.lo, bits);
        let (_, hi) = sqrt_rational_bounds(&self.hi, bits);
        Ok(RatInterval { lo, hi })
    }

    /// Enclosure of the distance to the nearest integer over the interval:
    /// the minimum is 0 exactly when an integer lies inside, and the maximum
    /// is 1/2 exactly when a half-integer lies inside.
    pub fn dist_to_int(&self) -> RatInterval {
        let dlo = dist_to_int(&self.lo);
        let dhi = dist_to_int(&self.hi);
        let min = if self.contains_integer() {
            BigRational::zero()
        } else if dlo <= dhi {
            dlo.clone()
        } else {
            dhi.clone()
        };
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        let doubled = RatInterval {
            lo: &self.lo + &self.lo,
            hi: &self.hi + &self.hi,
        };
        let max = if doubled.contains_odd_integer() {
            half
        } else if dlo >= dhi {
            dlo
        } else {
            dhi
        };
        RatInterval { lo: min, hi: max }
    }

    fn contains_odd_integer(&self) -> bool {
        // Is there an odd integer in [lo, hi]?
        let mut k = ceil_int(&self.lo);
        if k.is_even() {
            k += 1;
        }
        BigRational::from_integer(k) <= self.hi
    }
}

/// Lower and upper rational bounds for `sqrt(r)` (requires `r >= 0`) with gap
/// at most `2^-bits`; the bounds coincide when `r` is a perfect rational
/// square, so exact square roots are detected exactly.
pub fn sqrt_rational_bounds(r: &BigRational, bits: u32) -> (BigRational, BigRational) {
    debug_assert!(!r.is_negative());
    if r.is_zero() {
        return (BigRational::zero(), BigRational::zero());
    }
    let n = r.numer().magnitude();
    let d = r.denom().magnitude();
    // sqrt(n/d) = sqrt(n*d)/d; scale by 4^bits for precision.
    let m: BigUint = n * d << (2 * bits as usize);
    let s = m.sqrt();
    let exact = &s * &s == m;
    let den = BigInt::from(d.clone()) << bits as usize;
    let lo = BigRational::new(BigInt::from(s.clone()), den.clone());
    let hi = if exact {
        lo.clone()
    } else {
        BigRational::new(BigInt::from(s + 1u32), den)
    };
    (lo, hi)
}
