//! A unified handle for "a real number we can enclose to any precision":
//! rationals, quadratic surds, isolated polynomial roots, and (eventually
//! periodic) continued fraction streams.

use crate::cf::ContinuedFraction;
use crate::error::{Error, Result};
use crate::interval::RatInterval;
use crate::poly::{refine_root, IntPoly};
use crate::rational::pow2;
use crate::surd::Surd;
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

/// A real number with certified rational enclosures at any requested
/// precision.
#[derive(Clone, Debug)]
pub enum RealOracle {
    /// An exact rational; enclosures are points.
    Rational(BigRational),
    /// A quadratic surd `(p + sqrt(d)) / q`.
    Surd(Surd),
    /// A real algebraic number given by an integer polynomial and an
    /// isolating bracket whose endpoints straddle a sign change.
    AlgebraicRoot { poly: IntPoly, bracket: RatInterval },
    /// A regular continued fraction stream: a fixed prefix of partial
    /// quotients, optionally followed by a repeating block. An empty
    /// period means the value is the exact finite fraction.
    CfStream {
        b0: BigInt,
        prefix: Vec<BigUint>,
        period: Vec<BigUint>,
    },
}

impl RealOracle {
    /// Shorthand for a rational oracle.
    pub fn from_rat(x: BigRational) -> Self {
        RealOracle::Rational(x)
    }

    /// `sqrt(d)` as an oracle.
    pub fn sqrt_of(d: u64) -> Result<Self> {
        Ok(RealOracle::Surd(Surd::sqrt_of(d)?))
    }

    /// Certified enclosure with width at most `2^-bits`.
    pub fn enclose(&self, bits: u32) -> Result<RatInterval> {
        match self {
            RealOracle::Rational(x) => Ok(RatInterval::point(x.clone())),
            RealOracle::Surd(s) => Ok(s.enclose(bits + 2)),
            RealOracle::AlgebraicRoot { poly, bracket } => refine_root(poly, bracket, bits),
            RealOracle::CfStream { b0, prefix, period } => {
                enclose_cf_stream(b0, prefix, period, bits)
            }
        }
    }

    /// True when the oracle represents an exactly known rational.
    pub fn as_exact_rational(&self) -> Option<BigRational> {
        match self {
            RealOracle::Rational(x) => Some(x.clone()),
            RealOracle::CfStream { b0, prefix, period } if period.is_empty() => {
                let cf = ContinuedFraction::new(b0.clone(), prefix.clone()).ok()?;
                Some(cf.value())
            }
            _ => None,
        }
    }
}

fn enclose_cf_stream(
    b0: &BigInt,
    prefix: &[BigUint],
    period: &[BigUint],
    bits: u32,
) -> Result<RatInterval> {
    if period.is_empty() {
        let cf = ContinuedFraction::new(b0.clone(), prefix.to_vec())
            .map_err(|_| Error::InvalidInput("zero quotient in stream prefix".into()))?;
        return Ok(RatInterval::point(cf.value()));
    }
    // Successive convergents alternate around the value and satisfy
    // |x - p_k/q_k| < 1/(q_k q_{k+1}); stop once that bound is small enough.
    let target = pow2(-(bits as i64));
    let mut p_prev = BigInt::one();
    let mut q_prev = BigInt::zero();
    let mut p = b0.clone();
    let mut q = BigInt::one();
    let mut quotient_iter = prefix.iter().chain(period.iter().cycle());
    // Hard cap: quotient denominators grow at least like Fibonacci, so
    // 3 * bits steps are far more than enough; treat running out as a bug
    // guard rather than a reachable state.
    for _ in 0..(3 * bits as usize + 16) {
        let b = quotient_iter.next().expect("infinite stream");
        if b.is_zero() {
            return Err(Error::InvalidInput("zero quotient in stream".into()));
        }
        let bb = BigInt::from(b.clone());
        let p_next = &bb * &p + &p_prev;
        let q_next = &bb * &q + &q_prev;
        p_prev = p;
        q_prev = q;
        p = p_next;
        q = q_next;
        if !q_prev.is_zero() {
            let gap = BigRational::new(BigInt::one(), &q * &q_prev);
            if gap <= target {
                let a = BigRational::new(p.clone(), q.clone());
                let b_val = BigRational::new(p_prev.clone(), q_prev.clone());
                let (lo, hi) = if a <= b_val { (a, b_val) } else { (b_val, a) };
                return RatInterval::new(lo, hi);
            }
        }
    }
    Err(Error::PrecisionExhausted)
}
