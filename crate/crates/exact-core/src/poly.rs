//! Integer-coefficient polynomials with exact evaluation and certified real
//! root enclosures by bisection.

use crate::error::{Error, Result};
use crate::interval::RatInterval;
use crate::rational::pow2;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// A polynomial with integer coefficients, `coeffs[i]` multiplying `x^i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    /// Build from coefficients in ascending-degree order; trailing zero
    /// coefficients are trimmed.
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map(|c| c.is_zero()) == Some(true) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    /// Build from machine integers in ascending-degree order.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `x^n - a*x - b` (a common root-target shape).
    pub fn power_minus_linear(n: usize, a: i64, b: i64) -> Self {
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[0] = BigInt::from(-b);
        coeffs[1] = BigInt::from(-a);
        coeffs[n] = BigInt::from(1);
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Exact evaluation at a rational point (Horner).
    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    /// Sign of the value at a rational point: -1, 0, or 1.
    pub fn sign_at(&self, x: &BigRational) -> i32 {
        let v = self.eval(x);
        if v.is_zero() {
            0
        } else if v.is_positive() {
            1
        } else {
            -1
        }
    }

    pub fn derivative(&self) -> IntPoly {
        if self.coeffs.len() <= 1 {
            return IntPoly { coeffs: vec![] };
        }
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// A bound `B` with all real roots in `[-B, B]` (Cauchy bound).
    pub fn root_bound(&self) -> BigRational {
        let lead = self.coeffs.last().expect("nonzero polynomial").clone();
        let max_rest = self.coeffs[..self.coeffs.len() - 1]
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(BigInt::zero);
        BigRational::new(max_rest, lead.abs()) + BigRational::from_integer(BigInt::from(1))
    }
}

/// Shrink a sign-change bracket around a root down to width `2^-bits` by
/// bisection. The endpoint signs must differ; an endpoint that is itself a
/// root collapses to a point enclosure.
pub fn refine_root(p: &IntPoly, bracket: &RatInterval, bits: u32) -> Result<RatInterval> {
    let mut lo = bracket.lo().clone();
    let mut hi = bracket.hi().clone();
    let slo = p.sign_at(&lo);
    let shi = p.sign_at(&hi);
    if slo == 0 {
        return Ok(RatInterval::point(lo));
    }
    if shi == 0 {
        return Ok(RatInterval::point(hi));
    }
    if slo == shi {
        return Err(Error::NoSignChange);
    }
    let target = pow2(-(bits as i64));
    let two = BigRational::from_integer(BigInt::from(2));
    while &hi - &lo > target {
        let mid = (&lo + &hi) / &two;
        let sm = p.sign_at(&mid);
        if sm == 0 {
            return Ok(RatInterval::point(mid));
        }
        if sm == slo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    RatInterval::new(lo, hi)
}

/// Enclose the largest real root to width `2^-bits`. Scans down from the
/// Cauchy bound in quarter steps to find the rightmost sign change, then
/// bisects. Fails (`NoSignChange`) if no quarter-step bracket exists, e.g.
/// for polynomials whose rightmost real root is a too-close double root.
pub fn largest_real_root(p: &IntPoly, bits: u32) -> Result<RatInterval> {
    if p.degree() == 0 {
        return Err(Error::InvalidInput("constant polynomial has no roots".into()));
    }
    let bound = p.root_bound();
    let step = BigRational::new(BigInt::from(1), BigInt::from(4));
    let mut x_hi = bound.clone();
    let s_end = p.sign_at(&x_hi);
    if s_end == 0 {
        return Ok(RatInterval::point(x_hi));
    }
    let lower_limit = -&bound - &step;
    let mut x = x_hi.clone();
    loop {
        let x_next = &x - &step;
        if x_next < lower_limit {
            return Err(Error::NoSignChange);
        }
        let s = p.sign_at(&x_next);
        if s == 0 {
            return Ok(RatInterval::point(x_next));
        }
        if s != s_end {
            let bracket = RatInterval::new(x_next, x_hi)?;
            return refine_root(p, &bracket, bits);
        }
        x = x_next.clone();
        x_hi = x_next;
    }
}
