//! Regular continued fractions, continuants, and the quotient-folding
//! construction.
//!
//! A finite regular continued fraction is written `[b0; b1, ..., bs]` with
//! integer `b0` and positive partial quotients `b1, ..., bs`. The canonical
//! expansion of a rational has `bs >= 2` (an expansion ending in 1 can always
//! be merged into the previous quotient).

use crate::error::{Error, Result};
use crate::rational::floor_int;
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

/// A finite regular continued fraction `[b0; b1, ..., bs]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContinuedFraction {
    /// Integer part (any sign).
    pub b0: BigInt,
    /// Partial quotients, each at least 1.
    pub quotients: Vec<BigUint>,
}

impl ContinuedFraction {
    /// Build from parts, validating that every partial quotient is positive.
    pub fn new(b0: BigInt, quotients: Vec<BigUint>) -> Result<Self> {
        if quotients.iter().any(|q| q.is_zero()) {
            return Err(Error::InvalidInput("partial quotients must be positive".into()));
        }
        Ok(ContinuedFraction { b0, quotients })
    }

    /// Convenience constructor from machine integers.
    pub fn from_ints(b0: i64, quotients: &[u64]) -> Result<Self> {
        Self::new(
            BigInt::from(b0),
            quotients.iter().map(|&q| BigUint::from(q)).collect(),
        )
    }

    /// Exact value of the fraction.
    pub fn value(&self) -> BigRational {
        let (p, q) = self
            .convergents()
            .last()
            .cloned()
            .expect("convergents always include index 0");
        BigRational::new(p, q)
    }

    /// All convergents `(p_k, q_k)`, `k = 0..=s`, via the standard
    /// three-term recurrence. `q_k > 0` and `gcd(p_k, q_k) = 1`.
    pub fn convergents(&self) -> Vec<(BigInt, BigInt)> {
        let mut out = Vec::with_capacity(self.quotients.len() + 1);
        let mut p_prev = BigInt::one();
        let mut q_prev = BigInt::zero();
        let mut p = self.b0.clone();
        let mut q = BigInt::one();
        out.push((p.clone(), q.clone()));
        for b in &self.quotients {
            let bb = BigInt::from(b.clone());
            let p_next = &bb * &p + &p_prev;
            let q_next = &bb * &q + &q_prev;
            p_prev = p;
            q_prev = q;
            p = p_next;
            q = q_next;
            out.push((p.clone(), q.clone()));
        }
        out
    }

    /// True when the expansion is canonical: no quotients at all, or the
    /// final quotient is at least 2.
    pub fn is_canonical(&self) -> bool {
        match self.quotients.last() {
            None => true,
            Some(last) => *last >= BigUint::from(2u32),
        }
    }

    /// Canonicalize a trailing quotient of 1 by merging it into its
    /// predecessor (`[..., a, 1] -> [..., a+1]`, `[b0; 1] -> [b0+1;]`).
    /// Other quotients are untouched; the value is preserved.
    pub fn normalize(mut self) -> Self {
        if self.quotients.last().map(|l| l.is_one()) == Some(true) {
            self.quotients.pop();
            match self.quotients.last_mut() {
                Some(prev) => *prev += 1u32,
                None => self.b0 += 1,
            }
        }
        self
    }

    /// Sum of the partial quotients (the integer part is not included).
    pub fn quotient_sum(&self) -> BigUint {
        self.quotients.iter().sum()
    }

    /// Largest partial quotient, or None when there are no quotients.
    pub fn max_quotient(&self) -> Option<&BigUint> {
        self.quotients.iter().max()
    }
}

/// Canonical continued fraction expansion of a rational (Euclidean
/// algorithm). For non-integers the final quotient comes out at least 2.
pub fn cf_expand(x: &BigRational) -> ContinuedFraction {
    let b0 = floor_int(x);
    let mut quotients = Vec::new();
    // Work on the fractional part as a (numerator, denominator) pair.
    let frac = x - BigRational::from_integer(b0.clone());
    let mut num = frac.numer().clone();
    let mut den = frac.denom().clone();
    // Invariant: 0 <= num < den. Each step inverts and splits off the floor.
    while !num.is_zero() {
        let (q, r) = den.div_rem(&num);
        quotients.push(q.to_biguint().expect("quotient of positive parts"));
        den = num;
        num = r;
    }
    ContinuedFraction { b0, quotients }
}

use num_integer::Integer as _;

/// Exact value of a continued fraction (free-function form of
/// [`ContinuedFraction::value`]).
pub fn cf_value(cf: &ContinuedFraction) -> BigRational {
    cf.value()
}

/// Continuant `K(b_1, ..., b_k)`: the denominator of `[0; b_1, ..., b_k]`
/// as a polynomial in the quotients. `K() = 1`, `K(b_1) = b_1`, and
/// `K(b_1..b_k) = b_k * K(b_1..b_{k-1}) + K(b_1..b_{k-2})`.
pub fn continuant(b: &[BigUint]) -> BigUint {
    let mut prev = BigUint::one(); // K of empty sequence
    let mut cur = match b.first() {
        None => return prev,
        Some(f) => f.clone(),
    };
    for x in &b[1..] {
        let next = x * &cur + &prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Quotient folding: from the quotient list `b = (b_1, ..., b_s)` of a
/// fraction with denominator `q = K(b)` and a positive parameter `x`,
/// produce the longer quotient list
/// `(b_1, ..., b_s, x, 1, c_1 - 1, c_2, ..., c_s)` where `c` is `b`
/// reversed. Its continuant is exactly `q^2 * (x + 1)`, so the construction
/// squares the denominator while keeping all quotients bounded by
/// `max(b_j, x)`. Fails when the final quotient of `b` is 1 (then
/// `c_1 - 1` would vanish); canonical expansions always qualify.
pub fn fold(b: &[BigUint], x: &BigUint) -> Result<Vec<BigUint>> {
    if b.is_empty() {
        return Err(Error::FoldNotApplicable);
    }
    if x.is_zero() {
        return Err(Error::InvalidInput("folding parameter must be positive".into()));
    }
    let c: Vec<BigUint> = b.iter().rev().cloned().collect();
    if c[0].is_one() {
        return Err(Error::FoldNotApplicable);
    }
    let mut out = Vec::with_capacity(2 * b.len() + 2);
    out.extend_from_slice(b);
    out.push(x.clone());
    out.push(BigUint::one());
    out.push(&c[0] - 1u32);
    out.extend_from_slice(&c[1..]);
    Ok(out)
}
