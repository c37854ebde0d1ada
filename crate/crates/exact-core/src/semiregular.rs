//! Semiregular ("minus") continued fractions
//! `[[c; b_1, ..., b_l]] = c - 1/(b_1 - 1/(b_2 - ... - 1/b_l))`
//! with every term `b_j >= 2`. The value always lies in `(c - 1, c]`.

use crate::error::{Error, Result};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;

/// A finite semiregular continued fraction with subtracted partial fractions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemiregularCF {
    /// Leading integer term `c`.
    pub leading: BigInt,
    /// Terms `b_1, ..., b_l`, each at least 2.
    pub terms: Vec<BigUint>,
}

impl SemiregularCF {
    /// Build from parts, validating every term is at least 2.
    pub fn new(leading: BigInt, terms: Vec<BigUint>) -> Result<Self> {
        let two = BigUint::from(2u32);
        if terms.iter().any(|t| *t < two) {
            return Err(Error::InvalidInput(
                "semiregular terms must all be at least 2".into(),
            ));
        }
        Ok(SemiregularCF { leading, terms })
    }

    /// Convenience constructor from machine integers.
    pub fn from_ints(leading: i64, terms: &[u64]) -> Result<Self> {
        Self::new(
            BigInt::from(leading),
            terms.iter().map(|&t| BigUint::from(t)).collect(),
        )
    }

    /// Exact value `c - 1/(b_1 - 1/(... - 1/b_l))`.
    pub fn value(&self) -> BigRational {
        let lead = BigRational::from_integer(self.leading.clone());
        if self.terms.is_empty() {
            return lead;
        }
        // Evaluate the tail back to front: T_l = b_l, T_j = b_j - 1/T_{j+1}.
        // Every T_j > 1 (induction: T > 1 implies b - 1/T > b - 1 >= 1),
        // so no division by zero can occur.
        let mut tail =
            BigRational::from_integer(BigInt::from(self.terms.last().unwrap().clone()));
        for b in self.terms[..self.terms.len() - 1].iter().rev() {
            tail = BigRational::from_integer(BigInt::from(b.clone())) - tail.recip();
        }
        lead - tail.recip()
    }

    /// Sum of the terms (the leading integer is not included).
    pub fn term_sum(&self) -> BigUint {
        self.terms.iter().sum()
    }
}

/// Exact value of a semiregular continued fraction (free-function form of
/// [`SemiregularCF::value`]).
pub fn semiregular_value(cf: &SemiregularCF) -> BigRational {
    cf.value()
}

/// All semiregular term lists with a given term sum: the compositions of
/// `sum` into parts of size at least 2, in lexicographic order. The number
/// of compositions follows the Fibonacci recurrence.
pub fn compositions_min2(sum: u64) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    let mut parts: Vec<u64> = Vec::new();
    fn rec(remaining: u64, parts: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if remaining == 0 {
            out.push(parts.clone());
            return;
        }
        let mut b = 2u64;
        while b <= remaining {
            if remaining - b != 1 {
                parts.push(b);
                rec(remaining - b, parts, out);
                parts.pop();
            }
            b += 1;
        }
    }
    rec(sum, &mut parts, &mut out);
    out
}
