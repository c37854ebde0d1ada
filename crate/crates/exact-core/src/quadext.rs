//! Exact arithmetic in a real quadratic extension: numbers `a + b*sqrt(d)`
//! with rational `a, b` and a fixed positive non-square integer `d`.
//!
//! Comparisons are decided exactly by sign analysis (no enclosures needed):
//! the sign of `a + b*sqrt(d)` reduces to comparing `a^2` against `b^2 d`
//! when `a` and `b` have opposite signs.

use crate::error::{Error, Result};
use crate::interval::{sqrt_rational_bounds, RatInterval};
use num_bigint::BigInt;
use num_integer::Roots;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;

/// An element `a + b*sqrt(d)` of the real quadratic field `Q(sqrt(d))`.
#[derive(Clone, Debug)]
pub struct QuadExt {
    pub a: BigRational,
    pub b: BigRational,
    pub d: u64,
}

impl QuadExt {
    /// Build an element; `d` must be positive and not a perfect square.
    pub fn new(a: BigRational, b: BigRational, d: u64) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidSurd("radicand must be positive".into()));
        }
        let s = d.sqrt();
        if s * s == d {
            return Err(Error::InvalidSurd(format!(
                "radicand {d} is a perfect square; use plain rationals"
            )));
        }
        Ok(QuadExt { a, b, d })
    }

    /// The rational element `a + 0*sqrt(d)`.
    pub fn from_rat(a: BigRational, d: u64) -> Result<Self> {
        Self::new(a, BigRational::zero(), d)
    }

    /// `a + b*sqrt(d)` from machine-integer fractions.
    pub fn from_parts(an: i64, ad: i64, bn: i64, bd: i64, d: u64) -> Result<Self> {
        Self::new(
            BigRational::new(BigInt::from(an), BigInt::from(ad)),
            BigRational::new(BigInt::from(bn), BigInt::from(bd)),
            d,
        )
    }

    /// The golden ratio `(1 + sqrt(5)) / 2` as an element of `Q(sqrt(5))`.
    pub fn golden() -> Self {
        Self::from_parts(1, 2, 1, 2, 5).expect("valid")
    }

    /// `sqrt(d)` itself.
    pub fn root(d: u64) -> Result<Self> {
        Self::new(BigRational::zero(), BigRational::one(), d)
    }

    fn same_field(&self, other: &QuadExt) {
        assert_eq!(self.d, other.d, "mixing different quadratic fields");
    }

    pub fn add(&self, other: &QuadExt) -> QuadExt {
        self.same_field(other);
        QuadExt { a: &self.a + &other.a, b: &self.b + &other.b, d: self.d }
    }

    pub fn sub(&self, other: &QuadExt) -> QuadExt {
        self.same_field(other);
        QuadExt { a: &self.a - &other.a, b: &self.b - &other.b, d: self.d }
    }

    pub fn neg(&self) -> QuadExt {
        QuadExt { a: -&self.a, b: -&self.b, d: self.d }
    }

    pub fn mul(&self, other: &QuadExt) -> QuadExt {
        self.same_field(other);
        let dd = BigRational::from_integer(BigInt::from(self.d));
        QuadExt {
            a: &self.a * &other.a + (&self.b * &other.b) * &dd,
            b: &self.a * &other.b + &self.b * &other.a,
            d: self.d,
        }
    }

    pub fn mul_rat(&self, r: &BigRational) -> QuadExt {
        QuadExt { a: &self.a * r, b: &self.b * r, d: self.d }
    }

    pub fn add_rat(&self, r: &BigRational) -> QuadExt {
        QuadExt { a: &self.a + r, b: self.b.clone(), d: self.d }
    }

    /// Galois conjugate `a - b*sqrt(d)`.
    pub fn conj(&self) -> QuadExt {
        QuadExt { a: self.a.clone(), b: -&self.b, d: self.d }
    }

    /// Field norm `a^2 - b^2 d` (a rational).
    pub fn norm(&self) -> BigRational {
        let dd = BigRational::from_integer(BigInt::from(self.d));
        &self.a * &self.a - (&self.b * &self.b) * &dd
    }

    /// Multiplicative inverse; fails on zero.
    pub fn recip(&self) -> Result<QuadExt> {
        if self.is_zero() {
            return Err(Error::InvalidInput("reciprocal of zero".into()));
        }
        let n = self.norm();
        // norm != 0 because d is not a perfect square
        Ok(self.conj().mul_rat(&n.recip()))
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Exact sign: -1, 0, or 1.
    pub fn sign(&self) -> i32 {
        let sa = rat_sign(&self.a);
        let sb = rat_sign(&self.b);
        match (sa, sb) {
            (0, 0) => 0,
            (s, 0) => s,
            (0, s) => s,
            (1, 1) => 1,
            (-1, -1) => -1,
            _ => {
                // Opposite signs: compare a^2 with b^2 d.
                let dd = BigRational::from_integer(BigInt::from(self.d));
                let lhs = &self.a * &self.a;
                let rhs = (&self.b * &self.b) * &dd;
                match lhs.cmp(&rhs) {
                    Ordering::Equal => 0, // impossible for non-square d with b != 0
                    Ordering::Greater => sa,
                    Ordering::Less => sb,
                }
            }
        }
    }

    pub fn pow(&self, mut n: u32) -> QuadExt {
        let mut base = self.clone();
        let mut acc = QuadExt {
            a: BigRational::one(),
            b: BigRational::zero(),
            d: self.d,
        };
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            n >>= 1;
        }
        acc
    }

    /// Certified enclosure with width about `2^-bits`.
    pub fn enclose(&self, bits: u32) -> RatInterval {
        let (lo_s, hi_s) = sqrt_rational_bounds(
            &BigRational::from_integer(BigInt::from(self.d)),
            bits + 8,
        );
        let sqrt_iv = RatInterval::new(lo_s, hi_s).expect("ordered");
        sqrt_iv.mul_rat(&self.b).add_rat(&self.a)
    }
}

fn rat_sign(r: &BigRational) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

impl PartialEq for QuadExt {
    fn eq(&self, other: &Self) -> bool {
        self.same_field(other);
        self.a == other.a && self.b == other.b
    }
}

impl Eq for QuadExt {}

impl PartialOrd for QuadExt {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QuadExt {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.sub(other).sign() {
            -1 => Ordering::Less,
            0 => Ordering::Equal,
            _ => Ordering::Greater,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn golden_ratio_identities() {
        let phi = QuadExt::golden();
        // phi^2 = phi + 1
        let phi2 = phi.mul(&phi);
        let rhs = phi.add_rat(&rat(1, 1));
        assert_eq!(phi2, rhs);
        // phi^3 = 2 phi + 1
        let phi3 = phi.pow(3);
        let rhs3 = phi.mul_rat(&rat(2, 1)).add_rat(&rat(1, 1));
        assert_eq!(phi3, rhs3);
        // norm(phi) = ((1)^2 - 5) / 4 = -1
        assert_eq!(phi.norm(), rat(-1, 1));
        // 1/phi = phi - 1
        assert_eq!(phi.recip().unwrap(), phi.add_rat(&rat(-1, 1)));
    }

    #[test]
    fn exact_signs() {
        // sqrt(2) - 1.41 > 0, sqrt(2) - 1.42 < 0
        let r2 = QuadExt::root(2).unwrap();
        assert_eq!(r2.add_rat(&rat(-141, 100)).sign(), 1);
        assert_eq!(r2.add_rat(&rat(-142, 100)).sign(), -1);
        // 3 - 2*sqrt(2) > 0 (3^2 = 9 > 8)
        let x = QuadExt::from_parts(3, 1, -2, 1, 2).unwrap();
        assert_eq!(x.sign(), 1);
        // 2*sqrt(2) - 3 < 0
        assert_eq!(x.neg().sign(), -1);
        assert_eq!(QuadExt::from_parts(0, 1, 0, 1, 7).unwrap().sign(), 0);
    }

    #[test]
    fn ordering() {
        let phi = QuadExt::golden();
        let low = QuadExt::from_parts(161, 100, 0, 1, 5).unwrap();
        let high = QuadExt::from_parts(162, 100, 0, 1, 5).unwrap();
        assert!(low < phi && phi < high);
    }

    #[test]
    fn boundary_square_root_in_the_field() {
        // In Z[phi]: (5 phi + 2)^2 = 45 phi + 29.
        let phi = QuadExt::golden();
        let lhs = phi.mul_rat(&rat(5, 1)).add_rat(&rat(2, 1)).pow(2);
        let rhs = phi.mul_rat(&rat(45, 1)).add_rat(&rat(29, 1));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn rejects_square_radicand() {
        assert!(QuadExt::root(16).is_err());
        assert!(QuadExt::root(0).is_err());
    }

    #[test]
    fn enclosure_contains_value() {
        let x = QuadExt::from_parts(1, 3, -2, 7, 13).unwrap();
        let iv = x.enclose(80);
        // 1/3 - (2/7)*3.6055512754... = -0.69682417...
        assert!(iv.lo() < &rat(-69682, 100000));
        assert!(iv.hi() > &rat(-69683, 100000));
        assert!(iv.width() < rat(1, 1 << 62));
    }
}
