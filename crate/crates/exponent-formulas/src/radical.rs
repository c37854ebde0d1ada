//! Exact quadratic-radical values `offset + scale * sqrt(radicand)`.
//!
//! Every closed-form lower bound in this crate is either rational or of this
//! shape with nonnegative `scale` and `radicand`, so a single normalized
//! representation supports *exact* comparisons: against rationals by one
//! squaring, and against other radical values by reducing to a common
//! radicand when the radicands have a rational square ratio, or by disjoint
//! enclosures otherwise (two values with rationally independent radicands can
//! never be equal, so enclosure refinement terminates).

use exact_core::interval::{sqrt_rational_bounds, RatInterval};
use exact_core::{BigRational, BigUint, Error, Result, Signed, Zero};
use std::cmp::Ordering;

/// Exact square root of a nonnegative rational, when it is itself rational.
///
/// A reduced fraction `p/q` is a rational square iff `p` and `q` are both
/// perfect squares.
pub fn rational_sqrt_exact(r: &BigRational) -> Option<BigRational> {
    if r.is_negative() {
        return None;
    }
    if r.is_zero() {
        return Some(BigRational::zero());
    }
    let num = r.numer().magnitude();
    let den = r.denom().magnitude();
    let sn = num.sqrt();
    if &sn * &sn != *num {
        return None;
    }
    let sd = den.sqrt();
    if &sd * &sd != *den {
        return None;
    }
    Some(BigRational::new(sn.into(), sd.into()))
}

/// Sign of `a + b * sqrt(rad)` as an `Ordering` against zero.
///
/// `rad` must be nonnegative; `a` and `b` may have any sign.
pub fn sign_linear_radical(a: &BigRational, b: &BigRational, rad: &BigRational) -> Ordering {
    if b.is_zero() || rad.is_zero() {
        return a.cmp(&BigRational::zero());
    }
    if b.is_positive() {
        // a + b*sqrt(rad) > 0  <=>  sqrt(rad) > -a/b.
        let t = -(a / b);
        if t.is_negative() {
            Ordering::Greater
        } else {
            rad.cmp(&(&t * &t))
        }
    } else {
        sign_linear_radical(&(-a), &(-b), rad).reverse()
    }
}

/// Certified enclosure of `r^(1/k)` to roughly `bits` fractional bits.
///
/// Returns `(lo, hi)` with `lo <= r^(1/k) <= hi` and `hi - lo <= 2^-bits`;
/// `lo == hi` when the root is exactly rational at the working scale.
pub fn nth_root_bounds(r: &BigRational, k: u32, bits: u32) -> Result<(BigRational, BigRational)> {
    if k == 0 {
        return Err(Error::InvalidInput("zeroth root is undefined".into()));
    }
    if r.is_negative() {
        return Err(Error::OutOfRange("root of a negative rational".into()));
    }
    if k == 1 || r.is_zero() {
        return Ok((r.clone(), r.clone()));
    }
    let p = r.numer().magnitude().clone();
    let q = r.denom().magnitude().clone();
    // (p/q)^(1/k) = (p * q^(k-1) * 2^(k*bits))^(1/k) / (q * 2^bits)
    let scaled: BigUint = &p * q.pow(k - 1) * (BigUint::from(1u32) << (k as u64 * bits as u64));
    let v = scaled.nth_root(k);
    let denom: BigUint = &q * (BigUint::from(1u32) << bits);
    let lo = BigRational::new(v.clone().into(), denom.clone().into());
    if v.pow(k) == scaled {
        return Ok((lo.clone(), lo));
    }
    let hi = BigRational::new((v + BigUint::from(1u32)).into(), denom.into());
    Ok((lo, hi))
}

/// Normalized exact value `offset + scale * sqrt(radicand)`.
///
/// Invariants after construction: `scale >= 0`, `radicand >= 0`, and if the
/// radicand is a perfect rational square (or the scale is zero) the value is
/// folded into `offset` with `scale = radicand = 0`. Hence `scale > 0`
/// implies the value is irrational.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RadicalExpr {
    offset: BigRational,
    scale: BigRational,
    radicand: BigRational,
}

impl RadicalExpr {
    /// Exactly rational value.
    pub fn rational(r: BigRational) -> Self {
        RadicalExpr {
            offset: r,
            scale: BigRational::zero(),
            radicand: BigRational::zero(),
        }
    }

    /// Build `offset + scale * sqrt(radicand)`, requiring `scale >= 0` and
    /// `radicand >= 0`, and normalizing rational-square radicands away.
    pub fn new(offset: BigRational, scale: BigRational, radicand: BigRational) -> Result<Self> {
        if scale.is_negative() {
            return Err(Error::InvalidInput("radical scale must be nonnegative".into()));
        }
        if radicand.is_negative() {
            return Err(Error::InvalidInput("radicand must be nonnegative".into()));
        }
        if scale.is_zero() || radicand.is_zero() {
            return Ok(RadicalExpr::rational(offset));
        }
        if let Some(s) = rational_sqrt_exact(&radicand) {
            return Ok(RadicalExpr::rational(offset + scale * s));
        }
        Ok(RadicalExpr { offset, scale, radicand })
    }

    /// The rational value, when the expression normalized to one.
    pub fn as_rational(&self) -> Option<&BigRational> {
        if self.scale.is_zero() {
            Some(&self.offset)
        } else {
            None
        }
    }

    pub fn offset(&self) -> &BigRational {
        &self.offset
    }

    pub fn scale(&self) -> &BigRational {
        &self.scale
    }

    pub fn radicand(&self) -> &BigRational {
        &self.radicand
    }

    /// Certified enclosure to roughly `bits` fractional bits.
    pub fn enclosure(&self, bits: u32) -> RatInterval {
        if self.scale.is_zero() {
            return RatInterval::point(self.offset.clone());
        }
        let (lo, hi) = sqrt_rational_bounds(&self.radicand, bits);
        RatInterval::new(lo, hi)
            .expect("sqrt bounds are ordered")
            .mul_rat(&self.scale)
            .add_rat(&self.offset)
    }

    /// Reporting-only conversion.
    pub fn to_f64(&self) -> f64 {
        self.enclosure(64).mid_f64()
    }

    /// Exact comparison against a rational (single squaring, no rounding).
    pub fn cmp_rational(&self, r: &BigRational) -> Ordering {
        if self.scale.is_zero() {
            return self.offset.cmp(r);
        }
        // value vs r  <=>  sqrt(radicand) vs t := (r - offset)/scale.
        let t = (r - &self.offset) / &self.scale;
        if t.is_negative() {
            return Ordering::Greater;
        }
        self.radicand.cmp(&(&t * &t))
    }

    /// Exact comparison of two radical values.
    pub fn cmp(&self, other: &RadicalExpr) -> Ordering {
        match (self.as_rational(), other.as_rational()) {
            (Some(a), Some(b)) => a.cmp(b),
            (Some(a), None) => other.cmp_rational(a).reverse(),
            (None, Some(b)) => self.cmp_rational(b),
            (None, None) => {
                let ratio = &self.radicand / &other.radicand;
                if let Some(c) = rational_sqrt_exact(&ratio) {
                    // sqrt(r1) = c*sqrt(r2): compare over the common radicand.
                    let a = &self.offset - &other.offset;
                    let b = &self.scale * &c - &other.scale;
                    sign_linear_radical(&a, &b, &other.radicand)
                } else {
                    // Rationally independent radicands: equality would force
                    // sqrt(r1*r2) rational, contradicting non-square ratio, so
                    // enclosures separate at some finite precision.
                    let mut bits = 64u32;
                    loop {
                        let e1 = self.enclosure(bits);
                        let e2 = other.enclosure(bits);
                        if e1.hi() < e2.lo() {
                            return Ordering::Less;
                        }
                        if e1.lo() > e2.hi() {
                            return Ordering::Greater;
                        }
                        assert!(
                            bits < (1 << 20),
                            "enclosure separation failed for distinct radical values"
                        );
                        bits *= 2;
                    }
                }
            }
        }
    }
}

/// A certified lower bound that is either in closed quadratic form or held as
/// a shrinking enclosure (used where the closed form involves higher roots).
#[derive(Debug, Clone)]
pub enum BoundExpr {
    Quadratic(RadicalExpr),
    Enclosure(RatInterval),
}

impl BoundExpr {
    pub fn enclosure(&self, bits: u32) -> RatInterval {
        match self {
            BoundExpr::Quadratic(r) => r.enclosure(bits),
            BoundExpr::Enclosure(iv) => iv.clone(),
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.enclosure(64).mid_f64()
    }

    /// Certified `value >= r`. For an enclosure this requires the whole
    /// interval to sit at or above `r`.
    pub fn at_least(&self, r: &BigRational) -> bool {
        match self {
            BoundExpr::Quadratic(q) => q.cmp_rational(r) != Ordering::Less,
            BoundExpr::Enclosure(iv) => iv.lo() >= r,
        }
    }

    /// Certified `value <= r`.
    pub fn at_most(&self, r: &BigRational) -> bool {
        match self {
            BoundExpr::Quadratic(q) => q.cmp_rational(r) != Ordering::Greater,
            BoundExpr::Enclosure(iv) => iv.hi() <= r,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use exact_core::rational::{rat, rat_int};

    #[test]
    fn square_radicands_normalize_to_rationals() {
        // 3 + 2*sqrt(9/4) = 6
        let e = RadicalExpr::new(rat_int(3), rat_int(2), rat(9, 4)).unwrap();
        assert_eq!(e.as_rational(), Some(&rat_int(6)));
        // zero scale
        let e = RadicalExpr::new(rat(7, 2), rat_int(0), rat_int(5)).unwrap();
        assert_eq!(e.as_rational(), Some(&rat(7, 2)));
        // non-square stays radical
        let e = RadicalExpr::new(rat_int(0), rat_int(1), rat_int(5)).unwrap();
        assert!(e.as_rational().is_none());
    }

    #[test]
    fn rational_sqrt_detects_squares_only() {
        assert_eq!(rational_sqrt_exact(&rat(49, 81)), Some(rat(7, 9)));
        assert_eq!(rational_sqrt_exact(&rat_int(0)), Some(rat_int(0)));
        assert_eq!(rational_sqrt_exact(&rat(2, 1)), None);
        assert_eq!(rational_sqrt_exact(&rat(4, 5)), None);
        assert_eq!(rational_sqrt_exact(&rat(-4, 1)), None);
    }

    #[test]
    fn compare_against_rationals_is_exact() {
        // golden ratio (1 + sqrt 5)/2
        let phi = RadicalExpr::new(rat(1, 2), rat(1, 2), rat_int(5)).unwrap();
        assert_eq!(phi.cmp_rational(&rat(161803398874, 100000000000)), Ordering::Greater);
        assert_eq!(phi.cmp_rational(&rat(161803398875, 100000000000)), Ordering::Less);
        assert_eq!(phi.cmp_rational(&rat_int(1)), Ordering::Greater);
        assert_eq!(phi.cmp_rational(&rat_int(2)), Ordering::Less);
        // negative offsets: -10 + sqrt(2) = -8.585... sits between -9 and -8
        let e = RadicalExpr::new(rat_int(-10), rat_int(1), rat_int(2)).unwrap();
        assert_eq!(e.cmp_rational(&rat_int(-9)), Ordering::Greater);
        assert_eq!(e.cmp_rational(&rat_int(-8)), Ordering::Less);
    }

    #[test]
    fn compare_radicals_with_dependent_radicands() {
        // sqrt(20) = 2*sqrt(5)
        let a = RadicalExpr::new(rat_int(0), rat_int(1), rat_int(20)).unwrap();
        let b = RadicalExpr::new(rat_int(0), rat_int(2), rat_int(5)).unwrap();
        assert_eq!(a.cmp(&b), Ordering::Equal);
        // 1 + sqrt(5) vs 3*sqrt(5)/2 - 1/10: 3.23606 vs 3.25409
        let c = RadicalExpr::new(rat_int(1), rat_int(1), rat_int(5)).unwrap();
        let d = RadicalExpr::new(rat(-1, 10), rat(3, 2), rat_int(5)).unwrap();
        assert_eq!(c.cmp(&d), Ordering::Less);
    }

    #[test]
    fn compare_radicals_with_independent_radicands() {
        let a = RadicalExpr::new(rat_int(0), rat_int(1), rat_int(2)).unwrap(); // 1.41421
        let b = RadicalExpr::new(rat_int(0), rat_int(1), rat_int(3)).unwrap(); // 1.73205
        assert_eq!(a.cmp(&b), Ordering::Less);
        assert_eq!(b.cmp(&a), Ordering::Greater);
        // close pair: sqrt(2) + sqrt(3) handled as offsetless single radicals only,
        // so exercise a tight gap instead: 1 + sqrt(2) vs sqrt(5 + 83/100000)
        let c = RadicalExpr::new(rat_int(1), rat_int(1), rat_int(2)).unwrap();
        let d = RadicalExpr::new(rat_int(0), rat_int(1), rat(583283, 100000)).unwrap();
        assert_eq!(c.cmp(&d), Ordering::Less);
    }

    #[test]
    fn enclosure_brackets_the_value_tightly() {
        let phi = RadicalExpr::new(rat(1, 2), rat(1, 2), rat_int(5)).unwrap();
        let iv = phi.enclosure(100);
        assert!(iv.width() < rat(1, 1_000_000_000_000_000_000));
        let f = phi.to_f64();
        assert!((f - 1.618033988749895).abs() < 1e-12);
        // rational point
        let r = RadicalExpr::rational(rat(22, 7));
        assert_eq!(r.enclosure(10).width(), rat_int(0));
    }

    #[test]
    fn nth_root_bounds_are_certified() {
        // cube root of 2 to 80 bits
        let (lo, hi) = nth_root_bounds(&rat_int(2), 3, 80).unwrap();
        assert!(&lo * &lo * &lo <= rat_int(2));
        assert!(&hi * &hi * &hi >= rat_int(2));
        assert!(&hi - &lo <= rat(1, 1i64 << 60)); // 2^-80 < 2^-60
        // exact case: (27/8)^(1/3) = 3/2
        let (lo, hi) = nth_root_bounds(&rat(27, 8), 3, 16).unwrap();
        assert_eq!(lo, rat(3, 2));
        assert_eq!(hi, rat(3, 2));
        // k = 1 passthrough
        let (lo, hi) = nth_root_bounds(&rat(7, 3), 1, 4).unwrap();
        assert_eq!((lo, hi), (rat(7, 3), rat(7, 3)));
    }

    #[test]
    fn sign_of_linear_radical_handles_all_sign_patterns() {
        let five = rat_int(5);
        // 3 - sqrt(5) > 0
        assert_eq!(sign_linear_radical(&rat_int(3), &rat_int(-1), &five), Ordering::Greater);
        // 2 - sqrt(5) < 0
        assert_eq!(sign_linear_radical(&rat_int(2), &rat_int(-1), &five), Ordering::Less);
        // -2 + sqrt(5) > 0
        assert_eq!(sign_linear_radical(&rat_int(-2), &rat_int(1), &five), Ordering::Greater);
        // -3 + sqrt(5) < 0
        assert_eq!(sign_linear_radical(&rat_int(-3), &rat_int(1), &five), Ordering::Less);
        // 0 + 0*sqrt(5) = 0
        assert_eq!(sign_linear_radical(&rat_int(0), &rat_int(0), &five), Ordering::Equal);
        // exact zero: -3 + (3/2)*sqrt(4)
        assert_eq!(sign_linear_radical(&rat_int(-3), &rat(3, 2), &rat_int(4)), Ordering::Equal);
    }

    #[test]
    fn bound_expr_certifies_one_sided_comparisons() {
        let phi = BoundExpr::Quadratic(RadicalExpr::new(rat(1, 2), rat(1, 2), rat_int(5)).unwrap());
        assert!(phi.at_least(&rat(8, 5)));
        assert!(!phi.at_least(&rat(13, 8)));
        assert!(phi.at_most(&rat(13, 8)));
        let iv = BoundExpr::Enclosure(RatInterval::new(rat(3, 2), rat(8, 5)).unwrap());
        assert!(iv.at_least(&rat(3, 2)));
        assert!(!iv.at_least(&rat(31, 20))); // straddles
        assert!(iv.at_most(&rat(8, 5)));
    }

    #[test]
    fn invalid_constructions_are_rejected() {
        assert!(RadicalExpr::new(rat_int(0), rat_int(-1), rat_int(2)).is_err());
        assert!(RadicalExpr::new(rat_int(0), rat_int(1), rat_int(-2)).is_err());
        assert!(nth_root_bounds(&rat_int(-1), 2, 8).is_err());
        assert!(nth_root_bounds(&rat_int(2), 0, 8).is_err());
    }
}
