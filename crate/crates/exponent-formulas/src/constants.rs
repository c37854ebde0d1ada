//! Certified enclosures for the named constants of the theory: spectral
//! roots of low-degree polynomials, logarithmic derivative thresholds, and
//! growth-rate bounds for best-approximation denominators.

use crate::radical::{nth_root_bounds, RadicalExpr};
use exact_core::interval::RatInterval;
use exact_core::poly::largest_real_root;
use exact_core::rational::{pow2, rat, rat_int};
use exact_core::transcend::{ln2, ln_of_interval};
use exact_core::{BigRational, Error, IntPoly, Result, Signed, Zero};

/// `x^k` by binary exponentiation.
fn rat_pow(x: &BigRational, mut k: u32) -> BigRational {
    let mut base = x.clone();
    let mut acc = rat_int(1);
    if k == 0 {
        return acc;
    }
    loop {
        if k & 1 == 1 {
            acc *= &base;
        }
        k >>= 1;
        if k == 0 {
            break;
        }
        base = &base * &base;
    }
    acc
}

/// `iv^k` for an interval with nonnegative lower end.
fn pow_interval(iv: &RatInterval, k: u32) -> Result<RatInterval> {
    if iv.lo().is_negative() {
        return Err(Error::OutOfRange("interval power needs a nonnegative interval".into()));
    }
    RatInterval::new(rat_pow(iv.lo(), k), rat_pow(iv.hi(), k))
}

/// `iv^(1/k)` for an interval with nonnegative lower end.
fn nth_root_interval(iv: &RatInterval, k: u32, bits: u32) -> Result<RatInterval> {
    if iv.lo().is_negative() {
        return Err(Error::OutOfRange("interval root needs a nonnegative interval".into()));
    }
    let (lo, _) = nth_root_bounds(iv.lo(), k, bits)?;
    let (_, hi) = nth_root_bounds(iv.hi(), k, bits)?;
    RatInterval::new(lo, hi)
}

/// Golden ratio as a radical expression.
pub fn golden_ratio() -> RadicalExpr {
    RadicalExpr::new(rat(1, 2), rat(1, 2), rat_int(5)).expect("golden ratio is well formed")
}

/// Enclosure of the largest root of `t^k - a*t - b` (`a, b >= 1`, `k >= 2`).
///
/// For these parameters the polynomial is increasing on `[1, inf)` with a
/// sign change, so plain bisection with exact rational evaluation certifies
/// the unique root above 1. Evaluation uses binary exponentiation, so large
/// sparse degrees stay cheap.
fn sparse_power_root(k: u32, a: i64, b: i64, bits: u32) -> Result<RatInterval> {
    if k < 2 || a < 1 || b < 1 {
        return Err(Error::OutOfRange("sparse root needs k >= 2, a >= 1, b >= 1".into()));
    }
    let eval = |t: &BigRational| rat_pow(t, k) - rat_int(a) * t - rat_int(b);
    let mut lo = rat_int(1);
    let mut hi = rat_int(2);
    while !eval(&hi).is_positive() {
        hi = &hi * rat_int(2);
    }
    let tol = pow2(-(bits as i64));
    while &hi - &lo > tol {
        let mid = (&lo + &hi) / rat_int(2);
        let v = eval(&mid);
        if v.is_zero() {
            return Ok(RatInterval::point(mid));
        }
        if v.is_positive() {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    RatInterval::new(lo, hi)
}

/// Largest root of `t^(2^(n+1)) = 2t + 1`: the growth rate forced on
/// best-approximation denominators by the doubling recurrence in dimension
/// `n`. `n = 0` gives `1 + sqrt 2`; the roots decrease to 1 as `n` grows.
pub fn doubling_recurrence_root(n: u32, bits: u32) -> Result<RatInterval> {
    if n > 12 {
        return Err(Error::BudgetExceeded(
            "doubling recurrence root limited to n <= 12".into(),
        ));
    }
    sparse_power_root(1u32 << (n + 1), 2, 1, bits)
}

/// Largest root of `t^k = t + 1`: the growth rate forced by the
/// contact-number recurrence when `k` consecutive denominators interleave.
/// `k = 2` gives the golden ratio, `k = 3` the plastic number, and the roots
/// decrease to 1 as `k` grows.
pub fn contact_recurrence_root(k: u32, bits: u32) -> Result<RatInterval> {
    if k > 8192 {
        return Err(Error::BudgetExceeded(
            "contact recurrence root limited to k <= 8192".into(),
        ));
    }
    sparse_power_root(k, 1, 1, bits)
}

/// The three constants of the quartic one-sided counterexample: the largest
/// root `sigma` of `x^4 - 2x^2 - 4x + 1`, and the ordinary and uniform
/// exponents realized by the construction,
/// `(sigma+1)^2 (sigma^2 - 1) / (4 sigma)` and `(sigma+1)^2 / (2 sigma)`.
///
/// `sigma` satisfies `(sigma^2 - 1)^2 = 4 sigma`, so the ordinary exponent
/// simplifies to `(sigma + 1)/(sigma - 1)`; both forms are exposed for
/// cross-checking.
#[derive(Debug, Clone)]
pub struct QuarticConstants {
    pub root: RatInterval,
    pub ordinary: RatInterval,
    pub ordinary_simplified: RatInterval,
    pub uniform: RatInterval,
}

pub fn quartic_counterexample_constants(bits: u32) -> Result<QuarticConstants> {
    let work = bits + 16;
    let poly = IntPoly::from_ints(&[1, -4, -2, 0, 1]);
    let root = largest_real_root(&poly, work)?;
    let one = rat_int(1);
    let s_plus_sq = root.add_rat(&one).square();
    let s_sq_minus = root.square().sub_rat(&one);
    let ordinary = s_plus_sq
        .mul(&s_sq_minus)
        .mul(&root.mul_rat(&rat_int(4)).recip()?);
    let ordinary_simplified = root.add_rat(&one).mul(&root.sub_rat(&one).recip()?);
    let uniform = s_plus_sq.mul(&root.mul_rat(&rat_int(2)).recip()?);
    Ok(QuarticConstants { root, ordinary, ordinary_simplified, uniform })
}

/// `2 ln(golden) / ln 2`: average partial-quotient slope below which the
/// derivative of the binary-structure distribution function is forced to
/// `+inf` wherever it exists.
pub fn derivative_threshold_low(bits: u32) -> Result<RatInterval> {
    let work = bits + 16;
    let phi = golden_ratio().enclosure(work);
    let ln_phi = ln_of_interval(&phi, work)?;
    let l2 = ln2(work);
    Ok(ln_phi.mul_rat(&rat_int(2)).mul(&l2.recip()?))
}

/// `(4 L_5 - 5 L_4)/(L_5 - L_4)` with
/// `L_j = ln((j + sqrt(j^2 + 4))/2) - j ln(2)/2`: average partial-quotient
/// slope above which that derivative is forced to 0 wherever it exists.
pub fn derivative_threshold_high(bits: u32) -> Result<RatInterval> {
    let work = bits + 24;
    let l2 = ln2(work);
    let level = |j: i64| -> Result<RatInterval> {
        let alpha = RadicalExpr::new(rat(j, 2), rat(1, 2), rat_int(j * j + 4))?.enclosure(work);
        Ok(ln_of_interval(&alpha, work)?.sub(&l2.mul_rat(&rat(j, 2))))
    };
    let l4 = level(4)?;
    let l5 = level(5)?;
    let num = l5.mul_rat(&rat_int(4)).sub(&l4.mul_rat(&rat_int(5)));
    let den = l5.sub(&l4);
    Ok(num.mul(&den.recip()?))
}

/// Lower bound for the minimal sup-norm growth rate of best-approximation
/// denominators for two numbers:
/// `r * ((8 + 13 r) / r^13)^(1/11)` with `r = sqrt(golden)`.
pub fn sup_norm_growth_lower(bits: u32) -> Result<RatInterval> {
    let work = bits + 32;
    let phi = golden_ratio().enclosure(2 * work);
    let r = phi.sqrt(work)?;
    let r13 = pow_interval(&r, 13)?;
    let num = r.mul_rat(&rat_int(13)).add_rat(&rat_int(8));
    let ratio = num.mul(&r13.recip()?);
    let root11 = nth_root_interval(&ratio, 11, work)?;
    Ok(r.mul(&root11))
}

/// Best reported lower bound for the Euclidean-norm analogue of the minimal
/// growth rate. No closed form is published; the decimal `1.228043` is
/// stored as the literal it is.
pub fn euclidean_growth_lower_literal() -> BigRational {
    rat(1_228_043, 1_000_000)
}

/// A named constant with a certified enclosure.
#[derive(Debug, Clone)]
pub struct NamedConstant {
    pub name: &'static str,
    pub description: &'static str,
    pub value: RatInterval,
}

/// The reference table of named constants, each enclosed to roughly `bits`
/// fractional bits.
pub fn reference_constants(bits: u32) -> Result<Vec<NamedConstant>> {
    let quartic = quartic_counterexample_constants(bits)?;
    Ok(vec![
        NamedConstant {
            name: "golden-ratio",
            description: "(1 + sqrt 5)/2, the extremal growth rate in one dimension",
            value: golden_ratio().enclosure(bits),
        },
        NamedConstant {
            name: "golden-ratio-sqrt",
            description: "sqrt((1 + sqrt 5)/2), base of the sup-norm growth bound",
            value: golden_ratio().enclosure(2 * bits + 8).sqrt(bits)?,
        },
        NamedConstant {
            name: "plastic-number",
            description: "real root of t^3 = t + 1, minimal growth rate of the contact recurrence at k = 3",
            value: contact_recurrence_root(3, bits)?,
        },
        NamedConstant {
            name: "quartic-spectral-root",
            description: "largest root of x^4 - 2x^2 - 4x + 1, the sharp one-sided exponent of the quartic construction",
            value: quartic.root.clone(),
        },
        NamedConstant {
            name: "quartic-ordinary-exponent",
            description: "(sigma+1)^2 (sigma^2-1)/(4 sigma) at the quartic spectral root",
            value: quartic.ordinary.clone(),
        },
        NamedConstant {
            name: "quartic-uniform-exponent",
            description: "(sigma+1)^2/(2 sigma) at the quartic spectral root",
            value: quartic.uniform.clone(),
        },
        NamedConstant {
            name: "derivative-threshold-low",
            description: "2 ln(golden)/ln 2, below which the binary-structure derivative is infinite where defined",
            value: derivative_threshold_low(bits)?,
        },
        NamedConstant {
            name: "derivative-threshold-high",
            description: "(4 L5 - 5 L4)/(L5 - L4), above which the binary-structure derivative vanishes where defined",
            value: derivative_threshold_high(bits)?,
        },
        NamedConstant {
            name: "sup-growth-lower",
            description: "sqrt(golden) * ((8 + 13 sqrt(golden))/sqrt(golden)^13)^(1/11), sup-norm growth bound in dimension 2",
            value: sup_norm_growth_lower(bits)?,
        },
        NamedConstant {
            name: "euclidean-growth-lower",
            description: "reported numerical lower bound for the Euclidean-norm growth rate in dimension 2",
            value: RatInterval::point(euclidean_growth_lower_literal()),
        },
        NamedConstant {
            name: "doubling-recurrence-root-1",
            description: "largest root of t^4 = 2t + 1, doubling-recurrence growth rate at n = 1",
            value: doubling_recurrence_root(1, bits)?,
        },
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bracket(iv: &RatInterval, lo_n: i64, hi_n: i64, d: i64) {
        assert!(
            iv.lo() > &rat(lo_n, d) && iv.hi() < &rat(hi_n, d),
            "enclosure [{}, {}] escapes ({}/{d}, {}/{d})",
            iv.lo(),
            iv.hi(),
            lo_n,
            hi_n
        );
    }

    #[test]
    fn quartic_constants_digits() {
        let q = quartic_counterexample_constants(64).unwrap();
        bracket(&q.root, 194_696_532, 194_696_533, 100_000_000);
        bracket(&q.ordinary, 311_200_974, 311_200_975, 100_000_000);
        bracket(&q.uniform, 223_029_257, 223_029_258, 100_000_000);
    }

    #[test]
    fn quartic_root_satisfies_the_simplifying_identity() {
        // (sigma^2 - 1)^2 = 4 sigma, so both ordinary forms agree
        let q = quartic_counterexample_constants(80).unwrap();
        let lhs = q.root.square().sub_rat(&rat_int(1)).square();
        let rhs = q.root.mul_rat(&rat_int(4));
        let diff = lhs.sub(&rhs);
        assert!(diff.contains(&rat_int(0)));
        assert!(diff.width() < rat(1, 1_000_000_000));
        // the two ordinary enclosures overlap and are both tight
        assert!(q.ordinary.lo() <= q.ordinary_simplified.hi());
        assert!(q.ordinary_simplified.lo() <= q.ordinary.hi());
        assert!(q.ordinary.width() < rat(1, 1i64 << 40));
    }

    #[test]
    fn derivative_thresholds_digits() {
        let low = derivative_threshold_low(48).unwrap();
        bracket(&low, 13_884_838, 13_884_839, 10_000_000);
        let high = derivative_threshold_high(48).unwrap();
        bracket(&high, 44_010_487, 44_010_488, 10_000_000);
    }

    #[test]
    fn sup_norm_growth_digits() {
        let v = sup_norm_growth_lower(64).unwrap();
        bracket(&v, 128_040_491, 128_040_492, 100_000_000);
        assert!(v.width() < rat(1, 1i64 << 50));
    }

    #[test]
    fn recurrence_roots_special_values() {
        // contact k = 2: golden ratio
        let iv = contact_recurrence_root(2, 64).unwrap();
        let phi = golden_ratio().enclosure(70);
        assert!(iv.lo() <= phi.hi() && phi.lo() <= iv.hi());
        // contact k = 3: plastic number 1.324717957...
        bracket(&contact_recurrence_root(3, 64).unwrap(), 132_471_795, 132_471_796, 100_000_000);
        // contact k = 5: 1.167303978...
        bracket(&contact_recurrence_root(5, 64).unwrap(), 116_730_397, 116_730_398, 100_000_000);
        // doubling n = 0: 1 + sqrt 2
        let iv = doubling_recurrence_root(0, 64).unwrap();
        let silver = RadicalExpr::new(rat_int(1), rat_int(1), rat_int(2))
            .unwrap()
            .enclosure(70);
        assert!(iv.lo() <= silver.hi() && silver.lo() <= iv.hi());
        // doubling n = 1: 1.395336994...
        bracket(&doubling_recurrence_root(1, 64).unwrap(), 139_533_699, 139_533_700, 100_000_000);
        // roots decrease in their index
        let c6 = contact_recurrence_root(6, 48).unwrap();
        let c5 = contact_recurrence_root(5, 48).unwrap();
        assert!(c6.hi() < c5.lo());
        let d2 = doubling_recurrence_root(2, 48).unwrap();
        let d1 = doubling_recurrence_root(1, 48).unwrap();
        assert!(d2.hi() < d1.lo());
        // budget guards
        assert!(doubling_recurrence_root(13, 16).is_err());
        assert!(contact_recurrence_root(10_000, 16).is_err());
    }

    #[test]
    fn reference_table_is_complete_and_tight() {
        let table = reference_constants(48).unwrap();
        assert_eq!(table.len(), 11);
        let mut names: Vec<&str> = table.iter().map(|c| c.name).collect();
        names.sort_unstable();
        names.dedup();
        assert_eq!(names.len(), 11, "constant names must be unique");
        for c in &table {
            assert!(
                c.value.width() <= rat(1, 1i64 << 40),
                "{} enclosure too wide: {}",
                c.name,
                c.value.width()
            );
            assert!(!c.description.is_empty());
        }
    }

    #[test]
    fn euclidean_literal_value() {
        assert_eq!(euclidean_growth_lower_literal(), rat(1_228_043, 1_000_000));
    }
}
