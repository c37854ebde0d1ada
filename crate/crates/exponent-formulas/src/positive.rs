//! Lower bounds for approximation restricted to positive values of the
//! linear forms (one-sided approximation), and for approximation from
//! angular or constrained domains.
//!
//! Setting for the two-form results: `theta = (theta_1, theta_2)` with
//! `1, theta_1, theta_2` linearly independent over the rationals, `omega` and
//! `omega_hat` the ordinary and uniform exponents for a single linear form in
//! the two numbers, and `omega_plus` the exponent where the form is required
//! to take positive values. The admissible pairs form the region
//! `omega_hat >= 2`, `omega >= omega_hat*(omega_hat - 1)`.

use crate::four_exponent::ExponentValue;
use crate::radical::RadicalExpr;
use exact_core::interval::RatInterval;
use exact_core::poly::largest_real_root;
use exact_core::rational::{rat, rat_int};
use exact_core::{BigRational, Error, IntPoly, Result, Signed};
use std::cmp::Ordering;

/// `G(omega) = ((omega+1)/omega + sqrt(((omega+1)/omega)^2 + 4)) / 2`,
/// the growth-rate lower bound for the one-sided exponent on the inner
/// admissibility region. Decreasing in `omega`, with `G(2) = 2` exactly and
/// `G(+inf)` the golden ratio.
pub fn growth_bound(omega: &ExponentValue) -> Result<RadicalExpr> {
    match omega {
        ExponentValue::Finite(w) => {
            if !w.is_positive() {
                return Err(Error::OutOfRange("growth bound needs omega > 0".into()));
            }
            let s = (w + rat_int(1)) / w;
            let radicand = &s * &s + rat_int(4);
            RadicalExpr::new(s / rat_int(2), rat(1, 2), radicand)
        }
        ExponentValue::Infinite => {
            // limit: (1 + sqrt 5)/2
            RadicalExpr::new(rat(1, 2), rat(1, 2), rat_int(5))
        }
    }
}

/// `omega_hat - 1 + omega_hat/omega`, the mixed lower bound for the
/// one-sided exponent (sharp on the outer admissibility region).
pub fn mixed_positive_lower(omega: &ExponentValue, omega_hat: &BigRational) -> Result<BigRational> {
    match omega {
        ExponentValue::Finite(w) => {
            if !w.is_positive() {
                return Err(Error::OutOfRange("mixed bound needs omega > 0".into()));
            }
            Ok(omega_hat - rat_int(1) + omega_hat / w)
        }
        ExponentValue::Infinite => Ok(omega_hat - rat_int(1)),
    }
}

/// `omega_hat / (omega_hat - 1)`: one-sided exponent bound from the uniform
/// exponent alone (needs `omega_hat > 1`).
pub fn uniform_ratio_lower(omega_hat: &BigRational) -> Result<BigRational> {
    if omega_hat <= &rat_int(1) {
        return Err(Error::OutOfRange("ratio bound needs omega_hat > 1".into()));
    }
    Ok(omega_hat / (omega_hat - rat_int(1)))
}

/// `omega / (omega - 1)`: the same ratio shape bounds the *uniform*
/// one-sided exponent from the ordinary exponent (needs `omega > 1`;
/// the value tends to 1 as `omega` grows).
pub fn dual_uniform_positive_lower(omega: &ExponentValue) -> Result<BigRational> {
    match omega {
        ExponentValue::Finite(w) => {
            if w <= &rat_int(1) {
                return Err(Error::OutOfRange("ratio bound needs omega > 1".into()));
            }
            Ok(w / (w - rat_int(1)))
        }
        ExponentValue::Infinite => Ok(rat_int(1)),
    }
}

/// Unconditional one-sided bound: the exponent is at least the golden ratio
/// for every admissible pair.
pub fn unconditional_positive_lower() -> RadicalExpr {
    RadicalExpr::new(rat(1, 2), rat(1, 2), rat_int(5)).expect("golden ratio is well formed")
}

/// One-sided bound from the dual ordinary exponent `omega_star`
/// (`1/2 <= omega_star <= 1`): with `A = (omega_star + 1)/(4*omega_star)`,
/// the exponent is at least `A + sqrt(A^2 + 1)`.
pub fn simultaneous_ratio_positive_lower(omega_star: &BigRational) -> Result<RadicalExpr> {
    if omega_star < &rat(1, 2) || omega_star > &rat_int(1) {
        return Err(Error::OutOfRange(format!(
            "dual ordinary exponent of a two-form system lies in [1/2, 1], got {omega_star}"
        )));
    }
    let a = (omega_star + rat_int(1)) / (rat_int(4) * omega_star);
    let radicand = &a * &a + rat_int(1);
    RadicalExpr::new(a, rat_int(1), radicand)
}

/// Which of the two one-sided branches is known to be sharp at `(omega,
/// omega_hat)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BranchRegion {
    /// Inner region (`omega_hat <= golden^2` and `omega` at least
    /// `omega_hat*(omega_hat-1)/(3*omega_hat - omega_hat^2 - 1)`):
    /// the growth-function branch applies.
    GrowthFunction,
    /// Complementary region: the mixed branch applies.
    MixedRatio,
}

/// Combined one-sided lower bound with its region classification.
#[derive(Debug, Clone)]
pub struct PositiveBoundReport {
    pub region: BranchRegion,
    /// `G(omega)`.
    pub growth_branch: RadicalExpr,
    /// `omega_hat - 1 + omega_hat/omega`.
    pub mixed_branch: BigRational,
    /// `max(growth_branch, mixed_branch)` (exact comparison).
    pub bound: RadicalExpr,
}

/// Exact classification of `(omega, omega_hat)` and the resulting one-sided
/// lower bound. Requires the pair to be admissible: `omega_hat >= 2` and
/// `omega >= omega_hat*(omega_hat - 1)`.
pub fn positive_exponent_bound(
    omega: &ExponentValue,
    omega_hat: &BigRational,
) -> Result<PositiveBoundReport> {
    let two = rat_int(2);
    if omega_hat < &two {
        return Err(Error::OutOfRange(format!(
            "admissible pairs need omega_hat >= 2, got {omega_hat}"
        )));
    }
    let floor = omega_hat * (omega_hat - rat_int(1));
    let admissible = match omega {
        ExponentValue::Infinite => true,
        ExponentValue::Finite(w) => w >= &floor,
    };
    if !admissible {
        return Err(Error::OutOfRange(
            "admissible pairs need omega >= omega_hat*(omega_hat - 1)".into(),
        ));
    }

    // Inner region test: omega_hat <= golden^2 = (3 + sqrt 5)/2, decided by
    // comparing 2*omega_hat - 3 with sqrt 5 (omega_hat rational, so equality
    // cannot occur), and then omega >= omega_hat*(omega_hat-1)/(3*omega_hat -
    // omega_hat^2 - 1). The denominator is positive throughout
    // 2 <= omega_hat < golden^2.
    let t = rat_int(2) * omega_hat - rat_int(3);
    let below_golden_sq = t.is_negative() || &t * &t < rat_int(5);
    let region = if below_golden_sq {
        let den = rat_int(3) * omega_hat - omega_hat * omega_hat - rat_int(1);
        let threshold = omega_hat * (omega_hat - rat_int(1)) / den;
        let inner = match omega {
            ExponentValue::Infinite => true,
            ExponentValue::Finite(w) => w >= &threshold,
        };
        if inner {
            BranchRegion::GrowthFunction
        } else {
            BranchRegion::MixedRatio
        }
    } else {
        BranchRegion::MixedRatio
    };

    let growth_branch = growth_bound(omega)?;
    let mixed_branch = mixed_positive_lower(omega, omega_hat)?;
    let bound = if growth_branch.cmp_rational(&mixed_branch) == Ordering::Less {
        RadicalExpr::rational(mixed_branch.clone())
    } else {
        growth_branch.clone()
    };
    Ok(PositiveBoundReport { region, growth_branch, mixed_branch, bound })
}

/// Largest real root of `rho*x^3 - 2*(rho - 1)*x^2 - 2*rho*x - 1` for
/// `1 <= rho <= 7/4`: the approximation exponent attainable inside an
/// angular domain of aperture parameter `rho`. At `rho = 1` the root is the
/// golden ratio.
pub fn angular_cubic_root(rho: &BigRational, bits: u32) -> Result<RatInterval> {
    if rho < &rat_int(1) || rho > &rat(7, 4) {
        return Err(Error::OutOfRange(format!(
            "angular exponent root is defined for 1 <= rho <= 7/4, got {rho}"
        )));
    }
    let d = rho.denom().clone();
    let n = rho.numer().clone();
    // multiply through by denom(rho)
    let two = exact_core::BigInt::from(2);
    let coeffs = vec![-d.clone(), -(&n * &two), -((&n - &d) * &two), n.clone()];
    largest_real_root(&IntPoly::new(coeffs), bits)
}

/// Exact value of the angular-domain admissibility form
///
/// `(1-tau)*(rho*(t^2 r - t r - t - r - 1) + t^2) + (1-rho)*(t^2 - 1)`
///
/// whose nonpositivity characterizes the exponent pairs `(t, r)` reachable
/// with domain parameters `(rho, tau)`. Requires `rho > 1`, `tau >= 0`,
/// `1 < t <= r <= 2`.
pub fn angular_condition_value(
    rho: &BigRational,
    tau: &BigRational,
    t: &BigRational,
    r: &BigRational,
) -> Result<BigRational> {
    let one = rat_int(1);
    if rho <= &one {
        return Err(Error::OutOfRange("need rho > 1".into()));
    }
    if tau.is_negative() {
        return Err(Error::OutOfRange("need tau >= 0".into()));
    }
    if t <= &one || t > r || r > &rat_int(2) {
        return Err(Error::OutOfRange("need 1 < t <= r <= 2".into()));
    }
    let t2 = t * t;
    let inner = &t2 * r - t * r - t - r - &one;
    Ok((&one - tau) * (rho * inner + &t2) + (&one - rho) * (&t2 - &one))
}

/// `v(m) = (m - 1 + sqrt(m^2 + 2m - 3))/2`: the exponent guaranteed for one
/// form in `m` variables when the variable vector is restricted to a narrow
/// angular neighborhood of a ray; exceeds the trivial `m - 1/m` for all
/// `m >= 2`, and equals the golden ratio at `m = 2`.
pub fn angular_exponent(m: u32) -> Result<RadicalExpr> {
    if m < 2 {
        return Err(Error::OutOfRange("angular exponent needs m >= 2".into()));
    }
    let mi = m as i64;
    RadicalExpr::new(
        rat(mi - 1, 2),
        rat(1, 2),
        rat_int(mi * mi + 2 * mi - 3),
    )
}

/// `w(m) = 1 + 1/m + 1/m^2`: the exponent guaranteed when only the last
/// coordinate of the approximating vector is sign-constrained.
pub fn wide_domain_exponent(m: u32) -> Result<BigRational> {
    if m < 2 {
        return Err(Error::OutOfRange("wide-domain exponent needs m >= 2".into()));
    }
    let mi = m as i64;
    Ok(rat_int(1) + rat(1, mi) + rat(1, mi * mi))
}

/// One-sided exponent bound from the simultaneous exponent `omega_star` of
/// an `m`-number system: with `A = omega_star*(m-1)^2 + 1`, for
/// `1/m < omega_star <= 1/(m-1)` the bound is
///
/// `(A + sqrt(A^2 + 4 m^2 (m-1) omega_star^2)) / (2 m omega_star)`.
///
/// At `m = 2` this is the same function as
/// [`simultaneous_ratio_positive_lower`].
pub fn simultaneous_positive_lower(m: u32, omega_star: &BigRational) -> Result<RadicalExpr> {
    if m < 2 {
        return Err(Error::OutOfRange("need m >= 2".into()));
    }
    let mi = m as i64;
    if omega_star <= &rat(1, mi) || omega_star > &rat(1, mi - 1) {
        return Err(Error::OutOfRange(format!(
            "need 1/{m} < omega_star <= 1/{}, got {omega_star}",
            m - 1
        )));
    }
    let a = omega_star * rat_int((mi - 1) * (mi - 1)) + rat_int(1);
    let radicand = &a * &a + rat_int(4 * mi * mi * (mi - 1)) * omega_star * omega_star;
    let denom = rat_int(2 * mi) * omega_star;
    RadicalExpr::new(&a / &denom, rat_int(1) / denom, radicand)
}

/// Lower bounds for the exponent with denominators constrained to `l`-full
/// progressions inside an `m`-variable system (`1 <= l <= m`): the general
/// bound `l*omega_hat / (omega_hat - m + l)`, and for `l = m - 1` also the
/// mixed bound `omega_hat - 1 + omega_hat/omega` when `omega` is supplied.
#[derive(Debug, Clone)]
pub struct ConstrainedLower {
    pub general: BigRational,
    pub mixed: Option<BigRational>,
}

pub fn constrained_exponent_lower(
    m: u32,
    l: u32,
    omega: Option<&ExponentValue>,
    omega_hat: &BigRational,
) -> Result<ConstrainedLower> {
    if l == 0 || l > m {
        return Err(Error::OutOfRange("need 1 <= l <= m".into()));
    }
    let gap = rat_int(m as i64 - l as i64);
    if omega_hat <= &gap {
        return Err(Error::OutOfRange(format!(
            "general bound needs omega_hat > m - l = {gap}"
        )));
    }
    let general = rat_int(l as i64) * omega_hat / (omega_hat - &gap);
    let mixed = if l + 1 == m {
        match omega {
            Some(w) => Some(mixed_positive_lower(w, omega_hat)?),
            None => None,
        }
    } else {
        None
    };
    Ok(ConstrainedLower { general, mixed })
}
