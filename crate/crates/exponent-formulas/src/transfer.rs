//! Lower bounds for the ordinary approximation exponent of an `m x n` real
//! matrix in terms of its uniform exponent.
//!
//! Notation used throughout: `omega_hat` is the uniform exponent, and each
//! function returns a certified lower bound for the ordinary exponent
//! `omega`. The admissible range of `omega_hat` depends on the shape:
//! for a non-degenerate system the uniform exponent always satisfies
//! `omega_hat >= m/n`, equality ruled out or allowed per formula, and for
//! `m = 1` additionally `omega_hat <= 1` unless the row is rationally
//! dependent. Out-of-range arguments return `Error::OutOfRange` rather than
//! extrapolating a formula outside its proof.

use crate::radical::{nth_root_bounds, BoundExpr, RadicalExpr};
use exact_core::interval::RatInterval;
use exact_core::poly::largest_real_root;
use exact_core::rational::{rat, rat_int};
use exact_core::{BigInt, BigRational, Error, IntPoly, Result, Signed, Zero};

fn check_shape(m: u32, n: u32) -> Result<()> {
    if m == 0 || n == 0 {
        return Err(Error::OutOfRange("matrix shape needs m >= 1 and n >= 1".into()));
    }
    Ok(())
}

/// Classical transfer bound, split by the number of linear forms `m`.
///
/// * `m = 1`, `n >= 2` (simultaneous approximation to one linear form in
///   `n` variables): requires `1/n <= omega_hat < 1` and gives
///   `omega >= omega_hat^2 / (1 - omega_hat)`.
/// * `m = 2`: `omega >= omega_hat * (omega_hat - 1)` for every
///   `omega_hat >= 2/n`.
/// * `m >= 3`: valid once `omega_hat >= (5 m^2)^(m-1)` and gives
///   `omega >= omega_hat^(m/(m-1)) - 3*omega_hat`; for `m = 3` the value is
///   in closed quadratic form, for larger `m` it is a certified enclosure.
pub fn transfer_lower_classical(
    m: u32,
    n: u32,
    omega_hat: &BigRational,
    bits: u32,
) -> Result<BoundExpr> {
    check_shape(m, n)?;
    match m {
        1 => {
            if n < 2 {
                return Err(Error::OutOfRange(
                    "single-form case of the classical bound needs n >= 2".into(),
                ));
            }
            let lo = rat(1, n as i64);
            if omega_hat < &lo || omega_hat >= &rat_int(1) {
                return Err(Error::OutOfRange(format!(
                    "need 1/{n} <= omega_hat < 1, got {omega_hat}"
                )));
            }
            let one = rat_int(1);
            let value = omega_hat * omega_hat / (&one - omega_hat);
            Ok(BoundExpr::Quadratic(RadicalExpr::rational(value)))
        }
        2 => {
            if omega_hat < &rat(2, n as i64) {
                return Err(Error::OutOfRange(format!(
                    "uniform exponent below the trivial floor 2/{n}"
                )));
            }
            let value = omega_hat * (omega_hat - rat_int(1));
            Ok(BoundExpr::Quadratic(RadicalExpr::rational(value)))
        }
        _ => {
            // threshold (5 m^2)^(m-1)
            let base = BigRational::from_integer(BigInt::from(5u32 * m * m));
            let mut threshold = rat_int(1);
            for _ in 0..(m - 1) {
                threshold *= &base;
            }
            if omega_hat < &threshold {
                return Err(Error::OutOfRange(format!(
                    "need omega_hat >= (5*{m}^2)^{} = {threshold}",
                    m - 1
                )));
            }
            let three_w = omega_hat * rat_int(3);
            if m == 3 {
                // omega_hat^(3/2) = omega_hat * sqrt(omega_hat)
                let expr = RadicalExpr::new(-three_w, omega_hat.clone(), omega_hat.clone())?;
                Ok(BoundExpr::Quadratic(expr))
            } else {
                // omega_hat^(m/(m-1)) = (omega_hat^m)^(1/(m-1))
                let mut pow = rat_int(1);
                for _ in 0..m {
                    pow *= omega_hat;
                }
                let (lo, hi) = nth_root_bounds(&pow, m - 1, bits)?;
                let iv = RatInterval::new(lo, hi)?.sub_rat(&three_w);
                Ok(BoundExpr::Enclosure(iv))
            }
        }
    }
}

/// Sharp transfer bounds for the three four-dimensional shapes.
///
/// * `(m, n) = (1, 3)`: with `u = omega_hat / (1 - omega_hat)` and
///   `1/3 <= omega_hat < 1`,
///   `omega >= (omega_hat / 2) * (u + sqrt(u^2 + 4u))`.
/// * `(m, n) = (3, 1)`: for `omega_hat >= 3`,
///   `omega >= omega_hat * (sqrt(omega_hat + 1/omega_hat^2 - 7/4) + 1/omega_hat - 1/2)`.
/// * `(m, n) = (2, 2)`: for `omega_hat >= 1`,
///   `omega >= (1 - omega_hat + sqrt((1-omega_hat)^2 + 4*omega_hat*(2*omega_hat^2 - 2*omega_hat + 1)))/2`.
pub fn transfer_lower_dim4(m: u32, n: u32, omega_hat: &BigRational) -> Result<RadicalExpr> {
    check_shape(m, n)?;
    let one = rat_int(1);
    match (m, n) {
        (1, 3) => {
            if omega_hat < &rat(1, 3) || omega_hat >= &one {
                return Err(Error::OutOfRange(format!(
                    "need 1/3 <= omega_hat < 1, got {omega_hat}"
                )));
            }
            let u = omega_hat / (&one - omega_hat);
            let offset = omega_hat * &u / rat_int(2);
            let scale = omega_hat / rat_int(2);
            let radicand = &u * &u + rat_int(4) * &u;
            RadicalExpr::new(offset, scale, radicand)
        }
        (3, 1) => {
            if omega_hat < &rat_int(3) {
                return Err(Error::OutOfRange(format!(
                    "need omega_hat >= 3, got {omega_hat}"
                )));
            }
            let inv = &one / omega_hat;
            let offset = omega_hat * (&inv - rat(1, 2));
            let radicand = omega_hat + &inv * &inv - rat(7, 4);
            RadicalExpr::new(offset, omega_hat.clone(), radicand)
        }
        (2, 2) => {
            if omega_hat < &one {
                return Err(Error::OutOfRange(format!(
                    "need omega_hat >= 1, got {omega_hat}"
                )));
            }
            let a = &one - omega_hat;
            let inner =
                rat_int(2) * omega_hat * omega_hat - rat_int(2) * omega_hat + &one;
            let radicand = &a * &a + rat_int(4) * omega_hat * inner;
            RadicalExpr::new(a / rat_int(2), rat(1, 2), radicand)
        }
        _ => Err(Error::OutOfRange(
            "sharp four-dimensional bounds exist for shapes (1,3), (3,1), (2,2)".into(),
        )),
    }
}

/// Lower bounds for the single-row (`m = 1`) and single-column (`n = 1`)
/// families, rational in `omega_hat`.
///
/// * `m = 1`, `n >= 2`, `1/n <= omega_hat < 1`:
///   `omega >= (omega_hat^2 + (n-2)*omega_hat) / ((n-1)*(1-omega_hat))`.
/// * `n = 1`, `m >= 2`, `omega_hat >= m`:
///   `omega >= (m-1)*(omega_hat^2 - omega_hat) / (1 + (m-2)*omega_hat)`.
pub fn transfer_lower_single(m: u32, n: u32, omega_hat: &BigRational) -> Result<BigRational> {
    check_shape(m, n)?;
    let one = rat_int(1);
    if m == 1 && n >= 2 {
        if omega_hat < &rat(1, n as i64) || omega_hat >= &one {
            return Err(Error::OutOfRange(format!(
                "need 1/{n} <= omega_hat < 1, got {omega_hat}"
            )));
        }
        let num = omega_hat * omega_hat + rat_int(n as i64 - 2) * omega_hat;
        let den = rat_int(n as i64 - 1) * (&one - omega_hat);
        Ok(num / den)
    } else if n == 1 && m >= 2 {
        if omega_hat < &rat_int(m as i64) {
            return Err(Error::OutOfRange(format!(
                "need omega_hat >= {m}, got {omega_hat}"
            )));
        }
        let num = rat_int(m as i64 - 1) * (omega_hat * omega_hat - omega_hat);
        let den = &one + rat_int(m as i64 - 2) * omega_hat;
        Ok(num / den)
    } else {
        Err(Error::OutOfRange(
            "rational family bounds exist for m = 1 (n >= 2) or n = 1 (m >= 2)".into(),
        ))
    }
}

/// Largest real root of the characteristic equation behind the
/// multiplicative-chain lower bound `omega >= G * omega_hat`:
///
/// `sum_{j=1}^{m-1} x^j + (1 - omega_hat) - omega_hat * sum_{j=1}^{n-1} x^-j = 0`,
///
/// cleared to a degree `m + n - 2` integer polynomial by multiplying through
/// by `x^(n-1)` and by the denominator of `omega_hat`. Returns a certified
/// enclosure of the largest real root.
///
/// Requires `m + n >= 3` (otherwise the equation is constant), `omega_hat > 0`,
/// and for `m = 1` also `omega_hat < 1` so that a positive root exists.
pub fn independence_chain_root(
    m: u32,
    n: u32,
    omega_hat: &BigRational,
    bits: u32,
) -> Result<RatInterval> {
    check_shape(m, n)?;
    if m + n < 3 {
        return Err(Error::OutOfRange(
            "chain equation is degenerate for shape (1,1)".into(),
        ));
    }
    if !omega_hat.is_positive() {
        return Err(Error::OutOfRange("need omega_hat > 0".into()));
    }
    if m == 1 && omega_hat >= &rat_int(1) {
        return Err(Error::OutOfRange(
            "for a single form the chain equation needs omega_hat < 1".into(),
        ));
    }
    let d = omega_hat.denom().clone();
    let w_num = omega_hat.numer().clone();
    let deg = (m + n - 2) as usize;
    let mut coeffs = vec![BigInt::zero(); deg + 1];
    // -omega_hat * x^(n-1-j) for j = 1..n-1  ->  exponents n-2 .. 0
    for e in 0..(n.saturating_sub(1) as usize) {
        coeffs[e] = -w_num.clone();
    }
    // (1 - omega_hat) * x^(n-1)
    coeffs[(n - 1) as usize] = &d - &w_num;
    // x^(n-1+j) for j = 1..m-1
    for j in 1..m as usize {
        coeffs[(n - 1) as usize + j] = d.clone();
    }
    let poly = IntPoly::new(coeffs);
    largest_real_root(&poly, bits)
}
