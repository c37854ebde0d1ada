//! Constrained linear-form scan: certified enclosures of
//! `ψ⁺(t) = min { ‖θ·x‖ : x in the domain, 0 < |x|_sup ≤ t }`
//! on a geometric grid of sizes, with a fitted decay exponent.
//!
//! The hot loop runs in 64-bit fixed point: each `θ_j` is rounded to
//! `T_j = ⌊frac(θ_j)·2^64⌋`, and `‖θ·x‖` is approximated by the wrapped
//! distance of `Σ x_j T_j` to `0 mod 2^64`, which is exact up to a uniform
//! slack of `2·Σ|x_j| + 1` last-place units. A second pass collects every
//! vector within twice that slack of a running minimum, and only those few
//! candidates are re-evaluated in exact interval arithmetic — so the
//! reported enclosures are certified even though the scan itself is fast.

use crate::exponents::{ln_mid, slope_and_residual};
use crate::matrix::{ApproxMatrix, DomainConstraint};
use exact_core::rational::rat_int;
use exact_core::{BigInt, BigRational, Error, RatInterval, Result};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

const MAX_VARS: usize = 4;
const MAX_POINTS: u64 = 300_000_000;
const MAX_CANDIDATES: usize = 100_000;

/// One grid sample: certified enclosure of the constrained minimum at size
/// `t`, with a vector attaining (the upper bound of) that minimum.
#[derive(Clone, Debug)]
pub struct PsiSample {
    pub t: i64,
    pub value: RatInterval,
    pub witness: Vec<i64>,
}

/// Full scan report.
#[derive(Clone, Debug)]
pub struct PsiPlusReport {
    pub samples: Vec<PsiSample>,
    /// Least-squares decay exponent of the sampled profile: slope of
    /// `ln(1/ψ⁺)` against `ln t` over the second half of the grid.
    pub fitted_exponent: BigRational,
    /// Largest raw quotient `ln(1/ψ⁺(t)) / ln t` over the second half.
    pub max_term_last_half: BigRational,
    /// Exact number of domain points visited.
    pub points_scanned: u64,
}

/// 64-bit fixed-point image of the form's fractional parts.
struct FixedForm {
    reps: Vec<u64>,
    /// Uniform slack in last-place units: `2·m·t_max + 1` dominates
    /// `2·Σ|x_j| + 1` for every scanned vector.
    slack: u64,
}

impl FixedForm {
    fn build(theta: &ApproxMatrix, t_max: i64) -> Result<FixedForm> {
        let m = theta.cols();
        let modulus: BigInt = BigInt::one() << 64;
        let scale = BigRational::from(modulus.clone());
        let mut reps = Vec::with_capacity(m);
        for j in 0..m {
            let iv = theta.entry(0, j).enclose(80)?;
            let scaled = iv.lo() * &scale;
            let rep = scaled.floor().to_integer().mod_floor(&modulus);
            reps.push(rep.to_u64().expect("residue fits in 64 bits"));
        }
        Ok(FixedForm {
            reps,
            slack: 2 * m as u64 * t_max as u64 + 1,
        })
    }

    #[inline]
    fn term(&self, j: usize, v: i64) -> u64 {
        (v as u64).wrapping_mul(self.reps[j])
    }
}

#[inline]
fn wrapped_dist(w: u64) -> u64 {
    w.min(w.wrapping_neg())
}

/// The geometric size grid `8, 16, …` ending exactly at `t_max`.
fn size_grid(t_max: i64) -> Vec<i64> {
    let mut grid = Vec::new();
    let mut t = 8i64;
    while t < t_max {
        grid.push(t);
        t = t.saturating_mul(2);
    }
    grid.push(t_max);
    if grid[0] > t_max {
        grid = vec![t_max];
    }
    grid
}

/// Map from sup-norm value to the first grid index covering it.
fn bucket_table(grid: &[i64], t_max: i64) -> Vec<u16> {
    let mut table = vec![0u16; t_max as usize + 1];
    let mut k = 0usize;
    for s in 1..=t_max {
        while grid[k] < s {
            k += 1;
        }
        table[s as usize] = k as u16;
    }
    table
}

/// Inclusive `v`-ranges of the second coordinate for first coordinate `u`
/// (two-variable domains only). Ranges are disjoint and sorted.
fn column_ranges(domain: &DomainConstraint, t: i64, u: i64) -> Result<Vec<(i64, i64)>> {
    let raw: Vec<(i64, i64)> = match domain {
        DomainConstraint::AllIntegers => {
            if u == 0 {
                vec![(1, t)]
            } else {
                vec![(-t, t)]
            }
        }
        DomainConstraint::PositiveOrthant => {
            if u >= 1 {
                vec![(1, t)]
            } else {
                vec![]
            }
        }
        DomainConstraint::Angular { rho, tau } => {
            if u == 0 {
                vec![(1, t)]
            } else {
                let v1 = floor_power(u, rho)?.min(t);
                let mut parts = vec![(-v1, v1)];
                if tau.is_zero() {
                    if u <= 1 {
                        parts = vec![(-t, t)];
                    }
                } else {
                    let v2 = ceil_root(u, tau)?;
                    if v2 <= t {
                        parts.push((v2, t));
                        parts.push((-t, -v2));
                    }
                }
                parts
            }
        }
        DomainConstraint::WideStrip { w, scale } => {
            if u * u <= 1 {
                if u == 0 {
                    vec![(1, t)]
                } else {
                    vec![(-t, t)]
                }
            } else {
                let vmax = strip_bound(u, w, scale)?.min(t);
                vec![(-vmax, vmax)]
            }
        }
        DomainConstraint::NarrowStrip { eps } => {
            if u == 0 {
                vec![]
            } else {
                let p = eps.numer();
                let q = eps.denom();
                let vmax_big = (p * BigInt::from(u)).div_floor(q);
                let vmax = vmax_big.to_i64().unwrap_or(t).min(t);
                vec![(-vmax, vmax)]
            }
        }
        DomainConstraint::LeadingBlock { l } => {
            if *l >= 2 {
                if u == 0 {
                    vec![(1, t)]
                } else {
                    vec![(-t, t)]
                }
            } else if u == 0 {
                vec![]
            } else {
                vec![(-u.min(t), u.min(t))]
            }
        }
    };
    Ok(merge_ranges(raw))
}

/// Largest `v ≥ 0` with `v ≤ u^e` (`u ≥ 1`), exactly.
fn floor_power(u: i64, e: &BigRational) -> Result<i64> {
    exponent_small(e)?;
    let a = e.numer().to_u32().expect("checked");
    let b = e.denom().to_u32().expect("checked");
    let target = BigInt::from(u).pow(a);
    let mut v = nth_root_floor(&target, b);
    while (&v + BigInt::one()).pow(b) <= target {
        v += BigInt::one();
    }
    while v.pow(b) > target {
        v -= BigInt::one();
    }
    Ok(v.to_i64().unwrap_or(i64::MAX))
}

/// Smallest `v ≥ 0` with `u ≤ v^e` (`u ≥ 1`, `e > 0`), exactly:
/// `v^num >= u^den`.
fn ceil_root(u: i64, e: &BigRational) -> Result<i64> {
    exponent_small(e)?;
    let c = e.numer().to_u32().expect("checked");
    let d = e.denom().to_u32().expect("checked");
    let target = BigInt::from(u).pow(d);
    let mut v = nth_root_floor(&target, c);
    while v.pow(c) < target {
        v += BigInt::one();
    }
    while v > BigInt::zero() && (&v - BigInt::one()).pow(c) >= target {
        v -= BigInt::one();
    }
    Ok(v.to_i64().unwrap_or(i64::MAX))
}

/// Largest `v ≥ 0` with `(q·v)^{2b} ≤ p^{2b}·u^{2a}` for `w = a/b`,
/// `scale = p/q`: the exact strip boundary.
fn strip_bound(u: i64, w: &BigRational, scale: &BigRational) -> Result<i64> {
    exponent_small(w)?;
    let a = w.numer().to_u32().expect("checked");
    let two_b = 2 * w.denom().to_u32().expect("checked");
    let p = scale.numer();
    let q = scale.denom();
    let target = p.pow(two_b) * BigInt::from(u).pow(2 * a);
    let mut v = nth_root_floor(&target, two_b).div_floor(q);
    while ((&v + BigInt::one()) * q).pow(two_b) <= target {
        v += BigInt::one();
    }
    while v > BigInt::zero() && (&v * q).pow(two_b) > target {
        v -= BigInt::one();
    }
    Ok(v.to_i64().unwrap_or(i64::MAX))
}

fn nth_root_floor(v: &BigInt, k: u32) -> BigInt {
    BigInt::from(v.to_biguint().expect("nonnegative").nth_root(k))
}

/// The scan evaluates domain boundaries with bignum powers once per column;
/// keep the exponents small enough that this stays cheap.
fn exponent_small(e: &BigRational) -> Result<()> {
    let lim = BigInt::from(16);
    if e.numer().abs() > lim || *e.denom() > lim {
        return Err(Error::OutOfRange(
            "scan domain exponents must have components at most 16".into(),
        ));
    }
    Ok(())
}

fn merge_ranges(mut raw: Vec<(i64, i64)>) -> Vec<(i64, i64)> {
    raw.retain(|&(lo, hi)| lo <= hi);
    raw.sort_unstable();
    let mut out: Vec<(i64, i64)> = Vec::with_capacity(raw.len());
    for (lo, hi) in raw {
        match out.last_mut() {
            Some(last) if lo <= last.1 + 1 => last.1 = last.1.max(hi),
            _ => out.push((lo, hi)),
        }
    }
    out
}

/// Visit every canonical domain point with first coordinate `u`, calling
/// `f(sup_norm, fixed_point_dist, coords)`.
fn for_each_point<F: FnMut(i64, u64, &[i64; MAX_VARS])>(
    form: &FixedForm,
    m: usize,
    domain: &DomainConstraint,
    t: i64,
    u: i64,
    f: &mut F,
) -> Result<()> {
    match (m, domain) {
        (1, _) => {
            // canonical nonzero scalars are 1..=t; u indexes them directly
            if u >= 1 {
                let w = form.term(0, u);
                f(u, wrapped_dist(w), &[u, 0, 0, 0]);
            }
            Ok(())
        }
        (2, _) => {
            let ranges = column_ranges(domain, t, u)?;
            let w0 = form.term(0, u);
            for (lo, hi) in ranges {
                let mut w = w0.wrapping_add(form.term(1, lo));
                for v in lo..=hi {
                    f(u.max(v.abs()), wrapped_dist(w), &[u, v, 0, 0]);
                    w = w.wrapping_add(form.reps[1]);
                }
            }
            Ok(())
        }
        (3, DomainConstraint::PositiveOrthant) => {
            if u >= 1 {
                let w0 = form.term(0, u);
                for v in 1..=t {
                    let w1 = w0.wrapping_add(form.term(1, v));
                    let mut w = w1.wrapping_add(form.term(2, 1));
                    for z in 1..=t {
                        f(u.max(v).max(z), wrapped_dist(w), &[u, v, z, 0]);
                        w = w.wrapping_add(form.reps[2]);
                    }
                }
            }
            Ok(())
        }
        (3, DomainConstraint::AllIntegers) => {
            let w0 = form.term(0, u);
            let v_lo = if u == 0 { 0 } else { -t };
            for v in v_lo..=t {
                let z_lo = if u == 0 && v == 0 { 1 } else { -t };
                let w1 = w0.wrapping_add(form.term(1, v));
                let mut w = w1.wrapping_add(form.term(2, z_lo));
                for z in z_lo..=t {
                    f(
                        u.max(v.abs()).max(z.abs()),
                        wrapped_dist(w),
                        &[u, v, z, 0],
                    );
                    w = w.wrapping_add(form.reps[2]);
                }
            }
            Ok(())
        }
        (4, DomainConstraint::PositiveOrthant) => {
            if u >= 1 {
                let w0 = form.term(0, u);
                for v in 1..=t {
                    let w1 = w0.wrapping_add(form.term(1, v));
                    for z in 1..=t {
                        let w2 = w1.wrapping_add(form.term(2, z));
                        let mut w = w2.wrapping_add(form.term(3, 1));
                        for y in 1..=t {
                            f(
                                u.max(v).max(z).max(y),
                                wrapped_dist(w),
                                &[u, v, z, y],
                            );
                            w = w.wrapping_add(form.reps[3]);
                        }
                    }
                }
            }
            Ok(())
        }
        _ => Err(Error::OutOfRange(
            "this domain/variable-count combination is not sized for scanning".into(),
        )),
    }
}

/// Upper bound on point count, to refuse oversized scans up front.
fn point_budget(m: usize, domain: &DomainConstraint, t: i64) -> u64 {
    let t = t as u64;
    match (m, domain) {
        (1, _) => t,
        (_, DomainConstraint::PositiveOrthant) => t.saturating_pow(m as u32),
        (2, _) => (2 * t + 1).saturating_mul(t + 1),
        (3, _) => (2 * t + 1).saturating_pow(2).saturating_mul(t + 1),
        (4, _) => (2 * t + 1).saturating_pow(3).saturating_mul(t + 1),
        _ => u64::MAX,
    }
}

/// Per-bucket running minima of the fixed-point distance.
#[derive(Clone)]
struct Minima {
    best: Vec<(u64, [i64; MAX_VARS])>,
    count: u64,
}

impl Minima {
    fn new(buckets: usize) -> Minima {
        Minima {
            best: vec![(u64::MAX, [0; MAX_VARS]); buckets],
            count: 0,
        }
    }

    #[inline]
    fn update(&mut self, bucket: usize, dist: u64, x: &[i64; MAX_VARS]) {
        self.count += 1;
        let slot = &mut self.best[bucket];
        if dist < slot.0 || (dist == slot.0 && *x < slot.1) {
            *slot = (dist, *x);
        }
    }

    fn merge(mut self, other: Minima) -> Minima {
        self.count += other.count;
        for (a, b) in self.best.iter_mut().zip(other.best) {
            if b.0 < a.0 || (b.0 == a.0 && b.1 < a.1) {
                *a = b;
            }
        }
        self
    }
}

/// Certified constrained-minimum profile on a geometric size grid.
///
/// `theta` must be a single row. The two-variable domains all have exact
/// per-column boundary formulas; three and four variables are supported for
/// the unconstrained and positive-orthant domains.
pub fn psi_plus_scan(
    theta: &ApproxMatrix,
    domain: &DomainConstraint,
    t_max: i64,
    bits: u32,
) -> Result<PsiPlusReport> {
    if theta.rows() != 1 {
        return Err(Error::InvalidInput(
            "constrained scans take a single linear form".into(),
        ));
    }
    let m = theta.cols();
    if m > MAX_VARS {
        return Err(Error::OutOfRange(
            "constrained scans are sized for at most 4 variables".into(),
        ));
    }
    domain.validate(m)?;
    if matches!(domain, DomainConstraint::PositiveOrthant) && m < 2 {
        return Err(Error::InvalidInput(
            "positive-orthant scans need at least two variables".into(),
        ));
    }
    if t_max < 1 {
        return Err(Error::InvalidInput("need t_max >= 1".into()));
    }
    if point_budget(m, domain, t_max) > MAX_POINTS {
        return Err(Error::BudgetExceeded(format!(
            "scan of |x| <= {t_max} in {m} variables exceeds the point budget"
        )));
    }

    let grid = size_grid(t_max);
    let buckets = grid.len();
    let table = bucket_table(&grid, t_max);
    let form = FixedForm::build(theta, t_max)?;

    // pass 1: per-bucket fixed-point minima over all domain points
    let minima = (0..=t_max)
        .into_par_iter()
        .try_fold(
            || Minima::new(buckets),
            |mut local, u| -> Result<Minima> {
                for_each_point(&form, m, domain, t_max, u, &mut |sup, dist, x| {
                    local.update(table[sup as usize] as usize, dist, x);
                })?;
                Ok(local)
            },
        )
        .try_reduce(|| Minima::new(buckets), |a, b| Ok(a.merge(b)))?;

    // prefix minima: bucket k's threshold covers all sizes up to grid[k]
    let mut thresholds = vec![u64::MAX; buckets];
    let mut running = u64::MAX;
    for k in 0..buckets {
        running = running.min(minima.best[k].0);
        if running == u64::MAX {
            return Err(Error::InvalidInput(format!(
                "domain has no points of size at most {}",
                grid[k]
            )));
        }
        thresholds[k] = running;
    }

    // pass 2: collect every point within twice the slack of its threshold
    let margin = 2 * form.slack;
    let candidates: Vec<[i64; MAX_VARS]> = (0..=t_max)
        .into_par_iter()
        .try_fold(
            || Vec::new(),
            |mut local: Vec<[i64; MAX_VARS]>, u| -> Result<Vec<[i64; MAX_VARS]>> {
                for_each_point(&form, m, domain, t_max, u, &mut |sup, dist, x| {
                    let th = thresholds[table[sup as usize] as usize];
                    if dist <= th.saturating_add(margin) {
                        local.push(*x);
                    }
                })?;
                Ok(local)
            },
        )
        .try_reduce(
            || Vec::new(),
            |mut a, mut b| {
                a.append(&mut b);
                Ok(a)
            },
        )?;
    if candidates.len() > MAX_CANDIDATES {
        return Err(Error::BudgetExceeded(format!(
            "{} near-minimal vectors exceed the certification budget",
            candidates.len()
        )));
    }
    let mut candidates = candidates;
    candidates.sort_unstable();

    // exact phase: certified distance enclosures for the candidates only
    let mut exact: Vec<(usize, RatInterval, [i64; MAX_VARS])> =
        Vec::with_capacity(candidates.len());
    for x in &candidates {
        let sup = x.iter().map(|v| v.abs()).max().expect("nonzero point");
        let bucket = table[sup as usize] as usize;
        let d = certified_dist(theta, &x[..m], bits)?;
        exact.push((bucket, d, *x));
    }

    // per-sample enclosure: elementwise min over candidates in the prefix
    let mut samples = Vec::with_capacity(buckets);
    for (k, &t) in grid.iter().enumerate() {
        let mut lo: Option<BigRational> = None;
        let mut hi: Option<(BigRational, [i64; MAX_VARS])> = None;
        for (b, d, x) in &exact {
            if *b > k {
                continue;
            }
            if lo.as_ref().map_or(true, |c| d.lo() < c) {
                lo = Some(d.lo().clone());
            }
            if hi.as_ref().map_or(true, |c| d.hi() < &c.0) {
                hi = Some((d.hi().clone(), *x));
            }
        }
        let (hi, witness) = hi.expect("every prefix has a candidate");
        samples.push(PsiSample {
            t,
            value: RatInterval::new(lo.expect("candidate exists"), hi)?,
            witness: witness[..m].to_vec(),
        });
    }

    // fitted exponent over the second half of the grid
    let h = samples.len() / 2;
    let fit_slice = if samples.len() >= 4 {
        &samples[h..]
    } else {
        &samples[..]
    };
    let ln_bits = bits.max(64);
    let mut points = Vec::with_capacity(fit_slice.len());
    let mut max_term: Option<BigRational> = None;
    for s in fit_slice {
        if s.t <= 1 {
            continue;
        }
        let mid = s.value.mid();
        if mid <= BigRational::zero() {
            return Err(Error::PrecisionExhausted);
        }
        let x = ln_mid(&rat_int(s.t), ln_bits)?;
        let y = -ln_mid(&mid, ln_bits)?;
        let term = &y / &x;
        if max_term.as_ref().map_or(true, |c| &term > c) {
            max_term = Some(term);
        }
        points.push((x, y));
    }
    let (fitted_exponent, _res) = if points.len() >= 2 {
        slope_and_residual(&points)?
    } else {
        (BigRational::zero(), BigRational::zero())
    };

    Ok(PsiPlusReport {
        samples,
        fitted_exponent,
        max_term_last_half: max_term.ok_or(Error::TooFewPoints { needed: 1, got: 0 })?,
        points_scanned: minima.count,
    })
}

/// Certified enclosure of `‖θ·x‖` (distance of the row value to the nearest
/// integer), refined until it excludes zero or is exactly zero.
fn certified_dist(theta: &ApproxMatrix, x: &[i64], bits: u32) -> Result<RatInterval> {
    let mut bits = bits.max(32);
    for _ in 0..8 {
        let s = theta.row_sum(0, x, bits)?;
        let d = s.dist_to_int();
        if d.hi().is_zero() {
            return Err(Error::InvalidInput(format!(
                "irrationality condition fails: the form value at x = {:?} is \
                 exactly integral",
                &x
            )));
        }
        if !d.lo().is_zero() {
            return Ok(d);
        }
        bits *= 2;
    }
    Err(Error::PrecisionExhausted)
}
