//! Certified enumeration of best-approximation records: integer vectors
//! whose residual `|Θx − y|` is strictly smaller than that of every nonzero
//! integer vector of equal or smaller size. All comparisons are interval
//! comparisons refined on demand, so an emitted record is a certificate, not
//! a floating-point guess.

use crate::matrix::{x_norm_key, ApproxMatrix, Norm, NormChoice};
use exact_core::rational::rat_int;
use exact_core::{BigInt, BigRational, Error, RatInterval, Result};
use num_traits::Zero;
use rayon::prelude::*;
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::sync::{Arc, RwLock};

/// One certified best-approximation record.
#[derive(Clone, Debug)]
pub struct BestApproxRecord {
    /// Integer vector on the variable side.
    pub x: Vec<BigInt>,
    /// Nearest integer vector on the form side.
    pub y: Vec<BigInt>,
    /// Integer norm key of `x`: the sup-norm value, or the exact squared
    /// Euclidean length. Strictly increases along the sequence.
    pub m: BigInt,
    /// Certified enclosure of the residual norm `|Θx − y|`. Strictly
    /// decreases along the sequence.
    pub zeta: RatInterval,
}

/// How many refinement doublings a comparison may spend before giving up.
const REFINE_DOUBLINGS: u32 = 7;

/// Shared per-precision cache of entry enclosures, so a million-point scan
/// asks each oracle only once per precision level.
struct EnclosureGrid {
    theta: ApproxMatrix,
    levels: RwLock<BTreeMap<u32, Arc<Vec<RatInterval>>>>,
}

impl EnclosureGrid {
    fn new(theta: &ApproxMatrix) -> Self {
        EnclosureGrid {
            theta: theta.clone(),
            levels: RwLock::new(BTreeMap::new()),
        }
    }

    fn level(&self, bits: u32) -> Result<Arc<Vec<RatInterval>>> {
        if let Some(g) = self.levels.read().expect("grid lock").get(&bits) {
            return Ok(g.clone());
        }
        let n = self.theta.rows();
        let m = self.theta.cols();
        let mut grid = Vec::with_capacity(n * m);
        for i in 0..n {
            for j in 0..m {
                grid.push(tidy(self.theta.entry(i, j).enclose(bits)?, bits));
            }
        }
        let arc = Arc::new(grid);
        self.levels
            .write()
            .expect("grid lock")
            .insert(bits, arc.clone());
        Ok(arc)
    }

    /// Enclosure of `sum_j theta_ij x_j` at a precision level.
    fn row_sum(&self, grid: &[RatInterval], i: usize, x: &[i64], bits: u32) -> RatInterval {
        let m = self.theta.cols();
        let mut acc = RatInterval::point(BigRational::zero());
        for (j, &xj) in x.iter().enumerate() {
            if xj == 0 {
                continue;
            }
            acc = acc.add(&grid[i * m + j].mul_rat(&rat_int(xj)));
        }
        tidy(acc, bits + 8)
    }
}

/// Round interval endpoints to dyadics to keep denominators bounded, but
/// never widen an exact point — exact zeros must stay detectable.
fn tidy(iv: RatInterval, bits: u32) -> RatInterval {
    if iv.lo() == iv.hi() {
        iv
    } else {
        iv.dyadic_round(bits)
    }
}

/// A candidate under comparison: frozen `(x, y)` plus a residual-measure
/// enclosure that can be recomputed at higher precision. The measure is the
/// sup residual itself, or the squared Euclidean residual (monotone proxy).
#[derive(Clone, Debug)]
struct Candidate {
    x: Vec<i64>,
    y: Vec<BigInt>,
    measure: RatInterval,
    bits: u32,
}

fn lex_key(c: &Candidate) -> (Vec<i64>, Vec<BigInt>) {
    (c.x.clone(), c.y.clone())
}

struct ScanCtx {
    grid: EnclosureGrid,
    y_norm: Norm,
    base_bits: u32,
}

impl ScanCtx {
    /// Residual measure for frozen `(x, y)` at a precision level.
    fn measure_at(&self, x: &[i64], y: &[BigInt], bits: u32) -> Result<RatInterval> {
        let level = self.grid.level(bits)?;
        let n = self.grid.theta.rows();
        let mut rows = Vec::with_capacity(n);
        for i in 0..n {
            let s = self.grid.row_sum(&level, i, x, bits);
            rows.push(s.sub_rat(&BigRational::from(y[i].clone())).abs());
        }
        Ok(self.combine(&rows))
    }

    /// Fold per-row residual enclosures into the chosen norm's measure.
    fn combine(&self, rows: &[RatInterval]) -> RatInterval {
        match self.y_norm {
            Norm::Sup => interval_max(rows),
            Norm::Euclidean => {
                let mut acc = RatInterval::point(BigRational::zero());
                for r in rows {
                    acc = acc.add(&r.square());
                }
                acc
            }
        }
    }

    /// Evaluate a candidate: pick the nearest integer vector `y` at the
    /// first precision level where the choice is unambiguous (exact
    /// half-integer ties take the smaller `y`), freeze it, and certify a
    /// residual-measure enclosure away from zero. The row sums feeding both
    /// decisions are computed once per level.
    fn evaluate(&self, x: &[i64]) -> Result<Candidate> {
        let n = self.grid.theta.rows();
        let mut bits = self.base_bits;
        let mut y: Option<Vec<BigInt>> = None;
        'level: for _ in 0..=REFINE_DOUBLINGS {
            let level = self.grid.level(bits)?;
            let mut rows = Vec::with_capacity(n);
            for i in 0..n {
                rows.push(self.grid.row_sum(&level, i, x, bits));
            }
            if y.is_none() {
                let mut picked = Vec::with_capacity(n);
                for s in &rows {
                    let klo = nearest_int_half_down(s.lo());
                    if s.lo() != s.hi() && klo != nearest_int_half_down(s.hi()) {
                        bits *= 2;
                        continue 'level;
                    }
                    picked.push(klo);
                }
                y = Some(picked);
            }
            let yv = y.as_ref().expect("frozen above");
            let residuals: Vec<RatInterval> = rows
                .iter()
                .zip(yv)
                .map(|(s, yi)| s.sub_rat(&BigRational::from(yi.clone())).abs())
                .collect();
            let measure = self.combine(&residuals);
            if measure.lo().is_zero() {
                if measure.hi().is_zero() {
                    return Err(Error::InvalidInput(format!(
                        "irrationality condition fails: the form values at x = {:?} \
                         are exactly integral",
                        x
                    )));
                }
                bits *= 2;
                continue;
            }
            return Ok(Candidate {
                x: x.to_vec(),
                y: yv.clone(),
                measure,
                bits,
            });
        }
        Err(Error::PrecisionExhausted)
    }

    fn refine(&self, c: &mut Candidate) -> Result<()> {
        if c.bits >= self.base_bits << REFINE_DOUBLINGS {
            return Err(Error::PrecisionExhausted);
        }
        c.bits *= 2;
        c.measure = self.measure_at(&c.x, &c.y, c.bits)?;
        Ok(())
    }

    /// Certified strict comparison of two candidates' measures. `Equal` is
    /// returned only when both measures are exact points. A refinement
    /// deadlock between candidates whose forms are exactly integrally
    /// dependent (so the measures are provably equal irrationals) is
    /// reported as a violated irrationality assumption.
    fn compare(&self, a: &mut Candidate, b: &mut Candidate) -> Result<Ordering> {
        loop {
            if a.measure.hi() < b.measure.lo() {
                return Ok(Ordering::Less);
            }
            if b.measure.hi() < a.measure.lo() {
                return Ok(Ordering::Greater);
            }
            let a_point = a.measure.lo() == a.measure.hi();
            let b_point = b.measure.lo() == b.measure.hi();
            if a_point && b_point {
                return Ok(a.measure.lo().cmp(b.measure.lo()));
            }
            let mut progressed = false;
            if !a_point && self.refine(a).is_ok() {
                progressed = true;
            }
            if !b_point && self.refine(b).is_ok() {
                progressed = true;
            }
            if !progressed {
                if self.exact_relation(a, b, 1) || self.exact_relation(a, b, -1) {
                    return Err(Error::InvalidInput(format!(
                        "irrationality condition fails: the form values at x = {:?} \
                         and x = {:?} are exactly integrally dependent",
                        a.x, b.x
                    )));
                }
                return Err(Error::PrecisionExhausted);
            }
        }
    }

    /// True when `Θ(a.x + sign·b.x)` equals `a.y + sign·b.y` exactly — an
    /// integral relation forcing the two residual measures to coincide.
    fn exact_relation(&self, a: &Candidate, b: &Candidate, sign: i64) -> bool {
        let x: Vec<i64> = a.x.iter().zip(&b.x).map(|(p, q)| p + sign * q).collect();
        let Ok(level) = self.grid.level(self.base_bits) else {
            return false;
        };
        for i in 0..self.grid.theta.rows() {
            let s = self.grid.row_sum(&level, i, &x, self.base_bits);
            if s.lo() != s.hi() {
                return false;
            }
            let target = BigRational::from(&a.y[i] + BigInt::from(sign) * &b.y[i]);
            if s.lo() != &target {
                return false;
            }
        }
        true
    }

    /// Min of two candidates; exact ties resolve to the lexicographically
    /// smaller `(x, y)`.
    fn pick_min(&self, mut a: Candidate, mut b: Candidate) -> Result<Candidate> {
        match self.compare(&mut a, &mut b)? {
            Ordering::Less => Ok(a),
            Ordering::Greater => Ok(b),
            Ordering::Equal => {
                if lex_key(&a) <= lex_key(&b) {
                    Ok(a)
                } else {
                    Ok(b)
                }
            }
        }
    }
}

/// Elementwise interval enclosure of the max of nonnegative intervals.
fn interval_max(rows: &[RatInterval]) -> RatInterval {
    let lo = rows.iter().map(|r| r.lo().clone()).max().expect("rows");
    let hi = rows.iter().map(|r| r.hi().clone()).max().expect("rows");
    RatInterval::new(lo, hi).expect("max of intervals is ordered")
}

/// Nearest integer with exact half-ties going down (the smaller integer).
fn nearest_int_half_down(v: &BigRational) -> BigInt {
    let f = v.floor().to_integer();
    let frac = v - BigRational::from(f.clone());
    let half = BigRational::new(BigInt::from(1), BigInt::from(2));
    if frac > half {
        f + BigInt::from(1)
    } else {
        f
    }
}

/// All canonical integer vectors (first nonzero coordinate positive) of
/// sup-norm exactly `shell`, in lexicographic order.
fn sup_shell(m: usize, shell: i64) -> Vec<Vec<i64>> {
    if m == 0 || shell < 1 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut cur = vec![0i64; m];
    fill_shell(m, shell, 0, false, true, &mut cur, &mut out);
    out
}

fn fill_shell(
    m: usize,
    shell: i64,
    idx: usize,
    hit: bool,
    leading_zero: bool,
    cur: &mut Vec<i64>,
    out: &mut Vec<Vec<i64>>,
) {
    if idx + 1 == m {
        // Final coordinate: emit directly, skipping values that cannot
        // complete a shell vector, so total work stays proportional to the
        // number of vectors emitted. (`hit` forces some earlier coordinate
        // nonzero, so `hit && leading_zero` never holds.)
        if hit {
            for v in -shell..=shell {
                cur[idx] = v;
                out.push(cur.clone());
            }
        } else {
            if !leading_zero {
                cur[idx] = -shell;
                out.push(cur.clone());
            }
            cur[idx] = shell;
            out.push(cur.clone());
        }
        cur[idx] = 0;
        return;
    }
    let lo = if leading_zero { 0 } else { -shell };
    for v in lo..=shell {
        cur[idx] = v;
        let now_hit = hit || v.abs() == shell;
        let still_leading = leading_zero && v == 0;
        fill_shell(m, shell, idx + 1, now_hit, still_leading, cur, out);
    }
    cur[idx] = 0;
}

/// Shells of canonical vectors grouped by ascending norm key. Sup shells
/// stream lazily (deep one-variable scans would otherwise hold every shell
/// in memory at once); Euclidean keys are regrouped through a map.
fn shells_by_key(
    m: usize,
    norm: Norm,
    m_max: i64,
) -> Box<dyn Iterator<Item = (i64, Vec<Vec<i64>>)>> {
    match norm {
        Norm::Sup => Box::new((1..=m_max).map(move |s| (s, sup_shell(m, s)))),
        Norm::Euclidean => {
            let bound = (m_max as f64).sqrt() as i64 + 1;
            let mut groups: BTreeMap<i64, Vec<Vec<i64>>> = BTreeMap::new();
            for s in 1..=bound {
                for x in sup_shell(m, s) {
                    let key = x_norm_key(&x, Norm::Euclidean);
                    if key >= 1 && key <= m_max {
                        groups.entry(key).or_default().push(x);
                    }
                }
            }
            Box::new(groups.into_iter())
        }
    }
}

/// Certified best-approximation records with norm key at most `m_max`,
/// in increasing order of the key.
///
/// Every record is certified by the exhaustive shell walk itself: a record
/// is emitted only when its residual is certified strictly smaller than the
/// previous record's, and every vector of smaller or equal key has been
/// compared against it. Errors with `PrecisionExhausted` when a comparison
/// cannot be decided within the refinement budget, and with `InvalidInput`
/// when some `Θx` is exactly integral (the scan's irrationality assumption
/// fails).
pub fn best_approximations(
    theta: &ApproxMatrix,
    norms: NormChoice,
    m_max: i64,
    bits: u32,
) -> Result<Vec<BestApproxRecord>> {
    if m_max < 1 {
        return Err(Error::InvalidInput("need m_max >= 1".into()));
    }
    if theta.cols() > 4 {
        return Err(Error::OutOfRange(
            "certified enumeration is sized for at most 4 variables".into(),
        ));
    }
    let ctx = ScanCtx {
        grid: EnclosureGrid::new(theta),
        y_norm: norms.y_norm,
        base_bits: bits.max(16),
    };
    // Warm the base level so parallel workers never race to build it.
    ctx.grid.level(ctx.base_bits)?;

    let mut records: Vec<BestApproxRecord> = Vec::new();
    let mut best: Option<Candidate> = None;

    for (key, shell) in shells_by_key(theta.cols(), norms.x_norm, m_max) {
        let shell_min = shell_minimum(&ctx, &shell, best.as_ref())?;
        let Some(mut cand) = shell_min else {
            continue;
        };
        let improved = match best.as_mut() {
            None => true,
            Some(prev) => ctx.compare(&mut cand, prev)? == Ordering::Less,
        };
        if improved {
            records.push(make_record(&cand, key, norms)?);
            best = Some(cand);
        }
    }
    Ok(records)
}

/// Minimum candidate of a shell among those that might improve on `best`.
fn shell_minimum(
    ctx: &ScanCtx,
    shell: &[Vec<i64>],
    best: Option<&Candidate>,
) -> Result<Option<Candidate>> {
    let keep = |c: &Candidate| match best {
        None => true,
        // cheap one-sided test: drop candidates certainly no better
        Some(b) => c.measure.lo() < b.measure.hi(),
    };
    if shell.len() >= 64 {
        let reduced = shell
            .par_iter()
            .map(|x| ctx.evaluate(x))
            .try_fold(
                || None,
                |acc: Option<Candidate>, c: Result<Candidate>| {
                    let c = c?;
                    if !keep(&c) {
                        return Ok(acc);
                    }
                    match acc {
                        None => Ok(Some(c)),
                        Some(a) => Ok(Some(ctx.pick_min(a, c)?)),
                    }
                },
            )
            .try_reduce(
                || None,
                |a, b| match (a, b) {
                    (None, x) => Ok(x),
                    (x, None) => Ok(x),
                    (Some(a), Some(b)) => Ok(Some(ctx.pick_min(a, b)?)),
                },
            )?;
        Ok(reduced)
    } else {
        let mut acc: Option<Candidate> = None;
        for x in shell {
            let c = ctx.evaluate(x)?;
            if !keep(&c) {
                continue;
            }
            acc = Some(match acc {
                None => c,
                Some(a) => ctx.pick_min(a, c)?,
            });
        }
        Ok(acc)
    }
}

fn make_record(cand: &Candidate, key: i64, norms: NormChoice) -> Result<BestApproxRecord> {
    let zeta = match norms.y_norm {
        Norm::Sup => cand.measure.clone(),
        Norm::Euclidean => cand.measure.sqrt(cand.bits)?,
    };
    Ok(BestApproxRecord {
        x: cand.x.iter().map(|&v| BigInt::from(v)).collect(),
        y: cand.y.clone(),
        m: BigInt::from(key),
        zeta,
    })
}

/// Certified enclosure of `min` over `0 < |x|_sup <= t` of
/// `min_y |Θx − y|_sup`: the one-parameter irrationality profile.
pub fn psi_theta(theta: &ApproxMatrix, t: i64, bits: u32) -> Result<RatInterval> {
    let profile = psi_theta_profile(theta, t, bits)?;
    Ok(profile.last().expect("t >= 1 gives one sample").clone())
}

/// The profile at every integer size `1..=t_max` (index `q - 1` holds the
/// minimum over `|x|_sup <= q`). Enclosures need no tie-breaking: the
/// interval `[min of lowers, min of uppers]` always contains the true
/// minimum.
pub fn psi_theta_profile(
    theta: &ApproxMatrix,
    t_max: i64,
    bits: u32,
) -> Result<Vec<RatInterval>> {
    if t_max < 1 {
        return Err(Error::InvalidInput("need t >= 1".into()));
    }
    if theta.cols() > 4 {
        return Err(Error::OutOfRange(
            "certified enumeration is sized for at most 4 variables".into(),
        ));
    }
    let ctx = ScanCtx {
        grid: EnclosureGrid::new(theta),
        y_norm: Norm::Sup,
        base_bits: bits.max(16),
    };
    ctx.grid.level(ctx.base_bits)?;
    let mut lo_run: Option<BigRational> = None;
    let mut hi_run: Option<BigRational> = None;
    let mut out = Vec::with_capacity(t_max as usize);
    for shell in 1..=t_max {
        for x in sup_shell(theta.cols(), shell) {
            let c = ctx.evaluate(&x)?;
            let (lo, hi) = (c.measure.lo().clone(), c.measure.hi().clone());
            if lo_run.as_ref().map_or(true, |r| &lo < r) {
                lo_run = Some(lo);
            }
            if hi_run.as_ref().map_or(true, |r| &hi < r) {
                hi_run = Some(hi);
            }
        }
        out.push(RatInterval::new(
            lo_run.clone().expect("shell 1 is nonempty"),
            hi_run.clone().expect("shell 1 is nonempty"),
        )?);
    }
    Ok(out)
}

/// Convenience: truncated decimal rendering of a record for reports.
pub fn record_digest(r: &BestApproxRecord) -> String {
    let x: Vec<String> = r.x.iter().map(|v| v.to_string()).collect();
    let y: Vec<String> = r.y.iter().map(|v| v.to_string()).collect();
    format!(
        "M={} x=({}) y=({}) zeta~{:.6e}",
        r.m,
        x.join(","),
        y.join(","),
        r.zeta.mid_f64()
    )
}

/// True when `a` and `b` agree as integer data (x, y, key) and their residual
/// enclosures overlap (hence enclose the same real number for one fixture).
pub fn records_agree(a: &BestApproxRecord, b: &BestApproxRecord) -> bool {
    a.x == b.x && a.y == b.y && a.m == b.m && !(a.zeta.hi() < b.zeta.lo() || b.zeta.hi() < a.zeta.lo())
}
