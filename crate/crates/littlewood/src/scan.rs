//! Certified record scans for the products `q·∏_i ‖qθ_i‖`, their p-adic
//! variants `q·∏_i |q|_{p_i}·‖qθ‖`, an optional `ln q` weight, and the
//! weighted-exponent membership scan.
//!
//! Every reported record value is a certified interval. The scan walks
//! `q = 1, 2, …, N` keeping the current record as an interval; a new `q`
//! enters the trace only when its value is certified strictly smaller than
//! the record's. A cheap fixed-point prefilter (64-bit wrapped phases with
//! a per-`q` error allowance) discards the overwhelming majority of `q`
//! without touching big-integer arithmetic; candidates near the record are
//! then decided exactly, refining precision as needed.

use std::collections::BTreeMap;
use std::sync::RwLock;

use exact_core::rational::rat_int;
use exact_core::transcend::ln_rat;
use exact_core::{
    BigInt, BigRational, Error, One, RatInterval, RealOracle, Result, ToPrimitive, Zero,
};

/// Precision-doubling budget for undecidable comparisons.
const REFINE_DOUBLINGS: u32 = 7;

/// One record-setting point of a product scan.
#[derive(Clone, Debug)]
pub struct ProductRecord {
    pub q: i64,
    /// Certified enclosure of the product value at `q`.
    pub value: RatInterval,
}

/// The full trace of a product scan up to the bound `n`.
#[derive(Clone, Debug)]
pub struct ProductScanResult {
    pub n: i64,
    /// Record-setting points, strictly decreasing in value.
    pub minima: Vec<ProductRecord>,
    /// The record-setting `q` in order (the argmin trace).
    pub argmin_trace: Vec<i64>,
}

impl ProductScanResult {
    /// The final (smallest) record, if any `q` was scanned.
    pub fn last(&self) -> Option<&ProductRecord> {
        self.minima.last()
    }
}

/// Exponent-membership scan outcome: either the first violating `q`, or a
/// certificate that no `q ≤ n` violates. Membership in the underlying set
/// is an infinitary property; this scan only ever reports "no violation up
/// to n".
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BadScanOutcome {
    Violation { q: i64 },
    NoViolationUpTo(i64),
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

fn padic_valuation(q: i64, p: u64) -> u32 {
    debug_assert!(q >= 1 && p >= 2);
    let mut q = q as u64;
    let mut v = 0;
    while q % p == 0 {
        q /= p;
        v += 1;
    }
    v
}

pub(crate) fn is_prime_u64(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// `p^{-v}` as an exact rational.
fn padic_norm(q: i64, p: u64) -> BigRational {
    let v = padic_valuation(q, p);
    BigRational::new(BigInt::one(), BigInt::from(p).pow(v))
}

/// Shared scan machinery: cached entry enclosures plus the fixed-point
/// prefilter state.
struct Engine {
    thetas: Vec<RealOracle>,
    primes: Vec<u64>,
    log_weight: bool,
    base_bits: u32,
    cache: RwLock<BTreeMap<(usize, u32), RatInterval>>,
    /// `floor(frac(θ_i)·2^64)`; the wrapped phase of `q·rep` differs from
    /// `frac(qθ_i)·2^64` by at most `2q` ulps.
    reps: Vec<u64>,
}

impl Engine {
    fn new(
        thetas: Vec<RealOracle>,
        primes: Vec<u64>,
        log_weight: bool,
        bits: u32,
    ) -> Result<Self> {
        let engine = Engine {
            thetas,
            primes,
            log_weight,
            base_bits: bits.max(16),
            cache: RwLock::new(BTreeMap::new()),
            reps: Vec::new(),
        };
        let mut reps = Vec::with_capacity(engine.thetas.len());
        for i in 0..engine.thetas.len() {
            let enc = engine.enclosure(i, 80)?;
            let lo = enc.lo().clone();
            let frac = &lo - lo.floor();
            let scaled = frac * BigRational::from(BigInt::one() << 64);
            let rep = scaled
                .floor()
                .to_integer()
                .to_u64()
                .expect("fractional part scaled to 64 bits fits");
            reps.push(rep);
        }
        Ok(Engine { reps, ..engine })
    }

    fn enclosure(&self, i: usize, bits: u32) -> Result<RatInterval> {
        if let Some(e) = self.cache.read().expect("cache lock").get(&(i, bits)) {
            return Ok(e.clone());
        }
        let e = tidy(self.thetas[i].enclose(bits)?, bits);
        self.cache
            .write()
            .expect("cache lock")
            .insert((i, bits), e.clone());
        Ok(e)
    }

    /// Certified enclosure of the product value at one `q`.
    fn value_exact(&self, q: i64, bits: u32) -> Result<RatInterval> {
        let mut acc = RatInterval::point(rat_int(q));
        if self.log_weight {
            acc = acc.mul(&ln_rat(&rat_int(q), bits)?);
        }
        for &p in &self.primes {
            acc = acc.mul_rat(&padic_norm(q, p));
        }
        for i in 0..self.thetas.len() {
            let enc = self.enclosure(i, bits)?;
            let d = enc.mul_rat(&rat_int(q)).dist_to_int();
            acc = acc.mul(&d);
        }
        Ok(tidy(acc, bits + 16))
    }

    /// Strict lower bound on the product value at `q`, in plain floating
    /// point with conservative error allowances. Used only to discard `q`
    /// that certainly cannot improve the record.
    fn fp_lower(&self, q: i64) -> f64 {
        let qf = q as f64;
        let mut lo = qf;
        if self.log_weight {
            lo *= qf.ln() * (1.0 - 1e-9);
        }
        for &p in &self.primes {
            lo *= (p as f64).powi(-(padic_valuation(q, p) as i32));
        }
        let ulp = 2f64.powi(-64);
        for &rep in &self.reps {
            let r = (q as u64).wrapping_mul(rep);
            let d = r.min(r.wrapping_neg()) as f64;
            // wrapped-phase error ≤ 2q ulps, f64 conversion slop folded in
            let term = ((d * (1.0 - 1e-9) - 2.0 * qf - qf * 1e-6) * ulp).max(0.0);
            lo *= term;
        }
        lo * (1.0 - 1e-6)
    }
}

/// Decide whether `q` strictly improves on the current record, refining
/// precision on both sides until the comparison is certified.
fn decide_record(
    engine: &Engine,
    q: i64,
    best: &mut Option<(i64, RatInterval, u32)>,
    minima: &mut Vec<ProductRecord>,
) -> Result<()> {
    let budget = engine.base_bits << REFINE_DOUBLINGS;
    let mut bits = engine.base_bits;
    let mut val = engine.value_exact(q, bits)?;
    loop {
        let improved = match best {
            None => true,
            Some((bq, bval, bbits)) => {
                if val.hi() < bval.lo() {
                    true
                } else if val.lo() >= bval.hi() {
                    return Ok(());
                } else {
                    let val_point = val.lo() == val.hi();
                    let bval_point = bval.lo() == bval.hi();
                    if val_point && bval_point {
                        // exact rationals: strict comparison decides
                        if val.lo() < bval.lo() {
                            true
                        } else {
                            return Ok(());
                        }
                    } else {
                        // refine whichever side is still an open interval
                        let mut progressed = false;
                        if !val_point && bits < budget {
                            bits *= 2;
                            val = engine.value_exact(q, bits)?;
                            progressed = true;
                        }
                        if !bval_point && *bbits < budget {
                            *bbits *= 2;
                            *bval = engine.value_exact(*bq, *bbits)?;
                            progressed = true;
                        }
                        if !progressed {
                            return Err(Error::PrecisionExhausted);
                        }
                        continue;
                    }
                }
            }
        };
        debug_assert!(improved);
        minima.push(ProductRecord {
            q,
            value: val.clone(),
        });
        *best = Some((q, val, bits));
        return Ok(());
    }
}

fn run_scan(
    thetas: Vec<RealOracle>,
    primes: Vec<u64>,
    log_weight: bool,
    n: i64,
    bits: u32,
) -> Result<ProductScanResult> {
    if n < 1 {
        return Err(Error::InvalidInput("need a scan bound n >= 1".into()));
    }
    if thetas.is_empty() && primes.is_empty() {
        return Err(Error::InvalidInput("nothing to scan: no forms given".into()));
    }
    if thetas.len() > 8 {
        return Err(Error::OutOfRange("at most 8 simultaneous forms".into()));
    }
    let engine = Engine::new(thetas, primes, log_weight, bits)?;
    let mut minima: Vec<ProductRecord> = Vec::new();
    let mut best: Option<(i64, RatInterval, u32)> = None;
    let mut best_hi_f = f64::INFINITY;
    // `ln 1 = 0` would make q = 1 a degenerate zero-weight minimum, so the
    // weighted scan starts at q = 2.
    let q_start = if log_weight { 2 } else { 1 };
    for q in q_start..=n {
        if engine.fp_lower(q) >= best_hi_f {
            continue;
        }
        decide_record(&engine, q, &mut best, &mut minima)?;
        if let Some((_, bval, _)) = &best {
            if bval.hi().is_zero() {
                // an exact zero can never be strictly improved; the trace
                // is complete
                break;
            }
            best_hi_f = bval.hi().to_f64().map_or(f64::INFINITY, |v| v * (1.0 + 1e-9) + 1e-300);
        }
    }
    let argmin_trace = minima.iter().map(|r| r.q).collect();
    Ok(ProductScanResult {
        n,
        minima,
        argmin_trace,
    })
}

/// Record minima of `q·‖qθ1‖·‖qθ2‖` over `q ≤ n`.
///
/// Degeneracy note: with an exactly-integral oracle for either coordinate
/// (for example the zero oracle), `‖qθ‖ = 0` exactly for every `q`, so the
/// trace is the single exact-zero record at `q = 1`. For a genuine
/// one-dimensional `q‖qθ‖` scan use [`multi_littlewood_scan`] with a single
/// coordinate.
pub fn littlewood_scan(
    theta1: &RealOracle,
    theta2: &RealOracle,
    n: i64,
    bits: u32,
) -> Result<ProductScanResult> {
    run_scan(vec![theta1.clone(), theta2.clone()], Vec::new(), false, n, bits)
}

/// Record minima of `q·∏_i ‖qθ_i‖` over `q ≤ n`.
pub fn multi_littlewood_scan(
    thetas: &[RealOracle],
    n: i64,
    bits: u32,
) -> Result<ProductScanResult> {
    run_scan(thetas.to_vec(), Vec::new(), false, n, bits)
}

/// Record minima of `q·ln(q)·∏_i ‖qθ_i‖` over `2 ≤ q ≤ n` (the logarithm
/// weight used for bounded-product consistency checks on algebraic-field
/// coordinate tuples).
pub fn multi_littlewood_scan_logweighted(
    thetas: &[RealOracle],
    n: i64,
    bits: u32,
) -> Result<ProductScanResult> {
    run_scan(thetas.to_vec(), Vec::new(), true, n, bits)
}

/// Record minima of `q·∏_i |q|_{p_i}·‖qθ‖` over `q ≤ n` for distinct
/// primes `p_i`.
pub fn mixed_littlewood_scan(
    theta: &RealOracle,
    primes: &[u64],
    n: i64,
    bits: u32,
) -> Result<ProductScanResult> {
    for (k, &p) in primes.iter().enumerate() {
        if !is_prime_u64(p) {
            return Err(Error::NotPrime(p));
        }
        if primes[..k].contains(&p) {
            return Err(Error::InvalidInput(format!("duplicate prime {p}")));
        }
    }
    run_scan(vec![theta.clone()], primes.to_vec(), false, n, bits)
}

/// Certified enclosure of the product value at a single `q` — the same
/// quantity the scans minimize, exposed for cross-checks and the CLI.
pub fn product_value_at(
    thetas: &[RealOracle],
    primes: &[u64],
    log_weight: bool,
    q: i64,
    bits: u32,
) -> Result<RatInterval> {
    if q < 1 || (log_weight && q < 2) {
        return Err(Error::InvalidInput("q out of the scan range".into()));
    }
    let engine = Engine::new(thetas.to_vec(), primes.to_vec(), log_weight, bits)?;
    engine.value_exact(q, bits.max(16))
}

/// First `q ≤ n` with `max_i q^{e_i}·‖qθ_i‖ < δ` (strictly), or a
/// certificate that no such `q` exists below `n`. Exponents are rationals
/// in `[0, 1]` summing to 1; every per-`q` decision is exact (comparisons
/// are taken to the power of the exponent denominators, which removes the
/// radicals).
///
/// Boundary behavior: a zero exponent makes that coordinate's condition
/// `‖qθ_i‖ < δ`, which for `δ > 1/2` is satisfied by every `q`; the scan
/// then degenerates to a one-dimensional test on the other coordinates.
pub fn bad_membership_scan(
    thetas: &[RealOracle],
    exponents: &[BigRational],
    delta: &BigRational,
    n: i64,
    bits: u32,
) -> Result<BadScanOutcome> {
    if thetas.is_empty() || thetas.len() != exponents.len() {
        return Err(Error::InvalidInput(
            "need one exponent per coordinate".into(),
        ));
    }
    if n < 1 {
        return Err(Error::InvalidInput("need a scan bound n >= 1".into()));
    }
    if delta <= &BigRational::zero() {
        return Err(Error::InvalidInput("delta must be positive".into()));
    }
    let one: BigRational = BigRational::one();
    if exponents.iter().sum::<BigRational>() != one {
        return Err(Error::InvalidInput("exponents must sum to 1".into()));
    }
    for e in exponents {
        if e < &BigRational::zero() || e > &one {
            return Err(Error::InvalidInput("exponents must lie in [0, 1]".into()));
        }
        if e.denom() > &BigInt::from(64) {
            return Err(Error::OutOfRange(
                "exponent denominators above 64 are not supported".into(),
            ));
        }
    }
    let engine = Engine::new(thetas.to_vec(), Vec::new(), false, bits)?;
    let exps: Vec<(u32, u32)> = exponents
        .iter()
        .map(|e| {
            (
                e.numer().to_u32().expect("checked <= 64"),
                e.denom().to_u32().expect("checked <= 64"),
            )
        })
        .collect();
    let delta_f = delta.to_f64().unwrap_or(f64::INFINITY);
    let ulp = 2f64.powi(-64);
    let budget = engine.base_bits << REFINE_DOUBLINGS;
    'scan: for q in 1..=n {
        // fast rejection: some term is certainly >= delta
        let qf = q as f64;
        for (i, &(a, b)) in exps.iter().enumerate() {
            let r = (q as u64).wrapping_mul(engine.reps[i]);
            let d = r.min(r.wrapping_neg()) as f64;
            let d_lower = ((d * (1.0 - 1e-9) - 2.0 * qf - qf * 1e-6) * ulp).max(0.0);
            let term_lower = qf.powf(a as f64 / b as f64) * d_lower * (1.0 - 1e-9);
            if term_lower > delta_f * (1.0 + 1e-9) + 1e-12 {
                continue 'scan;
            }
        }
        // exact decision for this q
        match decide_bad_at(&engine, &exps, delta, q, budget)? {
            true => return Ok(BadScanOutcome::Violation { q }),
            false => {}
        }
    }
    Ok(BadScanOutcome::NoViolationUpTo(n))
}

/// Exact decision: does `q` satisfy `max_i q^{e_i} ‖qθ_i‖ < δ`?
fn decide_bad_at(
    engine: &Engine,
    exps: &[(u32, u32)],
    delta: &BigRational,
    q: i64,
    budget: u32,
) -> Result<bool> {
    let mut bits = engine.base_bits;
    loop {
        let mut all_below = true;
        let mut ambiguous = false;
        for (i, &(a, b)) in exps.iter().enumerate() {
            let d = engine.enclosure(i, bits)?.mul_rat(&rat_int(q)).dist_to_int();
            let qa = BigRational::from(BigInt::from(q).pow(a));
            let db = rational_pow(delta, b);
            // q^{a/b}·d < δ  ⟺  q^a·d^b < δ^b (all quantities nonnegative)
            if &qa * rational_pow(d.hi(), b) < db {
                continue; // certainly below
            }
            if &qa * rational_pow(d.lo(), b) >= db {
                all_below = false; // certainly at-or-above
                break;
            }
            ambiguous = true;
        }
        if !all_below {
            return Ok(false);
        }
        if !ambiguous {
            return Ok(true);
        }
        if bits >= budget {
            return Err(Error::PrecisionExhausted);
        }
        bits *= 2;
    }
}

fn rational_pow(r: &BigRational, e: u32) -> BigRational {
    BigRational::new(r.numer().pow(e), r.denom().pow(e))
}
