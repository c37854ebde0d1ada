//! Witness scans for simultaneous approximation with an extra logarithmic
//! saving on one coordinate: given the real embeddings θ_1, …, θ_{n−1} of a
//! degree-n algebraic number (conjugate coordinates), count q ≤ N with
//!
//!   ‖q θ_j‖ ≤ C · q^{−1/(n−1)}                for every j, and
//!   ‖q θ_1‖ ≤ C · q^{−1/(n−1)} · (log q)^{−1}  on the first coordinate.
//!
//! Full integer-unit orbits make such q infinite for these fixtures; the
//! scan certifies each reported witness exactly.

use best_approx::nth_root_bounds;
use exact_core::poly::IntPoly;
use exact_core::rational::{rat, rat_int};
use exact_core::transcend::ln_rat;
use exact_core::{BigInt, BigRational, Error, One, RatInterval, RealOracle, Result, ToPrimitive, Zero};

const REFINE_DOUBLINGS: u32 = 7;

/// Conjugate coordinates of an algebraic number, each as a certified real.
#[derive(Clone)]
pub struct PeckFixture {
    /// θ_1, …, θ_{n−1}: the coordinates being approximated.
    pub coords: Vec<RealOracle>,
    /// Degree n of the underlying field (coords.len() + 1).
    pub degree: usize,
}

impl PeckFixture {
    /// Validate: at least two coordinates' worth of structure (degree ≥ 3)
    /// and pairwise-disjoint enclosures so the coordinates are genuinely
    /// distinct conjugates.
    pub fn new(coords: Vec<RealOracle>, bits: u32) -> Result<Self> {
        if coords.len() < 2 {
            return Err(Error::InvalidInput(
                "need at least two conjugate coordinates".into(),
            ));
        }
        let mut boxes = Vec::with_capacity(coords.len());
        for c in &coords {
            boxes.push(c.enclose(bits.max(32))?);
        }
        for i in 0..boxes.len() {
            for j in (i + 1)..boxes.len() {
                let disjoint = boxes[i].hi() < boxes[j].lo() || boxes[j].hi() < boxes[i].lo();
                if !disjoint {
                    return Err(Error::InvalidInput(
                        "conjugate enclosures overlap; raise precision or fix input".into(),
                    ));
                }
            }
        }
        let degree = coords.len() + 1;
        Ok(PeckFixture { coords, degree })
    }
}

/// The standard cubic fixture: θ = 2cos(2π/7), the largest root of
/// x³ + x² − 2x − 1, together with its square θ² (a root of
/// x³ − 5x² + 6x − 1). Both are totally real cubics, so (θ, θ²) is the
/// canonical two-coordinate system of a degree-3 field.
pub fn peck_cubic_fixture() -> Result<PeckFixture> {
    let theta = RealOracle::AlgebraicRoot {
        poly: IntPoly::from_ints(&[-1, -2, 1, 1]),
        bracket: RatInterval::new(rat(12, 10), rat(13, 10))?,
    };
    let theta_sq = RealOracle::AlgebraicRoot {
        poly: IntPoly::from_ints(&[-1, 6, -5, 1]),
        bracket: RatInterval::new(rat(15, 10), rat(16, 10))?,
    };
    PeckFixture::new(vec![theta, theta_sq], 64)
}

/// One certified witness.
#[derive(Clone, Debug)]
pub struct PeckWitness {
    pub q: i64,
    /// Certified enclosures of ‖q θ_j‖ for each coordinate.
    pub distances: Vec<RatInterval>,
}

/// Result of a witness scan.
pub struct PeckReport {
    pub witnesses: Vec<PeckWitness>,
    pub count: usize,
    /// Certified enclosure of min over scanned q of q^{1/(n−1)}·max_j ‖qθ_j‖,
    /// the quantity whose positivity expresses a badly-approximable floor.
    pub bad_floor: RatInterval,
}

struct PeckCtx {
    reps: Vec<u64>,
    coords: Vec<RealOracle>,
    root_exp: u32, // n − 1: witnesses need ‖qθ_j‖ ≤ C·q^{−1/root_exp}
}

impl PeckCtx {
    fn new(fix: &PeckFixture) -> Result<Self> {
        let mut reps = Vec::with_capacity(fix.coords.len());
        for c in &fix.coords {
            let iv = c.enclose(80)?;
            let lo = iv.lo().clone();
            let frac = &lo - lo.floor();
            let scaled = frac * BigRational::from(BigInt::one() << 64);
            reps.push(
                scaled
                    .floor()
                    .to_integer()
                    .to_u64()
                    .expect("fractional part scaled to 64 bits fits"),
            );
        }
        Ok(PeckCtx {
            reps,
            coords: fix.coords.clone(),
            root_exp: (fix.degree - 1) as u32,
        })
    }

    /// Strict floating-point lower bound for ‖q θ_j‖ from the 64-bit phase.
    fn fp_dist_lower(&self, j: usize, q: i64) -> f64 {
        let r = (q as u64).wrapping_mul(self.reps[j]);
        let d = r.min(r.wrapping_neg()) as f64;
        let qf = q as f64;
        let ulp = 2f64.powi(-64);
        (((d * (1.0 - 1e-9)) - 2.0 * qf - qf * 1e-6) * ulp).max(0.0) * (1.0 - 1e-6)
    }

    fn dist_exact(&self, j: usize, q: i64, bits: u32) -> Result<RatInterval> {
        let iv = self.coords[j].enclose(bits)?;
        Ok(iv.mul_rat(&rat_int(q)).dist_to_int())
    }
}

/// Right-hand sides C·q^{−1/e} and C·q^{−1/e}·(ln q)^{−1} as enclosures.
fn rhs_bounds(
    c: &BigRational,
    q: i64,
    root_exp: u32,
    bits: u32,
) -> Result<(RatInterval, RatInterval)> {
    // q^{1/e} enclosure, then reciprocal
    let (rlo, rhi) = nth_root_bounds(&rat_int(q), root_exp, bits)?;
    let inv_root = RatInterval::new(rlo, rhi)?.recip()?;
    let plain = inv_root.mul_rat(c);
    let lnq = ln_rat(&rat_int(q), bits)?;
    let logged = plain.mul(&lnq.recip()?);
    Ok((plain, logged))
}

/// Scan q = 2..N and report every certified witness, plus the certified
/// badly-approximable floor over all scanned q. (q = 1 is skipped: the
/// logarithmic factor is undefined there.)
pub fn peck_verify(
    fix: &PeckFixture,
    c: &BigRational,
    n_max: i64,
    bits: u32,
) -> Result<PeckReport> {
    if n_max < 2 {
        return Err(Error::InvalidInput("need n_max >= 2".into()));
    }
    if c <= &BigRational::zero() {
        return Err(Error::InvalidInput("need C > 0".into()));
    }
    let ctx = PeckCtx::new(fix)?;
    let mut witnesses = Vec::new();
    let mut floor_lo: Option<BigRational> = None;
    let mut floor_hi: Option<BigRational> = None;
    let budget = bits.saturating_mul(1 << REFINE_DOUBLINGS);
    let c_f = c.to_f64().unwrap_or(f64::MAX);

    for q in 2..=n_max {
        // cheap certified reject: if some coordinate's distance lower bound
        // already exceeds the *plain* right-hand side, q is not a witness.
        // The fp rhs uses an upper bound of C·q^{−1/e}.
        let rhs_plain_f = c_f * (q as f64).powf(-1.0 / ctx.root_exp as f64) * (1.0 + 1e-9);
        let mut maybe = true;
        for j in 0..ctx.coords.len() {
            if ctx.fp_dist_lower(j, q) > rhs_plain_f {
                maybe = false;
                break;
            }
        }

        // The bad floor needs every q's max-distance, but only as a certified
        // *interval minimum*: we can use the fp lower bound to skip exact
        // work when this q certainly does not lower the current floor.
        let fp_max_dist_lower = (0..ctx.coords.len())
            .map(|j| ctx.fp_dist_lower(j, q))
            .fold(0.0f64, f64::max);
        let root_f = (q as f64).powf(1.0 / ctx.root_exp as f64) * (1.0 - 1e-9);
        let floor_skip = match &floor_hi {
            Some(h) => fp_max_dist_lower * root_f > h.to_f64().unwrap_or(0.0) * (1.0 + 1e-9),
            None => false,
        };

        if !maybe && floor_skip {
            continue;
        }

        let mut cur_bits = bits;
        'refine: loop {
            let (rhs_plain, rhs_logged) = rhs_bounds(c, q, ctx.root_exp, cur_bits)?;
            let mut dists = Vec::with_capacity(ctx.coords.len());
            for j in 0..ctx.coords.len() {
                dists.push(ctx.dist_exact(j, q, cur_bits)?);
            }

            // witness decision
            let mut decided_witness = None;
            if maybe {
                let mut all_in = true;
                let mut some_out = false;
                for (j, d) in dists.iter().enumerate() {
                    let rhs = if j == 0 { &rhs_logged } else { &rhs_plain };
                    if !(d.hi() <= rhs.lo()) {
                        all_in = false;
                    }
                    if d.lo() > rhs.hi() {
                        some_out = true;
                    }
                }
                if all_in {
                    decided_witness = Some(true);
                } else if some_out {
                    decided_witness = Some(false);
                }
            } else {
                decided_witness = Some(false);
            }

            // floor update: q^{1/e} · max_j dist
            let (rlo, rhi) = nth_root_bounds(&rat_int(q), ctx.root_exp, cur_bits)?;
            let root = RatInterval::new(rlo, rhi)?;
            let max_d = interval_max(&dists);
            let scaled = max_d.mul(&root);
            let improves_lo = floor_lo.as_ref().map_or(true, |m| scaled.lo() < m);
            let improves_hi = floor_hi.as_ref().map_or(true, |m| scaled.hi() < m);

            match decided_witness {
                Some(is_witness) => {
                    if is_witness {
                        witnesses.push(PeckWitness { q, distances: dists });
                    }
                    if improves_lo {
                        floor_lo = Some(scaled.lo().clone());
                    }
                    if improves_hi {
                        floor_hi = Some(scaled.hi().clone());
                    }
                    break 'refine;
                }
                None => {
                    if cur_bits >= budget {
                        return Err(Error::PrecisionExhausted);
                    }
                    cur_bits *= 2;
                }
            }
        }
    }

    let count = witnesses.len();
    let bad_floor = RatInterval::new(
        floor_lo.ok_or_else(|| Error::InvalidInput("empty scan".into()))?,
        floor_hi.ok_or_else(|| Error::InvalidInput("empty scan".into()))?,
    )?;
    Ok(PeckReport {
        witnesses,
        count,
        bad_floor,
    })
}

fn interval_max(rows: &[RatInterval]) -> RatInterval {
    let mut lo = rows[0].lo().clone();
    let mut hi = rows[0].hi().clone();
    for r in &rows[1..] {
        if r.lo() > &lo {
            lo = r.lo().clone();
        }
        if r.hi() > &hi {
            hi = r.hi().clone();
        }
    }
    RatInterval::new(lo, hi).expect("max of valid intervals")
}
