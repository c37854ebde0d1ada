//! Monte Carlo exploration of metric product-approximation counts: for
//! random pairs (θ_1, θ_2), count q ≤ N with ‖qθ_1‖·‖qθ_2‖ ≤ ψ(q), and
//! track how the count grows with N. For approximating functions whose
//! series Σ ψ(q)·log q diverges the counts should keep growing; when the
//! series converges they should stall.
//!
//! This module is exploratory, not certifying: phases are 64-bit
//! fixed-point and the threshold uses a deterministic lower bound of
//! ψ(q), so runs are exactly reproducible from (seed, trial count), but
//! no interval certificate is attached to the counted events.

use exact_core::rational::rat_int;
use exact_core::transcend::ln_rat;
use exact_core::{BigInt, BigRational, Error, One, Result, ToPrimitive};
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

/// Shape of the approximating function ψ.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PsiKind {
    /// ψ(q) = scale / (q · ln q) — Σ ψ(q)·ln q diverges.
    InvQLog,
    /// ψ(q) = scale / (q · ln²q) — Σ ψ(q)·ln q still diverges.
    InvQLogSq,
    /// ψ(q) = scale / (q · ln³q) — Σ ψ(q)·ln q converges.
    InvQLogCube,
}

impl PsiKind {
    /// Whether Σ_q ψ(q)·log q diverges (the regime where counts grow).
    pub fn series_with_log_diverges(&self) -> bool {
        !matches!(self, PsiKind::InvQLogCube)
    }

    fn log_power(&self) -> u32 {
        match self {
            PsiKind::InvQLog => 1,
            PsiKind::InvQLogSq => 2,
            PsiKind::InvQLogCube => 3,
        }
    }
}

/// A concrete approximating function: kind plus a positive rational scale.
#[derive(Clone, Debug)]
pub struct PsiDescriptor {
    pub kind: PsiKind,
    pub scale: BigRational,
}

impl PsiDescriptor {
    pub fn new(kind: PsiKind, scale: BigRational) -> Result<Self> {
        if scale <= BigRational::from(BigInt::from(0)) {
            return Err(Error::InvalidInput("scale must be positive".into()));
        }
        Ok(PsiDescriptor { kind, scale })
    }

    pub fn series_with_log_diverges(&self) -> bool {
        self.kind.series_with_log_diverges()
    }
}

/// Result of a Monte Carlo run. Counts are cumulative in q, recorded at
/// the three checkpoints N/4, N/2, N.
pub struct GallagherReport {
    pub checkpoints: Vec<i64>,
    /// `per_trial[t][c]` = count for trial `t` at checkpoint `c`.
    pub per_trial: Vec<Vec<u64>>,
    /// Median across trials at each checkpoint.
    pub medians: Vec<u64>,
    pub trials: usize,
    pub seed: u64,
}

/// Deterministic per-q thresholds: T(q) = ⌊ψ_lo(q)·2^128⌋ where ψ_lo uses
/// the upper endpoint of a 48-bit ln q enclosure (so ψ_lo ≤ ψ). The event
/// test is then the pure-integer comparison d_1·d_2 ≤ T(q) on 64-bit
/// phase distances d_i ≈ ‖qθ_i‖·2^64.
fn thresholds(psi: &PsiDescriptor, n: i64) -> Result<Vec<u128>> {
    let two_128 = BigRational::from(BigInt::one() << 128);
    let mut out = vec![0u128; (n + 1) as usize];
    for q in 2..=n {
        let lnq_hi = ln_rat(&rat_int(q), 48)?.hi().clone();
        let mut denom = rat_int(q);
        for _ in 0..psi.kind.log_power() {
            denom *= &lnq_hi;
        }
        let t = &psi.scale / denom * &two_128;
        let floor = t.floor().to_integer();
        out[q as usize] = floor.to_u128().unwrap_or(u128::MAX);
    }
    Ok(out)
}

/// Run `trials` independent pairs (θ_1, θ_2) of uniform 64-bit dyadic
/// phases and count the product-approximation events up to each
/// checkpoint. Trial `t` draws from a ChaCha stream `1 + t` over the
/// given seed, so reports are reproducible and independent of thread
/// scheduling.
pub fn gallagher_montecarlo(
    psi: &PsiDescriptor,
    trials: usize,
    n: i64,
    seed: u64,
) -> Result<GallagherReport> {
    if n < 8 {
        return Err(Error::InvalidInput("need N >= 8".into()));
    }
    if trials == 0 {
        return Err(Error::InvalidInput("need at least one trial".into()));
    }
    let checkpoints = vec![n / 4, n / 2, n];
    let thr = thresholds(psi, n)?;

    let per_trial: Vec<Vec<u64>> = (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(1 + t as u64);
            let rep1 = rng.next_u64();
            let rep2 = rng.next_u64();
            let mut counts = Vec::with_capacity(checkpoints.len());
            let mut count = 0u64;
            let mut next_cp = 0usize;
            for q in 2..=n {
                let r1 = (q as u64).wrapping_mul(rep1);
                let r2 = (q as u64).wrapping_mul(rep2);
                let d1 = r1.min(r1.wrapping_neg()) as u128;
                let d2 = r2.min(r2.wrapping_neg()) as u128;
                if d1 * d2 <= thr[q as usize] {
                    count += 1;
                }
                while next_cp < checkpoints.len() && q == checkpoints[next_cp] {
                    counts.push(count);
                    next_cp += 1;
                }
            }
            counts
        })
        .collect();

    let mut medians = Vec::with_capacity(checkpoints.len());
    for c in 0..checkpoints.len() {
        let mut col: Vec<u64> = per_trial.iter().map(|row| row[c]).collect();
        col.sort_unstable();
        medians.push(col[col.len() / 2]);
    }

    Ok(GallagherReport {
        checkpoints,
        per_trial,
        medians,
        trials,
        seed,
    })
}
