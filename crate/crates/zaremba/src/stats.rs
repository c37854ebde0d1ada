//! Growth statistics over the bounded-quotient world: a regression fit
//! for the exponent of Σ_{q ≤ Q} N_k(q), and the minimum-over-numerators
//! maximal partial quotient for a fixed denominator.

use std::collections::BTreeMap;

use exact_core::{Error, Result};

use crate::enumerate::{gcd, n_k_counts};

/// Result of fitting log Σ_{q ≤ Q} N_k(q) against log Q on a grid of Q
/// values.
#[derive(Clone, Debug)]
pub struct GrowthFit {
    pub k: u64,
    /// The (Q, Σ_{q ≤ Q} N_k(q)) samples actually used.
    pub samples: Vec<(u64, u64)>,
    /// Least-squares slope of ln Σ against ln Q.
    pub fitted_exponent: f64,
    /// The second-order asymptotic prediction
    /// 2·(1 − 6/(π²k) − 72·ln k/(π⁴k²)), reported for comparison only —
    /// at small k the finite-size fit is not expected to match it.
    pub predicted_exponent: f64,
}

/// Fit the growth exponent of the cumulative bounded-quotient count on
/// the given grid of denominators. Needs at least four grid points.
pub fn hensley_fit(k: u64, grid: &[u64]) -> Result<GrowthFit> {
    if grid.len() < 4 {
        return Err(Error::TooFewPoints {
            needed: 4,
            got: grid.len(),
        });
    }
    let q_max = *grid.iter().max().expect("nonempty grid");
    let table = n_k_counts(k, q_max)?;
    let mut samples = Vec::with_capacity(grid.len());
    for &q in grid {
        if q < 2 {
            return Err(Error::InvalidInput(
                "grid points must be at least 2".into(),
            ));
        }
        let total = table.sum_up_to(q);
        if total == 0 {
            return Err(Error::InvalidInput(format!(
                "no bounded fractions up to {q}; cannot take logs"
            )));
        }
        samples.push((q, total));
    }
    let points: Vec<(f64, f64)> = samples
        .iter()
        .map(|&(q, s)| ((q as f64).ln(), (s as f64).ln()))
        .collect();
    let n = points.len() as f64;
    let mean_x = points.iter().map(|p| p.0).sum::<f64>() / n;
    let mean_y = points.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = points.iter().map(|p| (p.0 - mean_x).powi(2)).sum();
    let sxy: f64 = points
        .iter()
        .map(|p| (p.0 - mean_x) * (p.1 - mean_y))
        .sum();
    if sxx == 0.0 {
        return Err(Error::InvalidInput(
            "grid points must not all coincide".into(),
        ));
    }
    let kf = k as f64;
    let pi2 = std::f64::consts::PI * std::f64::consts::PI;
    let predicted = 2.0 * (1.0 - 6.0 / (pi2 * kf) - 72.0 * kf.ln() / (pi2 * pi2 * kf * kf));
    Ok(GrowthFit {
        k,
        samples,
        fitted_exponent: sxy / sxx,
        predicted_exponent: predicted,
    })
}

/// For a fixed denominator q: the distribution of
/// m(a) = max partial quotient of the canonical expansion of a/q over the
/// numerators a coprime to q, and its minimum.
#[derive(Clone, Debug)]
pub struct MaxQuotientStat {
    pub q: u64,
    /// Euler phi of q — the number of numerators surveyed.
    pub phi: u64,
    /// min over coprime a of the maximal partial quotient of a/q.
    pub min_max: u64,
    /// histogram[m] = #{a : max quotient of a/q equals m}.
    pub histogram: BTreeMap<u64, u64>,
}

impl MaxQuotientStat {
    /// (#{a : m(a) ≥ t}, phi) as an exact pair.
    pub fn tail_at(&self, t: u64) -> (u64, u64) {
        let count = self
            .histogram
            .range(t..)
            .map(|(_, c)| c)
            .sum::<u64>();
        (count, self.phi)
    }
}

/// Survey all numerators coprime to q. For q = 1 there are no fractions
/// in (0, 1), so the input is rejected.
pub fn max_quotient_stat(q: u64) -> Result<MaxQuotientStat> {
    if q < 2 {
        return Err(Error::InvalidInput("need q >= 2".into()));
    }
    let mut histogram: BTreeMap<u64, u64> = BTreeMap::new();
    let mut phi = 0u64;
    let mut min_max = u64::MAX;
    for a in 1..q {
        if gcd(a, q) != 1 {
            continue;
        }
        phi += 1;
        // Euclidean expansion of a/q in machine words: every quotient is
        // at most q, so this is exact.
        let (mut num, mut den, mut m) = (a, q, 0u64);
        while num != 0 {
            let b = den / num;
            let r = den % num;
            m = m.max(b);
            den = num;
            num = r;
        }
        *histogram.entry(m).or_insert(0) += 1;
        min_max = min_max.min(m);
    }
    Ok(MaxQuotientStat {
        q,
        phi,
        min_max,
        histogram,
    })
}
