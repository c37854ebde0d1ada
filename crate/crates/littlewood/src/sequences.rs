//! Multiplicative semigroup sequences and exact avoider construction for
//! lacunary sequences: given t_0 < t_1 < ⋯ with t_{j+1}/t_j ≥ 1 + 1/M,
//! find a dyadic α keeping every ‖α t_j − η_j‖ above an exact positive
//! floor, and certify that floor by direct re-evaluation.

use exact_core::rational::{rat, rat_int};
use exact_core::transcend::ln_rat;
use exact_core::{BigInt, BigRational, Error, One, RatInterval, Result, Zero};

/// All products 2^a · 3^b up to `bound`, sorted, starting from 1.
pub fn furstenberg_sequence(bound: u64) -> Vec<u64> {
    let mut out = Vec::new();
    if bound == 0 {
        return out;
    }
    let mut p2: u64 = 1;
    loop {
        let mut v = p2;
        loop {
            out.push(v);
            match v.checked_mul(3) {
                Some(next) if next <= bound => v = next,
                _ => break,
            }
        }
        match p2.checked_mul(2) {
            Some(next) if next <= bound => p2 = next,
            _ => break,
        }
    }
    out.sort_unstable();
    out
}

/// A finite sequence of positive rationals with certified lacunarity
/// constant: consecutive ratios are all ≥ 1 + 1/M.
#[derive(Clone)]
pub struct LacunarySequence {
    terms: Vec<BigRational>,
    m_bound: BigRational,
}

impl LacunarySequence {
    /// Validate the exact ratio condition t_{j+1}/t_j ≥ 1 + 1/M.
    pub fn new(terms: Vec<BigRational>, m_bound: BigRational) -> Result<Self> {
        if terms.is_empty() {
            return Err(Error::InvalidInput("need at least one term".into()));
        }
        if m_bound <= BigRational::zero() {
            return Err(Error::InvalidInput("need M > 0".into()));
        }
        if terms[0] <= BigRational::zero() {
            return Err(Error::InvalidInput("terms must be positive".into()));
        }
        let floor_ratio = BigRational::one() + m_bound.recip();
        for w in terms.windows(2) {
            if &w[1] / &w[0] < floor_ratio {
                return Err(Error::InvalidInput(format!(
                    "ratio {} / {} falls below 1 + 1/M",
                    w[1], w[0]
                )));
            }
        }
        Ok(LacunarySequence { terms, m_bound })
    }

    /// 1, 2, 4, …, 2^{count−1} with M = 1.
    pub fn powers_of_two(count: usize) -> Result<Self> {
        let mut terms = Vec::with_capacity(count);
        let mut v = BigRational::one();
        for _ in 0..count {
            terms.push(v.clone());
            v *= rat_int(2);
        }
        Self::new(terms, rat_int(1))
    }

    /// r^j for j = 0..count with r = num/den, declared constant M.
    pub fn geometric(num: i64, den: i64, count: usize, m_bound: BigRational) -> Result<Self> {
        if den == 0 {
            return Err(Error::InvalidInput("zero denominator".into()));
        }
        let r = rat(num, den);
        let mut terms = Vec::with_capacity(count);
        let mut v = BigRational::one();
        for _ in 0..count {
            terms.push(v.clone());
            v *= &r;
        }
        Self::new(terms, m_bound)
    }

    pub fn terms(&self) -> &[BigRational] {
        &self.terms
    }

    pub fn m_bound(&self) -> &BigRational {
        &self.m_bound
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

/// Outcome of the avoider search. `achieved` is exact and certified:
/// re-evaluating min_j ‖α t_j − η_j‖ at `alpha` reproduces it.
pub struct AvoiderResult {
    /// The constructed dyadic point.
    pub alpha: BigRational,
    /// Exact value of min over j of ‖α t_j − η_j‖.
    pub achieved: BigRational,
    /// γ/(M ln M) for comparison, when M > 1 makes it meaningful.
    pub reference: Option<RatInterval>,
    /// Dyadic depth actually used.
    pub depth: u32,
}

/// Distance from an exact rational to its nearest integer.
fn dist_to_int(x: &BigRational) -> BigRational {
    let f = x - x.floor();
    let alt = BigRational::one() - &f;
    if f < alt {
        f
    } else {
        alt
    }
}

/// Sup over α ∈ [a, b] of ‖α t − η‖, exactly. The image interval is
/// [u, v] = [a t − η, b t − η]; the sup is 1/2 when the image spans a
/// full period or contains a half-integer, else the max endpoint
/// distance (inside one period the distance is convex around its
/// integer valley).
fn sup_dist_over(a: &BigRational, b: &BigRational, t: &BigRational, eta: &BigRational) -> BigRational {
    let u = a * t - eta;
    let v = b * t - eta;
    let half = rat(1, 2);
    if &v - &u >= BigRational::one() {
        return half;
    }
    let h = (&u - &half).ceil() + &half;
    if h <= v {
        return half;
    }
    let du = dist_to_int(&u);
    let dv = dist_to_int(&v);
    if du > dv {
        du
    } else {
        dv
    }
}

const BEAM_WIDTH: usize = 256;

/// Greedy dyadic construction of an avoider for `t`: search [0, 1] by
/// best-first beam over dyadic cells, scoring each cell by the exact
/// optimistic bound min_j sup_{α∈cell} ‖α t_j − η_j‖, then evaluate the
/// surviving cells' endpoints and midpoints exactly. `targets` supplies
/// the η_j (default all zero). The returned floor is exact; compare it
/// against `reference` = γ/(M ln M) when that is meaningful (M > 1).
pub fn lacunary_avoider(
    seq: &LacunarySequence,
    targets: Option<&[BigRational]>,
    resolution: u32,
    gamma: Option<&BigRational>,
) -> Result<AvoiderResult> {
    if resolution == 0 || resolution > 40 {
        return Err(Error::OutOfRange(
            "resolution must lie in 1..=40 dyadic levels".into(),
        ));
    }
    let zeros;
    let etas: &[BigRational] = match targets {
        Some(ts) => {
            if ts.len() != seq.len() {
                return Err(Error::InvalidInput(
                    "need one target per sequence term".into(),
                ));
            }
            ts
        }
        None => {
            zeros = vec![BigRational::zero(); seq.len()];
            &zeros
        }
    };

    // cell a at depth d is [a, a+1] / 2^d
    let cell_bounds = |a: u64, d: u32| -> (BigRational, BigRational) {
        let denom = BigInt::one() << d;
        (
            BigRational::new(BigInt::from(a), denom.clone()),
            BigRational::new(BigInt::from(a + 1), denom),
        )
    };
    let score = |a: u64, d: u32| -> BigRational {
        let (lo, hi) = cell_bounds(a, d);
        let mut best: Option<BigRational> = None;
        for (t, eta) in seq.terms().iter().zip(etas) {
            let s = sup_dist_over(&lo, &hi, t, eta);
            if best.as_ref().map_or(true, |b| &s < b) {
                best = Some(s);
            }
        }
        best.expect("sequence is non-empty")
    };

    let mut beam: Vec<(u64, BigRational)> = vec![(0, score(0, 0))];
    for d in 1..=resolution {
        let mut next: Vec<(u64, BigRational)> = Vec::with_capacity(2 * beam.len());
        for (a, _) in &beam {
            for child in [2 * a, 2 * a + 1] {
                next.push((child, score(child, d)));
            }
        }
        next.sort_by(|x, y| y.1.cmp(&x.1).then(x.0.cmp(&y.0)));
        next.truncate(BEAM_WIDTH);
        beam = next;
    }

    // exact final evaluation at lo / mid / hi of each surviving cell
    let evaluate = |alpha: &BigRational| -> BigRational {
        let mut best: Option<BigRational> = None;
        for (t, eta) in seq.terms().iter().zip(etas) {
            let d = dist_to_int(&(alpha * t - eta));
            if best.as_ref().map_or(true, |b| &d < b) {
                best = Some(d);
            }
        }
        best.expect("sequence is non-empty")
    };
    let mut best_alpha: Option<(BigRational, BigRational)> = None;
    for (a, _) in &beam {
        let (lo, hi) = cell_bounds(*a, resolution);
        let mid = (&lo + &hi) / rat_int(2);
        for alpha in [lo, mid, hi] {
            let val = evaluate(&alpha);
            if best_alpha.as_ref().map_or(true, |(_, v)| &val > v) {
                best_alpha = Some((alpha, val));
            }
        }
    }
    let (alpha, achieved) = best_alpha.expect("beam is non-empty");
    if achieved.is_zero() {
        return Err(Error::ResolutionTooCoarse);
    }

    let reference = if seq.m_bound() > &BigRational::one() {
        let g = gamma.cloned().unwrap_or_else(|| rat(1, 10));
        let ln_m = ln_rat(seq.m_bound(), 48)?;
        let denom = ln_m.mul_rat(seq.m_bound());
        Some(denom.recip()?.mul_rat(&g))
    } else {
        None
    };

    Ok(AvoiderResult {
        alpha,
        achieved,
        reference,
        depth: resolution,
    })
}

/// Re-evaluate the avoider certificate exactly: min_j ‖α t_j − η_j‖.
pub fn avoider_verify(
    seq: &LacunarySequence,
    alpha: &BigRational,
    targets: Option<&[BigRational]>,
) -> Result<BigRational> {
    let zeros;
    let etas: &[BigRational] = match targets {
        Some(ts) => {
            if ts.len() != seq.len() {
                return Err(Error::InvalidInput(
                    "need one target per sequence term".into(),
                ));
            }
            ts
        }
        None => {
            zeros = vec![BigRational::zero(); seq.len()];
            &zeros
        }
    };
    let mut best: Option<BigRational> = None;
    for (t, eta) in seq.terms().iter().zip(etas) {
        let d = dist_to_int(&(alpha * t - eta));
        if best.as_ref().map_or(true, |b| &d < b) {
            best = Some(d);
        }
    }
    Ok(best.expect("sequence is non-empty"))
}
