//! Exhaustive enumeration of reduced fractions in (0, 1) with bounded
//! partial quotients, by depth-first search over canonical quotient
//! strings with continuant pruning.
//!
//! Membership convention (documented here once, used everywhere): a
//! reduced fraction a/q ∈ (0, 1) is k-bounded when one of its two regular
//! expansions has all partial quotients ≤ k. In canonical terms (final
//! quotient ≥ 2) that is: every non-final quotient ≤ k and the final
//! quotient ≤ k + 1 (its twin expansion ends ..., b_s − 1, 1). The
//! denominator q = 1 admits no fraction in the open interval, so the
//! count table has N_k(1) = 0; the coverage set marks q = 1 as covered by
//! convention (the empty quotient string), so that full coverage reads as
//! density exactly 1.

use exact_core::{Error, Result};

/// One enumerated fraction: the canonical quotient string and the reduced
/// numerator/denominator it folds up to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundedFraction {
    pub a: u64,
    pub q: u64,
    /// Canonical partial quotients of a/q (final quotient ≥ 2).
    pub quotients: Vec<u64>,
}

/// Depth-first walk over every k-bounded fraction with denominator ≤ n,
/// calling `visit(quotients, a, q)` exactly once per fraction. Quotient
/// strings are canonical; the walk prunes as soon as a prefix continuant
/// exceeds `n`.
pub fn walk_bounded<F: FnMut(&[u64], u64, u64)>(k: u64, n: u64, mut visit: F) -> Result<()> {
    if k < 1 {
        return Err(Error::InvalidInput("need a quotient bound k >= 1".into()));
    }
    if n < 1 {
        return Err(Error::InvalidInput("need a denominator bound n >= 1".into()));
    }
    let mut quotients = Vec::new();
    // (q_prev, q_cur) and (p_prev, p_cur) are the continuant recurrences
    // for the denominator and numerator of [0; b_1, ..., b_t].
    dfs(k, n, 0, 1, 1, 0, &mut quotients, &mut visit);
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn dfs<F: FnMut(&[u64], u64, u64)>(
    k: u64,
    n: u64,
    q_prev: u64,
    q_cur: u64,
    p_prev: u64,
    p_cur: u64,
    quotients: &mut Vec<u64>,
    visit: &mut F,
) {
    // Terminate here: the final quotient ranges over 2..=k+1 (values above
    // k are reachable through the twin expansion ending in 1).
    for b in 2..=(k + 1) {
        let q = match b.checked_mul(q_cur).and_then(|v| v.checked_add(q_prev)) {
            Some(q) => q,
            None => break,
        };
        if q > n {
            break; // q is increasing in b
        }
        let a = b * p_cur + p_prev;
        quotients.push(b);
        visit(quotients, a, q);
        quotients.pop();
    }
    // Extend with a non-final quotient in 1..=k. Any completed string
    // through this prefix has denominator at least 2·q_new + q_cur, so
    // prune when even the shortest completion overshoots.
    for b in 1..=k {
        let q_new = match b.checked_mul(q_cur).and_then(|v| v.checked_add(q_prev)) {
            Some(q) => q,
            None => break,
        };
        if 2u64.saturating_mul(q_new).saturating_add(q_cur) > n {
            break;
        }
        let p_new = b * p_cur + p_prev;
        quotients.push(b);
        dfs(k, n, q_cur, q_new, p_cur, p_new, quotients, visit);
        quotients.pop();
    }
}

/// All k-bounded fractions with denominator ≤ n, materialized. Order is
/// the DFS order of the canonical strings; use [`walk_bounded`] for large
/// scans that only need aggregates.
pub fn enumerate_bounded(k: u64, n: u64) -> Result<Vec<BoundedFraction>> {
    let mut out = Vec::new();
    walk_bounded(k, n, |b, a, q| {
        out.push(BoundedFraction {
            a,
            q,
            quotients: b.to_vec(),
        });
    })?;
    Ok(out)
}

/// Bitmap over 1..=n of denominators reached by some k-bounded fraction.
#[derive(Clone, PartialEq, Eq)]
pub struct CoverageSet {
    k: u64,
    n: u64,
    bits: Vec<u64>,
    covered_count: u64,
}

impl CoverageSet {
    fn empty(k: u64, n: u64) -> Self {
        CoverageSet {
            k,
            n,
            bits: vec![0u64; (n as usize + 64) / 64],
            covered_count: 0,
        }
    }

    fn mark(&mut self, q: u64) {
        let w = (q / 64) as usize;
        let m = 1u64 << (q % 64);
        if self.bits[w] & m == 0 {
            self.bits[w] |= m;
            self.covered_count += 1;
        }
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn covered(&self, q: u64) -> bool {
        if q < 1 || q > self.n {
            return false;
        }
        self.bits[(q / 64) as usize] & (1u64 << (q % 64)) != 0
    }

    pub fn covered_count(&self) -> u64 {
        self.covered_count
    }

    /// #covered / n as a float report.
    pub fn density(&self) -> f64 {
        self.covered_count as f64 / self.n as f64
    }

    /// Denominators in 1..=n that no k-bounded fraction reaches.
    pub fn uncovered(&self) -> Vec<u64> {
        (1..=self.n).filter(|&q| !self.covered(q)).collect()
    }

    /// Merge another bitmap of the same shape by disjunction.
    fn merge(&mut self, other: &CoverageSet) {
        debug_assert_eq!(self.n, other.n);
        let mut count = 0u64;
        for (w, o) in self.bits.iter_mut().zip(&other.bits) {
            *w |= o;
            count += w.count_ones() as u64;
        }
        self.covered_count = count;
    }

    /// Compact binary form: an 8-byte header (magic "ZC", version 1, k as
    /// one byte, n as little-endian u32) followed by the bitmap words in
    /// little-endian order.
    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(8 + self.bits.len() * 8);
        out.extend_from_slice(b"ZC");
        out.push(1u8);
        out.push(self.k.min(255) as u8);
        out.extend_from_slice(&(self.n as u32).to_le_bytes());
        for w in &self.bits {
            out.extend_from_slice(&w.to_le_bytes());
        }
        out
    }

    pub fn from_bytes(data: &[u8]) -> Result<Self> {
        if data.len() < 8 || &data[0..2] != b"ZC" {
            return Err(Error::InvalidInput("bad coverage header magic".into()));
        }
        if data[2] != 1 {
            return Err(Error::InvalidInput(format!(
                "unsupported coverage format version {}",
                data[2]
            )));
        }
        let k = data[3] as u64;
        let n = u32::from_le_bytes([data[4], data[5], data[6], data[7]]) as u64;
        let words = (n as usize + 64) / 64;
        if data.len() != 8 + words * 8 {
            return Err(Error::InvalidInput("coverage bitmap length mismatch".into()));
        }
        let mut bits = Vec::with_capacity(words);
        for c in data[8..].chunks_exact(8) {
            bits.push(u64::from_le_bytes(c.try_into().expect("chunk of 8")));
        }
        let mut set = CoverageSet {
            k,
            n,
            bits,
            covered_count: 0,
        };
        set.covered_count = set.bits.iter().map(|w| w.count_ones() as u64).sum();
        Ok(set)
    }
}

/// Coverage of 1..=n by k-bounded denominators. q = 1 is covered by
/// convention.
pub fn coverage(k: u64, n: u64) -> Result<CoverageSet> {
    let mut set = CoverageSet::empty(k, n);
    set.mark(1);
    walk_bounded(k, n, |_, _, q| set.mark(q))?;
    Ok(set)
}

/// Same coverage, computed in `shards` independent pieces split by the
/// leading quotient's residue class and merged by disjunction. The result
/// is bit-identical to [`coverage`] regardless of the shard count.
pub fn coverage_sharded(k: u64, n: u64, shards: u64) -> Result<CoverageSet> {
    if shards < 1 {
        return Err(Error::InvalidInput("need at least one shard".into()));
    }
    let mut merged = CoverageSet::empty(k, n);
    merged.mark(1);
    for residue in 0..shards {
        let mut piece = CoverageSet::empty(k, n);
        walk_bounded(k, n, |b, _, q| {
            if b[0] % shards == residue {
                piece.mark(q);
            }
        })?;
        merged.merge(&piece);
    }
    Ok(merged)
}

/// The table of per-denominator counts N_k(q) for q ≤ q_max, where
/// N_k(q) = #{a : a/q is a k-bounded reduced fraction in (0, 1)}.
pub struct NkTable {
    pub k: u64,
    /// counts[q] = N_k(q); index 0 is unused, counts[1] = 0 by the
    /// open-interval convention.
    pub counts: Vec<u64>,
}

impl NkTable {
    /// Σ_{q ≤ bound} N_k(q).
    pub fn sum_up_to(&self, bound: u64) -> u64 {
        let hi = (bound as usize).min(self.counts.len() - 1);
        self.counts[..=hi].iter().sum()
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }
}

/// Exact N_k(q) for all q ≤ q_max by full enumeration.
pub fn n_k_counts(k: u64, q_max: u64) -> Result<NkTable> {
    let mut counts = vec![0u64; q_max as usize + 1];
    walk_bounded(k, q_max, |_, _, q| counts[q as usize] += 1)?;
    Ok(NkTable { k, counts })
}

/// Prefix-bounded membership: true iff every prefix (b_1, ..., b_ν) of the
/// canonical expansion of a/q whose continuant is ≤ t consists of
/// quotients ≤ k. The expansion used is canonical (final quotient ≥ 2);
/// the integer part of a/q is ignored, so a is effectively reduced mod q.
pub fn b_membership(a: u64, q: u64, k: u64, t: u64) -> Result<bool> {
    if q < 1 {
        return Err(Error::InvalidInput("need q >= 1".into()));
    }
    if gcd(a, q) != 1 {
        return Err(Error::InvalidInput(format!(
            "need gcd(a, q) = 1, got gcd({a}, {q}) = {}",
            gcd(a, q)
        )));
    }
    // Euclidean expansion of (a mod q)/q with running continuants,
    // seeded as K_{-1} = 0, K_0 = 1 so that K_1 = b_1.
    let mut num = a % q;
    let mut den = q;
    let mut k_prev = 0u64;
    let mut k_cur = 1u64;
    while num != 0 {
        let b = den / num;
        let r = den % num;
        let k_new = b.saturating_mul(k_cur).saturating_add(k_prev);
        if k_new <= t && b > k {
            return Ok(false);
        }
        if k_new > t {
            break; // continuants only grow; no later prefix qualifies
        }
        k_prev = k_cur;
        k_cur = k_new;
        den = num;
        num = r;
    }
    Ok(true)
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}
