//! Simultaneous best approximations to `(ρ, ρ²)` for the real root `ρ` of
//! `x³ = x + 1`, by an exact walk over the cubic lattice
//! `{(w, Re w′, Im w′) : w ∈ ℤ[ρ]}` (w′ a complex conjugate of w).
//!
//! A lattice point is a record when no other point lies in the open cylinder
//! `{|ξ0| < ξ0(w), ξ1² + ξ2² < radial²(w)}`. Every comparison reduces to the
//! sign of an integer combination `e0 + e1 ρ + e2 ρ²`, which is never zero
//! unless all `e_i` vanish, and the field norm gives an explicit lower bound
//! `|e0 + e1 ρ + e2 ρ²| ≥ 1/(|e0| + |e1|ρ + |e2|ρ²)²` — so a fixed 512-bit
//! root enclosure decides every sign this module can produce.

use crate::exponents::nth_root_bounds;
use exact_core::poly::refine_root;
use exact_core::rational::{rat, rat_int};
use exact_core::{BigInt, BigRational, Error, IntPoly, RatInterval, Result};
use num_traits::{ToPrimitive, Zero};
use std::cmp::Ordering;
use std::collections::BTreeSet;

/// One record of the cylinder walk.
#[derive(Clone, Debug)]
pub struct CylinderRecord {
    /// Coefficients of `w = a + bρ + cρ²`.
    pub coeffs: [i64; 3],
    /// The real embedding `ξ0(w) > 0`.
    pub xi0: RatInterval,
    /// Squared distance to the real axis: `ξ1² + ξ2² = |w′|²`.
    pub radial_sq: RatInterval,
    /// Field norm of `w`; equals `ξ0 · radial²` exactly.
    pub norm: BigInt,
    /// `ξ0^{1/ν}` for the ν-th record (`None` for the base record).
    pub growth_ratio: Option<RatInterval>,
}

/// Full walk report.
#[derive(Clone, Debug)]
pub struct CylinderReport {
    pub records: Vec<CylinderRecord>,
    /// Certified bound: every record with `ξ0` below this value was found.
    pub xi0_cap: BigRational,
    /// Multipliers `w_{ν+1} / w_ν` as lattice coefficients, when integral.
    pub steps: Vec<Option<[i64; 3]>>,
    /// Minimal period of the multiplier sequence, when one is visible
    /// across at least two full repetitions.
    pub step_period: Option<usize>,
    /// Number of lattice points that survived the box prefilters.
    pub candidates_considered: usize,
}

/// Field norm of `a + bρ + cρ²`: the determinant of its multiplication
/// matrix on the basis `(1, ρ, ρ²)`.
pub fn multiplier_norm(coeffs: [i64; 3]) -> BigInt {
    let (a, b, c) = (
        i128::from(coeffs[0]),
        i128::from(coeffs[1]),
        i128::from(coeffs[2]),
    );
    let n = a * (a + c) * (a + c) - a * b * (b + c) - 2 * b * c * (a + c)
        + b * b * b
        + c * c * (b + c);
    BigInt::from(n)
}

/// Multiplication by `ρ` in coefficients: `(a, b, c) → (c, a + c, b)`.
pub fn unit_step(coeffs: [i64; 3]) -> [i64; 3] {
    let [a, b, c] = coeffs;
    [c, a + c, b]
}

/// Certified embeddings of the basis: the root interval and the real and
/// imaginary parts of its conjugates.
struct FieldCtx {
    /// Enclosure of the real root ρ.
    r: RatInterval,
    /// Enclosure of ρ².
    r2: RatInterval,
    /// Re ρ′ = −ρ/2.
    rep: RatInterval,
    /// Im ρ′ = sqrt(1/ρ − ρ²/4) > 0.
    imp: RatInterval,
    /// Re ρ′² = ρ²/2 − 1/ρ.
    re2: RatInterval,
    /// Im ρ′² = −ρ · Im ρ′.
    im2: RatInterval,
}

impl FieldCtx {
    fn build(bits: u32) -> Result<FieldCtx> {
        let poly = IntPoly::from_ints(&[-1, -1, 0, 1]); // x³ − x − 1
        let bracket = RatInterval::new(rat_int(1), rat(3, 2))?;
        let r = refine_root(&poly, &bracket, bits)?;
        let r2 = r.square();
        let rep = r.mul_rat(&rat(-1, 2));
        let inv_r = r.recip()?;
        let quarter_sq = r2.mul_rat(&rat(1, 4));
        let imp = inv_r.sub(&quarter_sq).sqrt(bits)?;
        let re2 = r2.mul_rat(&rat(1, 2)).sub(&inv_r);
        let im2 = r.mul(&imp).neg();
        Ok(FieldCtx {
            r,
            r2,
            rep,
            imp,
            re2,
            im2,
        })
    }

    /// Enclosure of `e0 + e1 ρ + e2 ρ²`.
    fn combo(&self, e: &[BigInt; 3]) -> RatInterval {
        RatInterval::point(BigRational::from(e[0].clone()))
            .add(&self.r.mul_rat(&BigRational::from(e[1].clone())))
            .add(&self.r2.mul_rat(&BigRational::from(e[2].clone())))
    }

    /// Exact sign of `e0 + e1 ρ + e2 ρ²`. The norm bound above makes a
    /// 512-bit enclosure decisive for every combination this module forms.
    fn combo_sign(&self, e: &[BigInt; 3]) -> Ordering {
        if e.iter().all(|v| v.is_zero()) {
            return Ordering::Equal;
        }
        let iv = self.combo(e);
        if iv.lo() > &BigRational::zero() {
            Ordering::Greater
        } else if iv.hi() < &BigRational::zero() {
            Ordering::Less
        } else {
            unreachable!(
                "512-bit enclosure is wider than the norm gap for {:?}",
                e
            )
        }
    }

    fn xi0(&self, coeffs: [i64; 3]) -> RatInterval {
        self.combo(&[
            BigInt::from(coeffs[0]),
            BigInt::from(coeffs[1]),
            BigInt::from(coeffs[2]),
        ])
    }
}

/// Certified embeddings `(ξ0, ξ1, ξ2)` of a lattice point.
pub fn embedding_vector(
    coeffs: [i64; 3],
    bits: u32,
) -> Result<(RatInterval, RatInterval, RatInterval)> {
    let ctx = FieldCtx::build(bits.max(64))?;
    let [a, b, c] = coeffs;
    let xi0 = ctx.xi0(coeffs);
    let xi1 = RatInterval::point(rat_int(a))
        .add(&ctx.rep.mul_rat(&rat_int(b)))
        .add(&ctx.re2.mul_rat(&rat_int(c)));
    let xi2 = ctx.imp.mul_rat(&rat_int(b)).add(&ctx.im2.mul_rat(&rat_int(c)));
    Ok((xi0, xi1, xi2))
}

/// Exact comparison of `radial²` between two candidates with positive
/// `ξ0`: sign of `N_u · ξ0(v) − N_v · ξ0(u)`.
fn cmp_radial(ctx: &FieldCtx, u: &([i64; 3], BigInt), v: &([i64; 3], BigInt)) -> Ordering {
    let mut e = [BigInt::zero(), BigInt::zero(), BigInt::zero()];
    for i in 0..3 {
        e[i] = &u.1 * BigInt::from(v.0[i]) - &v.1 * BigInt::from(u.0[i]);
    }
    ctx.combo_sign(&e)
}

/// Exact comparison of `ξ0` between two coefficient vectors.
fn cmp_xi0(ctx: &FieldCtx, u: [i64; 3], v: [i64; 3]) -> Ordering {
    let e = [
        BigInt::from(u[0] - v[0]),
        BigInt::from(u[1] - v[1]),
        BigInt::from(u[2] - v[2]),
    ];
    ctx.combo_sign(&e)
}

/// Conservative certified bound `X` such that every lattice point with
/// `0 < ξ0 ≤ X` and `ξ1² + ξ2² ≤ 1` has `|b|, |c| ≤ coeff_bound`. Derived
/// from the interval inverse of the embedding matrix.
fn coefficient_cap(ctx: &FieldCtx, coeff_bound: i64) -> Result<BigRational> {
    // adj rows for b and c of the inverse embedding matrix, times det
    let det = ctx
        .rep
        .mul(&ctx.im2)
        .sub(&ctx.re2.mul(&ctx.imp))
        .sub(&ctx.r.mul(&ctx.im2))
        .add(&ctx.r2.mul(&ctx.imp));
    let det_lo = det.abs().lo().clone();
    if det_lo <= BigRational::zero() {
        return Err(Error::PrecisionExhausted);
    }
    let bound = BigRational::from(BigInt::from(coeff_bound));
    let mut cap: Option<BigRational> = None;
    let rows = [
        // |b| ≤ (|−im2|·X + |im2| + |r² − re2|) / |det|
        (
            ctx.im2.abs().hi().clone(),
            ctx.im2.abs().hi().clone(),
            ctx.r2.sub(&ctx.re2).abs().hi().clone(),
        ),
        // |c| ≤ (|imp|·X + |imp| + |rep − r|) / |det|
        (
            ctx.imp.abs().hi().clone(),
            ctx.imp.abs().hi().clone(),
            ctx.rep.sub(&ctx.r).abs().hi().clone(),
        ),
    ];
    for (coef, c1, c2) in rows {
        if coef <= BigRational::zero() {
            continue;
        }
        let x = (&bound * &det_lo - &c1 - &c2) / &coef;
        if cap.as_ref().map_or(true, |c| &x < c) {
            cap = Some(x);
        }
    }
    cap.ok_or(Error::PrecisionExhausted)
}

/// Solve `w · s = target` for `s` in lattice coefficients via Cramer's rule;
/// `Some` only when the quotient is integral.
fn integral_quotient(w: [i64; 3], target: [i64; 3]) -> Option<[i64; 3]> {
    let [a, b, c] = w.map(i128::from);
    let m = [
        [a, c, b],
        [b, a + c, b + c],
        [c, b, a + c],
    ];
    let det = det3(&m);
    if det == 0 {
        return None;
    }
    let t = target.map(i128::from);
    let mut s = [0i64; 3];
    for i in 0..3 {
        let mut mi = m;
        for row in 0..3 {
            mi[row][i] = t[row];
        }
        let di = det3(&mi);
        if di % det != 0 {
            return None;
        }
        s[i] = i64::try_from(di / det).ok()?;
    }
    Some(s)
}

fn det3(m: &[[i128; 3]; 3]) -> i128 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

/// Minimal period visible in the multiplier sequence, requiring at least
/// two full repetitions.
fn minimal_period(steps: &[Option<[i64; 3]>]) -> Option<usize> {
    if steps.is_empty() || steps.iter().any(|s| s.is_none()) {
        return None;
    }
    for p in 1..=steps.len() / 2 {
        if (0..steps.len() - p).all(|i| steps[i] == steps[i + p]) {
            return Some(p);
        }
    }
    None
}

/// Walk the cylinder records of the cubic lattice, complete for all records
/// with `ξ0` below the returned `xi0_cap` (which grows with `coeff_bound`).
pub fn brentjes_best_approx(coeff_bound: i64, bits: u32) -> Result<CylinderReport> {
    if !(2..=5000).contains(&coeff_bound) {
        return Err(Error::OutOfRange(
            "coefficient bound must be between 2 and 5000".into(),
        ));
    }
    let ctx = FieldCtx::build(bits.max(512))?;
    let cap = coefficient_cap(&ctx, coeff_bound)?;

    // float prefilter pass over the (b, c) box
    let r_f = ctx.r.mid_f64();
    let rep_f = ctx.rep.mid_f64();
    let imp_f = ctx.imp.mid_f64();
    let re2_f = ctx.re2.mid_f64();
    let im2_f = ctx.im2.mid_f64();
    let cap_f = cap.to_f64().unwrap_or(f64::MAX);
    let mut raw: BTreeSet<[i64; 3]> = BTreeSet::new();
    for b in -coeff_bound..=coeff_bound {
        for c in -coeff_bound..=coeff_bound {
            let xi2 = b as f64 * imp_f + c as f64 * im2_f;
            if xi2.abs() > 1.0 + 1e-6 {
                continue;
            }
            let p = b as f64 * rep_f + c as f64 * re2_f;
            let a_lo = (-p - 1.0 - 1e-6).ceil() as i64;
            let a_hi = (-p + 1.0 + 1e-6).floor() as i64;
            for a in a_lo..=a_hi {
                if a == 0 && b == 0 && c == 0 {
                    continue;
                }
                if b == 0 && c == 0 {
                    // rational points: only w = 1 has |w′| ≤ 1 with norm ±a³
                    if a == 1 {
                        raw.insert([1, 0, 0]);
                    }
                    continue;
                }
                let mut coeffs = [a, b, c];
                let mut xi0 = a as f64 + b as f64 * r_f + c as f64 * (r_f * r_f);
                if xi0 < 0.0 {
                    coeffs = [-a, -b, -c];
                    xi0 = -xi0;
                }
                if xi0 > cap_f + 1.0 {
                    continue;
                }
                let n = multiplier_norm(coeffs);
                let n_f = n.to_f64().unwrap_or(f64::MAX);
                // radial² = N / ξ0; |ξ0| ≥ |N|/(radial² cap) ≥ 1/(1+ε) here
                if n_f <= 0.0 || n_f / xi0 > 1.0 + 1e-6 {
                    continue;
                }
                raw.insert(coeffs);
            }
        }
    }

    // exact phase: keep radial² ≤ 1 (ξ0 ≥ N), order by ξ0, enforce the cap
    let mut candidates: Vec<([i64; 3], BigInt)> = Vec::new();
    for coeffs in raw {
        let n = multiplier_norm(coeffs);
        let e = [
            BigInt::from(coeffs[0]) - &n,
            BigInt::from(coeffs[1]),
            BigInt::from(coeffs[2]),
        ];
        // ξ0 − N ≥ 0 ⟺ radial² ≤ 1
        if ctx.combo_sign(&e) == Ordering::Less {
            continue;
        }
        let xi0 = ctx.xi0(coeffs);
        if xi0.lo() > &cap {
            continue;
        }
        candidates.push((coeffs, n));
    }
    let candidates_considered = candidates.len();
    candidates.sort_unstable_by(|u, v| cmp_xi0(&ctx, u.0, v.0));

    if candidates.first().map(|c| c.0) != Some([1, 0, 0]) {
        return Err(Error::InvalidInput(
            "lattice walk lost its base point; the box is too small".into(),
        ));
    }

    let mut records: Vec<CylinderRecord> = Vec::new();
    let mut best: Option<([i64; 3], BigInt)> = None;
    for (coeffs, n) in candidates {
        let improved = match &best {
            None => true,
            Some(b) => cmp_radial(&ctx, &(coeffs, n.clone()), b) == Ordering::Less,
        };
        if !improved {
            continue;
        }
        let xi0 = ctx.xi0(coeffs);
        let radial_sq = RatInterval::point(BigRational::from(n.clone())).mul(&xi0.recip()?);
        let nu = records.len();
        let growth_ratio = if nu >= 1 {
            let (lo, _) = nth_root_bounds(xi0.lo(), nu as u32, 48)?;
            let (_, hi) = nth_root_bounds(xi0.hi(), nu as u32, 48)?;
            Some(RatInterval::new(lo, hi)?)
        } else {
            None
        };
        records.push(CylinderRecord {
            coeffs,
            xi0,
            radial_sq,
            norm: n.clone(),
            growth_ratio,
        });
        best = Some((coeffs, n));
    }

    let steps: Vec<Option<[i64; 3]>> = records
        .windows(2)
        .map(|w| integral_quotient(w[0].coeffs, w[1].coeffs))
        .collect();
    let step_period = minimal_period(&steps);

    Ok(CylinderReport {
        records,
        xi0_cap: cap,
        steps,
        step_period,
        candidates_considered,
    })
}
