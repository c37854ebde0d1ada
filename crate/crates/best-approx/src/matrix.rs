//! The input side of a best-approximation problem: a grid of real numbers
//! queryable to arbitrary precision, a norm selection for each side of the
//! inequality, and the integer-point domains that constrained scans use.

use exact_core::rational::rat_int;
use exact_core::{BigInt, BigRational, Error, RatInterval, RealOracle, Result};
use num_traits::{One, Signed, Zero};

/// Vector norm used to measure one side of an approximation record.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Norm {
    /// `max_i |v_i|`.
    Sup,
    /// `sqrt(sum v_i^2)`; integer vectors are keyed by the exact square.
    Euclidean,
}

/// Norm selection: `x_norm` measures the integer vector `x`, `y_norm`
/// measures the residual `Θx − y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NormChoice {
    pub x_norm: Norm,
    pub y_norm: Norm,
}

impl Default for NormChoice {
    fn default() -> Self {
        NormChoice {
            x_norm: Norm::Sup,
            y_norm: Norm::Sup,
        }
    }
}

/// The integer comparison key of `x` under `norm`: the sup value itself, or
/// the exact squared length for the Euclidean norm. Monotone in the norm, so
/// sorting by key sorts by norm.
pub fn x_norm_key(x: &[i64], norm: Norm) -> i64 {
    match norm {
        Norm::Sup => x.iter().map(|v| v.abs()).max().unwrap_or(0),
        Norm::Euclidean => x.iter().map(|v| v * v).sum(),
    }
}

/// An `n × m` grid of reals: `n` linear forms in `m` integer variables.
/// Entries are oracles that produce certified rational enclosures at any
/// requested precision, so every comparison made during a scan can be
/// refined until it is decided.
#[derive(Clone, Debug)]
pub struct ApproxMatrix {
    n: usize,
    m: usize,
    entries: Vec<RealOracle>,
}

impl ApproxMatrix {
    /// Row-major construction of an `n × m` grid.
    pub fn new(n: usize, m: usize, entries: Vec<RealOracle>) -> Result<Self> {
        if n == 0 || m == 0 {
            return Err(Error::InvalidInput(
                "matrix needs at least one row and one column".into(),
            ));
        }
        if entries.len() != n * m {
            return Err(Error::InvalidInput(format!(
                "expected {} entries for a {}x{} grid, got {}",
                n * m,
                n,
                m,
                entries.len()
            )));
        }
        Ok(ApproxMatrix { n, m, entries })
    }

    /// A single linear form in `entries.len()` variables.
    pub fn row_vector(entries: Vec<RealOracle>) -> Result<Self> {
        let m = entries.len();
        ApproxMatrix::new(1, m, entries)
    }

    /// Simultaneous approximation of `entries.len()` reals by one variable.
    pub fn column(entries: Vec<RealOracle>) -> Result<Self> {
        let n = entries.len();
        ApproxMatrix::new(n, 1, entries)
    }

    /// Number of forms (rows).
    pub fn rows(&self) -> usize {
        self.n
    }

    /// Number of integer variables (columns).
    pub fn cols(&self) -> usize {
        self.m
    }

    pub fn entry(&self, i: usize, j: usize) -> &RealOracle {
        &self.entries[i * self.m + j]
    }

    /// The transposed grid (forms and variables exchange roles).
    pub fn transpose(&self) -> ApproxMatrix {
        let mut entries = Vec::with_capacity(self.n * self.m);
        for j in 0..self.m {
            for i in 0..self.n {
                entries.push(self.entry(i, j).clone());
            }
        }
        ApproxMatrix {
            n: self.m,
            m: self.n,
            entries,
        }
    }

    /// Certified enclosure of `sum_j theta_ij x_j` at the given precision.
    pub fn row_sum(&self, i: usize, x: &[i64], bits: u32) -> Result<RatInterval> {
        let mut acc = RatInterval::point(BigRational::zero());
        for (j, &xj) in x.iter().enumerate() {
            if xj == 0 {
                continue;
            }
            let e = self.entry(i, j).enclose(bits)?;
            acc = acc.add(&e.mul_rat(&rat_int(xj)));
        }
        Ok(acc)
    }
}

/// Integer-point domain for a constrained linear-form scan. Membership is
/// decided in exact integer arithmetic; all domains are symmetric under
/// `x → −x` except the positive orthant, which selects one representative
/// per sign class anyway.
#[derive(Clone, Debug)]
pub enum DomainConstraint {
    /// Every nonzero integer vector.
    AllIntegers,
    /// Every coordinate at least 1.
    PositiveOrthant,
    /// Two-variable union domain: `|x2| <= |x1|^rho` or `|x1| <= |x2|^tau`,
    /// a neighborhood of the two coordinate axes. Requires `rho > 1`,
    /// `tau >= 0`.
    Angular { rho: BigRational, tau: BigRational },
    /// Union domain: `|x_m| <= scale * (x_1^2+…+x_{m−1}^2)^(w/2)` or
    /// `x_1^2+…+x_{m−1}^2 <= 1`. Requires `w > 0`, `scale >= 1`.
    WideStrip { w: BigRational, scale: BigRational },
    /// `|x_m| <= eps * max_{j<m} |x_j|`. Requires `eps > 0`.
    NarrowStrip { eps: BigRational },
    /// `max_{j>l} |x_j| <= max_{j<=l} |x_j|`: the last `m − l` coordinates
    /// are dominated by the leading block. Requires `1 <= l <= m`.
    LeadingBlock { l: usize },
}

impl DomainConstraint {
    /// Check the parameter ranges against the number of variables `m`.
    pub fn validate(&self, m: usize) -> Result<()> {
        match self {
            DomainConstraint::AllIntegers => Ok(()),
            DomainConstraint::PositiveOrthant => Ok(()),
            DomainConstraint::Angular { rho, tau } => {
                if m != 2 {
                    return Err(Error::InvalidInput(
                        "axis-neighborhood domain is defined for two variables".into(),
                    ));
                }
                if *rho <= BigRational::one() {
                    return Err(Error::OutOfRange("need rho > 1".into()));
                }
                if tau.is_negative() {
                    return Err(Error::OutOfRange("need tau >= 0".into()));
                }
                exponent_fits(rho)?;
                exponent_fits(tau)?;
                Ok(())
            }
            DomainConstraint::WideStrip { w, scale } => {
                if m < 2 {
                    return Err(Error::InvalidInput(
                        "strip domains need at least two variables".into(),
                    ));
                }
                if !w.is_positive() {
                    return Err(Error::OutOfRange("need w > 0".into()));
                }
                if *scale < BigRational::one() {
                    return Err(Error::OutOfRange("need scale >= 1".into()));
                }
                exponent_fits(w)?;
                Ok(())
            }
            DomainConstraint::NarrowStrip { eps } => {
                if m < 2 {
                    return Err(Error::InvalidInput(
                        "strip domains need at least two variables".into(),
                    ));
                }
                if !eps.is_positive() {
                    return Err(Error::OutOfRange("need eps > 0".into()));
                }
                Ok(())
            }
            DomainConstraint::LeadingBlock { l } => {
                if *l < 1 || *l > m {
                    return Err(Error::OutOfRange("need 1 <= l <= m".into()));
                }
                Ok(())
            }
        }
    }

    /// Exact membership test for a nonzero integer vector.
    pub fn contains(&self, x: &[i64]) -> bool {
        match self {
            DomainConstraint::AllIntegers => true,
            DomainConstraint::PositiveOrthant => x.iter().all(|&v| v >= 1),
            DomainConstraint::Angular { rho, tau } => {
                let u = BigInt::from(x[0].unsigned_abs());
                let v = BigInt::from(x[1].unsigned_abs());
                pow_le(&v, rho, &u) || pow_le(&u, tau, &v)
            }
            DomainConstraint::WideStrip { w, scale } => {
                let mlast = x.len() - 1;
                let s: BigInt = x[..mlast]
                    .iter()
                    .map(|&v| BigInt::from(v) * BigInt::from(v))
                    .sum();
                if s <= BigInt::one() {
                    return true;
                }
                // |x_m| <= (p/q) * s^(a/(2b))  <=>  (q |x_m|)^(2b) <= p^(2b) s^a
                let a = small_exp(w.numer());
                let two_b = 2 * small_exp(w.denom());
                let (p, q) = (scale.numer().clone(), scale.denom().clone());
                let last = BigInt::from(x[mlast].unsigned_abs());
                (q * last).pow(two_b) <= p.pow(two_b) * s.pow(a)
            }
            DomainConstraint::NarrowStrip { eps } => {
                let mlast = x.len() - 1;
                let head = x[..mlast].iter().map(|v| v.abs()).max().unwrap_or(0);
                let (p, q) = (eps.numer().clone(), eps.denom().clone());
                q * BigInt::from(x[mlast].unsigned_abs()) <= p * BigInt::from(head)
            }
            DomainConstraint::LeadingBlock { l } => {
                let lead = x[..*l].iter().map(|v| v.abs()).max().unwrap_or(0);
                let rest = x[*l..].iter().map(|v| v.abs()).max().unwrap_or(0);
                rest <= lead
            }
        }
    }
}

/// `base^(num/den) >= other`? Decided exactly as `other^den <= base^num`
/// (all quantities nonnegative; `e = num/den` in lowest terms with
/// `den > 0`). A zero exponent makes the power 1.
fn pow_le(other: &BigInt, e: &BigRational, base: &BigInt) -> bool {
    if e.numer().is_zero() {
        return *other <= BigInt::one();
    }
    other.pow(small_exp(e.denom())) <= base.pow(small_exp(e.numer()))
}

/// Exponent components are validated to be small; convert for `pow`.
fn small_exp(v: &BigInt) -> u32 {
    use num_traits::ToPrimitive;
    v.to_u32().expect("validated exponent component")
}

/// Domain exponents are used as integer powers; keep them desk-sized.
fn exponent_fits(e: &BigRational) -> Result<()> {
    let limit = BigInt::from(1000);
    if e.numer().abs() > limit || e.denom().abs() > limit {
        return Err(Error::OutOfRange(
            "domain exponent components must be at most 1000".into(),
        ));
    }
    Ok(())
}

/// Pretty-printer used by reports: `Θx` row values at 53 bits, for humans.
pub fn approx_row_values(theta: &ApproxMatrix, x: &[i64]) -> Vec<f64> {
    (0..theta.rows())
        .map(|i| {
            theta
                .row_sum(i, x, 64)
                .map(|iv| iv.mid_f64())
                .unwrap_or(f64::NAN)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use exact_core::rational::rat;

    fn surd(d: u64) -> RealOracle {
        RealOracle::sqrt_of(d).unwrap()
    }

    #[test]
    fn matrix_shape_checks() {
        assert!(ApproxMatrix::new(0, 1, vec![]).is_err());
        assert!(ApproxMatrix::new(1, 2, vec![surd(2)]).is_err());
        let m = ApproxMatrix::new(2, 1, vec![surd(2), surd(3)]).unwrap();
        assert_eq!(m.rows(), 2);
        assert_eq!(m.cols(), 1);
        let t = m.transpose();
        assert_eq!(t.rows(), 1);
        assert_eq!(t.cols(), 2);
    }

    #[test]
    fn row_sum_encloses_integer_combination() {
        let m = ApproxMatrix::row_vector(vec![surd(2), surd(3)]).unwrap();
        let iv = m.row_sum(0, &[1, 1], 80).unwrap();
        // sqrt 2 + sqrt 3 = 3.14626436994…
        assert!(iv.contains(&rat(31462, 10000)) || iv.lo() < &rat(31463, 10000));
        assert!(iv.lo() > &rat(31462, 10000));
        assert!(iv.hi() < &rat(31463, 10000));
    }

    #[test]
    fn norm_keys() {
        assert_eq!(x_norm_key(&[3, -4], Norm::Sup), 4);
        assert_eq!(x_norm_key(&[3, -4], Norm::Euclidean), 25);
        assert_eq!(x_norm_key(&[0, 0], Norm::Sup), 0);
    }

    #[test]
    fn axis_neighborhood_membership() {
        // rho = 7/4, tau = 0: second branch collapses to |x1| <= 1.
        let d = DomainConstraint::Angular {
            rho: rat(7, 4),
            tau: rat(0, 1),
        };
        d.validate(2).unwrap();
        // |x2| <= |x1|^(7/4): (4, 11) has 11^4 = 14641 <= 4^7 = 16384.
        assert!(d.contains(&[4, 11]));
        // (4, 12): 12^4 = 20736 > 16384, and |x1| = 4 > 1.
        assert!(!d.contains(&[4, 12]));
        // tau branch: |x1| <= 1 admits (1, 100) and (0, 5).
        assert!(d.contains(&[1, 100]));
        assert!(d.contains(&[0, 5]));
        assert!(!d.contains(&[2, 100]));
        // axis itself: x2 = 0 always satisfies the first branch.
        assert!(d.contains(&[9, 0]));
        // parameter validation
        assert!(DomainConstraint::Angular {
            rho: rat(1, 1),
            tau: rat(0, 1)
        }
        .validate(2)
        .is_err());
        assert!(d.validate(3).is_err());
    }

    #[test]
    fn wide_strip_membership() {
        // w = 3/2, scale = 1: |x2| <= (x1^2)^(3/4) = |x1|^(3/2), or x1^2 <= 1.
        let d = DomainConstraint::WideStrip {
            w: rat(3, 2),
            scale: rat(1, 1),
        };
        d.validate(2).unwrap();
        // (4, 8): 8 <= 4^1.5 = 8 exactly.
        assert!(d.contains(&[4, 8]));
        assert!(!d.contains(&[4, 9]));
        // small-base branch: x1^2 <= 1.
        assert!(d.contains(&[1, 1000]));
        assert!(d.contains(&[-1, 1000]));
        assert!(!d.contains(&[2, 1000]));
    }

    #[test]
    fn narrow_strip_and_leading_block() {
        let d = DomainConstraint::NarrowStrip { eps: rat(1, 3) };
        d.validate(2).unwrap();
        assert!(d.contains(&[9, 3]));
        assert!(!d.contains(&[9, 4]));
        assert!(d.contains(&[9, -3]));

        let b = DomainConstraint::LeadingBlock { l: 1 };
        b.validate(3).unwrap();
        assert!(b.contains(&[5, 4, -5]));
        assert!(!b.contains(&[5, 6, 0]));
        assert!(DomainConstraint::LeadingBlock { l: 0 }.validate(3).is_err());
        assert!(DomainConstraint::LeadingBlock { l: 4 }.validate(3).is_err());
    }
}
