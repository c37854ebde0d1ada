//! Homogeneous minima of products over algebraic lattices: the minimum of
//! `|z_0 z_1 ⋯ z_n|` over nonzero lattice points `z = Ω·x` with bounded
//! integer coefficients, where the rows of `Ω` are certified real
//! embeddings (optionally rescaled).

use best_approx::ApproxMatrix;
use exact_core::rational::rat_int;
use exact_core::{BigRational, Error, RatInterval, Result, Zero};

/// A full-rank real lattice given by a square basis of certified reals.
#[derive(Clone)]
pub struct AlgebraicLattice {
    basis: ApproxMatrix,
}

impl AlgebraicLattice {
    /// Validate and wrap a square basis. The determinant enclosure must
    /// exclude zero at the given precision (nonsingularity certificate).
    pub fn new(basis: ApproxMatrix, bits: u32) -> Result<Self> {
        let k = basis.rows();
        if k != basis.cols() {
            return Err(Error::InvalidInput("lattice basis must be square".into()));
        }
        if !(1..=4).contains(&k) {
            return Err(Error::OutOfRange(
                "lattice scans are sized for dimensions 1 through 4".into(),
            ));
        }
        let grid = enclose_grid(&basis, bits.max(32))?;
        let det = det_interval(&grid, k);
        if det.contains_zero() {
            return Err(Error::InvalidInput(
                "basis is singular at scan precision".into(),
            ));
        }
        Ok(AlgebraicLattice { basis })
    }

    pub fn dimension(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &ApproxMatrix {
        &self.basis
    }
}

fn enclose_grid(basis: &ApproxMatrix, bits: u32) -> Result<Vec<RatInterval>> {
    let k = basis.rows();
    let mut grid = Vec::with_capacity(k * k);
    for i in 0..k {
        for j in 0..k {
            grid.push(basis.entry(i, j).enclose(bits)?);
        }
    }
    Ok(grid)
}

/// Interval determinant by Laplace expansion along the first row.
fn det_interval(grid: &[RatInterval], k: usize) -> RatInterval {
    fn det_rec(grid: &[RatInterval], k: usize, rows: &[usize], cols: &[usize]) -> RatInterval {
        if rows.len() == 1 {
            return grid[rows[0] * k + cols[0]].clone();
        }
        let mut acc = RatInterval::point(BigRational::zero());
        for (t, &c) in cols.iter().enumerate() {
            let sub_rows = &rows[1..];
            let sub_cols: Vec<usize> = cols
                .iter()
                .copied()
                .filter(|&cc| cc != c)
                .collect();
            let minor = det_rec(grid, k, sub_rows, &sub_cols);
            let term = grid[rows[0] * k + c].mul(&minor);
            acc = if t % 2 == 0 {
                acc.add(&term)
            } else {
                acc.add(&term.neg())
            };
        }
        acc
    }
    let idx: Vec<usize> = (0..k).collect();
    det_rec(grid, k, &idx, &idx)
}

/// Minimum of `|∏_i (Ω x)_i|` over nonzero integer coefficient vectors
/// with `|x_j| ≤ coeff_bound`, as a certified enclosure. The product is
/// invariant under `x → −x`, so only canonical representatives (first
/// nonzero coordinate positive) are scanned.
pub fn lattice_product_min(
    lattice: &AlgebraicLattice,
    coeff_bound: i64,
    bits: u32,
) -> Result<RatInterval> {
    if coeff_bound < 1 {
        return Err(Error::InvalidInput("need coeff_bound >= 1".into()));
    }
    let k = lattice.dimension();
    if (2 * coeff_bound + 1).pow(k as u32) > 40_000_000 {
        return Err(Error::BudgetExceeded(
            "coefficient box too large for the exact scan".into(),
        ));
    }
    let grid = enclose_grid(&lattice.basis, bits.max(32))?;
    let mut x = vec![-coeff_bound; k];
    // start from the first canonical vector
    let mut min_lo: Option<BigRational> = None;
    let mut min_hi: Option<BigRational> = None;
    loop {
        if x.iter().any(|&v| v != 0) && is_canonical(&x) {
            let mut prod = RatInterval::point(rat_int(1));
            for i in 0..k {
                let mut row = RatInterval::point(BigRational::zero());
                for (j, &xj) in x.iter().enumerate() {
                    if xj != 0 {
                        row = row.add(&grid[i * k + j].mul_rat(&rat_int(xj)));
                    }
                }
                prod = prod.mul(&row);
            }
            let prod = prod.abs();
            if min_lo.as_ref().map_or(true, |m| prod.lo() < m) {
                min_lo = Some(prod.lo().clone());
            }
            if min_hi.as_ref().map_or(true, |m| prod.hi() < m) {
                min_hi = Some(prod.hi().clone());
            }
            if let (Some(lo), Some(hi)) = (&min_lo, &min_hi) {
                if lo.is_zero() && hi.is_zero() {
                    // an exact zero cannot be undercut
                    return Ok(RatInterval::point(BigRational::zero()));
                }
            }
        }
        // odometer over the box
        let mut idx = k;
        loop {
            if idx == 0 {
                let lo = min_lo.expect("box contains nonzero vectors");
                let hi = min_hi.expect("box contains nonzero vectors");
                return RatInterval::new(lo, hi);
            }
            idx -= 1;
            if x[idx] < coeff_bound {
                x[idx] += 1;
                break;
            }
            x[idx] = -coeff_bound;
        }
    }
}

fn is_canonical(x: &[i64]) -> bool {
    for &v in x {
        if v != 0 {
            return v > 0;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use exact_core::rational::rat;
    use exact_core::{BigInt, RealOracle, ToPrimitive};

    fn oracle_matrix(entries: Vec<RealOracle>, k: usize) -> ApproxMatrix {
        ApproxMatrix::new(k, k, entries).unwrap()
    }

    #[test]
    fn identity_lattice_reaches_exact_zero() {
        let basis = oracle_matrix(
            vec![
                RealOracle::from_rat(rat(1, 1)),
                RealOracle::from_rat(rat(0, 1)),
                RealOracle::from_rat(rat(0, 1)),
                RealOracle::from_rat(rat(1, 1)),
            ],
            2,
        );
        let lat = AlgebraicLattice::new(basis, 48).unwrap();
        let min = lattice_product_min(&lat, 3, 48).unwrap();
        assert!(min.lo().is_zero() && min.hi().is_zero());
    }

    #[test]
    fn pell_form_minimum_is_one() {
        // rows (1, √2) and (1, −√2): the product at x = (a, b) is a² − 2b²
        let s2 = RealOracle::sqrt_of(2).unwrap();
        let neg_s2 = RealOracle::Surd(
            exact_core::Surd::new(BigInt::from(0), 2u32.into(), BigInt::from(-1)).unwrap(),
        );
        let basis = oracle_matrix(
            vec![
                RealOracle::from_rat(rat(1, 1)),
                s2.clone(),
                RealOracle::from_rat(rat(1, 1)),
                neg_s2.clone(),
            ],
            2,
        );
        let lat = AlgebraicLattice::new(basis, 64).unwrap();
        let bound = 8i64;
        let min = lattice_product_min(&lat, bound, 64).unwrap();
        // independent integer oracle over the same box
        let mut oracle_min = i64::MAX;
        for a in -bound..=bound {
            for b in -bound..=bound {
                if (a, b) != (0, 0) {
                    oracle_min = oracle_min.min((a * a - 2 * b * b).abs());
                }
            }
        }
        assert_eq!(oracle_min, 1);
        let one = rat(1, 1);
        assert!(min.lo() <= &one && &one <= min.hi());
        assert!((min.hi() - min.lo()).to_f64().unwrap() < 1e-6);
    }

    #[test]
    fn scaling_a_row_doubles_the_minimum() {
        let s2 = RealOracle::sqrt_of(2).unwrap();
        let neg_s2 = RealOracle::Surd(
            exact_core::Surd::new(BigInt::from(0), 2u32.into(), BigInt::from(-1)).unwrap(),
        );
        let base = vec![
            RealOracle::from_rat(rat(1, 1)),
            s2,
            RealOracle::from_rat(rat(1, 1)),
            neg_s2,
        ];
        // scale the first row by 2 exactly: (2, √8)
        let scaled = vec![
            RealOracle::from_rat(rat(2, 1)),
            RealOracle::sqrt_of(8).unwrap(),
            base[2].clone(),
            base[3].clone(),
        ];
        let lat1 = AlgebraicLattice::new(oracle_matrix(base, 2), 64).unwrap();
        let lat2 = AlgebraicLattice::new(oracle_matrix(scaled, 2), 64).unwrap();
        let m1 = lattice_product_min(&lat1, 6, 64).unwrap();
        let m2 = lattice_product_min(&lat2, 6, 64).unwrap();
        let two = rat(2, 1);
        // doubled interval must overlap the scaled lattice's result
        let dlo = min_rat(m1.lo() * &two, m2.lo().clone());
        let dhi = max_rat(m1.hi() * &two, m2.hi().clone());
        assert!(
            m2.lo() <= &(m1.hi() * &two) && &(m1.lo() * &two) <= m2.hi(),
            "no overlap: 2×{m1:?} vs {m2:?} ({dlo} … {dhi})"
        );
        assert!(&two >= m2.lo() && &two <= m2.hi());
    }

    fn min_rat(a: BigRational, b: BigRational) -> BigRational {
        if a < b {
            a
        } else {
            b
        }
    }
    fn max_rat(a: BigRational, b: BigRational) -> BigRational {
        if a > b {
            a
        } else {
            b
        }
    }

    #[test]
    fn singular_basis_is_rejected() {
        let basis = oracle_matrix(
            vec![
                RealOracle::from_rat(rat(1, 1)),
                RealOracle::from_rat(rat(2, 1)),
                RealOracle::from_rat(rat(2, 1)),
                RealOracle::from_rat(rat(4, 1)),
            ],
            2,
        );
        assert!(AlgebraicLattice::new(basis, 48).is_err());
    }
}
