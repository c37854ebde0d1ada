//! Exact rank of the record tail: the dimension of the rational span of the
//! stacked `(x, y)` vectors from some index onward. For an `n × m` system in
//! general position the tail must eventually span the whole `(m + n)`-space;
//! a degenerate tail (records trapped in a proper subspace) signals either a
//! special matrix or a scan defect, so the rank is computed exactly.

use crate::records::BestApproxRecord;
use exact_core::{BigRational, Error, Result};
use num_traits::Zero;

/// Exact rank over the rationals of the `(x, y)` rows of `records[nu0..]`.
/// Errors with `TooFewRecords` when the tail is empty.
pub fn dim_span_tail(records: &[BestApproxRecord], nu0: usize) -> Result<usize> {
    if nu0 >= records.len() {
        return Err(Error::TooFewRecords {
            needed: nu0 + 1,
            got: records.len(),
        });
    }
    let rows: Vec<Vec<BigRational>> = records[nu0..]
        .iter()
        .map(|r| {
            r.x.iter()
                .chain(r.y.iter())
                .map(|v| BigRational::from(v.clone()))
                .collect()
        })
        .collect();
    Ok(rational_rank(rows))
}

/// Gaussian elimination over exact rationals.
pub fn rational_rank(mut rows: Vec<Vec<BigRational>>) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let width = rows[0].len();
    let mut rank = 0;
    let mut col = 0;
    while rank < rows.len() && col < width {
        let Some(pivot) = (rank..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            col += 1;
            continue;
        };
        rows.swap(rank, pivot);
        let lead = rows[rank][col].clone();
        for i in rank + 1..rows.len() {
            if rows[i][col].is_zero() {
                continue;
            }
            let factor = &rows[i][col] / &lead;
            for j in col..width {
                let delta = &factor * &rows[rank][j];
                rows[i][j] = &rows[i][j] - delta;
            }
        }
        rank += 1;
        col += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::records::BestApproxRecord;
    use exact_core::rational::rat;
    use exact_core::{BigInt, RatInterval};

    fn rec(x: Vec<i64>, y: Vec<i64>, m: i64, znum: i64) -> BestApproxRecord {
        BestApproxRecord {
            x: x.into_iter().map(BigInt::from).collect(),
            y: y.into_iter().map(BigInt::from).collect(),
            m: BigInt::from(m),
            zeta: RatInterval::point(rat(1, znum)),
        }
    }

    #[test]
    fn rank_of_identity_like_rows() {
        let rows = vec![
            vec![rat(1, 1), rat(0, 1), rat(0, 1)],
            vec![rat(0, 1), rat(2, 1), rat(0, 1)],
            vec![rat(3, 1), rat(4, 1), rat(0, 1)],
        ];
        // third row is 3·r1 + 2·r2
        assert_eq!(rational_rank(rows), 2);
    }

    #[test]
    fn rank_counts_independent_rows_exactly() {
        let rows = vec![
            vec![rat(2, 3), rat(1, 1)],
            vec![rat(4, 3), rat(2, 1)], // multiple of row 1
            vec![rat(0, 1), rat(5, 1)],
        ];
        assert_eq!(rational_rank(rows), 2);
    }

    #[test]
    fn tail_of_scalar_records_has_rank_two() {
        // one form, one variable: rows (q, p) from consecutive convergents
        // of any irrational are unimodular pairs ⇒ rank 2
        let recs = vec![
            rec(vec![1], vec![2], 1, 2),
            rec(vec![2], vec![3], 2, 5),
            rec(vec![3], vec![5], 3, 13),
            rec(vec![5], vec![8], 5, 34),
        ];
        assert_eq!(dim_span_tail(&recs, 0).unwrap(), 2);
        assert_eq!(dim_span_tail(&recs, 2).unwrap(), 2);
    }

    #[test]
    fn single_row_tail_has_rank_one() {
        let recs = vec![rec(vec![1], vec![2], 1, 2), rec(vec![2], vec![3], 2, 5)];
        assert_eq!(dim_span_tail(&recs, 1).unwrap(), 1);
    }

    #[test]
    fn empty_tail_errors() {
        let recs = vec![rec(vec![1], vec![2], 1, 2)];
        match dim_span_tail(&recs, 5) {
            Err(Error::TooFewRecords { needed, got }) => {
                assert_eq!(needed, 6);
                assert_eq!(got, 1);
            }
            other => panic!("expected TooFewRecords, got {other:?}"),
        }
    }
}
