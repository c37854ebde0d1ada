//! Long-range fixtures: growth of record sizes, superadditivity laws, and
//! decay-exponent estimates on million-scale scans.

use best_approx::{
    best_approximations, check_growth_recurrences, estimate_exponents, growth_exponent,
    records_from_pairs, ApproxMatrix, NormChoice,
};
use exact_core::rational::{rat, rat_int};
use exact_core::{BigInt, BigRational, Error, IntPoly, RatInterval, RealOracle, Surd};
use num_traits::Signed;

fn golden_matrix() -> ApproxMatrix {
    ApproxMatrix::new(1, 1, vec![RealOracle::Surd(Surd::golden())]).unwrap()
}

#[test]
fn golden_growth_reaches_the_ratio_at_depth_thirty() {
    let recs = best_approximations(&golden_matrix(), NormChoice::default(), 1_400_000, 64)
        .unwrap();
    assert_eq!(recs.len(), 30, "Fibonacci record count up to 1.4 million");
    let report = growth_exponent(&recs, 48).unwrap();
    // (1 + √5)/2 = 1.6180339887…
    let phi = rat(16180339887, 10_000_000_000);
    assert!(
        (&report.estimate - &phi).abs() < rat(1, 1000),
        "estimate {} not within 1e-3 of the golden ratio",
        report.estimate
    );
    // consecutive-size ratios approach the same limit
    let last = report.step_ratios.last().unwrap();
    assert!((last - &phi).abs() < rat(1, 1000));
}

#[test]
fn golden_records_satisfy_both_superadditivity_laws() {
    let recs =
        best_approximations(&golden_matrix(), NormChoice::default(), 100_000, 64).unwrap();
    // one form: doubling window 2^2 = 4; additive window K = 2
    let report = check_growth_recurrences(&recs, 1, 2);
    assert!(report.doubling_checked > 10);
    assert!(report.contact_checked > 10);
    assert!(report.all_hold(), "violations: {report:?}");
}

#[test]
fn square_root_of_two_has_exponent_one() {
    let theta =
        ApproxMatrix::new(1, 1, vec![RealOracle::sqrt_of(2).unwrap()]).unwrap();
    let recs = best_approximations(&theta, NormChoice::default(), 1_000_000, 64).unwrap();
    assert!(recs.len() >= 10);
    let est = estimate_exponents(&recs, 64).unwrap();
    assert!(
        (&est.ordinary - rat_int(1)).abs() < rat(5, 100),
        "ordinary exponent {} should be 1 within 0.05",
        est.ordinary
    );
    assert!(
        (&est.uniform - rat_int(1)).abs() < rat(5, 100),
        "uniform exponent {} should be 1 within 0.05",
        est.uniform
    );
}

#[test]
fn simultaneous_pair_has_exponent_one_half() {
    let theta = ApproxMatrix::column(vec![
        RealOracle::sqrt_of(2).unwrap(),
        RealOracle::sqrt_of(3).unwrap(),
    ])
    .unwrap();
    let recs = best_approximations(&theta, NormChoice::default(), 1_000_000, 64).unwrap();
    assert!(recs.len() >= 10);
    let est = estimate_exponents(&recs, 64).unwrap();
    assert!(
        (&est.ordinary - rat(1, 2)).abs() < rat(1, 10),
        "ordinary exponent {} should be 1/2 within 0.1",
        est.ordinary
    );
    // the uniform exponent never exceeds the ordinary one
    assert!(est.uniform <= est.ordinary);
    // and the raw term statistics keep the same one-sided order
    assert!(est.uniform_term_range.0 <= est.ordinary_term_range.1);
}

#[test]
fn fast_growing_continued_fraction_shows_a_large_exponent() {
    // convergent denominators with each partial quotient equal to the
    // previous denominator: q_{ν+1} = q_ν·q_ν + q_{ν−1}. The residual of a
    // convergent lies strictly between 1/(q_{ν+1}+q_ν) and 1/q_{ν+1}.
    let mut qs: Vec<BigInt> = vec![BigInt::from(1), BigInt::from(2)];
    while qs.len() < 13 {
        let k = qs.len();
        let next = &qs[k - 1] * &qs[k - 1] + &qs[k - 2];
        qs.push(next);
    }
    let mut pairs = Vec::new();
    for nu in 1..qs.len() - 1 {
        let lo = BigRational::new(BigInt::from(1), &qs[nu + 1] + &qs[nu]);
        let hi = BigRational::new(BigInt::from(1), qs[nu + 1].clone());
        pairs.push((qs[nu].clone(), RatInterval::new(lo, hi).unwrap()));
    }
    let recs = records_from_pairs(&pairs);
    let est = estimate_exponents(&recs, 64).unwrap();
    assert!(
        est.ordinary > rat(18, 10),
        "ordinary exponent {} should exceed 1.8",
        est.ordinary
    );
    assert!(est.uniform <= est.ordinary);
}

#[test]
fn cubic_column_growth_is_reported() {
    // exploratory: simultaneous approximation to the real root of x³ = x+1
    // and its square; the growth report must be well-formed, no pinned value
    let root = RealOracle::AlgebraicRoot {
        poly: IntPoly::from_ints(&[-1, -1, 0, 1]),
        bracket: RatInterval::new(rat_int(1), rat(3, 2)).unwrap(),
    };
    let root_sq = RealOracle::AlgebraicRoot {
        poly: IntPoly::from_ints(&[-1, 1, -2, 1]),
        bracket: RatInterval::new(rat(17, 10), rat(9, 5)).unwrap(),
    };
    let theta = ApproxMatrix::column(vec![root, root_sq]).unwrap();
    let recs = best_approximations(&theta, NormChoice::default(), 20_000, 64).unwrap();
    assert!(recs.len() >= 10);
    let report = growth_exponent(&recs, 48).unwrap();
    assert!(report.estimate > rat_int(1));
    assert!(report.estimate_bounds.0 <= report.estimate);
    assert!(report.estimate <= report.estimate_bounds.1);
}

#[test]
fn shallow_scans_refuse_asymptotic_statistics() {
    let recs =
        best_approximations(&golden_matrix(), NormChoice::default(), 30, 64).unwrap();
    assert!(recs.len() < 10);
    assert!(matches!(
        growth_exponent(&recs, 48),
        Err(Error::TooFewRecords { .. })
    ));
    assert!(matches!(
        estimate_exponents(&recs, 48),
        Err(Error::TooFewRecords { .. })
    ));
}
