//! End-to-end checks of the product record scans against independently
//! derivable structure: Fibonacci record locations for the golden ratio,
//! certified record ceilings for classical pairs, trace-prefix stability,
//! exact-zero termination on rationals, and membership-scan certificates.

use exact_core::rational::{rat, rat_int};
use exact_core::{BigRational, RealOracle, Surd, Zero};
use littlewood::{
    bad_membership_scan, littlewood_scan, mixed_littlewood_scan, multi_littlewood_scan,
    multi_littlewood_scan_logweighted, peck_cubic_fixture, BadScanOutcome,
};

fn golden() -> RealOracle {
    RealOracle::Surd(Surd::golden())
}

#[test]
fn golden_pair_records_sit_on_fibonacci_denominators() {
    let res = littlewood_scan(&golden(), &golden(), 10_000, 64).unwrap();
    let mut fib: Vec<i64> = vec![1, 2];
    while *fib.last().unwrap() <= 10_000 {
        let k = fib.len();
        fib.push(fib[k - 1] + fib[k - 2]);
    }
    for rec in &res.minima {
        assert!(fib.contains(&rec.q), "record at non-Fibonacci q = {}", rec.q);
    }
    assert!(
        res.minima.len() >= 15,
        "expected a long Fibonacci record chain, got {}",
        res.minima.len()
    );
    // q·(value at q) approaches 1/5 along the records; the last six are
    // already within (0.15, 0.25)
    let window_lo = rat(15, 100);
    let window_hi = rat(25, 100);
    for rec in res.minima.iter().rev().take(6) {
        let scaled_lo = rec.value.lo() * rat_int(rec.q);
        let scaled_hi = rec.value.hi() * rat_int(rec.q);
        assert!(
            scaled_lo > window_lo && scaled_hi < window_hi,
            "q = {}: scaled record outside (0.15, 0.25)",
            rec.q
        );
    }
}

#[test]
fn classical_pair_record_drops_below_a_twentieth() {
    let s2 = RealOracle::sqrt_of(2).unwrap();
    let s3 = RealOracle::sqrt_of(3).unwrap();
    let res = littlewood_scan(&s2, &s3, 100_000, 64).unwrap();
    let last = res.last().expect("nonempty scan");
    assert!(
        last.value.hi() <= &rat(5, 100),
        "final record {:?} above 1/20",
        last.value
    );
    // certified positivity: both endpoints stay above zero for irrationals
    assert!(last.value.lo() > &BigRational::zero());
}

#[test]
fn one_dimensional_golden_scan_never_improves_on_q_equals_one() {
    let res = multi_littlewood_scan(&[golden()], 1_000_000, 64).unwrap();
    assert_eq!(res.minima.len(), 1, "q = 1 should remain the record");
    let only = res.last().unwrap();
    assert_eq!(only.q, 1);
    assert!(only.value.lo() >= &rat(2, 10));
}

#[test]
fn rational_coordinate_terminates_with_an_exact_zero() {
    let third = RealOracle::from_rat(rat(22, 7));
    let s2 = RealOracle::sqrt_of(2).unwrap();
    let res = littlewood_scan(&third, &s2, 1_000, 64).unwrap();
    let last = res.last().unwrap();
    assert_eq!(last.q, 7);
    assert!(last.value.lo().is_zero() && last.value.hi().is_zero());
    // the trace stops at the exact zero — no later q can improve on it
    assert_eq!(res.argmin_trace.last(), Some(&7));
}

#[test]
fn logweighted_cubic_pair_scan_stays_inside_the_unit_window() {
    let fix = peck_cubic_fixture().unwrap();
    let res = multi_littlewood_scan_logweighted(&fix.coords, 10_000, 64).unwrap();
    // strictly decreasing record chain
    for w in res.minima.windows(2) {
        assert!(w[1].value.hi() < w[0].value.lo());
    }
    let qs: Vec<i64> = res.minima.iter().map(|r| r.q).collect();
    assert_eq!(qs, vec![2, 4, 5049]);
    let last = res.last().unwrap();
    assert!(last.value.lo() > &BigRational::zero());
    assert!(last.value.hi() < &rat_int(1));
}

#[test]
fn mixed_scan_traces_extend_without_rewriting_history() {
    let s2 = RealOracle::sqrt_of(2).unwrap();
    let short = mixed_littlewood_scan(&s2, &[2], 1_000, 64).unwrap();
    let long = mixed_littlewood_scan(&s2, &[2], 100_000, 64).unwrap();
    assert!(short.minima.len() <= long.minima.len());
    for (a, b) in short.minima.iter().zip(&long.minima) {
        assert_eq!(a.q, b.q);
        assert_eq!(a.value.lo(), b.value.lo());
        assert_eq!(a.value.hi(), b.value.hi());
    }
}

#[test]
fn mixed_scan_on_root_five_keeps_a_certified_positive_record() {
    let s5 = RealOracle::sqrt_of(5).unwrap();
    let res = mixed_littlewood_scan(&s5, &[2], 10_000, 64).unwrap();
    let last = res.last().unwrap();
    assert_eq!(last.q, 72);
    assert!(last.value.lo() > &BigRational::zero());
}

#[test]
fn balanced_exponent_scan_certifies_no_violation_for_the_classical_pair() {
    let s2 = RealOracle::sqrt_of(2).unwrap();
    let s3 = RealOracle::sqrt_of(3).unwrap();
    let outcome = bad_membership_scan(
        &[s2, s3],
        &[rat(1, 2), rat(1, 2)],
        &rat(1, 20),
        100_000,
        64,
    )
    .unwrap();
    assert_eq!(outcome, BadScanOutcome::NoViolationUpTo(100_000));
}
