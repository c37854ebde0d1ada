//! Constrained-scan fixtures, two-route consistency of the exponent
//! statistics, profile monotonicity over random inputs, and exact tail-rank
//! checks.

use best_approx::{
    best_approximations, dim_span_tail, estimate_exponents, psi_plus_scan, psi_theta,
    psi_theta_profile, ApproxMatrix, DomainConstraint, NormChoice,
};
use exact_core::rational::{rat, rat_int};
use exact_core::{BigInt, BigRational, BigUint, RealOracle, Surd};
use num_traits::Signed;

fn row_23() -> ApproxMatrix {
    ApproxMatrix::row_vector(vec![
        RealOracle::sqrt_of(2).unwrap(),
        RealOracle::sqrt_of(3).unwrap(),
    ])
    .unwrap()
}

#[test]
fn positive_orthant_scan_decays_fast() {
    let report = psi_plus_scan(
        &row_23(),
        &DomainConstraint::PositiveOrthant,
        10_000,
        64,
    )
    .unwrap();
    // the constrained decay exponent stays clearly above the unconstrained
    // rate of 1 that a two-variable form would give on its own
    assert!(
        report.fitted_exponent >= rat(15, 10),
        "fitted exponent {} below 1.5",
        report.fitted_exponent
    );
    // enclosures are genuine: positive width, nonzero lower bounds
    for s in &report.samples {
        assert!(s.value.lo() > &BigRational::from(BigInt::from(0)));
    }
}

#[test]
fn record_route_and_profile_route_agree_on_the_decay_proxy() {
    // two independent routes to the ordinary-exponent proxy for the same
    // row: record statistics and geometric-grid profile statistics. Both
    // max-term proxies track the deepest record in range.
    let theta = row_23();
    let recs = best_approximations(&theta, NormChoice::default(), 600, 64).unwrap();
    let est = estimate_exponents(&recs, 64).unwrap();
    let from_records = est.ordinary_term_range.1.clone();

    let scan = psi_plus_scan(&theta, &DomainConstraint::AllIntegers, 600, 64).unwrap();
    let from_profile = scan.max_term_last_half.clone();

    let gap = (&from_records - &from_profile).abs();
    assert!(
        gap < rat(2, 10),
        "term proxies disagree: records {from_records} vs profile {from_profile}"
    );
}

#[test]
fn profile_is_trivial_at_size_one_and_monotone_for_random_surds() {
    // ψ(1) is the distance of the single entry itself to the nearest integer
    let theta = ApproxMatrix::new(1, 1, vec![RealOracle::sqrt_of(2).unwrap()]).unwrap();
    let p1 = psi_theta(&theta, 1, 64).unwrap();
    let direct = theta.entry(0, 0).enclose(64).unwrap().dist_to_int();
    assert!(p1.lo() <= direct.hi() && direct.lo() <= p1.hi());

    // twenty quadratic irrationals (p + √d)/q; profiles never increase
    let radicands: [u64; 20] = [
        2, 3, 5, 6, 7, 10, 11, 13, 14, 15, 17, 19, 21, 22, 23, 26, 29, 31, 33, 34,
    ];
    let mut fixtures = Vec::new();
    for (k, &d) in radicands.iter().enumerate() {
        let p = (k % 7) as i64 - 3;
        let q = 1 + (k % 5) as i64;
        fixtures.push(Surd::new(BigInt::from(p), BigUint::from(d), BigInt::from(q)).unwrap());
    }
    for surd in fixtures {
        let theta = ApproxMatrix::new(1, 1, vec![RealOracle::Surd(surd)]).unwrap();
        let profile = psi_theta_profile(&theta, 100, 64).unwrap();
        assert_eq!(profile.len(), 100);
        for w in profile.windows(2) {
            assert!(w[1].lo() <= w[0].lo());
            assert!(w[1].hi() <= w[0].hi());
        }
    }
}

#[test]
fn tail_rank_fills_the_full_space_for_a_generic_system() {
    let theta = ApproxMatrix::new(
        2,
        2,
        vec![
            RealOracle::sqrt_of(2).unwrap(),
            RealOracle::sqrt_of(3).unwrap(),
            RealOracle::sqrt_of(5).unwrap(),
            RealOracle::sqrt_of(7).unwrap(),
        ],
    )
    .unwrap();
    let recs = best_approximations(&theta, NormChoice::default(), 300, 64).unwrap();
    assert_eq!(recs.len(), 9, "fixture record count");
    assert_eq!(dim_span_tail(&recs, 5).unwrap(), 4);
    // a degenerate rank-3 tail with at least four records would indicate the
    // records were trapped in a proper subspace — flag loudly
    for nu0 in 0..recs.len() {
        let tail_len = recs.len() - nu0;
        let rank = dim_span_tail(&recs, nu0).unwrap();
        if tail_len >= 4 {
            assert!(
                rank != 3,
                "DEGENERATE TAIL: rank 3 from index {nu0} with {tail_len} records"
            );
        }
        assert!(rank <= tail_len.min(4));
    }
}

#[test]
fn scalar_record_tail_has_rank_two() {
    let theta = ApproxMatrix::new(1, 1, vec![RealOracle::Surd(Surd::golden())]).unwrap();
    let recs = best_approximations(&theta, NormChoice::default(), 100, 64).unwrap();
    assert_eq!(dim_span_tail(&recs, 4).unwrap(), 2);
    assert_eq!(dim_span_tail(&recs, recs.len() - 1).unwrap(), 1);
}

#[test]
fn angular_domain_tightens_with_the_exponents() {
    // a wider axis neighborhood (larger ρ, larger τ) contains the narrower
    // one, so its minimum can only be smaller or equal
    let theta = row_23();
    let narrow = psi_plus_scan(
        &theta,
        &DomainConstraint::Angular {
            rho: rat(3, 2),
            tau: rat(1, 4),
        },
        500,
        64,
    )
    .unwrap();
    let wide = psi_plus_scan(
        &theta,
        &DomainConstraint::Angular {
            rho: rat(3, 1),
            tau: rat(3, 4),
        },
        500,
        64,
    )
    .unwrap();
    for (n, w) in narrow.samples.iter().zip(&wide.samples) {
        assert!(w.value.lo() <= n.value.hi(), "at t = {}", n.t);
    }
    assert!(wide.points_scanned > narrow.points_scanned);
}

#[test]
fn three_variable_scans_run_end_to_end() {
    // exercises the canonical three-variable enumeration engine (column
    // range plans only exist for two variables)
    let theta = ApproxMatrix::row_vector(vec![
        RealOracle::sqrt_of(2).unwrap(),
        RealOracle::sqrt_of(3).unwrap(),
        RealOracle::sqrt_of(5).unwrap(),
    ])
    .unwrap();
    let report = psi_plus_scan(&theta, &DomainConstraint::AllIntegers, 60, 64).unwrap();
    assert!(!report.samples.is_empty());
    for s in &report.samples {
        assert!(s.witness.len() == 3);
        assert!(s.value.lo() > &rat_int(0));
    }
}
