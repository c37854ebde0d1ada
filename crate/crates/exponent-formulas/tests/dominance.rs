//! Exact dominance comparisons between bound families on dense rational
//! grids, plus the positioning of the quartic construction. All comparisons
//! are exact integer arithmetic (radicals compared by squaring), no floats.

use exact_core::rational::{rat, rat_int};
use exact_core::{BigRational, Signed};
use exponent_formulas::{
    four_exponent_check, growth_bound, mixed_positive_lower, quartic_counterexample_constants,
    transfer_lower_classical, transfer_lower_dim4, transfer_lower_single, ExponentTuple,
    ExponentValue, RelationViolation,
};
use std::cmp::Ordering;

#[test]
fn sharp_one_form_bound_dominates_classical_on_the_full_grid() {
    // omega_hat from 0.340 to 0.990 in steps of 10^-3: the sharp (1,3) bound
    // is at least the classical single-form bound, exactly, at every point.
    for k in 340..=990 {
        let w = rat(k, 1000);
        let sharp = transfer_lower_dim4(1, 3, &w).unwrap();
        let classical = transfer_lower_classical(1, 3, &w, 32).unwrap();
        let base = match classical {
            exponent_formulas::BoundExpr::Quadratic(q) => q.as_rational().unwrap().clone(),
            exponent_formulas::BoundExpr::Enclosure(_) => unreachable!("m = 1 is closed-form"),
        };
        assert_ne!(
            sharp.cmp_rational(&base),
            Ordering::Less,
            "sharp (1,3) bound fell below the classical bound at omega_hat = {k}/1000"
        );
    }
}

#[test]
fn two_form_sharp_bound_beats_parabola_inside_and_not_beyond() {
    // Strictly greater on (1, golden^2): grid 1.001 .. 2.618 step 10^-3.
    for k in 1..=1618i64 {
        let w = rat_int(1) + rat(k, 1000);
        let sharp = transfer_lower_dim4(2, 2, &w).unwrap();
        let parabola = &w * (&w - rat_int(1));
        assert_eq!(
            sharp.cmp_rational(&parabola),
            Ordering::Greater,
            "sharp (2,2) bound not strictly above the parabola at omega_hat = 1 + {k}/1000"
        );
    }
    // At and beyond golden^2 the parabola is at least as strong.
    for w in [rat(262, 100), rat(27, 10), rat_int(3), rat_int(5), rat_int(10)] {
        let sharp = transfer_lower_dim4(2, 2, &w).unwrap();
        let parabola = &w * (&w - rat_int(1));
        assert_ne!(
            sharp.cmp_rational(&parabola),
            Ordering::Greater,
            "sharp (2,2) bound should not exceed the parabola at omega_hat = {w}"
        );
    }
}

#[test]
fn four_dimensional_bounds_exceed_rational_family_at_sampled_points() {
    // Shape (1,3), ten admissible points strictly inside (1/3, 1).
    let one_form_points = [
        rat(34, 100),
        rat(2, 5),
        rat(9, 20),
        rat(1, 2),
        rat(3, 5),
        rat(2, 3),
        rat(7, 10),
        rat(3, 4),
        rat(4, 5),
        rat(9, 10),
    ];
    for w in &one_form_points {
        let sharp = transfer_lower_dim4(1, 3, w).unwrap();
        let family = transfer_lower_single(1, 3, w).unwrap();
        assert_eq!(
            sharp.cmp_rational(&family),
            Ordering::Greater,
            "(1,3): sharp bound must exceed the rational family at omega_hat = {w}"
        );
    }
    // Shape (3,1), ten admissible points strictly above 3 (the two bounds
    // coincide exactly at omega_hat = 3).
    let three_form_points = [
        rat(7, 2),
        rat_int(4),
        rat(9, 2),
        rat_int(5),
        rat(11, 2),
        rat_int(6),
        rat_int(8),
        rat_int(10),
        rat_int(20),
        rat_int(100),
    ];
    for w in &three_form_points {
        let sharp = transfer_lower_dim4(3, 1, w).unwrap();
        let family = transfer_lower_single(3, 1, w).unwrap();
        assert_eq!(
            sharp.cmp_rational(&family),
            Ordering::Greater,
            "(3,1): sharp bound must exceed the rational family at omega_hat = {w}"
        );
    }
    // And the exact coincidence at the corner of the admissible range.
    let corner = transfer_lower_dim4(3, 1, &rat_int(3)).unwrap();
    assert_eq!(corner.as_rational(), Some(&rat_int(3)));
    assert_eq!(transfer_lower_single(3, 1, &rat_int(3)).unwrap(), rat_int(3));
}

#[test]
fn four_exponent_reference_tuple_and_perturbation() {
    let good = ExponentTuple {
        uniform_linear: ExponentValue::Finite(rat_int(2)),
        uniform_simultaneous: ExponentValue::Finite(rat(1, 2)),
        ordinary_linear: ExponentValue::Finite(rat_int(2)),
        ordinary_simultaneous: ExponentValue::Finite(rat(1, 2)),
    };
    assert!(four_exponent_check(&good).is_empty());

    let perturbed = ExponentTuple {
        uniform_simultaneous: ExponentValue::Finite(rat(1, 3)),
        ..good
    };
    assert_eq!(
        four_exponent_check(&perturbed),
        vec![RelationViolation::UniformDuality],
        "perturbing the uniform dual exponent must break exactly the duality relation"
    );
}

#[test]
fn quartic_construction_sits_on_the_mixed_branch() {
    // The quartic construction's (ordinary, uniform) pair lies outside the
    // growth-function region: its inner-region threshold exceeds its
    // ordinary exponent, the mixed bound evaluates exactly back to the
    // spectral root, and the growth branch stays strictly below it.
    let q = quartic_counterexample_constants(96).unwrap();
    let one = rat_int(1);

    // Inner-region threshold w(w-1)/(3w - w^2 - 1) as an interval, w = uniform.
    let w = &q.uniform;
    let num = w.mul(&w.sub_rat(&one));
    let den = w.mul_rat(&rat_int(3)).sub(&w.square()).sub_rat(&one);
    let threshold = num.mul(&den.recip().unwrap());
    assert!(
        threshold.lo() > q.ordinary.hi(),
        "threshold {} must exceed ordinary exponent {}",
        threshold.lo(),
        q.ordinary.hi()
    );

    // Mixed bound uniform - 1 + uniform/ordinary encloses the spectral root.
    let mixed = w
        .sub_rat(&one)
        .add(&w.mul(&q.ordinary.recip().unwrap()));
    assert!(mixed.lo() <= q.root.hi() && q.root.lo() <= mixed.hi());
    assert!(mixed.width() < rat(1, 1i64 << 60));

    // Growth branch G(ordinary) < spectral root: evaluate G on the interval.
    let s = q.ordinary.add_rat(&one).mul(&q.ordinary.recip().unwrap());
    let g = s
        .add(&s.square().add_rat(&rat_int(4)).sqrt(96).unwrap())
        .mul_rat(&rat(1, 2));
    assert!(g.hi() < q.root.lo(), "growth branch must stay below the spectral root");

    // Published general-position value (root+2)/(root^2-1) = 1.4143412...,
    // strictly below what the construction actually achieves.
    let general = q
        .root
        .add_rat(&rat_int(2))
        .mul(&q.root.square().sub_rat(&one).recip().unwrap());
    assert!(general.lo() > &rat(14_143_412, 10_000_000));
    assert!(general.hi() < &rat(14_143_413, 10_000_000));
    assert!(general.hi() < q.root.lo());
}

#[test]
fn rational_growth_comparison_matches_interval_growth() {
    // growth_bound (exact radical) and the interval pipeline above must agree
    // on rationals: sample the admissible range.
    for w in [rat_int(2), rat(5, 2), rat_int(3), rat_int(7), rat_int(100)] {
        let exact = growth_bound(&ExponentValue::Finite(w.clone())).unwrap();
        let iv = exact.enclosure(80);
        let s = (&w + rat_int(1)) / &w;
        // interval evaluation of (s + sqrt(s^2+4))/2 from the exact rational s
        let rad = &s * &s + rat_int(4);
        let (lo, hi) = exact_core::interval::sqrt_rational_bounds(&rad, 80);
        let direct_lo = (&s + lo) / rat_int(2);
        let direct_hi = (&s + hi) / rat_int(2);
        assert!(iv.lo() <= &direct_hi && &direct_lo <= iv.hi());
    }
}

#[test]
fn mixed_bound_is_monotone_in_both_arguments() {
    // Increasing in omega_hat, decreasing in omega: checked exactly on a grid.
    let omegas: Vec<BigRational> = (4..=40).map(|k| rat(k, 4)).collect();
    for pair in omegas.windows(2) {
        let lo_w = mixed_positive_lower(&ExponentValue::Finite(pair[0].clone()), &rat_int(3))
            .unwrap();
        let hi_w = mixed_positive_lower(&ExponentValue::Finite(pair[1].clone()), &rat_int(3))
            .unwrap();
        assert!(hi_w < lo_w, "mixed bound must decrease as omega grows");
        assert!(hi_w.is_positive());
    }
    let hats: Vec<BigRational> = (8..=24).map(|k| rat(k, 4)).collect();
    for pair in hats.windows(2) {
        let lo_h =
            mixed_positive_lower(&ExponentValue::Finite(rat_int(10)), &pair[0]).unwrap();
        let hi_h =
            mixed_positive_lower(&ExponentValue::Finite(rat_int(10)), &pair[1]).unwrap();
        assert!(lo_h < hi_h, "mixed bound must increase with omega_hat");
    }
}
