//! Consistency relations among the four exponents of one real number:
//! ordinary and uniform, for approximation by rationals (`v`, `w` here in the
//! linear-form normalization) and for the dual problem.
//!
//! For a single real `alpha` that is not rational and not quadratic, write
//! `w` for the uniform linear-form exponent, `w_star` for the uniform
//! simultaneous exponent, `v` for the ordinary linear-form exponent and
//! `v_star` for the ordinary simultaneous exponent. The complete set of
//! constraints is:
//!
//! * `2 <= w <= +inf`,
//! * duality: `w = 1/(1 - w_star)` (with `w = +inf` iff `w_star = 1`),
//! * ordinary exponents dominate uniform ones: `v >= w`, `v_star >= w_star`,
//! * the sandwich: `v(w-1)/(v+w) <= v_star <= (v-w+1)/w`.
//!
//! `four_exponent_check` evaluates every relation exactly and reports the
//! violated ones, so a tuple is jointly realizable only if the returned list
//! is empty (the relations are also sufficient in this normalization).

use exact_core::rational::rat_int;
use exact_core::{BigRational, One, Zero};

/// An exponent value, allowing the infinite case (Liouville-type numbers).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExponentValue {
    Finite(BigRational),
    Infinite,
}

impl ExponentValue {
    pub fn finite(&self) -> Option<&BigRational> {
        match self {
            ExponentValue::Finite(r) => Some(r),
            ExponentValue::Infinite => None,
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, ExponentValue::Infinite)
    }
}

impl From<BigRational> for ExponentValue {
    fn from(r: BigRational) -> Self {
        ExponentValue::Finite(r)
    }
}

/// The four exponents of one real number.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExponentTuple {
    /// Uniform linear-form exponent `w`.
    pub uniform_linear: ExponentValue,
    /// Uniform simultaneous exponent `w_star`.
    pub uniform_simultaneous: ExponentValue,
    /// Ordinary linear-form exponent `v`.
    pub ordinary_linear: ExponentValue,
    /// Ordinary simultaneous exponent `v_star`.
    pub ordinary_simultaneous: ExponentValue,
}

/// One violated relation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RelationViolation {
    /// `w < 2`, impossible for an irrational non-quadratic number.
    UniformRange,
    /// `w != 1/(1 - w_star)`.
    UniformDuality,
    /// `v < w`.
    OrdinaryBelowUniform,
    /// `v_star < w_star`.
    SimultaneousBelowUniform,
    /// `v_star < v(w-1)/(v+w)`.
    SandwichLower,
    /// `v_star > (v-w+1)/w`.
    SandwichUpper,
}

/// Evaluate all relations exactly; the tuple is realizable iff empty.
pub fn four_exponent_check(t: &ExponentTuple) -> Vec<RelationViolation> {
    let mut violations = Vec::new();
    let one = BigRational::one();
    let two = rat_int(2);

    // 2 <= w
    if let Some(w) = t.uniform_linear.finite() {
        if w < &two {
            violations.push(RelationViolation::UniformRange);
        }
    }

    // w = 1/(1 - w_star); equivalently w_star = 1 - 1/w, with the infinite
    // case w = +inf iff w_star = 1. An infinite w_star is never valid since
    // w_star <= 1 always.
    let duality_ok = match (&t.uniform_linear, &t.uniform_simultaneous) {
        (ExponentValue::Infinite, ExponentValue::Finite(ws)) => ws == &one,
        (ExponentValue::Finite(w), ExponentValue::Finite(ws)) => {
            !w.is_zero() && *ws == &one - &one / w
        }
        (_, ExponentValue::Infinite) => false,
    };
    if !duality_ok {
        violations.push(RelationViolation::UniformDuality);
    }

    // v >= w
    let v_ge_w = match (&t.ordinary_linear, &t.uniform_linear) {
        (ExponentValue::Infinite, _) => true,
        (ExponentValue::Finite(_), ExponentValue::Infinite) => false,
        (ExponentValue::Finite(v), ExponentValue::Finite(w)) => v >= w,
    };
    if !v_ge_w {
        violations.push(RelationViolation::OrdinaryBelowUniform);
    }

    // v_star >= w_star
    let vs_ge_ws = match (&t.ordinary_simultaneous, &t.uniform_simultaneous) {
        (ExponentValue::Infinite, _) => true,
        (ExponentValue::Finite(_), ExponentValue::Infinite) => false,
        (ExponentValue::Finite(vs), ExponentValue::Finite(ws)) => vs >= ws,
    };
    if !vs_ge_ws {
        violations.push(RelationViolation::SimultaneousBelowUniform);
    }

    // Sandwich v(w-1)/(v+w) <= v_star <= (v-w+1)/w. Finite w only; for
    // w = +inf both sides degenerate (and the tuple is already constrained
    // through duality and v >= w).
    if let Some(w) = t.uniform_linear.finite() {
        if !w.is_zero() {
            let lower = match &t.ordinary_linear {
                ExponentValue::Finite(v) => {
                    let den = v + w;
                    if den.is_zero() {
                        None
                    } else {
                        Some(v * (w - &one) / den)
                    }
                }
                // limit v -> inf of v(w-1)/(v+w)
                ExponentValue::Infinite => Some(w - &one),
            };
            if let Some(lb) = lower {
                let lower_ok = match &t.ordinary_simultaneous {
                    ExponentValue::Infinite => true,
                    ExponentValue::Finite(vs) => vs >= &lb,
                };
                if !lower_ok {
                    violations.push(RelationViolation::SandwichLower);
                }
            }
            let upper = match &t.ordinary_linear {
                ExponentValue::Finite(v) => Some((v - w + &one) / w),
                // limit v -> inf: unbounded, no upper constraint
                ExponentValue::Infinite => None,
            };
            if let Some(ub) = upper {
                let upper_ok = match &t.ordinary_simultaneous {
                    ExponentValue::Infinite => false,
                    ExponentValue::Finite(vs) => vs <= &ub,
                };
                if !upper_ok {
                    violations.push(RelationViolation::SandwichUpper);
                }
            }
        }
    }

    violations
}

#[cfg(test)]
mod tests {
    use super::*;
    use exact_core::rational::rat;

    fn tuple(w: ExponentValue, ws: ExponentValue, v: ExponentValue, vs: ExponentValue) -> ExponentTuple {
        ExponentTuple {
            uniform_linear: w,
            uniform_simultaneous: ws,
            ordinary_linear: v,
            ordinary_simultaneous: vs,
        }
    }

    fn fin(n: i64, d: i64) -> ExponentValue {
        ExponentValue::Finite(rat(n, d))
    }

    #[test]
    fn generic_tuple_passes() {
        // w = 2, w_star = 1/2, v = 2, v_star = 1/2 (almost-every-number values)
        let t = tuple(fin(2, 1), fin(1, 2), fin(2, 1), fin(1, 2));
        assert!(four_exponent_check(&t).is_empty());
    }

    #[test]
    fn broken_duality_is_the_only_violation() {
        let t = tuple(fin(2, 1), fin(1, 3), fin(2, 1), fin(1, 2));
        assert_eq!(four_exponent_check(&t), vec![RelationViolation::UniformDuality]);
    }

    #[test]
    fn liouville_tuple_passes() {
        // w = +inf forces w_star = 1; take v, v_star infinite as well
        let t = tuple(
            ExponentValue::Infinite,
            fin(1, 1),
            ExponentValue::Infinite,
            ExponentValue::Infinite,
        );
        assert!(four_exponent_check(&t).is_empty());
    }

    #[test]
    fn uniform_range_and_order_violations_detected() {
        // w = 3/2 < 2 and consistent remainder: w_star = 1 - 2/3 = 1/3
        let t = tuple(fin(3, 2), fin(1, 3), fin(3, 2), fin(1, 3));
        let v = four_exponent_check(&t);
        assert!(v.contains(&RelationViolation::UniformRange));
        // v < w
        let t = tuple(fin(5, 2), fin(3, 5), fin(2, 1), fin(3, 5));
        let v = four_exponent_check(&t);
        assert!(v.contains(&RelationViolation::OrdinaryBelowUniform));
        // v_star < w_star
        let t = tuple(fin(5, 2), fin(3, 5), fin(3, 1), fin(1, 2));
        let v = four_exponent_check(&t);
        assert!(v.contains(&RelationViolation::SimultaneousBelowUniform));
    }

    #[test]
    fn sandwich_violations_detected_on_both_sides() {
        // w = 2, w_star = 1/2, v = 4: sandwich gives 2/3 <= v_star <= 3/2,
        // but v_star <= 1 always in this normalization; test at the edges.
        let t = tuple(fin(2, 1), fin(1, 2), fin(4, 1), fin(2, 3));
        assert!(four_exponent_check(&t).is_empty());
        let t = tuple(fin(2, 1), fin(1, 2), fin(4, 1), fin(3, 5));
        assert_eq!(four_exponent_check(&t), vec![RelationViolation::SandwichLower]);
        // upper side: v_star just above (v-w+1)/w = 3/2
        let t = tuple(fin(2, 1), fin(1, 2), fin(4, 1), fin(8, 5));
        assert_eq!(four_exponent_check(&t), vec![RelationViolation::SandwichUpper]);
    }

    #[test]
    fn infinite_ordinary_linear_tightens_the_lower_sandwich() {
        // v = +inf: lower bound becomes w - 1; with w = 3, need v_star >= 2
        let t = tuple(
            fin(3, 1),
            fin(2, 3),
            ExponentValue::Infinite,
            fin(3, 2),
        );
        let v = four_exponent_check(&t);
        assert_eq!(v, vec![RelationViolation::SandwichLower]);
        let t = tuple(fin(3, 1), fin(2, 3), ExponentValue::Infinite, fin(2, 1));
        assert!(four_exponent_check(&t).is_empty());
    }

    #[test]
    fn infinite_uniform_simultaneous_is_never_consistent() {
        let t = tuple(
            fin(2, 1),
            ExponentValue::Infinite,
            fin(2, 1),
            ExponentValue::Infinite,
        );
        let v = four_exponent_check(&t);
        assert!(v.contains(&RelationViolation::UniformDuality));
    }
}
