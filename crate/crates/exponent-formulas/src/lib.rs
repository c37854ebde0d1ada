//! Closed-form relations between Diophantine approximation exponents,
//! evaluated exactly.
//!
//! The crate covers four groups of results for an `m x n` system of linear
//! forms (and its specializations to one row or one column):
//!
//! * [`transfer`]: lower bounds for the ordinary exponent in terms of the
//!   uniform exponent — the classical bounds split by the number of forms,
//!   the sharp four-dimensional bounds, the rational one-row/one-column
//!   family, and the characteristic-root formulation.
//! * [`four_exponent`]: the complete consistency relations among the four
//!   exponents (ordinary/uniform, direct/dual) of a single real number.
//! * [`positive`]: exponents of approximation restricted to positive,
//!   angular, or progression-constrained integer vectors.
//! * [`constants`]: certified enclosures of the named constants appearing in
//!   these bounds (spectral roots, derivative thresholds, growth rates).
//!
//! Every bound is represented either as an exact rational, an exact
//! quadratic radical ([`RadicalExpr`]), or a certified rational enclosure
//! ([`exact_core::RatInterval`]); comparisons on grids are exact integer
//! arithmetic, never floating point.

pub mod constants;
pub mod four_exponent;
pub mod positive;
pub mod radical;
pub mod transfer;

pub use constants::{
    contact_recurrence_root, derivative_threshold_high, derivative_threshold_low,
    doubling_recurrence_root, euclidean_growth_lower_literal, golden_ratio,
    quartic_counterexample_constants, reference_constants, sup_norm_growth_lower, NamedConstant,
    QuarticConstants,
};
pub use four_exponent::{four_exponent_check, ExponentTuple, ExponentValue, RelationViolation};
pub use positive::{
    angular_condition_value, angular_cubic_root, angular_exponent, constrained_exponent_lower,
    dual_uniform_positive_lower, growth_bound, mixed_positive_lower, positive_exponent_bound,
    simultaneous_positive_lower, simultaneous_ratio_positive_lower, unconditional_positive_lower,
    uniform_ratio_lower, wide_domain_exponent, BranchRegion, ConstrainedLower,
    PositiveBoundReport,
};
pub use radical::{nth_root_bounds, rational_sqrt_exact, sign_linear_radical, BoundExpr, RadicalExpr};
pub use transfer::{
    independence_chain_root, transfer_lower_classical, transfer_lower_dim4, transfer_lower_single,
};
