//! Certified best-approximation machinery for systems of linear forms with
//! real algebraic (or rational) coefficients.
//!
//! The crate provides, all in exact arithmetic with refinable interval
//! enclosures:
//!
//! - [`ApproxMatrix`]: an `n × m` grid of real-number oracles with certified
//!   row evaluation, plus the [`DomainConstraint`] vocabulary of integer
//!   cones and strips used by constrained scans.
//! - [`best_approximations`]: the exhaustive record scan — integer vectors
//!   whose residual beats everything of equal or smaller size, each record
//!   certified by interval comparisons refined on demand.
//! - [`growth_exponent`] / [`check_growth_recurrences`] /
//!   [`estimate_exponents`]: asymptotic statistics of a record sequence
//!   (growth base of the sizes, superadditivity laws, ordinary and uniform
//!   decay exponents with regression headline values and raw term
//!   diagnostics).
//! - [`psi_theta`] / [`psi_theta_profile`]: the one-parameter minimum
//!   profile of a form system, as certified enclosures.
//! - [`psi_plus_scan`]: constrained minima over cones, axis neighborhoods,
//!   and strips on a geometric size grid, driven by a 64-bit fixed-point
//!   sieve whose shortlist is re-certified exactly.
//! - [`dim_span_tail`]: exact rational rank of the `(x, y)` data of a
//!   record tail.
//! - [`brentjes_best_approx`]: simultaneous best approximations to the
//!   powers of the real root of `x³ = x + 1` via an exact lattice walk.

pub mod brentjes;
pub mod exponents;
pub mod matrix;
pub mod records;
pub mod scan;
pub mod span;

pub use brentjes::{
    brentjes_best_approx, embedding_vector, multiplier_norm, unit_step, CylinderRecord,
    CylinderReport,
};
pub use exponents::{
    check_growth_recurrences, estimate_exponents, estimate_exponents_from_psi,
    growth_exponent, nth_root_bounds, records_from_pairs, slope_and_residual,
    ExponentEstimate, GrowthReport, RecurrenceReport, MIN_RECORDS,
};
pub use matrix::{approx_row_values, x_norm_key, ApproxMatrix, DomainConstraint, Norm, NormChoice};
pub use records::{
    best_approximations, psi_theta, psi_theta_profile, record_digest, records_agree,
    BestApproxRecord,
};
pub use scan::{psi_plus_scan, PsiPlusReport, PsiSample};
pub use span::{dim_span_tail, rational_rank};
