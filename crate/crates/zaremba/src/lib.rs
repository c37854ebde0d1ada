//! Enumeration and search over rationals with bounded partial quotients.
//!
//! The crate walks the tree of canonical quotient strings with a
//! continuant bound, and builds everything else on that walk:
//!
//! * [`enumerate_bounded`] / [`walk_bounded`] — every reduced fraction in
//!   (0, 1) with denominator ≤ N and quotients ≤ k, each exactly once;
//! * [`coverage`] / [`CoverageSet`] — the bitmap of denominators reached,
//!   with a compact binary serialization and a shard-and-merge variant
//!   that is bit-identical to the sequential scan;
//! * [`n_k_counts`] / [`hensley_fit`] — per-denominator counts and a
//!   log-log regression for the growth exponent of their partial sums;
//! * [`b_membership`] — the prefix test: every initial segment of the
//!   expansion with continuant below a threshold keeps its quotients
//!   bounded;
//! * [`hyperbola_search`] — witness pairs on x₁·x₂ ≡ λ (mod q) whose
//!   coordinates both pass the prefix test;
//! * [`max_quotient_stat`] — for fixed q, the distribution over
//!   numerators of the largest partial quotient;
//! * [`folding_construct`] — iterated folding chains whose continuants
//!   are exact powers of a chosen base while quotients stay bounded;
//! * [`MissingDigitSet`] — digit-restricted integers, their residue
//!   coverage, and product witnesses.
//!
//! All arithmetic on fractions and continuants is exact; floating point
//! appears only in regression slopes and density reports.

pub mod digits;
pub mod enumerate;
pub mod folding;
pub mod hyperbola;
pub mod stats;

pub use digits::MissingDigitSet;
pub use enumerate::{
    b_membership, coverage, coverage_sharded, enumerate_bounded, n_k_counts, walk_bounded,
    BoundedFraction, CoverageSet, NkTable,
};
pub use folding::{fold_once, folding_construct, folding_seed, FoldStep};
pub use hyperbola::{hyperbola_search, hyperbola_witness};
pub use stats::{hensley_fit, max_quotient_stat, GrowthFit, MaxQuotientStat};
