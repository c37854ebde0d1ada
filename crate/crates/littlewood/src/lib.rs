//! Certified record scans for products of the form q·∏_i ‖q θ_i‖ and
//! their relatives, built on exact rational interval arithmetic:
//!
//! - [`littlewood_scan`] / [`multi_littlewood_scan`] /
//!   [`multi_littlewood_scan_logweighted`]: strictly-decreasing record
//!   traces of the product as q grows, every record comparison certified
//!   at interval precision (exact zeros detected and terminal).
//! - [`mixed_littlewood_scan`]: p-adic variants q·|q|_{p_1}⋯|q|_{p_k}·‖qθ‖.
//! - [`bad_membership_scan`]: weighted two- and three-exponent membership
//!   tests — reports the first certified violation of
//!   q^{a_i}·‖qθ_i‖ < δ for all i, or that no violation exists up to N.
//! - [`lattice_product_min`]: homogeneous minima of |∏(Ωx)_i| over
//!   algebraic lattices with bounded integer coefficients.
//! - [`peck_verify`]: witness counts for simultaneous approximation with
//!   an extra logarithmic saving on the first coordinate, on conjugate
//!   coordinate systems such as (θ, θ²) for the cubic θ = 2cos(2π/7).
//! - [`furstenberg_sequence`] / [`lacunary_avoider`]: ×2×3-semigroup
//!   listings and exact dyadic avoiders for lacunary sequences, with
//!   self-verifying floors.
//! - [`gallagher_montecarlo`]: reproducible Monte Carlo counts of
//!   product-approximation events under a catalog of ψ functions whose
//!   Σψ(q)·log q convergence status is known.

mod gallagher;
mod lattice;
mod peck;
mod scan;
mod sequences;

pub use gallagher::{gallagher_montecarlo, GallagherReport, PsiDescriptor, PsiKind};
pub use lattice::{lattice_product_min, AlgebraicLattice};
pub use peck::{peck_cubic_fixture, peck_verify, PeckFixture, PeckReport, PeckWitness};
pub use scan::{
    bad_membership_scan, littlewood_scan, mixed_littlewood_scan, multi_littlewood_scan,
    multi_littlewood_scan_logweighted, product_value_at, BadScanOutcome, ProductRecord,
    ProductScanResult,
};
pub use sequences::{
    avoider_verify, furstenberg_sequence, lacunary_avoider, AvoiderResult, LacunarySequence,
};
