//! Exact arithmetic foundations for the computational number theory lab.
//!
//! Everything in this crate computes with integers and rationals only. A real
//! number is represented either exactly (rational, quadratic surd, quadratic
//! extension element, polynomial root with an isolating bracket) or by a
//! shrinking rational enclosure with outward rounding. No floating point
//! enters any certified path; `f64` conversions exist only for reporting.

pub mod cf;
pub mod error;
pub mod interval;
pub mod oracle;
pub mod padic;
pub mod poly;
pub mod primes;
pub mod quadext;
pub mod rational;
pub mod semiregular;
pub mod surd;
pub mod transcend;

pub use cf::{cf_expand, cf_value, continuant, fold, ContinuedFraction};
pub use error::{Error, Result};
pub use interval::RatInterval;
pub use oracle::RealOracle;
pub use padic::{padic_norm, padic_valuation};
pub use poly::IntPoly;
pub use quadext::QuadExt;
pub use rational::{dist_to_int, parse_rational, ExactRational};
pub use semiregular::{semiregular_value, SemiregularCF};
pub use surd::{surd_cf_stream, Surd, SurdCfExpansion};

// Re-export the numeric backbone so downstream crates use one coherent stack.
pub use num_bigint::{BigInt, BigUint, Sign};
pub use num_integer::Integer;
pub use num_rational::BigRational;
pub use num_traits::{One, Signed, ToPrimitive, Zero};
