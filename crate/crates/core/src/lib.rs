//! Teter and strongly-Teter decisions for one-dimensional monomial curves
//! `A = k[[H]]`, `H` a numerical semigroup.
//!
//! A non-Gorenstein ring `A` is Teter when some Gorenstein ring `B` of the
//! same dimension surjects onto it with `e(B) = e(A) + 1`. For these domains
//! that happens exactly when the canonical module is isomorphic to a proper
//! ideal `J` with `A/J` a hypersurface, and then `B = A ×_{A/J} k[[u]]`.
//! The crate searches monomial witnesses `J = t^s ω`, tests the strong
//! property through the associated graded module of `J`, and builds `B`
//! explicitly over a prime field to verify its multiplicity and socle.

pub mod approximation;
pub mod graded;
pub mod ideal;
pub mod semigroup;
pub mod teter;

pub use approximation::{verify_approximation, ApproximationOptions, ApproximationSummary};
pub use ideal::{CyclicQuotient, QuotientData, RelativeIdeal};
pub use semigroup::{NumericalSemigroup, SemigroupError};
pub use teter::{teter_check, TeterReport, Verdict};
