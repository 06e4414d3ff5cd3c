//! Coefficient machinery and certified optimization for second-order Hankel
//! determinant functionals `H_2(n)(f) = a_n a_{n+2} - a_{n+1}^2` of normalized
//! analytic functions on the unit disk.
//!
//! The crate has four layers:
//!
//! * [`series`] — truncated power-series algebra, Schwarz-coefficient
//!   parametrizations of candidate functions, numerical membership testing,
//!   and Grunsky coefficient extraction for the square-root transform.
//! * [`objectives`] — the closed-form bound functions together with their
//!   exact constraint domains, addressable by name through a registry.
//! * [`optimizer`] — interval branch-and-bound maximization with certified
//!   upper bounds, plus a dense grid scan and a seeded multistart local
//!   search as independent lower-bound witnesses.
//! * [`hankel`] — determinant evaluation along two independent routes,
//!   reproduction of the published bounds, sharp-function fixtures and a
//!   randomized extremal search over the candidate class.

pub mod grunsky;
pub mod hankel;
pub mod interval;
pub mod objectives;
pub mod optimizer;
pub mod schwarz;
pub mod series;

pub use grunsky::{grunsky_functional, grunsky_table, verify_grunsky_identities, GrunskyTable};
pub use hankel::{
    conjecture_search, hankel2, hankel2_grunsky, reproduce_theorems, sharp_examples,
    HankelReport, SearchRecord, SharpExample,
};
pub use interval::Interval;
pub use objectives::{registry, ObjectiveSpec};
pub use optimizer::{
    grid_oracle, maximize, multistart_local, BoxRegion, Constraint, OptStatus,
    OptimizationResult,
};
pub use schwarz::{coeffs_from_schwarz, u_membership_check, MembershipCheck, UFunctionSpec};
pub use series::PowerSeries;
