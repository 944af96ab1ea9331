//! Classification of flexes and hyperflexes on a two-parameter family of
//! smooth plane quartics, together with the orbit structure of those points
//! under the family's projective symmetry groups.
//!
//! The pipeline goes: build the quartic ([`kuribayashi::build_curve`]),
//! intersect it with its Hessian ([`flexlab::hessian`],
//! [`rootsolve::solve_curve_system`]), classify each intersection point by the
//! contact order of its tangent line ([`flexlab::classify_flexes`]), and
//! partition the classified points into orbits of the symmetry group
//! ([`projgroup::orbit_partition`]). [`kuribayashi::verify_family_instance`]
//! runs the whole pipeline and compares the outcome against the predicted
//! classification tables.

pub mod error;
pub mod flexlab;
pub mod kuribayashi;
mod par;
pub mod polycore;
pub mod projgroup;
pub mod rootsolve;
pub mod tolerances;

pub use error::Error;
pub use tolerances::Tolerances;

/// Complex scalar used throughout the crate.
pub type C64 = num_complex::Complex64;

/// Shorthand for fallible operations in this crate.
pub type Result<T> = std::result::Result<T, Error>;
