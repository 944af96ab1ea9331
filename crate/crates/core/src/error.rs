//! Crate-wide error type.

use crate::C64;
use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Resultant of two zero polynomials is undefined.
    #[error("resultant undefined: both polynomials are zero")]
    BothZero,

    /// The leading coefficient of an eliminand is identically zero; the
    /// caller should rotate to a different chart.
    #[error("degenerate leading coefficient in elimination")]
    DegenerateLeading,

    /// The simultaneous root iteration failed to settle within the sweep cap.
    #[error("root finder did not converge within {sweeps} sweeps (degree {degree})")]
    NoConvergence { sweeps: usize, degree: usize },

    /// The curve/Hessian system has a positive-dimensional solution set: the
    /// eliminant vanished identically on every chart.
    #[error("degenerate system: curve shares a component with its Hessian")]
    DegenerateSystem,

    /// The gradient of the curve vanishes at a computed point.
    #[error("singular point on curve at [{0} : {1} : {2}]")]
    SingularPoint(C64, C64, C64),

    /// Restriction of the curve to a line vanished identically.
    #[error("line is contained in the curve")]
    DegenerateLine,

    /// Flex weights did not add up to the genus-3 total of 24.
    #[error("flex weight sum is {got}, expected 24")]
    WeightSumMismatch { got: usize },

    /// Group closure exceeded the element cap.
    #[error("group closure exceeded cap of {cap} elements")]
    CapExceeded { cap: usize },

    /// A group element does not preserve the curve.
    #[error("group element does not preserve the curve (max ratio deviation {deviation:.3e})")]
    NotInvariant { deviation: f64 },

    /// A group element mapped a flex outside the flex set, or changed its kind.
    #[error("group action violated flex-set invariance: {0}")]
    InvarianceViolation(String),

    /// Family parameters violate the nondegeneracy condition.
    #[error("degenerate parameters: factor {factor} vanishes at a={a}, b={b}")]
    DegenerateParameters { factor: &'static str, a: C64, b: C64 },

    /// Tolerances must satisfy 0 < zero_eps < cluster_radius < point_eps < 1.
    #[error("invalid tolerances: need 0 < zero_eps < cluster_radius < point_eps < 1")]
    InvalidTolerances,
}
