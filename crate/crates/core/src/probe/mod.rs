//! Collapse-time probe for the absolute frame.
//!
//! The collapse time of a superposition with energy spread `ΔE`, observed
//! from a frame moving at `beta` relative to the absolute frame, is modelled
//! as `t_c = gamma(beta) ħ E_p / ΔE^2`. It is shortest in the absolute frame,
//! so sampling `t_c` from several lab velocities locates that frame.

mod estimate;
mod model;
mod refine;

pub use self::estimate::{estimate_absolute_frame, uniform_grid, FitReport, COMPOSITION_RULE};
pub use self::model::{collapse_time, CollapseModel, CollapseSample, UnitSystem};
pub use self::refine::parabolic_vertex;

use crate::kinematics::KinematicsError;

/// Probe failures.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ProbeError {
    /// Velocity outside `(-1, 1)` or composition failure.
    #[error(transparent)]
    Kinematics(#[from] KinematicsError),
    /// `ħ` or `E_p` is not positive and finite.
    #[error("model constants must be positive and finite")]
    InvalidConstants,
    /// `ΔE` is not positive and finite.
    #[error("energy spread {0} must be positive and finite")]
    NonPositiveEnergy(f64),
    /// A sample's collapse time or noise scale is unusable.
    #[error("sample {index} is invalid")]
    InvalidSample {
        /// Offending row.
        index: usize,
    },
    /// The estimator needs at least three samples.
    #[error("need at least 3 samples, got {count}")]
    TooFewSamples {
        /// Samples supplied.
        count: usize,
    },
    /// Fewer than three distinct lab velocities: the gamma curve is
    /// unconstrained.
    #[error("ill-conditioned fit: {distinct} distinct lab velocities")]
    IllConditioned {
        /// Distinct velocities present.
        distinct: usize,
    },
    /// Grid is empty, unsorted or leaves `(-1, 1)`.
    #[error("candidate grid must be non-empty, strictly increasing and inside (-1, 1)")]
    InvalidGrid,
}
