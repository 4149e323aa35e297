use alloc::string::String;

/// Failures of the transformation algebra.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum KinematicsError {
    /// `|beta| >= 1` or not finite.
    #[error("frame velocity beta={beta} is outside (-1, 1)")]
    InvalidVelocity {
        /// Offending velocity.
        beta: f64,
    },
    /// `|k| > 1` or not finite.
    #[error("synchrony parameter k={k} is outside [-1, 1]")]
    ConventionOutOfRange {
        /// Offending parameter.
        k: f64,
    },
    /// `(1 + beta k)^2 - beta^2 <= 0`: the chart is singular.
    #[error("degenerate convention beta={beta} k={k}")]
    DegenerateConvention {
        /// Frame velocity.
        beta: f64,
        /// Synchrony parameter of the source chart.
        k: f64,
    },
    /// An event component is NaN or infinite.
    #[error("event has a non-finite component")]
    NonFinite,
    /// A chart label was empty.
    #[error("chart label is empty")]
    EmptyChart,
    /// The event does not live in the chart the transform starts from.
    #[error("event is in chart {found:?}, expected {expected:?}")]
    ChartMismatch {
        /// Chart the transform expected.
        expected: String,
        /// Chart the event carries.
        found: String,
    },
    /// No frame with this label is registered.
    #[error("unknown chart {0:?}")]
    UnknownChart(String),
    /// The `(t, x)` block has zero determinant.
    #[error("transform is not invertible")]
    Singular,
}
