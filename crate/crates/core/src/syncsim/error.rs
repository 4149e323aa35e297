use crate::kinematics::KinematicsError;

use super::NodeId;

/// Simulation failures.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SimError {
    /// Invalid frame velocity or convention.
    #[error(transparent)]
    Kinematics(#[from] KinematicsError),
    /// A lattice needs at least two clocks.
    #[error("lattice needs at least 2 nodes, got {count}")]
    TooFewNodes {
        /// Nodes supplied.
        count: usize,
    },
    /// Positions must be finite and strictly increasing.
    #[error("node {index} position is not finite or not strictly increasing")]
    InvalidPosition {
        /// Index of the first offending node.
        index: usize,
    },
    /// Per-node data did not match the node count.
    #[error("expected {expected} values, got {found}")]
    LengthMismatch {
        /// Node count.
        expected: usize,
        /// Values supplied.
        found: usize,
    },
    /// A clock phase was not finite.
    #[error("node {index} phase is not finite")]
    InvalidPhase {
        /// Offending node.
        index: usize,
    },
    /// No node with this id.
    #[error("unknown node {0}")]
    UnknownNode(NodeId),
    /// Emitter and receiver coincide.
    #[error("signal from node {0} to itself")]
    SameNode(NodeId),
    /// A finite signal speed must be positive and finite.
    #[error("signal speed {speed} is not positive and finite")]
    InvalidSignalSpeed {
        /// Offending speed.
        speed: f64,
    },
    /// The signal never catches the receding receiver.
    #[error("signal at speed {speed} cannot catch a node receding at beta={beta}")]
    UnresolvableChase {
        /// Absolute signal speed.
        speed: f64,
        /// Lattice velocity.
        beta: f64,
    },
    /// One-way measurements need synchronized clocks.
    #[error("clocks are not synchronized")]
    NotSynchronized,
    /// The start time must be finite.
    #[error("simulation time {0} is not finite")]
    InvalidTime(f64),
}
