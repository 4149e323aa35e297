use core::fmt;

use crate::kinematics::{Event, Speed};

use super::{NodeId, SimError};

/// How a signal propagates, in the absolute frame's chart.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SignalKind {
    /// Speed 1.
    Light,
    /// A finite absolute speed; superluminal when above 1.
    Finite {
        /// Absolute coordinate speed.
        speed: f64,
    },
    /// Zero absolute delay.
    Instantaneous,
}

impl SignalKind {
    /// Short name used in reports.
    pub fn name(&self) -> &'static str {
        match self {
            SignalKind::Light => "light",
            SignalKind::Finite { .. } => "finite",
            SignalKind::Instantaneous => "instantaneous",
        }
    }

    /// Absolute coordinate speed.
    pub fn absolute_speed(&self) -> Speed {
        match *self {
            SignalKind::Light => Speed::Finite(1.0),
            SignalKind::Finite { speed } => Speed::Finite(speed),
            SignalKind::Instantaneous => Speed::Infinite,
        }
    }

    pub(crate) fn validate(&self) -> Result<(), SimError> {
        match *self {
            SignalKind::Finite { speed } if !(speed.is_finite() && speed > 0.0) => {
                Err(SimError::InvalidSignalSpeed { speed })
            }
            _ => Ok(()),
        }
    }

    /// Absolute flight time across a gap `gap` (signed, receiver minus
    /// emitter) between two nodes that both move at `beta`.
    pub(crate) fn flight_time(&self, gap: f64, beta: f64) -> Result<f64, SimError> {
        let speed = match *self {
            SignalKind::Instantaneous => return Ok(0.0),
            SignalKind::Light => 1.0,
            SignalKind::Finite { speed } => speed,
        };
        // gap + beta dt = sign * speed * dt
        let closing = speed - gap.signum() * beta;
        if closing <= 0.0 {
            return Err(SimError::UnresolvableChase { speed, beta });
        }
        Ok(gap.abs() / closing)
    }
}

impl fmt::Display for SignalKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One emitted and absorbed signal, in absolute-frame coordinates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SignalRecord {
    /// Propagation mode.
    pub kind: SignalKind,
    /// Emitting node.
    pub from: NodeId,
    /// Receiving node.
    pub to: NodeId,
    /// Emission event.
    pub emit: Event,
    /// Absorption event.
    pub absorb: Event,
    /// Absolute coordinate speed.
    pub speed_abs: Speed,
}

impl SignalRecord {
    /// Absolute flight time.
    pub fn delay(&self) -> f64 {
        self.absorb.t - self.emit.t
    }
}
