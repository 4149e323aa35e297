use alloc::vec::Vec;
use core::fmt;

use crate::kinematics::{check_beta, Event, FrameSpec};
use crate::math::{gamma, sqrt};

use super::{Protocol, SignalKind, SignalRecord, SimError};

/// Index of a clock in its lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodeId(pub usize);

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A clock riding on the lattice.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClockNode {
    id: NodeId,
    xi0: f64,
    offset: f64,
    rate: f64,
    phase: f64,
}

impl ClockNode {
    /// Node id.
    pub fn id(&self) -> NodeId {
        self.id
    }

    /// Absolute-frame position at absolute time 0.
    pub fn xi0(&self) -> f64 {
        self.xi0
    }

    /// Correction applied by the last protocol run.
    pub fn offset(&self) -> f64 {
        self.offset
    }

    /// Proper-time ticks per unit of absolute time.
    pub fn rate(&self) -> f64 {
        self.rate
    }

    /// Raw reading at absolute time 0, before any correction.
    pub fn phase(&self) -> f64 {
        self.phase
    }

    /// Absolute-frame position at absolute time `t`.
    pub fn position_at(&self, t: f64, beta: f64) -> f64 {
        self.xi0 + beta * t
    }

    /// Uncorrected reading at absolute time `t`.
    pub fn raw_reading(&self, t: f64) -> f64 {
        self.phase + self.rate * t
    }

    /// Corrected reading at absolute time `t`.
    pub fn reading(&self, t: f64) -> f64 {
        self.raw_reading(t) + self.offset
    }
}

/// Clocks carried by a frame moving at `beta`, plus the log of every signal
/// exchanged between them.
///
/// The lattice owns a simulation cursor `now` (absolute time). Protocols and
/// measurements start at `now` and leave it at the last event they process.
#[derive(Debug, Clone)]
pub struct ClockLattice {
    beta: f64,
    nodes: Vec<ClockNode>,
    log: Vec<SignalRecord>,
    now: f64,
    synchronized: Option<Protocol>,
}

impl ClockLattice {
    /// Builds a lattice from absolute-frame positions at `t = 0`.
    ///
    /// Needs at least two finite, strictly increasing positions.
    pub fn new(beta: f64, positions: &[f64]) -> Result<Self, SimError> {
        check_beta(beta)?;
        if positions.len() < 2 {
            return Err(SimError::TooFewNodes {
                count: positions.len(),
            });
        }
        for (i, &p) in positions.iter().enumerate() {
            if !p.is_finite() || (i > 0 && p <= positions[i - 1]) {
                return Err(SimError::InvalidPosition { index: i });
            }
        }
        let rate = sqrt(1.0 - beta * beta);
        let nodes = positions
            .iter()
            .enumerate()
            .map(|(i, &xi0)| ClockNode {
                id: NodeId(i),
                xi0,
                offset: 0.0,
                rate,
                phase: 0.0,
            })
            .collect();
        Ok(ClockLattice {
            beta,
            nodes,
            log: Vec::new(),
            now: 0.0,
            synchronized: None,
        })
    }

    /// Builds a lattice from positions measured with rulers at rest in the
    /// moving frame. They are contracted by `sqrt(1 - beta^2)` in the
    /// absolute chart.
    pub fn from_proper_positions(beta: f64, proper: &[f64]) -> Result<Self, SimError> {
        check_beta(beta)?;
        let root = sqrt(1.0 - beta * beta);
        let positions: Vec<f64> = proper.iter().map(|p| p * root).collect();
        Self::new(beta, &positions)
    }

    /// Sets raw clock phases, one per node.
    pub fn with_phases(mut self, phases: &[f64]) -> Result<Self, SimError> {
        if phases.len() != self.nodes.len() {
            return Err(SimError::LengthMismatch {
                expected: self.nodes.len(),
                found: phases.len(),
            });
        }
        for (i, (node, &phase)) in self.nodes.iter_mut().zip(phases).enumerate() {
            if !phase.is_finite() {
                return Err(SimError::InvalidPhase { index: i });
            }
            node.phase = phase;
        }
        Ok(self)
    }

    /// Moves the simulation cursor to absolute time `t`.
    pub fn set_now(&mut self, t: f64) -> Result<(), SimError> {
        if !t.is_finite() {
            return Err(SimError::InvalidTime(t));
        }
        self.now = t;
        Ok(())
    }

    /// Frame velocity relative to the absolute frame.
    pub fn beta(&self) -> f64 {
        self.beta
    }

    /// Clocks in position order.
    pub fn nodes(&self) -> &[ClockNode] {
        &self.nodes
    }

    /// One clock.
    pub fn node(&self, id: NodeId) -> Result<&ClockNode, SimError> {
        self.nodes.get(id.0).ok_or(SimError::UnknownNode(id))
    }

    /// Every signal exchanged so far, in emission order.
    pub fn log(&self) -> &[SignalRecord] {
        &self.log
    }

    /// Current absolute time.
    pub fn now(&self) -> f64 {
        self.now
    }

    /// Protocol that set the current offsets, if any.
    pub fn synchronized_by(&self) -> Option<Protocol> {
        self.synchronized
    }

    /// Offsets in node order.
    pub fn offsets(&self) -> Vec<f64> {
        self.nodes.iter().map(|n| n.offset).collect()
    }

    /// Clears offsets and the synchronized flag. The log is kept.
    pub fn reset_offsets(&mut self) {
        for n in &mut self.nodes {
            n.offset = 0.0;
        }
        self.synchronized = None;
    }

    /// Distance between two nodes as measured with rulers at rest in the
    /// lattice: the absolute gap times the Lorentz factor.
    pub fn frame_distance(&self, a: NodeId, b: NodeId) -> Result<f64, SimError> {
        let gap = self.node(b)?.xi0 - self.node(a)?.xi0;
        Ok(gap.abs() * gamma(self.beta))
    }

    /// Edwards parameter realized by the current clock settings.
    ///
    /// Clocks that agree with chart `k` satisfy
    /// `phase + offset = C - gamma (beta + k) xi0`; the slope is fitted by
    /// least squares over all nodes. `None` before any protocol has run.
    pub fn synchrony(&self) -> Option<f64> {
        self.synchronized?;
        let n = self.nodes.len() as f64;
        let mean_x = self.nodes.iter().map(|c| c.xi0).sum::<f64>() / n;
        let mean_y = self.nodes.iter().map(|c| c.phase + c.offset).sum::<f64>() / n;
        let (mut sxy, mut sxx) = (0.0, 0.0);
        for c in &self.nodes {
            let dx = c.xi0 - mean_x;
            sxy += dx * (c.phase + c.offset - mean_y);
            sxx += dx * dx;
        }
        let slope = sxy / sxx;
        Some(-slope / gamma(self.beta) - self.beta)
    }

    /// The lattice's frame with the synchrony its clocks currently realize.
    pub fn frame(&self, label: &str) -> Result<FrameSpec, SimError> {
        let k = self.synchrony().ok_or(SimError::NotSynchronized)?;
        // rounding can push |k| a hair past 1 for beta near 1
        let k = k.clamp(-1.0, 1.0);
        Ok(FrameSpec::new(label, self.beta, k)?)
    }

    /// Sends a signal from `from` to `to` at the current time and logs it.
    pub fn propagate(&mut self, from: NodeId, to: NodeId, kind: SignalKind) -> Result<SignalRecord, SimError> {
        self.propagate_at(self.now, from, to, kind)
    }

    /// Sends a signal emitted at absolute time `t_emit` and logs it.
    pub fn propagate_at(
        &mut self,
        t_emit: f64,
        from: NodeId,
        to: NodeId,
        kind: SignalKind,
    ) -> Result<SignalRecord, SimError> {
        if !t_emit.is_finite() {
            return Err(SimError::InvalidTime(t_emit));
        }
        kind.validate()?;
        if from == to {
            return Err(SimError::SameNode(from));
        }
        let src = *self.node(from)?;
        let dst = *self.node(to)?;
        let dt = kind.flight_time(dst.xi0 - src.xi0, self.beta)?;
        let t_absorb = t_emit + dt;
        let record = SignalRecord {
            kind,
            from,
            to,
            emit: Event::tx(t_emit, src.position_at(t_emit, self.beta)),
            absorb: Event::tx(t_absorb, dst.position_at(t_absorb, self.beta)),
            speed_abs: kind.absolute_speed(),
        };
        self.log.push(record);
        Ok(record)
    }

    pub(crate) fn set_offset(&mut self, id: NodeId, offset: f64) {
        self.nodes[id.0].offset = offset;
    }

    pub(crate) fn mark_synchronized(&mut self, protocol: Protocol) {
        self.synchronized = Some(protocol);
    }

    pub(crate) fn advance_to(&mut self, t: f64) {
        if t > self.now {
            self.now = t;
        }
    }
}
