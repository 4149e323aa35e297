use core::fmt;

use crate::kinematics::Speed;

use super::{ClockLattice, NodeId, SignalKind, SimError};

/// Readout resolution of a clock, relative to the magnitude of its reading.
/// Elapsed times below this are reported as zero.
const CLOCK_RESOLUTION: f64 = 16.0 * f64::EPSILON;

/// Which leg a measurement covers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MeasuredDirection {
    /// Emitter at lower `x`.
    PlusX,
    /// Emitter at higher `x`.
    MinusX,
    /// Out and back, timed on the emitter's clock.
    TwoWay,
}

impl MeasuredDirection {
    /// Name used in reports.
    pub fn name(&self) -> &'static str {
        match self {
            MeasuredDirection::PlusX => "+x",
            MeasuredDirection::MinusX => "-x",
            MeasuredDirection::TwoWay => "two-way",
        }
    }
}

impl fmt::Display for MeasuredDirection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A speed measured with the lattice's own rulers and clocks.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpeedMeasurement {
    /// Leg measured.
    pub direction: MeasuredDirection,
    /// Signal used.
    pub kind: SignalKind,
    /// Path length in the lattice's rest frame.
    pub distance: f64,
    /// Clock difference; may be negative for instantaneous signals read on
    /// clocks with relative simultaneity.
    pub elapsed: f64,
    /// `distance / elapsed`, or infinite when no time elapses.
    pub speed: Speed,
}

fn speed_of(distance: f64, elapsed: f64, scale: f64) -> Speed {
    if elapsed.abs() <= CLOCK_RESOLUTION * scale.max(1.0) {
        Speed::Infinite
    } else {
        Speed::Finite(distance / elapsed)
    }
}

impl ClockLattice {
    /// Times one signal from `from` to `to` on the synchronized clocks at
    /// each end.
    pub fn measure_one_way(&mut self, from: NodeId, to: NodeId, kind: SignalKind) -> Result<SpeedMeasurement, SimError> {
        if self.synchronized_by().is_none() {
            return Err(SimError::NotSynchronized);
        }
        let record = self.propagate(from, to, kind)?;
        let start = self.node(from)?.reading(record.emit.t);
        let stop = self.node(to)?.reading(record.absorb.t);
        self.advance_to(record.absorb.t);
        let elapsed = stop - start;
        let distance = self.frame_distance(from, to)?;
        let direction = if self.node(to)?.xi0() > self.node(from)?.xi0() {
            MeasuredDirection::PlusX
        } else {
            MeasuredDirection::MinusX
        };
        Ok(SpeedMeasurement {
            direction,
            kind,
            distance,
            elapsed,
            speed: speed_of(distance, elapsed, start.abs().max(stop.abs())),
        })
    }

    /// Times a round trip `a -> b -> a` on `a`'s clock alone. Works on
    /// unsynchronized lattices since offsets cancel.
    pub fn measure_two_way(&mut self, a: NodeId, b: NodeId, kind: SignalKind) -> Result<SpeedMeasurement, SimError> {
        let out = self.propagate(a, b, kind)?;
        let back = self.propagate_at(out.absorb.t, b, a, kind)?;
        let clock = self.node(a)?;
        let start = clock.reading(out.emit.t);
        let stop = clock.reading(back.absorb.t);
        self.advance_to(back.absorb.t);
        let elapsed = stop - start;
        let distance = 2.0 * self.frame_distance(a, b)?;
        Ok(SpeedMeasurement {
            direction: MeasuredDirection::TwoWay,
            kind,
            distance,
            elapsed,
            speed: speed_of(distance, elapsed, start.abs().max(stop.abs())),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syncsim::Protocol;

    fn lattice(beta: f64, protocol: Protocol) -> ClockLattice {
        let mut lat = ClockLattice::new(beta, &[0.0, 1.0])
            .unwrap()
            .with_phases(&[4.0, -1.5])
            .unwrap();
        lat.run_protocol(protocol, NodeId(0)).unwrap();
        lat
    }

    #[test]
    fn unsynchronized_one_way_rejected() {
        let mut lat = ClockLattice::new(0.0, &[0.0, 1.0]).unwrap();
        assert_eq!(
            lat.measure_one_way(NodeId(0), NodeId(1), SignalKind::Light),
            Err(SimError::NotSynchronized)
        );
        // round trips need no synchronization
        let m = lat.measure_two_way(NodeId(0), NodeId(1), SignalKind::Light).unwrap();
        assert_eq!(m.speed, Speed::Finite(1.0));
    }

    #[test]
    fn at_rest_light_is_unit() {
        let mut lat = lattice(0.0, Protocol::Einstein);
        let m = lat.measure_one_way(NodeId(0), NodeId(1), SignalKind::Light).unwrap();
        assert_eq!(m.direction, MeasuredDirection::PlusX);
        assert!((m.speed.as_f64() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn superluminal_sync_gives_anisotropic_light() {
        // forward light chases the receding node: 1/(1 + beta); backward 1/(1 - beta)
        let mut lat = lattice(0.6, Protocol::Superluminal);
        let fwd = lat.measure_one_way(NodeId(0), NodeId(1), SignalKind::Light).unwrap();
        let bwd = lat.measure_one_way(NodeId(1), NodeId(0), SignalKind::Light).unwrap();
        assert!((fwd.speed.as_f64() - 0.625).abs() < 1e-9);
        assert!((bwd.speed.as_f64() - 2.5).abs() < 1e-9);
        assert_eq!(bwd.direction, MeasuredDirection::MinusX);
        assert!((fwd.distance - 1.25).abs() < 1e-15);
    }

    #[test]
    fn instantaneous_signal_reads_infinite_after_superluminal_sync() {
        let mut lat = lattice(0.6, Protocol::Superluminal);
        let m = lat.measure_one_way(NodeId(0), NodeId(1), SignalKind::Instantaneous).unwrap();
        assert_eq!(m.speed, Speed::Infinite);
    }

    #[test]
    fn instantaneous_signal_runs_backwards_on_einstein_clocks() {
        let mut lat = lattice(0.6, Protocol::Einstein);
        let m = lat.measure_one_way(NodeId(0), NodeId(1), SignalKind::Instantaneous).unwrap();
        // Einstein chart: x = inf in S maps to dx'/dt' = -1/beta
        assert!((m.speed.as_f64() + 1.0 / 0.6).abs() < 1e-9);
        assert!(m.elapsed < 0.0);
    }

    #[test]
    fn two_way_light_is_invariant() {
        for p in Protocol::ALL {
            let mut lat = lattice(-0.9, p);
            let m = lat.measure_two_way(NodeId(1), NodeId(0), SignalKind::Light).unwrap();
            assert!((m.speed.as_f64() - 1.0).abs() < 1e-9);
        }
    }

    #[test]
    fn cursor_advances() {
        let mut lat = lattice(0.0, Protocol::Superluminal);
        let t0 = lat.now();
        lat.measure_one_way(NodeId(0), NodeId(1), SignalKind::Light).unwrap();
        assert!((lat.now() - t0 - 1.0).abs() < 1e-15);
    }
}
