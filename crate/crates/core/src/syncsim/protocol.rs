use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use super::{ClockLattice, EventQueue, NodeId, SignalKind, SimError};

/// Clock-synchronization procedures.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Protocol {
    /// Light round trips with the midpoint rule (isotropic one-way light).
    Einstein,
    /// Instantaneous signals carry the master's reading.
    Superluminal,
    /// Clocks copy a co-located, Einstein-synchronized rest-frame lattice.
    ExternalRegulation,
}

impl Protocol {
    /// All protocols.
    pub const ALL: [Protocol; 3] = [Protocol::Einstein, Protocol::Superluminal, Protocol::ExternalRegulation];

    /// Name used in scenario files and reports.
    pub fn name(&self) -> &'static str {
        match self {
            Protocol::Einstein => "einstein",
            Protocol::Superluminal => "superluminal",
            Protocol::ExternalRegulation => "external-regulation",
        }
    }
}

impl fmt::Display for Protocol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Unrecognized protocol name.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown protocol")]
pub struct UnknownProtocol;

impl FromStr for Protocol {
    type Err = UnknownProtocol;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Protocol::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or(UnknownProtocol)
    }
}

enum Arrival {
    AtSlave { slave: NodeId, master_emit: f64 },
    AtMaster { slave: NodeId, master_emit: f64, slave_raw: f64 },
}

impl ClockLattice {
    /// Synchronizes every clock against `master`, starting at the current
    /// time. Existing offsets are cleared first; the master's offset stays 0.
    pub fn run_protocol(&mut self, protocol: Protocol, master: NodeId) -> Result<(), SimError> {
        self.node(master)?;
        self.reset_offsets();
        match protocol {
            Protocol::Einstein => self.einstein(master)?,
            Protocol::Superluminal => self.superluminal(master)?,
            Protocol::ExternalRegulation => self.external_regulation(master)?,
        }
        self.mark_synchronized(protocol);
        Ok(())
    }

    fn slaves(&self, master: NodeId) -> Vec<NodeId> {
        self.nodes().iter().map(|n| n.id()).filter(|&id| id != master).collect()
    }

    // Each slave exchanges one light round trip directly with the master.
    fn einstein(&mut self, master: NodeId) -> Result<(), SimError> {
        let start = self.now();
        let mut queue = EventQueue::new();
        for slave in self.slaves(master) {
            let out = self.propagate_at(start, master, slave, SignalKind::Light)?;
            let master_emit = self.node(master)?.reading(start);
            queue.push(out.absorb.t, Arrival::AtSlave { slave, master_emit });
        }
        let mut last = start;
        while let Some((t, arrival)) = queue.pop() {
            last = t;
            match arrival {
                Arrival::AtSlave { slave, master_emit } => {
                    let slave_raw = self.node(slave)?.raw_reading(t);
                    let back = self.propagate_at(t, slave, master, SignalKind::Light)?;
                    queue.push(
                        back.absorb.t,
                        Arrival::AtMaster {
                            slave,
                            master_emit,
                            slave_raw,
                        },
                    );
                }
                Arrival::AtMaster {
                    slave,
                    master_emit,
                    slave_raw,
                } => {
                    let master_absorb = self.node(master)?.reading(t);
                    let midpoint = 0.5 * (master_emit + master_absorb);
                    self.set_offset(slave, midpoint - slave_raw);
                }
            }
        }
        self.advance_to(last);
        Ok(())
    }

    fn superluminal(&mut self, master: NodeId) -> Result<(), SimError> {
        let start = self.now();
        let master_reading = self.node(master)?.reading(start);
        for slave in self.slaves(master) {
            let rec = self.propagate_at(start, master, slave, SignalKind::Instantaneous)?;
            let slave_raw = self.node(slave)?.raw_reading(rec.absorb.t);
            self.set_offset(slave, master_reading - slave_raw);
        }
        Ok(())
    }

    // A rest-frame lattice is Einstein-synchronized, then each moving clock
    // copies the reference clock it is passing, scaled by its own rate. The
    // epoch is chosen so the master's reading does not change.
    fn external_regulation(&mut self, master: NodeId) -> Result<(), SimError> {
        let start = self.now();
        let beta = self.beta();
        let min_gap = self
            .nodes()
            .windows(2)
            .map(|w| w[1].xi0() - w[0].xi0())
            .fold(f64::INFINITY, f64::min);
        // stagger coincidences so they are not simultaneous; keeps reference
        // positions increasing since |beta| stride < min_gap
        let stride = 0.5 * min_gap;
        let coincidences: Vec<f64> = (0..self.nodes().len())
            .map(|i| start + stride * i as f64)
            .collect();
        let ref_positions: Vec<f64> = self
            .nodes()
            .iter()
            .zip(&coincidences)
            .map(|(n, &t)| n.position_at(t, beta))
            .collect();
        let ref_phases: Vec<f64> = self.nodes().iter().map(|n| n.phase()).collect();
        let mut reference = ClockLattice::new(0.0, &ref_positions)?.with_phases(&ref_phases)?;
        reference.set_now(start)?;
        reference.einstein(master)?;

        let rate = self.node(master)?.rate();
        let t_master = coincidences[master.0];
        let epoch = self.node(master)?.reading(t_master) - rate * reference.node(master)?.reading(t_master);
        for slave in self.slaves(master) {
            let t = coincidences[slave.0];
            let copied = epoch + rate * reference.node(slave)?.reading(t);
            let raw = self.node(slave)?.raw_reading(t);
            self.set_offset(slave, copied - raw);
        }
        let end = coincidences.iter().copied().fold(reference.now(), f64::max);
        self.advance_to(end);
        Ok(())
    }
}
