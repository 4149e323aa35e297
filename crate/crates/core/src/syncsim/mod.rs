//! Discrete-event simulation of clock-synchronization protocols.
//!
//! A [`ClockLattice`] is a row of clocks riding on a frame that moves at
//! `beta` along `x`. Ground truth lives in the absolute frame's chart: node
//! `i` follows `x(t) = xi0 + beta t` and its raw clock reads
//! `phase + sqrt(1 - beta^2) t`. Signals are scheduled exactly by
//! intersecting straight worldlines.
//!
//! Instantaneous signals are instantaneous in the absolute chart. Everything
//! else (which synchrony a protocol induces, what one-way speeds come out)
//! follows from that choice and from literal signal exchange.

mod error;
mod lattice;
mod measure;
mod protocol;
mod scan;
mod schedule;
mod signal;

pub use self::error::SimError;
pub use self::lattice::{ClockLattice, ClockNode, NodeId};
pub use self::measure::{MeasuredDirection, SpeedMeasurement};
pub use self::protocol::{Protocol, UnknownProtocol};
pub use self::scan::{argmin_abs_anisotropy, isotropy_scan, AnisotropyRow, LatticeTemplate};
pub use self::schedule::EventQueue;
pub use self::signal::{SignalKind, SignalRecord};
