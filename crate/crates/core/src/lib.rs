//! Synchrony-convention-aware special-relativity kinematics.
//!
//! The crate has three layers:
//!
//! * [`kinematics`]: closed-form Edwards, Lorentz and absolute-simultaneity
//!   transforms, resynchronization maps, one-way speeds and velocity mapping.
//!   Every transform reduces to a [`kinematics::TransformCoeffs`] acting on
//!   the `(t, x)` plane.
//! * [`syncsim`]: an exact discrete-event simulator of clock lattices carried
//!   by a moving frame, with ground truth kept in the absolute frame's chart.
//! * [`probe`]: the collapse-time model and the estimator that locates the
//!   frame in which collapse is fastest.
//!
//! Natural units (`c = 1`) are used throughout. The crate is `no_std` and
//! only needs `alloc`.

#![no_std]
#![deny(missing_docs)]
// `!(x > 0.0)` guards are deliberate: they reject NaN as well
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod kinematics;
pub mod probe;
pub mod syncsim;
pub mod units;

pub(crate) mod math;
