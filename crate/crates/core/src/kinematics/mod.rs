//! Transformation algebra between synchrony charts.
//!
//! A chart is fixed by a frame's velocity `beta` relative to the absolute
//! frame `S` and by its Edwards synchrony parameter `k`, which sets the
//! one-way light speeds `c/(1 - k)` along `+x` and `c/(1 + k)` along `-x`.
//! `k = 0` is Einstein synchrony.
//!
//! All boosts are along `x`; `y` and `z` pass through untouched.

mod coeffs;
mod error;
mod event;
mod frame;
mod ops;
mod speed;

pub use self::coeffs::TransformCoeffs;
pub use self::error::KinematicsError;
pub use self::event::{Event, LabeledEvent};
pub use self::frame::{FrameRegistry, FrameSpec, ABSOLUTE_LABEL};
pub use self::ops::{
    edwards_transform, einstein_velocity, eta, induced_synchrony, lorentz_transform, map_velocity,
    one_way_speed, resynchronize, superluminal_transform, transform_between,
};
pub use self::speed::{Direction, Speed};

pub(crate) use self::ops::check_beta;
