use alloc::string::String;

use super::KinematicsError;

/// A spacetime point `(t, x, y, z)` in natural units.
///
/// The chart is tracked separately by [`LabeledEvent`]; the raw transforms
/// work on bare coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Event {
    /// Coordinate time.
    pub t: f64,
    /// Coordinate along the boost axis.
    pub x: f64,
    /// Transverse coordinate.
    pub y: f64,
    /// Transverse coordinate.
    pub z: f64,
}

impl Event {
    /// Builds an event from its components.
    pub const fn new(t: f64, x: f64, y: f64, z: f64) -> Self {
        Event { t, x, y, z }
    }

    /// An event on the boost axis.
    pub const fn tx(t: f64, x: f64) -> Self {
        Event { t, x, y: 0.0, z: 0.0 }
    }

    /// True when every component is finite.
    pub fn is_finite(&self) -> bool {
        self.t.is_finite() && self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }

    pub(crate) fn checked(self) -> Result<Self, KinematicsError> {
        if self.is_finite() {
            Ok(self)
        } else {
            Err(KinematicsError::NonFinite)
        }
    }
}

/// An [`Event`] together with the label of the chart it is expressed in.
#[derive(Debug, Clone, PartialEq)]
pub struct LabeledEvent {
    event: Event,
    chart: String,
}

impl LabeledEvent {
    /// Fails on non-finite components or an empty label.
    pub fn new(event: Event, chart: impl Into<String>) -> Result<Self, KinematicsError> {
        let chart = chart.into();
        if chart.is_empty() {
            return Err(KinematicsError::EmptyChart);
        }
        Ok(LabeledEvent {
            event: event.checked()?,
            chart,
        })
    }

    /// The coordinates.
    pub fn event(&self) -> Event {
        self.event
    }

    /// The chart label.
    pub fn chart(&self) -> &str {
        &self.chart
    }
}
