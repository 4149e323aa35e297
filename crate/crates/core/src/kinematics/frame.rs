use alloc::collections::BTreeMap;
use alloc::string::String;

use super::ops::{check_beta, check_k, induced_synchrony};
use super::{KinematicsError, LabeledEvent, TransformCoeffs};

/// Label of the absolute frame in a fresh [`FrameRegistry`].
pub const ABSOLUTE_LABEL: &str = "S";

/// An inertial frame and the synchrony convention its clocks follow.
///
/// `beta` is the frame's velocity in the absolute frame's (Einstein) chart;
/// `k` is the Edwards parameter of the frame's own clocks. The absolute frame
/// is `beta = 0, k = 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct FrameSpec {
    label: String,
    beta: f64,
    k: f64,
}

impl FrameSpec {
    /// Validates `|beta| < 1`, `|k| <= 1` and a non-empty label.
    pub fn new(label: impl Into<String>, beta: f64, k: f64) -> Result<Self, KinematicsError> {
        let label = label.into();
        if label.is_empty() {
            return Err(KinematicsError::EmptyChart);
        }
        check_beta(beta)?;
        check_k(k)?;
        Ok(FrameSpec { label, beta, k })
    }

    /// The absolute frame, labelled [`ABSOLUTE_LABEL`].
    pub fn absolute() -> Self {
        FrameSpec {
            label: String::from(ABSOLUTE_LABEL),
            beta: 0.0,
            k: 0.0,
        }
    }

    /// A frame with Einstein-synchronized clocks.
    pub fn einstein(label: impl Into<String>, beta: f64) -> Result<Self, KinematicsError> {
        Self::new(label, beta, 0.0)
    }

    /// A frame whose clocks agree with the absolute frame on simultaneity.
    pub fn superluminal(label: impl Into<String>, beta: f64) -> Result<Self, KinematicsError> {
        check_beta(beta)?;
        Self::new(label, beta, induced_synchrony(0.0, beta)?)
    }

    /// Chart label.
    pub fn label(&self) -> &str {
        &self.label
    }

    /// Velocity relative to the absolute frame.
    pub fn beta(&self) -> f64 {
        self.beta
    }

    /// Edwards synchrony parameter.
    pub fn k(&self) -> f64 {
        self.k
    }

    /// Same frame with a different synchrony parameter.
    pub fn with_k(&self, k: f64) -> Result<Self, KinematicsError> {
        check_k(k)?;
        Ok(FrameSpec { k, ..self.clone() })
    }

    /// Map from the absolute chart into this frame's chart.
    pub fn from_absolute(&self) -> Result<TransformCoeffs, KinematicsError> {
        TransformCoeffs::edwards(self.beta, 0.0, self.k)
    }

    /// Map from this frame's chart into `to`'s chart, routed through the
    /// absolute frame.
    pub fn transform_to(&self, to: &FrameSpec) -> Result<TransformCoeffs, KinematicsError> {
        let back = self.from_absolute()?.inverse()?;
        Ok(back.then(&to.from_absolute()?))
    }
}

/// Named frames, seeded with the absolute frame.
#[derive(Debug, Clone)]
pub struct FrameRegistry {
    frames: BTreeMap<String, FrameSpec>,
}

impl FrameRegistry {
    /// A registry holding only the absolute frame.
    pub fn new() -> Self {
        let mut frames = BTreeMap::new();
        frames.insert(String::from(ABSOLUTE_LABEL), FrameSpec::absolute());
        FrameRegistry { frames }
    }

    /// Adds or replaces a frame. Returns the previous frame under that label.
    pub fn register(&mut self, frame: FrameSpec) -> Option<FrameSpec> {
        self.frames.insert(frame.label.clone(), frame)
    }

    /// Looks a frame up by label.
    pub fn get(&self, label: &str) -> Option<&FrameSpec> {
        self.frames.get(label)
    }

    /// Registered frames in label order.
    pub fn iter(&self) -> impl Iterator<Item = &FrameSpec> {
        self.frames.values()
    }

    /// Moves `e` into the chart labelled `to`.
    pub fn transform(&self, e: &LabeledEvent, to: &str) -> Result<LabeledEvent, KinematicsError> {
        let from = self
            .get(e.chart())
            .ok_or_else(|| KinematicsError::UnknownChart(String::from(e.chart())))?;
        let to = self
            .get(to)
            .ok_or_else(|| KinematicsError::UnknownChart(String::from(to)))?;
        super::transform_between(e, from, to)
    }
}

impl Default for FrameRegistry {
    fn default() -> Self {
        Self::new()
    }
}
