/// A coordinate speed or velocity that may be infinite.
///
/// Instantaneous propagation is a legitimate outcome of several operations
/// (one-way speeds at `|k| = 1`, signals that are instantaneous in the target
/// chart), so it is represented as a value rather than an error. Finite
/// values may be signed when they describe a velocity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Speed {
    /// A finite value in units of `c`.
    Finite(f64),
    /// Zero coordinate time elapses along the worldline.
    Infinite,
}

impl Speed {
    /// The finite value, if any.
    pub fn finite(self) -> Option<f64> {
        match self {
            Speed::Finite(v) => Some(v),
            Speed::Infinite => None,
        }
    }

    /// `f64::INFINITY` for [`Speed::Infinite`].
    pub fn as_f64(self) -> f64 {
        match self {
            Speed::Finite(v) => v,
            Speed::Infinite => f64::INFINITY,
        }
    }

    /// True for [`Speed::Infinite`].
    pub fn is_infinite(self) -> bool {
        matches!(self, Speed::Infinite)
    }
}

/// Propagation direction along the boost axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    /// Towards increasing `x`.
    PlusX,
    /// Towards decreasing `x`.
    MinusX,
}

impl Direction {
    /// `+1.0` or `-1.0`.
    pub fn sign(self) -> f64 {
        match self {
            Direction::PlusX => 1.0,
            Direction::MinusX => -1.0,
        }
    }

    /// The opposite direction.
    pub fn reversed(self) -> Self {
        match self {
            Direction::PlusX => Direction::MinusX,
            Direction::MinusX => Direction::PlusX,
        }
    }
}
