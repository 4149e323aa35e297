//! Float helpers that `core` does not provide.

#[inline]
pub(crate) fn sqrt(v: f64) -> f64 {
    libm::sqrt(v)
}

/// Lorentz factor. Callers validate `|beta| < 1`.
#[inline]
pub(crate) fn gamma(beta: f64) -> f64 {
    1.0 / sqrt((1.0 - beta) * (1.0 + beta))
}
