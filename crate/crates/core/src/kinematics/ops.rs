use alloc::string::String;

use super::{Direction, Event, FrameSpec, KinematicsError, LabeledEvent, Speed, TransformCoeffs};
use crate::math::sqrt;

pub(crate) fn check_beta(beta: f64) -> Result<(), KinematicsError> {
    if beta.is_finite() && beta.abs() < 1.0 {
        Ok(())
    } else {
        Err(KinematicsError::InvalidVelocity { beta })
    }
}

pub(crate) fn check_k(k: f64) -> Result<(), KinematicsError> {
    if k.is_finite() && k.abs() <= 1.0 {
        Ok(())
    } else {
        Err(KinematicsError::ConventionOutOfRange { k })
    }
}

/// Edwards normalization `1 / sqrt((1 + beta k)^2 - beta^2)`.
///
/// Equals the Lorentz factor when `k = 0`. Fails with
/// [`KinematicsError::DegenerateConvention`] when the radicand is not
/// positive.
pub fn eta(beta: f64, k: f64) -> Result<f64, KinematicsError> {
    check_beta(beta)?;
    check_k(k)?;
    let s = 1.0 + beta * k;
    // factored to limit cancellation near the degenerate boundary
    let radicand = (s - beta) * (s + beta);
    if radicand <= 0.0 {
        return Err(KinematicsError::DegenerateConvention { beta, k });
    }
    Ok(1.0 / sqrt(radicand))
}

/// Edwards transform of `e` from the absolute frame with synchrony `k` into
/// the frame moving at `beta` with synchrony `k_prime`.
///
/// `beta` is the velocity of the moving frame as read in the source chart.
pub fn edwards_transform(e: Event, beta: f64, k: f64, k_prime: f64) -> Result<Event, KinematicsError> {
    Ok(TransformCoeffs::edwards(beta, k, k_prime)?.apply(e.checked()?))
}

/// Standard boost; the `k = k' = 0` member of the Edwards family.
pub fn lorentz_transform(e: Event, beta: f64) -> Result<Event, KinematicsError> {
    edwards_transform(e, beta, 0.0, 0.0)
}

/// Transform into a frame moving at `beta` whose clocks keep absolute
/// simultaneity: `x' = (x - beta t)/sqrt(1 - beta^2)`, `t' = sqrt(1 - beta^2) t`.
///
/// Evaluated from the closed form rather than the Edwards coefficients, so
/// `t'` never depends on `x`.
pub fn superluminal_transform(e: Event, beta: f64) -> Result<Event, KinematicsError> {
    check_beta(beta)?;
    let e = e.checked()?;
    let root = sqrt(1.0 - beta * beta);
    Ok(Event {
        t: root * e.t,
        x: (e.x - beta * e.t) / root,
        y: e.y,
        z: e.z,
    })
}

/// Synchrony parameter `k' = beta (k^2 - 1) + k` of the moving frame that
/// makes the `x` weight of `t'` vanish, i.e. keeps the source chart's
/// simultaneity.
pub fn induced_synchrony(k: f64, beta: f64) -> Result<f64, KinematicsError> {
    check_beta(beta)?;
    check_k(k)?;
    let k_prime = beta * (k * k - 1.0) + k;
    if k_prime.abs() > 1.0 {
        return Err(KinematicsError::ConventionOutOfRange { k: k_prime });
    }
    Ok(k_prime)
}

/// One-way light speed in a chart with synchrony `k`: `1/(1 - k)` along `+x`,
/// `1/(1 + k)` along `-x`. A vanishing denominator gives [`Speed::Infinite`].
pub fn one_way_speed(k: f64, direction: Direction) -> Result<Speed, KinematicsError> {
    check_k(k)?;
    let denom = 1.0 - direction.sign() * k;
    if denom == 0.0 {
        Ok(Speed::Infinite)
    } else {
        Ok(Speed::Finite(1.0 / denom))
    }
}

/// Re-sets clocks within one frame from synchrony `k_from` to `k_to`:
/// `t -> t + (k_from - k_to) x`.
pub fn resynchronize(e: Event, k_from: f64, k_to: f64) -> Result<Event, KinematicsError> {
    Ok(TransformCoeffs::resynchronization(k_from, k_to)?.apply(e.checked()?))
}

/// Velocity of a frame moving at `beta` in the source chart with synchrony
/// `k`, as read with Einstein-synchronized clocks: `beta / (1 + beta k)`.
///
/// With it, `edwards_transform(e, beta, k, k')` factors as
/// `resynchronize(0 -> k') ∘ lorentz(einstein_velocity(beta, k)) ∘ resynchronize(k -> 0)`.
pub fn einstein_velocity(beta: f64, k: f64) -> Result<f64, KinematicsError> {
    eta(beta, k)?;
    Ok(beta / (1.0 + beta * k))
}

/// Moves a labelled event from `from`'s chart to `to`'s chart.
pub fn transform_between(
    e: &LabeledEvent,
    from: &FrameSpec,
    to: &FrameSpec,
) -> Result<LabeledEvent, KinematicsError> {
    if e.chart() != from.label() {
        return Err(KinematicsError::ChartMismatch {
            expected: String::from(from.label()),
            found: String::from(e.chart()),
        });
    }
    let image = from.transform_to(to)?.apply(e.event());
    LabeledEvent::new(image, to.label())
}

/// Coordinate velocity in `to`'s chart of the worldline `x = u t` drawn in
/// `from`'s chart.
///
/// `u = ±inf` denotes a signal that is instantaneous in `from`'s chart.
/// Returns [`Speed::Infinite`] when the image worldline has `dt' = 0`.
pub fn map_velocity(u: f64, from: &FrameSpec, to: &FrameSpec) -> Result<Speed, KinematicsError> {
    if u.is_nan() {
        return Err(KinematicsError::NonFinite);
    }
    let c = from.transform_to(to)?;
    // tangent (dt, dx) of the worldline
    let (dt, dx) = if u.is_infinite() {
        (0.0, u.signum())
    } else {
        (1.0, u)
    };
    let dt_image = c.a_tt * dt + c.a_tx * dx;
    let dx_image = c.a_xt * dt + c.a_xx * dx;
    if dt_image == 0.0 {
        Ok(Speed::Infinite)
    } else {
        Ok(Speed::Finite(dx_image / dt_image))
    }
}
