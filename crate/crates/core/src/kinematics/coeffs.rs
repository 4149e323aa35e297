use super::ops::{check_beta, check_k, eta};
use super::{Event, KinematicsError};

/// Linear map on the `(t, x)` plane; `y` and `z` pass through.
///
/// ```text
/// t' = a_tt t + a_tx x
/// x' = a_xt t + a_xx x
/// ```
///
/// Every named transform in this module is a constructor of this type, so
/// composition and inversion are plain 2x2 matrix algebra.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TransformCoeffs {
    /// Weight of `t` in `t'`.
    pub a_tt: f64,
    /// Weight of `x` in `t'`.
    pub a_tx: f64,
    /// Weight of `t` in `x'`.
    pub a_xt: f64,
    /// Weight of `x` in `x'`.
    pub a_xx: f64,
}

impl TransformCoeffs {
    /// The identity map.
    pub const IDENTITY: TransformCoeffs = TransformCoeffs {
        a_tt: 1.0,
        a_tx: 0.0,
        a_xt: 0.0,
        a_xx: 1.0,
    };

    /// Edwards transform from the absolute frame with synchrony `k` into the
    /// frame moving at `beta` with synchrony `k_prime`.
    pub fn edwards(beta: f64, k: f64, k_prime: f64) -> Result<Self, KinematicsError> {
        check_k(k_prime)?;
        let h = eta(beta, k)?;
        Ok(TransformCoeffs {
            a_tt: h * (1.0 + beta * (k + k_prime)),
            a_tx: h * (beta * (k * k - 1.0) + k - k_prime),
            a_xt: -h * beta,
            a_xx: h,
        })
    }

    /// Lorentz boost: Edwards with `k = k' = 0`.
    pub fn lorentz(beta: f64) -> Result<Self, KinematicsError> {
        Self::edwards(beta, 0.0, 0.0)
    }

    /// Edwards with `k = 0` and `k' = -beta`, which keeps simultaneity
    /// absolute.
    pub fn superluminal(beta: f64) -> Result<Self, KinematicsError> {
        check_beta(beta)?;
        Self::edwards(beta, 0.0, -beta)
    }

    /// Clock re-setting within one frame: `t -> t + (k_from - k_to) x`.
    pub fn resynchronization(k_from: f64, k_to: f64) -> Result<Self, KinematicsError> {
        check_k(k_from)?;
        check_k(k_to)?;
        Ok(TransformCoeffs {
            a_tt: 1.0,
            a_tx: k_from - k_to,
            a_xt: 0.0,
            a_xx: 1.0,
        })
    }

    /// Determinant of the `(t, x)` block.
    pub fn det(&self) -> f64 {
        self.a_tt * self.a_xx - self.a_tx * self.a_xt
    }

    /// Applies the map.
    pub fn apply(&self, e: Event) -> Event {
        Event {
            t: self.a_tt * e.t + self.a_tx * e.x,
            x: self.a_xt * e.t + self.a_xx * e.x,
            y: e.y,
            z: e.z,
        }
    }

    /// `next ∘ self`: apply `self` first, then `next`.
    pub fn then(&self, next: &TransformCoeffs) -> TransformCoeffs {
        TransformCoeffs {
            a_tt: next.a_tt * self.a_tt + next.a_tx * self.a_xt,
            a_tx: next.a_tt * self.a_tx + next.a_tx * self.a_xx,
            a_xt: next.a_xt * self.a_tt + next.a_xx * self.a_xt,
            a_xx: next.a_xt * self.a_tx + next.a_xx * self.a_xx,
        }
    }

    /// The inverse map.
    pub fn inverse(&self) -> Result<TransformCoeffs, KinematicsError> {
        let det = self.det();
        if det == 0.0 || !det.is_finite() {
            return Err(KinematicsError::Singular);
        }
        Ok(TransformCoeffs {
            a_tt: self.a_xx / det,
            a_tx: -self.a_tx / det,
            a_xt: -self.a_xt / det,
            a_xx: self.a_tt / det,
        })
    }
}

impl Default for TransformCoeffs {
    fn default() -> Self {
        Self::IDENTITY
    }
}
