use crate::kinematics::check_beta;
use crate::math::gamma;
use crate::units::{HBAR_EV, HBAR_SI, PLANCK_ENERGY_EV, PLANCK_ENERGY_SI};

use super::ProbeError;

/// Unit system of a [`CollapseModel`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnitSystem {
    /// ħ in eV s, energies in eV, times in s.
    ElectronVolt,
    /// ħ in J s, energies in J, times in s.
    Si,
}

impl UnitSystem {
    /// Tag used in reports.
    pub fn name(&self) -> &'static str {
        match self {
            UnitSystem::ElectronVolt => "eV",
            UnitSystem::Si => "SI",
        }
    }
}

/// Constants of the collapse-time formula.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CollapseModel {
    hbar: f64,
    planck_energy: f64,
    units: UnitSystem,
}

impl CollapseModel {
    /// Custom constants; both must be positive and finite.
    pub fn new(hbar: f64, planck_energy: f64, units: UnitSystem) -> Result<Self, ProbeError> {
        let ok = |v: f64| v.is_finite() && v > 0.0;
        if !ok(hbar) || !ok(planck_energy) {
            return Err(ProbeError::InvalidConstants);
        }
        Ok(CollapseModel {
            hbar,
            planck_energy,
            units,
        })
    }

    /// ħ in eV s with `E_p = 1.22e19 GeV`.
    pub fn electron_volt() -> Self {
        CollapseModel {
            hbar: HBAR_EV,
            planck_energy: PLANCK_ENERGY_EV,
            units: UnitSystem::ElectronVolt,
        }
    }

    /// ħ in J s with `E_p = 1.22e19 GeV` in joules.
    pub fn si() -> Self {
        CollapseModel {
            hbar: HBAR_SI,
            planck_energy: PLANCK_ENERGY_SI,
            units: UnitSystem::Si,
        }
    }

    /// Reduced Planck constant.
    pub fn hbar(&self) -> f64 {
        self.hbar
    }

    /// Planck energy.
    pub fn planck_energy(&self) -> f64 {
        self.planck_energy
    }

    /// Unit system tag.
    pub fn units(&self) -> UnitSystem {
        self.units
    }
}

impl Default for CollapseModel {
    fn default() -> Self {
        Self::electron_volt()
    }
}

/// `gamma(beta) ħ E_p / ΔE^2`.
pub fn collapse_time(model: &CollapseModel, delta_e: f64, beta: f64) -> Result<f64, ProbeError> {
    if !(delta_e.is_finite() && delta_e > 0.0) {
        return Err(ProbeError::NonPositiveEnergy(delta_e));
    }
    check_beta(beta)?;
    Ok(gamma(beta) * model.hbar * model.planck_energy / (delta_e * delta_e))
}

/// One observed collapse time.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CollapseSample {
    /// Energy spread.
    pub delta_e: f64,
    /// Lab velocity relative to a reference frame.
    pub beta: f64,
    /// Observed collapse time.
    pub t_c: f64,
    /// Measurement noise scale on `t_c`, if known.
    pub sigma: Option<f64>,
}

impl CollapseSample {
    /// Validated sample.
    pub fn new(delta_e: f64, beta: f64, t_c: f64, sigma: Option<f64>) -> Result<Self, ProbeError> {
        let s = CollapseSample {
            delta_e,
            beta,
            t_c,
            sigma,
        };
        s.validate(0)?;
        Ok(s)
    }

    pub(crate) fn validate(&self, index: usize) -> Result<(), ProbeError> {
        if !(self.delta_e.is_finite() && self.delta_e > 0.0) {
            return Err(ProbeError::NonPositiveEnergy(self.delta_e));
        }
        check_beta(self.beta)?;
        let sigma_ok = self.sigma.is_none_or(|s| s.is_finite() && s >= 0.0);
        if !(self.t_c.is_finite() && self.t_c > 0.0) || !sigma_ok {
            return Err(ProbeError::InvalidSample { index });
        }
        Ok(())
    }
}
