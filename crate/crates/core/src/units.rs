//! Physical constants used at the edges of the crate.
//!
//! All kinematics runs with `c = 1`. These values only matter when results
//! are displayed in SI units or when the collapse-time model needs absolute
//! scales.

/// Speed of light in vacuum, m/s (exact).
pub const SPEED_OF_LIGHT_SI: f64 = 299_792_458.0;

/// Reduced Planck constant, J s (exact since the 2019 SI redefinition).
pub const HBAR_SI: f64 = 1.054_571_817e-34;

/// Reduced Planck constant, eV s.
pub const HBAR_EV: f64 = 6.582_119_569e-16;

/// Elementary charge, C (exact). Converts eV to J.
pub const ELECTRON_VOLT_SI: f64 = 1.602_176_634e-19;

/// Default Planck energy, eV (1.22e19 GeV).
pub const PLANCK_ENERGY_EV: f64 = 1.22e28;

/// Default Planck energy, J.
pub const PLANCK_ENERGY_SI: f64 = PLANCK_ENERGY_EV * ELECTRON_VOLT_SI;
