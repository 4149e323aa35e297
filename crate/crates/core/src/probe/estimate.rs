use alloc::vec::Vec;

use crate::kinematics::{map_velocity, FrameSpec, KinematicsError};
use crate::math::gamma;

use super::{parabolic_vertex, CollapseSample, ProbeError};

/// How lab and candidate velocities are composed.
pub const COMPOSITION_RULE: &str = "relativistic (u - b)/(1 - u b) via Lorentz legs";

/// Result of [`estimate_absolute_frame`].
#[derive(Debug, Clone, PartialEq)]
pub struct FitReport {
    /// Estimated velocity of the absolute frame in the lab's reference
    /// chart, after parabolic refinement.
    pub beta_hat: f64,
    /// Grid point with the smallest residual.
    pub grid_beta: f64,
    /// Index of `grid_beta` in the grid.
    pub grid_index: usize,
    /// True when the parabolic step moved the estimate off the grid point.
    pub refined: bool,
    /// Fitted scale `A` (in units of `t_c ΔE^2`) at `grid_beta`.
    pub scale: f64,
    /// `(candidate, residual)` for every grid point, in grid order.
    pub residuals: Vec<(f64, f64)>,
    /// Velocity composition used, see [`COMPOSITION_RULE`].
    pub composition: &'static str,
}

impl FitReport {
    /// Collapse time the fitted model predicts for spread `delta_e` seen
    /// from lab velocity `u`.
    pub fn predict(&self, delta_e: f64, u: f64) -> Result<f64, ProbeError> {
        let candidate = FrameSpec::einstein("candidate", self.beta_hat)?;
        let g = relative_gamma(u, &candidate)?;
        Ok(self.scale * g / (delta_e * delta_e))
    }
}

/// `min, min + step, ...` up to `max` (inclusive, with a small slack for
/// rounding). Points are computed as `min + i step` so they do not drift.
pub fn uniform_grid(min: f64, max: f64, step: f64) -> Vec<f64> {
    if !(step > 0.0) || !(max >= min) || !min.is_finite() || !max.is_finite() {
        return Vec::new();
    }
    let n = libm::floor((max - min) / step + 1e-9) as usize;
    (0..=n).map(|i| min + step * i as f64).collect()
}

fn relative_gamma(u: f64, candidate: &FrameSpec) -> Result<f64, ProbeError> {
    let speed = map_velocity(u, &FrameSpec::absolute(), candidate)?;
    let w = speed.finite().ok_or(ProbeError::Kinematics(KinematicsError::NonFinite))?;
    Ok(gamma(w))
}

/// Locates the frame in which collapse is fastest.
///
/// Samples are normalized to `y = t_c ΔE^2`. For each candidate `b` the model
/// `A gamma(u ⊖ b)` is fitted by weighted least squares in `A` (weights
/// `1/sigma^2` when every sample carries a positive sigma); the candidate
/// with the smallest residual is refined with one parabolic step through its
/// neighbours.
pub fn estimate_absolute_frame(samples: &[CollapseSample], grid: &[f64]) -> Result<FitReport, ProbeError> {
    if samples.len() < 3 {
        return Err(ProbeError::TooFewSamples { count: samples.len() });
    }
    for (i, s) in samples.iter().enumerate() {
        s.validate(i)?;
    }
    let mut velocities: Vec<f64> = samples.iter().map(|s| s.beta).collect();
    velocities.sort_by(f64::total_cmp);
    velocities.dedup();
    if velocities.len() < 3 {
        return Err(ProbeError::IllConditioned {
            distinct: velocities.len(),
        });
    }
    if grid.is_empty()
        || grid.iter().any(|b| !(b.is_finite() && b.abs() < 1.0))
        || grid.windows(2).any(|w| w[1] <= w[0])
    {
        return Err(ProbeError::InvalidGrid);
    }

    let weighted = samples.iter().all(|s| s.sigma.is_some_and(|v| v > 0.0));
    let points: Vec<(f64, f64, f64)> = samples
        .iter()
        .map(|s| {
            let scale = s.delta_e * s.delta_e;
            let w = match s.sigma {
                Some(sigma) if weighted => {
                    let sd = sigma * scale;
                    1.0 / (sd * sd)
                }
                _ => 1.0,
            };
            (s.beta, s.t_c * scale, w)
        })
        .collect();

    let mut residuals = Vec::with_capacity(grid.len());
    let mut scales = Vec::with_capacity(grid.len());
    for &b in grid {
        let candidate = FrameSpec::einstein("candidate", b)?;
        let gammas = points
            .iter()
            .map(|&(u, _, _)| relative_gamma(u, &candidate))
            .collect::<Result<Vec<f64>, _>>()?;
        let (mut syg, mut sgg) = (0.0, 0.0);
        for (&(_, y, w), g) in points.iter().zip(&gammas) {
            syg += w * y * g;
            sgg += w * g * g;
        }
        let a = syg / sgg;
        let r: f64 = points
            .iter()
            .zip(&gammas)
            .map(|(&(_, y, w), g)| {
                let d = y - a * g;
                w * d * d
            })
            .sum();
        residuals.push((b, r));
        scales.push(a);
    }

    let grid_index = residuals
        .iter()
        .enumerate()
        .fold(0, |best, (i, &(_, r))| if r < residuals[best].1 { i } else { best });
    let grid_beta = grid[grid_index];
    let vertex = if grid_index > 0 && grid_index + 1 < grid.len() {
        let (x0, f0) = residuals[grid_index - 1];
        let (x1, f1) = residuals[grid_index];
        let (x2, f2) = residuals[grid_index + 1];
        parabolic_vertex(x0, f0, x1, f1, x2, f2)
    } else {
        None
    };
    let beta_hat = vertex.unwrap_or(grid_beta);
    Ok(FitReport {
        beta_hat,
        grid_beta,
        grid_index,
        refined: vertex.is_some_and(|v| v != grid_beta),
        scale: scales[grid_index],
        residuals,
        composition: COMPOSITION_RULE,
    })
}
