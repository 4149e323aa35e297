use alloc::vec::Vec;

use super::{ClockLattice, NodeId, Protocol, SignalKind, SimError};

/// Layout used to build one lattice per candidate velocity.
#[derive(Debug, Clone, PartialEq)]
pub struct LatticeTemplate {
    /// Positions along the rulers of the moving frame; strictly increasing.
    pub proper_positions: Vec<f64>,
    /// Optional raw clock phases, one per node.
    pub phases: Option<Vec<f64>>,
}

impl LatticeTemplate {
    /// Two clocks one unit apart.
    pub fn unit_pair() -> Self {
        LatticeTemplate {
            proper_positions: alloc::vec![0.0, 1.0],
            phases: None,
        }
    }

    /// Builds the lattice for velocity `beta`.
    pub fn build(&self, beta: f64) -> Result<ClockLattice, SimError> {
        let lat = ClockLattice::from_proper_positions(beta, &self.proper_positions)?;
        match &self.phases {
            Some(p) => lat.with_phases(p),
            None => Ok(lat),
        }
    }
}

/// One-way light speeds measured in one candidate frame.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AnisotropyRow {
    /// Candidate velocity relative to the absolute frame.
    pub beta: f64,
    /// Measured light speed along `+x`.
    pub c_plus: f64,
    /// Measured light speed along `-x`.
    pub c_minus: f64,
    /// `c_plus - c_minus`.
    pub anisotropy: f64,
}

/// For each candidate velocity, synchronizes a fresh lattice with
/// instantaneous signals and measures light across it both ways.
///
/// The absolute frame is where the anisotropy vanishes.
pub fn isotropy_scan(betas: &[f64], template: &LatticeTemplate) -> Result<Vec<AnisotropyRow>, SimError> {
    betas
        .iter()
        .map(|&beta| {
            let mut lat = template.build(beta)?;
            let first = NodeId(0);
            let last = NodeId(lat.nodes().len() - 1);
            lat.run_protocol(Protocol::Superluminal, first)?;
            let c_plus = lat.measure_one_way(first, last, SignalKind::Light)?.speed.as_f64();
            let c_minus = lat.measure_one_way(last, first, SignalKind::Light)?.speed.as_f64();
            Ok(AnisotropyRow {
                beta,
                c_plus,
                c_minus,
                anisotropy: c_plus - c_minus,
            })
        })
        .collect()
}

/// Row with the smallest `|anisotropy|`; the first one wins ties.
pub fn argmin_abs_anisotropy(rows: &[AnisotropyRow]) -> Option<&AnisotropyRow> {
    rows.iter().fold(None, |best: Option<&AnisotropyRow>, row| match best {
        Some(b) if b.anisotropy.abs() <= row.anisotropy.abs() => Some(b),
        _ => Some(row),
    })
}
