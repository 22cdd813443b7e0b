//! Material maps sampled on the field lattice.

use crate::error::OperatorError;
use crate::fdfd::grid::GridSpec;
use crate::units::{complex_rel_permittivity, C64};

/// Relative permittivity and conductivity, one value per field sample.
///
/// For TM grids this is one value per cell (at the cell centre); for TE
/// grids each of the two edge components carries the value at its own
/// sample position, stored in the same block layout the field uses.
/// Permeability is fixed at the free-space value.
#[derive(Debug, Clone)]
pub struct MediumMap {
    pub eps_rel: Vec<f64>,
    pub sigma: Vec<f64>,
    pub mu_rel: f64,
}

impl MediumMap {
    /// Homogeneous medium over the whole lattice (PML bands included).
    pub fn homogeneous(grid: &GridSpec, eps_rel: f64, sigma: f64) -> Self {
        assert!(eps_rel >= 1.0 && sigma >= 0.0);
        let n = grid.n_samples();
        MediumMap { eps_rel: vec![eps_rel; n], sigma: vec![sigma; n], mu_rel: 1.0 }
    }

    pub fn len(&self) -> usize {
        self.eps_rel.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eps_rel.is_empty()
    }

    pub fn matches(&self, grid: &GridSpec) -> Result<(), OperatorError> {
        if self.eps_rel.len() != grid.n_samples() || self.sigma.len() != grid.n_samples() {
            return Err(OperatorError::DimensionMismatch(format!(
                "medium has {} samples, grid needs {}",
                self.eps_rel.len(),
                grid.n_samples()
            )));
        }
        Ok(())
    }

    /// Complex relative permittivity ε_r − iσ/(ωε₀) at sample `k`.
    #[inline]
    pub fn complex_eps(&self, k: usize, freq_hz: f64) -> C64 {
        complex_rel_permittivity(self.eps_rel[k], self.sigma[k], freq_hz)
    }

    pub fn max_eps_rel(&self) -> f64 {
        self.eps_rel.iter().cloned().fold(1.0, f64::max)
    }
}
