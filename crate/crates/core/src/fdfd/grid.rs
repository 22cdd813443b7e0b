//! Uniform 2-D staggered grid description.
//!
//! The physical extent is discretized into `nx × ny` square cells of side
//! `delta`; `pml_cells` extra cells are appended outside the extent on every
//! side, so the total lattice is `(nx + 2p) × (ny + 2p)`. TM runs carry one
//! field sample per cell (Ez at the cell centre). TE runs carry two staggered
//! edge samples per cell: Ex at `(i+½, j)` and Ey at `(i, j+½)` in cell units.

use serde::{Deserialize, Serialize};

use crate::error::GridError;
use crate::units::wavelength;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Polarization {
    Tm,
    Te,
}

impl Polarization {
    /// Number of electric-field components carried per cell.
    pub fn components(self) -> usize {
        match self {
            Polarization::Tm => 1,
            Polarization::Te => 2,
        }
    }
}

impl std::fmt::Display for Polarization {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Polarization::Tm => write!(f, "TM"),
            Polarization::Te => write!(f, "TE"),
        }
    }
}

/// Axis-aligned rectangle in metres: `[x_min, x_max, y_min, y_max]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Rect {
    pub x_min: f64,
    pub x_max: f64,
    pub y_min: f64,
    pub y_max: f64,
}

impl Rect {
    pub fn new(x_min: f64, x_max: f64, y_min: f64, y_max: f64) -> Self {
        Rect { x_min, x_max, y_min, y_max }
    }

    pub fn from_array(a: [f64; 4]) -> Self {
        Rect::new(a[0], a[1], a[2], a[3])
    }

    pub fn width(&self) -> f64 {
        self.x_max - self.x_min
    }

    pub fn height(&self) -> f64 {
        self.y_max - self.y_min
    }

    pub fn contains(&self, x: f64, y: f64) -> bool {
        x > self.x_min && x < self.x_max && y > self.y_min && y < self.y_max
    }
}

/// Mesh criterion limit Δ ≤ λ₀ / (15 √ε_r,max).
pub fn mesh_limit(freq_hz: f64, max_eps_rel: f64) -> f64 {
    wavelength(freq_hz) / (15.0 * max_eps_rel.sqrt())
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GridSpec {
    /// Physical extent excluding the PML bands.
    pub extent: Rect,
    /// Uniform cell size Δ in metres.
    pub delta: f64,
    /// PML thickness in cells, added outside the extent on every side.
    pub pml_cells: usize,
    pub polarization: Polarization,
    /// Interior cell counts (excluding PML).
    pub nx: usize,
    pub ny: usize,
}

/// Builds a grid over `extent` and checks the FDFD mesh criterion
/// Δ ≤ λ₀/(15√ε_r,max) for the largest relative permittivity the grid
/// will have to represent.
pub fn build_grid(
    extent: Rect,
    delta: f64,
    pml_cells: usize,
    polarization: Polarization,
    freq_hz: f64,
    max_eps_rel: f64,
) -> Result<GridSpec, GridError> {
    if !(delta > 0.0) {
        return Err(GridError::DegenerateExtent(format!("delta must be positive, got {delta}")));
    }
    if extent.width() <= 0.0 || extent.height() <= 0.0 {
        return Err(GridError::DegenerateExtent(format!(
            "extent must be well ordered, got x [{}, {}], y [{}, {}]",
            extent.x_min, extent.x_max, extent.y_min, extent.y_max
        )));
    }
    if freq_hz <= 0.0 {
        return Err(GridError::NonPositiveFrequency(freq_hz));
    }
    let limit = mesh_limit(freq_hz, max_eps_rel.max(1.0));
    if delta > limit * (1.0 + 1e-12) {
        return Err(GridError::MeshTooCoarse {
            delta,
            limit,
            lambda0: wavelength(freq_hz),
            max_eps: max_eps_rel.max(1.0),
        });
    }
    let nx = (extent.width() / delta).round() as usize;
    let ny = (extent.height() / delta).round() as usize;
    if nx < 4 || ny < 4 {
        return Err(GridError::TooFewCells { nx, ny });
    }
    if pml_cells < 4 {
        return Err(GridError::TooFewPmlCells(pml_cells));
    }
    Ok(GridSpec { extent, delta, pml_cells, polarization, nx, ny })
}

impl GridSpec {
    /// Total cell count along x including PML bands.
    pub fn nx_tot(&self) -> usize {
        self.nx + 2 * self.pml_cells
    }

    pub fn ny_tot(&self) -> usize {
        self.ny + 2 * self.pml_cells
    }

    /// Number of cells in the total lattice.
    pub fn n_cells(&self) -> usize {
        self.nx_tot() * self.ny_tot()
    }

    /// Number of field unknowns (cells × components).
    pub fn n_samples(&self) -> usize {
        self.n_cells() * self.polarization.components()
    }

    /// Lower-left corner of the total lattice (PML included), metres.
    pub fn origin(&self) -> (f64, f64) {
        (
            self.extent.x_min - self.pml_cells as f64 * self.delta,
            self.extent.y_min - self.pml_cells as f64 * self.delta,
        )
    }

    /// Linear index of the cell `(i, j)` in the total lattice.
    #[inline]
    pub fn cell_index(&self, i: usize, j: usize) -> usize {
        j * self.nx_tot() + i
    }

    /// Linear index of field component `comp` of cell `(i, j)`.
    ///
    /// TE samples are stored as two stacked blocks: all Ex first, then all Ey.
    #[inline]
    pub fn sample_index(&self, comp: usize, i: usize, j: usize) -> usize {
        comp * self.n_cells() + self.cell_index(i, j)
    }

    /// Physical position of field sample `comp` of cell `(i, j)`.
    ///
    /// TM (comp 0): cell centre `(i+½, j+½)`. TE: Ex (comp 0) at `(i+½, j)`,
    /// Ey (comp 1) at `(i, j+½)`.
    pub fn sample_position(&self, comp: usize, i: usize, j: usize) -> (f64, f64) {
        let (x0, y0) = self.origin();
        let (fx, fy) = self.sample_offset(comp);
        (x0 + (i as f64 + fx) * self.delta, y0 + (j as f64 + fy) * self.delta)
    }

    /// Staggering offset of a component in cell units.
    pub fn sample_offset(&self, comp: usize) -> (f64, f64) {
        match (self.polarization, comp) {
            (Polarization::Tm, 0) => (0.5, 0.5),
            (Polarization::Te, 0) => (0.5, 0.0),
            (Polarization::Te, 1) => (0.0, 0.5),
            _ => panic!("invalid component {comp} for {:?}", self.polarization),
        }
    }

    /// True if the point lies strictly inside the physical extent with at
    /// least `margin_cells` cells of clearance from the PML interface.
    pub fn in_interior(&self, x: f64, y: f64, margin_cells: f64) -> bool {
        let m = margin_cells * self.delta;
        x > self.extent.x_min + m
            && x < self.extent.x_max - m
            && y > self.extent.y_min + m
            && y < self.extent.y_max - m
    }

    /// Grid for the same extent with every cell split `factor` times per
    /// axis. The PML keeps its physical thickness.
    pub fn refined(&self, factor: usize) -> GridSpec {
        assert!(factor >= 1);
        GridSpec {
            extent: self.extent,
            delta: self.delta / factor as f64,
            pml_cells: self.pml_cells * factor,
            polarization: self.polarization,
            nx: self.nx * factor,
            ny: self.ny * factor,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn paper_inversion_grid() {
        // [-1.5, 1.5]^2 at 30 mm: 100x100 cells, criterion satisfied for eps 3.5.
        let g = build_grid(
            Rect::new(-1.5, 1.5, -1.5, 1.5),
            0.030,
            10,
            Polarization::Tm,
            3.0e8,
            3.5,
        )
        .unwrap();
        assert_eq!((g.nx, g.ny), (100, 100));
        assert!(0.030 <= mesh_limit(3.0e8, 3.5));
    }

    #[test]
    fn mesh_criterion_rejects_coarse_grid() {
        let err = build_grid(
            Rect::new(-1.5, 1.5, -1.5, 1.5),
            0.050,
            10,
            Polarization::Tm,
            3.0e8,
            3.5,
        )
        .unwrap_err();
        assert!(matches!(err, GridError::MeshTooCoarse { .. }));
        // 0.050 > 1/(15*sqrt(3.5)) ~ 0.0356
        assert!((mesh_limit(3.0e8, 3.5) - 0.03563).abs() < 1e-4);
    }

    #[test]
    fn small_grid_cell_count() {
        let g = build_grid(
            Rect::new(-0.5, 0.5, -0.5, 0.5),
            0.0625,
            4,
            Polarization::Tm,
            3.0e8,
            1.0,
        )
        .unwrap();
        assert_eq!((g.nx, g.ny), (16, 16));
    }

    #[test]
    fn degenerate_extent_is_rejected() {
        let err = build_grid(
            Rect::new(0.5, -0.5, -0.5, 0.5),
            0.05,
            4,
            Polarization::Tm,
            3.0e8,
            1.0,
        )
        .unwrap_err();
        assert!(matches!(err, GridError::DegenerateExtent(_)));
    }

    #[test]
    fn te_has_two_components_per_cell() {
        let g = build_grid(
            Rect::new(-0.5, 0.5, -0.5, 0.5),
            0.05,
            4,
            Polarization::Te,
            3.0e8,
            1.0,
        )
        .unwrap();
        assert_eq!(g.n_samples(), 2 * g.n_cells());
        let (x, y) = g.sample_position(0, 0, 0);
        let (x0, y0) = g.origin();
        assert!((x - (x0 + 0.025)).abs() < 1e-15 && (y - y0).abs() < 1e-15);
    }

    #[test]
    fn refinement_keeps_extent_and_pml_thickness() {
        let g = build_grid(
            Rect::new(-0.5, 0.5, -0.5, 0.5),
            0.05,
            5,
            Polarization::Tm,
            3.0e8,
            1.0,
        )
        .unwrap();
        let r = g.refined(2);
        assert_eq!(r.nx, 2 * g.nx);
        assert_eq!(r.pml_cells, 2 * g.pml_cells);
        assert!((r.pml_cells as f64 * r.delta - g.pml_cells as f64 * g.delta).abs() < 1e-15);
        assert_eq!(r.origin(), g.origin());
    }
}
