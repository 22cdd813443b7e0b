//! Error types shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum GridError {
    #[error(
        "mesh too coarse: delta = {delta} m exceeds lambda0/(15*sqrt(max_eps)) = {limit} m \
         (lambda0 = {lambda0} m, max_eps = {max_eps})"
    )]
    MeshTooCoarse {
        delta: f64,
        limit: f64,
        lambda0: f64,
        max_eps: f64,
    },
    #[error("degenerate extent: {0}")]
    DegenerateExtent(String),
    #[error("grid too small: need at least 4x4 cells, got {nx}x{ny}")]
    TooFewCells { nx: usize, ny: usize },
    #[error("pml_cells must be at least 4, got {0}")]
    TooFewPmlCells(usize),
    #[error("frequency must be positive, got {0} Hz")]
    NonPositiveFrequency(f64),
}

#[derive(Debug, Error)]
pub enum OperatorError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("stiffness matrix is singular or could not be factorized")]
    SingularStiffness,
    #[error("station {index} at ({x}, {y}) lies inside the inversion domain")]
    StationInsideDomain { index: usize, x: f64, y: f64 },
    #[error("station {index} at ({x}, {y}) lies in the PML band or outside the grid")]
    StationInPml { index: usize, x: f64, y: f64 },
    #[error("source {index} at ({x}, {y}) lies in the PML band or outside the grid")]
    SourceInPml { index: usize, x: f64, y: f64 },
    #[error("measurement matrix is rank deficient (sigma_min below machine scale)")]
    RankDeficient,
    #[error(transparent)]
    Grid(#[from] GridError),
}

#[derive(Debug, Error)]
pub enum SceneError {
    #[error("scene geometry extends outside the grid extent")]
    SceneOutsideGrid,
    #[error("true contrast is identically zero; reconstruction error is undefined")]
    ZeroTrueContrast,
    #[error("invalid shape: {0}")]
    InvalidShape(String),
}

#[derive(Debug, Error)]
pub enum InversionError {
    #[error("all measured data vectors are zero; cannot initialize contrast sources")]
    ZeroData,
    #[error("zero curvature along the search direction (nu = 0); iteration has converged")]
    ZeroCurvature,
    #[error("non-finite value encountered at iteration {iteration} in {term}")]
    NonFinite { iteration: usize, term: String },
    #[error(transparent)]
    Operator(#[from] OperatorError),
}

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("bad file format: {0}")]
    Malformed(String),
    #[error("manifest mismatch: {0}")]
    ManifestMismatch(String),
}
