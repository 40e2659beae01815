//! Default tolerances and grid sizes shared by the library and the CLI.
//!
//! All of them sit well below discretization error yet above double-precision
//! noise for desk-scale parameters.

/// Residual below which a resonance condition counts as satisfied.
pub const RESONANCE_TOL: f64 = 1e-9;

/// |cos(k a)| below this floor is treated as a matching singularity.
pub const SINGULARITY_FLOOR: f64 = 1e-12;

/// Tolerance for exact-identity checks.
pub const EQUALITY_TOL: f64 = 1e-12;

/// Grid resolution for residual verification.
pub const GRID_POINTS: usize = 2048;

/// Time step of the continuity-residual stencil.
pub const RESIDUAL_DT: f64 = 1e-4;
