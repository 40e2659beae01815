//! Crate-wide error type.
//!
//! Diagnostic payloads are widened to `f64` so the enum stays independent of
//! the scalar type the computation ran at.

use thiserror::Error;

/// Result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A constructor or operation argument violated a type invariant.
    #[error("invalid {name} = {value}: {reason}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },

    /// E <= V leaves no real wavenumber, hence no compact soliton and no
    /// finite wavelength.
    #[error("degenerate energy: E = {energy} does not exceed V = {potential}")]
    DegenerateEnergy { energy: f64, potential: f64 },

    /// Too few samples for the requested finite-difference stencil.
    #[error("insufficient grid: got {got} samples, need at least {need}")]
    InsufficientGrid { got: usize, need: usize },

    /// Every stencil touched the support boundary, so the quantum potential
    /// is undefined everywhere on the grid.
    #[error("zero density: no stencil clears the positivity floor {floor}")]
    ZeroDensity { floor: f64 },

    /// A wall-matching denominator cos(k a) vanished.
    #[error("matching singularity: |cos(k a)| = {value} below floor {floor}")]
    MatchingSingularity { value: f64, floor: f64 },

    /// The operation is defined only in one barrier regime.
    #[error("regime mismatch: operation requires the {required} regime, setup is {found}")]
    RegimeMismatch {
        required: &'static str,
        found: &'static str,
    },

    /// The arrival-time bracket left the arccos domain.
    #[error("arccos argument {argument} lies outside [-1, 1]")]
    ArccosDomain { argument: f64 },

    /// delta_x < pi/delta_k: the minimum transmitted distance is violated.
    #[error("indeterminacy bound violated: delta_x = {delta_x} < pi/delta_k = {bound}")]
    BoundViolation { delta_x: f64, bound: f64 },

    /// A finite-difference energy window crossed the barrier height.
    #[error("energy window [{lo}, {hi}] straddles the barrier height {v0}")]
    RegimeStraddle { lo: f64, hi: f64, v0: f64 },
}
