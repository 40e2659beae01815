//! Compact quantum-density solitons and their barrier phenomenology.
//!
//! The library constructs the compact cos^2 traveling density wave, verifies
//! by finite differences that it solves the quantum-hydrodynamic equations,
//! and evaluates its barrier predictions: wall matching and resonant
//! tunneling, traversal/tunneling times with the indeterminacy bound they
//! imply, and Josephson-style lossless conduction with flux quantization. An
//! independent linear-Schrodinger oracle (closed-form transmission, transfer
//! matrix, Wigner phase time) provides the reference the soliton model is
//! contrasted against.
//!
//! Numeric kernels are generic over the scalar type through [`Real`]
//! (`f32` or `f64`); the `*64`/`*32` aliases at the crate root pick a width.

pub mod chronometry;
pub mod defaults;
mod error;
pub mod junction;
pub mod oracle;
pub mod phys;
mod real;
pub mod scattering;
pub mod soliton;

pub use error::{Error, Result};
pub use real::Real;

pub use chronometry::{
    arrival_time, min_transmitted_distance, traversal_time, tunneling_time, uncertainty_product,
    TunnelingReport, UncertaintyRecord,
};
pub use junction::{
    flux_from_quantum_number, lossless_condition, quantize_loop, transmitted_number_density,
    FluxRecord, JunctionState, LosslessCheck,
};
pub use oracle::{
    analytic_transmission, compare_report, oracle_at, transfer_matrix_amplitude,
    transfer_matrix_coefficients, wigner_phase_time, ComparisonRecord, OracleResult, WignerTime,
};
pub use phys::{
    de_broglie_wavelength, wavenumber, Barrier, ParticleState, PhysicalContext, Regime, UnitSystem,
};
pub use scattering::{
    is_resonant, resonance_energies, solve_regions, ResonanceCheck, ScatteringSetup,
    ScatteringSolution,
};
pub use soliton::{quantum_potential, DensityField, Soliton};

// Double-precision aliases: the default working width.
pub type PhysicalContext64 = phys::PhysicalContext<f64>;
pub type Barrier64 = phys::Barrier<f64>;
pub type ParticleState64 = phys::ParticleState<f64>;
pub type Soliton64 = soliton::Soliton<f64>;
pub type DensityField64 = soliton::DensityField<f64>;
pub type ScatteringSetup64 = scattering::ScatteringSetup<f64>;
pub type ScatteringSolution64 = scattering::ScatteringSolution<f64>;
pub type TunnelingReport64 = chronometry::TunnelingReport<f64>;
pub type UncertaintyRecord64 = chronometry::UncertaintyRecord<f64>;
pub type JunctionState64 = junction::JunctionState<f64>;
pub type FluxRecord64 = junction::FluxRecord<f64>;
pub type OracleResult64 = oracle::OracleResult<f64>;
pub type ComparisonRecord64 = oracle::ComparisonRecord<f64>;

// Single-precision aliases.
pub type PhysicalContext32 = phys::PhysicalContext<f32>;
pub type Barrier32 = phys::Barrier<f32>;
pub type ParticleState32 = phys::ParticleState<f32>;
pub type Soliton32 = soliton::Soliton<f32>;
pub type DensityField32 = soliton::DensityField<f32>;
pub type ScatteringSetup32 = scattering::ScatteringSetup<f32>;
pub type ScatteringSolution32 = scattering::ScatteringSolution<f32>;
pub type TunnelingReport32 = chronometry::TunnelingReport<f32>;
pub type UncertaintyRecord32 = chronometry::UncertaintyRecord<f32>;
pub type JunctionState32 = junction::JunctionState<f32>;
pub type FluxRecord32 = junction::FluxRecord<f32>;
pub type OracleResult32 = oracle::OracleResult<f32>;
pub type ComparisonRecord32 = oracle::ComparisonRecord<f32>;
