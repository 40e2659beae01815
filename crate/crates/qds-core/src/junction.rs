//! Josephson-style junction: transmitted number density through the
//! insulating layer, lossless-conduction conditions, and flux quantization.
//!
//! The superconductor-insulator-superconductor stack maps onto the barrier
//! problem with the electron number density as the quantum density. Writing
//! the lossless condition in momenta, (p1 - p2) * loop = +-n pi hbar for a
//! full loop of 2 pi, phase winding is quantized in units of pi and the
//! enclosed flux in units of pi hbar / q.

use crate::defaults;
use crate::error::{Error, Result};
use crate::phys::{PhysicalContext, Regime};
use crate::real::{lit, wide, Real};
use crate::scattering::{resonance_check, ScatteringSetup};

/// Junction configuration: the barrier plays the insulator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JunctionState<F> {
    setup: ScatteringSetup<F>,
    normalized: bool,
}

impl<F: Real> JunctionState<F> {
    /// Incident density amplitude 1.
    pub fn new(setup: ScatteringSetup<F>) -> Self {
        JunctionState {
            setup,
            normalized: false,
        }
    }

    /// Incident density normalized to integrate to 1 over one support width.
    pub fn normalized(setup: ScatteringSetup<F>) -> Self {
        JunctionState {
            setup,
            normalized: true,
        }
    }

    pub fn setup(&self) -> &ScatteringSetup<F> {
        &self.setup
    }

    pub fn is_normalized(&self) -> bool {
        self.normalized
    }

    /// rho1 such that the incident support integral is 1 when normalized.
    pub fn incident_amplitude(&self) -> F {
        if self.normalized {
            (self.setup.k1() + self.setup.k1()) / F::PI()
        } else {
            F::one()
        }
    }
}

/// Transmitted number density at (x, t): the wall-matching prefactor
/// D(k2 a)^2 / cos^2(k1 a) times the compactly supported traveling factor
/// cos^2(k1 (x - c t)).
pub fn transmitted_number_density<F: Real>(state: &JunctionState<F>, x: F, t: F) -> Result<F> {
    let s = state.setup();
    let a = s.barrier().width();
    let wall = (s.k1() * a).cos();
    if wall.abs() < lit(defaults::SINGULARITY_FLOOR) {
        return Err(Error::MatchingSingularity {
            value: wide(wall.abs()),
            floor: defaults::SINGULARITY_FLOOR,
        });
    }
    let k2a = s.k2() * a;
    let numerator = match s.regime() {
        Regime::Below => k2a.cosh(),
        _ => k2a.cos(),
    };
    let prefactor = (numerator / wall).powi(2);
    let phase = s.k1() * (x - s.particle().speed() * t);
    let traveling = if phase.abs() < F::FRAC_PI_2() {
        phase.cos().powi(2)
    } else {
        F::zero()
    };
    Ok(state.incident_amplitude() * prefactor * traveling)
}

/// Two-sided diagnostics of the lossless-conduction test.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LosslessCheck<F> {
    pub lossless: bool,
    pub lhs: F,
    pub rhs: F,
}

/// Lossless conduction across the junction.
///
/// Above the barrier this is the resonance condition (k1 - k2) a = +-n pi;
/// at and below the barrier height it is the two-sided equality
/// cos^2(k1 a) = cosh^2(k2 a), whose only real solutions sit at k2 = 0.
pub fn lossless_condition<F: Real>(state: &JunctionState<F>, tol: F) -> LosslessCheck<F> {
    let s = state.setup();
    let a = s.barrier().width();
    match s.regime() {
        Regime::Above => {
            let rc = resonance_check(s.k1(), s.k2(), a, tol);
            LosslessCheck {
                lossless: rc.resonant,
                lhs: ((s.k1() - s.k2()) * a).abs(),
                rhs: lit::<F>(rc.nearest_index as f64) * F::PI(),
            }
        }
        _ => {
            let lhs = (s.k1() * a).cos().powi(2);
            let rhs = (s.k2() * a).cosh().powi(2);
            LosslessCheck {
                lossless: (lhs - rhs).abs() <= tol,
                lhs,
                rhs,
            }
        }
    }
}

/// Phase winding and enclosed flux for a momentum pair around a loop.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FluxRecord<F> {
    pub p1: F,
    pub p2: F,
    pub loop_length: F,
    pub n: i64,
    pub flux: F,
    pub residual: F,
}

/// Quantize the loop phase winding (p1 - p2) * loop / hbar against n pi and
/// report the nearest integer, its residual, and the flux n pi hbar / q.
pub fn quantize_loop<F: Real>(
    p1: F,
    p2: F,
    loop_length: F,
    ctx: &PhysicalContext<F>,
) -> Result<FluxRecord<F>> {
    if !loop_length.is_finite() || loop_length <= F::zero() {
        return Err(Error::InvalidParameter {
            name: "loop_length",
            value: wide(loop_length),
            reason: "must be a finite positive path measure",
        });
    }
    let winding = (p1 - p2) * loop_length / ctx.hbar();
    let nearest = (winding / F::PI()).round();
    let n = nearest.to_i64().unwrap_or(0);
    let residual = (winding - nearest * F::PI()).abs();
    Ok(FluxRecord {
        p1,
        p2,
        loop_length,
        n,
        flux: flux_from_quantum_number(n, ctx),
        residual,
    })
}

/// Flux quantum rule: Phi = n pi hbar / q.
pub fn flux_from_quantum_number<F: Real>(n: i64, ctx: &PhysicalContext<F>) -> F {
    lit::<F>(n as f64) * F::PI() * ctx.hbar() / ctx.charge()
}
