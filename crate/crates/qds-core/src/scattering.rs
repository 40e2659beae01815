//! Three-region soliton scattering off a rectangular barrier: wall matching,
//! resonance detection, and resonance-energy root finding.
//!
//! Region I (x < 0) and region III (x > a) are free with wavenumbers k1 = k3;
//! region II carries k2 = sqrt(2 m |E - V0|) / hbar. Density continuity at
//! the walls fixes rho2 = rho1 and
//! rho3 = D(k2 a)^2 / cos^2(k1 a) * rho2, with D = cos above the barrier and
//! D = cosh below it. The transmitted wave recovers the incident one exactly
//! when (k1 - k2) a is an integer multiple of pi.

use crate::error::{Error, Result};
use crate::phys::{wavenumber, Barrier, ParticleState, PhysicalContext, Regime};
use crate::real::{lit, wide, Real};

/// Particle + barrier with the derived wavenumbers of all three regions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScatteringSetup<F> {
    particle: ParticleState<F>,
    barrier: Barrier<F>,
    ctx: PhysicalContext<F>,
    k1: F,
    k2: F,
    k3: F,
    regime: Regime,
}

impl<F: Real> ScatteringSetup<F> {
    pub fn new(particle: ParticleState<F>, barrier: Barrier<F>, ctx: PhysicalContext<F>) -> Self {
        let (k1, _) = wavenumber(particle.energy(), F::zero(), &ctx);
        let (k2, regime) = wavenumber(particle.energy(), barrier.height(), &ctx);
        // Region III is free space at the same energy, so k3 = k1 on and off
        // resonance.
        ScatteringSetup {
            particle,
            barrier,
            ctx,
            k1,
            k2,
            k3: k1,
            regime,
        }
    }

    pub fn particle(&self) -> &ParticleState<F> {
        &self.particle
    }

    pub fn barrier(&self) -> &Barrier<F> {
        &self.barrier
    }

    pub fn ctx(&self) -> &PhysicalContext<F> {
        &self.ctx
    }

    pub fn k1(&self) -> F {
        self.k1
    }

    pub fn k2(&self) -> F {
        self.k2
    }

    pub fn k3(&self) -> F {
        self.k3
    }

    pub fn regime(&self) -> Regime {
        self.regime
    }
}

/// Density amplitudes of the three regions after wall matching.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScatteringSolution<F> {
    pub rho1: F,
    pub rho2: F,
    pub rho3: F,
    pub setup: ScatteringSetup<F>,
    pub resonant: bool,
    pub resonance_index: Option<u32>,
}

/// Apply the wall-matching conditions for an incident amplitude `rho1`.
///
/// `tol` is both the singularity floor for the cos(k1 a) denominator and the
/// equality tolerance of the identity-recovery check.
pub fn solve_regions<F: Real>(
    setup: &ScatteringSetup<F>,
    rho1: F,
    tol: F,
) -> Result<ScatteringSolution<F>> {
    if rho1.is_nan() || rho1 < F::zero() {
        return Err(Error::InvalidParameter {
            name: "rho1",
            value: wide(rho1),
            reason: "incident density must be nonnegative",
        });
    }
    let a = setup.barrier.width();
    let wall = (setup.k1 * a).cos();
    if wall.abs() < tol {
        return Err(Error::MatchingSingularity {
            value: wide(wall.abs()),
            floor: wide(tol),
        });
    }
    let k2a = setup.k2 * a;
    let numerator = match setup.regime {
        Regime::Below => k2a.cosh(),
        _ => k2a.cos(),
    };
    let prefactor = (numerator / wall).powi(2);
    let rho2 = rho1;
    let rho3 = prefactor * rho2;
    let resonant = if rho1 > F::zero() {
        (rho3 - rho1).abs() <= tol * rho1
    } else {
        (prefactor - F::one()).abs() <= tol
    };
    let resonance_index = if resonant && setup.regime != Regime::Below {
        Some(resonance_check(setup.k1, setup.k2, a, tol).nearest_index)
    } else {
        None
    };
    Ok(ScatteringSolution {
        rho1,
        rho2,
        rho3,
        setup: *setup,
        resonant,
        resonance_index,
    })
}

/// Outcome of testing the resonance condition (k1 - k2) a = +-n pi.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResonanceCheck<F> {
    pub resonant: bool,
    pub nearest_index: u32,
    pub residual: F,
}

pub(crate) fn resonance_check<F: Real>(k1: F, k2: F, a: F, tol: F) -> ResonanceCheck<F> {
    let phase_gap = ((k1 - k2) * a).abs();
    let nearest = (phase_gap / F::PI()).round();
    let residual = (phase_gap - nearest * F::PI()).abs();
    ResonanceCheck {
        resonant: residual < tol,
        nearest_index: nearest.to_u32().unwrap_or(u32::MAX),
        residual,
    }
}

/// Test the resonance condition for an above-barrier setup.
pub fn is_resonant<F: Real>(setup: &ScatteringSetup<F>, tol: F) -> Result<ResonanceCheck<F>> {
    if setup.regime != Regime::Above {
        return Err(Error::RegimeMismatch {
            required: "above",
            found: setup.regime.as_str(),
        });
    }
    Ok(resonance_check(setup.k1, setup.k2, setup.barrier.width(), tol))
}

/// Solve (sqrt(2mE) - sqrt(2m(E - V0))) a / hbar = n pi for E > V0 by
/// bisection, bracketing the root to relative width `tol`.
///
/// The left side decreases strictly from sqrt(2 m V0) a / hbar (at E -> V0)
/// to 0 (E -> infinity), so a root exists iff n pi is below that supremum;
/// `None` otherwise.
pub fn resonance_energies<F: Real>(
    barrier: &Barrier<F>,
    n: u32,
    ctx: &PhysicalContext<F>,
    tol: F,
) -> Option<F> {
    let v0 = barrier.height();
    if n == 0 || v0.is_nan() || v0 <= F::zero() {
        return None;
    }
    let two = lit::<F>(2.0);
    let scale = barrier.width() * (two * ctx.mass()).sqrt() / ctx.hbar();
    let target = lit::<F>(n as f64) * F::PI();
    // f(E) = scale * (sqrt(E) - sqrt(E - V0)) - target
    let f = |e: F| scale * (e.sqrt() - (e - v0).max(F::zero()).sqrt()) - target;
    if f(v0) <= F::zero() {
        return None;
    }
    let mut lo = v0;
    let mut hi = v0 + v0.max(F::one());
    let mut guard = 0;
    while f(hi) > F::zero() {
        hi = hi + hi;
        guard += 1;
        if guard > 600 {
            return None;
        }
    }
    for _ in 0..200 {
        if hi - lo <= tol * hi {
            break;
        }
        let mid = (lo + hi) / two;
        if f(mid) > F::zero() {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Some((lo + hi) / two)
}
