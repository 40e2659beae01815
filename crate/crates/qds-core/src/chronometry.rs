//! Arrival, traversal, and tunneling times of the transmitted soliton, and
//! the position-momentum indeterminacy bound they imply.
//!
//! The transmitted wave reaches x3 at
//! t3 = x3/c - (1/(k3 c)) arccos[ (cos(k1 a)/D(k2 a)) cos(k1 (x1 - c t1)) ],
//! with D = cos above the barrier and D = cosh below it. The tunneling time
//! is the absolute residual against the classical transit, tau = |t3 - a/c|,
//! which lives on the principal arccos branch [0, pi/(k3 c)]. Requiring
//! t3 >= 0 bounds the transmitted distance from below and yields
//! delta_x * delta_p >= pi * hbar = h/2.

use crate::defaults;
use crate::error::{Error, Result};
use crate::phys::{PhysicalContext, Regime};
use crate::real::{lit, wide, Real};
use crate::scattering::{resonance_check, ScatteringSetup};

/// Timing summary for one barrier traversal.
///
/// Out-of-domain arccos arguments flag the report instead of failing it, so
/// sweeps can record the point; the time fields are then unset.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TunnelingReport<F> {
    pub total_time: Option<F>,
    pub classical_time: F,
    pub tunneling_time: Option<F>,
    pub arccos_argument: F,
    pub in_domain: bool,
    pub resonant: bool,
    /// Resonant with odd index: the arccos argument sits at -1, so the
    /// literal delay is pi/(k3 c) instead of zero.
    pub odd_resonance: bool,
}

/// Position-momentum indeterminacy record.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UncertaintyRecord<F> {
    pub delta_x: F,
    pub delta_k: F,
    pub delta_p: F,
    pub product: F,
}

/// cos(k1 a) / D(k2 a), the wall-matching ratio inside the arccos bracket.
fn matching_ratio<F: Real>(setup: &ScatteringSetup<F>) -> Result<F> {
    let a = setup.barrier().width();
    let k2a = setup.k2() * a;
    let denom = match setup.regime() {
        Regime::Below => k2a.cosh(),
        _ => k2a.cos(),
    };
    if setup.regime() == Regime::Above && denom.abs() < lit(defaults::SINGULARITY_FLOOR) {
        return Err(Error::MatchingSingularity {
            value: wide(denom.abs()),
            floor: defaults::SINGULARITY_FLOOR,
        });
    }
    Ok((setup.k1() * a).cos() / denom)
}

fn acos_checked<F: Real>(arg: F) -> Result<F> {
    if arg.abs() > F::one() {
        return Err(Error::ArccosDomain {
            argument: wide(arg),
        });
    }
    Ok(arg.acos())
}

/// Time for the transmitted soliton, launched from reference (x1, t1), to
/// arrive at x3 beyond the barrier.
pub fn arrival_time<F: Real>(setup: &ScatteringSetup<F>, x1: F, t1: F, x3: F) -> Result<F> {
    if x3 < setup.barrier().right_wall() {
        return Err(Error::InvalidParameter {
            name: "x3",
            value: wide(x3),
            reason: "must lie at or beyond the barrier exit wall",
        });
    }
    let c = setup.particle().speed();
    let arg = matching_ratio(setup)? * (setup.k1() * (x1 - c * t1)).cos();
    Ok(x3 / c - acos_checked(arg)? / (setup.k3() * c))
}

/// Traversal report for the canonical launch x1 = 0, t1 = 0, x3 = a.
pub fn traversal_time<F: Real>(setup: &ScatteringSetup<F>) -> Result<TunnelingReport<F>> {
    let arg = matching_ratio(setup)?;
    let c = setup.particle().speed();
    let classical_time = setup.barrier().width() / c;
    let in_domain = arg.abs() <= F::one();
    let (total_time, tunneling_time) = if in_domain {
        let tau = arg.acos() / (setup.k3() * c);
        (Some(classical_time - tau), Some(tau))
    } else {
        (None, None)
    };
    let (resonant, odd_resonance) = match setup.regime() {
        Regime::Below => (false, false),
        _ => {
            let rc = resonance_check(
                setup.k1(),
                setup.k2(),
                setup.barrier().width(),
                lit(defaults::RESONANCE_TOL),
            );
            (rc.resonant, rc.resonant && rc.nearest_index % 2 == 1)
        }
    };
    Ok(TunnelingReport {
        total_time,
        classical_time,
        tunneling_time,
        arccos_argument: arg,
        in_domain,
        resonant,
        odd_resonance,
    })
}

/// tau = (1/(k3 c)) arccos[cos(k1 a)/D(k2 a)], the barrier-interaction time.
pub fn tunneling_time<F: Real>(setup: &ScatteringSetup<F>) -> Result<F> {
    let arg = matching_ratio(setup)?;
    let c = setup.particle().speed();
    Ok(acos_checked(arg)? / (setup.k3() * c))
}

/// Lower bound on the transmitted position, from t3 >= 0:
/// x3 >= (1/k3) arccos[(cos(k1 a)/D(k2 a)) cos(k1 (x1 - c t1))].
/// The supremum over launch points is pi/k3.
pub fn min_transmitted_distance<F: Real>(setup: &ScatteringSetup<F>, x1: F, t1: F) -> Result<F> {
    let c = setup.particle().speed();
    let arg = matching_ratio(setup)? * (setup.k1() * (x1 - c * t1)).cos();
    Ok(acos_checked(arg)? / setup.k3())
}

/// delta_x * delta_p for a spread respecting the minimum-distance bound
/// delta_x >= pi/delta_k; violating it is an error, not a clamp.
pub fn uncertainty_product<F: Real>(
    delta_k: F,
    delta_x: F,
    ctx: &PhysicalContext<F>,
) -> Result<UncertaintyRecord<F>> {
    if !delta_k.is_finite() || delta_k <= F::zero() {
        return Err(Error::InvalidParameter {
            name: "delta_k",
            value: wide(delta_k),
            reason: "must be a finite positive wavenumber spread",
        });
    }
    if !delta_x.is_finite() || delta_x <= F::zero() {
        return Err(Error::InvalidParameter {
            name: "delta_x",
            value: wide(delta_x),
            reason: "must be a finite positive length",
        });
    }
    let bound = F::PI() / delta_k;
    if delta_x < bound {
        return Err(Error::BoundViolation {
            delta_x: wide(delta_x),
            bound: wide(bound),
        });
    }
    let delta_p = ctx.hbar() * delta_k;
    Ok(UncertaintyRecord {
        delta_x,
        delta_k,
        delta_p,
        product: delta_x * delta_p,
    })
}
