//! Unit systems, physical constants, and the shared parameter types.

use std::fmt;

use crate::error::{Error, Result};
use crate::real::{lit, wide, Real};

/// Unit system tag carried by a [`PhysicalContext`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnitSystem {
    /// hbar = m = 1 exactly.
    Natural,
    Si,
}

/// Physical constants every downstream computation is parameterized by.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalContext<F> {
    hbar: F,
    mass: F,
    charge: F,
    units: UnitSystem,
}

impl<F: Real> PhysicalContext<F> {
    /// Natural units: hbar = m = q = 1.
    pub fn natural() -> Self {
        PhysicalContext {
            hbar: F::one(),
            mass: F::one(),
            charge: F::one(),
            units: UnitSystem::Natural,
        }
    }

    /// SI constants for an electron (CODATA 2018).
    pub fn si_electron() -> Self {
        PhysicalContext {
            hbar: lit(1.054_571_817e-34),
            mass: lit(9.109_383_701_5e-31),
            charge: lit(1.602_176_634e-19),
            units: UnitSystem::Si,
        }
    }

    /// SI-labelled context with caller-supplied constants.
    pub fn with_constants(hbar: F, mass: F, charge: F) -> Result<Self> {
        for (name, value) in [("hbar", hbar), ("mass", mass), ("charge", charge)] {
            if !value.is_finite() || value <= F::zero() {
                return Err(Error::InvalidParameter {
                    name,
                    value: wide(value),
                    reason: "must be a finite positive number",
                });
            }
        }
        Ok(PhysicalContext {
            hbar,
            mass,
            charge,
            units: UnitSystem::Si,
        })
    }

    pub fn hbar(&self) -> F {
        self.hbar
    }

    pub fn mass(&self) -> F {
        self.mass
    }

    pub fn charge(&self) -> F {
        self.charge
    }

    pub fn units(&self) -> UnitSystem {
        self.units
    }

    /// hbar^2 / 2m, the quantum-potential prefactor.
    pub(crate) fn hbar_sq_over_2m(&self) -> F {
        self.hbar * self.hbar / (self.mass + self.mass)
    }
}

/// Relation of a particle energy to a potential level.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    /// E > V
    Above,
    /// E < V
    Below,
    /// E = V
    Critical,
}

impl Regime {
    pub fn classify<F: Real>(energy: F, potential: F) -> Self {
        if energy > potential {
            Regime::Above
        } else if energy < potential {
            Regime::Below
        } else {
            Regime::Critical
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Regime::Above => "above",
            Regime::Below => "below",
            Regime::Critical => "critical",
        }
    }
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Rectangular barrier: V(x) = height on (origin, origin + width), 0 elsewhere.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Barrier<F> {
    width: F,
    height: F,
    origin: F,
}

impl<F: Real> Barrier<F> {
    /// Barrier with its left wall at x = 0.
    pub fn new(width: F, height: F) -> Result<Self> {
        Self::with_origin(width, height, F::zero())
    }

    pub fn with_origin(width: F, height: F, origin: F) -> Result<Self> {
        if !width.is_finite() || width <= F::zero() {
            return Err(Error::InvalidParameter {
                name: "barrier width",
                value: wide(width),
                reason: "must be a finite positive length",
            });
        }
        if !height.is_finite() || !origin.is_finite() {
            return Err(Error::InvalidParameter {
                name: "barrier height/origin",
                value: wide(height),
                reason: "must be finite",
            });
        }
        Ok(Barrier {
            width,
            height,
            origin,
        })
    }

    pub fn width(&self) -> F {
        self.width
    }

    pub fn height(&self) -> F {
        self.height
    }

    pub fn origin(&self) -> F {
        self.origin
    }

    pub fn right_wall(&self) -> F {
        self.origin + self.width
    }

    /// Potential sampled at x; the walls themselves sit at V = 0.
    pub fn potential_at(&self, x: F) -> F {
        if x > self.origin && x < self.right_wall() {
            self.height
        } else {
            F::zero()
        }
    }
}

/// Incident particle/soliton: energy, uniform free speed, and the reference
/// coordinates used by the arrival-time bracket.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParticleState<F> {
    energy: F,
    speed: F,
    start_x: F,
    start_t: F,
}

impl<F: Real> ParticleState<F> {
    pub fn new(energy: F, speed: F, start_x: F, start_t: F) -> Result<Self> {
        if !energy.is_finite() || energy <= F::zero() {
            return Err(Error::InvalidParameter {
                name: "energy",
                value: wide(energy),
                reason: "must be a finite positive energy",
            });
        }
        if !speed.is_finite() || speed <= F::zero() {
            return Err(Error::InvalidParameter {
                name: "speed",
                value: wide(speed),
                reason: "must be a finite positive speed",
            });
        }
        Ok(ParticleState {
            energy,
            speed,
            start_x,
            start_t,
        })
    }

    /// Speed defaulted to the free de Broglie particle speed hbar k / m.
    pub fn with_default_speed(energy: F, ctx: &PhysicalContext<F>) -> Result<Self> {
        let (k, _) = wavenumber(energy, F::zero(), ctx);
        Self::new(energy, ctx.hbar() * k / ctx.mass(), F::zero(), F::zero())
    }

    pub fn energy(&self) -> F {
        self.energy
    }

    pub fn speed(&self) -> F {
        self.speed
    }

    pub fn start_x(&self) -> F {
        self.start_x
    }

    pub fn start_t(&self) -> F {
        self.start_t
    }
}

/// k = sqrt(2 m |E - V|) / hbar, plus the regime of E relative to V.
///
/// Zero is a valid return (E = V, regime critical); callers decide whether a
/// vanishing wavenumber is degenerate for their purpose.
pub fn wavenumber<F: Real>(energy: F, potential: F, ctx: &PhysicalContext<F>) -> (F, Regime) {
    let two = lit::<F>(2.0);
    let k = (two * ctx.mass() * (energy - potential).abs()).sqrt() / ctx.hbar();
    (k, Regime::classify(energy, potential))
}

/// de Broglie wavelength h / sqrt(2 m (E - V)) = 2 pi / k.
///
/// Errors with [`Error::DegenerateEnergy`] when E <= V.
pub fn de_broglie_wavelength<F: Real>(
    energy: F,
    potential: F,
    ctx: &PhysicalContext<F>,
) -> Result<F> {
    if energy <= potential {
        return Err(Error::DegenerateEnergy {
            energy: wide(energy),
            potential: wide(potential),
        });
    }
    let (k, _) = wavenumber(energy, potential, ctx);
    Ok(F::TAU() / k)
}
