//! Declarative run configuration: strict JSON parsing plus whole-document
//! validation that reports every violation at once.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use qds_core::{defaults, Barrier64, ParticleState64, PhysicalContext64};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    SolitonVerify,
    Scatter,
    TunnelTime,
    Sweep,
    Flux,
    Compare,
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Command::SolitonVerify => "soliton-verify",
            Command::Scatter => "scatter",
            Command::TunnelTime => "tunnel-time",
            Command::Sweep => "sweep",
            Command::Flux => "flux",
            Command::Compare => "compare",
        };
        f.write_str(name)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SweepParameter {
    Energy,
    BarrierWidth,
    BarrierHeight,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ContextSection {
    #[serde(default = "default_unit_system")]
    pub unit_system: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hbar: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mass: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub charge: Option<f64>,
}

fn default_unit_system() -> String {
    "natural".to_owned()
}

impl Default for ContextSection {
    fn default() -> Self {
        ContextSection {
            unit_system: default_unit_system(),
            hbar: None,
            mass: None,
            charge: None,
        }
    }
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BarrierSection {
    pub width: f64,
    pub height: f64,
    #[serde(default)]
    pub origin: f64,
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ParticleSection {
    pub energy: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub speed: Option<f64>,
    #[serde(default)]
    pub start_x: f64,
    #[serde(default)]
    pub start_t: f64,
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepSection {
    pub parameter: SweepParameter,
    pub start: f64,
    pub stop: f64,
    pub steps: usize,
}

/// Raw document as written by the user; strict everywhere.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub command: Command,
    #[serde(default)]
    pub context: ContextSection,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub barrier: Option<BarrierSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub particle: Option<ParticleSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sweep: Option<SweepSection>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub tolerances: BTreeMap<String, f64>,
    pub output_path: String,
    #[serde(default = "default_format")]
    pub output_format: OutputFormat,
}

fn default_format() -> OutputFormat {
    OutputFormat::Csv
}

const KNOWN_TOLERANCES: &[&str] = &[
    "resonance",
    "singularity",
    "equality",
    "grid_points",
    "residual_dt",
];

/// Resolved tolerance set with defaults applied.
#[derive(Debug, Clone, Copy)]
pub struct Tolerances {
    pub resonance: f64,
    pub singularity: f64,
    pub equality: f64,
    pub grid_points: usize,
    pub residual_dt: f64,
}

/// Fully validated, typed run plan.
#[derive(Debug, Clone)]
pub struct ResolvedConfig {
    pub command: Command,
    pub ctx: PhysicalContext64,
    pub barrier: Option<Barrier64>,
    pub particle: Option<ParticleState64>,
    pub sweep: Option<SweepSection>,
    pub tolerances: Tolerances,
    pub output_path: String,
    pub output_format: OutputFormat,
    pub echo: RunConfig,
}

/// Parse a strict JSON document into a raw [`RunConfig`].
pub fn parse_config(text: &str) -> Result<RunConfig, String> {
    serde_json::from_str(text).map_err(|e| format!("config parse error: {e}"))
}

/// Validate a raw config, reporting all violations at once.
pub fn resolve(raw: RunConfig) -> Result<ResolvedConfig, Vec<String>> {
    let mut problems = Vec::new();

    let ctx = match raw.context.unit_system.as_str() {
        "natural" => {
            for (name, value) in [
                ("hbar", raw.context.hbar),
                ("mass", raw.context.mass),
                ("charge", raw.context.charge),
            ] {
                if let Some(v) = value {
                    if v != 1.0 {
                        problems.push(format!(
                            "context.{name}: natural units fix {name} = 1 exactly, got {v}"
                        ));
                    }
                }
            }
            PhysicalContext64::natural()
        }
        "si" => {
            let template = PhysicalContext64::si_electron();
            match PhysicalContext64::with_constants(
                raw.context.hbar.unwrap_or(template.hbar()),
                raw.context.mass.unwrap_or(template.mass()),
                raw.context.charge.unwrap_or(template.charge()),
            ) {
                Ok(ctx) => ctx,
                Err(e) => {
                    problems.push(format!("context: {e}"));
                    PhysicalContext64::natural()
                }
            }
        }
        other => {
            problems.push(format!(
                "context.unit_system: unknown value {other:?}, expected \"natural\" or \"si\""
            ));
            PhysicalContext64::natural()
        }
    };

    let barrier = raw.barrier.and_then(|b| {
        match Barrier64::with_origin(b.width, b.height, b.origin) {
            Ok(barrier) => Some(barrier),
            Err(e) => {
                problems.push(format!("barrier: {e}"));
                None
            }
        }
    });

    let particle = raw.particle.and_then(|p| {
        let built = match p.speed {
            Some(speed) => ParticleState64::new(p.energy, speed, p.start_x, p.start_t),
            None => ParticleState64::with_default_speed(p.energy, &ctx),
        };
        match built {
            Ok(particle) => Some(particle),
            Err(e) => {
                problems.push(format!("particle: {e}"));
                None
            }
        }
    });

    if let Some(sweep) = &raw.sweep {
        if sweep.steps < 2 {
            problems.push(format!(
                "sweep.steps: must be at least 2, got {}",
                sweep.steps
            ));
        }
        if sweep.start.is_nan() || sweep.stop.is_nan() || sweep.start >= sweep.stop {
            problems.push(format!(
                "sweep.start/stop: start ({}) must be below stop ({})",
                sweep.start, sweep.stop
            ));
        }
        let must_stay_positive = matches!(
            sweep.parameter,
            SweepParameter::Energy | SweepParameter::BarrierWidth
        );
        if must_stay_positive && (sweep.start.is_nan() || sweep.start <= 0.0) {
            problems.push(format!(
                "sweep.start: swept energies and widths must stay positive, got {}",
                sweep.start
            ));
        }
    }

    for (name, value) in &raw.tolerances {
        if !KNOWN_TOLERANCES.contains(&name.as_str()) {
            problems.push(format!(
                "tolerances.{name}: unknown tolerance, expected one of {KNOWN_TOLERANCES:?}"
            ));
        } else if !value.is_finite() || *value <= 0.0 {
            problems.push(format!(
                "tolerances.{name}: must be a finite positive number, got {value}"
            ));
        }
    }
    let grid_points_raw = raw
        .tolerances
        .get("grid_points")
        .copied()
        .unwrap_or(defaults::GRID_POINTS as f64);
    if grid_points_raw.fract() != 0.0 || grid_points_raw < 16.0 {
        problems.push(format!(
            "tolerances.grid_points: must be an integer >= 16, got {grid_points_raw}"
        ));
    }
    let tolerances = Tolerances {
        resonance: raw
            .tolerances
            .get("resonance")
            .copied()
            .unwrap_or(defaults::RESONANCE_TOL),
        singularity: raw
            .tolerances
            .get("singularity")
            .copied()
            .unwrap_or(defaults::SINGULARITY_FLOOR),
        equality: raw
            .tolerances
            .get("equality")
            .copied()
            .unwrap_or(defaults::EQUALITY_TOL),
        grid_points: grid_points_raw.max(16.0) as usize,
        residual_dt: raw
            .tolerances
            .get("residual_dt")
            .copied()
            .unwrap_or(defaults::RESIDUAL_DT),
    };

    if raw.output_path.is_empty() {
        problems.push("output_path: must not be empty".to_owned());
    }

    // Per-command requirements.
    let needs_barrier = matches!(
        raw.command,
        Command::Scatter | Command::TunnelTime | Command::Sweep | Command::Flux | Command::Compare
    );
    if needs_barrier && barrier.is_none() && !problems.iter().any(|p| p.starts_with("barrier")) {
        problems.push(format!("barrier: required for command {}", raw.command));
    }
    if particle.is_none() && !problems.iter().any(|p| p.starts_with("particle")) {
        problems.push(format!("particle: required for command {}", raw.command));
    }
    match raw.command {
        Command::Sweep => {
            if raw.sweep.is_none() {
                problems.push("sweep: section required for command sweep".to_owned());
            }
        }
        _ => {
            if raw.sweep.is_some() {
                problems.push(format!(
                    "sweep: section only valid for command sweep, not {}",
                    raw.command
                ));
            }
        }
    }

    if !problems.is_empty() {
        return Err(problems);
    }
    Ok(ResolvedConfig {
        command: raw.command,
        ctx,
        barrier,
        particle,
        sweep: raw.sweep,
        tolerances,
        output_path: raw.output_path.clone(),
        output_format: raw.output_format,
        echo: raw,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn minimal(command: &str) -> String {
        format!(
            r#"{{
                "command": "{command}",
                "particle": {{"energy": 0.5}},
                "barrier": {{"width": 1.0, "height": 0.25}},
                "output_path": "out.csv"
            }}"#
        )
    }

    #[test]
    fn minimal_document_gets_defaults() {
        let raw = parse_config(&minimal("soliton-verify")).unwrap();
        let resolved = resolve(raw).unwrap();
        assert_eq!(resolved.tolerances.grid_points, 2048);
        assert_eq!(resolved.tolerances.resonance, 1e-9);
        assert_eq!(resolved.ctx.hbar(), 1.0);
        assert!(matches!(resolved.output_format, OutputFormat::Csv));
    }

    #[test]
    fn unknown_key_is_rejected_with_suggestion() {
        let text = r#"{
            "command": "scatter",
            "particle": {"energy": 0.5},
            "barier": {"width": 1.0, "height": 0.25},
            "output_path": "out.csv"
        }"#;
        let err = parse_config(text).unwrap_err();
        assert!(err.contains("barier"), "{err}");
        assert!(err.contains("barrier"), "{err}");
        assert!(err.contains("line"), "{err}");
    }

    #[test]
    fn bad_steps_names_the_field() {
        let text = r#"{
            "command": "sweep",
            "particle": {"energy": 0.5},
            "barrier": {"width": 1.0, "height": 0.25},
            "sweep": {"parameter": "energy", "start": 0.5, "stop": 2.0, "steps": 1},
            "output_path": "out.csv"
        }"#;
        let errs = resolve(parse_config(text).unwrap()).unwrap_err();
        assert!(errs.iter().any(|e| e.contains("sweep.steps")), "{errs:?}");
    }

    #[test]
    fn all_violations_reported_at_once() {
        let text = r#"{
            "command": "sweep",
            "particle": {"energy": -1.0},
            "barrier": {"width": 0.0, "height": 0.25},
            "sweep": {"parameter": "energy", "start": 3.0, "stop": 2.0, "steps": 1},
            "tolerances": {"resonance": -1.0, "wrong_name": 2.0},
            "output_path": ""
        }"#;
        let errs = resolve(parse_config(text).unwrap()).unwrap_err();
        assert!(errs.len() >= 6, "{errs:?}");
    }

    #[test]
    fn natural_units_must_stay_unit() {
        let text = r#"{
            "command": "scatter",
            "context": {"unit_system": "natural", "hbar": 2.0},
            "particle": {"energy": 0.5},
            "barrier": {"width": 1.0, "height": 0.25},
            "output_path": "out.csv"
        }"#;
        let errs = resolve(parse_config(text).unwrap()).unwrap_err();
        assert!(errs.iter().any(|e| e.contains("natural units")), "{errs:?}");
    }

    #[test]
    fn sweep_section_restricted_to_sweep_command() {
        let text = r#"{
            "command": "scatter",
            "particle": {"energy": 0.5},
            "barrier": {"width": 1.0, "height": 0.25},
            "sweep": {"parameter": "energy", "start": 0.5, "stop": 2.0, "steps": 4},
            "output_path": "out.csv"
        }"#;
        let errs = resolve(parse_config(text).unwrap()).unwrap_err();
        assert!(errs.iter().any(|e| e.contains("only valid")), "{errs:?}");
    }
}
