//! Fixed per-command row schemas, serialized as CSV cells or JSON objects.
//!
//! Float cells use the shortest round-trip decimal form so identical configs
//! produce byte-identical result files.

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RowStatus {
    Ok,
    OutOfDomain,
    Singular,
}

impl RowStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            RowStatus::Ok => "ok",
            RowStatus::OutOfDomain => "out_of_domain",
            RowStatus::Singular => "singular",
        }
    }

    pub fn flagged(&self) -> bool {
        !matches!(self, RowStatus::Ok)
    }
}

fn cell_f64(v: f64) -> String {
    format!("{v}")
}

fn cell_opt(v: Option<f64>) -> String {
    v.map(cell_f64).unwrap_or_default()
}

/// One CSV-serializable result row.
pub trait Row: Serialize {
    fn header() -> &'static [&'static str];
    fn cells(&self) -> Vec<String>;
    fn status(&self) -> RowStatus;
}

#[derive(Debug, Clone, Serialize)]
pub struct SolitonVerifyRow {
    pub grid_points: usize,
    pub energy: f64,
    pub mu: f64,
    pub speed: f64,
    pub support_width: f64,
    pub residual_continuity: f64,
    pub residual_momentum: Option<f64>,
    pub q_level: f64,
    pub q_max_abs_err: Option<f64>,
    pub status: RowStatus,
}

impl Row for SolitonVerifyRow {
    fn header() -> &'static [&'static str] {
        &[
            "grid_points",
            "energy",
            "mu",
            "speed",
            "support_width",
            "residual_continuity",
            "residual_momentum",
            "q_level",
            "q_max_abs_err",
            "status",
        ]
    }

    fn cells(&self) -> Vec<String> {
        vec![
            self.grid_points.to_string(),
            cell_f64(self.energy),
            cell_f64(self.mu),
            cell_f64(self.speed),
            cell_f64(self.support_width),
            cell_f64(self.residual_continuity),
            cell_opt(self.residual_momentum),
            cell_f64(self.q_level),
            cell_opt(self.q_max_abs_err),
            self.status.as_str().to_owned(),
        ]
    }

    fn status(&self) -> RowStatus {
        self.status
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ScatterRow {
    pub energy: f64,
    pub v0: f64,
    pub a: f64,
    pub k1: f64,
    pub k2: f64,
    pub k3: f64,
    pub regime: &'static str,
    pub rho1: f64,
    pub rho2: Option<f64>,
    pub rho3: Option<f64>,
    pub resonant: bool,
    pub resonance_n: Option<u32>,
    pub status: RowStatus,
}

impl Row for ScatterRow {
    fn header() -> &'static [&'static str] {
        &[
            "energy",
            "v0",
            "a",
            "k1",
            "k2",
            "k3",
            "regime",
            "rho1",
            "rho2",
            "rho3",
            "resonant",
            "resonance_n",
            "status",
        ]
    }

    fn cells(&self) -> Vec<String> {
        vec![
            cell_f64(self.energy),
            cell_f64(self.v0),
            cell_f64(self.a),
            cell_f64(self.k1),
            cell_f64(self.k2),
            cell_f64(self.k3),
            self.regime.to_owned(),
            cell_f64(self.rho1),
            cell_opt(self.rho2),
            cell_opt(self.rho3),
            self.resonant.to_string(),
            self.resonance_n.map(|n| n.to_string()).unwrap_or_default(),
            self.status.as_str().to_owned(),
        ]
    }

    fn status(&self) -> RowStatus {
        self.status
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct TunnelTimeRow {
    pub energy: f64,
    pub v0: f64,
    pub a: f64,
    pub k1: f64,
    pub k2: f64,
    pub arccos_arg: Option<f64>,
    pub status: RowStatus,
    pub t3: Option<f64>,
    pub tau_soliton: Option<f64>,
    pub tau_wigner: Option<f64>,
    pub t_oracle: f64,
}

impl Row for TunnelTimeRow {
    fn header() -> &'static [&'static str] {
        &[
            "energy",
            "v0",
            "a",
            "k1",
            "k2",
            "arccos_arg",
            "status",
            "t3",
            "tau_soliton",
            "tau_wigner",
            "t_oracle",
        ]
    }

    fn cells(&self) -> Vec<String> {
        vec![
            cell_f64(self.energy),
            cell_f64(self.v0),
            cell_f64(self.a),
            cell_f64(self.k1),
            cell_f64(self.k2),
            cell_opt(self.arccos_arg),
            self.status.as_str().to_owned(),
            cell_opt(self.t3),
            cell_opt(self.tau_soliton),
            cell_opt(self.tau_wigner),
            cell_f64(self.t_oracle),
        ]
    }

    fn status(&self) -> RowStatus {
        self.status
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct FluxRow {
    pub energy: f64,
    pub v0: f64,
    pub p1: f64,
    pub p2: Option<f64>,
    pub loop_length: f64,
    pub n: Option<i64>,
    pub residual: Option<f64>,
    pub flux: Option<f64>,
    pub quantized: bool,
    pub status: RowStatus,
}

impl Row for FluxRow {
    fn header() -> &'static [&'static str] {
        &[
            "energy",
            "v0",
            "p1",
            "p2",
            "loop_length",
            "n",
            "residual",
            "flux",
            "quantized",
            "status",
        ]
    }

    fn cells(&self) -> Vec<String> {
        vec![
            cell_f64(self.energy),
            cell_f64(self.v0),
            cell_f64(self.p1),
            cell_opt(self.p2),
            cell_f64(self.loop_length),
            self.n.map(|n| n.to_string()).unwrap_or_default(),
            cell_opt(self.residual),
            cell_opt(self.flux),
            self.quantized.to_string(),
            self.status.as_str().to_owned(),
        ]
    }

    fn status(&self) -> RowStatus {
        self.status
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CompareRow {
    pub energy: f64,
    pub v0: f64,
    pub a: f64,
    pub k1: f64,
    pub k2: f64,
    pub k3: f64,
    pub regime: &'static str,
    pub arccos_arg: Option<f64>,
    pub status: RowStatus,
    pub t3: Option<f64>,
    pub tau_soliton: Option<f64>,
    pub tau_wigner: Option<f64>,
    pub t_oracle: f64,
    pub rho_ratio: Option<f64>,
    pub resonant: bool,
    pub resonance_residual: f64,
    pub reference_resonant: bool,
    pub reference_resonance_residual: Option<f64>,
}

impl Row for CompareRow {
    fn header() -> &'static [&'static str] {
        &[
            "energy",
            "v0",
            "a",
            "k1",
            "k2",
            "k3",
            "regime",
            "arccos_arg",
            "status",
            "t3",
            "tau_soliton",
            "tau_wigner",
            "t_oracle",
            "rho_ratio",
            "resonant",
            "resonance_residual",
            "reference_resonant",
            "reference_resonance_residual",
        ]
    }

    fn cells(&self) -> Vec<String> {
        vec![
            cell_f64(self.energy),
            cell_f64(self.v0),
            cell_f64(self.a),
            cell_f64(self.k1),
            cell_f64(self.k2),
            cell_f64(self.k3),
            self.regime.to_owned(),
            cell_opt(self.arccos_arg),
            self.status.as_str().to_owned(),
            cell_opt(self.t3),
            cell_opt(self.tau_soliton),
            cell_opt(self.tau_wigner),
            cell_f64(self.t_oracle),
            cell_opt(self.rho_ratio),
            self.resonant.to_string(),
            cell_f64(self.resonance_residual),
            self.reference_resonant.to_string(),
            cell_opt(self.reference_resonance_residual),
        ]
    }

    fn status(&self) -> RowStatus {
        self.status
    }
}

/// Render rows as a CSV document with a header line.
pub fn to_csv<R: Row>(rows: &[R]) -> String {
    let mut out = String::new();
    out.push_str(&R::header().join(","));
    out.push('\n');
    for row in rows {
        out.push_str(&row.cells().join(","));
        out.push('\n');
    }
    out
}

/// Render rows as a JSON array of objects mirroring the CSV columns.
pub fn to_json<R: Row>(rows: &[R]) -> String {
    let mut out = serde_json::to_string_pretty(rows).expect("rows serialize");
    out.push('\n');
    out
}
