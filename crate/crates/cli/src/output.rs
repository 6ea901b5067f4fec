//! CSV and JSON emission. All floating-point values are written with 17
//! significant digits (`{:.16e}`), which round-trips `f64` exactly.

use std::fs;
use std::path::Path;

use anyhow::{Context, Result};
use serde::Serialize;

use sirk_core::integrals::{ErrorSeries, LabelCheck};
use sirk_core::Trajectory64;

pub fn fmt_value(v: f64) -> String {
    format!("{v:.16e}")
}

/// Error-series CSV: `n,t,<label...>`.
pub fn error_csv(traj: &Trajectory64, series: &[ErrorSeries<f64>]) -> String {
    let mut out = String::from("n,t");
    for s in series {
        out.push(',');
        out.push_str(&s.label);
    }
    out.push('\n');
    for k in 0..=traj.steps() {
        out.push_str(&k.to_string());
        out.push(',');
        out.push_str(&fmt_value(traj.time(k)));
        for s in series {
            out.push(',');
            out.push_str(&fmt_value(s.errors[k]));
        }
        out.push('\n');
    }
    out
}

/// Trajectory CSV: `n,t,<component...>`.
pub fn trajectory_csv(traj: &Trajectory64, components: &[&str]) -> String {
    let mut out = String::from("n,t");
    for name in components {
        out.push(',');
        out.push_str(name);
    }
    out.push('\n');
    for k in 0..=traj.steps() {
        out.push_str(&k.to_string());
        out.push(',');
        out.push_str(&fmt_value(traj.time(k)));
        for v in traj.state(k) {
            out.push(',');
            out.push_str(&fmt_value(*v));
        }
        out.push('\n');
    }
    out
}

#[derive(Serialize)]
pub struct LabelStats {
    pub max_error: f64,
    pub final_error: f64,
    pub drift_slope: f64,
}

impl From<&ErrorSeries<f64>> for LabelStats {
    fn from(s: &ErrorSeries<f64>) -> Self {
        LabelStats {
            max_error: s.max_error,
            final_error: s.final_error,
            drift_slope: s.drift_slope,
        }
    }
}

#[derive(Serialize)]
pub struct GateStats {
    pub autonomous: bool,
    pub max_error: f64,
    pub first_half_max: f64,
    pub second_half_max: f64,
    pub drift_slope: f64,
    pub passed: bool,
}

impl From<&LabelCheck<f64>> for GateStats {
    fn from(c: &LabelCheck<f64>) -> Self {
        GateStats {
            autonomous: c.autonomous,
            max_error: c.max_error,
            first_half_max: c.first_half_max,
            second_half_max: c.second_half_max,
            drift_slope: c.drift_slope,
            passed: c.passed,
        }
    }
}

#[derive(Serialize)]
pub struct InvariantsSummary {
    pub case: String,
    pub method: String,
    pub h: f64,
    pub steps: usize,
    pub alpha1: f64,
    pub alpha2: f64,
    pub y0: Vec<f64>,
    /// Which normalization the CSV columns use.
    pub error_mode: String,
    /// Per-label absolute-error statistics.
    pub integrals: indexmap_like::OrderedMap<LabelStats>,
    /// Per-label relative-error statistics (divided by max(|I(t0,y0)|, 1)).
    pub integrals_relative: indexmap_like::OrderedMap<LabelStats>,
    /// Absolute-error gate results (the exit-code criteria).
    pub gates: indexmap_like::OrderedMap<GateStats>,
    pub passed: bool,
}

/// Tiny insertion-ordered string map so the JSON keeps label order.
pub mod indexmap_like {
    use serde::ser::SerializeMap;
    use serde::Serialize;

    pub struct OrderedMap<V>(pub Vec<(String, V)>);

    impl<V: Serialize> Serialize for OrderedMap<V> {
        fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
            let mut map = serializer.serialize_map(Some(self.0.len()))?;
            for (k, v) in &self.0 {
                map.serialize_entry(k, v)?;
            }
            map.end()
        }
    }
}

pub fn write_text(path: &Path, text: &str) -> Result<()> {
    if let Some(parent) = path.parent() {
        if !parent.as_os_str().is_empty() {
            fs::create_dir_all(parent)
                .with_context(|| format!("cannot create {}", parent.display()))?;
        }
    }
    fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))
}
