//! Argument structures, the key=value config file, and resolution into a
//! fully-defaulted run plan. Command-line flags override config-file values;
//! anything still unset falls back to the experiment defaults
//! (gauss2, h = 0.01, 10,000 steps — 2,000 for Case III — and the
//! documented per-case initial states).

use std::collections::HashMap;
use std::fs;
use std::path::PathBuf;

use anyhow::{anyhow, bail, Context, Result};
use clap::Args;

use sirk_core::integrals::ErrorMode;
use sirk_core::models::{Case, OscillatorParams};
use sirk_core::SolverConfig64;

use crate::method::MethodSpec;

#[derive(Args, Debug, Default, Clone)]
pub struct ExperimentArgs {
    /// Method name (gauss1|gauss2|gauss3|radau1_2|radau2_2|lobatto_2) or a
    /// tableau file path
    #[arg(long)]
    pub method: Option<String>,
    /// Oscillator case: 1, 2 or 3
    #[arg(long)]
    pub case: Option<String>,
    /// Step size (negative steps the adjoint direction)
    #[arg(long, allow_negative_numbers = true)]
    pub h: Option<f64>,
    /// Number of steps
    #[arg(long)]
    pub steps: Option<usize>,
    /// Case III frequency component α₁
    #[arg(long, allow_negative_numbers = true)]
    pub alpha1: Option<f64>,
    /// Case III frequency component α₂
    #[arg(long, allow_negative_numbers = true)]
    pub alpha2: Option<f64>,
    /// Comma-separated initial state, e.g. 1,0 or 1,0.5,0,0.2
    #[arg(long, allow_hyphen_values = true)]
    pub y0: Option<String>,
    /// CSV output path
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// JSON summary output path
    #[arg(long)]
    pub summary: Option<PathBuf>,
    /// absolute (default) or relative error columns
    #[arg(long)]
    pub error_mode: Option<String>,
    /// Stage-residual convergence threshold
    #[arg(long)]
    pub newton_tol: Option<f64>,
    /// Stage-iteration budget per step
    #[arg(long)]
    pub newton_max_iter: Option<usize>,
    /// key=value config file; flags override file values
    #[arg(long)]
    pub config: Option<PathBuf>,
}

#[derive(Args, Debug, Default, Clone)]
pub struct TableauArgs {
    /// Node family: gauss, radau1, radau2 or lobatto3
    #[arg(long)]
    pub family: Option<String>,
    /// Stage count for --family
    #[arg(long)]
    pub stages: Option<usize>,
    /// Two custom nodes c1,c2 for the closed two-stage construction
    #[arg(long)]
    pub nodes: Option<String>,
    /// Method name or tableau file (alternative to --family/--nodes)
    #[arg(long)]
    pub method: Option<String>,
    /// Write the tableau text format to a file as well
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug, Default, Clone)]
pub struct ConvergeArgs {
    /// Method name or tableau file
    #[arg(long)]
    pub method: Option<String>,
    /// Oscillator case: 1, 2 or 3
    #[arg(long)]
    pub case: Option<String>,
    /// Comma-separated step sizes (at least 3)
    #[arg(long)]
    pub h_list: Option<String>,
    #[arg(long, allow_negative_numbers = true)]
    pub alpha1: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub alpha2: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub y0: Option<String>,
    #[arg(long)]
    pub newton_tol: Option<f64>,
    #[arg(long)]
    pub newton_max_iter: Option<usize>,
    #[arg(long)]
    pub config: Option<PathBuf>,
}

#[derive(Args, Debug, Default, Clone)]
pub struct ValidateArgs {
    /// Oscillator case: 1, 2 or 3 (default: run all three)
    #[arg(long)]
    pub case: Option<String>,
    #[arg(long, allow_negative_numbers = true)]
    pub alpha1: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub alpha2: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub y0: Option<String>,
    #[arg(long)]
    pub config: Option<PathBuf>,
}

/// Fully-resolved experiment plan.
#[derive(Debug, Clone)]
pub struct RunPlan {
    pub method: MethodSpec,
    pub params: OscillatorParams<f64>,
    pub h: f64,
    pub steps: usize,
    pub y0: Vec<f64>,
    pub error_mode: ErrorMode,
    pub solver: SolverConfig64,
    pub out: Option<PathBuf>,
    pub summary: Option<PathBuf>,
}

pub const DEFAULT_H: f64 = 0.01;
pub const DEFAULT_STEPS: usize = 10_000;
pub const DEFAULT_STEPS_CASE3: usize = 2_000;
pub const DEFAULT_ALPHA1: f64 = 1.0;
pub const DEFAULT_ALPHA2: f64 = 0.1;

impl ExperimentArgs {
    /// Overlay config-file values under the flags, then apply defaults.
    pub fn resolve(mut self) -> Result<RunPlan> {
        if let Some(path) = self.config.clone() {
            let file = ConfigFile::load(&path)?;
            file.overlay_experiment(&mut self)?;
        }
        let case: Case = self
            .case
            .as_deref()
            .unwrap_or("1")
            .parse()
            .map_err(|e| anyhow!("{e}"))?;
        let params = resolve_params(case, self.alpha1, self.alpha2)?;
        let y0 = match &self.y0 {
            Some(text) => {
                let y0 = parse_state(text)?;
                if y0.len() != params.dim() {
                    bail!(
                        "case {} needs a {}-component initial state, got {}",
                        case,
                        params.dim(),
                        y0.len()
                    );
                }
                y0
            }
            None => params.default_initial_state(),
        };
        let h = self.h.unwrap_or(DEFAULT_H);
        if !(h.is_finite() && h != 0.0) {
            bail!("step size must be a nonzero finite number, got {h}");
        }
        let steps = self.steps.unwrap_or(match case {
            Case::III => DEFAULT_STEPS_CASE3,
            _ => DEFAULT_STEPS,
        });
        if steps == 0 {
            bail!("step count must be at least 1");
        }
        let error_mode = match self.error_mode.as_deref() {
            Some(text) => text.parse().map_err(|e: String| anyhow!("{e}"))?,
            None => ErrorMode::Absolute,
        };
        let mut solver = SolverConfig64::default();
        if let Some(tol) = self.newton_tol {
            solver.newton_tol = tol;
        }
        if let Some(iters) = self.newton_max_iter {
            solver.max_newton_iters = iters;
        }
        let method = MethodSpec::parse(self.method.as_deref().unwrap_or("gauss2"))?;
        Ok(RunPlan {
            method,
            params,
            h,
            steps,
            y0,
            error_mode,
            solver,
            out: self.out,
            summary: self.summary,
        })
    }
}

pub fn resolve_params(
    case: Case,
    alpha1: Option<f64>,
    alpha2: Option<f64>,
) -> Result<OscillatorParams<f64>> {
    Ok(match case {
        Case::I => OscillatorParams::case1(),
        Case::II => OscillatorParams::case2(),
        Case::III => OscillatorParams::case3(
            alpha1.unwrap_or(DEFAULT_ALPHA1),
            alpha2.unwrap_or(DEFAULT_ALPHA2),
        )?,
    })
}

pub fn parse_state(text: &str) -> Result<Vec<f64>> {
    text.split(',')
        .map(|part| {
            part.trim()
                .parse::<f64>()
                .with_context(|| format!("bad state component '{}'", part.trim()))
        })
        .collect()
}

pub fn parse_h_list(text: &str) -> Result<Vec<f64>> {
    let hs: Vec<f64> = text
        .split(',')
        .map(|part| {
            part.trim()
                .parse::<f64>()
                .with_context(|| format!("bad step size '{}'", part.trim()))
        })
        .collect::<Result<_>>()?;
    if hs.len() < 3 {
        bail!(
            "need at least 3 step sizes for a slope fit, got {}",
            hs.len()
        );
    }
    if hs.iter().any(|h| !(h.is_finite() && *h > 0.0)) {
        bail!("step sizes must be positive finite numbers");
    }
    Ok(hs)
}

/// Simple `key = value` file; `#` starts a comment.
pub struct ConfigFile {
    values: HashMap<String, String>,
}

const KNOWN_KEYS: &[&str] = &[
    "method",
    "case",
    "h",
    "steps",
    "alpha1",
    "alpha2",
    "y0",
    "out",
    "summary",
    "error_mode",
    "newton_tol",
    "newton_max_iter",
    "h_list",
];

impl ConfigFile {
    pub fn load(path: &PathBuf) -> Result<Self> {
        let text = fs::read_to_string(path)
            .with_context(|| format!("cannot read config file {}", path.display()))?;
        let mut values = HashMap::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| anyhow!("line {} is not key=value: '{raw}'", lineno + 1))?;
            let key = key.trim().replace('-', "_");
            if !KNOWN_KEYS.contains(&key.as_str()) {
                bail!("unknown config key '{key}' on line {}", lineno + 1);
            }
            values.insert(key, value.trim().to_string());
        }
        Ok(ConfigFile { values })
    }

    fn get(&self, key: &str) -> Option<&String> {
        self.values.get(key)
    }

    fn parse_into<T: std::str::FromStr>(&self, key: &str, slot: &mut Option<T>) -> Result<()>
    where
        T::Err: std::fmt::Display,
    {
        if slot.is_none() {
            if let Some(text) = self.get(key) {
                *slot = Some(
                    text.parse()
                        .map_err(|e| anyhow!("config {key}='{text}': {e}"))?,
                );
            }
        }
        Ok(())
    }

    pub fn overlay_experiment(&self, args: &mut ExperimentArgs) -> Result<()> {
        if args.method.is_none() {
            args.method = self.get("method").cloned();
        }
        if args.case.is_none() {
            args.case = self.get("case").cloned();
        }
        self.parse_into("h", &mut args.h)?;
        self.parse_into("steps", &mut args.steps)?;
        self.parse_into("alpha1", &mut args.alpha1)?;
        self.parse_into("alpha2", &mut args.alpha2)?;
        if args.y0.is_none() {
            args.y0 = self.get("y0").cloned();
        }
        if args.out.is_none() {
            args.out = self.get("out").map(PathBuf::from);
        }
        if args.summary.is_none() {
            args.summary = self.get("summary").map(PathBuf::from);
        }
        if args.error_mode.is_none() {
            args.error_mode = self.get("error_mode").cloned();
        }
        self.parse_into("newton_tol", &mut args.newton_tol)?;
        self.parse_into("newton_max_iter", &mut args.newton_max_iter)?;
        Ok(())
    }

    pub fn overlay_converge(&self, args: &mut ConvergeArgs) -> Result<()> {
        if args.method.is_none() {
            args.method = self.get("method").cloned();
        }
        if args.case.is_none() {
            args.case = self.get("case").cloned();
        }
        if args.h_list.is_none() {
            args.h_list = self.get("h_list").cloned();
        }
        self.parse_into("alpha1", &mut args.alpha1)?;
        self.parse_into("alpha2", &mut args.alpha2)?;
        if args.y0.is_none() {
            args.y0 = self.get("y0").cloned();
        }
        self.parse_into("newton_tol", &mut args.newton_tol)?;
        self.parse_into("newton_max_iter", &mut args.newton_max_iter)?;
        Ok(())
    }
}
