//! `sirk invariants` — run one experiment and gate the preservation of the
//! case's first integrals.

use anyhow::Result;

use sirk_core::integrals::{error_series, preservation_checks, ErrorMode, FirstIntegralSet};
use sirk_core::irk::integrate;
use sirk_core::models::vector_field;

use crate::config::ExperimentArgs;
use crate::output::{
    error_csv, indexmap_like::OrderedMap, write_text, GateStats, InvariantsSummary, LabelStats,
};

pub fn run(args: ExperimentArgs) -> Result<bool> {
    let plan = args.resolve()?;
    let tab = plan.method.tableau()?;
    let field = vector_field(&plan.params);
    let traj = integrate(
        &tab,
        &field,
        0.0,
        &plan.y0,
        plan.h,
        plan.steps,
        &plan.solver,
    )?;
    let set = FirstIntegralSet::new(plan.params);

    let absolute = error_series(&traj, &set, ErrorMode::Absolute);
    let relative = error_series(&traj, &set, ErrorMode::Relative);
    let selected = match plan.error_mode {
        ErrorMode::Absolute => &absolute,
        ErrorMode::Relative => &relative,
    };
    let checks = preservation_checks(&set, &absolute);

    println!(
        "case {} | method {} | h={} steps={} | error mode {}",
        plan.params.case(),
        plan.method.label(),
        plan.h,
        plan.steps,
        plan.error_mode
    );
    println!(
        "{:<5} {:>12} {:>12} {:>13} {:>6}  gate",
        "label", "max_error", "final_error", "drift_slope", "auto"
    );
    for (s, c) in selected.iter().zip(&checks) {
        println!(
            "{:<5} {:>12.3e} {:>12.3e} {:>13.3e} {:>6}  {}",
            s.label,
            s.max_error,
            s.final_error,
            s.drift_slope,
            if c.autonomous { "yes" } else { "no" },
            if c.passed { "pass" } else { "FAIL" }
        );
    }

    if let Some(path) = &plan.out {
        write_text(path, &error_csv(&traj, selected))?;
        println!("wrote {}", path.display());
    }
    if let Some(path) = &plan.summary {
        let stats = |series: &[sirk_core::ErrorSeries64]| {
            OrderedMap(
                series
                    .iter()
                    .map(|s| (s.label.clone(), LabelStats::from(s)))
                    .collect(),
            )
        };
        let summary = InvariantsSummary {
            case: plan.params.case().to_string(),
            method: plan.method.label(),
            h: plan.h,
            steps: plan.steps,
            alpha1: plan.params.alpha1(),
            alpha2: plan.params.alpha2(),
            y0: plan.y0.clone(),
            error_mode: plan.error_mode.to_string(),
            integrals: stats(&absolute),
            integrals_relative: stats(&relative),
            gates: OrderedMap(
                checks
                    .iter()
                    .map(|c| (c.label.clone(), GateStats::from(c)))
                    .collect(),
            ),
            passed: checks.iter().all(|c| c.passed),
        };
        write_text(path, &serde_json::to_string_pretty(&summary)?)?;
        println!("wrote {}", path.display());
    }

    Ok(checks.iter().all(|c| c.passed))
}
