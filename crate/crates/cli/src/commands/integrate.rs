//! `sirk integrate` — trajectory export plus a final-state comparison
//! against the exact flow.

use anyhow::Result;

use sirk_core::irk::integrate;
use sirk_core::models::vector_field;
use sirk_core::oracle::exact_flow;

use crate::config::ExperimentArgs;
use crate::output::{fmt_value, trajectory_csv, write_text};

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

    let t_end = traj.time(traj.steps());
    let exact = exact_flow(&plan.params, &plan.y0)?.state(t_end);
    let numerical = traj.last();
    let err = numerical
        .iter()
        .zip(&exact)
        .fold(0.0f64, |m, (a, b)| m.max((a - b).abs()));

    println!(
        "case {} | method {} | h={} steps={}",
        plan.params.case(),
        plan.method.label(),
        plan.h,
        plan.steps
    );
    let names = plan.params.component_names();
    println!("t_end = {}", fmt_value(t_end));
    for (i, name) in names.iter().enumerate() {
        println!(
            "{name:>3}: numerical {} exact {}",
            fmt_value(numerical[i]),
            fmt_value(exact[i])
        );
    }
    println!("max |numerical - exact| = {err:.3e}");

    if let Some(path) = &plan.out {
        write_text(path, &trajectory_csv(&traj, names))?;
        println!("wrote {}", path.display());
    }
    Ok(true)
}
