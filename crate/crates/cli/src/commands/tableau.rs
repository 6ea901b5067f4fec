//! `sirk tableau` — construct, print and gate a tableau.

use anyhow::{bail, Result};

use sirk_core::tableau::{
    construct_gauss, construct_symplectic_2stage, nodes, NodeFamily, SYMPLECTIC_RESIDUAL_TOL,
};
use sirk_core::ButcherTableau64;

use crate::config::{parse_state, TableauArgs};
use crate::method::MethodSpec;
use crate::output::write_text;

pub fn run(args: TableauArgs) -> Result<bool> {
    let tab = select(&args)?;
    let diag = tab.diagnostics();
    println!("{tab}");
    println!();
    println!("{diag}");
    if diag.row_sum_residual > 1e-13 {
        println!(
            "note: row sums differ from the nodes (max residual {:.3e}); \
             this tableau is symplectic but not a collocation method, so no \
             order beyond 2 is claimed",
            diag.row_sum_residual
        );
    }
    if let Some(path) = &args.out {
        write_text(path, &format!("{tab}\n"))?;
        println!("wrote {}", path.display());
    }
    let pass = diag.symplectic_residual <= SYMPLECTIC_RESIDUAL_TOL;
    if !pass {
        println!(
            "symplectic residual {:.3e} exceeds gate {SYMPLECTIC_RESIDUAL_TOL:.1e}",
            diag.symplectic_residual
        );
    }
    Ok(pass)
}

fn select(args: &TableauArgs) -> Result<ButcherTableau64> {
    if let Some(text) = &args.nodes {
        let c = parse_state(text)?;
        if c.len() != 2 {
            bail!(
                "--nodes drives the closed two-stage construction and needs \
                 exactly two values, got {}",
                c.len()
            );
        }
        return Ok(construct_symplectic_2stage(c[0], c[1])?);
    }
    if let Some(family_text) = &args.family {
        let family: NodeFamily = family_text
            .parse()
            .map_err(|e: String| anyhow::anyhow!(e))?;
        let s = args.stages.unwrap_or(2);
        return Ok(match family {
            NodeFamily::Gauss => construct_gauss(s)?,
            NodeFamily::RadauI | NodeFamily::RadauII | NodeFamily::LobattoIII => {
                if s != 2 {
                    bail!(
                        "closed-form construction for {family} is two-stage only \
                         (requested {s} stages)"
                    );
                }
                let c = nodes::<f64>(family, 2)?;
                construct_symplectic_2stage(c[0], c[1])?
            }
        });
    }
    MethodSpec::parse(args.method.as_deref().unwrap_or("gauss2"))?.tableau()
}
