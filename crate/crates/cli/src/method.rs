//! Named integration methods and custom tableau files.

use std::fs;
use std::path::PathBuf;

use anyhow::{bail, Context, Result};

use sirk_core::tableau::{construct_gauss, construct_symplectic_2stage, nodes, NodeFamily};
use sirk_core::ButcherTableau64;

#[derive(Debug, Clone, PartialEq)]
pub enum MethodSpec {
    Gauss1,
    Gauss2,
    Gauss3,
    Radau1_2,
    Radau2_2,
    Lobatto2,
    Custom(PathBuf),
}

impl MethodSpec {
    /// Accepts a known method name, `custom-file:<path>`, or a bare path to
    /// a tableau text file.
    pub fn parse(text: &str) -> Result<Self> {
        let name = text.trim();
        match name.to_ascii_lowercase().as_str() {
            "gauss1" => return Ok(MethodSpec::Gauss1),
            "gauss2" => return Ok(MethodSpec::Gauss2),
            "gauss3" => return Ok(MethodSpec::Gauss3),
            "radau1_2" | "radau1-2" => return Ok(MethodSpec::Radau1_2),
            "radau2_2" | "radau2-2" => return Ok(MethodSpec::Radau2_2),
            "lobatto_2" | "lobatto-2" | "lobatto2" => return Ok(MethodSpec::Lobatto2),
            _ => {}
        }
        if let Some(path) = name.strip_prefix("custom-file:") {
            return Ok(MethodSpec::Custom(PathBuf::from(path)));
        }
        let path = PathBuf::from(name);
        if path.exists() {
            return Ok(MethodSpec::Custom(path));
        }
        bail!(
            "unknown method '{name}' (expected gauss1, gauss2, gauss3, radau1_2, \
             radau2_2, lobatto_2, or a tableau file path)"
        );
    }

    pub fn label(&self) -> String {
        match self {
            MethodSpec::Gauss1 => "gauss1".into(),
            MethodSpec::Gauss2 => "gauss2".into(),
            MethodSpec::Gauss3 => "gauss3".into(),
            MethodSpec::Radau1_2 => "radau1_2".into(),
            MethodSpec::Radau2_2 => "radau2_2".into(),
            MethodSpec::Lobatto2 => "lobatto_2".into(),
            MethodSpec::Custom(path) => format!("custom-file:{}", path.display()),
        }
    }

    pub fn tableau(&self) -> Result<ButcherTableau64> {
        let two_stage = |family: NodeFamily| -> Result<ButcherTableau64> {
            let c = nodes::<f64>(family, 2)?;
            Ok(construct_symplectic_2stage(c[0], c[1])?)
        };
        Ok(match self {
            MethodSpec::Gauss1 => construct_gauss(1)?,
            MethodSpec::Gauss2 => construct_gauss(2)?,
            MethodSpec::Gauss3 => construct_gauss(3)?,
            MethodSpec::Radau1_2 => two_stage(NodeFamily::RadauI)?,
            MethodSpec::Radau2_2 => two_stage(NodeFamily::RadauII)?,
            MethodSpec::Lobatto2 => two_stage(NodeFamily::LobattoIII)?,
            MethodSpec::Custom(path) => {
                let text = fs::read_to_string(path)
                    .with_context(|| format!("cannot read tableau file {}", path.display()))?;
                text.parse()
                    .with_context(|| format!("cannot parse tableau file {}", path.display()))?
            }
        })
    }

    /// Declared empirical-order acceptance band on Case I at T = 1, if any.
    pub fn order_band(&self) -> Option<(f64, f64)> {
        match self {
            MethodSpec::Gauss1 => Some((1.8, 2.2)),
            MethodSpec::Gauss2 => Some((3.8, 4.2)),
            MethodSpec::Radau1_2 | MethodSpec::Radau2_2 => Some((2.8, 3.2)),
            MethodSpec::Gauss3 | MethodSpec::Lobatto2 | MethodSpec::Custom(_) => None,
        }
    }

    /// Step sizes used by the order study when none are given. gauss3
    /// reaches the roundoff floor below h ≈ 0.1 at T = 1, so it fits its
    /// slope on coarser steps.
    pub fn default_h_list(&self) -> Vec<f64> {
        match self {
            MethodSpec::Gauss3 => vec![0.4, 0.3, 0.2, 0.15],
            _ => vec![0.1, 0.05, 0.025, 0.0125],
        }
    }
}
