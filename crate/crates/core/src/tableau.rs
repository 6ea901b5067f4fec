//! Construction, representation and validation of Butcher tableaux for
//! symplectic implicit Runge-Kutta methods.
//!
//! Two constructors are provided:
//!
//! * [`construct_symplectic_2stage`] — the closed two-stage family in terms
//!   of its nodes (c1, c2), obtained by contracting the symplecticity
//!   identity `b_i a_ij + b_j a_ji - b_i b_j = 0` against the Vandermonde
//!   matrix of the nodes and imposing the order-two conditions
//!   `Σ b_i = 1`, `Σ b_i c_i = 1/2`:
//!
//!   ```text
//!   b2  = (1/2 - c1) / (c2 - c1)                 b1 = (1/2 - c2) / (c1 - c2)
//!   a22 = (1/8 - c1/3 - c1/6 + c1*c1/2) / (b2 (c2-c1)(c2-c1))
//!   a11 = (1/8 - c2/3 - c2/6 + c2*c2/2) / (b1 (c1-c2)(c1-c2))
//!   a21 = (1/8 - c2/3 - c1/6 + c1*c2/2) / (b2 (c2-c1)(c1-c2))
//!   a12 = (1/8 - c1/3 - c2/6 + c1*c2/2) / (b1 (c1-c2)(c2-c1))
//!   ```
//!
//!   Gauss nodes reproduce the classical two-stage Gauss method. Radau I/II
//!   nodes give symplectic order-3 methods that share its stability
//!   function (they are not the classical Radau collocation schemes, whose
//!   coefficient matrices are not symplectic). Lobatto nodes (0, 1) yield a
//!   symplectic tableau too, but one whose row sums do not equal the nodes,
//!   so no order claim beyond two is made for it; [`TableauDiagnostics`]
//!   carries the row-sum residual so callers can see this.
//!
//! * [`construct_gauss`] — Gauss collocation for 1..=6 stages: nodes are the
//!   zeros of the shifted Legendre polynomial P*_s, weights solve the
//!   quadrature conditions `Σ_i b_i c_i^(k-1) = 1/k`, and each coefficient
//!   row solves `Σ_j a_ij c_j^(k-1) = c_i^k / k`, both against the
//!   transposed Vandermonde matrix of the nodes. The resulting methods are
//!   symplectic and of order 2s.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::linalg::{lu_factor, SingularMatrix};
use crate::polynomial::{real_roots_in_unit_interval, shifted_legendre, PolynomialError};
use crate::scalar::Real;

/// Residual below which a tableau is accepted as symplectic by the CLI gate.
pub const SYMPLECTIC_RESIDUAL_TOL: f64 = 1e-12;

#[derive(Debug, Error)]
pub enum TableauError {
    #[error("{family} construction supports {supported} stages, got {stages}")]
    UnsupportedStageCount {
        family: &'static str,
        stages: usize,
        supported: &'static str,
    },
    #[error("degenerate nodes: {0}")]
    DegenerateNodes(String),
    #[error("inconsistent tableau dimensions: {0}")]
    InconsistentDimensions(String),
    #[error("nodes must be strictly increasing")]
    NodesNotIncreasing,
    #[error("node {0} lies outside [0, 1]")]
    NodeOutOfRange(f64),
    #[error(transparent)]
    Polynomial(#[from] PolynomialError),
    #[error(transparent)]
    LinearSolve(#[from] SingularMatrix),
    #[error("cannot parse tableau: {0}")]
    Parse(String),
}

/// Node families, each defined by the zeros of a shifted-Legendre combination.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NodeFamily {
    /// Zeros of P*_s.
    Gauss,
    /// Zeros of P*_s + P*_{s-1}; includes the left endpoint 0.
    RadauI,
    /// Zeros of P*_s - P*_{s-1}; includes the right endpoint 1.
    RadauII,
    /// Zeros of P*_s - P*_{s-2}; includes both endpoints.
    LobattoIII,
}

impl fmt::Display for NodeFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            NodeFamily::Gauss => "gauss",
            NodeFamily::RadauI => "radau1",
            NodeFamily::RadauII => "radau2",
            NodeFamily::LobattoIII => "lobatto3",
        };
        f.write_str(name)
    }
}

impl FromStr for NodeFamily {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "gauss" => Ok(NodeFamily::Gauss),
            "radau1" | "radaui" | "radau-1" => Ok(NodeFamily::RadauI),
            "radau2" | "radauii" | "radau-2" => Ok(NodeFamily::RadauII),
            "lobatto3" | "lobatto" | "lobattoiii" => Ok(NodeFamily::LobattoIII),
            other => Err(format!(
                "unknown node family '{other}' (expected gauss, radau1, radau2 or lobatto3)"
            )),
        }
    }
}

/// Quadrature nodes of a family, ascending in [0, 1].
pub fn nodes<T: Real>(family: NodeFamily, s: usize) -> Result<Vec<T>, TableauError> {
    let poly = match family {
        NodeFamily::Gauss => {
            if s < 1 {
                return Err(TableauError::UnsupportedStageCount {
                    family: "gauss",
                    stages: s,
                    supported: ">= 1",
                });
            }
            shifted_legendre::<T>(s)?
        }
        NodeFamily::RadauI => {
            require_two_plus("radau1", s)?;
            shifted_legendre::<T>(s)?.add(&shifted_legendre::<T>(s - 1)?)
        }
        NodeFamily::RadauII => {
            require_two_plus("radau2", s)?;
            shifted_legendre::<T>(s)?.sub(&shifted_legendre::<T>(s - 1)?)
        }
        NodeFamily::LobattoIII => {
            require_two_plus("lobatto3", s)?;
            shifted_legendre::<T>(s)?.sub(&shifted_legendre::<T>(s - 2)?)
        }
    };
    let roots = real_roots_in_unit_interval(&poly)?;
    if roots.len() != s {
        return Err(PolynomialError::RootCount {
            found: roots.len(),
            expected: s,
        }
        .into());
    }
    Ok(roots)
}

fn require_two_plus(family: &'static str, s: usize) -> Result<(), TableauError> {
    if s < 2 {
        Err(TableauError::UnsupportedStageCount {
            family,
            stages: s,
            supported: ">= 2",
        })
    } else {
        Ok(())
    }
}

/// Coefficients of an s-stage Runge-Kutta method: matrix `a`, weights `b`,
/// nodes `c`. Immutable once built; values may be shared freely across
/// threads.
#[derive(Debug, Clone, PartialEq)]
pub struct ButcherTableau<T> {
    stages: usize,
    a: Vec<T>,
    b: Vec<T>,
    c: Vec<T>,
}

impl<T: Real> ButcherTableau<T> {
    /// Validate and build a tableau. Nodes must be strictly increasing and
    /// lie in [0, 1]; dimensions must agree with the stage count.
    pub fn new(a: Vec<Vec<T>>, b: Vec<T>, c: Vec<T>) -> Result<Self, TableauError> {
        let s = c.len();
        if s == 0 {
            return Err(TableauError::InconsistentDimensions(
                "stage count must be at least 1".into(),
            ));
        }
        if b.len() != s || a.len() != s {
            return Err(TableauError::InconsistentDimensions(format!(
                "expected {s} weights and {s} coefficient rows, got {} and {}",
                b.len(),
                a.len()
            )));
        }
        let mut flat = Vec::with_capacity(s * s);
        for row in &a {
            if row.len() != s {
                return Err(TableauError::InconsistentDimensions(format!(
                    "coefficient row of length {}, expected {s}",
                    row.len()
                )));
            }
            flat.extend_from_slice(row);
        }
        for w in c.windows(2) {
            let strictly_increasing = w[1] > w[0]; // false on NaN as well
            if !strictly_increasing {
                return Err(TableauError::NodesNotIncreasing);
            }
        }
        for &ci in &c {
            if ci < T::zero() || ci > T::one() {
                return Err(TableauError::NodeOutOfRange(ci.approx_f64()));
            }
        }
        Ok(ButcherTableau {
            stages: s,
            a: flat,
            b,
            c,
        })
    }

    pub fn stages(&self) -> usize {
        self.stages
    }

    pub fn a(&self, i: usize, j: usize) -> T {
        self.a[i * self.stages + j]
    }

    pub fn a_row(&self, i: usize) -> &[T] {
        &self.a[i * self.stages..(i + 1) * self.stages]
    }

    pub fn b(&self) -> &[T] {
        &self.b
    }

    pub fn c(&self) -> &[T] {
        &self.c
    }

    /// Residuals of the defining algebraic identities.
    pub fn diagnostics(&self) -> TableauDiagnostics<T> {
        let s = self.stages;
        let mut symplectic = T::zero();
        for i in 0..s {
            for j in 0..s {
                let r = (self.b[i] * self.a(i, j) + self.b[j] * self.a(j, i)
                    - self.b[i] * self.b[j])
                    .abs();
                symplectic = symplectic.max(r);
            }
        }
        let mut sum_b = T::zero();
        let mut sum_bc = T::zero();
        for i in 0..s {
            sum_b = sum_b + self.b[i];
            sum_bc = sum_bc + self.b[i] * self.c[i];
        }
        let mut row_sum = T::zero();
        for i in 0..s {
            let mut acc = T::zero();
            for j in 0..s {
                acc = acc + self.a(i, j);
            }
            row_sum = row_sum.max((acc - self.c[i]).abs());
        }
        TableauDiagnostics {
            symplectic_residual: symplectic,
            weight_sum_residual: (sum_b - T::one()).abs(),
            weight_moment_residual: (sum_bc - T::of(0.5)).abs(),
            row_sum_residual: row_sum,
        }
    }
}

/// Text form: `s=<n>`, one `c_i | a_i1 ... a_is` line per stage, then
/// `b: b_1 ... b_s`, all values with 17 significant digits (exact f64
/// round trip).
impl<T: Real> fmt::Display for ButcherTableau<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "s={}", self.stages)?;
        for i in 0..self.stages {
            write!(f, "{:.16e} |", self.c[i])?;
            for j in 0..self.stages {
                write!(f, " {:.16e}", self.a(i, j))?;
            }
            writeln!(f)?;
        }
        write!(f, "b:")?;
        for i in 0..self.stages {
            write!(f, " {:.16e}", self.b[i])?;
        }
        Ok(())
    }
}

impl FromStr for ButcherTableau<f64> {
    type Err = TableauError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let header = lines
            .next()
            .ok_or_else(|| TableauError::Parse("empty input".into()))?;
        let s: usize = header
            .strip_prefix("s=")
            .ok_or_else(|| TableauError::Parse(format!("expected 's=<n>' header, got '{header}'")))?
            .trim()
            .parse()
            .map_err(|e| TableauError::Parse(format!("bad stage count: {e}")))?;
        let mut a = Vec::with_capacity(s);
        let mut c = Vec::with_capacity(s);
        for i in 0..s {
            let line = lines
                .next()
                .ok_or_else(|| TableauError::Parse(format!("missing stage line {}", i + 1)))?;
            let (ci, row) = line
                .split_once('|')
                .ok_or_else(|| TableauError::Parse(format!("stage line without '|': '{line}'")))?;
            c.push(parse_value(ci)?);
            let row: Result<Vec<f64>, _> = row.split_whitespace().map(parse_value).collect();
            a.push(row?);
        }
        let b_line = lines
            .next()
            .ok_or_else(|| TableauError::Parse("missing weights line".into()))?;
        let b_body = b_line
            .strip_prefix("b:")
            .ok_or_else(|| TableauError::Parse(format!("expected 'b:' line, got '{b_line}'")))?;
        let b: Result<Vec<f64>, _> = b_body.split_whitespace().map(parse_value).collect();
        ButcherTableau::new(a, b?, c)
    }
}

fn parse_value(text: &str) -> Result<f64, TableauError> {
    text.trim()
        .parse()
        .map_err(|e| TableauError::Parse(format!("bad value '{}': {e}", text.trim())))
}

/// Residuals of the identities a symplectic order-two tableau must satisfy.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TableauDiagnostics<T> {
    /// max over i, j of |b_i a_ij + b_j a_ji - b_i b_j|
    pub symplectic_residual: T,
    /// |Σ b_i - 1|
    pub weight_sum_residual: T,
    /// |Σ b_i c_i - 1/2|
    pub weight_moment_residual: T,
    /// max over i of |Σ_j a_ij - c_i|; nonzero flags a non-collocation
    /// tableau (the Lobatto-node two-stage construction).
    pub row_sum_residual: T,
}

impl<T: Real> fmt::Display for TableauDiagnostics<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "symplectic_residual    = {:.3e}",
            self.symplectic_residual
        )?;
        writeln!(
            f,
            "weight_sum_residual    = {:.3e}",
            self.weight_sum_residual
        )?;
        writeln!(
            f,
            "weight_moment_residual = {:.3e}",
            self.weight_moment_residual
        )?;
        write!(f, "row_sum_residual       = {:.3e}", self.row_sum_residual)
    }
}

/// Two-stage symplectic tableau from its nodes, by the closed formulas in
/// the module docs. Rejects coincident nodes and nodes at 1/2 (which make a
/// weight vanish); requires c1 < c2.
pub fn construct_symplectic_2stage<T: Real>(
    c1: T,
    c2: T,
) -> Result<ButcherTableau<T>, TableauError> {
    let tol = T::epsilon() * T::of(64.0);
    if (c2 - c1).abs() <= tol {
        return Err(TableauError::DegenerateNodes(format!(
            "nodes {} and {} coincide",
            c1.approx_f64(),
            c2.approx_f64()
        )));
    }
    if c1 >= c2 {
        return Err(TableauError::NodesNotIncreasing);
    }
    let half = T::of(0.5);
    if (c1 - half).abs() <= tol || (c2 - half).abs() <= tol {
        return Err(TableauError::DegenerateNodes(
            "a node at 1/2 makes the opposite weight vanish and the construction divides by it"
                .into(),
        ));
    }
    let eighth = T::of(0.125);
    let third = T::of(1.0 / 3.0);
    let sixth = T::of(1.0 / 6.0);

    let b2 = (half - c1) / (c2 - c1);
    let b1 = (half - c2) / (c1 - c2);
    let a22 = (eighth - c1 * third - c1 * sixth + c1 * c1 * half) / (b2 * (c2 - c1) * (c2 - c1));
    let a11 = (eighth - c2 * third - c2 * sixth + c2 * c2 * half) / (b1 * (c1 - c2) * (c1 - c2));
    let a21 = (eighth - c2 * third - c1 * sixth + c1 * c2 * half) / (b2 * (c2 - c1) * (c1 - c2));
    let a12 = (eighth - c1 * third - c2 * sixth + c1 * c2 * half) / (b1 * (c1 - c2) * (c2 - c1));

    ButcherTableau::new(
        vec![vec![a11, a12], vec![a21, a22]],
        vec![b1, b2],
        vec![c1, c2],
    )
}

/// Gauss collocation tableau with `s` stages (1..=6), order 2s.
pub fn construct_gauss<T: Real>(s: usize) -> Result<ButcherTableau<T>, TableauError> {
    if !(1..=6).contains(&s) {
        return Err(TableauError::UnsupportedStageCount {
            family: "gauss",
            stages: s,
            supported: "1..=6",
        });
    }
    let c = nodes::<T>(NodeFamily::Gauss, s)?;

    // Row k of the system matrix is (c_1^k, ..., c_s^k), k = 0..s-1: the
    // transpose of the Vandermonde matrix of the nodes.
    let mut m = vec![T::zero(); s * s];
    for (i, &ci) in c.iter().enumerate() {
        let mut power = T::one();
        for k in 0..s {
            m[k * s + i] = power;
            power = power * ci;
        }
    }
    let lu = lu_factor(m, s)?;

    let mut b = (0..s)
        .map(|k| T::one() / T::of_usize(k + 1))
        .collect::<Vec<_>>();
    lu.solve_in_place(&mut b);

    let mut a = Vec::with_capacity(s);
    for &ci in &c {
        let mut rhs = Vec::with_capacity(s);
        let mut power = T::one();
        for k in 0..s {
            power = power * ci;
            rhs.push(power / T::of_usize(k + 1)); // c_i^(k+1) / (k+1)
        }
        lu.solve_in_place(&mut rhs);
        a.push(rhs);
    }

    ButcherTableau::new(a, b, c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const SQRT3: f64 = 1.7320508075688772;

    proptest! {
        /// The closed two-stage construction is symplectic and order two for
        /// any admissible node pair, not just the named families.
        #[test]
        fn two_stage_construction_is_symplectic(c1 in 0.0f64..0.45, c2 in 0.55f64..1.0) {
            let tab = construct_symplectic_2stage(c1, c2).unwrap();
            let d = tab.diagnostics();
            prop_assert!(d.symplectic_residual <= SYMPLECTIC_RESIDUAL_TOL);
            prop_assert!(d.weight_sum_residual <= 1e-13);
            prop_assert!(d.weight_moment_residual <= 1e-13);
        }
    }

    fn assert_close(actual: &ButcherTableau<f64>, a: [[f64; 2]; 2], b: [f64; 2], c: [f64; 2]) {
        for (i, row) in a.iter().enumerate() {
            for (j, aij) in row.iter().enumerate() {
                assert!(
                    (actual.a(i, j) - aij).abs() <= 1e-13,
                    "a[{i}][{j}] = {}, expected {aij}",
                    actual.a(i, j)
                );
            }
            assert!((actual.b()[i] - b[i]).abs() <= 1e-13);
            assert!((actual.c()[i] - c[i]).abs() <= 1e-13);
        }
    }

    #[test]
    fn gauss_2stage_matches_reference() {
        let c = nodes::<f64>(NodeFamily::Gauss, 2).unwrap();
        let tab = construct_symplectic_2stage(c[0], c[1]).unwrap();
        let r = SQRT3 / 6.0;
        assert_close(
            &tab,
            [[0.25, 0.25 - r], [0.25 + r, 0.25]],
            [0.5, 0.5],
            [0.5 - r, 0.5 + r],
        );
        assert!(tab.diagnostics().symplectic_residual <= 1e-15);
    }

    #[test]
    fn radau1_2stage_matches_reference() {
        let c = nodes::<f64>(NodeFamily::RadauI, 2).unwrap();
        let tab = construct_symplectic_2stage(c[0], c[1]).unwrap();
        assert_close(
            &tab,
            [[1.0 / 8.0, -1.0 / 8.0], [7.0 / 24.0, 3.0 / 8.0]],
            [0.25, 0.75],
            [0.0, 2.0 / 3.0],
        );
    }

    #[test]
    fn radau2_2stage_matches_reference() {
        let c = nodes::<f64>(NodeFamily::RadauII, 2).unwrap();
        let tab = construct_symplectic_2stage(c[0], c[1]).unwrap();
        assert_close(
            &tab,
            [[3.0 / 8.0, -1.0 / 24.0], [7.0 / 8.0, 1.0 / 8.0]],
            [0.75, 0.25],
            [1.0 / 3.0, 1.0],
        );
        // collocation-consistent rows: 3/8 - 1/24 = 1/3, 7/8 + 1/8 = 1
        assert!(tab.diagnostics().row_sum_residual <= 1e-15);
    }

    #[test]
    fn lobatto_node_tableau_flags_row_sums() {
        let tab = construct_symplectic_2stage(0.0, 1.0).unwrap();
        assert_close(
            &tab,
            [[0.25, 1.0 / 12.0], [5.0 / 12.0, 0.25]],
            [0.5, 0.5],
            [0.0, 1.0],
        );
        let d = tab.diagnostics();
        assert!(d.symplectic_residual <= 1e-15);
        assert!((d.row_sum_residual - 1.0 / 3.0).abs() <= 1e-15);
    }

    #[test]
    fn rejects_degenerate_nodes() {
        assert!(matches!(
            construct_symplectic_2stage(0.3, 0.3),
            Err(TableauError::DegenerateNodes(_))
        ));
        assert!(matches!(
            construct_symplectic_2stage(0.5, 0.9),
            Err(TableauError::DegenerateNodes(_))
        ));
        assert!(matches!(
            construct_symplectic_2stage(0.1, 0.5),
            Err(TableauError::DegenerateNodes(_))
        ));
        assert!(matches!(
            construct_symplectic_2stage(0.9, 0.1),
            Err(TableauError::NodesNotIncreasing)
        ));
    }

    #[test]
    fn gauss_1stage_is_midpoint() {
        let tab = construct_gauss::<f64>(1).unwrap();
        assert_eq!(tab.stages(), 1);
        assert!((tab.c()[0] - 0.5).abs() <= 1e-15);
        assert!((tab.b()[0] - 1.0).abs() <= 1e-15);
        assert!((tab.a(0, 0) - 0.5).abs() <= 1e-15);
    }

    #[test]
    fn gauss_collocation_agrees_with_2stage_closed_form() {
        let via_gauss = construct_gauss::<f64>(2).unwrap();
        let c = nodes::<f64>(NodeFamily::Gauss, 2).unwrap();
        let via_closed = construct_symplectic_2stage(c[0], c[1]).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                assert!((via_gauss.a(i, j) - via_closed.a(i, j)).abs() <= 1e-13);
            }
            assert!((via_gauss.b()[i] - via_closed.b()[i]).abs() <= 1e-13);
            assert!((via_gauss.c()[i] - via_closed.c()[i]).abs() <= 1e-13);
        }
    }

    #[test]
    fn gauss_3stage_weights() {
        // Independent route: with nodes (1/2 - r, 1/2, 1/2 + r), the k = 1..3
        // moment conditions give b1 = (1/3 - 1/4) / (c1^2 + c3^2 - 1/2) and
        // b2 = 1 - 2 b1 by symmetry.
        let tab = construct_gauss::<f64>(3).unwrap();
        let c = tab.c();
        let b1_expected = (1.0 / 3.0 - 1.0 / 4.0) / (c[0] * c[0] + c[2] * c[2] - 0.5);
        let b2_expected = 1.0 - 2.0 * b1_expected;
        assert!((b1_expected - 5.0 / 18.0).abs() <= 1e-14);
        assert!((b2_expected - 4.0 / 9.0).abs() <= 1e-14);
        assert!((tab.b()[0] - 5.0 / 18.0).abs() <= 1e-12);
        assert!((tab.b()[1] - 4.0 / 9.0).abs() <= 1e-12);
        assert!((tab.b()[2] - 5.0 / 18.0).abs() <= 1e-12);
    }

    #[test]
    fn all_constructed_tableaux_are_symplectic_order_two() {
        let mut tabs = Vec::new();
        for s in 1..=6 {
            tabs.push(construct_gauss::<f64>(s).unwrap());
        }
        for family in [
            NodeFamily::RadauI,
            NodeFamily::RadauII,
            NodeFamily::LobattoIII,
        ] {
            let c = nodes::<f64>(family, 2).unwrap();
            tabs.push(construct_symplectic_2stage(c[0], c[1]).unwrap());
        }
        for tab in &tabs {
            let d = tab.diagnostics();
            assert!(
                d.symplectic_residual <= SYMPLECTIC_RESIDUAL_TOL,
                "s={} residual {:e}",
                tab.stages(),
                d.symplectic_residual
            );
            assert!(d.weight_sum_residual <= 1e-13);
            assert!(d.weight_moment_residual <= 1e-13);
        }
    }

    #[test]
    fn explicit_euler_control_case() {
        let tab = ButcherTableau::new(vec![vec![0.0]], vec![1.0], vec![0.0]).unwrap();
        let d = tab.diagnostics();
        assert_eq!(d.symplectic_residual, 1.0);
    }

    #[test]
    fn text_format_round_trips() {
        let tab = construct_gauss::<f64>(3).unwrap();
        let text = tab.to_string();
        assert!(text.starts_with("s=3\n"));
        let parsed: ButcherTableau<f64> = text.parse().unwrap();
        assert_eq!(parsed, tab);
    }

    #[test]
    fn parse_rejects_malformed_input() {
        assert!("".parse::<ButcherTableau<f64>>().is_err());
        assert!("s=2\n0.1 | 0.0 0.0\nb: 1.0 0.0"
            .parse::<ButcherTableau<f64>>()
            .is_err());
        assert!("s=1\n0.5 | 0.5\nnot-weights"
            .parse::<ButcherTableau<f64>>()
            .is_err());
    }

    #[test]
    fn f32_lane_constructs_gauss2() {
        let tab = construct_gauss::<f32>(2).unwrap();
        assert!(tab.diagnostics().symplectic_residual <= 1e-6);
        assert!((tab.b()[0] - 0.5).abs() <= 1e-6);
    }

    #[test]
    fn rejects_out_of_range_and_unordered_nodes() {
        assert!(matches!(
            ButcherTableau::new(vec![vec![0.0]], vec![1.0], vec![1.5]),
            Err(TableauError::NodeOutOfRange(_))
        ));
        assert!(matches!(
            ButcherTableau::new(
                vec![vec![0.0, 0.0], vec![0.0, 0.0]],
                vec![0.5, 0.5],
                vec![0.7, 0.2]
            ),
            Err(TableauError::NodesNotIncreasing)
        ));
    }
}
