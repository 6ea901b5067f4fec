//! The three harmonic-oscillator benchmark systems in first-order form.
//!
//! All derive from y'' = -k² y:
//!
//! * Case I — k² = 1, real y. State `(y, y')`, dimension 2.
//! * Case II — k² = 1, complex y = f + i g. Two uncoupled unit oscillators;
//!   state `(f, g, f', g')`, dimension 4.
//! * Case III — complex k = α₁ + i α₂ and complex y. Coupled pair
//!   f'' = -(α₁²-α₂²) f + 2 α₁ α₂ g, g'' = -(α₁²-α₂²) g - 2 α₁ α₂ f;
//!   state `(f, g, f', g')`, dimension 4.
//!
//! Positions come before velocities in the state layout; every module in
//! this crate (integrator, integrals, oracle, CLI output) uses the same
//! ordering.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::irk::VectorField;
use crate::scalar::Real;

#[derive(Debug, Error)]
pub enum ModelError {
    #[error("case III requires (alpha1, alpha2) != (0, 0)")]
    ZeroFrequency,
    #[error("unknown case '{0}' (expected 1, 2 or 3)")]
    UnknownCase(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Case {
    I,
    II,
    III,
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Case::I => f.write_str("I"),
            Case::II => f.write_str("II"),
            Case::III => f.write_str("III"),
        }
    }
}

impl FromStr for Case {
    type Err = ModelError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_uppercase().as_str() {
            "1" | "I" => Ok(Case::I),
            "2" | "II" => Ok(Case::II),
            "3" | "III" => Ok(Case::III),
            other => Err(ModelError::UnknownCase(other.to_string())),
        }
    }
}

/// Which oscillator system, plus the frequency components of Case III.
/// Cases I and II fix k² = 1; their stored alphas are (1, 0) so the exact
/// flow can treat every case through k = α₁ + i α₂.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OscillatorParams<T> {
    case: Case,
    alpha1: T,
    alpha2: T,
}

impl<T: Real> OscillatorParams<T> {
    pub fn case1() -> Self {
        OscillatorParams {
            case: Case::I,
            alpha1: T::one(),
            alpha2: T::zero(),
        }
    }

    pub fn case2() -> Self {
        OscillatorParams {
            case: Case::II,
            alpha1: T::one(),
            alpha2: T::zero(),
        }
    }

    pub fn case3(alpha1: T, alpha2: T) -> Result<Self, ModelError> {
        if alpha1 == T::zero() && alpha2 == T::zero() {
            return Err(ModelError::ZeroFrequency);
        }
        Ok(OscillatorParams {
            case: Case::III,
            alpha1,
            alpha2,
        })
    }

    pub fn case(&self) -> Case {
        self.case
    }

    pub fn alpha1(&self) -> T {
        self.alpha1
    }

    pub fn alpha2(&self) -> T {
        self.alpha2
    }

    pub fn dim(&self) -> usize {
        match self.case {
            Case::I => 2,
            Case::II | Case::III => 4,
        }
    }

    /// Default initial data used by the experiments (the source experiments
    /// do not fix one): (1, 0) for Case I, (1, 0.5, 0, 0.2) otherwise.
    pub fn default_initial_state(&self) -> Vec<T> {
        match self.case {
            Case::I => vec![T::one(), T::zero()],
            Case::II | Case::III => vec![T::one(), T::of(0.5), T::zero(), T::of(0.2)],
        }
    }

    /// State component names in layout order.
    pub fn component_names(&self) -> &'static [&'static str] {
        match self.case {
            Case::I => &["y", "yp"],
            Case::II | Case::III => &["f", "g", "fp", "gp"],
        }
    }
}

/// The oscillator right-hand side with its constant Jacobian.
#[derive(Debug, Clone)]
pub struct OscillatorField<T> {
    params: OscillatorParams<T>,
    jacobian: Vec<T>,
}

/// Build the vector field (and constant Jacobian) for a parameter set.
pub fn vector_field<T: Real>(params: &OscillatorParams<T>) -> OscillatorField<T> {
    let d = params.dim();
    let mut jac = vec![T::zero(); d * d];
    let mut set = |row: usize, col: usize, v: T| jac[row * d + col] = v;
    match params.case {
        Case::I => {
            set(0, 1, T::one());
            set(1, 0, -T::one());
        }
        Case::II => {
            set(0, 2, T::one());
            set(1, 3, T::one());
            set(2, 0, -T::one());
            set(3, 1, -T::one());
        }
        Case::III => {
            let beta = params.alpha1 * params.alpha1 - params.alpha2 * params.alpha2;
            let gamma = T::of(2.0) * params.alpha1 * params.alpha2;
            set(0, 2, T::one());
            set(1, 3, T::one());
            set(2, 0, -beta);
            set(2, 1, gamma);
            set(3, 0, -gamma);
            set(3, 1, -beta);
        }
    }
    OscillatorField {
        params: *params,
        jacobian: jac,
    }
}

impl<T: Real> OscillatorField<T> {
    pub fn params(&self) -> &OscillatorParams<T> {
        &self.params
    }
}

impl<T: Real> VectorField<T> for OscillatorField<T> {
    fn dim(&self) -> usize {
        self.params.dim()
    }

    fn eval(&self, _t: T, y: &[T], out: &mut [T]) {
        match self.params.case {
            Case::I => {
                out[0] = y[1];
                out[1] = -y[0];
            }
            Case::II => {
                out[0] = y[2];
                out[1] = y[3];
                out[2] = -y[0];
                out[3] = -y[1];
            }
            Case::III => {
                let beta = self.params.alpha1 * self.params.alpha1
                    - self.params.alpha2 * self.params.alpha2;
                let gamma = T::of(2.0) * self.params.alpha1 * self.params.alpha2;
                out[0] = y[2];
                out[1] = y[3];
                out[2] = -beta * y[0] + gamma * y[1];
                out[3] = -beta * y[1] - gamma * y[0];
            }
        }
    }

    fn jacobian(&self, _t: T, _y: &[T], out: &mut [T]) {
        out.copy_from_slice(&self.jacobian);
    }
}
