//! Symplectic implicit Runge-Kutta methods built from first principles.
//!
//! The crate constructs Butcher tableaux whose coefficients satisfy the
//! symplecticity identity `b_i a_ij + b_j a_ji - b_i b_j = 0` (Gauss
//! collocation for any stage count, plus a closed-form two-stage family
//! parameterized by its nodes), integrates first-order ODE systems with a
//! Newton stage solver, and measures how well the integrals of motion of
//! three harmonic-oscillator benchmark systems are preserved along the
//! numerical flow. Closed-form exact solutions serve as the independent
//! ground truth for every numerical claim.
//!
//! All numeric kernels are generic over the scalar type through
//! [`scalar::Real`] (implemented for `f32` and `f64`); the `*64` aliases at
//! the crate root name the double-precision instantiations used by the CLI
//! and the test suites.

pub mod integrals;
pub mod irk;
pub mod linalg;
pub mod models;
pub mod oracle;
pub mod polynomial;
pub mod scalar;
pub mod tableau;

pub use scalar::Real;

pub type Polynomial64 = polynomial::Polynomial<f64>;
pub type ButcherTableau64 = tableau::ButcherTableau<f64>;
pub type TableauDiagnostics64 = tableau::TableauDiagnostics<f64>;
pub type SolverConfig64 = irk::SolverConfig<f64>;
pub type Trajectory64 = irk::Trajectory<f64>;
pub type OscillatorParams64 = models::OscillatorParams<f64>;
pub type OscillatorField64 = models::OscillatorField<f64>;
pub type ExactSolution64 = oracle::ExactSolution<f64>;
pub type FirstIntegralSet64 = integrals::FirstIntegralSet<f64>;
pub type ErrorSeries64 = integrals::ErrorSeries<f64>;
