//! Fixed-step implicit Runge-Kutta integration.
//!
//! Each step solves the coupled stage system
//! `Y_i = y + h Σ_j a_ij f(t + c_j h, Y_j)` by Newton iteration on the
//! stacked (stages · dim)-dimensional unknown with the analytic Jacobian of
//! the field, then advances `y_next = y + h Σ_i b_i f(t + c_i h, Y_i)`.
//! For the linear fields in this crate the stage system is linear, so a
//! single Newton solve lands on the solution up to roundoff.

use thiserror::Error;

use crate::linalg::{lu_factor, SingularMatrix};
use crate::scalar::Real;
use crate::tableau::ButcherTableau;

/// A first-order ODE system `y' = f(t, y)` with an analytic Jacobian.
pub trait VectorField<T: Real> {
    fn dim(&self) -> usize;

    /// Write `f(t, y)` into `out` (length `dim`).
    fn eval(&self, t: T, y: &[T], out: &mut [T]);

    /// Write the row-major `dim`×`dim` Jacobian `∂f/∂y` at `(t, y)` into `out`.
    fn jacobian(&self, t: T, y: &[T], out: &mut [T]);
}

/// A vector field defined by closures, mostly for tests and experiments.
pub struct ClosureField<T, F, J>
where
    F: Fn(T, &[T], &mut [T]),
    J: Fn(T, &[T], &mut [T]),
{
    dim: usize,
    eval: F,
    jacobian: J,
    _marker: std::marker::PhantomData<T>,
}

impl<T: Real, F, J> ClosureField<T, F, J>
where
    F: Fn(T, &[T], &mut [T]),
    J: Fn(T, &[T], &mut [T]),
{
    pub fn new(dim: usize, eval: F, jacobian: J) -> Self {
        ClosureField {
            dim,
            eval,
            jacobian,
            _marker: std::marker::PhantomData,
        }
    }
}

impl<T: Real, F, J> VectorField<T> for ClosureField<T, F, J>
where
    F: Fn(T, &[T], &mut [T]),
    J: Fn(T, &[T], &mut [T]),
{
    fn dim(&self) -> usize {
        self.dim
    }

    fn eval(&self, t: T, y: &[T], out: &mut [T]) {
        (self.eval)(t, y, out)
    }

    fn jacobian(&self, t: T, y: &[T], out: &mut [T]) {
        (self.jacobian)(t, y, out)
    }
}

/// Stage-solver settings.
#[derive(Debug, Clone, Copy)]
pub struct SolverConfig<T> {
    /// Convergence threshold on the sup-norm of the stage residual.
    pub newton_tol: T,
    pub max_newton_iters: usize,
    /// Fall back to fixed-point sweeps if the Newton matrix is singular.
    pub fallback_fixed_point: bool,
}

impl<T: Real> Default for SolverConfig<T> {
    fn default() -> Self {
        SolverConfig {
            newton_tol: T::of(1e-13),
            max_newton_iters: 25,
            fallback_fixed_point: false,
        }
    }
}

impl<T: Real> SolverConfig<T> {
    fn validate(&self) -> Result<(), IrkError> {
        let tol_positive = self.newton_tol > T::zero(); // false on NaN as well
        if !tol_positive {
            return Err(IrkError::InvalidConfig("newton_tol must be positive"));
        }
        if self.max_newton_iters == 0 {
            return Err(IrkError::InvalidConfig(
                "max_newton_iters must be at least 1",
            ));
        }
        Ok(())
    }
}

#[derive(Debug, Error)]
pub enum IrkError {
    #[error("invalid solver configuration: {0}")]
    InvalidConfig(&'static str),
    #[error("state dimension {state} does not match field dimension {field}")]
    DimensionMismatch { state: usize, field: usize },
    #[error("step size must be nonzero")]
    ZeroStep,
    #[error(
        "stage iteration did not converge after {iterations} iterations \
         (residual {residual:e}); the step size may be too large for this tableau"
    )]
    NonConvergence { iterations: usize, residual: f64 },
    #[error(
        "stage iteration did not converge at step {step} after {iterations} iterations \
         (residual {residual:e})"
    )]
    NonConvergenceAtStep {
        step: usize,
        iterations: usize,
        residual: f64,
    },
    #[error("Newton matrix is singular and fixed-point fallback is disabled: {0}")]
    SingularNewtonMatrix(#[from] SingularMatrix),
}

/// Outcome of a single step.
#[derive(Debug, Clone)]
pub struct StepResult<T> {
    /// State after the step.
    pub y: Vec<T>,
    /// Iterations used, counting the residual check that observed convergence.
    pub newton_iterations: usize,
    /// Sup-norm of the stage residual at acceptance.
    pub residual: T,
}

/// One implicit Runge-Kutta step from `(t, y)` with step `h` (any nonzero
/// value; a negative `h` steps the adjoint direction).
pub fn irk_step<T: Real, F: VectorField<T> + ?Sized>(
    tab: &ButcherTableau<T>,
    field: &F,
    t: T,
    y: &[T],
    h: T,
    cfg: &SolverConfig<T>,
) -> Result<StepResult<T>, IrkError> {
    cfg.validate()?;
    let d = field.dim();
    if y.len() != d {
        return Err(IrkError::DimensionMismatch {
            state: y.len(),
            field: d,
        });
    }
    if h == T::zero() {
        return Err(IrkError::ZeroStep);
    }
    let s = tab.stages();
    let nd = s * d;

    // Stage vectors stacked as Z = (Y_1, ..., Y_s); initial guess Y_i = y.
    let mut stages = Vec::with_capacity(nd);
    for _ in 0..s {
        stages.extend_from_slice(y);
    }
    let mut fvals = vec![T::zero(); nd];
    let mut residual = vec![T::zero(); nd];
    let mut jac_block = vec![T::zero(); d * d];

    let mut last_norm = T::infinity();
    for iteration in 1..=cfg.max_newton_iters {
        for j in 0..s {
            let tj = t + tab.c()[j] * h;
            field.eval(
                tj,
                &stages[j * d..(j + 1) * d],
                &mut fvals[j * d..(j + 1) * d],
            );
        }
        let mut norm = T::zero();
        for i in 0..s {
            for m in 0..d {
                let mut acc = T::zero();
                for j in 0..s {
                    acc = acc + tab.a(i, j) * fvals[j * d + m];
                }
                let r = stages[i * d + m] - y[m] - h * acc;
                residual[i * d + m] = r;
                norm = norm.max(r.abs());
            }
        }
        last_norm = norm;
        if norm <= cfg.newton_tol {
            let mut out = y.to_vec();
            for i in 0..s {
                let w = h * tab.b()[i];
                for m in 0..d {
                    out[m] = out[m] + w * fvals[i * d + m];
                }
            }
            return Ok(StepResult {
                y: out,
                newton_iterations: iteration,
                residual: norm,
            });
        }

        // Newton matrix: block (i, j) = δ_ij I - h a_ij J_f(t + c_j h, Y_j).
        let mut newton = vec![T::zero(); nd * nd];
        for j in 0..s {
            let tj = t + tab.c()[j] * h;
            field.jacobian(tj, &stages[j * d..(j + 1) * d], &mut jac_block);
            for i in 0..s {
                let scale = h * tab.a(i, j);
                for m in 0..d {
                    for l in 0..d {
                        let mut v = -scale * jac_block[m * d + l];
                        if i == j && m == l {
                            v = v + T::one();
                        }
                        newton[(i * d + m) * nd + (j * d + l)] = v;
                    }
                }
            }
        }
        match lu_factor(newton, nd) {
            Ok(lu) => {
                for r in residual.iter_mut() {
                    *r = -*r;
                }
                lu.solve_in_place(&mut residual);
                for (z, dz) in stages.iter_mut().zip(&residual) {
                    *z = *z + *dz;
                }
            }
            Err(singular) => {
                if cfg.fallback_fixed_point {
                    for i in 0..s {
                        for m in 0..d {
                            let mut acc = T::zero();
                            for j in 0..s {
                                acc = acc + tab.a(i, j) * fvals[j * d + m];
                            }
                            stages[i * d + m] = y[m] + h * acc;
                        }
                    }
                } else {
                    return Err(IrkError::SingularNewtonMatrix(singular));
                }
            }
        }
    }
    Err(IrkError::NonConvergence {
        iterations: cfg.max_newton_iters,
        residual: last_norm.approx_f64(),
    })
}

/// Uniform-grid solution samples: `states[k]` approximates the state at
/// `t0 + k h`.
#[derive(Debug, Clone)]
pub struct Trajectory<T> {
    t0: T,
    h: T,
    states: Vec<Vec<T>>,
}

impl<T: Real> Trajectory<T> {
    pub fn t0(&self) -> T {
        self.t0
    }

    pub fn h(&self) -> T {
        self.h
    }

    /// Number of steps taken (`states().len() - 1`).
    pub fn steps(&self) -> usize {
        self.states.len() - 1
    }

    pub fn dim(&self) -> usize {
        self.states[0].len()
    }

    /// Grid time of sample `k`, computed as `t0 + k·h`.
    pub fn time(&self, k: usize) -> T {
        self.t0 + T::of_usize(k) * self.h
    }

    pub fn states(&self) -> &[Vec<T>] {
        &self.states
    }

    pub fn state(&self, k: usize) -> &[T] {
        &self.states[k]
    }

    pub fn last(&self) -> &[T] {
        self.states
            .last()
            .expect("trajectory holds the initial state")
    }
}

/// Integrate `n` fixed steps from `(t0, y0)`. Deterministic: identical
/// inputs give bit-identical trajectories on one platform.
pub fn integrate<T: Real, F: VectorField<T> + ?Sized>(
    tab: &ButcherTableau<T>,
    field: &F,
    t0: T,
    y0: &[T],
    h: T,
    n: usize,
    cfg: &SolverConfig<T>,
) -> Result<Trajectory<T>, IrkError> {
    assert!(n >= 1, "step count must be at least 1");
    let mut states = Vec::with_capacity(n + 1);
    states.push(y0.to_vec());
    for k in 0..n {
        let t = t0 + T::of_usize(k) * h;
        let step = irk_step(tab, field, t, &states[k], h, cfg).map_err(|e| match e {
            IrkError::NonConvergence {
                iterations,
                residual,
            } => IrkError::NonConvergenceAtStep {
                step: k + 1,
                iterations,
                residual,
            },
            other => other,
        })?;
        states.push(step.y);
    }
    Ok(Trajectory { t0, h, states })
}
