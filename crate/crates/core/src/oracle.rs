//! Closed-form exact flows of the three oscillator systems, the independent
//! ground truth behind every numerical claim in this crate.
//!
//! Case I: y(t) = y₀ cos t + y'₀ sin t. Case II applies the same rotation to
//! each of the (f, f') and (g, g') blocks. Case III complexifies:
//! w(t) = w₀ cos(kt) + (w'₀ / k) sin(kt) with k = α₁ + i α₂,
//! w₀ = f₀ + i g₀, w'₀ = f'₀ + i g'₀, where
//! cos(a + bi) = cos a cosh b - i sin a sinh b and
//! sin(a + bi) = sin a cosh b + i cos a sinh b.

use thiserror::Error;

use crate::models::{Case, OscillatorParams};
use crate::scalar::Real;

#[derive(Debug, Error)]
pub enum OracleError {
    #[error("initial state has dimension {got}, case needs {expected}")]
    DimensionMismatch { got: usize, expected: usize },
}

/// Minimal complex pair; just the arithmetic the exact flow needs.
#[derive(Debug, Clone, Copy, PartialEq)]
struct Cx<T> {
    re: T,
    im: T,
}

impl<T: Real> Cx<T> {
    fn new(re: T, im: T) -> Self {
        Cx { re, im }
    }

    fn add(self, other: Self) -> Self {
        Cx::new(self.re + other.re, self.im + other.im)
    }

    fn mul(self, other: Self) -> Self {
        Cx::new(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )
    }

    fn div(self, other: Self) -> Self {
        let denom = other.re * other.re + other.im * other.im;
        Cx::new(
            (self.re * other.re + self.im * other.im) / denom,
            (self.im * other.re - self.re * other.im) / denom,
        )
    }

    fn neg(self) -> Self {
        Cx::new(-self.re, -self.im)
    }

    /// cos(z) for complex z.
    fn cos_of(z: Self) -> Self {
        Cx::new(z.re.cos() * z.im.cosh(), -(z.re.sin() * z.im.sinh()))
    }

    /// sin(z) for complex z.
    fn sin_of(z: Self) -> Self {
        Cx::new(z.re.sin() * z.im.cosh(), z.re.cos() * z.im.sinh())
    }
}

/// Exact solution through `y0`; evaluate anywhere with [`ExactSolution::state`].
#[derive(Debug, Clone)]
pub struct ExactSolution<T> {
    params: OscillatorParams<T>,
    y0: Vec<T>,
}

/// Build the exact flow of a parameter set through an initial state.
pub fn exact_flow<T: Real>(
    params: &OscillatorParams<T>,
    y0: &[T],
) -> Result<ExactSolution<T>, OracleError> {
    if y0.len() != params.dim() {
        return Err(OracleError::DimensionMismatch {
            got: y0.len(),
            expected: params.dim(),
        });
    }
    Ok(ExactSolution {
        params: *params,
        y0: y0.to_vec(),
    })
}

impl<T: Real> ExactSolution<T> {
    pub fn params(&self) -> &OscillatorParams<T> {
        &self.params
    }

    pub fn initial(&self) -> &[T] {
        &self.y0
    }

    /// State at time `t`, in the same layout as the models.
    pub fn state(&self, t: T) -> Vec<T> {
        match self.params.case() {
            Case::I => {
                let (c, s) = (t.cos(), t.sin());
                let (y, yp) = (self.y0[0], self.y0[1]);
                vec![y * c + yp * s, -(y * s) + yp * c]
            }
            Case::II => {
                let (c, s) = (t.cos(), t.sin());
                let (f, g, fp, gp) = (self.y0[0], self.y0[1], self.y0[2], self.y0[3]);
                vec![
                    f * c + fp * s,
                    g * c + gp * s,
                    -(f * s) + fp * c,
                    -(g * s) + gp * c,
                ]
            }
            Case::III => {
                let k = Cx::new(self.params.alpha1(), self.params.alpha2());
                let w0 = Cx::new(self.y0[0], self.y0[1]);
                let wp0 = Cx::new(self.y0[2], self.y0[3]);
                let kt = Cx::new(k.re * t, k.im * t);
                let cos_kt = Cx::cos_of(kt);
                let sin_kt = Cx::sin_of(kt);
                let w = w0.mul(cos_kt).add(wp0.div(k).mul(sin_kt));
                let wp = k.mul(w0).mul(sin_kt).neg().add(wp0.mul(cos_kt));
                vec![w.re, w.im, wp.re, wp.im]
            }
        }
    }
}
