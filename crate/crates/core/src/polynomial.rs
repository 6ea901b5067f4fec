//! Real polynomials on [0, 1] and the shifted Legendre family.
//!
//! The node rules of the tableau constructors are all phrased in terms of
//! zeros of shifted Legendre polynomials P*_s (Legendre mapped to [0, 1]):
//! Gauss nodes are the zeros of P*_s, Radau I of P*_s + P*_{s-1}, Radau II of
//! P*_s - P*_{s-1}, and Lobatto III of P*_s - P*_{s-2}. Only the zeros are
//! consumed downstream, so the normalization P*_s(1) = 1 is used and any
//! constant rescaling of the input leaves the computed roots unchanged.

use thiserror::Error;

use crate::scalar::Real;

/// Largest supported shifted-Legendre degree. Beyond this the integer
/// coefficients grow to the point where double-precision evaluation starts
/// eating into the root accuracy the tableau constructors rely on.
pub const MAX_LEGENDRE_DEGREE: usize = 12;

/// Subintervals of [0, 1] scanned for sign changes before bisection.
const SCAN_INTERVALS: usize = 1000;

const MAX_POLISH_ITERS: usize = 100;

#[derive(Debug, Error)]
pub enum PolynomialError {
    #[error("shifted Legendre degree {0} exceeds the supported maximum {MAX_LEGENDRE_DEGREE}")]
    DegreeTooLarge(usize),
    #[error("root polish did not converge within {MAX_POLISH_ITERS} iterations (last step {last_step:e})")]
    PolishDiverged { last_step: f64 },
    #[error("sign scan found {found} roots in [0, 1], expected {expected}")]
    RootCount { found: usize, expected: usize },
}

/// Dense univariate polynomial, coefficients in ascending-degree order.
#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial<T> {
    coeffs: Vec<T>,
}

impl<T: Real> Polynomial<T> {
    /// Build from ascending coefficients; trailing zeros are trimmed so the
    /// leading coefficient of a nonconstant polynomial is nonzero.
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.len() > 1 && coeffs.last().copied() == Some(T::zero()) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(T::zero());
        }
        Polynomial { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Horner evaluation.
    pub fn eval(&self, x: T) -> T {
        let mut acc = T::zero();
        for &c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> Polynomial<T> {
        if self.coeffs.len() == 1 {
            return Polynomial::new(vec![T::zero()]);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, &c)| c * T::of_usize(k))
            .collect();
        Polynomial::new(coeffs)
    }

    pub fn add(&self, other: &Polynomial<T>) -> Polynomial<T> {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = vec![T::zero(); n];
        for (k, c) in coeffs.iter_mut().enumerate() {
            let a = self.coeffs.get(k).copied().unwrap_or_else(T::zero);
            let b = other.coeffs.get(k).copied().unwrap_or_else(T::zero);
            *c = a + b;
        }
        Polynomial::new(coeffs)
    }

    pub fn sub(&self, other: &Polynomial<T>) -> Polynomial<T> {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = vec![T::zero(); n];
        for (k, c) in coeffs.iter_mut().enumerate() {
            let a = self.coeffs.get(k).copied().unwrap_or_else(T::zero);
            let b = other.coeffs.get(k).copied().unwrap_or_else(T::zero);
            *c = a - b;
        }
        Polynomial::new(coeffs)
    }

    pub fn scaled(&self, factor: T) -> Polynomial<T> {
        Polynomial::new(self.coeffs.iter().map(|&c| c * factor).collect())
    }
}

fn binomial(n: usize, k: usize) -> i64 {
    let k = k.min(n - k);
    let mut acc: i64 = 1;
    for i in 0..k {
        acc = acc * (n - i) as i64 / (i + 1) as i64;
    }
    acc
}

/// Degree-`s` shifted Legendre polynomial on [0, 1], normalized so P*_s(1) = 1.
///
/// P*_s(x) = Σ_k (-1)^(s-k) C(s, k) C(s+k, k) x^k. The coefficients are exact
/// integers (at most ~1.7e7 for s = 12), so the conversion to the scalar type
/// is exact in `f64`.
pub fn shifted_legendre<T: Real>(s: usize) -> Result<Polynomial<T>, PolynomialError> {
    if s > MAX_LEGENDRE_DEGREE {
        return Err(PolynomialError::DegreeTooLarge(s));
    }
    let mut coeffs = Vec::with_capacity(s + 1);
    for k in 0..=s {
        let magnitude = binomial(s, k) * binomial(s + k, k);
        let signed = if (s - k).is_multiple_of(2) {
            magnitude
        } else {
            -magnitude
        };
        coeffs.push(T::from_i64(signed).expect("legendre coefficient fits scalar"));
    }
    Ok(Polynomial::new(coeffs))
}

/// All simple real roots of `p` in [0, 1], ascending.
///
/// Sign changes are bracketed on a uniform scan of [0, 1] (grid points that
/// evaluate to exactly zero, such as the 0 and 1 endpoints of the Radau and
/// Lobatto polynomials, are taken as roots directly), then refined by
/// bisection and a final Newton polish down to a few ulps.
pub fn real_roots_in_unit_interval<T: Real>(p: &Polynomial<T>) -> Result<Vec<T>, PolynomialError> {
    if p.degree() == 0 {
        return Ok(Vec::new());
    }
    let dp = p.derivative();
    let mut roots = Vec::new();
    let mut prev_x = T::zero();
    let mut prev_v = p.eval(prev_x);
    if prev_v == T::zero() {
        roots.push(prev_x);
    }
    for i in 1..=SCAN_INTERVALS {
        let x = T::of_usize(i) / T::of_usize(SCAN_INTERVALS);
        let v = p.eval(x);
        if v == T::zero() {
            roots.push(x);
        } else if prev_v != T::zero() && (v < T::zero()) != (prev_v < T::zero()) {
            roots.push(polish(p, &dp, prev_x, x, prev_v)?);
        }
        prev_x = x;
        prev_v = v;
    }
    Ok(roots)
}

fn polish<T: Real>(
    p: &Polynomial<T>,
    dp: &Polynomial<T>,
    mut lo: T,
    mut hi: T,
    mut f_lo: T,
) -> Result<T, PolynomialError> {
    for _ in 0..60 {
        let mid = (lo + hi) * T::of(0.5);
        if mid <= lo || mid >= hi {
            break;
        }
        let f_mid = p.eval(mid);
        if f_mid == T::zero() {
            return Ok(mid);
        }
        if (f_mid < T::zero()) == (f_lo < T::zero()) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    let mut x = (lo + hi) * T::of(0.5);
    let tol = T::epsilon() * T::of(8.0);
    let mut best_x = x;
    let mut best_f = T::infinity();
    let mut last_step = T::zero();
    for _ in 0..MAX_POLISH_ITERS {
        let f = p.eval(x);
        if f == T::zero() {
            return Ok(x);
        }
        if f.abs() < best_f {
            best_f = f.abs();
            best_x = x;
        } else {
            // |p| stopped improving: the iterate is bouncing inside the
            // cancellation noise floor of the evaluation, so the best point
            // seen is the root to working precision.
            return Ok(best_x);
        }
        let d = dp.eval(x);
        if d == T::zero() {
            return Ok(best_x);
        }
        let step = f / d;
        last_step = step.abs();
        let x_next = x - step;
        if last_step <= tol * x.abs().max(T::one()) || x_next == x {
            return Ok(x_next);
        }
        x = x_next;
    }
    Err(PolynomialError::PolishDiverged {
        last_step: last_step.approx_f64(),
    })
}
