//! Dense LU factorization with partial pivoting.
//!
//! The linear systems in this crate are tiny: the stacked Newton systems of
//! the stage solver are at most (stages · dim)² = 24×24, and the Vandermonde
//! systems of the tableau constructors at most 6×6.

use thiserror::Error;

use crate::scalar::Real;

#[derive(Debug, Error)]
#[error("matrix is singular to working precision (zero pivot in column {column})")]
pub struct SingularMatrix {
    pub column: usize,
}

/// LU factorization of a square matrix, reusable across right-hand sides.
pub struct LuFactors<T> {
    n: usize,
    lu: Vec<T>,
    pivots: Vec<usize>,
}

/// Factor a row-major `n`×`n` matrix in place.
pub fn lu_factor<T: Real>(mut a: Vec<T>, n: usize) -> Result<LuFactors<T>, SingularMatrix> {
    assert_eq!(a.len(), n * n, "matrix storage must be n*n");
    let mut pivots = vec![0usize; n];
    for k in 0..n {
        let mut p = k;
        let mut best = a[k * n + k].abs();
        for r in (k + 1)..n {
            let v = a[r * n + k].abs();
            if v > best {
                best = v;
                p = r;
            }
        }
        if best == T::zero() || best.is_nan() {
            return Err(SingularMatrix { column: k });
        }
        pivots[k] = p;
        if p != k {
            for j in 0..n {
                a.swap(k * n + j, p * n + j);
            }
        }
        let inv = T::one() / a[k * n + k];
        for r in (k + 1)..n {
            let factor = a[r * n + k] * inv;
            a[r * n + k] = factor;
            for j in (k + 1)..n {
                let u = a[k * n + j];
                a[r * n + j] = a[r * n + j] - factor * u;
            }
        }
    }
    Ok(LuFactors { n, lu: a, pivots })
}

impl<T: Real> LuFactors<T> {
    /// Solve `A x = b`, overwriting `b` with `x`.
    #[allow(clippy::needless_range_loop)]
    pub fn solve_in_place(&self, b: &mut [T]) {
        assert_eq!(b.len(), self.n);
        let n = self.n;
        for k in 0..n {
            b.swap(k, self.pivots[k]);
        }
        for i in 1..n {
            let mut acc = b[i];
            for j in 0..i {
                acc = acc - self.lu[i * n + j] * b[j];
            }
            b[i] = acc;
        }
        for i in (0..n).rev() {
            let mut acc = b[i];
            for j in (i + 1)..n {
                acc = acc - self.lu[i * n + j] * b[j];
            }
            b[i] = acc / self.lu[i * n + i];
        }
    }
}

/// One-shot solve of `A x = b`.
pub fn solve<T: Real>(a: Vec<T>, n: usize, mut b: Vec<T>) -> Result<Vec<T>, SingularMatrix> {
    let lu = lu_factor(a, n)?;
    lu.solve_in_place(&mut b);
    Ok(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solves_known_3x3() {
        // A = [[2,1,-1],[-3,-1,2],[-2,1,2]], b = [8,-11,-3] -> x = [2,3,-1]
        let a: Vec<f64> = vec![2.0, 1.0, -1.0, -3.0, -1.0, 2.0, -2.0, 1.0, 2.0];
        let x = solve(a, 3, vec![8.0, -11.0, -3.0]).unwrap();
        let expected = [2.0, 3.0, -1.0];
        for (xi, ei) in x.iter().zip(expected) {
            assert!((xi - ei).abs() < 1e-13, "got {x:?}");
        }
    }

    #[test]
    fn factorization_reused_across_rhs() {
        let a: Vec<f64> = vec![4.0, 1.0, 1.0, 3.0];
        let lu = lu_factor(a, 2).unwrap();
        let mut b1 = vec![5.0, 4.0];
        let mut b2 = vec![1.0, 0.0];
        lu.solve_in_place(&mut b1);
        lu.solve_in_place(&mut b2);
        assert!((b1[0] - 1.0).abs() < 1e-14 && (b1[1] - 1.0).abs() < 1e-14);
        // inverse first column of [[4,1],[1,3]] is [3/11, -1/11]
        assert!((b2[0] - 3.0 / 11.0).abs() < 1e-14);
        assert!((b2[1] + 1.0 / 11.0).abs() < 1e-14);
    }

    #[test]
    fn rejects_singular() {
        let a: Vec<f64> = vec![1.0, 2.0, 2.0, 4.0];
        assert!(lu_factor(a, 2).is_err());
    }
}
