//! Cyclic Jacobi eigenvalue iteration for dense real symmetric matrices.

use crate::error::{Error, Result};

/// Convergence threshold on the off-diagonal Frobenius norm.
pub const OFF_DIAGONAL_TOLERANCE: f64 = 1e-10;
pub const MAX_SWEEPS: usize = 100;

/// Eigenvalues of a symmetric matrix (unsorted, in diagonal order).
///
/// The input is copied; each sweep visits every pair `(p, q)` with `p < q`
/// in row order and annihilates `a[p][q]` with a plane rotation.
pub fn symmetric_eigenvalues(matrix: &[Vec<f64>]) -> Result<Vec<f64>> {
    let size = matrix.len();
    if matrix.iter().any(|row| row.len() != size) {
        return Err(Error::OutOfRange("matrix must be square".into()));
    }
    let mut a: Vec<f64> = matrix.iter().flatten().copied().collect();

    for _ in 0..=MAX_SWEEPS {
        if off_diagonal_norm(&a, size) < OFF_DIAGONAL_TOLERANCE {
            return Ok((0..size).map(|i| a[i * size + i]).collect());
        }
        sweep(&mut a, size);
    }
    Err(Error::NoConvergence { sweeps: MAX_SWEEPS })
}

fn off_diagonal_norm(a: &[f64], size: usize) -> f64 {
    let mut sum = 0.0;
    for i in 0..size {
        for j in 0..size {
            if i != j {
                sum += a[i * size + j] * a[i * size + j];
            }
        }
    }
    sum.sqrt()
}

fn sweep(a: &mut [f64], size: usize) {
    for p in 0..size {
        for q in p + 1..size {
            let apq = a[p * size + q];
            if apq == 0.0 {
                continue;
            }
            let app = a[p * size + p];
            let aqq = a[q * size + q];
            let theta = (aqq - app) / (2.0 * apq);
            let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
            let c = 1.0 / (t * t + 1.0).sqrt();
            let s = t * c;

            for r in 0..size {
                if r == p || r == q {
                    continue;
                }
                let arp = a[r * size + p];
                let arq = a[r * size + q];
                let new_rp = c * arp - s * arq;
                let new_rq = s * arp + c * arq;
                a[r * size + p] = new_rp;
                a[p * size + r] = new_rp;
                a[r * size + q] = new_rq;
                a[q * size + r] = new_rq;
            }
            a[p * size + p] = app - t * apq;
            a[q * size + q] = aqq + t * apq;
            a[p * size + q] = 0.0;
            a[q * size + p] = 0.0;
        }
    }
}
