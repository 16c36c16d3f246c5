//! Symmetric tridiagonal eigenvalues by Sturm-count bisection and
//! eigenvectors by inverse iteration.

use crate::error::{Error, Result};

/// Pivots smaller than this are nudged away from zero in the LDLᵀ recurrence.
const PIVOT_GUARD: f64 = 1e-300;

/// Number of eigenvalues strictly below `lambda`, from the signs of the
/// LDLᵀ pivots of `T − λI`.
pub fn sturm_count(diagonal: &[f64], off_diagonal: &[f64], lambda: f64) -> usize {
    let mut count = 0;
    let mut q = 1.0;
    for (i, &d) in diagonal.iter().enumerate() {
        let coupling = if i == 0 {
            0.0
        } else {
            off_diagonal[i - 1] * off_diagonal[i - 1] / q
        };
        q = d - lambda - coupling;
        if q == 0.0 {
            q = -PIVOT_GUARD;
        }
        if q < 0.0 {
            count += 1;
        }
    }
    count
}

/// Gershgorin interval containing the whole spectrum.
pub fn gershgorin_bounds(diagonal: &[f64], off_diagonal: &[f64]) -> (f64, f64) {
    let n = diagonal.len();
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for i in 0..n {
        let left = if i > 0 {
            off_diagonal[i - 1].abs()
        } else {
            0.0
        };
        let right = if i + 1 < n {
            off_diagonal[i].abs()
        } else {
            0.0
        };
        lo = lo.min(diagonal[i] - left - right);
        hi = hi.max(diagonal[i] + left + right);
    }
    (lo, hi)
}

/// The `k` smallest eigenvalues, ascending, each bisected until its bracket is
/// narrower than `tolerance`.
pub fn lowest_eigenvalues(
    diagonal: &[f64],
    off_diagonal: &[f64],
    k: usize,
    tolerance: f64,
) -> Result<Vec<f64>> {
    let n = diagonal.len();
    if k == 0 || k > n {
        return Err(Error::TooManyEigenvalues {
            requested: k,
            dimension: n,
        });
    }
    let (lo, hi) = gershgorin_bounds(diagonal, off_diagonal);
    let pad = f64::EPSILON * lo.abs().max(hi.abs()) + tolerance;
    let (lo, hi) = (lo - pad, hi + pad);

    let mut values = Vec::with_capacity(k);
    let mut floor = lo;
    for j in 0..k {
        // λ_j is the smallest x with count(x) > j
        let mut a = floor;
        let mut b = hi;
        while b - a > tolerance {
            let mid = 0.5 * (a + b);
            if mid <= a || mid >= b {
                break;
            }
            if sturm_count(diagonal, off_diagonal, mid) > j {
                b = mid;
            } else {
                a = mid;
            }
        }
        let value = 0.5 * (a + b);
        values.push(value);
        floor = a;
    }
    Ok(values)
}

/// Solves `(T − σI) x = rhs` by Gaussian elimination with partial pivoting,
/// with tiny pivots replaced so an exact eigenvalue shift stays solvable.
fn shifted_solve(diagonal: &[f64], off_diagonal: &[f64], shift: f64, rhs: &[f64]) -> Vec<f64> {
    let n = diagonal.len();
    let scale = diagonal
        .iter()
        .map(|d| (d - shift).abs())
        .chain(off_diagonal.iter().map(|e| e.abs()))
        .fold(0.0, f64::max);
    let tiny = f64::EPSILON * scale.max(f64::MIN_POSITIVE);

    // Row i holds (sub, diag, sup, sup2) after pivoting.
    let mut diag: Vec<f64> = diagonal.iter().map(|d| d - shift).collect();
    let mut sub: Vec<f64> = off_diagonal.to_vec();
    let mut sup: Vec<f64> = off_diagonal.to_vec();
    let mut sup2 = vec![0.0; n.saturating_sub(2)];
    let mut b = rhs.to_vec();

    for i in 0..n.saturating_sub(1) {
        if sub[i].abs() > diag[i].abs() {
            // swap rows i and i+1
            std::mem::swap(&mut diag[i], &mut sub[i]);
            std::mem::swap(&mut diag[i + 1], &mut sup[i]);
            if i + 1 < n - 1 {
                sup2[i] = sup[i + 1];
                sup[i + 1] = 0.0;
            }
            b.swap(i, i + 1);
        }
        if diag[i].abs() < tiny {
            diag[i] = tiny;
        }
        let factor = sub[i] / diag[i];
        diag[i + 1] -= factor * sup[i];
        if i + 1 < n - 1 {
            sup[i + 1] -= factor * sup2[i];
        }
        b[i + 1] -= factor * b[i];
    }
    if diag[n - 1].abs() < tiny {
        diag[n - 1] = tiny;
    }

    let mut x = vec![0.0; n];
    for i in (0..n).rev() {
        let mut acc = b[i];
        if i + 1 < n {
            acc -= sup[i] * x[i + 1];
        }
        if i + 2 < n {
            acc -= sup2[i] * x[i + 2];
        }
        x[i] = acc / diag[i];
    }
    x
}

/// Eigenvector for an eigenvalue estimate by inverse iteration, unit
/// Euclidean norm, unspecified sign.
pub fn inverse_iteration(
    diagonal: &[f64],
    off_diagonal: &[f64],
    eigenvalue: f64,
    max_steps: usize,
) -> Result<Vec<f64>> {
    let n = diagonal.len();
    let mut x: Vec<f64> = (0..n)
        .map(|i| 1.0 + 0.25 * ((i * 7919) % 13) as f64 / 13.0)
        .collect();
    normalize(&mut x);
    for _ in 0..max_steps {
        let mut y = shifted_solve(diagonal, off_diagonal, eigenvalue, &x);
        normalize(&mut y);
        let overlap: f64 = x.iter().zip(&y).map(|(a, b)| a * b).sum();
        x = y;
        if 1.0 - overlap.abs() < 1e-13 {
            return Ok(x);
        }
    }
    Err(Error::InverseIterationNonConvergence(max_steps))
}

fn normalize(x: &mut [f64]) {
    let norm = x.iter().map(|v| v * v).sum::<f64>().sqrt();
    x.iter_mut().for_each(|v| *v /= norm);
}
