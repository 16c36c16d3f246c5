use std::f64::consts::PI;

use super::grid::RadialGrid;
use super::tridiag;
use crate::error::{Error, Result};
use crate::factorization::PotentialSpec;
use crate::radial::RadialFunction;

/// Bracket width at which eigenvalue bisection stops.
pub const BISECTION_TOLERANCE: f64 = 1e-11;

/// Inverse-iteration step limit.
pub const MAX_INVERSE_ITERATIONS: usize = 50;

/// `-d²/dr² + V(r)` on `u = r R`, second-order central differences on a
/// uniform grid with Dirichlet nodes one step outside both ends.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralProblem {
    grid: RadialGrid,
    diagonal: Vec<f64>,
    off_diagonal: f64,
}

/// Discretizes a named potential on `grid`.
pub fn discretize(potential: &PotentialSpec, grid: RadialGrid) -> Result<SpectralProblem> {
    SpectralProblem::from_fn(grid, |r| potential.evaluate(r))
}

impl SpectralProblem {
    /// Discretizes an arbitrary potential; the first failing radius aborts.
    pub fn from_fn<F>(grid: RadialGrid, potential: F) -> Result<Self>
    where
        F: Fn(f64) -> Result<f64>,
    {
        let h = grid.spacing();
        let kinetic = 2.0 / (h * h);
        let diagonal = grid
            .radii()
            .into_iter()
            .map(|r| match potential(r) {
                Ok(v) if v.is_finite() => Ok(kinetic + v),
                Ok(v) => Err(Error::PotentialEvaluation {
                    r,
                    reason: format!("non-finite value {v}"),
                }),
                Err(e) => Err(Error::PotentialEvaluation {
                    r,
                    reason: e.to_string(),
                }),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            grid,
            diagonal,
            off_diagonal: -1.0 / (h * h),
        })
    }

    pub fn grid(&self) -> &RadialGrid {
        &self.grid
    }

    pub fn diagonal(&self) -> &[f64] {
        &self.diagonal
    }

    pub fn off_diagonal(&self) -> f64 {
        self.off_diagonal
    }

    pub fn dimension(&self) -> usize {
        self.diagonal.len()
    }

    fn off_diagonal_vec(&self) -> Vec<f64> {
        vec![self.off_diagonal; self.dimension() - 1]
    }

    /// Dense row-major copy of the matrix.
    pub fn to_dense(&self) -> Vec<Vec<f64>> {
        let n = self.dimension();
        let mut m = vec![vec![0.0; n]; n];
        for i in 0..n {
            m[i][i] = self.diagonal[i];
            if i + 1 < n {
                m[i][i + 1] = self.off_diagonal;
                m[i + 1][i] = self.off_diagonal;
            }
        }
        m
    }

    /// Number of eigenvalues strictly below `lambda`.
    pub fn sturm_count(&self, lambda: f64) -> usize {
        tridiag::sturm_count(&self.diagonal, &self.off_diagonal_vec(), lambda)
    }

    /// The `k` smallest eigenvalues in ascending order.
    pub fn lowest_eigenvalues(&self, k: usize) -> Result<Vec<f64>> {
        tridiag::lowest_eigenvalues(
            &self.diagonal,
            &self.off_diagonal_vec(),
            k,
            BISECTION_TOLERANCE,
        )
    }

    /// Grid eigenvector as `R(r_i) = u_i / r_i`, normalized so that
    /// `4π h Σ u_i² = 1` and positive at the first local maximum of `|u|`.
    pub fn eigenvector(&self, eigenvalue: f64) -> Result<RadialFunction> {
        let mut u = tridiag::inverse_iteration(
            &self.diagonal,
            &self.off_diagonal_vec(),
            eigenvalue,
            MAX_INVERSE_ITERATIONS,
        )?;
        let h = self.grid.spacing();
        let scale = 1.0 / (4.0 * PI * h).sqrt();
        let peak = first_local_max(&u);
        let sign = if u[peak] < 0.0 { -scale } else { scale };
        u.iter_mut().for_each(|v| *v *= sign);
        let radii = self.grid.radii();
        let values = u.iter().zip(&radii).map(|(u, r)| u / r).collect();
        RadialFunction::new(radii, values)
    }
}

fn first_local_max(u: &[f64]) -> usize {
    let max = u.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let floor = 1e-3 * max;
    let n = u.len();
    for i in 0..n {
        let a = u[i].abs();
        let left = if i > 0 { u[i - 1].abs() } else { 0.0 };
        let right = if i + 1 < n { u[i + 1].abs() } else { 0.0 };
        if a >= floor && a >= left && a >= right {
            return i;
        }
    }
    0
}
