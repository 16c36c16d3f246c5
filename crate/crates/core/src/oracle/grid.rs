use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Uniform radial grid `r_i = r_min + i h`, `i = 0..n_points`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RadialGrid {
    r_min: f64,
    r_max: f64,
    n_points: usize,
}

impl RadialGrid {
    pub fn new(r_min: f64, r_max: f64, n_points: usize) -> Result<Self> {
        if !(r_min > 0.0) || !r_max.is_finite() || !(r_max > r_min) {
            return Err(Error::InvalidGrid(format!(
                "need 0 < r_min < r_max, got r_min = {r_min}, r_max = {r_max}"
            )));
        }
        if n_points < 3 {
            return Err(Error::InvalidGrid(format!(
                "need at least 3 points, got {n_points}"
            )));
        }
        Ok(Self {
            r_min,
            r_max,
            n_points,
        })
    }

    /// Grid with spacing `h` starting at `r_min = h`, so the Dirichlet node
    /// below the first point is the origin.
    pub fn with_step(h: f64, r_max: f64) -> Result<Self> {
        if !(h > 0.0) || !(r_max > 2.0 * h) {
            return Err(Error::InvalidGrid(format!(
                "step {h} does not fit below r_max = {r_max}"
            )));
        }
        let n_points = (r_max / h).round() as usize;
        Self::new(h, h * n_points as f64, n_points)
    }

    pub fn r_min(&self) -> f64 {
        self.r_min
    }

    pub fn r_max(&self) -> f64 {
        self.r_max
    }

    pub fn n_points(&self) -> usize {
        self.n_points
    }

    pub fn spacing(&self) -> f64 {
        (self.r_max - self.r_min) / (self.n_points - 1) as f64
    }

    pub fn radius(&self, i: usize) -> f64 {
        if i + 1 == self.n_points {
            self.r_max
        } else {
            self.r_min + i as f64 * self.spacing()
        }
    }

    pub fn radii(&self) -> Vec<f64> {
        (0..self.n_points).map(|i| self.radius(i)).collect()
    }
}
