use std::f64::consts::PI;

use crate::error::{Error, Result};

/// A radial function sampled on a strictly increasing grid of positive radii.
///
/// Norms and overlaps use the measure `4π r² dr` (trapezoidal rule).
#[derive(Debug, Clone, PartialEq)]
pub struct RadialFunction {
    grid: Vec<f64>,
    values: Vec<f64>,
}

impl RadialFunction {
    pub fn new(grid: Vec<f64>, values: Vec<f64>) -> Result<Self> {
        if grid.len() != values.len() {
            return Err(Error::InvalidGrid(format!(
                "{} radii but {} values",
                grid.len(),
                values.len()
            )));
        }
        if grid.iter().any(|&r| !(r > 0.0) || !r.is_finite()) {
            return Err(Error::InvalidGrid(
                "radii must be positive and finite".into(),
            ));
        }
        if grid.windows(2).any(|w| w[1] <= w[0]) {
            return Err(Error::InvalidGrid(
                "radii must be strictly increasing".into(),
            ));
        }
        if let Some(i) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::InvalidGrid(format!(
                "non-finite value at r = {}",
                grid[i]
            )));
        }
        Ok(Self { grid, values })
    }

    /// Samples `f` on `grid`.
    pub fn sample<F>(grid: &[f64], f: F) -> Result<Self>
    where
        F: Fn(f64) -> Result<f64>,
    {
        let values = grid.iter().map(|&r| f(r)).collect::<Result<Vec<_>>>()?;
        Self::new(grid.to_vec(), values)
    }

    pub fn grid(&self) -> &[f64] {
        &self.grid
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// `4π ∫ f g r² dr` over the sampled range.
    pub fn inner(&self, other: &RadialFunction) -> Result<f64> {
        if self.grid != other.grid {
            return Err(Error::InvalidGrid(
                "overlap of functions on different grids".into(),
            ));
        }
        let integrand: Vec<f64> = self
            .grid
            .iter()
            .zip(self.values.iter().zip(&other.values))
            .map(|(r, (a, b))| a * b * r * r)
            .collect();
        let sum: f64 = self
            .grid
            .windows(2)
            .zip(integrand.windows(2))
            .map(|(r, f)| 0.5 * (r[1] - r[0]) * (f[0] + f[1]))
            .sum();
        Ok(4.0 * PI * sum)
    }

    pub fn norm_squared(&self) -> f64 {
        self.inner(self).expect("same grid")
    }

    /// Number of sign changes, ignoring exact zeros.
    pub fn sign_changes(&self) -> usize {
        let mut last = 0.0f64;
        let mut count = 0;
        for &v in &self.values {
            if v != 0.0 {
                if last != 0.0 && v.signum() != last.signum() {
                    count += 1;
                }
                last = v;
            }
        }
        count
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(RadialFunction::new(vec![0.0, 1.0], vec![1.0, 1.0]).is_err());
        assert!(RadialFunction::new(vec![1.0, 1.0], vec![1.0, 1.0]).is_err());
        assert!(RadialFunction::new(vec![1.0, 2.0], vec![1.0, f64::NAN]).is_err());
        assert!(RadialFunction::new(vec![1.0, 2.0], vec![1.0]).is_err());
    }

    #[test]
    fn ground_state_norm_on_fine_grid() {
        let grid: Vec<f64> = (1..=40000).map(|i| i as f64 * 1e-3).collect();
        let f = RadialFunction::sample(&grid, |r| Ok((-r).exp() / PI.sqrt())).unwrap();
        assert!((f.norm_squared() - 1.0).abs() < 1e-6);
        assert_eq!(f.sign_changes(), 0);
    }

    #[test]
    fn counts_sign_changes() {
        let f = RadialFunction::new(
            vec![1.0, 2.0, 3.0, 4.0, 5.0],
            vec![1.0, -1.0, 0.0, -2.0, 3.0],
        )
        .unwrap();
        assert_eq!(f.sign_changes(), 2);
    }
}
