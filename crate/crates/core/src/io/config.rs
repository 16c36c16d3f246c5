use std::path::PathBuf;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::oracle::RadialGrid;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Subcommand {
    Potential,
    States,
    Spectrum,
    Verify,
    Figures,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Csv,
    Json,
}

/// Everything one invocation needs. Grid fields left as `None` take the
/// per-subcommand defaults from [`RunConfig::resolved_grid`].
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: Subcommand,
    pub l: u32,
    pub gammas: Vec<f64>,
    pub r_min: Option<f64>,
    pub r_max: Option<f64>,
    pub points: Option<usize>,
    pub k: usize,
    pub format: OutputFormat,
    pub out: Option<PathBuf>,
    pub allow_singular: bool,
    pub tolerance: f64,
}

pub const DEFAULT_K: usize = 4;
pub const DEFAULT_TOLERANCE: f64 = 1e-5;

/// `γ_1` values plotted in the figure set; the critical value is appended.
pub const FIGURE_GAMMAS: [f64; 6] = [0.251, 0.3, 0.5, 1.0, 5.0, -1.0];
pub const FIGURE_R_MIN: f64 = 0.01;
pub const FIGURE_R_MAX: f64 = 15.0;
pub const FIGURE_POINTS: usize = 1500;

impl RunConfig {
    pub fn new(command: Subcommand, gammas: Vec<f64>) -> Self {
        Self {
            command,
            l: 1,
            gammas,
            r_min: None,
            r_max: None,
            points: None,
            k: DEFAULT_K,
            format: OutputFormat::Csv,
            out: None,
            allow_singular: false,
            tolerance: DEFAULT_TOLERANCE,
        }
    }

    /// Grid after defaults: `[0.01, 15]` with 1500 points for tabulation,
    /// `h = 0.01` up to `r = 60` for the eigenvalue commands.
    pub fn resolved_grid(&self) -> Result<RadialGrid> {
        let (r_min, r_max, points) = match self.command {
            Subcommand::Potential | Subcommand::States | Subcommand::Figures => {
                (FIGURE_R_MIN, FIGURE_R_MAX, FIGURE_POINTS)
            }
            Subcommand::Spectrum | Subcommand::Verify => (0.01, 60.0, 6000),
        };
        RadialGrid::new(
            self.r_min.unwrap_or(r_min),
            self.r_max.unwrap_or(r_max),
            self.points.unwrap_or(points),
        )
    }

    pub fn validate(&self) -> Result<()> {
        if self.l == 0 {
            return Err(Error::ZeroAngularMomentum(0));
        }
        if self.command != Subcommand::Figures && self.gammas.is_empty() {
            return Err(Error::InvalidConfig(
                "--gamma needs at least one value".into(),
            ));
        }
        if let Some(g) = self.gammas.iter().find(|g| !g.is_finite()) {
            return Err(Error::InvalidGamma(*g));
        }
        if self.k == 0 {
            return Err(Error::InvalidConfig("--k must be at least 1".into()));
        }
        if !(self.tolerance > 0.0) {
            return Err(Error::InvalidConfig("--tolerance must be positive".into()));
        }
        self.resolved_grid()?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_per_command() {
        let c = RunConfig::new(Subcommand::Verify, vec![1.0]);
        let g = c.resolved_grid().unwrap();
        assert_eq!(g.n_points(), 6000);
        assert!((g.spacing() - (60.0 - 0.01) / 5999.0).abs() < 1e-15);
        let p = RunConfig::new(Subcommand::Potential, vec![1.0])
            .resolved_grid()
            .unwrap();
        assert_eq!((p.r_min(), p.r_max(), p.n_points()), (0.01, 15.0, 1500));
    }

    #[test]
    fn validation() {
        assert!(RunConfig::new(Subcommand::Potential, vec![])
            .validate()
            .is_err());
        assert!(RunConfig::new(Subcommand::Figures, vec![])
            .validate()
            .is_ok());
        assert!(RunConfig::new(Subcommand::Potential, vec![f64::INFINITY])
            .validate()
            .is_err());
        let mut c = RunConfig::new(Subcommand::Spectrum, vec![1.0]);
        c.points = Some(2);
        assert!(c.validate().is_err());
    }
}
