use serde::{Deserialize, Serialize};

use super::grid::RadialGrid;
use super::problem::{discretize, SpectralProblem};
use crate::error::{Error, Result};
use crate::factorization::{FactorizationParams, GammaMode, PotentialSpec};
use crate::special::hydrogen_energy;

/// Offset used to re-check the Sturm count on either side of each level.
pub const STURM_CHECK_OFFSET: f64 = 1e-9;

/// `(4 E(h/2) − E(h)) / 3` for a second-order scheme.
pub fn richardson(coarse: f64, fine: f64) -> f64 {
    (4.0 * fine - coarse) / 3.0
}

/// Observed order `log2(|E(h) − E*| / |E(h/2) − E*|)`.
pub fn observed_order(coarse: f64, fine: f64, exact: f64) -> f64 {
    ((coarse - exact).abs() / (fine - exact).abs()).log2()
}

/// Lowest levels on a grid pair `h`, `h/2` and their extrapolation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GridPairSpectrum {
    pub h_coarse: f64,
    pub h_fine: f64,
    pub r_max: f64,
    pub coarse: Vec<f64>,
    pub fine: Vec<f64>,
    pub extrapolated: Vec<f64>,
    /// The `j`-th fine level has exactly `j` fine levels below it.
    pub sturm_certified: bool,
}

/// Solves `potential` with steps `2h` and `h` (`h` from `grid`, both starting
/// at `r_min = step`) and extrapolates.
pub fn grid_pair_spectrum(
    potential: &PotentialSpec,
    grid: &RadialGrid,
    k: usize,
) -> Result<GridPairSpectrum> {
    let h = grid.spacing();
    let fine_grid = RadialGrid::with_step(h, grid.r_max())?;
    let coarse_grid = RadialGrid::with_step(2.0 * h, grid.r_max())?;
    let (fine_problem, coarse_problem) = rayon::join(
        || discretize(potential, fine_grid),
        || discretize(potential, coarse_grid),
    );
    let (fine_problem, coarse_problem) = (fine_problem?, coarse_problem?);
    let (fine, coarse) = rayon::join(
        || fine_problem.lowest_eigenvalues(k),
        || coarse_problem.lowest_eigenvalues(k),
    );
    let (fine, coarse) = (fine?, coarse?);
    let extrapolated = coarse
        .iter()
        .zip(&fine)
        .map(|(&c, &f)| richardson(c, f))
        .collect();
    let sturm_certified = certify(&fine_problem, &fine);
    Ok(GridPairSpectrum {
        h_coarse: 2.0 * h,
        h_fine: h,
        r_max: fine_grid.r_max(),
        coarse,
        fine,
        extrapolated,
        sturm_certified,
    })
}

/// Checks that each reported level sits alone between `λ_j ± 1e-9` with
/// exactly `j` eigenvalues below it.
pub fn certify(problem: &SpectralProblem, eigenvalues: &[f64]) -> bool {
    eigenvalues.iter().enumerate().all(|(j, &e)| {
        problem.sturm_count(e - STURM_CHECK_OFFSET) == j
            && problem.sturm_count(e + STURM_CHECK_OFFSET) == j + 1
    })
}

/// Computed spectrum of a deformed potential against the hydrogen levels.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumReport {
    pub l: u32,
    pub gamma: f64,
    pub mode: GammaMode,
    /// Principal quantum numbers of the expected levels.
    pub levels: Vec<u32>,
    pub targets: Vec<f64>,
    /// Richardson-extrapolated eigenvalues, ascending.
    pub eigenvalues: Vec<f64>,
    pub residuals: Vec<f64>,
    /// Observed convergence order per level from the grid halving.
    pub orders: Vec<f64>,
    pub spectrum: GridPairSpectrum,
}

impl SpectrumReport {
    pub fn max_residual(&self) -> f64 {
        self.residuals.iter().copied().fold(0.0, f64::max)
    }

    pub fn passes(&self, tolerance: f64) -> bool {
        self.spectrum.sturm_certified && self.residuals.iter().all(|&r| r <= tolerance)
    }
}

/// First principal quantum number in the spectrum of `H̃_{l−1}`: the regular
/// partner keeps `n = l` (carried by the missing state), the critical one
/// loses it.
pub fn first_level(params: &FactorizationParams) -> u32 {
    match params.mode() {
        GammaMode::Critical => params.l() + 1,
        _ => params.l(),
    }
}

/// Computes the `k` lowest eigenvalues of `Ṽ_{l−1}` with the finite-difference
/// oracle and compares them with `−1/n²`.
///
/// Only potential values enter; neither the superpotential nor any analytic
/// eigenfunction is used.
pub fn verify_isospectral(
    params: &FactorizationParams,
    grid: &RadialGrid,
    k: usize,
) -> Result<SpectrumReport> {
    if params.mode() == GammaMode::Singular {
        return Err(Error::SingularGamma {
            l: params.l(),
            gamma: params.gamma(),
            critical: params.critical_gamma(),
        });
    }
    let potential = PotentialSpec::deformed(params.clone())?;
    let spectrum = grid_pair_spectrum(&potential, grid, k)?;
    let first = first_level(params);
    let levels: Vec<u32> = (first..first + k as u32).collect();
    let targets: Vec<f64> = levels.iter().map(|&n| hydrogen_energy(n)).collect();
    let residuals = spectrum
        .extrapolated
        .iter()
        .zip(&targets)
        .map(|(e, t)| (e - t).abs())
        .collect();
    let orders = spectrum
        .coarse
        .iter()
        .zip(&spectrum.fine)
        .zip(&targets)
        .map(|((&c, &f), &t)| observed_order(c, f, t))
        .collect();
    Ok(SpectrumReport {
        l: params.l(),
        gamma: params.gamma(),
        mode: params.mode(),
        levels,
        targets,
        eigenvalues: spectrum.extrapolated.clone(),
        residuals,
        orders,
        spectrum,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn richardson_cancels_quadratic_error() {
        let exact = -1.0;
        let e = |h: f64| exact + 3.0 * h * h;
        assert!((richardson(e(0.02), e(0.01)) - exact).abs() < 1e-15);
        assert!((observed_order(e(0.02), e(0.01), exact) - 2.0).abs() < 1e-9);
    }

    #[test]
    fn targets_follow_mode() {
        let regular = FactorizationParams::new(1, 1.0).unwrap();
        let critical = FactorizationParams::critical(1).unwrap();
        assert_eq!(first_level(&regular), 1);
        assert_eq!(first_level(&critical), 2);
    }

    #[test]
    fn singular_is_refused() {
        let p = FactorizationParams::with_singular_override(1, 0.1).unwrap();
        let grid = RadialGrid::with_step(0.1, 20.0).unwrap();
        assert!(matches!(
            verify_isospectral(&p, &grid, 2),
            Err(Error::SingularGamma { .. })
        ));
    }
}
