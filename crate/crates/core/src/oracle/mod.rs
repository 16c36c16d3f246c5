//! Finite-difference eigensolver for radial problems, kept independent of the
//! factorization machinery: it only ever evaluates potentials.

mod grid;
mod problem;
pub mod quadrature;
pub mod tridiag;
mod verify;

pub use grid::RadialGrid;
pub use problem::{discretize, SpectralProblem, BISECTION_TOLERANCE, MAX_INVERSE_ITERATIONS};
pub use quadrature::{integrate, integrate_to_infinity, Tolerance};
pub use verify::{
    certify, first_level, grid_pair_spectrum, observed_order, richardson, verify_isospectral,
    GridPairSpectrum, SpectrumReport, STURM_CHECK_OFFSET,
};
