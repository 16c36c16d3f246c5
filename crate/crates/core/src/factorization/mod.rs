//! Deformed radial Hamiltonians built from the general solution of the
//! hydrogen Riccati equation.

mod params;
mod potential;
mod states;
mod superpotential;

pub mod operators;

pub use params::{classify_gamma, FactorizationParams, GammaMode, CRITICAL_RELATIVE_TOLERANCE};
pub use potential::PotentialSpec;
pub use states::{
    apply_a, apply_a_jet, missing_state, transformed_norm_squared, transformed_state,
    transformed_state_jet, MissingState,
};
pub use superpotential::{
    beta, beta_jet, coulomb_effective, critical_potential_l1, particular_beta, phi_correction,
    phi_correction_deriv, phi_jet, potential_tilde,
};
