use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::special::critical_gamma;

/// Relative tolerance under which a gamma is snapped to the critical value.
pub const CRITICAL_RELATIVE_TOLERANCE: f64 = 1e-12;

/// Regularity class of the integration constant `γ_l`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GammaMode {
    /// `γ > γ_c` or `γ < 0`: smooth potential, normalizable missing state.
    Regular,
    /// `γ = γ_c`: the missing state is no longer normalizable and the partner
    /// loses its lowest level.
    Critical,
    /// `0 <= γ < γ_c`: the denominator `γ − I_l(r)` vanishes at finite `r`.
    Singular,
}

/// Classifies `γ` for angular momentum `l`.
pub fn classify_gamma(l: u32, gamma: f64) -> Result<GammaMode> {
    if gamma.is_nan() {
        return Err(Error::InvalidGamma(gamma));
    }
    let critical = critical_gamma(l)?;
    if (gamma - critical).abs() <= CRITICAL_RELATIVE_TOLERANCE * critical {
        Ok(GammaMode::Critical)
    } else if gamma > critical || gamma < 0.0 {
        Ok(GammaMode::Regular)
    } else {
        Ok(GammaMode::Singular)
    }
}

/// The pair `(l, γ_l)` selecting one member of the deformed family.
///
/// `γ = ±∞` is accepted and reproduces the classic ladder operators.
#[derive(Debug, Clone)]
pub struct FactorizationParams {
    l: u32,
    gamma: f64,
    mode: GammaMode,
    critical: f64,
    singular_override: bool,
    // c_l of the missing state, filled on first use.
    pub(crate) missing_norm: OnceLock<f64>,
}

impl FactorizationParams {
    /// Builds the parameters, rejecting singular `γ`.
    pub fn new(l: u32, gamma: f64) -> Result<Self> {
        Self::build(l, gamma, false)
    }

    /// Builds the parameters, allowing a singular `γ` for evaluation away
    /// from the pole of `γ − I_l(r)`.
    pub fn with_singular_override(l: u32, gamma: f64) -> Result<Self> {
        Self::build(l, gamma, true)
    }

    /// The critical member `γ = (2l)! (l/2)^(2l+1)`.
    pub fn critical(l: u32) -> Result<Self> {
        Self::new(l, critical_gamma(l)?)
    }

    fn build(l: u32, gamma: f64, singular_override: bool) -> Result<Self> {
        let mode = classify_gamma(l, gamma)?;
        let critical = critical_gamma(l)?;
        if mode == GammaMode::Singular && !singular_override {
            return Err(Error::SingularGamma { l, gamma, critical });
        }
        let gamma = if mode == GammaMode::Critical {
            critical
        } else {
            gamma
        };
        Ok(Self {
            l,
            gamma,
            mode,
            critical,
            singular_override,
            missing_norm: OnceLock::new(),
        })
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    pub fn mode(&self) -> GammaMode {
        self.mode
    }

    /// `(2l)! (l/2)^(2l+1)` for this `l`.
    pub fn critical_gamma(&self) -> f64 {
        self.critical
    }

    pub fn singular_override(&self) -> bool {
        self.singular_override
    }

    /// `γ − γ_c`, the offset of the denominator `γ − I_l(r)` from the integral tail.
    pub(crate) fn excess(&self) -> f64 {
        self.gamma - self.critical
    }
}

impl PartialEq for FactorizationParams {
    fn eq(&self, other: &Self) -> bool {
        self.l == other.l
            && self.gamma.to_bits() == other.gamma.to_bits()
            && self.singular_override == other.singular_override
    }
}
