use super::params::{FactorizationParams, GammaMode};
use super::superpotential::{coulomb_effective, critical_potential_l1, potential_tilde};
use crate::error::{Error, Result};

/// A named radial potential acting on `u = r R` as `-u'' + V u`.
#[derive(Debug, Clone, PartialEq)]
pub enum PotentialSpec {
    /// `l(l+1)/r² − 2/r`.
    CoulombEffective { l: u32 },
    /// `Ṽ_{l−1}` for the given member of the family.
    DeformedFamily(FactorizationParams),
    /// The `l = 1` critical member in closed form.
    CriticalL1Closed,
}

impl PotentialSpec {
    pub fn coulomb(l: u32) -> Self {
        PotentialSpec::CoulombEffective { l }
    }

    /// Wraps a family member. Singular parameters are refused unless they
    /// were built with the singular override.
    pub fn deformed(params: FactorizationParams) -> Result<Self> {
        if params.mode() == GammaMode::Singular && !params.singular_override() {
            return Err(Error::SingularGamma {
                l: params.l(),
                gamma: params.gamma(),
                critical: params.critical_gamma(),
            });
        }
        Ok(PotentialSpec::DeformedFamily(params))
    }

    pub fn evaluate(&self, r: f64) -> Result<f64> {
        match self {
            PotentialSpec::CoulombEffective { l } => coulomb_effective(*l, r),
            PotentialSpec::DeformedFamily(params) => potential_tilde(params, r),
            PotentialSpec::CriticalL1Closed => critical_potential_l1(r),
        }
    }

    /// Angular momentum of the channel the potential acts in.
    pub fn channel_l(&self) -> u32 {
        match self {
            PotentialSpec::CoulombEffective { l } => *l,
            PotentialSpec::DeformedFamily(params) => params.l() - 1,
            PotentialSpec::CriticalL1Closed => 0,
        }
    }

    pub fn label(&self) -> String {
        match self {
            PotentialSpec::CoulombEffective { l } => format!("coulomb(l={l})"),
            PotentialSpec::DeformedFamily(p) => {
                format!("deformed(l={}, gamma={})", p.l(), p.gamma())
            }
            PotentialSpec::CriticalL1Closed => "critical_l1".to_owned(),
        }
    }
}
