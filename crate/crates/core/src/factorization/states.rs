//! Eigenstates of the partner Hamiltonian `H̃_{l−1}`: the images `A_l R_nl` of
//! the hydrogen states and the missing state annihilated by `A_l⁺`.

use std::f64::consts::PI;

use super::operators::RadialJet;
use super::params::{FactorizationParams, GammaMode};
use super::superpotential::{beta_jet, denominator};
use crate::error::{Error, Result};
use crate::oracle::quadrature::{integrate_to_infinity, Tolerance};
use crate::special::{hydrogen_radial_jet, tail_polynomial, QuantumNumbers};

/// Relative size of the neglected tail when normalizing the missing state.
const NORM_TAIL: f64 = 1e-14;

/// The state `R̃_{l,l−1} = c_l r^(l−1) e^(-r/l) / (γ_l − I_l(r))`, annihilated
/// by `A_l⁺` and an eigenvector of `H̃_{l−1}` at `−1/l²`.
///
/// In regular mode `|c_l|` gives unit norm and its sign follows `γ`, so the
/// state is positive near the origin; at the critical value the profile is
/// not square integrable and `c_l = 1`.
#[derive(Debug, Clone, Copy)]
pub struct MissingState<'a> {
    params: &'a FactorizationParams,
    coefficient: f64,
}

impl<'a> MissingState<'a> {
    pub fn new(params: &'a FactorizationParams) -> Result<Self> {
        let coefficient = match params.mode() {
            GammaMode::Singular => {
                return Err(Error::NotNormalizable {
                    mode: params.mode(),
                })
            }
            GammaMode::Critical => 1.0,
            GammaMode::Regular => match params.missing_norm.get() {
                Some(&c) => c,
                None => {
                    let c = normalization(params)?;
                    // A concurrent initializer computes the same value.
                    let _ = params.missing_norm.set(c);
                    c
                }
            },
        };
        Ok(Self {
            params,
            coefficient,
        })
    }

    pub fn coefficient(&self) -> f64 {
        self.coefficient
    }

    pub fn is_normalizable(&self) -> bool {
        self.params.mode() == GammaMode::Regular
    }

    /// `R̃(r)`; `r = 0` is allowed.
    pub fn value(&self, r: f64) -> Result<f64> {
        Ok(self.coefficient * profile(self.params, r)?)
    }

    /// `R̃` with its first two derivatives, from `u' = β u` for `u = r R̃`.
    pub fn jet(&self, r: f64) -> Result<RadialJet> {
        let [b, db, _] = beta_jet(self.params, r)?;
        let value = self.value(r)?;
        let u = r * value;
        let du2 = (db + b * b) * u;
        let d1 = value * (b - 1.0 / r);
        let d2 = (du2 - 2.0 * d1) / r;
        Ok(RadialJet::new(r, value, d1, d2))
    }

    /// Eigenvalue `−1/l²` of the missing state.
    pub fn energy(&self) -> f64 {
        let l = f64::from(self.params.l());
        -1.0 / (l * l)
    }
}

/// Unnormalized missing-state profile (`c_l = 1`).
fn profile(params: &FactorizationParams, r: f64) -> Result<f64> {
    if !(r >= 0.0) || !r.is_finite() {
        return Err(Error::InvalidRadius(r));
    }
    let l = params.l();
    let lf = f64::from(l);
    let power = if l == 1 { 1.0 } else { r.powi(l as i32 - 1) };
    if params.mode() == GammaMode::Critical {
        // e^{-r/l} / (γ_c e^{-2r/l} Σ) = e^{r/l} / (γ_c Σ)
        let poly = tail_polynomial(l, r)?;
        return Ok(power * (r / lf).exp() / (params.critical_gamma() * poly));
    }
    Ok(power * (-r / lf).exp() / denominator(params, r)?)
}

fn normalization(params: &FactorizationParams) -> Result<f64> {
    let step = 8.0 * f64::from(params.l());
    let tol = Tolerance::new(1e-300, 1e-13);
    let integral = integrate_to_infinity(
        |r| {
            let u = r * profile(params, r).unwrap_or(f64::NAN);
            4.0 * PI * u * u
        },
        0.0,
        step,
        NORM_TAIL,
        tol,
    )?;
    Ok(params.gamma().signum() / integral.sqrt())
}

/// `R̃_{l,l−1}(r)`; regular mode returns the unit-norm state, critical mode
/// the raw profile.
pub fn missing_state(params: &FactorizationParams, r: f64) -> Result<f64> {
    MissingState::new(params)?.value(r)
}

fn check_pair(params: &FactorizationParams, qn: QuantumNumbers) -> Result<()> {
    if qn.l() != params.l() {
        return Err(Error::QuantumNumberMismatch {
            state: qn.l(),
            params: params.l(),
        });
    }
    Ok(())
}

/// `(A_l R_nl)` with first and second derivatives, all analytic.
///
/// With `v = r R_nl` and `w = r (A_l R_nl) = v' + β v`, the radial equation
/// `v'' = q v`, `q = l(l+1)/r² − 2/r − λ_n` supplies `v''` and `v'''`.
pub fn apply_a_jet(params: &FactorizationParams, qn: QuantumNumbers, r: f64) -> Result<RadialJet> {
    check_pair(params, qn)?;
    if !(r > 0.0) {
        return Err(Error::InvalidRadius(r));
    }
    let [b, db, d2b] = beta_jet(params, r)?;
    let [rv, dr, _] = hydrogen_radial_jet(qn, r)?;
    let lf = f64::from(qn.l());
    let cent = lf * (lf + 1.0);
    let q = cent / (r * r) - 2.0 / r - qn.energy();
    let dq = -2.0 * cent / (r * r * r) + 2.0 / (r * r);

    let v = r * rv;
    let dv = rv + r * dr;
    let d2v = q * v;
    let d3v = dq * v + q * dv;

    let w = dv + b * v;
    let dw = d2v + db * v + b * dv;
    let d2w = d3v + d2b * v + 2.0 * db * dv + b * d2v;

    let value = w / r;
    let d1 = (dw - value) / r;
    let d2 = (d2w - 2.0 * d1) / r;
    Ok(RadialJet::new(r, value, d1, d2))
}

/// `(A_l R_nl)(r) = R' + R/r + β_l R`.
pub fn apply_a(params: &FactorizationParams, qn: QuantumNumbers, r: f64) -> Result<f64> {
    check_pair(params, qn)?;
    if !(r > 0.0) {
        return Err(Error::InvalidRadius(r));
    }
    let [b, _, _] = beta_jet(params, r)?;
    let [rv, dr, _] = hydrogen_radial_jet(qn, r)?;
    Ok(dr + rv / r + b * rv)
}

/// `(A_l R_nl, A_l R_nl) = λ_n + 1/l²`.
pub fn transformed_norm_squared(qn: QuantumNumbers) -> f64 {
    let l = f64::from(qn.l());
    qn.energy() + 1.0 / (l * l)
}

fn transformed_scale(params: &FactorizationParams, qn: QuantumNumbers) -> Result<f64> {
    check_pair(params, qn)?;
    if params.mode() == GammaMode::Singular {
        return Err(Error::NotNormalizable {
            mode: params.mode(),
        });
    }
    let norm2 = transformed_norm_squared(qn);
    assert!(norm2 > 0.0, "λ_n + 1/l² must be positive for n >= l + 1");
    Ok(1.0 / norm2.sqrt())
}

/// Unit-norm eigenfunction `A_l R_nl / √(λ_n + 1/l²)` of `H̃_{l−1}` at `λ_n`.
pub fn transformed_state(params: &FactorizationParams, qn: QuantumNumbers, r: f64) -> Result<f64> {
    let scale = transformed_scale(params, qn)?;
    Ok(scale * apply_a(params, qn, r)?)
}

/// [`transformed_state`] with analytic first and second derivatives.
pub fn transformed_state_jet(
    params: &FactorizationParams,
    qn: QuantumNumbers,
    r: f64,
) -> Result<RadialJet> {
    let scale = transformed_scale(params, qn)?;
    let j = apply_a_jet(params, qn, r)?;
    Ok(RadialJet::new(
        r,
        scale * j.value,
        scale * j.d1,
        scale * j.d2,
    ))
}
