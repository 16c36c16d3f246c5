//! The general solution of the Riccati equation
//! `-β' + β² = l(l+1)/r² − 2/r + 1/l²` and the deformed potential it induces.
//!
//! `β_l(r) = l/r − 1/l + φ_l(r)` with
//! `φ_l(r) = r^(2l) e^(-2r/l) / (γ_l − I_l(r))`.
//!
//! The denominator `γ − I_l(r)` is formed directly only while `I_l ≤ γ_c/2`;
//! further out it is evaluated as `(γ − γ_c) + T_l(r)` with `T_l` the integral
//! tail beyond `r`, so neither branch cancels more than a factor of two. At the
//! critical value the common factor `e^(-2r/l)` is cancelled analytically.

use super::params::{FactorizationParams, GammaMode};
use crate::error::{Error, Result};
use crate::special::{integral_tail, tail_polynomial, truncated_integral};

/// Threshold on `|γ − I_l(r)|` relative to `max(1, |γ|)`.
const VANISHING_DENOMINATOR: f64 = 1e-14;

fn check_positive(r: f64) -> Result<()> {
    if !(r > 0.0) || !r.is_finite() {
        return Err(Error::InvalidRadius(r));
    }
    Ok(())
}

fn check_nonnegative(r: f64) -> Result<()> {
    if !(r >= 0.0) || !r.is_finite() {
        return Err(Error::InvalidRadius(r));
    }
    Ok(())
}

/// `γ − I_l(r)`, switching to `(γ − γ_c) + T_l(r)` past the median of `I_l`.
pub(crate) fn denominator(params: &FactorizationParams, r: f64) -> Result<f64> {
    let l = params.l();
    let inner = truncated_integral(l, r)?;
    let d = if params.mode() != GammaMode::Critical && inner <= 0.5 * params.critical_gamma() {
        params.gamma() - inner
    } else {
        params.excess() + integral_tail(l, r)?
    };
    if params.mode() != GammaMode::Critical
        && d.abs() < VANISHING_DENOMINATOR * params.gamma().abs().max(1.0)
    {
        return Err(Error::DenominatorVanishing { r });
    }
    Ok(d)
}

/// `φ_l(r)`, the deviation of `β_l` from the particular solution `l/r − 1/l`.
pub fn phi_correction(params: &FactorizationParams, r: f64) -> Result<f64> {
    check_nonnegative(r)?;
    if r == 0.0 {
        return Ok(0.0);
    }
    let l = params.l();
    let two_l = f64::from(2 * l);
    if params.mode() == GammaMode::Critical {
        // e^{-2r/l} cancels between numerator and tail.
        let poly = tail_polynomial(l, r)?;
        return Ok(r.powf(two_l) / (params.critical_gamma() * poly));
    }
    let d = denominator(params, r)?;
    let numerator = (two_l * r.ln() - 2.0 * r / f64::from(l)).exp();
    Ok(numerator / d)
}

/// Value and first two derivatives of `φ_l` from the closed-form recursion
/// `φ' = (2l/r − 2/l) φ + φ²`.
pub fn phi_jet(params: &FactorizationParams, r: f64) -> Result<[f64; 3]> {
    let phi = phi_correction(params, r)?;
    if phi == 0.0 {
        return Ok([0.0; 3]);
    }
    let l = f64::from(params.l());
    let rate = 2.0 * l / r - 2.0 / l;
    let d1 = rate * phi + phi * phi;
    let d2 = -2.0 * l / (r * r) * phi + rate * d1 + 2.0 * phi * d1;
    Ok([phi, d1, d2])
}

/// Analytic `dφ_l/dr`.
pub fn phi_correction_deriv(params: &FactorizationParams, r: f64) -> Result<f64> {
    Ok(phi_jet(params, r)?[1])
}

/// The superpotential `β_l(r)`.
pub fn beta(params: &FactorizationParams, r: f64) -> Result<f64> {
    check_positive(r)?;
    let l = f64::from(params.l());
    Ok(l / r - 1.0 / l + phi_correction(params, r)?)
}

/// `(β, β', β'')` at `r`.
pub fn beta_jet(params: &FactorizationParams, r: f64) -> Result<[f64; 3]> {
    check_positive(r)?;
    let l = f64::from(params.l());
    let [phi, d1, d2] = phi_jet(params, r)?;
    Ok([
        l / r - 1.0 / l + phi,
        -l / (r * r) + d1,
        2.0 * l / (r * r * r) + d2,
    ])
}

/// The classic particular solution `l/r − 1/l` (the `γ → ±∞` member).
pub fn particular_beta(l: u32, r: f64) -> f64 {
    let l = f64::from(l);
    l / r - 1.0 / l
}

/// `Ṽ_{l−1}(r) = −2/r + l(l−1)/r² + 2 φ_l'(r)`.
pub fn potential_tilde(params: &FactorizationParams, r: f64) -> Result<f64> {
    check_positive(r)?;
    let l = f64::from(params.l());
    Ok(-2.0 / r + l * (l - 1.0) / (r * r) + 2.0 * phi_correction_deriv(params, r)?)
}

/// Closed form of the `l = 1` critical member,
/// `Ṽ_0(r) = −2/r + 16 r (r+1) / (2r² + 2r + 1)²`.
pub fn critical_potential_l1(r: f64) -> Result<f64> {
    check_positive(r)?;
    let q = 2.0 * r * r + 2.0 * r + 1.0;
    Ok(-2.0 / r + 16.0 * r * (r + 1.0) / (q * q))
}

/// Coulomb effective potential `l(l+1)/r² − 2/r` of the undeformed channel.
pub fn coulomb_effective(l: u32, r: f64) -> Result<f64> {
    check_positive(r)?;
    let l = f64::from(l);
    Ok(l * (l + 1.0) / (r * r) - 2.0 / r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(l: u32, gamma: f64) -> FactorizationParams {
        FactorizationParams::new(l, gamma).unwrap()
    }

    #[test]
    fn infinite_gamma_is_particular_solution() {
        let p = params(1, f64::INFINITY);
        assert_eq!(beta(&p, 2.0).unwrap(), -0.5);
        assert_eq!(potential_tilde(&p, 3.0).unwrap(), -2.0 / 3.0);
        let m = params(2, f64::NEG_INFINITY);
        assert_eq!(phi_correction(&m, 1.0).unwrap(), 0.0);
    }

    #[test]
    fn beta_l1_gamma1_r1() {
        let p = params(1, 1.0);
        let expected = (-2.0f64).exp() / (1.0 - truncated_integral(1, 1.0).unwrap());
        let got = beta(&p, 1.0).unwrap();
        assert!((got - expected).abs() < 1e-15);
        assert!((got - 0.147236).abs() < 1e-6, "{got}");
    }

    #[test]
    fn critical_correction_tends_to_constant() {
        let p = FactorizationParams::critical(1).unwrap();
        let phi = phi_correction(&p, 50.0).unwrap();
        // 4r²/(2r²+2r+1) → 2
        assert!((phi - 2.0).abs() < 0.05, "{phi}");
        let b = beta(&p, 50.0).unwrap();
        assert!((b - (1.0 / 50.0 - 1.0) - 2.0).abs() < 0.05);
        for l in 1..=3u32 {
            let p = FactorizationParams::critical(l).unwrap();
            let far = phi_correction(&p, 2000.0).unwrap();
            assert!((far - 2.0 / f64::from(l)).abs() < 1e-2, "l={l}: {far}");
        }
    }

    #[test]
    fn negative_gamma_gives_negative_correction() {
        let p = params(1, -3.0);
        for &r in &[0.01, 0.5, 2.0, 10.0, 100.0, 600.0] {
            let phi = phi_correction(&p, r).unwrap();
            assert!(phi <= 0.0 && phi.is_finite());
        }
    }

    #[test]
    fn correction_at_origin() {
        let p = params(1, 1.0);
        assert_eq!(phi_correction(&p, 0.0).unwrap(), 0.0);
        let r = 1e-4;
        let d = phi_correction_deriv(&p, r).unwrap();
        // φ ≈ r²(1 − 2r) ⇒ φ' ≈ 2r − 6r²
        assert!((d - 2.0 * r).abs() < 10.0 * r * r);
    }

    #[test]
    fn l2_correction_value() {
        let p = params(2, 30.0);
        let expected = (-1.0f64).exp() / (30.0 - truncated_integral(2, 1.0).unwrap());
        assert!((phi_correction(&p, 1.0).unwrap() - expected).abs() < 1e-16);
    }

    #[test]
    fn derivative_matches_central_difference() {
        let p = params(1, 1.0);
        let (r, h) = (1.5, 1e-6);
        let fd =
            (phi_correction(&p, r + h).unwrap() - phi_correction(&p, r - h).unwrap()) / (2.0 * h);
        let d = phi_correction_deriv(&p, r).unwrap();
        assert!((fd - d).abs() <= 1e-7 * d.abs(), "{fd} vs {d}");
    }

    #[test]
    fn second_derivative_matches_central_difference() {
        for &(l, g) in &[(1, 0.3), (2, -4.0), (3, 2e4)] {
            let p = params(l, g);
            let (r, h) = (1.7, 1e-5);
            let fd = (phi_correction_deriv(&p, r + h).unwrap()
                - phi_correction_deriv(&p, r - h).unwrap())
                / (2.0 * h);
            let d2 = phi_jet(&p, r).unwrap()[2];
            assert!(
                (fd - d2).abs() <= 1e-6 * d2.abs().max(1e-8),
                "l={l}: {fd} vs {d2}"
            );
        }
    }

    #[test]
    fn riccati_spot_check() {
        let p = params(1, -2.0);
        let r = 0.7;
        let [b, db, _] = beta_jet(&p, r).unwrap();
        let rhs = 2.0 / (r * r) - 2.0 / r + 1.0;
        assert!((-db + b * b - rhs).abs() < 1e-10);
    }

    #[test]
    fn critical_potential_values() {
        assert!((critical_potential_l1(1.0).unwrap() + 0.72).abs() < 1e-15);
        let half = critical_potential_l1(0.5).unwrap();
        assert!((half - (-4.0 + 16.0 * 0.75 / (2.5f64 * 2.5))).abs() < 1e-14);
        let p = FactorizationParams::critical(1).unwrap();
        assert!((potential_tilde(&p, 1.0).unwrap() + 0.72).abs() < 1e-13);
        assert!((potential_tilde(&p, 0.5).unwrap() - half).abs() < 1e-13);
    }

    #[test]
    fn potential_example_l1_gamma_0_3() {
        let p = params(1, 0.3);
        let h = 1e-5;
        let fd = (phi_correction(&p, 2.0 + h).unwrap() - phi_correction(&p, 2.0 - h).unwrap())
            / (2.0 * h);
        let v = potential_tilde(&p, 2.0).unwrap();
        assert!((v - (-1.0 + 2.0 * fd)).abs() < 1e-8);
    }

    #[test]
    fn singular_pole_is_reported() {
        let p = FactorizationParams::with_singular_override(1, 0.1).unwrap();
        // locate the pole of 0.1 − I_1(r) by bisection
        let (mut lo, mut hi) = (0.0, 10.0);
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if truncated_integral(1, mid).unwrap() < 0.1 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        assert!(matches!(
            phi_correction(&p, lo),
            Err(Error::DenominatorVanishing { .. })
        ));
        assert!(phi_correction(&p, 0.5 * lo).unwrap() > 0.0);
    }

    #[test]
    fn radius_validation() {
        let p = params(1, 1.0);
        assert!(beta(&p, 0.0).is_err());
        assert!(potential_tilde(&p, -1.0).is_err());
        assert!(critical_potential_l1(0.0).is_err());
    }
}
