//! Pointwise action of the first-order factors
//! `A_l = (1/r)[d/dr + β_l] r` and `A_l⁺ = (1/r)[-d/dr + β_l] r`
//! and of the radial Hamiltonians on a function known through its value and
//! first two derivatives.

use super::params::FactorizationParams;
use super::superpotential::{beta_jet, potential_tilde};
use crate::error::{Error, Result};

/// `f(r)`, `f'(r)` and `f''(r)` at one radius.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadialJet {
    pub r: f64,
    pub value: f64,
    pub d1: f64,
    pub d2: f64,
}

impl RadialJet {
    pub fn new(r: f64, value: f64, d1: f64, d2: f64) -> Self {
        Self { r, value, d1, d2 }
    }
}

/// The factor pair `A_l`, `A_l⁺` bound to one member of the family.
#[derive(Debug, Clone, Copy)]
pub struct Ladder<'a> {
    params: &'a FactorizationParams,
}

impl<'a> Ladder<'a> {
    pub fn new(params: &'a FactorizationParams) -> Self {
        Self { params }
    }

    fn check(&self, f: &RadialJet) -> Result<[f64; 3]> {
        if !(f.r > 0.0) {
            return Err(Error::InvalidRadius(f.r));
        }
        beta_jet(self.params, f.r)
    }

    /// `(A f, (A f)')`.
    fn lower_with_slope(&self, f: &RadialJet) -> Result<(f64, f64)> {
        let [b, db, _] = self.check(f)?;
        let r = f.r;
        let value = f.d1 + f.value / r + b * f.value;
        let slope = f.d2 + f.d1 / r - f.value / (r * r) + db * f.value + b * f.d1;
        Ok((value, slope))
    }

    /// `(A⁺ f, (A⁺ f)')`.
    fn raise_with_slope(&self, f: &RadialJet) -> Result<(f64, f64)> {
        let [b, db, _] = self.check(f)?;
        let r = f.r;
        let value = -f.d1 - f.value / r + b * f.value;
        let slope = -f.d2 - f.d1 / r + f.value / (r * r) + db * f.value + b * f.d1;
        Ok((value, slope))
    }

    /// `A_l f = f' + f/r + β f`.
    pub fn lower(&self, f: &RadialJet) -> Result<f64> {
        Ok(self.lower_with_slope(f)?.0)
    }

    /// `A_l⁺ f = -f' - f/r + β f`.
    pub fn raise(&self, f: &RadialJet) -> Result<f64> {
        Ok(self.raise_with_slope(f)?.0)
    }

    /// `A_l⁺ A_l f`.
    pub fn raise_lower(&self, f: &RadialJet) -> Result<f64> {
        let [b, _, _] = self.check(f)?;
        let (g, dg) = self.lower_with_slope(f)?;
        Ok(-dg - g / f.r + b * g)
    }

    /// `A_l A_l⁺ f`.
    pub fn lower_raise(&self, f: &RadialJet) -> Result<f64> {
        let [b, _, _] = self.check(f)?;
        let (g, dg) = self.raise_with_slope(f)?;
        Ok(dg + g / f.r + b * g)
    }

    /// `[A_l, A_l⁺] f`.
    pub fn commutator(&self, f: &RadialJet) -> Result<f64> {
        Ok(self.lower_raise(f)? - self.raise_lower(f)?)
    }

    /// `H̃_{l−1} f = -(r f)''/r + Ṽ_{l−1} f`.
    pub fn partner_hamiltonian(&self, f: &RadialJet) -> Result<f64> {
        let v = potential_tilde(self.params, f.r)?;
        Ok(-(f.d2 + 2.0 * f.d1 / f.r) + v * f.value)
    }
}

/// `H_l f = -(r f)''/r + (l(l+1)/r² − 2/r) f`.
pub fn hydrogen_hamiltonian(l: u32, f: &RadialJet) -> Result<f64> {
    if !(f.r > 0.0) {
        return Err(Error::InvalidRadius(f.r));
    }
    let lf = f64::from(l);
    let r = f.r;
    Ok(-(f.d2 + 2.0 * f.d1 / r) + (lf * (lf + 1.0) / (r * r) - 2.0 / r) * f.value)
}
