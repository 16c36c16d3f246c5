//! Closed-form special functions used by the construction.
//!
//! Units: radii in Bohr radii, energies in Rydberg, so the hydrogen radial
//! operator is `-d²/dr² + l(l+1)/r² - 2/r` acting on `u = r R` and the bound
//! levels sit at `-1/n²`.
//!
//! States are normalized with the 4π-weighted scalar product
//! `(R, R') = 4π ∫ R R' r² dr`.

use std::f64::consts::PI;

use crate::error::{Error, Result};

/// Largest `l` for which [`critical_gamma`] is evaluated as a direct product.
const DIRECT_PRODUCT_MAX_L: u32 = 20;

/// Principal and angular quantum numbers of a hydrogen bound state.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QuantumNumbers {
    n: u32,
    l: u32,
}

impl QuantumNumbers {
    pub fn new(n: u32, l: u32) -> Result<Self> {
        if n < l + 1 {
            return Err(Error::InvalidQuantumNumbers { n, l });
        }
        Ok(Self { n, l })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    /// Bound-state energy `-1/n²`.
    pub fn energy(&self) -> f64 {
        hydrogen_energy(self.n)
    }
}

/// Hydrogen bound-state energy `λ_n = -1/n²`.
pub fn hydrogen_energy(n: u32) -> f64 {
    let n = f64::from(n);
    -1.0 / (n * n)
}

fn check_l(l: u32) -> Result<()> {
    if l == 0 {
        return Err(Error::ZeroAngularMomentum(l));
    }
    Ok(())
}

fn check_radius(r: f64) -> Result<()> {
    if !(r >= 0.0) || !r.is_finite() {
        return Err(Error::InvalidRadius(r));
    }
    Ok(())
}

fn ln_factorial(k: u32) -> f64 {
    (2..=k).map(|j| f64::from(j).ln()).sum()
}

/// `(2l)! (l/2)^(2l+1)`, the value of `∫_0^∞ y^(2l) e^(-2y/l) dy`.
///
/// Exact for small `l` and evaluated in the log domain otherwise.
pub fn critical_gamma(l: u32) -> Result<f64> {
    check_l(l)?;
    let half = f64::from(l) / 2.0;
    let log_value = ln_factorial(2 * l) + f64::from(2 * l + 1) * half.ln();
    if log_value >= f64::MAX.ln() {
        return Err(Error::CriticalGammaOverflow(l));
    }
    if l <= DIRECT_PRODUCT_MAX_L {
        let factorial: f64 = (2..=2 * l).map(f64::from).product();
        Ok(factorial * half.powi(2 * l as i32 + 1))
    } else {
        Ok(log_value.exp())
    }
}

/// Rate `a = 2/l` of the exponential in the integrand `y^(2l) e^(-a y)`.
fn decay_rate(l: u32) -> f64 {
    2.0 / f64::from(l)
}

/// `Σ_{k=0}^{2l} x^k / k!` with `x = 2r/l`, the truncated exponential series
/// whose product with `γ_c e^(-x)` is the integral tail beyond `r`.
pub fn tail_polynomial(l: u32, r: f64) -> Result<f64> {
    check_l(l)?;
    check_radius(r)?;
    let x = decay_rate(l) * r;
    let mut term = 1.0;
    let mut sum = KahanSum::new(1.0);
    for k in 1..=2 * l {
        term *= x / f64::from(k);
        sum.add(term);
    }
    Ok(sum.value())
}

/// Regularized upper incomplete gamma `Q(2l+1, x) = e^(-x) Σ_{k=0}^{2l} x^k/k!`.
///
/// Terms are formed in the log domain so large `x` neither overflows nor loses
/// the leading digits.
fn upper_regularized(l: u32, x: f64) -> f64 {
    if x == 0.0 {
        return 1.0;
    }
    let ln_x = x.ln();
    let mut sum = KahanSum::new(0.0);
    let mut ln_fact = 0.0;
    for k in 0..=2 * l {
        if k > 0 {
            ln_fact += f64::from(k).ln();
        }
        sum.add((f64::from(k) * ln_x - x - ln_fact).exp());
    }
    sum.value()
}

/// `I_l(r) = ∫_0^r y^(2l) e^(-2y/l) dy` in closed form.
///
/// Below the mode of the gamma density the lower series is summed directly
/// (all terms positive); above it the complement `γ_c (1 - Q)` is used, where
/// `Q <= 1/2` keeps the subtraction well conditioned.
pub fn truncated_integral(l: u32, r: f64) -> Result<f64> {
    check_l(l)?;
    check_radius(r)?;
    if r == 0.0 {
        return Ok(0.0);
    }
    let shape = f64::from(2 * l + 1);
    let x = decay_rate(l) * r;
    if x < shape {
        // r^s e^{-x} Σ_k x^k (2l)! / (s+k)!
        let mut term = 1.0 / shape;
        let mut sum = 0.0;
        let mut k = 0.0;
        while term > f64::EPSILON * sum * 1e-2 || k < 1.0 {
            sum += term;
            term *= x / (shape + 1.0 + k);
            k += 1.0;
        }
        Ok((shape * r.ln() - x).exp() * sum)
    } else {
        let gamma_c = critical_gamma(l)?;
        Ok(gamma_c * (1.0 - upper_regularized(l, x)))
    }
}

/// `∫_r^∞ y^(2l) e^(-2y/l) dy = γ_c − I_l(r)`, computed without cancellation.
pub fn integral_tail(l: u32, r: f64) -> Result<f64> {
    check_l(l)?;
    check_radius(r)?;
    let gamma_c = critical_gamma(l)?;
    Ok(gamma_c * upper_regularized(l, decay_rate(l) * r))
}

/// Associated Laguerre polynomial `L_k^α(x)` by the three-term recurrence.
pub fn laguerre(k: u32, alpha: f64, x: f64) -> f64 {
    let mut prev = 1.0;
    if k == 0 {
        return prev;
    }
    let mut curr = 1.0 + alpha - x;
    for j in 1..k {
        let j = f64::from(j);
        let next = ((2.0 * j + 1.0 + alpha - x) * curr - (j + alpha) * prev) / (j + 1.0);
        prev = curr;
        curr = next;
    }
    curr
}

/// `d^m/dx^m L_k^α(x) = (-1)^m L_{k-m}^{α+m}(x)`.
fn laguerre_derivative(k: u32, alpha: f64, x: f64, order: u32) -> f64 {
    if order > k {
        return 0.0;
    }
    let sign = if order % 2 == 0 { 1.0 } else { -1.0 };
    sign * laguerre(k - order, alpha + f64::from(order), x)
}

/// Normalization `N_nl` under the 4π-weighted product, positive.
fn hydrogen_norm(qn: QuantumNumbers) -> f64 {
    let n = f64::from(qn.n);
    let ln_ratio = ln_factorial(qn.n - qn.l - 1) - ln_factorial(qn.n + qn.l);
    let standard = ((2.0 / n).powi(3) / (2.0 * n)).sqrt() * (0.5 * ln_ratio).exp();
    standard / (4.0 * PI).sqrt()
}

/// `c · ρ^p` with the convention that a zero coefficient kills the term,
/// so negative powers at `ρ = 0` never produce `0 · ∞`.
fn scaled_power(coefficient: f64, rho: f64, power: i32) -> f64 {
    if coefficient == 0.0 {
        0.0
    } else {
        coefficient * rho.powi(power)
    }
}

/// Value and the first two derivatives of `R_nl` with respect to `r`.
fn hydrogen_jet(qn: QuantumNumbers, r: f64) -> Result<[f64; 3]> {
    check_radius(r)?;
    let n = f64::from(qn.n);
    let l = f64::from(qn.l);
    let li = qn.l as i32;
    let k = qn.n - qn.l - 1;
    let alpha = 2.0 * l + 1.0;
    let rho = 2.0 * r / n;

    let lag = laguerre(k, alpha, rho);
    let lag1 = laguerre_derivative(k, alpha, rho, 1);
    let lag2 = laguerre_derivative(k, alpha, rho, 2);
    let damp = (-rho / 2.0).exp();

    let p0 = rho.powi(li);
    let p1 = scaled_power(l, rho, li - 1);
    let p2 = scaled_power(l * (l - 1.0), rho, li - 2);

    let f0 = p0 * lag;
    let f1 = p1 * lag + p0 * (lag1 - 0.5 * lag);
    let f2 = p2 * lag + 2.0 * p1 * (lag1 - 0.5 * lag) + p0 * (lag2 - lag1 + 0.25 * lag);

    let norm = hydrogen_norm(qn) * damp;
    let scale = 2.0 / n;
    Ok([norm * f0, norm * f1 * scale, norm * f2 * scale * scale])
}

/// Normalized hydrogen radial function
/// `R_nl(r) = N_nl (2r/n)^l e^(-r/n) L_{n-l-1}^{2l+1}(2r/n)`, positive near the origin.
pub fn hydrogen_radial(qn: QuantumNumbers, r: f64) -> Result<f64> {
    Ok(hydrogen_jet(qn, r)?[0])
}

/// Analytic `dR_nl/dr`.
pub fn hydrogen_radial_deriv(qn: QuantumNumbers, r: f64) -> Result<f64> {
    Ok(hydrogen_jet(qn, r)?[1])
}

/// Analytic `d²R_nl/dr²`.
pub fn hydrogen_radial_second_deriv(qn: QuantumNumbers, r: f64) -> Result<f64> {
    Ok(hydrogen_jet(qn, r)?[2])
}

/// `(R, R', R'')` at `r` in one evaluation.
pub fn hydrogen_radial_jet(qn: QuantumNumbers, r: f64) -> Result<[f64; 3]> {
    hydrogen_jet(qn, r)
}

/// Neumaier-compensated running sum.
#[derive(Debug, Clone, Copy)]
struct KahanSum {
    sum: f64,
    compensation: f64,
}

impl KahanSum {
    fn new(initial: f64) -> Self {
        Self {
            sum: initial,
            compensation: 0.0,
        }
    }

    fn add(&mut self, value: f64) {
        let t = self.sum + value;
        if self.sum.abs() >= value.abs() {
            self.compensation += (self.sum - t) + value;
        } else {
            self.compensation += (value - t) + self.sum;
        }
        self.sum = t;
    }

    fn value(&self) -> f64 {
        self.sum + self.compensation
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol * b.abs().max(1.0)
    }

    #[test]
    fn critical_gamma_small_l() {
        assert_eq!(critical_gamma(1).unwrap(), 0.25);
        assert_eq!(critical_gamma(2).unwrap(), 24.0);
        assert_eq!(critical_gamma(3).unwrap(), 720.0 * 1.5f64.powi(7));
        assert!(close(critical_gamma(3).unwrap(), 12301.875, 1e-15));
    }

    #[test]
    fn critical_gamma_log_domain_matches_product() {
        let l = DIRECT_PRODUCT_MAX_L + 1;
        let direct: f64 = (2..=2 * l).map(f64::from).product::<f64>()
            * (f64::from(l) / 2.0).powi(2 * l as i32 + 1);
        assert!(close(critical_gamma(l).unwrap(), direct, 1e-12));
    }

    #[test]
    fn critical_gamma_overflow_and_zero_l() {
        assert_eq!(critical_gamma(0), Err(Error::ZeroAngularMomentum(0)));
        assert_eq!(critical_gamma(200), Err(Error::CriticalGammaOverflow(200)));
    }

    #[test]
    fn truncated_integral_l1_closed_form() {
        for &r in &[0.0f64, 0.1, 1.0, 2.5, 7.0, 30.0, 80.0] {
            let expected = 0.25 - (r * r / 2.0 + r / 2.0 + 0.25) * (-2.0 * r).exp();
            let got = truncated_integral(1, r).unwrap();
            assert!((got - expected).abs() < 1e-15, "r={r}: {got} vs {expected}");
        }
        let one = truncated_integral(1, 1.0).unwrap();
        assert!((one - (0.25 - 1.25 * (-2.0f64).exp())).abs() < 1e-16);
    }

    #[test]
    fn truncated_integral_small_r_has_no_cancellation() {
        // leading term r^(2l+1)/(2l+1)
        let r = 1e-4;
        let got = truncated_integral(6, r).unwrap();
        let leading = r.powi(13) / 13.0;
        assert!((got / leading - 1.0).abs() < 1e-3);
    }

    #[test]
    fn truncated_integral_rejects_zero_l_and_bad_radius() {
        assert_eq!(
            truncated_integral(0, 1.0),
            Err(Error::ZeroAngularMomentum(0))
        );
        assert!(matches!(
            truncated_integral(1, -1.0),
            Err(Error::InvalidRadius(_))
        ));
        assert!(matches!(
            truncated_integral(1, f64::NAN),
            Err(Error::InvalidRadius(_))
        ));
    }

    #[test]
    fn tail_and_integral_partition_the_total() {
        for l in 1..=6 {
            let gamma_c = critical_gamma(l).unwrap();
            for &r in &[0.0, 0.3, 2.0, 9.0, 40.0] {
                let total = truncated_integral(l, r).unwrap() + integral_tail(l, r).unwrap();
                assert!(close(total, gamma_c, 1e-13), "l={l} r={r}");
            }
        }
    }

    #[test]
    fn truncated_integral_below_critical_at_large_r() {
        for l in 1..=4 {
            let gamma_c = critical_gamma(l).unwrap();
            let r = 200.0 * f64::from(l);
            assert!(truncated_integral(l, r).unwrap() <= gamma_c);
            assert!(integral_tail(l, r).unwrap() > 0.0);
        }
    }

    #[test]
    fn laguerre_low_degrees() {
        assert_eq!(laguerre(0, 1.0, 3.7), 1.0);
        assert_eq!(laguerre(1, 2.0, 1.0), 2.0);
        // L_2^α(x) = x²/2 − (α+2)x + (α+2)(α+1)/2
        let explicit = |a: f64, x: f64| x * x / 2.0 - (a + 2.0) * x + (a + 2.0) * (a + 1.0) / 2.0;
        assert!((laguerre(2, 1.0, 0.5) - 1.625).abs() < 1e-15);
        for &(a, x) in &[(0.0, 0.3), (3.0, 2.2), (5.0, 11.0)] {
            assert!((laguerre(2, a, x) - explicit(a, x)).abs() < 1e-12);
        }
    }

    #[test]
    fn laguerre_degree_three_explicit() {
        // L_3^α(x) = −x³/6 + (α+3)x²/2 − (α+2)(α+3)x/2 + (α+1)(α+2)(α+3)/6
        let (a, x) = (3.0, 1.7);
        let explicit = -x * x * x / 6.0 + (a + 3.0) * x * x / 2.0 - (a + 2.0) * (a + 3.0) * x / 2.0
            + (a + 1.0) * (a + 2.0) * (a + 3.0) / 6.0;
        assert!((laguerre(3, a, x) - explicit).abs() < 1e-12);
    }

    #[test]
    fn ground_state_closed_form() {
        let qn = QuantumNumbers::new(1, 0).unwrap();
        for &r in &[0.0f64, 0.5, 3.0] {
            let expected = (-r).exp() / PI.sqrt();
            assert!((hydrogen_radial(qn, r).unwrap() - expected).abs() < 1e-15);
            let d = hydrogen_radial_deriv(qn, r).unwrap();
            assert!((d + hydrogen_radial(qn, r).unwrap()).abs() < 1e-15);
        }
    }

    #[test]
    fn p_state_vanishes_at_origin_with_linear_slope() {
        let qn = QuantumNumbers::new(2, 1).unwrap();
        assert_eq!(hydrogen_radial(qn, 0.0).unwrap(), 0.0);
        // R_21 = N r e^{-r/2} ⇒ R'(0) = N, read off the Taylor series at small r
        let eps = 1e-7;
        let slope = hydrogen_radial(qn, eps).unwrap() / eps;
        assert!((hydrogen_radial_deriv(qn, 0.0).unwrap() - slope).abs() < 1e-7 * slope);
    }

    #[test]
    fn states_positive_near_origin() {
        for n in 1..=6 {
            for l in 0..n {
                let qn = QuantumNumbers::new(n, l).unwrap();
                assert!(hydrogen_radial(qn, 1e-3).unwrap() > 0.0, "n={n} l={l}");
            }
        }
    }

    #[test]
    fn derivative_matches_central_difference() {
        let h = 1e-5;
        let r = 1.3;
        for n in 1..=5 {
            for l in 0..n {
                let qn = QuantumNumbers::new(n, l).unwrap();
                let fd = (hydrogen_radial(qn, r + h).unwrap()
                    - hydrogen_radial(qn, r - h).unwrap())
                    / (2.0 * h);
                let d = hydrogen_radial_deriv(qn, r).unwrap();
                assert!(
                    (fd - d).abs() <= 1e-8 * d.abs().max(1e-3),
                    "n={n} l={l}: {fd} vs {d}"
                );
            }
        }
    }

    #[test]
    fn radial_equation_residual() {
        for n in 1..=5 {
            for l in 0..n {
                let qn = QuantumNumbers::new(n, l).unwrap();
                let lf = f64::from(l);
                for &r in &[0.05, 0.4, 1.0, 3.3, 8.0, 20.0] {
                    let [rv, d1, d2] = hydrogen_radial_jet(qn, r).unwrap();
                    let u = r * rv;
                    let u2 = 2.0 * d1 + r * d2;
                    let residual =
                        -u2 + (lf * (lf + 1.0) / (r * r) - 2.0 / r) * u - qn.energy() * u;
                    let scale = 2.0 * d1.abs()
                        + (r * d2).abs()
                        + (lf * (lf + 1.0) / (r * r) + 2.0 / r + qn.energy().abs()) * u.abs();
                    assert!(
                        residual.abs() <= 1e-8 * scale.max(1e-12),
                        "n={n} l={l} r={r}"
                    );
                }
            }
        }
    }

    #[test]
    fn quantum_number_constraint() {
        assert!(QuantumNumbers::new(1, 1).is_err());
        assert!(QuantumNumbers::new(0, 0).is_err());
        assert_eq!(QuantumNumbers::new(3, 2).unwrap().energy(), -1.0 / 9.0);
    }
}
