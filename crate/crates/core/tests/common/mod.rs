#![allow(dead_code)]

use std::f64::consts::PI;

use isospec::oracle::{integrate, integrate_to_infinity, Tolerance};

/// `n` points spaced evenly in `ln r` over `[a, b]`.
pub fn logspace(a: f64, b: f64, n: usize) -> Vec<f64> {
    let (la, lb) = (a.ln(), b.ln());
    (0..n)
        .map(|i| (la + (lb - la) * i as f64 / (n - 1) as f64).exp())
        .collect()
}

pub fn linspace(a: f64, b: f64, n: usize) -> Vec<f64> {
    (0..n)
        .map(|i| a + (b - a) * i as f64 / (n - 1) as f64)
        .collect()
}

pub fn tight() -> Tolerance {
    Tolerance::new(1e-14, 1e-12)
}

/// `4π ∫_0^∞ f g r² dr` for exponentially decaying radial functions; the
/// integrand is taken to vanish at the origin.
pub fn radial_inner<F, G>(f: F, g: G, step: f64) -> f64
where
    F: Fn(f64) -> f64,
    G: Fn(f64) -> f64,
{
    integrate_to_infinity(
        |r| {
            if r == 0.0 {
                0.0
            } else {
                4.0 * PI * f(r) * g(r) * r * r
            }
        },
        0.0,
        step,
        1e-15,
        tight(),
    )
    .expect("quadrature converges")
}

/// `4π ∫_a^b f g r² dr`.
pub fn radial_inner_on<F, G>(f: F, g: G, a: f64, b: f64) -> f64
where
    F: Fn(f64) -> f64,
    G: Fn(f64) -> f64,
{
    integrate(
        |r| {
            if r == 0.0 {
                0.0
            } else {
                4.0 * PI * f(r) * g(r) * r * r
            }
        },
        a,
        b,
        tight(),
    )
    .expect("quadrature converges")
}
