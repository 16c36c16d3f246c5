//! Adaptive Simpson quadrature with local error control.

use crate::error::{Error, Result};

/// Error targets for [`integrate`]. The interval passes once the estimated
/// error is below `max(absolute, relative · |I|)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    pub absolute: f64,
    pub relative: f64,
    pub max_depth: u32,
}

impl Default for Tolerance {
    fn default() -> Self {
        Self {
            absolute: 1e-12,
            relative: 1e-12,
            max_depth: 48,
        }
    }
}

impl Tolerance {
    pub fn new(absolute: f64, relative: f64) -> Self {
        Self {
            absolute,
            relative,
            ..Self::default()
        }
    }
}

/// Number of equal panels the interval is split into before refinement, so a
/// narrow feature cannot hide between the first five samples.
const INITIAL_PANELS: usize = 32;

struct Panel {
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    eps: f64,
    depth: u32,
}

fn simpson(a: f64, b: f64, fa: f64, fm: f64, fb: f64) -> f64 {
    (b - a) / 6.0 * (fa + 4.0 * fm + fb)
}

/// `∫_a^b f` by adaptive Simpson with Richardson-corrected panels.
pub fn integrate<F>(f: F, a: f64, b: f64, tol: Tolerance) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    if a == b {
        return Ok(0.0);
    }
    if b < a {
        return integrate(f, b, a, tol).map(|v| -v);
    }

    let width = (b - a) / INITIAL_PANELS as f64;
    let nodes: Vec<f64> = (0..=2 * INITIAL_PANELS)
        .map(|i| {
            if i == 2 * INITIAL_PANELS {
                b
            } else {
                a + 0.5 * width * i as f64
            }
        })
        .collect();
    let values: Vec<f64> = nodes.iter().map(|&x| f(x)).collect();

    let mut panels = Vec::with_capacity(INITIAL_PANELS);
    let mut coarse = 0.0;
    for p in 0..INITIAL_PANELS {
        let (i0, i1, i2) = (2 * p, 2 * p + 1, 2 * p + 2);
        let whole = simpson(nodes[i0], nodes[i2], values[i0], values[i1], values[i2]);
        coarse += whole;
        panels.push((i0, i2, whole));
    }
    let target = tol.absolute.max(tol.relative * coarse.abs());
    let panel_eps = target / INITIAL_PANELS as f64;

    let mut stack: Vec<Panel> = panels
        .into_iter()
        .map(|(i0, i2, whole)| Panel {
            a: nodes[i0],
            b: nodes[i2],
            fa: values[i0],
            fm: values[i0 + 1],
            fb: values[i2],
            whole,
            eps: panel_eps,
            depth: 0,
        })
        .collect();

    let mut total = 0.0;
    let mut compensation = 0.0;
    while let Some(p) = stack.pop() {
        let m = 0.5 * (p.a + p.b);
        let lm = 0.5 * (p.a + m);
        let rm = 0.5 * (m + p.b);
        let flm = f(lm);
        let frm = f(rm);
        let left = simpson(p.a, m, p.fa, flm, p.fm);
        let right = simpson(m, p.b, p.fm, frm, p.fb);
        let delta = left + right - p.whole;
        let roundoff = 64.0 * f64::EPSILON * (left.abs() + right.abs());

        if delta.abs() <= 15.0 * p.eps || delta.abs() <= roundoff {
            let accepted = left + right + delta / 15.0;
            let t = total + accepted;
            compensation += if total.abs() >= accepted.abs() {
                (total - t) + accepted
            } else {
                (accepted - t) + total
            };
            total = t;
            continue;
        }
        if p.depth >= tol.max_depth || !delta.is_finite() {
            return Err(Error::SubdivisionLimit { a: p.a, b: p.b });
        }
        let eps = 0.5 * p.eps;
        stack.push(Panel {
            a: m,
            b: p.b,
            fa: p.fm,
            fm: frm,
            fb: p.fb,
            whole: right,
            eps,
            depth: p.depth + 1,
        });
        stack.push(Panel {
            a: p.a,
            b: m,
            fa: p.fa,
            fm: flm,
            fb: p.fm,
            whole: left,
            eps,
            depth: p.depth + 1,
        });
    }
    Ok(total + compensation)
}

/// `∫_a^∞ f` for an integrand with exponential decay: the upper limit grows in
/// steps of `step` until the last slab contributes less than `tail` relative to
/// the accumulated integral.
pub fn integrate_to_infinity<F>(f: F, a: f64, step: f64, tail: f64, tol: Tolerance) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    let mut total = 0.0;
    let mut lo = a;
    // Beyond a few thousand slabs the integrand is not decaying.
    for _ in 0..4096 {
        let slab = integrate(&f, lo, lo + step, tol)?;
        total += slab;
        lo += step;
        if slab.abs() <= tail * total.abs() && f(lo).abs() * step <= tail * total.abs() {
            return Ok(total);
        }
    }
    Err(Error::SubdivisionLimit { a, b: lo })
}
