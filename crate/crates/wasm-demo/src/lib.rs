//! Browser bindings: energy versus α, the expansion wavefunction, and a
//! three-way comparison against direct integration.
//!
//! Arrays cross the boundary flattened, row after row.

use pslet_core::pslet::DEFAULT_ENERGY_ORDER;
use pslet_core::{dni_eigenvalue, pade_energy, wavefunction_eval, Error, OracleConfig, PsletSolution};
use wasm_bindgen::prelude::*;

/// Padé order used by [`comparison`].
pub const COMPARISON_PADE: (usize, usize) = (3, 3);

/// Rows `[α, K-term partial sum, [n, m] Padé]` for `samples` evenly spaced
/// α in `[0, alpha_max]`. A Padé value that fails is reported as NaN.
pub fn energy_curve_points(
    l: u32,
    alpha_max: f64,
    samples: usize,
    terms: usize,
    n: usize,
    m: usize,
) -> Result<Vec<f64>, Error> {
    if !(alpha_max.is_finite() && alpha_max > 0.0) {
        return Err(Error::Domain(format!("alpha_max must be positive, got {alpha_max}")));
    }
    if samples < 2 {
        return Err(Error::Domain(format!("need at least two samples, got {samples}")));
    }
    if terms == 0 {
        return Err(Error::Domain("need at least one series term".into()));
    }
    let mut out = Vec::with_capacity(3 * samples);
    for i in 0..samples {
        let alpha = alpha_max * i as f64 / (samples - 1) as f64;
        let sol = PsletSolution::compute(alpha, l)?;
        let partial = sol.partial_sum(terms)?;
        let pade = pade_energy(&sol.context, &sol.series, n, m).unwrap_or(f64::NAN);
        out.extend([alpha, partial, pade]);
    }
    Ok(out)
}

/// Rows `[q, ψ(q)]` of the expansion wavefunction truncated after Riccati
/// order `order`, scaled to a peak of one.
pub fn wavefunction_samples(alpha: f64, l: u32, order: usize, samples: usize) -> Result<Vec<f64>, Error> {
    if samples < 2 {
        return Err(Error::Domain(format!("need at least two samples, got {samples}")));
    }
    let sol = PsletSolution::compute(alpha, l)?;
    let ctx = &sol.context;
    let width = ctx.q0 / (ctx.lbar * ctx.omega).sqrt();
    let lo = (ctx.q0 - 6.0 * width).max(0.0);
    let hi = ctx.q0 + 6.0 * width;
    let mut out = Vec::with_capacity(2 * samples);
    for i in 0..samples {
        let q = lo + (hi - lo) * i as f64 / (samples - 1) as f64;
        out.extend([q, wavefunction_eval(ctx, &sol.tables, ctx.to_x(q), order)?]);
    }
    let peak = out.iter().skip(1).step_by(2).cloned().fold(0.0, f64::max);
    for psi in out.iter_mut().skip(1).step_by(2) {
        *psi /= peak;
    }
    Ok(out)
}

/// `[full partial sum, [3,3] Padé, Numerov]` at one point.
pub fn comparison(alpha: f64, l: u32) -> Result<Vec<f64>, Error> {
    let sol = PsletSolution::compute(alpha, l)?;
    let (n, m) = COMPARISON_PADE;
    Ok(vec![
        sol.partial_sum(DEFAULT_ENERGY_ORDER + 2)?,
        pade_energy(&sol.context, &sol.series, n, m)?,
        dni_eigenvalue(&OracleConfig::new(alpha, l))?.energy,
    ])
}

#[wasm_bindgen]
pub fn energy_curve(l: u32, alpha_max: f64, samples: usize, terms: usize, n: usize, m: usize) -> Result<Vec<f64>, JsError> {
    Ok(energy_curve_points(l, alpha_max, samples, terms, n, m)?)
}

#[wasm_bindgen]
pub fn wavefunction(alpha: f64, l: u32, order: usize, samples: usize) -> Result<Vec<f64>, JsError> {
    Ok(wavefunction_samples(alpha, l, order, samples)?)
}

#[wasm_bindgen]
pub fn compare(alpha: f64, l: u32) -> Result<Vec<f64>, JsError> {
    Ok(comparison(alpha, l)?)
}
