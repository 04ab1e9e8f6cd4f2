//! Defining-series and defining-integral Bessel references.

use super::dd::Dd;
use super::OracleResult;
use crate::error::{Error, Result};
use crate::quad;

/// J₀ from the ascending series in double-double arithmetic, with a
/// rigorous alternating-series tail bound plus a rounding-loss bound
/// (largest intermediate term × dd epsilon).
pub fn ref_j0(z: f64) -> Result<OracleResult<f64>> {
    ref_j_series(0, z)
}

/// J₁ from the ascending series (see [`ref_j0`]).
pub fn ref_j1(z: f64) -> Result<OracleResult<f64>> {
    ref_j_series(1, z)
}

fn ref_j_series(n: u32, z: f64) -> Result<OracleResult<f64>> {
    let az = z.abs();
    if az > 60.0 {
        return Err(Error::Domain(format!(
            "ref_j{n}: |z| = {az} beyond the validated series radius 60"
        )));
    }
    let sign = if z < 0.0 && n % 2 == 1 { -1.0 } else { 1.0 };
    let zh = Dd::from(az).div_f64(2.0);
    let mut lead = Dd::from(1.0);
    for k in 1..=n {
        lead = lead.mul(zh).div_f64(k as f64);
    }
    let q = zh.mul(zh).neg();
    let mut term = lead;
    let mut sum = term;
    let mut max_term = term.abs().to_f64();
    let mut evals = 1usize;
    let mut tail = f64::INFINITY;
    for m in 1..400u32 {
        term = term.mul(q).div_f64(m as f64 * (n + m) as f64);
        sum = sum.add(term);
        evals += 1;
        let t = term.abs().to_f64();
        max_term = max_term.max(t);
        // Once |z²/4| / (m(n+m)) < 1 the series is strictly alternating
        // with decreasing magnitude, so the tail is bounded by the first
        // omitted term.
        let ratio = 0.25 * az * az / ((m + 1) as f64 * (n + m + 1) as f64);
        if ratio < 1.0 {
            tail = t * ratio / (1.0 - ratio);
            if tail < 1e-25 {
                break;
            }
        }
    }
    let rounding = max_term * 1e-31 * evals as f64;
    Ok(OracleResult {
        value: sign * sum.to_f64(),
        error_bound: tail + rounding,
        rigorous: true,
        evals,
    })
}

/// K₀(z) = ∫₀^∞ e^{−z cosh t} dt by tanh-sinh quadrature on [0, T] with
/// T chosen so the discarded tail is below 1e-18 of the value, then level
/// doubling (heuristic Richardson error estimate).
pub fn ref_k0(z: f64) -> Result<OracleResult<f64>> {
    if z <= 0.0 {
        return Err(Error::Domain(format!("ref_k0 needs z > 0, got {z}")));
    }
    // e^{−z cosh T} ≤ e^{−z} · 1e-18 when cosh T ≥ 1 + 41.5/z.
    let t_max = (1.0 + 41.5 / z).acosh() + 0.5;
    let (value, err, evals) = quad::tanh_sinh(|t: f64| (-z * t.cosh()).exp(), 0.0, t_max, 1e-13)?;
    // Discarded analytic tail: ∫_T^∞ e^{−z cosh t} dt ≤ e^{−z cosh T}/ (z sinh T).
    let tail = (-z * t_max.cosh()).exp() / (z * t_max.sinh());
    Ok(OracleResult {
        value,
        error_bound: err + tail,
        rigorous: false,
        evals,
    })
}
