//! Plane expansions in Mathieu harmonics:
//!
//!   J₀(kr) = (1/π) Σ μₙ(q) ceₙ(iξ)ceₙ(η)ceₙ(iξ₀)ceₙ(η₀)
//!          + (1/π) Σ νₙ(q) seₙ(iξ)seₙ(η)seₙ(iξ₀)seₙ(η₀),    q = ¼c²k²,
//!
//!   K₀(kr) = 2 Σ Ieₙ(ξ_<)ceₙ(η_<)Keₙ(ξ_>)ceₙ(η_>)
//!          + 2 Σ Ioₙ(ξ_<)seₙ(η_<)Koₙ(ξ_>)seₙ(η_>),          q = −¼c²k²,
//!
//! the K₀ form requiring |ξ| < ξ₀ (points ordered internally).

use super::radial::radial_pair;
use super::system::{MathieuCache, Parity};
use super::{elliptic_distance, EllipticPair};
use crate::error::{Error, Result};
use crate::parabolic::SeriesTruncation;
use crate::quad;
use crate::report::{ExpansionReport, Method};
use std::f64::consts::PI;

fn shared_focal(p: EllipticPair, p0: EllipticPair) -> Result<f64> {
    if (p.c_focal - p0.c_focal).abs() > 1e-12 * p.c_focal.max(p0.c_focal) {
        return Err(Error::Domain(format!(
            "focal parameters differ: {} vs {}",
            p.c_focal, p0.c_focal
        )));
    }
    Ok(p.c_focal)
}

fn finish_series(
    value: f64,
    method: Method,
    n_used: usize,
    term_magnitudes: Vec<f64>,
    evals: usize,
    tail: f64,
) -> ExpansionReport {
    let mut report = ExpansionReport::new(value, method);
    report.truncation_used = vec![n_used];
    report.term_magnitudes = term_magnitudes;
    report.evals = evals;
    report.tail_estimate = tail;
    report
}

/// J₀(k·r) by the Mathieu series (coincident points give J₀(0) = 1; the
/// series converges for all real coordinate tuples).
pub fn j0_mathieu_series(
    p: EllipticPair,
    p0: EllipticPair,
    k: f64,
    trunc: &SeriesTruncation,
) -> Result<ExpansionReport> {
    if !(k > 0.0) {
        return Err(Error::Domain(format!("k must be > 0, got {k}")));
    }
    let c = shared_focal(p, p0)?;
    let q = 0.25 * c * c * k * k;
    let cache = MathieuCache::global();

    let mut acc = quad::Accum::new();
    let mut term_magnitudes = Vec::new();
    let mut evals = 0usize;
    let mut below_run = 0usize;
    let mut last_mag = f64::INFINITY;
    for n in 0..=trunc.max_n as u32 {
        let mut term = 0.0;
        {
            let sys = cache.get(q, n, Parity::Even)?;
            let mu = sys.mono_coeff()?;
            term += mu / PI
                * sys.eval_imag_axis(p.xi)?
                * sys.eval_real_with_derivative(p.eta).0
                * sys.eval_imag_axis(p0.xi)?
                * sys.eval_real_with_derivative(p0.eta).0;
            evals += 4;
        }
        if n >= 1 {
            let sys = cache.get(q, n, Parity::Odd)?;
            let nu = sys.mono_coeff()?;
            // seₙ(iξ) = i·s: the two imaginary-axis factors contribute i² = −1.
            term -= nu / PI
                * sys.eval_imag_axis(p.xi)?
                * sys.eval_real_with_derivative(p.eta).0
                * sys.eval_imag_axis(p0.xi)?
                * sys.eval_real_with_derivative(p0.eta).0;
            evals += 4;
        }
        acc.add(term);
        let mag = term.abs();
        term_magnitudes.push(mag);
        let partial = acc.value().abs().max(0.05);
        if n >= 4 && mag < 0.05 * trunc.tail_tol * partial && last_mag < 0.05 * trunc.tail_tol * partial
        {
            below_run += 1;
            if below_run >= 2 {
                let ratio: f64 = 0.5;
                let tail = mag * ratio / (1.0 - ratio);
                return Ok(finish_series(
                    acc.value(),
                    Method::EllipticJ0,
                    n as usize,
                    term_magnitudes,
                    evals,
                    tail,
                ));
            }
        } else {
            below_run = 0;
        }
        last_mag = mag;
    }
    Err(Error::NonConvergence(format!(
        "Mathieu J₀ series: {} terms, last magnitude {last_mag:.3e}",
        trunc.max_n
    )))
}

/// K₀(k·r) by the radial Mathieu series; requires ξ ≠ ξ₀ (strict ordering
/// of the radial arguments).
pub fn k0_mathieu_series(
    p: EllipticPair,
    p0: EllipticPair,
    k: f64,
    trunc: &SeriesTruncation,
) -> Result<ExpansionReport> {
    if !(k > 0.0) {
        return Err(Error::Domain(format!("k must be > 0, got {k}")));
    }
    let c = shared_focal(p, p0)?;
    elliptic_distance(p, p0)?; // rejects coincident points
    if p.xi == p0.xi {
        return Err(Error::Domain(format!(
            "K₀ Mathieu series needs |ξ| < ξ₀ strictly (both are {})",
            p.xi
        )));
    }
    let (inner, outer) = if p.xi < p0.xi { (p, p0) } else { (p0, p) };
    let q = -0.25 * c * c * k * k;
    let h = 0.5 * c * k;
    let cache = MathieuCache::global();

    let mut acc = quad::Accum::new();
    let mut term_magnitudes = Vec::new();
    let mut evals = 0usize;
    let mut below_run = 0usize;
    for n in 0..=trunc.max_n as u32 {
        let mut term = 0.0;
        {
            let sys = cache.get(q, n, Parity::Even)?;
            let (ie, ke) = radial_pair(&sys, h, inner.xi, outer.xi)?;
            term += 2.0
                * ie.0
                * sys.eval_real_with_derivative(inner.eta).0
                * ke.0
                * sys.eval_real_with_derivative(outer.eta).0;
            evals += 4;
        }
        if n >= 1 {
            let sys = cache.get(q, n, Parity::Odd)?;
            let (io, ko) = radial_pair(&sys, h, inner.xi, outer.xi)?;
            term += 2.0
                * io.0
                * sys.eval_real_with_derivative(inner.eta).0
                * ko.0
                * sys.eval_real_with_derivative(outer.eta).0;
            evals += 4;
        }
        acc.add(term);
        let mag = term.abs();
        term_magnitudes.push(mag);
        let partial = acc.value().abs().max(1e-280);
        if n >= 4 && mag < 0.05 * trunc.tail_tol * partial {
            below_run += 1;
            if below_run >= 2 {
                // Geometric envelope from the measured late ratio.
                let ratio = term_magnitudes
                    .windows(2)
                    .rev()
                    .take(3)
                    .map(|w| (w[1] / w[0].max(1e-280)).min(0.9))
                    .fold(0.0f64, f64::max);
                let tail = mag * ratio / (1.0 - ratio);
                return Ok(finish_series(
                    acc.value(),
                    Method::EllipticK0,
                    n as usize,
                    term_magnitudes,
                    evals,
                    tail,
                ));
            }
        } else {
            below_run = 0;
        }
    }
    Err(Error::NonConvergence(format!(
        "Mathieu K₀ series did not settle in {} terms",
        trunc.max_n
    )))
}
