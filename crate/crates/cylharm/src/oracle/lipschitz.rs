//! The two k-integral representations of 1/‖x−x₀‖, evaluated brute-force:
//!
//!   ∫₀^∞ J₀(k·R) e^{−k|Δz|} dk        (needs Δz ≠ 0)
//!   (2/π) ∫₀^∞ K₀(k·R) cos(k·Δz) dk   (needs R ≠ 0)
//!
//! with R the in-plane distance. These validate the k-integration strategy
//! before any eigenfunction series enters.

use super::bessel_ref::{ref_j0, ref_k0};
use super::OracleResult;
use crate::error::{Error, Result};
use crate::laplace3d::CylinderPoint;
use crate::quad;
use std::f64::consts::PI;

pub fn ref_lipschitz(x: &CylinderPoint, x0: &CylinderPoint) -> Result<OracleResult<f64>> {
    if x == x0 {
        return Err(Error::CoincidentPoints);
    }
    let r = x.plane_dist(x0);
    let dz = (x.z - x0.z).abs();
    if dz == 0.0 {
        return Err(Error::Domain("first representation needs z ≠ z₀".into()));
    }
    // Stay inside ref_j0's validated radius while clearing the e^{−k dz} tail.
    let k_decay = 40.0 / dz;
    let k_radius = if r > 0.0 { 60.0 / r } else { f64::INFINITY };
    let cutoff = k_decay.min(k_radius);
    let tail = (-cutoff * dz).exp() / dz;
    let (value, qerr, evals) = quad::adaptive_gl(
        |k: f64| ref_j0(k * r).map(|o| o.value).unwrap_or(f64::NAN) * (-k * dz).exp(),
        0.0,
        cutoff,
        1e-10,
        1e-10,
        20_000_000,
    )?;
    Ok(OracleResult {
        value,
        error_bound: qerr + tail + 1e-13 * value.abs(),
        rigorous: false,
        evals,
    })
}

pub fn ref_lipschitz_hankel(x: &CylinderPoint, x0: &CylinderPoint) -> Result<OracleResult<f64>> {
    if x == x0 {
        return Err(Error::CoincidentPoints);
    }
    let r = x.plane_dist(x0);
    if r == 0.0 {
        return Err(Error::Domain("second representation needs in-plane separation".into()));
    }
    let dz = (x.z - x0.z).abs();
    let cutoff = 45.0 / r;
    let g = |k: f64| -> f64 {
        if k <= 0.0 {
            return 0.0;
        }
        (2.0 / PI) * ref_k0(k * r).map(|o| o.value).unwrap_or(f64::NAN) * (k * dz).cos()
    };
    let k1 = (1.0 / r).min(0.25 * cutoff);
    let (v1, e1, n1) = quad::tanh_sinh(g, 0.0, k1, 1e-11)?;
    let (v2, e2, n2) = quad::adaptive_gl(g, k1, cutoff, 1e-10, 1e-10, 20_000_000)?;
    let tail = (2.0 / PI) * (PI / (2.0 * cutoff * r)).sqrt() * (-cutoff * r).exp() / r;
    Ok(OracleResult {
        value: v1 + v2,
        error_bound: e1 + e2 + tail,
        rigorous: false,
        evals: n1 + n2,
    })
}
