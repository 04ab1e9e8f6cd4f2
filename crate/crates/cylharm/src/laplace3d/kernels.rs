//! Outer k-integrals against the two kernels of the 3-D assembly.
//!
//! * e^{−k|Δz|} kernels (J₀-based plane expansions): adaptive panels on
//!   [0, K] with K grown until the damped tail bound clears tolerance.
//! * (2/π)·cos k(Δz) kernels (K₀-based expansions): tanh-sinh near the
//!   k = 0 logarithmic endpoint, adaptive panels above, truncation from
//!   the plane factor's own e^{−k·r} decay.

use crate::error::{Error, Result};
use crate::quad;
use std::f64::consts::PI;

pub(crate) struct KIntegral {
    pub value: f64,
    pub tail_estimate: f64,
    pub evals: usize,
    /// k-cutoff actually used.
    pub cutoff: f64,
}

/// ∫₀^∞ plane(k)·e^{−k·dz} dk with |plane| ≤ plane_bound.
pub(crate) fn exp_kernel_integral<F: FnMut(f64) -> Result<f64>>(
    mut plane: F,
    dz: f64,
    rel_tol: f64,
    k_start: f64,
    max_evals: usize,
    plane_bound: f64,
) -> Result<KIntegral> {
    if !(dz > 0.0) {
        return Err(Error::SlowDecay(
            "e^{−k Δz} kernel needs z ≠ z₀; use a K₀-based method at equal z".into(),
        ));
    }
    // Direct value is ~1/distance ≥ 1/(large); keep an absolute floor tied
    // to the known magnitude 1/dz of the axial case.
    let mut cutoff = (k_start / dz).max(8.0 / dz);
    let mut tail = plane_bound * (-cutoff * dz).exp() / dz;
    let scale_hint = 1.0 / dz;
    while tail > 0.05 * rel_tol * scale_hint {
        cutoff *= 1.5;
        tail = plane_bound * (-cutoff * dz).exp() / dz;
        if cutoff > 1e6 {
            return Err(Error::SlowDecay(format!(
                "k-cutoff {cutoff:.1e} without meeting the tail bound (Δz = {dz})"
            )));
        }
    }
    let mut g = |k: f64| -> f64 {
        if k < 0.0 {
            return 0.0;
        }
        match plane(k) {
            Ok(v) => v * (-k * dz).exp(),
            Err(_) => f64::NAN,
        }
    };
    let (value, qerr, evals) = quad::adaptive_gl(&mut g, 0.0, cutoff, rel_tol, scale_hint * 0.5, max_evals)?;
    if !value.is_finite() {
        return Err(Error::NonConvergence("plane expansion failed inside the k-integral".into()));
    }
    Ok(KIntegral {
        value,
        tail_estimate: tail + qerr,
        evals,
        cutoff,
    })
}

/// (2/π)·∫₀^∞ plane(k)·cos(k·dz) dk where plane decays like e^{−k·decay}.
pub(crate) fn cos_kernel_integral<F: FnMut(f64) -> Result<f64>>(
    mut plane: F,
    dz: f64,
    decay: f64,
    rel_tol: f64,
    max_evals: usize,
) -> Result<KIntegral> {
    if !(decay > 0.0) {
        return Err(Error::Domain("cos-kernel integral needs positive plane decay".into()));
    }
    // K₀-type plane factor ≤ √(π/(2k·decay)) e^{−k·decay}.
    let mut cutoff = 8.0_f64.max(45.0 / decay);
    let tail_bound = |kc: f64| (PI / (2.0 * kc * decay)).sqrt() * (-kc * decay).exp() / decay * (2.0 / PI);
    let scale_hint = (1.0 / decay).min(10.0).max(0.05);
    while tail_bound(cutoff) > 0.05 * rel_tol * scale_hint {
        cutoff *= 1.5;
        if cutoff > 1e6 {
            return Err(Error::NonConvergence("cos-kernel cutoff runaway".into()));
        }
    }
    let g = |k: f64| -> f64 {
        match plane(k) {
            Ok(v) => v * (k * dz).cos() * (2.0 / PI),
            Err(_) => f64::NAN,
        }
    };
    let mut g = g;
    // Logarithmic endpoint: tanh-sinh on [0, k1], panels above.
    let k1 = (1.0 / decay).min(0.25 * cutoff).min(if dz > 0.0 { 0.5 / dz } else { f64::INFINITY });
    let (v1, e1, n1) = quad::tanh_sinh(&mut g, 0.0, k1, (rel_tol * 0.5).max(1e-13))?;
    let (v2, e2, n2) = quad::adaptive_gl(&mut g, k1, cutoff, rel_tol, scale_hint, max_evals)?;
    let value = v1 + v2;
    if !value.is_finite() {
        return Err(Error::NonConvergence("plane expansion failed inside the k-integral".into()));
    }
    Ok(KIntegral {
        value,
        tail_estimate: tail_bound(cutoff) + e1 + e2,
        evals: n1 + n2,
        cutoff,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::ref_k0;
    use crate::specfun::bessel_j;

    #[test]
    fn exp_kernel_reproduces_lipschitz() {
        // ∫ J₀(k·R) e^{−k dz} dk = 1/√(R²+dz²).
        let (r, dz) = (0.8, 1.1);
        let out = exp_kernel_integral(|k| Ok(bessel_j(0, k * r)), dz, 1e-9, 40.0, 10_000_000, 1.0).unwrap();
        let want = 1.0 / (r * r + dz * dz).sqrt();
        assert!((out.value - want).abs() < 1e-8, "{} vs {want}", out.value);
    }

    #[test]
    fn exp_kernel_rejects_equal_z() {
        let r = exp_kernel_integral(|_| Ok(1.0), 0.0, 1e-8, 40.0, 100_000, 1.0);
        assert!(matches!(r, Err(Error::SlowDecay(_))));
    }

    #[test]
    fn cos_kernel_reproduces_lipschitz_hankel() {
        // (2/π)∫ K₀(kR) cos(k dz) dk = 1/√(R²+dz²).
        let (r, dz) = (0.9, 1.3);
        let out = cos_kernel_integral(
            |k| {
                if k == 0.0 {
                    return Ok(0.0);
                }
                Ok(ref_k0(k * r).map(|o| o.value).unwrap_or(f64::NAN))
            },
            dz,
            r,
            1e-7,
            10_000_000,
        )
        .unwrap();
        let want = 1.0 / (r * r + dz * dz).sqrt();
        assert!((out.value - want).abs() < 1e-6, "{} vs {want}", out.value);
    }
}
