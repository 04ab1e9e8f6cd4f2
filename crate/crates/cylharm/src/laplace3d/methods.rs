//! The four 3-D expansion methods, each assembling 1/‖x−x₀‖ from a plane
//! expansion and a k-kernel.

use super::kernels::{cos_kernel_integral, exp_kernel_integral};
use super::{CylinderPoint, QuadratureSpec};
use crate::elliptic::{j0_mathieu_series, k0_mathieu_series};
use crate::error::{Error, Result};
use crate::parabolic::{
    cross_distance_r, j0_spectral_integral, k0_hermite_series, SeriesTruncation,
};
use crate::report::{ExpansionReport, Method};

fn check_distinct(x: &CylinderPoint, x0: &CylinderPoint) -> Result<()> {
    if x == x0 {
        return Err(Error::CoincidentPoints);
    }
    Ok(())
}

/// Inner-expansion tolerance for a k-node: a tenth of the outer budget,
/// relaxed by the kernel damping already applied at that node.
fn inner_tol(rel_tol: f64, damping_exponent: f64) -> f64 {
    (0.1 * rel_tol * damping_exponent.min(30.0).exp()).min(0.49)
}

/// K₀-kernel route in parabolic cylinder coordinates (valid for η ≠ η₀).
pub fn expand_parabolic_k0(
    x: &CylinderPoint,
    x0: &CylinderPoint,
    quad: &QuadratureSpec,
    trunc: &SeriesTruncation,
) -> Result<ExpansionReport> {
    check_distinct(x, x0)?;
    let (p, z) = x.to_parabolic();
    let (p0, z0) = x0.to_parabolic();
    if p.eta == p0.eta {
        return Err(Error::Domain(format!(
            "parabolic K₀ expansion needs η ≠ η₀ (both are {})",
            p.eta
        )));
    }
    let r = cross_distance_r(p, p0)?;
    let dz = (z - z0).abs();
    let mut max_n = 0usize;
    let mut total_evals = 0usize;
    let inner = SeriesTruncation {
        max_n: trunc.max_n,
        tail_tol: (0.1 * quad.rel_tol).min(trunc.tail_tol),
    };
    let out = {
        let plane = |k: f64| -> Result<f64> {
            if k <= 0.0 {
                return Ok(0.0);
            }
            let rep = k0_hermite_series(p, p0, k, &inner)?;
            max_n = max_n.max(rep.truncation_used[0]);
            total_evals += rep.evals;
            Ok(rep.value)
        };
        cos_kernel_integral(plane, dz, r, quad.rel_tol, quad.max_evals)?
    };
    let mut report = ExpansionReport::new(out.value, Method::ParabolicK0);
    report.truncation_used = vec![max_n, out.cutoff as usize];
    report.tail_estimate = out.tail_estimate;
    report.evals = out.evals + total_evals;
    Ok(report)
}

/// J₀-kernel route in parabolic cylinder coordinates (needs z ≠ z₀).
pub fn expand_parabolic_j0(
    x: &CylinderPoint,
    x0: &CylinderPoint,
    quad: &QuadratureSpec,
) -> Result<ExpansionReport> {
    check_distinct(x, x0)?;
    let (p, z) = x.to_parabolic();
    let (p0, z0) = x0.to_parabolic();
    let dz = (z - z0).abs();
    if dz == 0.0 {
        return Err(Error::SlowDecay(
            "parabolic J₀ route loses exponential k-damping at z = z₀".into(),
        ));
    }
    let mut lambda_cutoff = 0usize;
    let mut total_evals = 0usize;
    let out = {
        let plane = |k: f64| -> Result<f64> {
            if k <= 0.0 {
                return Ok(1.0); // J₀(0)
            }
            let mut node_spec = *quad;
            node_spec.rel_tol = inner_tol(quad.rel_tol, k * dz);
            let rep = j0_spectral_integral(p, p0, k, &node_spec)?;
            lambda_cutoff = lambda_cutoff.max(rep.truncation_used[0]);
            total_evals += rep.evals;
            Ok(rep.value)
        };
        exp_kernel_integral(plane, dz, quad.rel_tol, quad.k_max, quad.max_evals, 1.0)?
    };
    let mut report = ExpansionReport::new(out.value, Method::ParabolicJ0);
    report.truncation_used = vec![lambda_cutoff, out.cutoff as usize];
    report.tail_estimate = out.tail_estimate;
    report.evals = out.evals + total_evals;
    Ok(report)
}

/// J₀-kernel route in elliptic cylinder coordinates (needs z ≠ z₀ and a
/// focal parameter).
pub fn expand_elliptic_j0(
    x: &CylinderPoint,
    x0: &CylinderPoint,
    c_focal: f64,
    quad: &QuadratureSpec,
    trunc: &SeriesTruncation,
) -> Result<ExpansionReport> {
    check_distinct(x, x0)?;
    let (p, z) = x.to_elliptic(c_focal)?;
    let (p0, z0) = x0.to_elliptic(c_focal)?;
    let dz = (z - z0).abs();
    if dz == 0.0 {
        return Err(Error::SlowDecay(
            "elliptic J₀ route loses exponential k-damping at z = z₀".into(),
        ));
    }
    let mut max_n = 0usize;
    let mut total_evals = 0usize;
    let out = {
        let plane = |k: f64| -> Result<f64> {
            if k <= 1e-4 {
                // q → 0 sliver: J₀(kr) = 1 + O((kr)²); bounded by continuity.
                return Ok(1.0);
            }
            let mut node_trunc = *trunc;
            node_trunc.tail_tol = inner_tol(quad.rel_tol, k * dz).min(trunc.tail_tol * 10.0);
            let rep = j0_mathieu_series(p, p0, k, &node_trunc)?;
            max_n = max_n.max(rep.truncation_used[0]);
            total_evals += rep.evals;
            Ok(rep.value)
        };
        exp_kernel_integral(plane, dz, quad.rel_tol, quad.k_max, quad.max_evals, 1.0)?
    };
    let mut report = ExpansionReport::new(out.value, Method::EllipticJ0);
    report.truncation_used = vec![max_n, out.cutoff as usize];
    report.tail_estimate = out.tail_estimate + 1e-4 * 0.5; // [0, k_min] sliver bound
    report.evals = out.evals + total_evals;
    Ok(report)
}

/// K₀-kernel route in elliptic cylinder coordinates (needs ξ ≠ ξ₀).
pub fn expand_elliptic_k0(
    x: &CylinderPoint,
    x0: &CylinderPoint,
    c_focal: f64,
    quad: &QuadratureSpec,
    trunc: &SeriesTruncation,
) -> Result<ExpansionReport> {
    check_distinct(x, x0)?;
    let (p, z) = x.to_elliptic(c_focal)?;
    let (p0, z0) = x0.to_elliptic(c_focal)?;
    if p.xi == p0.xi {
        return Err(Error::Domain(format!(
            "elliptic K₀ expansion needs ξ ≠ ξ₀ (both are {})",
            p.xi
        )));
    }
    let dz = (z - z0).abs();
    let r = x.plane_dist(x0);
    if r == 0.0 {
        return Err(Error::Domain("elliptic K₀ expansion needs in-plane separation".into()));
    }
    let mut max_n = 0usize;
    let mut total_evals = 0usize;
    let inner = SeriesTruncation {
        max_n: trunc.max_n,
        tail_tol: (0.1 * quad.rel_tol).min(trunc.tail_tol),
    };
    let out = {
        let plane = |k: f64| -> Result<f64> {
            if k <= 1e-4 {
                // K₀(kr) ~ −ln(kr/2) − γ: integrable; the sliver below the
                // smallest node is folded into the tail estimate.
                let kk = k.max(1e-12);
                return Ok(-((0.5 * kk * r).ln()) - 0.5772156649015329);
            }
            let rep = k0_mathieu_series(p, p0, k, &inner)?;
            max_n = max_n.max(rep.truncation_used[0]);
            total_evals += rep.evals;
            Ok(rep.value)
        };
        cos_kernel_integral(plane, dz, r, quad.rel_tol, quad.max_evals)?
    };
    let mut report = ExpansionReport::new(out.value, Method::EllipticK0);
    report.truncation_used = vec![max_n, out.cutoff as usize];
    report.tail_estimate = out.tail_estimate;
    report.evals = out.evals + total_evals;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laplace3d::direct;

    fn spec() -> QuadratureSpec {
        QuadratureSpec {
            rel_tol: 1e-5,
            ..QuadratureSpec::default()
        }
    }

    #[test]
    fn parabolic_k0_same_z() {
        let a = CylinderPoint::cartesian(0.3, 0.4, 0.0);
        let b = CylinderPoint::cartesian(-0.6, 1.0, 0.0);
        let rep = expand_parabolic_k0(&a, &b, &spec(), &SeriesTruncation::default()).unwrap();
        let want = direct(&a, &b).unwrap();
        assert!(
            (rep.value - want).abs() < 1e-5 * want,
            "{} vs {want}",
            rep.value
        );
    }

    #[test]
    fn parabolic_k0_equal_eta_rejected() {
        // Same η after conversion: mirror-symmetric pair about the x-axis.
        let a = CylinderPoint::cartesian(0.5, 0.4, 0.0);
        let b = CylinderPoint::cartesian(0.5, -0.4, 1.0);
        assert!(matches!(
            expand_parabolic_k0(&a, &b, &spec(), &SeriesTruncation::default()),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn parabolic_j0_axial_pair() {
        // ξ = ξ₀ = η = η₀ = 0, Δz = 1 → ∫e^{−k}dk = 1.
        let a = CylinderPoint::cartesian(0.0, 0.0, 0.0);
        let b = CylinderPoint::cartesian(0.0, 0.0, 1.0);
        let rep = expand_parabolic_j0(&a, &b, &spec()).unwrap();
        assert!((rep.value - 1.0).abs() < 1e-4, "{}", rep.value);
    }

    #[test]
    fn parabolic_j0_rejects_equal_z() {
        let a = CylinderPoint::cartesian(0.3, 0.4, 1.0);
        let b = CylinderPoint::cartesian(-0.6, 1.0, 1.0);
        assert!(matches!(
            expand_parabolic_j0(&a, &b, &spec()),
            Err(Error::SlowDecay(_))
        ));
    }

    #[test]
    fn elliptic_j0_generic() {
        let a = CylinderPoint::cartesian(0.9, 0.35, 0.2);
        let b = CylinderPoint::cartesian(0.2, 1.0, 1.4);
        let rep = expand_elliptic_j0(&a, &b, 1.0, &spec(), &SeriesTruncation::default()).unwrap();
        let want = direct(&a, &b).unwrap();
        assert!(
            (rep.value - want).abs() < 1e-4 * want,
            "{} vs {want}",
            rep.value
        );
    }

    #[test]
    fn elliptic_k0_generic() {
        let a = CylinderPoint::cartesian(1.1, 0.2, 0.0);
        let b = CylinderPoint::cartesian(2.4, 1.5, 0.0);
        let rep = expand_elliptic_k0(&a, &b, 1.0, &spec(), &SeriesTruncation::default()).unwrap();
        let want = direct(&a, &b).unwrap();
        assert!(
            (rep.value - want).abs() < 1e-5 * want,
            "{} vs {want}",
            rep.value
        );
    }
}
