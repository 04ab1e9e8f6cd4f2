//! 3-D assembly: coordinate transforms between Cartesian, parabolic-
//! cylinder and elliptic-cylinder coordinates, the direct reciprocal
//! distance, and the four expansion methods built from the plane
//! expansions and the k-kernels
//!
//!   1/‖x−x₀‖ = ∫₀^∞ J₀(k·r) e^{−k|z−z₀|} dk
//!            = (2/π) ∫₀^∞ K₀(k·r) cos k(z−z₀) dk,
//!
//! with r the in-plane distance.

mod kernels;
mod methods;

pub use methods::{
    expand_elliptic_j0, expand_elliptic_k0, expand_parabolic_j0, expand_parabolic_k0,
};

use crate::elliptic::EllipticPair;
use crate::error::{Error, Result};
use crate::parabolic::ParabolicPair;
use crate::Complex;

/// Outer-integral quadrature controls.
#[derive(Debug, Clone, Copy)]
pub struct QuadratureSpec {
    pub scheme: Scheme,
    /// Target relative error of the assembled value.
    pub rel_tol: f64,
    /// Starting truncation of the outer k-integral; grown adaptively. The
    /// effective cutoff for e^{−k|z−z₀|} kernels scales like k_max/|z−z₀|.
    pub k_max: f64,
    /// Budget of elementary integrand evaluations.
    pub max_evals: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scheme {
    AdaptivePanel,
    TanhSinh,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        QuadratureSpec {
            scheme: Scheme::AdaptivePanel,
            rel_tol: 1e-7,
            k_max: 40.0,
            max_evals: 50_000_000,
        }
    }
}

/// A point of ℝ³, stored in Cartesian form with exact constructors from
/// either cylinder system. Conversions round-trip to 1e-12 (scaled).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CylinderPoint {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl CylinderPoint {
    pub fn cartesian(x: f64, y: f64, z: f64) -> Self {
        CylinderPoint { x, y, z }
    }

    /// From parabolic-cylinder coordinates: x = ½(ξ²−η²), y = ξη.
    pub fn from_parabolic(p: ParabolicPair, z: f64) -> Self {
        CylinderPoint {
            x: 0.5 * (p.xi * p.xi - p.eta * p.eta),
            y: p.xi * p.eta,
            z,
        }
    }

    /// From elliptic-cylinder coordinates: x = c·coshξ·cosη, y = c·sinhξ·sinη.
    pub fn from_elliptic(p: EllipticPair, z: f64) -> Self {
        CylinderPoint {
            x: p.c_focal * p.xi.cosh() * p.eta.cos(),
            y: p.c_focal * p.xi.sinh() * p.eta.sin(),
            z,
        }
    }

    /// Parabolic coordinates of the plane part, branch fixed by η ≥ 0 and
    /// sign(ξ) chosen so ξη = y.
    pub fn to_parabolic(&self) -> (ParabolicPair, f64) {
        let rho = self.x.hypot(self.y);
        // ξ² = ρ + x, η² = ρ − x; the smaller one is rebuilt from y to
        // avoid cancellation.
        let (xi_abs, eta) = if self.x >= 0.0 {
            let xi = (rho + self.x).sqrt();
            let eta = if xi > 0.0 { self.y.abs() / xi } else { 0.0 };
            (xi, eta)
        } else {
            let eta = (rho - self.x).sqrt();
            let xi = if eta > 0.0 { self.y.abs() / eta } else { 0.0 };
            (xi, eta)
        };
        let xi = if self.y >= 0.0 { xi_abs } else { -xi_abs };
        (ParabolicPair { xi, eta }, self.z)
    }

    /// Elliptic coordinates for focal half-distance c: ξ ≥ 0, η ∈ [0, 2π).
    pub fn to_elliptic(&self, c_focal: f64) -> Result<(EllipticPair, f64)> {
        if !(c_focal > 0.0) {
            return Err(Error::Domain(format!("c_focal must be > 0, got {c_focal}")));
        }
        // cosh(ξ + iη) = (x + iy)/c.
        let w = Complex::new(self.x / c_focal, self.y / c_focal);
        let zeta = w.acosh();
        let xi = zeta.re.max(0.0);
        let mut eta = zeta.im;
        if eta < 0.0 {
            eta += 2.0 * std::f64::consts::PI;
        }
        Ok((
            EllipticPair {
                xi,
                eta,
                c_focal,
            },
            self.z,
        ))
    }

    pub fn dist(&self, other: &CylinderPoint) -> f64 {
        let dx = self.x - other.x;
        let dy = self.y - other.y;
        let dz = self.z - other.z;
        (dx * dx + dy * dy + dz * dz).sqrt()
    }

    /// In-plane distance (z ignored).
    pub fn plane_dist(&self, other: &CylinderPoint) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }
}

/// 1/‖x−x₀‖.
pub fn direct(x: &CylinderPoint, x0: &CylinderPoint) -> Result<f64> {
    let d = x.dist(x0);
    if d == 0.0 {
        return Err(Error::CoincidentPoints);
    }
    Ok(1.0 / d)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn direct_values() {
        let o = CylinderPoint::cartesian(0.0, 0.0, 0.0);
        assert_eq!(direct(&o, &CylinderPoint::cartesian(1.0, 0.0, 0.0)).unwrap(), 1.0);
        let v = direct(&o, &CylinderPoint::cartesian(1.0, 1.0, 1.0)).unwrap();
        assert!((v - 1.0 / 3.0f64.sqrt()).abs() < 1e-15);
        assert!(matches!(direct(&o, &o), Err(Error::CoincidentPoints)));
    }

    #[test]
    fn parabolic_example() {
        // Cartesian (1/2, 0) → parabolic (1, 0).
        let p = CylinderPoint::cartesian(0.5, 0.0, 0.0);
        let (pp, _) = p.to_parabolic();
        assert!((pp.xi - 1.0).abs() < 1e-15);
        assert_eq!(pp.eta, 0.0);
    }

    #[test]
    fn elliptic_focus() {
        // Cartesian (c, 0) with c = 1 → elliptic (0, 0).
        let p = CylinderPoint::cartesian(1.0, 0.0, 0.0);
        let (ep, _) = p.to_elliptic(1.0).unwrap();
        assert!(ep.xi.abs() < 1e-7, "{}", ep.xi);
        assert!(ep.eta.abs() < 1e-7 || (ep.eta - 2.0 * std::f64::consts::PI).abs() < 1e-7);
    }

    #[test]
    fn roundtrips() {
        let pts = [
            (0.3, -1.7, 2.0),
            (-2.0, 0.4, -1.0),
            (1e-3, 1e-4, 0.0),
            (5.0, 3.0, 7.0),
            (-0.5, -0.8, 1.2),
        ];
        for &(x, y, z) in &pts {
            let p = CylinderPoint::cartesian(x, y, z);
            let (pp, pz) = p.to_parabolic();
            let back = CylinderPoint::from_parabolic(pp, pz);
            let scale = 1.0 + x.abs() + y.abs();
            assert!(p.dist(&back) < 1e-12 * scale, "parabolic roundtrip {:?}", p);
            assert!(pp.eta >= 0.0);

            for &c in &[0.7, 2.0] {
                let (ep, ez) = p.to_elliptic(c).unwrap();
                let back = CylinderPoint::from_elliptic(ep, ez);
                assert!(p.dist(&back) < 1e-12 * scale, "elliptic roundtrip {:?} c={c}", p);
                assert!(ep.xi >= 0.0);
                assert!((0.0..2.0 * std::f64::consts::PI + 1e-12).contains(&ep.eta));
            }
        }
    }
}
