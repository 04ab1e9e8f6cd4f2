//! Plane-level parabolic-coordinate machinery.
//!
//! Coordinates: x = ½(ξ²−η²), y = ξη. The cross distance between two
//! coordinate pairs factorizes as
//!
//!   r² = ¼ [(ξ+ξ₀)² + (η+η₀)²] [(ξ−ξ₀)² + (η−η₀)²],
//!
//! and equals the Euclidean distance between the Cartesian images.
//!
//! Submodules: [`pcf`]-backed solution evaluators u₁/u₂/u₃ of
//! −u″ − ¼x²u = λu, the Hermite-function series for K₀(kr), the
//! continuous-spectrum J₀(kr) integral with its spectral densities, and
//! the Riemann-method identity checks.

mod hermite_series;
mod osc;
mod pcf;
mod riemann;
mod spectral;

pub use hermite_series::k0_hermite_series;
pub use pcf::{u1, u2, u3};
pub use riemann::{rho_ratio_check, riemann_transmutation_check};
pub use spectral::{j0_spectral_integral, spectral_weight, SpectralWeight};
pub(crate) use osc::{j_kernel_u_integral, JKernel, UFunc};

use crate::error::{Error, Result};

/// A point in parabolic plane coordinates. Canonical coordinates of a
/// Cartesian point have η ≥ 0; the series and integral operations accept
/// any real pair (the underlying identities hold on all of ℝ²).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParabolicPair {
    pub xi: f64,
    pub eta: f64,
}

impl ParabolicPair {
    pub fn new(xi: f64, eta: f64) -> Self {
        ParabolicPair { xi, eta }
    }
}

/// Series truncation policy for the Hermite and Mathieu series.
#[derive(Debug, Clone, Copy)]
pub struct SeriesTruncation {
    pub max_n: usize,
    pub tail_tol: f64,
}

impl Default for SeriesTruncation {
    fn default() -> Self {
        SeriesTruncation {
            max_n: 80,
            tail_tol: 1e-10,
        }
    }
}

/// Cross distance r(ξ,η,ξ₀,η₀) > 0.
pub fn cross_distance_r(p: ParabolicPair, p0: ParabolicPair) -> Result<f64> {
    let sp = (p.xi + p0.xi).powi(2) + (p.eta + p0.eta).powi(2);
    let sm = (p.xi - p0.xi).powi(2) + (p.eta - p0.eta).powi(2);
    let r2 = 0.25 * sp * sm;
    if r2 == 0.0 {
        return Err(Error::CoincidentPoints);
    }
    Ok(r2.sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coincident_rejected() {
        let p = ParabolicPair::new(1.0, 1.0);
        assert!(matches!(cross_distance_r(p, p), Err(Error::CoincidentPoints)));
        // Antipodal pair is the other zero of the factorization.
        let q = ParabolicPair::new(-1.0, -1.0);
        assert!(matches!(cross_distance_r(p, q), Err(Error::CoincidentPoints)));
    }

    #[test]
    fn source_at_origin() {
        let p = ParabolicPair::new(0.7, 1.3);
        let r = cross_distance_r(p, ParabolicPair::new(0.0, 0.0)).unwrap();
        assert!((r - 0.5 * (0.7f64.powi(2) + 1.3f64.powi(2))).abs() < 1e-15);
    }

    #[test]
    fn matches_cartesian_distance() {
        let pairs = [
            ((0.3, 1.5), (0.2, 0.4)),
            ((1.0, 0.0), (0.0, 2.0)),
            ((-0.8, 0.9), (0.5, 1.7)),
        ];
        for &((xi, eta), (xi0, eta0)) in &pairs {
            let p = ParabolicPair::new(xi, eta);
            let p0 = ParabolicPair::new(xi0, eta0);
            let r = cross_distance_r(p, p0).unwrap();
            let (x, y) = (0.5 * (xi * xi - eta * eta), xi * eta);
            let (x0, y0) = (0.5 * (xi0 * xi0 - eta0 * eta0), xi0 * eta0);
            let d = ((x - x0).powi(2) + (y - y0).powi(2)).sqrt();
            assert!((r - d).abs() < 1e-13 * d.max(1.0), "{r} vs {d}");
        }
    }

    #[test]
    fn symmetric_in_pair_and_sign_flip() {
        let p = ParabolicPair::new(0.3, 1.5);
        let p0 = ParabolicPair::new(0.2, 0.4);
        let a = cross_distance_r(p, p0).unwrap();
        let b = cross_distance_r(p0, p).unwrap();
        assert_eq!(a, b);
        let pf = ParabolicPair::new(-0.3, -1.5);
        let p0f = ParabolicPair::new(-0.2, -0.4);
        assert_eq!(cross_distance_r(pf, p0f).unwrap(), a);
    }
}
