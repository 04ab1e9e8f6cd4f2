//! Mathieu machinery for elliptic cylinder coordinates
//! x = c·coshξ·cosη, y = c·sinhξ·sinη:
//!
//! * characteristic values aₙ(q), bₙ(q) for q of either sign (Sturm
//!   bisection on the symmetric tridiagonal Fourier recurrence);
//! * periodic functions ceₙ/seₙ normalized by ∫₀^{2π} ceₙ² dη = π;
//! * monodromy coefficients μₙ(q), νₙ(q) from a numerically constructed
//!   second solution;
//! * modified radial functions Ieₙ/Keₙ/Ioₙ/Koₙ normalized to modified
//!   Bessel asymptotics;
//! * the plane expansions of J₀(kr) (q = ¼c²k² > 0) and K₀(kr)
//!   (q = −¼c²k² < 0).

pub(crate) mod eigen;
mod monodromy;
mod radial;
mod series;
mod system;

pub use monodromy::monodromy_coefficient;
pub use radial::{radial_mathieu, RadialFamily, RadialKind};
pub use series::{j0_mathieu_series, k0_mathieu_series};
pub use system::{mathieu_ce, mathieu_se, MathieuCache, MathieuSystem, Parity};
pub use eigen::mathieu_eigenvalue;

use crate::error::{Error, Result};

/// A point in elliptic coordinates (ξ ≥ 0, η in radians) with its focal
/// half-distance c > 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EllipticPair {
    pub xi: f64,
    pub eta: f64,
    pub c_focal: f64,
}

impl EllipticPair {
    pub fn new(xi: f64, eta: f64, c_focal: f64) -> Result<Self> {
        if !(xi >= 0.0) {
            return Err(Error::Domain(format!("elliptic ξ must be ≥ 0, got {xi}")));
        }
        if !(c_focal > 0.0) {
            return Err(Error::Domain(format!("c_focal must be > 0, got {c_focal}")));
        }
        Ok(EllipticPair { xi, eta, c_focal })
    }
}

/// In-plane distance between the Cartesian images of two elliptic points
/// sharing a focal parameter.
pub fn elliptic_distance(p: EllipticPair, p0: EllipticPair) -> Result<f64> {
    if (p.c_focal - p0.c_focal).abs() > 1e-12 * p.c_focal.max(p0.c_focal) {
        return Err(Error::Domain(format!(
            "points use different focal parameters: {} vs {}",
            p.c_focal, p0.c_focal
        )));
    }
    let c = p.c_focal;
    let dx = p.xi.cosh() * p.eta.cos() - p0.xi.cosh() * p0.eta.cos();
    let dy = p.xi.sinh() * p.eta.sin() - p0.xi.sinh() * p0.eta.sin();
    let r = c * dx.hypot(dy);
    if r == 0.0 {
        return Err(Error::CoincidentPoints);
    }
    Ok(r)
}

/// r̃² in the expanded quadratic form (hyperbolic-plane variables).
pub fn rtilde_sq_expanded(zeta: f64, eta: f64, zeta0: f64, eta0: f64, c: f64) -> f64 {
    let a = zeta.cos() * eta.cos() - zeta0.cos() * eta0.cos();
    let b = zeta.sin() * eta.sin() - zeta0.sin() * eta0.sin();
    c * c * (a * a - b * b)
}

/// r̃² in the factorized form
/// c²(cos(ζ−η) − cos(ζ₀−η₀))(cos(ζ+η) − cos(ζ₀+η₀)).
pub fn rtilde_sq_factored(zeta: f64, eta: f64, zeta0: f64, eta0: f64, c: f64) -> f64 {
    c * c * ((zeta - eta).cos() - (zeta0 - eta0).cos()) * ((zeta + eta).cos() - (zeta0 + eta0).cos())
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;
    use rand::SeedableRng;

    #[test]
    fn distance_matches_cartesian() {
        let p = EllipticPair::new(0.8, 0.3, 1.0).unwrap();
        let p0 = EllipticPair::new(0.1, 1.2, 1.0).unwrap();
        let r = elliptic_distance(p, p0).unwrap();
        let (x, y) = (p.xi.cosh() * p.eta.cos(), p.xi.sinh() * p.eta.sin());
        let (x0, y0) = (p0.xi.cosh() * p0.eta.cos(), p0.xi.sinh() * p0.eta.sin());
        let d = (x - x0).hypot(y - y0);
        assert!((r - d).abs() < 1e-14);
    }

    #[test]
    fn mismatched_focal_rejected() {
        let p = EllipticPair::new(0.8, 0.3, 1.0).unwrap();
        let p0 = EllipticPair::new(0.1, 1.2, 2.0).unwrap();
        assert!(matches!(elliptic_distance(p, p0), Err(Error::Domain(_))));
    }

    #[test]
    fn rtilde_factorization() {
        // Factored and expanded forms agree at 10⁴ random tuples.
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
        for _ in 0..10_000 {
            let z: f64 = rng.gen_range(-3.0..3.0);
            let e: f64 = rng.gen_range(-3.0..3.0);
            let z0: f64 = rng.gen_range(-3.0..3.0);
            let e0: f64 = rng.gen_range(-3.0..3.0);
            let c: f64 = rng.gen_range(0.5..2.0);
            let a = rtilde_sq_expanded(z, e, z0, e0, c);
            let b = rtilde_sq_factored(z, e, z0, e0, c);
            assert!(
                (a - b).abs() <= 1e-12 * a.abs().max(b.abs()).max(1.0),
                "({z},{e},{z0},{e0}): {a} vs {b}"
            );
        }
    }
}
