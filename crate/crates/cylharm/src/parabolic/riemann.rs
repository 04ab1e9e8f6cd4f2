//! Riemann-method identities of the plane hyperbolic problem: the
//! transmutation of the even solution into the odd one,
//!
//!   ∫_{−ζ}^{ζ} J₀(¼(ξ²−ζ²)) u₁(λ,ξ) dξ = 2 u₂(λ,ζ),
//!
//! and the spectral-density ratio integral
//!
//!   ∫₀^∞ J₀(¼ζ²) u₂(λ,ζ) dζ = ρ′₁(λ)/ρ′₂(λ).

use super::osc::{j_kernel_u_integral, JKernel, UFunc};
use super::pcf::{pcf_real, PcfKind};
use super::spectral::spectral_weight;
use crate::error::{Error, Result};
use crate::quad;
use crate::specfun::bessel_j;
use crate::Complex;

/// Both sides of the transmutation identity at (λ, ζ), ζ > 0.
pub fn riemann_transmutation_check(lambda: f64, zeta: f64) -> Result<(f64, f64)> {
    if !(zeta > 0.0) {
        return Err(Error::Domain(format!("ζ must be > 0, got {zeta}")));
    }
    // Integrand is even in ξ.
    let (half, _, _) = quad::adaptive_gl(
        |xi: f64| {
            let arg = 0.25 * (xi * xi - zeta * zeta);
            let u = pcf_real(PcfKind::UEven, lambda, xi).map(|v| v.0).unwrap_or(f64::NAN);
            bessel_j(0, arg.abs()) * u
        },
        0.0,
        zeta,
        1e-11,
        1e-12,
        8_000_000,
    )?;
    let lhs = 2.0 * half;
    let (rhs, _) = pcf_real(PcfKind::UOdd, lambda, zeta)?;
    Ok((lhs, 2.0 * rhs))
}

/// (integral, ρ′₁/ρ′₂) of the ratio identity at real λ.
pub fn rho_ratio_check(lambda: f64) -> Result<(f64, f64)> {
    let integral = j_kernel_u_integral(JKernel::J0Quarter, UFunc::U2, Complex::new(lambda, 0.0))?;
    let w = spectral_weight(lambda)?;
    Ok((integral.re, w.rho1p / w.rho2p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::gamma;

    #[test]
    fn transmutation_small_zeta_vanishes() {
        let (lhs, rhs) = riemann_transmutation_check(0.7, 1e-6).unwrap();
        assert!(lhs.abs() < 1e-5);
        assert!(rhs.abs() < 1e-5);
        assert!((lhs - rhs).abs() < 1e-8);
    }

    #[test]
    fn transmutation_identity() {
        for &(lam, zeta) in &[(0.0, 1.0), (2.0, 2.5), (-1.3, 1.8)] {
            let (lhs, rhs) = riemann_transmutation_check(lam, zeta).unwrap();
            assert!(
                (lhs - rhs).abs() <= 1e-8 * rhs.abs().max(1.0),
                "λ={lam} ζ={zeta}: {lhs} vs {rhs}"
            );
        }
    }

    #[test]
    fn rho_ratio_closed_form_at_zero() {
        // ρ′₁(0)/ρ′₂(0) = |Γ(¼)|²/(2|Γ(¾)|²).
        let (_, ratio) = rho_ratio_check(0.0).unwrap();
        let g14 = gamma(Complex::new(0.25, 0.0)).unwrap().norm_sqr();
        let g34 = gamma(Complex::new(0.75, 0.0)).unwrap().norm_sqr();
        assert!((ratio - g14 / (2.0 * g34)).abs() < 1e-12 * ratio);
    }

    #[test]
    fn rho_ratio_integral_matches() {
        for &lam in &[0.0, 1.0, -1.0] {
            let (integral, ratio) = rho_ratio_check(lam).unwrap();
            assert!(
                (integral - ratio).abs() <= 1e-5 * ratio.abs().max(1.0),
                "λ={lam}: {integral} vs {ratio}"
            );
        }
    }
}
