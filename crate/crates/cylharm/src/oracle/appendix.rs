//! Closed-form verification suite for the oscillatory integrals feeding
//! the parabolic spectral expansion. With G₁ = Γ(¼+iλ/2), G₂ = Γ(¾+iλ/2):
//!
//!   ∫₀^∞ J₀(¼ξ²) u₃ dξ        = ½√π (1−i) G₁/G₂²
//!   ∫₀^∞ ξ⁻¹J₁(¼ξ²) u₃ dξ     = −√π (λ/G₂ + 2i G₂/G₁²)
//!   ∫₀^∞ J₀(¼ξ²) u₁ dξ        = [Re(G₁Ḡ₂)+Im(G₁Ḡ₂)]/|G₂|²
//!   ∫₀^∞ J₀(¼ξ²) u₂ dξ        = ½|G₁/G₂|²
//!   ∫₀^∞ ξ⁻¹J₁(¼ξ²) u₁ dξ     = 2|G₂/G₁|² − λ
//!   ∫₀^∞ ξ⁻¹J₁(¼ξ²) u₂ dξ     = 2[Re(G₁Ḡ₂)+Im(G₁Ḡ₂)]/|G₁|²
//!
//! the u₃ pair valid for Im λ < 0 and by continuity on the real line,
//! the u₁/u₂ four for real λ; plus the scalar identity
//! Re(G₁Ḡ₂)+Im(G₁Ḡ₂) = π√2·e^{−πλ/2}/cosh(πλ).

use crate::error::Result;
use crate::parabolic::{j_kernel_u_integral, JKernel, UFunc};
use crate::specfun::gamma;
use crate::Complex;
use std::f64::consts::PI;

/// One verified identity: both routes and their deviation.
#[derive(Debug, Clone)]
pub struct IdentityCheck {
    /// Stable machine-readable name of the check.
    pub id: &'static str,
    pub lhs: Complex,
    pub rhs: Complex,
    pub deviation: f64,
}

impl IdentityCheck {
    fn new(id: &'static str, lhs: Complex, rhs: Complex) -> Self {
        let deviation = (lhs - rhs).norm() / rhs.norm().max(1.0);
        IdentityCheck { id, lhs, rhs, deviation }
    }
}

/// The six identity checks at one spectral parameter.
#[derive(Debug, Clone)]
pub struct AppendixReport {
    pub lambda: Complex,
    pub checks: Vec<IdentityCheck>,
}

impl AppendixReport {
    pub fn max_deviation(&self) -> f64 {
        self.checks.iter().map(|c| c.deviation).fold(0.0, f64::max)
    }
}

fn g1g2(lambda: Complex) -> Result<(Complex, Complex)> {
    let i = Complex::new(0.0, 1.0);
    Ok((
        gamma(Complex::new(0.25, 0.0) + i * lambda * 0.5)?,
        gamma(Complex::new(0.75, 0.0) + i * lambda * 0.5)?,
    ))
}

/// The two recessive-side integrals, valid on Im λ ≤ 0.
pub fn verify_halfplane(lambda: Complex) -> Result<Vec<IdentityCheck>> {
    let (g1, g2) = g1g2(lambda)?;
    let sqrt_pi = PI.sqrt();
    let i = Complex::new(0.0, 1.0);
    let i1 = j_kernel_u_integral(JKernel::J0Quarter, UFunc::U3, lambda)?;
    let i1_rhs = 0.5 * sqrt_pi * (1.0 - i) * g1 / (g2 * g2);
    let i2 = j_kernel_u_integral(JKernel::J1OverXi, UFunc::U3, lambda)?;
    let i2_rhs = -sqrt_pi * (lambda / g2 + 2.0 * i * g2 / (g1 * g1));
    Ok(vec![
        IdentityCheck::new("appendix-i1-j0-u3", i1, i1_rhs),
        IdentityCheck::new("appendix-i2-j1-u3", i2, i2_rhs),
    ])
}

/// All six integral identities at real λ.
pub fn verify_appendix(lambda: f64) -> Result<AppendixReport> {
    let lam = Complex::new(lambda, 0.0);
    let (g1, g2) = g1g2(lam)?;
    let mut checks = verify_halfplane(lam)?;

    let cross = g1 * g2.conj();
    let re_plus_im = cross.re + cross.im;
    let n1 = g1.norm_sqr();
    let n2 = g2.norm_sqr();

    let l1 = j_kernel_u_integral(JKernel::J0Quarter, UFunc::U1, lam)?;
    checks.push(IdentityCheck::new(
        "appendix-j0-u1",
        l1,
        Complex::new(re_plus_im / n2, 0.0),
    ));
    let l2 = j_kernel_u_integral(JKernel::J0Quarter, UFunc::U2, lam)?;
    checks.push(IdentityCheck::new(
        "appendix-j0-u2",
        l2,
        Complex::new(0.5 * n1 / n2, 0.0),
    ));
    let l3 = j_kernel_u_integral(JKernel::J1OverXi, UFunc::U1, lam)?;
    checks.push(IdentityCheck::new(
        "appendix-j1-u1",
        l3,
        Complex::new(2.0 * n2 / n1 - lambda, 0.0),
    ));
    let l4 = j_kernel_u_integral(JKernel::J1OverXi, UFunc::U2, lam)?;
    checks.push(IdentityCheck::new(
        "appendix-j1-u2",
        l4,
        Complex::new(2.0 * re_plus_im / n1, 0.0),
    ));
    Ok(AppendixReport { lambda: lam, checks })
}

/// Both sides of Re(G₁Ḡ₂)+Im(G₁Ḡ₂) = π√2·e^{−πλ/2}/cosh(πλ).
pub fn gamma_reim_identity(lambda: f64) -> Result<(f64, f64)> {
    let (g1, g2) = g1g2(Complex::new(lambda, 0.0))?;
    let cross = g1 * g2.conj();
    let lhs = cross.re + cross.im;
    // e^{−πλ/2}/cosh(πλ) = 2/(e^{3πλ/2}+e^{−πλ/2}), assembled in logs.
    let pl = PI * lambda;
    let m = (1.5 * pl).max(-0.5 * pl);
    let rhs = PI * 2.0f64.sqrt()
        * 2.0
        * (-m - ((1.5 * pl - m).exp() + (-0.5 * pl - m).exp()).ln()).exp();
    Ok((lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reim_identity() {
        for &lam in &[0.0, 1.0, -2.0, 6.0] {
            let (lhs, rhs) = gamma_reim_identity(lam).unwrap();
            assert!((lhs - rhs).abs() <= 1e-12 * rhs.abs().max(1e-3), "λ={lam}: {lhs} vs {rhs}");
        }
    }

    #[test]
    fn integral2_value_at_zero() {
        // rhs of the J₀·u₂ identity at λ = 0 is ½·Γ(¼)²/Γ(¾)².
        let rep = verify_appendix(0.0).unwrap();
        let c = rep.checks.iter().find(|c| c.id == "appendix-j0-u2").unwrap();
        let g14 = gamma(Complex::new(0.25, 0.0)).unwrap().re;
        let g34 = gamma(Complex::new(0.75, 0.0)).unwrap().re;
        let want = 0.5 * (g14 / g34).powi(2);
        assert!((c.rhs.re - want).abs() < 1e-12 * want);
        assert!(c.deviation < 1e-8, "deviation {}", c.deviation);
    }

    #[test]
    fn all_six_at_real_lambda() {
        for &lam in &[0.0, 1.0, -1.0] {
            let rep = verify_appendix(lam).unwrap();
            assert_eq!(rep.checks.len(), 6);
            for c in &rep.checks {
                assert!(
                    c.deviation < 1e-8,
                    "λ={lam} {}: {} vs {} (dev {})",
                    c.id,
                    c.lhs,
                    c.rhs,
                    c.deviation
                );
            }
        }
    }

    #[test]
    fn halfplane_at_proper_im_lambda() {
        for &lam in &[Complex::new(0.0, -0.3), Complex::new(1.0, -0.3)] {
            let checks = verify_halfplane(lam).unwrap();
            for c in &checks {
                assert!(c.deviation < 1e-6, "λ={lam} {}: dev {}", c.id, c.deviation);
            }
        }
    }
}
