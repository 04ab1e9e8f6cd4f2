//! Continuous-spectrum machinery of the singular problem
//! −u″ − ¼x²u = λu on ℝ: spectral densities
//!
//!   ρ′₁(λ) = e^{πλ/2}/(4√2 π²) |Γ(¼+iλ/2)|²,
//!   ρ′₂(λ) = e^{πλ/2}/(2√2 π²) |Γ(¾+iλ/2)|²,
//!
//! expansion constants
//!
//!   c₁(λ) =  2√2 π e^{−πλ/2} / (cosh(πλ) |Γ(¾+iλ/2)|²),
//!   c₂(λ) = −4√2 π e^{−πλ/2} / (cosh(πλ) |Γ(¼+iλ/2)|²),
//!
//! and the resulting plane expansion
//!
//!   J₀(k·r) = Σ_j ∫ c_j ρ′_j · u_j(λ,√(2k)ξ) u_j(λ,i√(2k)η)
//!                          · u_j(λ,√(2k)ξ₀) u_j(λ,i√(2k)η₀) dλ.
//!
//! The products c_jρ′_j collapse to pure gamma-fourth-power forms,
//!
//!   c₁ρ′₁ = |Γ(¼+iλ/2)|⁴/(4π³),   c₂ρ′₂ = −|Γ(¾+iλ/2)|⁴/π³,
//!
//! which is what the integrand uses (well-conditioned at every λ).

use super::pcf::{pcf_real, PcfKind};
use super::ParabolicPair;
use crate::error::{Error, Result};
use crate::laplace3d::QuadratureSpec;
use crate::logspace::LogNum;
use crate::quad;
use crate::report::{ExpansionReport, Method};
use crate::specfun::gamma;
use crate::Complex;
use std::f64::consts::PI;

/// Spectral data bundle at one λ.
#[derive(Debug, Clone, Copy)]
pub struct SpectralWeight {
    pub lambda: f64,
    pub rho1p: f64,
    pub rho2p: f64,
    pub c1: f64,
    pub c2: f64,
}

/// |λ| beyond which |Im| of the gamma arguments leaves the validated box.
const LAMBDA_BOX: f64 = 200.0;

/// Spectral densities and expansion constants at real λ.
pub fn spectral_weight(lambda: f64) -> Result<SpectralWeight> {
    if !(lambda.abs() <= LAMBDA_BOX) {
        return Err(Error::Overflow(format!(
            "spectral_weight: |λ| = {} outside the validated gamma box",
            lambda.abs()
        )));
    }
    let n1 = gamma(Complex::new(0.25, 0.5 * lambda))?.norm_sqr();
    let n2 = gamma(Complex::new(0.75, 0.5 * lambda))?.norm_sqr();
    let pl = PI * lambda;
    let rho1p = (0.5 * pl).exp() / (4.0 * 2.0f64.sqrt() * PI * PI) * n1;
    let rho2p = (0.5 * pl).exp() / (2.0 * 2.0f64.sqrt() * PI * PI) * n2;
    // e^{−πλ/2}/cosh(πλ) = 2/(e^{3πλ/2} + e^{−πλ/2}), assembled in logs.
    let m = (1.5 * pl).max(-0.5 * pl);
    let ln_sech = std::f64::consts::LN_2 - m - ((1.5 * pl - m).exp() + (-0.5 * pl - m).exp()).ln();
    let c1 = 2.0 * 2.0f64.sqrt() * PI * (ln_sech - n2.ln()).exp();
    let c2 = -4.0 * 2.0f64.sqrt() * PI * (ln_sech - n1.ln()).exp();
    Ok(SpectralWeight {
        lambda,
        rho1p,
        rho2p,
        c1,
        c2,
    })
}

/// c₁ρ′₁ and c₂ρ′₂ in their gamma-quartic product forms.
pub(crate) fn crho(lambda: f64) -> Result<(f64, f64)> {
    let n1 = gamma(Complex::new(0.25, 0.5 * lambda))?.norm_sqr();
    let n2 = gamma(Complex::new(0.75, 0.5 * lambda))?.norm_sqr();
    Ok((n1 * n1 / (4.0 * PI.powi(3)), -n2 * n2 / PI.powi(3)))
}

/// One integrand sample of the Thm-3.2 expansion, manifestly real:
/// u_j(λ, iy) = w₁(λ,y) (j = 1, real) and i·w₂(λ,y) (j = 2), so the j = 2
/// quadruple contributes −c₂ρ′₂·u₂u₂w₂w₂ ≥ 0.
fn spectral_integrand(lambda: f64, x: f64, y: f64, x0: f64, y0: f64) -> Result<f64> {
    let (w1, w2) = crho(lambda)?;
    let even = |t: f64| -> Result<LogNum> {
        let (v, _) = pcf_real(PcfKind::UEven, lambda, t)?;
        Ok(LogNum::from_f64(v))
    };
    let even_w = |t: f64| -> Result<LogNum> {
        let (v, _) = pcf_real(PcfKind::WEven, lambda, t)?;
        Ok(LogNum::from_f64(v))
    };
    let odd = |t: f64| -> Result<LogNum> {
        let (v, _) = pcf_real(PcfKind::UOdd, lambda, t)?;
        Ok(LogNum::from_f64(v))
    };
    let odd_w = |t: f64| -> Result<LogNum> {
        let (v, _) = pcf_real(PcfKind::WOdd, lambda, t)?;
        Ok(LogNum::from_f64(v))
    };
    let term1 = LogNum::from_f64(w1)
        .mul(even(x)?)
        .mul(even(x0)?)
        .mul(even_w(y)?)
        .mul(even_w(y0)?);
    let term2 = LogNum::from_f64(w2)
        .mul(odd(x)?)
        .mul(odd(x0)?)
        .mul(odd_w(y)?)
        .mul(odd_w(y0)?);
    // i² from the two imaginary-axis factors of j = 2.
    Ok(term1.to_f64() - term2.to_f64())
}

/// J₀(k·r(p,p0)) as the two-branch spectral integral over λ ∈ (−Λ, Λ),
/// with Λ grown from the measured integrand tail.
pub fn j0_spectral_integral(
    p: ParabolicPair,
    p0: ParabolicPair,
    k: f64,
    quad_spec: &QuadratureSpec,
) -> Result<ExpansionReport> {
    if !(k > 0.0) {
        return Err(Error::Domain(format!("k must be > 0, got {k}")));
    }
    let s = (2.0 * k).sqrt();
    let (x, y, x0, y0) = (s * p.xi, s * p.eta, s * p0.xi, s * p0.eta);
    let f = |lambda: f64| spectral_integrand(lambda, x, y, x0, y0);

    let tol_abs = quad_spec.rel_tol.max(1e-12);
    let mut cutoff = 30.0f64;
    let mut evals = 0usize;
    loop {
        let tail_mag = f(cutoff)?.abs().max(f(-cutoff)?.abs());
        evals += 2;
        // Conservative tail: the integrand decays at least like e^{−π|λ|/2}
        // past the turning region, so ∫ beyond Λ ≲ |f(±Λ)|·2/π each side.
        let tail_est = tail_mag * 4.0 / PI;
        if tail_est < 0.05 * tol_abs {
            let (value, err, ev) = quad::adaptive_gl(
                |lam| f(lam).unwrap_or(f64::NAN),
                -cutoff,
                cutoff,
                quad_spec.rel_tol,
                0.3,
                quad_spec.max_evals,
            )?;
            if !value.is_finite() {
                return Err(Error::NonConvergence("spectral integrand failed".into()));
            }
            let mut report = ExpansionReport::new(value, Method::ParabolicJ0);
            report.truncation_used = vec![cutoff as usize];
            report.tail_estimate = tail_est + err;
            report.evals = evals + ev;
            return Ok(report);
        }
        cutoff *= 2.0;
        if cutoff > 1920.0 {
            return Err(Error::NonConvergence(
                "spectral λ-cutoff grew beyond 1920 without tail decay".into(),
            ));
        }
    }
}
