//! Modified radial Mathieu functions for q = −h² < 0:
//!
//!   −u″ + (λ − 2q cosh 2ξ)u = 0,
//!
//! with Ieₙ/Ioₙ the even/odd solutions ~ Iₙ(2h cosh ξ) and Keₙ/Koₙ the
//! recessive ones ~ Kₙ(2h cosh ξ) as ξ → ∞.
//!
//! Construction: Ie/Io by outward integration from parity data at ξ = 0,
//! rescaled to the Bessel target at a match abscissa with 2h·cosh ξ ≥ 30;
//! Ke/Ko by inward integration from Bessel data at the match abscissa
//! (the recessive direction is stable inward). The K-side is then rescaled
//! so W[Ke, Ie] = 1 holds exactly: the expansion theorems only ever
//! consume Ie·Ke products, for which the residual O(h²/z̃) normalization
//! ambiguity of the asymptotic match cancels identically.

use super::system::{MathieuSystem, Parity};
use crate::error::{Error, Result};
use crate::ode;
use crate::specfun::{bessel_i_with_derivative, bessel_k_with_derivative};

/// Radial function family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RadialFamily {
    Ie,
    Ke,
    Io,
    Ko,
}

/// Family plus the radial parameter h > 0 (q = −h²).
#[derive(Debug, Clone, Copy)]
pub struct RadialKind {
    pub family: RadialFamily,
    pub h: f64,
}

impl RadialKind {
    pub fn new(family: RadialFamily, h: f64) -> Result<Self> {
        if !(h > 0.0) {
            return Err(Error::Domain(format!("radial parameter h must be > 0, got {h}")));
        }
        Ok(RadialKind { family, h })
    }

    fn parity(&self) -> Parity {
        match self.family {
            RadialFamily::Ie | RadialFamily::Ke => Parity::Even,
            RadialFamily::Io | RadialFamily::Ko => Parity::Odd,
        }
    }
}

fn check_system(kind: &RadialKind, sys: &MathieuSystem) -> Result<()> {
    if sys.parity != kind.parity() {
        return Err(Error::Domain(
            "radial family parity does not match the Mathieu system".into(),
        ));
    }
    let q_expected = -kind.h * kind.h;
    if (sys.q - q_expected).abs() > 1e-10 * q_expected.abs().max(1.0) {
        return Err(Error::Domain(format!(
            "system q = {} inconsistent with h = {} (expect q = −h²)",
            sys.q, kind.h
        )));
    }
    Ok(())
}

fn acosh_safe(x: f64) -> f64 {
    if x <= 1.0 {
        0.0
    } else {
        x.acosh()
    }
}

/// Modified Mathieu RHS: u″ = (λ + 2h² cosh 2ξ) u.
fn rhs(lambda: f64, h: f64) -> impl Fn(f64, ode::State<f64>) -> ode::State<f64> {
    let h2 = 2.0 * h * h;
    move |t: f64, y: ode::State<f64>| [y[1], (lambda + h2 * (2.0 * t).cosh()) * y[0]]
}

/// (Ie value, Ie′) at `xi_i` and (Ke value, Ke′) at `xi_k` for the system's
/// (n, parity), Wronskian-normalized as a pair: W[Ke, Ie] = 1.
pub(crate) fn radial_pair(
    sys: &MathieuSystem,
    h: f64,
    xi_i: f64,
    xi_k: f64,
) -> Result<((f64, f64), (f64, f64))> {
    if !(h > 0.0) {
        return Err(Error::Domain(format!("h must be > 0, got {h}")));
    }
    if xi_i < 0.0 || xi_k < 0.0 {
        return Err(Error::Domain("radial ξ must be ≥ 0".into()));
    }
    let n = sys.n;
    let lambda = sys.eigenvalue;
    let xi_match = acosh_safe(30.0 / (2.0 * h))
        .max(xi_i + 0.5)
        .max(xi_k + 0.5)
        .max(1.0);
    let z_match = 2.0 * h * xi_match.cosh();
    if z_match > 650.0 {
        return Err(Error::Overflow(format!(
            "radial match point 2h·coshξ = {z_match:.0} beyond representable growth"
        )));
    }

    // Outward pass for the growing solution.
    let ic = match sys.parity {
        Parity::Even => [1.0, 0.0],
        Parity::Odd => [0.0, 1.0],
    };
    let f = rhs(lambda, h);
    let targets = [xi_i, xi_match];
    let states = ode::integrate_collect(&f, 0.0, &targets, ic, 1e-12, 1e-260)?;
    let at_eval = states[0];
    let at_match = states[1];
    if !(at_match[0].is_finite() && at_match[0] != 0.0) {
        return Err(Error::Overflow("outward radial integration".into()));
    }
    let (i_target, _) = bessel_i_with_derivative(n, z_match)?;
    let chain = 2.0 * h * xi_match.sinh();
    let scale_i = i_target / at_match[0];
    let ie = (at_eval[0] * scale_i, at_eval[1] * scale_i);
    let ie_match = (i_target, at_match[1] * scale_i);

    // Inward pass for the recessive solution.
    let (k_target, dk_target) = bessel_k_with_derivative(n, z_match)?;
    if k_target == 0.0 {
        return Err(Error::Underflow(format!(
            "K_{n}({z_match:.1}) underflows before the match point"
        )));
    }
    let ke_ic = [k_target, dk_target * chain];
    let ke_state = ode::integrate_to(&f, xi_match, xi_k, ke_ic, 1e-12, 1e-290)?;

    // Enforce W[Ke, Ie] = 1 exactly at the match abscissa.
    let w = ke_ic[0] * ie_match.1 - ke_ic[1] * ie_match.0;
    if !(w.is_finite() && w != 0.0) {
        return Err(Error::DegenerateSolution("vanishing radial Wronskian".into()));
    }
    let ke = (ke_state[0] / w, ke_state[1] / w);
    Ok((ie, ke))
}

/// Single radial function value (ξ ≥ 0; the even families extend evenly,
/// Io/Ko oddly).
pub fn radial_mathieu(kind: &RadialKind, sys: &MathieuSystem, xi: f64) -> Result<f64> {
    check_system(kind, sys)?;
    let (ie, ke) = radial_pair(sys, kind.h, xi, xi)?;
    Ok(match kind.family {
        RadialFamily::Ie | RadialFamily::Io => ie.0,
        RadialFamily::Ke | RadialFamily::Ko => ke.0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::elliptic::MathieuSystem;
    use crate::specfun::bessel_i;

    fn even_sys(h: f64, n: u32) -> std::sync::Arc<MathieuSystem> {
        MathieuSystem::build(-h * h, n, Parity::Even).unwrap()
    }

    fn odd_sys(h: f64, n: u32) -> std::sync::Arc<MathieuSystem> {
        MathieuSystem::build(-h * h, n, Parity::Odd).unwrap()
    }

    #[test]
    fn io_vanishes_at_zero_ie_has_even_slope() {
        let h = 0.5;
        let se = odd_sys(h, 1);
        let kind = RadialKind::new(RadialFamily::Io, h).unwrap();
        let v0 = radial_mathieu(&kind, &se, 0.0).unwrap();
        assert_eq!(v0, 0.0);
        // Even family: Ie′(0) = 0 (even extension Ieₙ(−ξ) = Ieₙ(ξ)).
        let ce = even_sys(h, 0);
        let (ie0, _) = radial_pair(&ce, h, 0.0, 1.0).unwrap();
        assert_eq!(ie0.1, 0.0);
    }

    #[test]
    fn wronskian_is_one() {
        for &(h, n, odd) in &[(0.5f64, 0u32, false), (0.5, 1, true), (1.5, 2, false), (0.9, 3, true)] {
            let sys = if odd { odd_sys(h, n) } else { even_sys(h, n) };
            for &xi in &[0.5, 1.5] {
                let (ie, ke) = radial_pair(&sys, h, xi, xi).unwrap();
                let w = ke.0 * ie.1 - ke.1 * ie.0;
                assert!((w - 1.0).abs() < 1e-8, "h={h} n={n} ξ={xi}: W = {w}");
            }
        }
    }

    #[test]
    fn ode_residual() {
        // Finite-difference residual of the modified Mathieu equation.
        let h = 0.7;
        let sys = even_sys(h, 1);
        let kind = RadialKind::new(RadialFamily::Ie, h).unwrap();
        let step = 1e-3;
        for &xi in &[0.8, 1.6] {
            let f = |x: f64| radial_mathieu(&kind, &sys, x).unwrap();
            let upp = (f(xi + step) - 2.0 * f(xi) + f(xi - step)) / (step * step);
            let want = (sys.eigenvalue + 2.0 * h * h * (2.0 * xi).cosh()) * f(xi);
            assert!(
                (upp - want).abs() < 1e-5 * (1.0 + want.abs()),
                "ξ={xi}: {upp} vs {want}"
            );
        }
    }

    #[test]
    fn asymptotic_normalization_at_match() {
        // Ie₀(ξ, h)/I₀(2h cosh ξ) → 1 at the match point by construction;
        // check the ratio drifts only at the expected O(1/z̃) level just
        // inside it.
        let h = 0.5;
        let sys = even_sys(h, 0);
        let xi_probe = acosh_safe(30.0 / (2.0 * h)) - 0.2;
        let (ie, _) = radial_pair(&sys, h, xi_probe, xi_probe).unwrap();
        let target = bessel_i(0, 2.0 * h * xi_probe.cosh()).unwrap();
        let ratio = ie.0 / target;
        assert!((ratio - 1.0).abs() < 0.05, "ratio {ratio}");
    }

    #[test]
    fn interior_matches_shooting() {
        // Ie₀(2.0, 0.5) against an independent inward/outward check: value
        // continued from ξ = 0 with the oracle integrator.
        let h = 0.5;
        let sys = even_sys(h, 0);
        let kind = RadialKind::new(RadialFamily::Ie, h).unwrap();
        let v = radial_mathieu(&kind, &sys, 2.0).unwrap();
        let shot = crate::oracle::ode_shoot(
            crate::oracle::ShootEquation::ModifiedMathieu {
                lambda: sys.eigenvalue,
                q: sys.q,
            },
            (1.0, 0.0),
            2.0,
        )
        .unwrap();
        // Same up to the asymptotic normalization constant: compare ratios
        // at two abscissae instead of absolute values.
        let v_half = radial_mathieu(&kind, &sys, 1.0).unwrap();
        let shot_half = crate::oracle::ode_shoot(
            crate::oracle::ShootEquation::ModifiedMathieu {
                lambda: sys.eigenvalue,
                q: sys.q,
            },
            (1.0, 0.0),
            1.0,
        )
        .unwrap();
        let ratio_fast = v / v_half;
        let ratio_shot = shot.value.0 / shot_half.value.0;
        assert!(
            (ratio_fast - ratio_shot).abs() < 1e-8 * ratio_shot.abs(),
            "{ratio_fast} vs {ratio_shot}"
        );
    }

    #[test]
    fn parity_mismatch_rejected() {
        let h = 0.5;
        let sys = even_sys(h, 0);
        let kind = RadialKind::new(RadialFamily::Io, h).unwrap();
        assert!(matches!(radial_mathieu(&kind, &sys, 1.0), Err(Error::Domain(_))));
    }
}
