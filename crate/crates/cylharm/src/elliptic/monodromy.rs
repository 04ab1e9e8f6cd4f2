//! Monodromy coefficients μₙ(q), νₙ(q): with u₁ = ceₙ and a second
//! independent solution u₂ of Mathieu's equation,
//!
//!   u₂(η+π) = σ u₁(η) + (−1)ⁿ u₂(η),   μₙ(q) = 2(−1)ⁿσ / W[u₁,u₂],
//!
//! and the analogous νₙ(q) through seₙ. There are no closed forms; σ is
//! read off from one period of numerical integration.

use super::system::{MathieuSystem, Parity};
use crate::error::{Error, Result};
use crate::ode;
use std::f64::consts::PI;

/// Integrate Mathieu's equation over [0, π] from the given initial state.
fn over_period(lambda: f64, q: f64, y0: [f64; 2]) -> Result<[f64; 2]> {
    ode::integrate_to(
        |t, y| [y[1], -(lambda - 2.0 * q * (2.0 * t).cos()) * y[0]],
        0.0,
        PI,
        y0,
        1e-12,
        1e-14,
    )
}

/// μₙ(q) (even systems) or νₙ(q) (odd systems) for q > 0, from the seed
/// second solution with initial state `seed` at η = 0.
pub(crate) fn mono_from_seed(sys: &MathieuSystem, seed: [f64; 2]) -> Result<f64> {
    if !(sys.q > 0.0) {
        return Err(Error::Domain(format!(
            "monodromy coefficients are defined on q > 0 here, got q = {}",
            sys.q
        )));
    }
    let sign = if sys.n % 2 == 0 { 1.0 } else { -1.0 };
    let (p0, d0) = sys.eval_real_with_derivative(0.0);
    let w_end = over_period(sys.eigenvalue, sys.q, seed)?;
    match sys.parity {
        Parity::Even => {
            // ceₙ(0) ≠ 0 (an even function cannot have a simple zero at 0).
            if p0.abs() < 1e-12 {
                return Err(Error::DegenerateSolution("ce_n(0) ≈ 0".into()));
            }
            let sigma = (w_end[0] - sign * seed[0]) / p0;
            // Floquet consistency on the derivative component.
            let resid = w_end[1] - sign * seed[1];
            if resid.abs() > 1e-7 * (1.0 + w_end[1].abs()) {
                return Err(Error::DegenerateSolution(format!(
                    "period map inconsistent with a_n: residual {resid:.2e}"
                )));
            }
            let wronskian = p0 * seed[1] - 0.0 * seed[0];
            Ok(2.0 * sign * sigma / wronskian)
        }
        Parity::Odd => {
            if d0.abs() < 1e-12 {
                return Err(Error::DegenerateSolution("se_n'(0) ≈ 0".into()));
            }
            let tau = (w_end[1] - sign * seed[1]) / d0;
            let resid = w_end[0] - sign * seed[0];
            if resid.abs() > 1e-7 * (1.0 + w_end[0].abs()) {
                return Err(Error::DegenerateSolution(format!(
                    "period map inconsistent with b_n: residual {resid:.2e}"
                )));
            }
            let wronskian = 0.0 * seed[1] - d0 * seed[0];
            Ok(2.0 * sign * tau / wronskian)
        }
    }
}

/// Monodromy coefficient with the canonical seed (u₂(0), u₂′(0)) = (0, 1)
/// for even systems and (1, 0) for odd ones.
pub fn monodromy_coefficient(sys: &MathieuSystem) -> Result<f64> {
    let seed = match sys.parity {
        Parity::Even => [0.0, 1.0],
        Parity::Odd => [1.0, 0.0],
    };
    mono_from_seed(sys, seed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::elliptic::{rtilde_sq_factored, MathieuSystem};
    use crate::quad;
    use crate::specfun::bessel_j0_sq;

    #[test]
    fn seed_invariance() {
        // Two independent second-solution seeds give the same coefficient.
        for &(n, parity) in &[(0u32, Parity::Even), (1, Parity::Even), (1, Parity::Odd), (2, Parity::Odd)] {
            let sys = MathieuSystem::build(0.5, n, parity).unwrap();
            let (p0, d0) = sys.eval_real_with_derivative(0.0);
            let a = monodromy_coefficient(&sys).unwrap();
            let alt_seed = match parity {
                Parity::Even => [0.3 * p0, 1.0],
                Parity::Odd => [1.0, 0.4 * d0],
            };
            let b = mono_from_seed(&sys, alt_seed).unwrap();
            assert!((a - b).abs() <= 1e-9 * a.abs().max(1.0), "n={n}: {a} vs {b}");
        }
    }

    #[test]
    fn integral_identity_even() {
        // ∫_{−π}^{π} J₀(k r̃(ζ,η,ζ₀,η₀)) ceₙ(ζ) dζ = μₙ ceₙ(η)ceₙ(ζ₀)ceₙ(η₀)
        // at (η,ζ₀,η₀) = (0.4, 0.2, 0.9), q = 0.5, n = 0 (and n = 2).
        let q: f64 = 0.5;
        let k = 1.0f64;
        let c = 2.0 * q.sqrt() / k;
        let (eta, zeta0, eta0) = (0.4, 0.2, 0.9);
        for n in [0u32, 2] {
            let sys = MathieuSystem::build(q, n, Parity::Even).unwrap();
            let mu = sys.mono_coeff().unwrap();
            let (lhs, _, _) = quad::adaptive_gl(
                |zeta| {
                    let r2 = rtilde_sq_factored(zeta, eta, zeta0, eta0, c);
                    bessel_j0_sq(k * k * r2) * sys.eval_real(zeta)
                },
                -PI,
                PI,
                1e-10,
                1e-10,
                4_000_000,
            )
            .unwrap();
            let rhs = mu * sys.eval_real(eta) * sys.eval_real(zeta0) * sys.eval_real(eta0);
            assert!(
                (lhs - rhs).abs() <= 1e-7 * rhs.abs().max(1.0),
                "n={n}: {lhs} vs {rhs}"
            );
        }
    }

    #[test]
    fn integral_identity_odd() {
        // ν₁(0.5) from the monodromy construction vs the seₙ quadrature.
        let q: f64 = 0.5;
        let k = 1.0f64;
        let c = 2.0 * q.sqrt() / k;
        let (eta, zeta0, eta0) = (0.7, 0.3, 1.1);
        let sys = MathieuSystem::build(q, 1, Parity::Odd).unwrap();
        let nu = sys.mono_coeff().unwrap();
        let (lhs, _, _) = quad::adaptive_gl(
            |zeta| {
                let r2 = rtilde_sq_factored(zeta, eta, zeta0, eta0, c);
                bessel_j0_sq(k * k * r2) * sys.eval_real(zeta)
            },
            -PI,
            PI,
            1e-10,
            1e-10,
            4_000_000,
        )
        .unwrap();
        let rhs = nu * sys.eval_real(eta) * sys.eval_real(zeta0) * sys.eval_real(eta0);
        assert!((lhs - rhs).abs() <= 1e-7 * rhs.abs().max(1.0), "{lhs} vs {rhs}");
    }

    #[test]
    fn negative_q_rejected() {
        let sys = MathieuSystem::build(-0.5, 0, Parity::Even).unwrap();
        assert!(matches!(monodromy_coefficient(&sys), Err(Error::Domain(_))));
    }
}
