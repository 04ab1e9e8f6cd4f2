//! Kummer confluent hypergeometric functions M(a,b,z) and U(a,b,z) for
//! complex parameters and argument.

use super::gamma::{gamma, gamma_recip};
use super::EvalPolicy;
use crate::error::{Error, Result};
use crate::Complex;
use std::f64::consts::PI;

fn is_nonpositive_integer(z: Complex) -> bool {
    z.im == 0.0 && z.re <= 0.0 && z.re == z.re.floor()
}

fn is_integer(z: Complex) -> bool {
    z.im == 0.0 && z.re == z.re.floor()
}

/// Taylor switch radius for M. Inside, the defining series is summed
/// directly; outside, the large-|z| asymptotic connection is used. Note
/// that for strongly oscillatory arguments (z near the imaginary axis) the
/// Taylor sum cancels ~e^{|z|}; callers needing high relative accuracy in
/// that regime at large |z| should use the asymptotic regime (the internal
/// parabolic-cylinder evaluators do).
const M_TAYLOR_RADIUS: f64 = 60.0;

/// M(a, b, z) = Σ (a)_n z^n / ((b)_n n!).
pub fn kummer_m(a: Complex, b: Complex, z: Complex, policy: &EvalPolicy) -> Result<Complex> {
    if is_nonpositive_integer(b) {
        return Err(Error::Pole(format!("kummer_m: b = {b} is a nonpositive integer")));
    }
    if z.norm() <= M_TAYLOR_RADIUS {
        m_taylor(a, b, z, policy)
    } else {
        m_asymptotic(a, b, z, policy)
    }
}

fn m_taylor(a: Complex, b: Complex, z: Complex, policy: &EvalPolicy) -> Result<Complex> {
    let mut term = Complex::new(1.0, 0.0);
    let mut sum = term;
    let mut small_run = 0;
    for n in 0..policy.max_terms {
        let nf = n as f64;
        term = term * (a + nf) * z / ((b + nf) * (nf + 1.0));
        sum += term;
        if term.norm() <= policy.rel_tol * sum.norm().max(1e-280) {
            small_run += 1;
            if small_run >= 3 {
                return Ok(sum);
            }
        } else {
            small_run = 0;
        }
    }
    Err(Error::NonConvergence(format!(
        "kummer_m Taylor: {} terms at |z| = {:.3}",
        policy.max_terms,
        z.norm()
    )))
}

/// 2F0-type asymptotic sum Σ (α)_k (β)_k / k! · w^k, truncated at the
/// smallest term.
fn poly_2f0(alpha: Complex, beta: Complex, w: Complex, max_terms: usize) -> (Complex, f64) {
    let mut term = Complex::new(1.0, 0.0);
    let mut sum = term;
    let mut smallest = f64::INFINITY;
    for k in 0..max_terms {
        let kf = k as f64;
        let next = term * (alpha + kf) * (beta + kf) * w / (kf + 1.0);
        if next.norm() >= smallest {
            break;
        }
        term = next;
        smallest = term.norm();
        sum += term;
        if smallest < 1e-18 * sum.norm() {
            break;
        }
    }
    (sum, smallest)
}

fn m_asymptotic(a: Complex, b: Complex, z: Complex, policy: &EvalPolicy) -> Result<Complex> {
    // M(a,b,z) = Γ(b) [ e^{±iπa} z^{−a}/Γ(b−a) ₂F₀(a, a−b+1; −1/z)
    //                 + e^z z^{a−b}/Γ(a) ₂F₀(b−a, 1−a; 1/z) ].
    let gb = gamma(b)?;
    let sign = if z.im >= 0.0 { 1.0 } else { -1.0 };
    let phase = (Complex::new(0.0, sign * PI) * a).exp();
    let (s1, e1) = poly_2f0(a, a - b + 1.0, -1.0 / z, 80);
    let (s2, e2) = poly_2f0(b - a, 1.0 - a, 1.0 / z, 80);
    let t1 = phase * (-a * z.ln()).exp() * gamma_recip(b - a) * s1;
    let t2 = z.exp() * ((a - b) * z.ln()).exp() * gamma_recip(a) * s2;
    let v = gb * (t1 + t2);
    let err = gb.norm() * (e1 * (-a * z.ln()).exp().norm() + e2 * (z.exp() * ((a - b) * z.ln()).exp()).norm());
    if err > policy.rel_tol.max(1e-10) * v.norm().max(1e-280) * 1e3 {
        return Err(Error::NonConvergence(format!(
            "kummer_m asymptotic: residual {err:.2e} at |z| = {:.2}",
            z.norm()
        )));
    }
    Ok(v)
}

/// Asymptotic switch for U: beyond this radius the recessive expansion
/// z^{−a}·₂F₀ is at full double precision.
const U_ASYM_RADIUS: f64 = 28.0;

/// U(a, b, z), principal branch (z off (−∞, 0]).
pub fn kummer_u(a: Complex, b: Complex, z: Complex, policy: &EvalPolicy) -> Result<Complex> {
    if z.im == 0.0 && z.re <= 0.0 {
        return Err(Error::BranchCut(format!("kummer_u at z = {z}")));
    }
    if is_integer(b) {
        return Err(Error::Pole(format!(
            "kummer_u: integer b = {} requires the logarithmic case",
            b.re
        )));
    }
    if z.norm() >= U_ASYM_RADIUS {
        return Ok(kummer_u_asymptotic(a, b, z).0);
    }
    // Connection formula:
    // U = Γ(1−b)/Γ(a−b+1) M(a,b,z) + Γ(b−1)/Γ(a) z^{1−b} M(a−b+1, 2−b, z).
    let c1 = gamma(1.0 - b)? * gamma_recip(a - b + 1.0);
    let c2 = gamma(b - 1.0)? * gamma_recip(a);
    let m1 = m_taylor(a, b, z, policy)?;
    let m2 = m_taylor(a - b + 1.0, 2.0 - b, z, policy)?;
    let zp = ((1.0 - b) * z.ln()).exp();
    Ok(c1 * m1 + c2 * zp * m2)
}

/// Recessive asymptotic expansion U(a,b,z) ≈ z^{−a} ₂F₀(a, a−b+1; −1/z);
/// returns (value, magnitude of the smallest retained term) — the latter
/// bounds the truncation error.
pub(crate) fn kummer_u_asymptotic(a: Complex, b: Complex, z: Complex) -> (Complex, f64) {
    let (s, smallest) = poly_2f0(a, a - b + 1.0, -1.0 / z, 120);
    let pref = (-a * z.ln()).exp();
    (pref * s, smallest * pref.norm())
}
