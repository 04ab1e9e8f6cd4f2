//! Oscillatory integrals ∫₀^∞ κ(ξ)·u_j(λ,ξ) dξ with κ either J₀(¼ξ²) or
//! ξ⁻¹J₁(¼ξ²).
//!
//! The front [0, Z] is ordinary adaptive quadrature. The tail uses the
//! exact frequency structure: with s = ξ²/4,
//!
//!   κ(ξ)       = e^{+is}·hp(ξ) + e^{−is}·hm(ξ)      (half Hankel pair)
//!   u_j(λ,ξ)   = α_j·e^{−is}·g₃(ξ) + β_j·e^{+is}·g₃c(ξ)
//!
//! where g₃/g₃c are the slowly-varying recessive factors of u₃ and its
//! conjugate-type partner. The product splits into
//!
//! * a DC part ~ ξ^{−γ∓iλ}·(series in ξ⁻²): integrated in closed form
//!   term by term (this is the piece that makes naive zero-partition +
//!   Euler acceleration stall at Z^{−1/2});
//! * e^{±iξ²/2} parts: pushed onto steepest-descent paths ξ(τ) = √(Z²±2iτ)
//!   where both factors decay, and integrated with the e^{−τ} weight.

use super::pcf;
use crate::error::{Error, Result};
use crate::quad;
use crate::specfun::{self, bessel_asym_a};
use crate::Complex;
use std::f64::consts::PI;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum JKernel {
    /// J₀(¼ξ²)
    J0Quarter,
    /// ξ⁻¹ J₁(¼ξ²)
    J1OverXi,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum UFunc {
    U1,
    U2,
    U3,
}

/// Junction between the quadrature front and the asymptotic tail.
const Z_TAIL: f64 = 12.0;

/// ∫₀^∞ κ(ξ) u(λ,ξ) dξ. λ may be complex (Im λ ≤ 0 territory is where the
/// u₃ identities live); for u₁/u₂ the real-λ fast paths are used when
/// possible.
pub(crate) fn j_kernel_u_integral(kernel: JKernel, ufunc: UFunc, lambda: Complex) -> Result<Complex> {
    if lambda.norm() > 30.0 {
        return Err(Error::Domain(format!(
            "oscillatory integral engine validated for |λ| ≤ 30, got {lambda}"
        )));
    }
    let front = front_part(kernel, ufunc, lambda)?;
    let tail = tail_part(kernel, ufunc, lambda)?;
    Ok(front + tail)
}

fn u_eval(ufunc: UFunc, lambda: Complex, x: f64) -> Result<Complex> {
    match ufunc {
        UFunc::U3 => pcf::u3_complex_lambda(lambda, x),
        UFunc::U1 | UFunc::U2 => {
            let even = ufunc == UFunc::U1;
            if lambda.im == 0.0 {
                let kind = if even { pcf::PcfKind::UEven } else { pcf::PcfKind::UOdd };
                let (v, _) = pcf::pcf_real(kind, lambda.re, x)?;
                Ok(Complex::new(v, 0.0))
            } else {
                let (v, _) = pcf::pcf_complex_lambda(lambda, even, x)?;
                Ok(v)
            }
        }
    }
}

fn kernel_eval(kernel: JKernel, xi: f64) -> f64 {
    let s = 0.25 * xi * xi;
    match kernel {
        JKernel::J0Quarter => specfun::bessel_j(0, s),
        JKernel::J1OverXi => {
            if xi == 0.0 {
                0.0
            } else {
                specfun::bessel_j(1, s) / xi
            }
        }
    }
}

fn front_part(kernel: JKernel, ufunc: UFunc, lambda: Complex) -> Result<Complex> {
    let sample = |x: f64, take_im: bool| -> f64 {
        let v = u_eval(ufunc, lambda, x.max(1e-12)).unwrap_or(Complex::new(f64::NAN, f64::NAN));
        kernel_eval(kernel, x) * if take_im { v.im } else { v.re }
    };
    let re = quad::adaptive_gl(|x| sample(x, false), 0.0, Z_TAIL, 1e-11, 1e-4, 2_000_000)?.0;
    let im = quad::adaptive_gl(|x| sample(x, true), 0.0, Z_TAIL, 1e-11, 1e-4, 2_000_000)?.0;
    Ok(Complex::new(re, im))
}

/// Half-Hankel slow factor: κ-component with the e^{+is} (plus = true) or
/// e^{−is} phase removed, evaluated at complex ξ. The ξ−½ root uses the
/// principal branch, consistent on the right half-plane paths used here.
fn hankel_slow(kernel: JKernel, plus: bool, xi: Complex) -> Complex {
    let nu = match kernel {
        JKernel::J0Quarter => 0.0,
        JKernel::J1OverXi => 1.0,
    };
    let s = xi * xi * 0.25;
    let i = Complex::new(0.0, 1.0);
    let rot = if plus { i } else { -i };
    let mut sum = Complex::new(1.0, 0.0);
    let mut prev = 1.0f64;
    let mut pw = Complex::new(1.0, 0.0);
    for k in 1..24 {
        pw = pw * rot / s;
        let term = pw * bessel_asym_a(nu, k);
        if term.norm() > prev {
            break;
        }
        prev = term.norm();
        sum += term;
        if prev < 1e-18 {
            break;
        }
    }
    // ½ √(2/(πs)) e^{∓i(νπ/2 + π/4)} · Σ, with the extra 1/ξ for the J₁ kernel.
    let phase = -(nu * PI / 2.0 + PI / 4.0);
    let phase = if plus { phase } else { -phase };
    let mut v = 0.5 * (8.0 / PI).sqrt() / xi * Complex::new(0.0, phase).exp() * sum;
    if kernel == JKernel::J1OverXi {
        v = v / xi;
    }
    v
}

/// Slow recessive factor g₃ of u₃ = e^{−is}·g₃: g₃ = z^{−a}·₂F₀ with
/// z = iξ²/2, a = ¼ + iλ/2. `conj_type` gives the mirrored solution's
/// factor g₃c (parameters a* = ¼ − iλ/2, z* = −iξ²/2) with u₃c = e^{+is}·g₃c.
fn u3_slow(lambda: Complex, conj_type: bool, xi: Complex) -> Complex {
    let i = Complex::new(0.0, 1.0);
    let (a, z) = if conj_type {
        (Complex::new(0.25, 0.0) - i * lambda * 0.5, -i * xi * xi * 0.5)
    } else {
        (Complex::new(0.25, 0.0) + i * lambda * 0.5, i * xi * xi * 0.5)
    };
    let mut sum = Complex::new(1.0, 0.0);
    let mut term = Complex::new(1.0, 0.0);
    let mut prev = f64::INFINITY;
    for m in 0..40 {
        let mf = m as f64;
        term = term * (a + mf) * (a + 0.5 + mf) / ((mf + 1.0) * (-z));
        if term.norm() > prev {
            break;
        }
        prev = term.norm();
        sum += term;
        if prev < 1e-18 {
            break;
        }
    }
    (-a * z.ln()).exp() * sum
}

/// Decomposition coefficients u_j = α·u₃ + β·u₃c.
fn alpha_beta(ufunc: UFunc, lambda: Complex) -> Result<(Complex, Complex)> {
    let (a, b, a_c, b_c) = pcf::u3_connection(lambda)?;
    let det = a * b_c - b * a_c;
    if det.norm() < 1e-280 {
        return Err(Error::DegenerateSolution("u3/u3c basis degenerate".into()));
    }
    Ok(match ufunc {
        UFunc::U1 => (b_c / det, -b / det),
        UFunc::U2 => (-a_c / det, a / det),
        UFunc::U3 => (Complex::new(1.0, 0.0), Complex::new(0.0, 0.0)),
    })
}

fn tail_part(kernel: JKernel, ufunc: UFunc, lambda: Complex) -> Result<Complex> {
    let (alpha, beta) = alpha_beta(ufunc, lambda)?;
    let z = Z_TAIL;

    // DC pieces: hp·α·g₃ + hm·β·g₃c, closed-form power-log integrals.
    let dc = dc_tail(kernel, lambda, alpha, false, z)? + dc_tail(kernel, lambda, beta, true, z)?;

    // Oscillatory pieces on steepest-descent paths.
    let mut osc = Complex::new(0.0, 0.0);
    if beta.norm() > 0.0 {
        // e^{+iξ²/2}: hp·β·g₃c on ξ(τ) = √(Z² + 2iτ).
        let f = |tau: f64| -> Complex {
            let xi = Complex::new(z * z, 2.0 * tau).sqrt();
            hankel_slow(kernel, true, xi) * u3_slow(lambda, true, xi) / xi
        };
        let phase = Complex::new(0.0, 0.5 * z * z).exp();
        osc += phase * Complex::new(0.0, 1.0) * beta * laguerre_like(f)?;
    }
    {
        // e^{−iξ²/2}: hm·α·g₃ on ξ(τ) = √(Z² − 2iτ).
        let f = |tau: f64| -> Complex {
            let xi = Complex::new(z * z, -2.0 * tau).sqrt();
            hankel_slow(kernel, false, xi) * u3_slow(lambda, false, xi) / xi
        };
        let phase = Complex::new(0.0, -0.5 * z * z).exp();
        osc += phase * Complex::new(0.0, -1.0) * alpha * laguerre_like(f)?;
    }
    Ok(dc + osc)
}

/// ∫₀^∞ f(τ) e^{−τ} dτ by geometric panels (f slowly varying, algebraic).
fn laguerre_like<F: Fn(f64) -> Complex>(f: F) -> Result<Complex> {
    let edges = [0.0, 1.0, 3.0, 7.0, 15.0, 30.0, 50.0];
    let mut acc = Complex::new(0.0, 0.0);
    for w in edges.windows(2) {
        let re = quad::gl_fixed(|t| (f(t) * (-t).exp()).re, w[0], w[1], 40);
        let im = quad::gl_fixed(|t| (f(t) * (-t).exp()).im, w[0], w[1], 40);
        acc += Complex::new(re, im);
    }
    Ok(acc)
}

/// Closed-form ∫_Z^∞ of one DC product: coeff·ξ^{−1−2a}·(Hankel series ×
/// ₂F₀ series in w = ξ⁻²), integrated term by term.
fn dc_tail(kernel: JKernel, lambda: Complex, uj_coef: Complex, conj_type: bool, z: f64) -> Result<Complex> {
    if uj_coef.norm() == 0.0 {
        return Ok(Complex::new(0.0, 0.0));
    }
    let i = Complex::new(0.0, 1.0);
    let a = if conj_type {
        Complex::new(0.25, 0.0) - i * lambda * 0.5
    } else {
        Complex::new(0.25, 0.0) + i * lambda * 0.5
    };
    let nu = match kernel {
        JKernel::J0Quarter => 0.0,
        JKernel::J1OverXi => 1.0,
    };
    // Hankel slow series in w: Σ_k (±4i)^k a_k(ν) w^k (e^{−is} partner gets −i).
    let rot_h = if conj_type { Complex::new(0.0, -4.0) } else { Complex::new(0.0, 4.0) };
    let mut h_coefs = vec![Complex::new(1.0, 0.0)];
    for k in 1..14 {
        h_coefs.push(rot_h.powu(k as u32) * bessel_asym_a(nu, k));
    }
    // ₂F₀ series in w: terms (a)_m(a+½)_m/m!·(∓2i)^m... with z = ±iξ²/2,
    // −1/z = ±2i·w (g₃: +2i; g₃c: −2i).
    let rot_u = if conj_type { Complex::new(0.0, -2.0) } else { Complex::new(0.0, 2.0) };
    let mut u_coefs = vec![Complex::new(1.0, 0.0)];
    let mut t = Complex::new(1.0, 0.0);
    for m in 0..13 {
        let mf = m as f64;
        t = t * (a + mf) * (a + 0.5 + mf) * rot_u / (mf + 1.0);
        u_coefs.push(t);
    }
    // Prefactor: ½√(8/π) e^{∓i(νπ/2+π/4)} · (±i/2)^{−a} with
    // (±iξ²/2)^{−a} = e^{a ln2 ∓ iaπ/2} ξ^{−2a}, plus the J₁ kernel's 1/ξ.
    let sign = if conj_type { 1.0 } else { -1.0 };
    let phase = Complex::new(0.0, sign * (nu * PI / 2.0 + PI / 4.0)).exp();
    let z_pref = (a * Complex::new(std::f64::consts::LN_2, sign * PI / 2.0)).exp();
    let pref = 0.5 * (8.0 / PI).sqrt() * phase * z_pref * uj_coef;

    // Power of ξ in front of the w-series: ξ^{−1−2a} (and ξ^{−2} more for J₁ kernel).
    let base_pow = Complex::new(-1.0, 0.0) - 2.0 * a
        - match kernel {
            JKernel::J0Quarter => Complex::new(0.0, 0.0),
            JKernel::J1OverXi => Complex::new(2.0, 0.0),
        };

    // Convolve and integrate: ∫_Z^∞ ξ^{base−2j} dξ = −Z^{base+1−2j}/(base+1−2j).
    let mut total = Complex::new(0.0, 0.0);
    let mut prev_mag = f64::INFINITY;
    for j in 0..26usize {
        let mut dj = Complex::new(0.0, 0.0);
        for k in 0..h_coefs.len() {
            if j >= k && j - k < u_coefs.len() {
                dj += h_coefs[k] * u_coefs[j - k];
            }
        }
        let p = base_pow - 2.0 * j as f64;
        let integral = -((p + 1.0) * z.ln()).exp() / (p + 1.0);
        let term = dj * integral;
        let mag = term.norm();
        if j > 4 && mag > prev_mag {
            break;
        }
        prev_mag = mag;
        total += term;
        if mag < 1e-18 * total.norm().max(1e-30) {
            break;
        }
    }
    Ok(pref * total)
}
