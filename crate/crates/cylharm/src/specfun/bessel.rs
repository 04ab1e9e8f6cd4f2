//! Bessel J and modified Bessel I/K of integer order, real argument.
//!
//! Band structure (each band deliberately uses a different algorithm than
//! the brute-force oracles in `crate::oracle`):
//!
//! * J_n: ascending series (z ≤ 8), Bessel integral representation
//!   (1/π)∫₀^π cos(nθ − z sin θ) dθ by Gauss–Legendre (8 < z ≤ 17),
//!   Hankel asymptotics (z > 17).
//! * I_n: ascending series (positive terms, well conditioned everywhere)
//!   with an overflow guard.
//! * K_0/K_1: ascending log-series (z ≤ 2.5), inward ODE continuation from
//!   asymptotic data at z = 13 (2.5 < z < 13), asymptotics (z ≥ 13);
//!   K_n by upward recurrence.

use crate::error::{Error, Result};
use crate::ode;
use crate::quad;
use std::f64::consts::PI;

const EULER_GAMMA: f64 = 0.5772156649015328606;

/// J_n(z) for n ≥ 0, any real z. Absolute error ≤ ~1e-13 for |z| ≤ 200.
pub fn bessel_j(n: u32, z: f64) -> f64 {
    let az = z.abs();
    let sign = if z < 0.0 && n % 2 == 1 { -1.0 } else { 1.0 };
    let v = if az <= 8.0 {
        j_series(n, az)
    } else if az <= 17.0 {
        j_integral(n, az)
    } else {
        j_asymptotic(n, az)
    };
    sign * v
}

/// J₀(√t) continued to all real t through the entire series in t
/// (equals I₀(√−t) for t < 0). Used by Riemann-function kernels where a
/// factorized squared distance may be negative.
pub fn bessel_j0_sq(t: f64) -> f64 {
    if t.abs() <= 64.0 {
        let mut term = 1.0;
        let mut sum = 1.0;
        for m in 1..200 {
            let mf = m as f64;
            term *= -t / (4.0 * mf * mf);
            sum += term;
            if term.abs() < 1e-17 * sum.abs().max(1.0) {
                break;
            }
        }
        sum
    } else if t > 0.0 {
        bessel_j(0, t.sqrt())
    } else {
        // I₀ series never cancels; reuse via bessel_i.
        bessel_i(0, (-t).sqrt()).expect("I0 in range")
    }
}

fn j_series(n: u32, z: f64) -> f64 {
    // (z/2)^n/n! Σ (−z²/4)^m / (m! (n+m)!) with Kahan accumulation.
    let zh = 0.5 * z;
    let mut lead = 1.0;
    for k in 1..=n {
        lead *= zh / k as f64;
    }
    let q = -zh * zh;
    let mut term = lead;
    let mut acc = quad::Accum::new();
    acc.add(term);
    for m in 1..200u32 {
        term *= q / (m as f64 * (n + m) as f64);
        acc.add(term);
        if term.abs() < 1e-18 * acc.value().abs().max(1e-30) {
            break;
        }
    }
    acc.value()
}

fn j_integral(n: u32, z: f64) -> f64 {
    // (1/π) ∫₀^π cos(nθ − z sin θ) dθ; integrand entire, GL-80 is
    // superexponentially convergent at these phases (≤ 17 rad).
    let nf = n as f64;
    quad::gl_fixed(|theta: f64| (nf * theta - z * theta.sin()).cos(), 0.0, PI, 80) / PI
}

/// Coefficient a_k(ν) = ∏_{j=1..k} (4ν² − (2j−1)²) / (k! 8^k) of the
/// Hankel/modified asymptotic series.
pub(crate) fn bessel_asym_a(nu: f64, k: usize) -> f64 {
    let mu = 4.0 * nu * nu;
    let mut v = 1.0;
    for j in 1..=k {
        let odd = (2 * j - 1) as f64;
        v *= (mu - odd * odd) / (8.0 * j as f64);
    }
    v
}

fn j_asymptotic(n: u32, z: f64) -> f64 {
    let nf = n as f64;
    let chi = z - (2.0 * nf + 1.0) * PI / 4.0;
    let mut p = 0.0;
    let mut q = 0.0;
    let mut prev = f64::INFINITY;
    for k in 0..30 {
        let a = bessel_asym_a(nf, k) / z.powi(k as i32);
        if a.abs() > prev {
            break; // past the optimal truncation point
        }
        prev = a.abs();
        let s = if (k / 2) % 2 == 0 { 1.0 } else { -1.0 };
        if k % 2 == 0 {
            p += s * a;
        } else {
            q += s * a;
        }
        if a.abs() < 1e-17 {
            break;
        }
    }
    (2.0 / (PI * z)).sqrt() * (p * chi.cos() - q * chi.sin())
}

/// I_n(z) for z ≥ 0 via the ascending series (all terms positive).
pub fn bessel_i(n: u32, z: f64) -> Result<f64> {
    if z < 0.0 {
        return Err(Error::Domain(format!("bessel_i needs z ≥ 0, got {z}")));
    }
    if z > 700.0 {
        return Err(Error::Overflow(format!("bessel_i({n}, {z}) exceeds f64 range")));
    }
    let zh = 0.5 * z;
    let mut lead = 1.0;
    for k in 1..=n {
        lead *= zh / k as f64;
        if !lead.is_finite() {
            return Err(Error::Overflow(format!("bessel_i leading factor at n={n}")));
        }
    }
    let q = zh * zh;
    let mut term = lead;
    let mut sum = term;
    for m in 1..500u32 {
        term *= q / (m as f64 * (n + m) as f64);
        sum += term;
        if term < 1e-17 * sum {
            return Ok(sum);
        }
    }
    Err(Error::NonConvergence(format!("bessel_i series at z={z}")))
}

/// K_n(z) for z > 0.
pub fn bessel_k(n: u32, z: f64) -> Result<f64> {
    if z <= 0.0 {
        return Err(Error::Domain(format!("bessel_k needs z > 0, got {z}")));
    }
    let (k0, k1) = k01(z)?;
    match n {
        0 => Ok(k0),
        1 => Ok(k1),
        _ => {
            let mut km = k0;
            let mut k = k1;
            for j in 1..n {
                let next = km + (2.0 * j as f64 / z) * k;
                if !next.is_finite() {
                    return Err(Error::Overflow(format!("bessel_k({n}, {z}) recurrence")));
                }
                km = k;
                k = next;
            }
            Ok(k)
        }
    }
}

/// (I_n, I_n′) for radial-function initial data.
pub(crate) fn bessel_i_with_derivative(n: u32, z: f64) -> Result<(f64, f64)> {
    let i_n = bessel_i(n, z)?;
    let d = if n == 0 {
        bessel_i(1, z)?
    } else {
        0.5 * (bessel_i(n - 1, z)? + bessel_i(n + 1, z)?)
    };
    Ok((i_n, d))
}

/// (K_n, K_n′).
pub(crate) fn bessel_k_with_derivative(n: u32, z: f64) -> Result<(f64, f64)> {
    let k_n = bessel_k(n, z)?;
    let d = if n == 0 {
        -bessel_k(1, z)?
    } else {
        -0.5 * (bessel_k(n - 1, z)? + bessel_k(n + 1, z)?)
    };
    Ok((k_n, d))
}

const K_ODE_ANCHOR: f64 = 13.0;
const K_SERIES_EDGE: f64 = 2.5;

fn k01(z: f64) -> Result<(f64, f64)> {
    if z <= K_SERIES_EDGE {
        Ok((k0_series(z), k1_series(z)))
    } else if z < K_ODE_ANCHOR {
        k01_ode(z)
    } else {
        Ok((k_asymptotic(0, z), k_asymptotic(1, z)))
    }
}

fn harmonic(k: u32) -> f64 {
    (1..=k).map(|j| 1.0 / j as f64).sum()
}

fn k0_series(z: f64) -> f64 {
    let l = (0.5 * z).ln() + EULER_GAMMA;
    let q = 0.25 * z * z;
    let mut term = 1.0;
    let mut sum = 0.0;
    let mut i0 = 1.0;
    for k in 1..60u32 {
        term *= q / ((k * k) as f64);
        i0 += term;
        sum += term * harmonic(k);
        if term < 1e-18 * i0 {
            break;
        }
    }
    -l * i0 + sum
}

fn k1_series(z: f64) -> f64 {
    let l = (0.5 * z).ln();
    let q = 0.25 * z * z;
    // I₁(z) and Σ (ψ(k+1)+ψ(k+2)) (z²/4)^k / (k! (k+1)!)
    let mut i1 = 1.0;
    let mut term = 1.0;
    let mut psi_sum = 2.0 * (-EULER_GAMMA) + 1.0; // k = 0: ψ(1)+ψ(2)
    let mut sum = psi_sum;
    for k in 1..60u32 {
        term *= q / ((k * (k + 1)) as f64);
        i1 += term;
        psi_sum = -2.0 * EULER_GAMMA + harmonic(k) + harmonic(k + 1);
        sum += term * psi_sum;
        if term < 1e-18 * i1 {
            break;
        }
    }
    let i1_val = 0.5 * z * i1;
    1.0 / z + l * i1_val - 0.25 * z * sum
}

fn k_asymptotic(n: u32, z: f64) -> f64 {
    let nf = n as f64;
    let mut s = 0.0;
    let mut prev = f64::INFINITY;
    for k in 0..40 {
        let t = bessel_asym_a(nf, k) / z.powi(k as i32);
        if t.abs() > prev {
            break;
        }
        prev = t.abs();
        s += t;
        if t.abs() < 1e-18 {
            break;
        }
    }
    (PI / (2.0 * z)).sqrt() * (-z).exp() * s
}

/// Inward ODE continuation for K₀, K₁ across the band where neither the
/// series nor the asymptotics reach full precision. K grows inward, so the
/// integration follows the dominant solution and is stable. The two
/// components are propagated jointly through the first-order system built
/// from K₀′ = −K₁ and K₁′ = −K₀ − K₁/z.
fn k01_ode(z: f64) -> Result<(f64, f64)> {
    let y0 = [k_asymptotic(0, K_ODE_ANCHOR), k_asymptotic(1, K_ODE_ANCHOR)];
    let f = |t: f64, y: ode::State<f64>| [-y[1], -y[0] - y[1] / t];
    let y = ode::integrate_to(f, K_ODE_ANCHOR, z, y0, 1e-13, 1e-290)?;
    Ok((y[0], y[1]))
}
