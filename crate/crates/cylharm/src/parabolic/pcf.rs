//! Solutions of the modified parabolic cylinder equation
//!
//!   −u″ − ¼x²u = λu,
//!
//! normalized by u₁(λ,0) = u₂′(λ,0) = 1, u₁′(λ,0) = u₂(λ,0) = 0, together
//! with the recessive combination
//!
//!   u₃(λ,x) = e^{−ix²/4} U(¼+iλ/2, ½, ix²/2)
//!           = √π/Γ(¾+iλ/2)·u₁ − (1+i)√π/Γ(¼+iλ/2)·u₂.
//!
//! Restricted to a ray x = x̂·s the equation becomes v″ = (A + B s²) v with
//! constant A = −x̂²λ, B = −x̂⁴/4, which is what the engine integrates:
//!
//! * Taylor series of v while the cancellation budget
//!   ∫₀^t √(|A| + |B|s²) ds stays small (the sum cancels like e^(that
//!   integral), so the budget caps the digits lost);
//! * adaptive Runge–Kutta continuation beyond.
//!
//! On the real and imaginary axes the state is real and the engine runs in
//! f64; for complex λ (Titchmarsh–Weyl half-plane work) it runs over
//! complex state.

use crate::error::{Error, Result};
use crate::ode;
use crate::specfun::{self, gamma};
use crate::Complex;
use std::f64::consts::PI;
use std::ops::Mul;

/// Digits-loss budget of the Taylor branch: the series cancels like
/// e^Φ, so Φ ≤ 12 keeps ~10½ significant digits.
const CANCEL_BUDGET: f64 = 12.0;

/// Which real-form solution to evaluate.
///
/// U-kinds solve v″ = −(λ + t²/4)v (values of u_j on the real axis);
/// W-kinds solve v″ = (λ − t²/4)v, the real forms on the imaginary axis:
/// u₁(λ, iy) = w₁(λ, y) and u₂(λ, iy) = i·w₂(λ, y).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum PcfKind {
    UEven,
    UOdd,
    WEven,
    WOdd,
}

impl PcfKind {
    fn is_even(self) -> bool {
        matches!(self, PcfKind::UEven | PcfKind::WEven)
    }

    fn a_coef(self, lambda: f64) -> f64 {
        match self {
            PcfKind::UEven | PcfKind::UOdd => -lambda,
            PcfKind::WEven | PcfKind::WOdd => lambda,
        }
    }
}

/// Φ(t) = ∫₀^t √(|A| + |B| s²) ds, the cancellation exponent.
fn cancel_exponent(a_mag: f64, b_mag: f64, t: f64) -> f64 {
    // Closed form: t√(a+bt²)/2 + a/(2√b)·asinh(t√(b/a)); the a → 0 and
    // b → 0 limits are handled directly.
    if t == 0.0 {
        return 0.0;
    }
    if b_mag == 0.0 {
        return a_mag.sqrt() * t;
    }
    let root = (a_mag + b_mag * t * t).sqrt();
    if a_mag == 0.0 {
        return 0.5 * b_mag.sqrt() * t * t;
    }
    0.5 * t * root + 0.5 * a_mag / b_mag.sqrt() * (t * (b_mag / a_mag).sqrt()).asinh()
}

/// Largest t the Taylor branch may reach for stated |A|, |B|.
fn taylor_reach(a_mag: f64, b_mag: f64) -> f64 {
    let mut lo = 0.0;
    let mut hi = 64.0;
    if cancel_exponent(a_mag, b_mag, hi) <= CANCEL_BUDGET {
        return hi;
    }
    for _ in 0..60 {
        let mid = 0.5 * (lo + hi);
        if cancel_exponent(a_mag, b_mag, mid) <= CANCEL_BUDGET {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// Taylor sum of v″ = (A + Bs²)v at |t| ≤ taylor_reach, returning (v, v′).
fn taylor_sum<S>(a: S, b: S, even: bool, t: f64) -> Result<(S, S)>
where
    S: ode::Scalar + Mul<Output = S>,
{
    if t == 0.0 {
        return Ok(if even {
            (S::from_re(1.0), S::zero())
        } else {
            (S::zero(), S::from_re(1.0))
        });
    }
    let t2 = t * t;
    // Term recurrence: T_{m+2}·(m+2)(m+1) = A t² T_m + B t⁴ T_{m−2}.
    let (mut m, mut t_m) = if even {
        (0usize, S::from_re(1.0))
    } else {
        (1usize, S::from_re(t))
    };
    let mut t_prev = S::zero(); // T_{m−2}
    let mut val = t_m;
    let mut der = t_m.scale(m as f64 / t);
    let mut small_run = 0;
    for _ in 0..600 {
        let next = (a.scale(t2) * t_m + b.scale(t2 * t2) * t_prev).scale(1.0 / (((m + 2) * (m + 1)) as f64));
        t_prev = t_m;
        t_m = next;
        m += 2;
        val = val + t_m;
        der = der + t_m.scale(m as f64 / t);
        let vn = val.norm().max(1e-290);
        if t_m.norm() <= 1e-18 * vn {
            small_run += 1;
            if small_run >= 3 {
                return Ok((val, der));
            }
        } else {
            small_run = 0;
        }
    }
    Err(Error::NonConvergence(format!(
        "parabolic cylinder Taylor series at t = {t}"
    )))
}

/// Evaluate (v, v′) at each of `ts` (ascending, nonnegative) for
/// v″ = (A + Bs²)v with the stated parity ICs at 0.
fn eval_ray<S>(a: S, b: S, even: bool, ts: &[f64]) -> Result<Vec<(S, S)>>
where
    S: ode::Scalar + Mul<Output = S>,
{
    let reach = taylor_reach(a.norm(), b.norm());
    let mut out = Vec::with_capacity(ts.len());
    let split = ts.partition_point(|&t| t <= reach);
    for &t in &ts[..split] {
        out.push(taylor_sum(a, b, even, t)?);
    }
    if split < ts.len() {
        // Hand off to RK at the Taylor edge; collect the rest in one pass.
        let t0 = reach.min(ts[split]);
        let (v0, d0) = taylor_sum(a, b, even, t0)?;
        let rhs = move |s: f64, y: ode::State<S>| [y[1], (a + b.scale(s * s)) * y[0]];
        let states = ode::integrate_collect(rhs, t0, &ts[split..], [v0, d0], 1e-12, 1e-250)?;
        for y in states {
            if !(y[0].norm().is_finite() && y[1].norm().is_finite()) {
                return Err(Error::Overflow("parabolic cylinder continuation".into()));
            }
            out.push((y[0], y[1]));
        }
    }
    Ok(out)
}

/// Real-form evaluation of one of the four solution kinds at any real t.
pub(crate) fn pcf_real(kind: PcfKind, lambda: f64, t: f64) -> Result<(f64, f64)> {
    let v = pcf_real_many(kind, lambda, &[t.abs()])?;
    Ok(reflect(kind, t, v[0].0, v[0].1))
}

fn reflect(kind: PcfKind, t: f64, val: f64, der: f64) -> (f64, f64) {
    if t >= 0.0 {
        (val, der)
    } else if kind.is_even() {
        (val, -der)
    } else {
        (-val, der)
    }
}

/// Batch variant: `ts` ascending and nonnegative.
pub(crate) fn pcf_real_many(kind: PcfKind, lambda: f64, ts: &[f64]) -> Result<Vec<(f64, f64)>> {
    debug_assert!(ts.windows(2).all(|w| w[0] <= w[1]));
    debug_assert!(ts.iter().all(|&t| t >= 0.0));
    eval_ray(kind.a_coef(lambda), -0.25, kind.is_even(), ts)
}

/// u₁ (even = true) or u₂ at real x ≥ 0 with complex spectral parameter.
pub(crate) fn pcf_complex_lambda(lambda: Complex, even: bool, t: f64) -> Result<(Complex, Complex)> {
    let v = eval_ray::<Complex>(-lambda, Complex::new(-0.25, 0.0), even, &[t.abs()])?;
    let (mut val, mut der) = v[0];
    if t < 0.0 {
        if even {
            der = -der;
        } else {
            val = -val;
        }
    }
    Ok((val, der))
}

fn ray_decompose(x: Complex) -> (Complex, f64) {
    let s = x.norm();
    if s == 0.0 {
        (Complex::new(1.0, 0.0), 0.0)
    } else {
        (x / s, s)
    }
}

/// u₁(λ, x): the even solution, entire in x. Real λ.
pub fn u1(lambda: f64, x: Complex) -> Result<Complex> {
    if x.im == 0.0 {
        let (v, _) = pcf_real(PcfKind::UEven, lambda, x.re)?;
        return Ok(Complex::new(v, 0.0));
    }
    if x.re == 0.0 {
        let (v, _) = pcf_real(PcfKind::WEven, lambda, x.im)?;
        return Ok(Complex::new(v, 0.0));
    }
    let (unit, s) = ray_decompose(x);
    let u2c = unit * unit;
    let (v, _) = eval_ray(-u2c * lambda, -u2c * u2c * 0.25, true, &[s])?[0];
    Ok(v)
}

/// u₂(λ, x): the odd solution with u₂′(λ,0) = 1. Real λ.
pub fn u2(lambda: f64, x: Complex) -> Result<Complex> {
    if x.im == 0.0 {
        let (v, _) = pcf_real(PcfKind::UOdd, lambda, x.re)?;
        return Ok(Complex::new(v, 0.0));
    }
    if x.re == 0.0 {
        // u₂(λ, iy) = i·w₂(λ, y).
        let (v, _) = pcf_real(PcfKind::WOdd, lambda, x.im)?;
        return Ok(Complex::new(0.0, v));
    }
    let (unit, s) = ray_decompose(x);
    let u2c = unit * unit;
    let (v, _) = eval_ray(-u2c * lambda, -u2c * u2c * 0.25, false, &[s])?[0];
    Ok(unit * v)
}

/// Connection coefficients of u₃ = A·u₁ + B·u₂ and of the conjugate-type
/// second recessive solution ū₃ = Ā·u₁ + B̄·u₂ (parameters mirrored for
/// complex λ).
pub(crate) fn u3_connection(lambda: Complex) -> Result<(Complex, Complex, Complex, Complex)> {
    let i = Complex::new(0.0, 1.0);
    let sqrt_pi = PI.sqrt();
    let a = sqrt_pi / gamma(Complex::new(0.75, 0.0) + i * lambda * 0.5)?;
    let b = -(1.0 + i) * sqrt_pi / gamma(Complex::new(0.25, 0.0) + i * lambda * 0.5)?;
    let a_c = sqrt_pi / gamma(Complex::new(0.75, 0.0) - i * lambda * 0.5)?;
    let b_c = -(1.0 - i) * sqrt_pi / gamma(Complex::new(0.25, 0.0) - i * lambda * 0.5)?;
    Ok((a, b, a_c, b_c))
}

/// Switch abscissa between the u₁/u₂-combination route and the recessive
/// asymptotic series for u₃ (|z| = x²/2 = 28 at x ≈ 7.48).
const U3_ASYM_X: f64 = 7.48;

/// u₃(λ, x) for x > 0, the solution square-integrable at +∞ for Im λ < 0.
pub fn u3(lambda: f64, x: f64) -> Result<Complex> {
    if !(x > 0.0) {
        return Err(Error::Domain(format!("u3 requires x > 0, got {x}")));
    }
    u3_complex_lambda(Complex::new(lambda, 0.0), x)
}

/// u₃ with complex spectral parameter (used by the half-plane integral
/// identities).
pub(crate) fn u3_complex_lambda(lambda: Complex, x: f64) -> Result<Complex> {
    if x >= U3_ASYM_X {
        return Ok(u3_asymptotic(lambda, x));
    }
    let (a, b, _, _) = u3_connection(lambda)?;
    if lambda.im == 0.0 {
        let (v1, _) = pcf_real(PcfKind::UEven, lambda.re, x)?;
        let (v2, _) = pcf_real(PcfKind::UOdd, lambda.re, x)?;
        return Ok(a * v1 + b * v2);
    }
    let (v1, _) = eval_ray::<Complex>(-lambda, Complex::new(-0.25, 0.0), true, &[x])?[0];
    let (v2, _) = eval_ray::<Complex>(-lambda, Complex::new(-0.25, 0.0), false, &[x])?[0];
    Ok(a * v1 + b * v2)
}

/// Recessive asymptotic evaluation u₃ = e^{−ix²/4} (ix²/2)^{−a} ₂F₀(…),
/// full double precision for x ≥ U3_ASYM_X.
pub(crate) fn u3_asymptotic(lambda: Complex, x: f64) -> Complex {
    let i = Complex::new(0.0, 1.0);
    let a = Complex::new(0.25, 0.0) + i * lambda * 0.5;
    let z = i * (0.5 * x * x);
    let (u, _) = specfun::kummer_u_asym_parts(a, Complex::new(0.5, 0.0), z);
    (-i * (0.25 * x * x)).exp() * u
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{ode_shoot, ShootEquation};
    use crate::specfun::kummer_u;
    use crate::specfun::EvalPolicy;

    fn c(re: f64, im: f64) -> Complex {
        Complex::new(re, im)
    }

    #[test]
    fn initial_conditions() {
        for &lam in &[-2.0, 0.0, 0.7, 5.0] {
            assert_eq!(u1(lam, c(0.0, 0.0)).unwrap(), c(1.0, 0.0));
            assert_eq!(u2(lam, c(0.0, 0.0)).unwrap(), c(0.0, 0.0));
            let (_, d1) = pcf_real(PcfKind::UEven, lam, 0.0).unwrap();
            let (_, d2) = pcf_real(PcfKind::UOdd, lam, 0.0).unwrap();
            assert_eq!(d1, 0.0);
            assert_eq!(d2, 1.0);
        }
    }

    #[test]
    fn parity() {
        let lam = 1.3;
        let x = c(0.8, 0.0);
        assert_eq!(u1(lam, -x).unwrap(), u1(lam, x).unwrap());
        assert_eq!(u2(lam, -x).unwrap(), -u2(lam, x).unwrap());
    }

    #[test]
    fn shooting_oracle_agreement() {
        // u1(0.7, 1.3) and u2 against adaptive RK from the initial data.
        let lam = 0.7;
        let r1 = ode_shoot(ShootEquation::ParabolicSpectral { lambda: lam }, (1.0, 0.0), 1.3).unwrap();
        let v1 = u1(lam, c(1.3, 0.0)).unwrap();
        assert!((v1.re - r1.value.0).abs() < 1e-9, "{} vs {}", v1.re, r1.value.0);
        let r2 = ode_shoot(ShootEquation::ParabolicSpectral { lambda: lam }, (0.0, 1.0), 1.3).unwrap();
        let v2 = u2(lam, c(1.3, 0.0)).unwrap();
        assert!((v2.re - r2.value.0).abs() < 1e-9);
    }

    #[test]
    fn shooting_oracle_beyond_taylor() {
        // Continuation region: x = 9.
        let lam = -1.2;
        let r = ode_shoot(ShootEquation::ParabolicSpectral { lambda: lam }, (1.0, 0.0), 9.0).unwrap();
        let v = u1(lam, c(9.0, 0.0)).unwrap();
        assert!(
            (v.re - r.value.0).abs() < 1e-8 * (1.0 + r.value.0.abs()),
            "{} vs {}",
            v.re,
            r.value.0
        );
    }

    #[test]
    fn imaginary_axis_consistency() {
        // General-ray complex path must reproduce the specialized real
        // w-forms on the imaginary axis.
        let lam = 0.9;
        for &y in &[0.4, 2.0, 5.0] {
            let via_w = u1(lam, c(0.0, y)).unwrap();
            let (unit, s) = ray_decompose(c(1e-300, y));
            let u2c = unit * unit;
            let general = eval_ray(-u2c * lam, -u2c * u2c * 0.25, true, &[s]).unwrap()[0].0;
            assert!((via_w - general).norm() < 1e-9 * via_w.norm().max(1.0), "y={y}");
        }
    }

    #[test]
    fn ode_residual_finite_difference() {
        // −u″ − ¼x²u = λu with u″ from 5-point differences.
        let lam = 0.6;
        let h = 1e-3;
        for &x in &[0.7, 3.0, 8.5] {
            let u = |t: f64| u1(lam, c(t, 0.0)).unwrap().re;
            let upp = (-u(x + 2.0 * h) + 16.0 * u(x + h) - 30.0 * u(x) + 16.0 * u(x - h) - u(x - 2.0 * h))
                / (12.0 * h * h);
            let res = -upp - 0.25 * x * x * u(x) - lam * u(x);
            assert!(res.abs() < 1e-6 * (1.0 + u(x).abs()), "x={x}: residual {res}");
        }
    }

    #[test]
    fn u3_combination_matches_kummer_u() {
        // Both routes of the defining identity at λ = 0.5, x = 2.
        let lam = 0.5;
        let x = 2.0f64;
        let via_comb = u3(lam, x).unwrap();
        let i = c(0.0, 1.0);
        let a = c(0.25, 0.0) + i * lam * 0.5;
        let z = i * (0.5 * x * x);
        let direct = (-i * (0.25 * x * x)).exp()
            * kummer_u(a, c(0.5, 0.0), z, &EvalPolicy::default()).unwrap();
        assert!((via_comb - direct).norm() < 1e-9 * direct.norm(), "{via_comb} vs {direct}");
    }

    #[test]
    fn u3_asymptotic_joins_combination() {
        let lam = -0.8;
        for &x in &[7.0, 7.9] {
            let comb = {
                let (a, b, _, _) = u3_connection(c(lam, 0.0)).unwrap();
                let (v1, _) = pcf_real(PcfKind::UEven, lam, x).unwrap();
                let (v2, _) = pcf_real(PcfKind::UOdd, lam, x).unwrap();
                a * v1 + b * v2
            };
            let asym = u3_asymptotic(c(lam, 0.0), x);
            assert!((comb - asym).norm() < 1e-9 * comb.norm(), "x={x}: {comb} vs {asym}");
        }
    }

    #[test]
    fn u3_decay_rate() {
        // |u3(0,x)|·x^{1/2} bounded and slowly varying on [10, 100].
        let mut vals = Vec::new();
        let mut x = 10.0;
        while x <= 100.0 {
            let v = u3(0.0, x).unwrap().norm() * x.sqrt();
            vals.push(v);
            x *= 1.3;
        }
        let hi = vals.iter().cloned().fold(f64::MIN, f64::max);
        let lo = vals.iter().cloned().fold(f64::MAX, f64::min);
        assert!(hi / lo < 1.05, "amplitude drift {lo}..{hi}");
    }

    #[test]
    fn u3_square_integrable_proxy() {
        // u3(λ,·) ∈ L²(0,∞) holds for Im λ < 0 (at real λ, |u3|² ~ C/x and
        // the integral diverges logarithmically — the decay fit above is
        // the real-λ content). With λ = −2i the fit gives |u3| ~ C·x^{−5/2},
        // so Cauchy increments of ∫|u3|² shrink like X^{−4}: check they are
        // below 1e-6 once X ≥ 30.
        let lam = c(0.0, -2.0);
        let seg = |a: f64, b: f64| {
            crate::quad::adaptive_gl(
                |x| u3_complex_lambda(lam, x).unwrap().norm_sqr(),
                a,
                b,
                1e-8,
                1e-16,
                4_000_000,
            )
            .unwrap()
            .0
        };
        let inc1 = seg(30.0, 60.0);
        let inc2 = seg(60.0, 120.0);
        assert!(inc1 < 1e-6, "increment [30,60] = {inc1}");
        assert!(inc2 < inc1, "increments must shrink: {inc2} vs {inc1}");
    }
}
