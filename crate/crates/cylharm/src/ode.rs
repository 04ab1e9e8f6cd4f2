//! Adaptive Dormand–Prince 5(4) integration for the second-order linear
//! equations this crate meets (parabolic cylinder, Mathieu, modified
//! Mathieu, modified Bessel), over real or complex state.

use crate::error::{Error, Result};
use crate::Complex;

/// Scalar over which an ODE state may live: `f64` or [`Complex`].
pub trait Scalar:
    Copy
    + std::ops::Add<Output = Self>
    + std::ops::Sub<Output = Self>
    + std::ops::Mul<Output = Self>
    + std::ops::Neg<Output = Self>
    + std::fmt::Debug
{
    fn zero() -> Self;
    fn from_re(x: f64) -> Self;
    fn scale(self, k: f64) -> Self;
    fn norm(self) -> f64;
}

impl Scalar for f64 {
    fn zero() -> Self {
        0.0
    }
    fn from_re(x: f64) -> Self {
        x
    }
    fn scale(self, k: f64) -> Self {
        self * k
    }
    fn norm(self) -> f64 {
        self.abs()
    }
}

impl Scalar for Complex {
    fn zero() -> Self {
        Complex::new(0.0, 0.0)
    }
    fn from_re(x: f64) -> Self {
        Complex::new(x, 0.0)
    }
    fn scale(self, k: f64) -> Self {
        self * k
    }
    fn norm(self) -> f64 {
        num_complex::ComplexFloat::abs(self)
    }
}

/// Two-component state (u, u′).
pub type State<T> = [T; 2];

const A: [[f64; 6]; 6] = [
    [1.0 / 5.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    [3.0 / 40.0, 9.0 / 40.0, 0.0, 0.0, 0.0, 0.0],
    [44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0, 0.0, 0.0, 0.0],
    [
        19372.0 / 6561.0,
        -25360.0 / 2187.0,
        64448.0 / 6561.0,
        -212.0 / 729.0,
        0.0,
        0.0,
    ],
    [
        9017.0 / 3168.0,
        -355.0 / 33.0,
        46732.0 / 5247.0,
        49.0 / 176.0,
        -5103.0 / 18656.0,
        0.0,
    ],
    [
        35.0 / 384.0,
        0.0,
        500.0 / 1113.0,
        125.0 / 192.0,
        -2187.0 / 6784.0,
        11.0 / 84.0,
    ],
];
const B5: [f64; 7] = [
    35.0 / 384.0,
    0.0,
    500.0 / 1113.0,
    125.0 / 192.0,
    -2187.0 / 6784.0,
    11.0 / 84.0,
    0.0,
];
const B4: [f64; 7] = [
    5179.0 / 57600.0,
    0.0,
    7571.0 / 16695.0,
    393.0 / 640.0,
    -92097.0 / 339200.0,
    187.0 / 2100.0,
    1.0 / 40.0,
];

fn axpy<T: Scalar>(y: State<T>, k: &[State<T>], coeff: &[f64], h: f64) -> State<T> {
    let mut out = y;
    for (ki, c) in k.iter().zip(coeff.iter()) {
        if *c != 0.0 {
            out[0] = out[0] + ki[0].scale(c * h);
            out[1] = out[1] + ki[1].scale(c * h);
        }
    }
    out
}

/// Integrate y′ = f(t, y) from `t0` to `t1` (either direction), reporting
/// the state at each of `t_out` (which must be monotone from t0 towards
/// t1). Returns the collected states.
pub fn integrate_collect<T: Scalar, F: FnMut(f64, State<T>) -> State<T>>(
    mut f: F,
    t0: f64,
    t_out: &[f64],
    y0: State<T>,
    rel_tol: f64,
    abs_tol: f64,
) -> Result<Vec<State<T>>> {
    let mut results = Vec::with_capacity(t_out.len());
    let mut t = t0;
    let mut y = y0;
    for &target in t_out {
        y = integrate_to(&mut f, t, target, y, rel_tol, abs_tol)?;
        t = target;
        results.push(y);
    }
    Ok(results)
}

/// Integrate from `t0` to `t1`, returning the final state.
pub fn integrate_to<T: Scalar, F: FnMut(f64, State<T>) -> State<T>>(
    mut f: F,
    t0: f64,
    t1: f64,
    y0: State<T>,
    rel_tol: f64,
    abs_tol: f64,
) -> Result<State<T>> {
    if t0 == t1 {
        return Ok(y0);
    }
    let dir = (t1 - t0).signum();
    let span = (t1 - t0).abs();
    let mut t = t0;
    let mut y = y0;
    let mut h = (span * 1e-2).min(0.1).max(1e-8) * dir;
    let mut k: [State<T>; 7] = [[T::zero(), T::zero()]; 7];
    let max_steps = 4_000_000usize;

    for _step in 0..max_steps {
        if (t - t1).abs() < 1e-300 || (dir > 0.0 && t >= t1) || (dir < 0.0 && t <= t1) {
            return Ok(y);
        }
        if (dir > 0.0 && t + h > t1) || (dir < 0.0 && t + h < t1) {
            h = t1 - t;
        }
        k[0] = f(t, y);
        for i in 0..5 {
            let yi = axpy(y, &k[..=i], &A[i][..=i], h);
            k[i + 1] = f(t + h * A_C[i], yi);
        }
        let y5 = axpy(y, &k[..6], &A[5], h);
        k[6] = f(t + h, y5);

        let mut y_next = y;
        let mut y_low = y;
        for i in 0..7 {
            if B5[i] != 0.0 {
                y_next[0] = y_next[0] + k[i][0].scale(B5[i] * h);
                y_next[1] = y_next[1] + k[i][1].scale(B5[i] * h);
            }
            if B4[i] != 0.0 {
                y_low[0] = y_low[0] + k[i][0].scale(B4[i] * h);
                y_low[1] = y_low[1] + k[i][1].scale(B4[i] * h);
            }
        }
        let scale0 = abs_tol + rel_tol * y_next[0].norm().max(y[0].norm());
        let scale1 = abs_tol + rel_tol * y_next[1].norm().max(y[1].norm());
        let err = ((y_next[0] - y_low[0]).norm() / scale0).max((y_next[1] - y_low[1]).norm() / scale1);

        if err <= 1.0 || h.abs() <= 1e-13 * (1.0 + t.abs()) {
            t += h;
            y = y_next;
        }
        let factor = if err > 0.0 {
            (0.9 * err.powf(-0.2)).clamp(0.2, 5.0)
        } else {
            5.0
        };
        h *= factor;
        if !h.is_finite() || h == 0.0 {
            return Err(Error::NonConvergence("ODE step size degenerated".into()));
        }
    }
    Err(Error::NonConvergence(format!(
        "ODE integration exceeded step budget between {t0} and {t1}"
    )))
}

const A_C: [f64; 5] = [1.0 / 5.0, 3.0 / 10.0, 4.0 / 5.0, 8.0 / 9.0, 1.0];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn harmonic_oscillator() {
        // u″ = −u from (1, 0): u(t) = cos t.
        let f = |_t: f64, y: State<f64>| [y[1], -y[0]];
        let y = integrate_to(f, 0.0, 10.0, [1.0, 0.0], 1e-12, 1e-14).unwrap();
        assert!((y[0] - (10.0f64).cos()).abs() < 1e-10, "{:?}", y);
        assert!((y[1] + (10.0f64).sin()).abs() < 1e-10);
    }

    #[test]
    fn backward_integration() {
        let f = |_t: f64, y: State<f64>| [y[1], -y[0]];
        let y = integrate_to(f, 10.0, 0.0, [(10.0f64).cos(), -(10.0f64).sin()], 1e-12, 1e-14).unwrap();
        assert!((y[0] - 1.0).abs() < 1e-10);
        assert!(y[1].abs() < 1e-10);
    }

    #[test]
    fn complex_state() {
        // u′ = i·u: u(t) = e^{it}.
        let i = Complex::new(0.0, 1.0);
        let f = move |_t: f64, y: State<Complex>| [y[0] * i, Complex::new(0.0, 0.0)];
        let y = integrate_to(f, 0.0, 3.0, [Complex::new(1.0, 0.0), Complex::new(0.0, 0.0)], 1e-12, 1e-14)
            .unwrap();
        let exact = (i * 3.0).exp();
        assert!((y[0] - exact).norm() < 1e-10);
    }

    #[test]
    fn collect_monotone() {
        let f = |_t: f64, y: State<f64>| [y[1], -y[0]];
        let out = integrate_collect(f, 0.0, &[1.0, 2.0, 3.0], [1.0, 0.0], 1e-12, 1e-14).unwrap();
        for (i, t) in [1.0f64, 2.0, 3.0].iter().enumerate() {
            assert!((out[i][0] - t.cos()).abs() < 1e-10);
        }
    }
}
