//! Quadrature primitives: Gauss–Legendre panels, adaptive bisection,
//! tanh-sinh for endpoint singularities, and an Euler transform for
//! alternating panel sums.
//!
//! All routines are deterministic: fixed node orders, compensated final
//! reductions, no data-dependent reordering.

use crate::error::{Error, Result};
use std::sync::OnceLock;

/// Neumaier compensated accumulator.
#[derive(Debug, Clone, Copy, Default)]
pub struct Accum {
    sum: f64,
    comp: f64,
}

impl Accum {
    pub fn new() -> Self {
        Accum::default()
    }

    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

/// Gauss–Legendre nodes and weights on [-1, 1], computed by Newton
/// iteration on the Legendre recurrence and cached per order.
pub fn gauss_legendre(n: usize) -> &'static (Vec<f64>, Vec<f64>) {
    static TABLES: OnceLock<std::sync::Mutex<std::collections::HashMap<usize, &'static (Vec<f64>, Vec<f64>)>>> =
        OnceLock::new();
    let tables = TABLES.get_or_init(|| std::sync::Mutex::new(std::collections::HashMap::new()));
    let mut guard = tables.lock().unwrap();
    if let Some(t) = guard.get(&n) {
        return t;
    }
    let computed: &'static (Vec<f64>, Vec<f64>) = Box::leak(Box::new(gl_compute(n)));
    guard.insert(n, computed);
    computed
}

fn gl_compute(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 2);
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let m = (n + 1) / 2;
    for i in 0..m {
        // Tricomi initial guess, then Newton.
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        for _ in 0..100 {
            let (p, dp) = legendre_pair(n, x);
            let dx = p / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        let (_, dp) = legendre_pair(n, x);
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    if n % 2 == 1 {
        let (_, dp) = legendre_pair(n, 0.0);
        nodes[n / 2] = 0.0;
        weights[n / 2] = 2.0 / (dp * dp);
    }
    (nodes, weights)
}

/// (P_n(x), P_n'(x)) by the three-term recurrence.
fn legendre_pair(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, dp)
}

/// Fixed-order Gauss–Legendre on [a, b].
pub fn gl_fixed<F: FnMut(f64) -> f64>(mut f: F, a: f64, b: f64, n: usize) -> f64 {
    let (nodes, weights) = gauss_legendre(n);
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let mut acc = Accum::new();
    for (x, w) in nodes.iter().zip(weights.iter()) {
        acc.add(w * f(mid + half * x));
    }
    half * acc.value()
}

/// Adaptive Gauss–Legendre by panel bisection. The error estimate per
/// panel is |GL(n) − GL(2n)|; panels are split until the summed estimate
/// meets the tolerance. Returns (value, error_estimate, evals).
pub fn adaptive_gl<F: FnMut(f64) -> f64>(
    mut f: F,
    a: f64,
    b: f64,
    rel_tol: f64,
    abs_floor: f64,
    max_evals: usize,
) -> Result<(f64, f64, usize)> {
    const N_LO: usize = 15;
    const N_HI: usize = 30;
    let mut evals = 0usize;
    let eval_panel = |lo: f64, hi: f64, f: &mut F, evals: &mut usize| -> (f64, f64) {
        let coarse = gl_fixed(&mut *f, lo, hi, N_LO);
        let fine = gl_fixed(&mut *f, lo, hi, N_HI);
        *evals += N_LO + N_HI;
        (fine, (fine - coarse).abs())
    };

    // Work stack of (lo, hi, value, err), refined until tolerance holds.
    let (v, e) = eval_panel(a, b, &mut f, &mut evals);
    let mut panels = vec![(a, b, v, e)];
    loop {
        let total: f64 = panels.iter().map(|p| p.2).sum();
        let err: f64 = panels.iter().map(|p| p.3).sum();
        let target = rel_tol * total.abs().max(abs_floor);
        if err <= target {
            break;
        }
        if evals >= max_evals {
            return Err(Error::NonConvergence(format!(
                "adaptive quadrature: error {err:.3e} > target {target:.3e} after {evals} evals"
            )));
        }
        // Split the worst panel.
        let (idx, _) = panels
            .iter()
            .enumerate()
            .max_by(|x, y| x.1 .3.partial_cmp(&y.1 .3).unwrap())
            .unwrap();
        let (lo, hi, _, _) = panels.remove(idx);
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            return Err(Error::NonConvergence(
                "adaptive quadrature: panel width at machine limit".into(),
            ));
        }
        let (v1, e1) = eval_panel(lo, mid, &mut f, &mut evals);
        let (v2, e2) = eval_panel(mid, hi, &mut f, &mut evals);
        panels.push((lo, mid, v1, e1));
        panels.push((mid, hi, v2, e2));
    }
    // Deterministic reduction in interval order.
    panels.sort_by(|x, y| x.0.partial_cmp(&y.0).unwrap());
    let mut acc = Accum::new();
    for p in &panels {
        acc.add(p.2);
    }
    let err: f64 = panels.iter().map(|p| p.3).sum();
    Ok((acc.value(), err, evals))
}

/// Tanh-sinh (double exponential) quadrature on [a, b], tolerant of
/// integrable endpoint singularities. Level-doubling with a relative
/// convergence stop. Returns (value, error_estimate, evals).
pub fn tanh_sinh<F: FnMut(f64) -> f64>(
    mut f: F,
    a: f64,
    b: f64,
    rel_tol: f64,
) -> Result<(f64, f64, usize)> {
    let half = 0.5 * (b - a);
    let pi_half = std::f64::consts::FRAC_PI_2;
    let t_max = 6.1; // tanh(π/2·sinh 6.1) is 1 to f64 precision
    let mut evals = 0usize;

    let mut level_sum = |h: f64, odd_only: bool, evals: &mut usize| -> f64 {
        let mut acc = Accum::new();
        let mut k = if odd_only { 1 } else { 0 };
        let step = if odd_only { 2 } else { 1 };
        loop {
            let t = k as f64 * h;
            if t > t_max {
                break;
            }
            let sh = pi_half * t.sinh();
            let x = sh.tanh();
            let w = pi_half * t.cosh() / (sh.cosh() * sh.cosh());
            // Offsets from the endpoints stay accurate for singular f.
            let dx = half * (1.0 - x);
            let xp = b - dx;
            let xm = a + dx;
            let fp = f(xp);
            let fm = if k == 0 { fp } else { f(xm) };
            *evals += if k == 0 { 1 } else { 2 };
            let contrib = if k == 0 { w * fp } else { w * (fp + fm) };
            if contrib.is_finite() {
                acc.add(contrib);
            }
            if k == 0 && odd_only {
                unreachable!();
            }
            k += step;
        }
        acc.value()
    };

    let mut h = 1.0;
    let mut total = level_sum(h, false, &mut evals) * h * half;
    let mut prev = f64::INFINITY;
    for _level in 0..12 {
        h *= 0.5;
        let extra = level_sum(h, true, &mut evals) * h * half;
        let refined = 0.5 * total + extra;
        let change = (refined - total).abs();
        let scale = refined.abs().max(1e-300);
        if change <= rel_tol * scale && prev <= 10.0 * rel_tol * scale {
            return Ok((refined, change.max(1e-300 * scale), evals));
        }
        prev = change;
        total = refined;
    }
    Err(Error::NonConvergence(
        "tanh-sinh: level cap reached before tolerance".into(),
    ))
}

/// Euler (iterated averaging) transform of a sequence of partial sums of
/// an alternating-ish series. Returns the accelerated limit and a
/// heuristic error estimate from the last table column.
pub fn euler_accelerate(partial_sums: &[f64]) -> (f64, f64) {
    assert!(!partial_sums.is_empty());
    let mut row = partial_sums.to_vec();
    let mut best = *row.last().unwrap();
    let mut err = f64::INFINITY;
    while row.len() > 1 {
        let next: Vec<f64> = row.windows(2).map(|w| 0.5 * (w[0] + w[1])).collect();
        let cand = *next.last().unwrap();
        let delta = (cand - best).abs();
        if delta < err {
            err = delta;
            best = cand;
        }
        row = next;
    }
    (best, err)
}
