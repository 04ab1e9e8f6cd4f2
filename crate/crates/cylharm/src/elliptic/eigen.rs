//! Characteristic values aₙ(q), bₙ(q) of Mathieu's equation
//! u″ + (λ − 2q cos 2η)u = 0 as eigenvalues of the symmetric tridiagonal
//! Fourier-recurrence matrices (one per parity class), found by Sturm
//! bisection with dimension doubling, plus normalized Fourier coefficient
//! vectors by inverse iteration.

use crate::error::{Error, Result};

/// Parity/period class of a 2π-periodic solution.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub(crate) enum Class {
    /// ce_n, n even: cos 0, cos 2η, cos 4η, … (√2-corner symmetrization)
    CeEven,
    /// ce_n, n odd: cos η, cos 3η, …
    CeOdd,
    /// se_n, n even ≥ 2: sin 2η, sin 4η, …
    SeEven,
    /// se_n, n odd: sin η, sin 3η, …
    SeOdd,
}

impl Class {
    pub fn of(n: u32, odd_parity: bool) -> Class {
        match (odd_parity, n % 2) {
            (false, 0) => Class::CeEven,
            (false, _) => Class::CeOdd,
            (true, 0) => Class::SeEven,
            (true, _) => Class::SeOdd,
        }
    }

    /// Harmonic multipliers of the basis functions.
    pub fn harmonics(self, dim: usize) -> Vec<f64> {
        match self {
            Class::CeEven => (0..dim).map(|m| 2.0 * m as f64).collect(),
            Class::CeOdd | Class::SeOdd => (0..dim).map(|m| (2 * m + 1) as f64).collect(),
            Class::SeEven => (0..dim).map(|m| (2 * m + 2) as f64).collect(),
        }
    }

    /// Index of aₙ/bₙ within this class's ascending spectrum.
    pub fn eigen_index(self, n: u32) -> usize {
        match self {
            Class::CeEven => (n / 2) as usize,
            Class::CeOdd | Class::SeOdd => ((n - 1) / 2) as usize,
            Class::SeEven => (n / 2 - 1) as usize,
        }
    }

    /// Diagonal and off-diagonal of the dimension-`dim` matrix.
    pub fn tridiagonal(self, q: f64, dim: usize) -> (Vec<f64>, Vec<f64>) {
        let h = self.harmonics(dim);
        let mut d: Vec<f64> = h.iter().map(|&m| m * m).collect();
        let mut e = vec![q; dim - 1];
        match self {
            Class::CeEven => e[0] = q * 2.0f64.sqrt(),
            Class::CeOdd => d[0] = 1.0 + q,
            Class::SeOdd => d[0] = 1.0 - q,
            Class::SeEven => {}
        }
        (d, e)
    }
}

/// Number of eigenvalues of the tridiagonal (d, e) strictly below x.
fn sturm_count(d: &[f64], e: &[f64], x: f64) -> usize {
    let mut count = 0usize;
    let mut t = d[0] - x;
    if t < 0.0 {
        count += 1;
    }
    for i in 1..d.len() {
        let denom = if t == 0.0 { 1e-300 } else { t };
        t = d[i] - x - e[i - 1] * e[i - 1] / denom;
        if t < 0.0 {
            count += 1;
        }
    }
    count
}

/// k-th smallest eigenvalue (0-based) by bisection.
fn tridiag_eigenvalue(d: &[f64], e: &[f64], k: usize) -> f64 {
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for i in 0..d.len() {
        let r = e.get(i).map(|v| v.abs()).unwrap_or(0.0)
            + if i > 0 { e[i - 1].abs() } else { 0.0 };
        lo = lo.min(d[i] - r);
        hi = hi.max(d[i] + r);
    }
    for _ in 0..120 {
        let mid = 0.5 * (lo + hi);
        if mid == lo || mid == hi {
            break;
        }
        if sturm_count(d, e, mid) > k {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Eigenvector by inverse iteration (tridiagonal solve with partial
/// pivoting), normalized to unit Euclidean norm.
fn inverse_iteration(d: &[f64], e: &[f64], lambda: f64) -> Result<Vec<f64>> {
    let n = d.len();
    let shift = lambda + 1e-11 * (1.0 + lambda.abs());
    let mut v = vec![1.0 / (n as f64).sqrt(); n];
    for _ in 0..3 {
        v = solve_tridiag(d, e, shift, &v)?;
        let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if !(norm.is_finite() && norm > 0.0) {
            return Err(Error::DegenerateSolution("inverse iteration collapsed".into()));
        }
        for x in &mut v {
            *x /= norm;
        }
    }
    Ok(v)
}

/// Solve (T − shift·I) x = b by banded elimination with partial pivoting
/// (one superdiagonal of fill-in).
fn solve_tridiag(d: &[f64], e: &[f64], shift: f64, b: &[f64]) -> Result<Vec<f64>> {
    let n = d.len();
    let mut sub = vec![0.0; n]; // row i entry in column i−1
    let mut diag: Vec<f64> = d.iter().map(|&x| x - shift).collect();
    let mut sup = vec![0.0; n]; // column i+1
    let mut sup2 = vec![0.0; n]; // column i+2 (fill-in)
    let mut r = b.to_vec();
    for i in 0..n - 1 {
        sup[i] = e[i];
        sub[i + 1] = e[i];
    }
    for i in 0..n - 1 {
        if sub[i + 1].abs() > diag[i].abs() {
            let (a, b2) = (diag[i], sub[i + 1]);
            diag[i] = b2;
            sub[i + 1] = a;
            let (a, b2) = (sup[i], diag[i + 1]);
            sup[i] = b2;
            diag[i + 1] = a;
            let (a, b2) = (sup2[i], sup[i + 1]);
            sup2[i] = b2;
            sup[i + 1] = a;
            r.swap(i, i + 1);
        }
        if diag[i] == 0.0 {
            diag[i] = 1e-300;
        }
        let l = sub[i + 1] / diag[i];
        diag[i + 1] -= l * sup[i];
        sup[i + 1] -= l * sup2[i];
        r[i + 1] -= l * r[i];
        sub[i + 1] = 0.0;
    }
    let mut x = vec![0.0; n];
    for i in (0..n).rev() {
        let mut s = r[i];
        if i + 1 < n {
            s -= sup[i] * x[i + 1];
        }
        if i + 2 < n {
            s -= sup2[i] * x[i + 2];
        }
        let m = if diag[i] == 0.0 { 1e-300 } else { diag[i] };
        x[i] = s / m;
    }
    Ok(x)
}

/// aₙ(q) (odd_parity = false) or bₙ(q) (true), converged in matrix
/// dimension.
pub fn mathieu_eigenvalue(n: u32, odd_parity: bool, q: f64) -> Result<f64> {
    if odd_parity && n == 0 {
        return Err(Error::Domain("se requires n ≥ 1".into()));
    }
    let class = Class::of(n, odd_parity);
    let k = class.eigen_index(n);
    let mut dim = (32usize).max(2 * n as usize + 16);
    let (d, e) = class.tridiagonal(q, dim);
    let mut prev = tridiag_eigenvalue(&d, &e, k);
    for _ in 0..6 {
        dim *= 2;
        let (d, e) = class.tridiagonal(q, dim);
        let next = tridiag_eigenvalue(&d, &e, k);
        if (next - prev).abs() <= 1e-12 * prev.abs().max(1.0) {
            return Ok(next);
        }
        prev = next;
    }
    Err(Error::NonConvergence(format!(
        "Mathieu eigenvalue n={n} q={q}: dimension cap reached"
    )))
}

/// Eigenvalue and normalized coefficient vector at a converged dimension.
pub(crate) fn eigen_system(n: u32, odd_parity: bool, q: f64) -> Result<(f64, Vec<f64>)> {
    let lambda = mathieu_eigenvalue(n, odd_parity, q)?;
    let class = Class::of(n, odd_parity);
    // Dimension: enough for coefficient decay well past the |q| bulge.
    let dim = (40usize)
        .max(2 * n as usize + 24)
        .max((2.5 * q.abs().sqrt()) as usize + 24);
    let (d, e) = class.tridiagonal(q, dim);
    let v = inverse_iteration(&d, &e, lambda)?;
    Ok((lambda, v))
}
