//! Constructed Mathieu systems: eigenvalue, normalized Fourier
//! coefficients, lazily computed monodromy coefficient, and evaluation of
//! ceₙ/seₙ at real or complex argument.

use super::eigen::{eigen_system, Class};
use crate::error::{Error, Result};
use crate::Complex;
use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    /// ceₙ (cosine-type), eigenvalue aₙ(q), n ≥ 0.
    Even,
    /// seₙ (sine-type), eigenvalue bₙ(q), n ≥ 1.
    Odd,
}

/// One (q, n, parity) Mathieu system.
#[derive(Debug)]
pub struct MathieuSystem {
    pub q: f64,
    pub n: u32,
    pub parity: Parity,
    pub eigenvalue: f64,
    /// Normalized Fourier coefficients; for the CeEven class the first
    /// entry is the symmetrized B₀ = √2·A₀.
    pub fourier_coeffs: Vec<f64>,
    pub(crate) class: Class,
    mono: OnceLock<std::result::Result<f64, Error>>,
}

/// Half-width of the validated strip for complex-argument evaluation.
const STRIP_HALF_WIDTH: f64 = 6.0;

/// Tolerated cancellation (max term over sum) before complex-argument
/// evaluation refuses to return garbage.
const STRIP_CANCEL_LIMIT: f64 = 1e13;

impl MathieuSystem {
    /// Build the system for the given parameters (uncached).
    pub fn build(q: f64, n: u32, parity: Parity) -> Result<Arc<MathieuSystem>> {
        if parity == Parity::Odd && n == 0 {
            return Err(Error::Domain("se requires n ≥ 1".into()));
        }
        let odd = parity == Parity::Odd;
        let (eigenvalue, mut coeffs) = eigen_system(n, odd, q)?;
        let class = Class::of(n, odd);
        // Sign convention: the coefficient multiplying cos(nη)/sin(nη) is
        // positive.
        let lead_idx = class.eigen_index(n);
        if coeffs.get(lead_idx).copied().unwrap_or(0.0) < 0.0 {
            for c in &mut coeffs {
                *c = -*c;
            }
        }
        Ok(Arc::new(MathieuSystem {
            q,
            n,
            parity,
            eigenvalue,
            fourier_coeffs: coeffs,
            class,
            mono: OnceLock::new(),
        }))
    }

    /// μₙ(q)/νₙ(q), computed on first use (q > 0 contract).
    pub fn mono_coeff(&self) -> Result<f64> {
        self.mono
            .get_or_init(|| super::monodromy::monodromy_coefficient(self))
            .clone()
    }

    /// ceₙ or seₙ at complex z (Fourier series; entire, but evaluation is
    /// validated only in the |Im z| ≤ 6 strip and guarded against
    /// cosh-growth cancellation).
    pub fn eval(&self, z: Complex) -> Result<Complex> {
        if z.im.abs() > STRIP_HALF_WIDTH {
            return Err(Error::Overflow(format!(
                "Mathieu series argument Im z = {} outside the validated strip",
                z.im
            )));
        }
        if z.im == 0.0 {
            return Ok(Complex::new(self.eval_real(z.re), 0.0));
        }
        let mut sum = Complex::new(0.0, 0.0);
        let mut max_term = 0.0f64;
        for (m, &coef) in self.fourier_coeffs.iter().enumerate() {
            let harmonic = self.harmonic(m);
            let basis = match self.parity {
                Parity::Even => (z * harmonic).cos(),
                Parity::Odd => (z * harmonic).sin(),
            };
            let scale = if self.class == Class::CeEven && m == 0 {
                coef / 2.0f64.sqrt()
            } else {
                coef
            };
            let term = basis * scale;
            max_term = max_term.max(term.norm());
            sum += term;
        }
        if max_term > STRIP_CANCEL_LIMIT * sum.norm().max(1e-280) {
            return Err(Error::Overflow(format!(
                "Mathieu series cancellation {:.1e} at Im z = {} (q = {})",
                max_term / sum.norm().max(1e-280),
                z.im,
                self.q
            )));
        }
        Ok(sum)
    }

    fn harmonic(&self, m: usize) -> f64 {
        match self.class {
            Class::CeEven => 2.0 * m as f64,
            Class::CeOdd | Class::SeOdd => (2 * m + 1) as f64,
            Class::SeEven => (2 * m + 2) as f64,
        }
    }

    fn eval_real(&self, x: f64) -> f64 {
        let mut sum = 0.0;
        for (m, &coef) in self.fourier_coeffs.iter().enumerate() {
            let harmonic = self.harmonic(m);
            let basis = match self.parity {
                Parity::Even => (harmonic * x).cos(),
                Parity::Odd => (harmonic * x).sin(),
            };
            let scale = if self.class == Class::CeEven && m == 0 {
                coef / 2.0f64.sqrt()
            } else {
                coef
            };
            sum += scale * basis;
        }
        sum
    }

    /// Real factor of the imaginary-axis value: ceₙ(iξ) itself (even), or
    /// the real s with seₙ(iξ) = i·s (odd). cosh-growth cancellation is
    /// guarded exactly like [`MathieuSystem::eval`].
    pub(crate) fn eval_imag_axis(&self, xi: f64) -> Result<f64> {
        if xi.abs() > STRIP_HALF_WIDTH {
            return Err(Error::Overflow(format!(
                "Mathieu series argument iξ with ξ = {xi} outside the validated strip"
            )));
        }
        let mut sum = 0.0f64;
        let mut max_term = 0.0f64;
        for (m, &coef) in self.fourier_coeffs.iter().enumerate() {
            let harmonic = self.harmonic(m);
            let basis = match self.parity {
                Parity::Even => (harmonic * xi).cosh(),
                Parity::Odd => (harmonic * xi).sinh(),
            };
            let scale = if self.class == Class::CeEven && m == 0 {
                coef / 2.0f64.sqrt()
            } else {
                coef
            };
            let term = scale * basis;
            max_term = max_term.max(term.abs());
            sum += term;
        }
        if max_term > STRIP_CANCEL_LIMIT * sum.abs().max(1e-280) {
            return Err(Error::Overflow(format!(
                "Mathieu series cancellation {:.1e} at ξ = {xi} (q = {})",
                max_term / sum.abs().max(1e-280),
                self.q
            )));
        }
        Ok(sum)
    }

    /// Value and derivative at real x.
    pub(crate) fn eval_real_with_derivative(&self, x: f64) -> (f64, f64) {
        let mut sum = 0.0;
        let mut der = 0.0;
        for (m, &coef) in self.fourier_coeffs.iter().enumerate() {
            let harmonic = self.harmonic(m);
            let scale = if self.class == Class::CeEven && m == 0 {
                coef / 2.0f64.sqrt()
            } else {
                coef
            };
            match self.parity {
                Parity::Even => {
                    sum += scale * (harmonic * x).cos();
                    der -= scale * harmonic * (harmonic * x).sin();
                }
                Parity::Odd => {
                    sum += scale * (harmonic * x).sin();
                    der += scale * harmonic * (harmonic * x).cos();
                }
            }
        }
        (sum, der)
    }
}

/// ceₙ(z, q) for a constructed even system.
pub fn mathieu_ce(sys: &MathieuSystem, z: Complex) -> Result<Complex> {
    if sys.parity != Parity::Even {
        return Err(Error::Domain("mathieu_ce needs an even (ce) system".into()));
    }
    sys.eval(z)
}

/// seₙ(z, q) for a constructed odd system.
pub fn mathieu_se(sys: &MathieuSystem, z: Complex) -> Result<Complex> {
    if sys.parity != Parity::Odd {
        return Err(Error::Domain("mathieu_se needs an odd (se) system".into()));
    }
    sys.eval(z)
}

/// Concurrent system cache keyed by (q bits, n, parity): any number of
/// readers, writers insert behind the lock.
#[derive(Default)]
pub struct MathieuCache {
    map: RwLock<HashMap<(u64, u32, Parity), Arc<MathieuSystem>>>,
}

impl MathieuCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn global() -> &'static MathieuCache {
        static CACHE: OnceLock<MathieuCache> = OnceLock::new();
        CACHE.get_or_init(MathieuCache::new)
    }

    pub fn get(&self, q: f64, n: u32, parity: Parity) -> Result<Arc<MathieuSystem>> {
        let key = (q.to_bits(), n, parity);
        if let Some(sys) = self.map.read().unwrap().get(&key) {
            return Ok(Arc::clone(sys));
        }
        let sys = MathieuSystem::build(q, n, parity)?;
        let mut w = self.map.write().unwrap();
        Ok(Arc::clone(w.entry(key).or_insert(sys)))
    }
}
