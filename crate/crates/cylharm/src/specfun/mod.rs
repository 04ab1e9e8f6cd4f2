//! Scalar special functions every other module consumes: complex gamma,
//! Kummer M and U, Hermite functions of complex order, Bessel J, and
//! modified Bessel I/K.

mod bessel;
mod gamma;
mod hermite;
mod kummer;

pub use bessel::{bessel_i, bessel_j, bessel_j0_sq, bessel_k};
pub(crate) use bessel::{bessel_asym_a, bessel_i_with_derivative, bessel_k_with_derivative};
pub use gamma::{gamma, gamma_recip};
pub use hermite::hermite_h;
pub use kummer::{kummer_m, kummer_u};
pub(crate) use kummer::kummer_u_asymptotic as kummer_u_asym_parts;

use crate::error::{Error, Result};

/// Convergence policy for series evaluations.
#[derive(Debug, Clone, Copy)]
pub struct EvalPolicy {
    /// Target relative error.
    pub rel_tol: f64,
    /// Series term cap before reporting non-convergence.
    pub max_terms: usize,
}

impl Default for EvalPolicy {
    fn default() -> Self {
        EvalPolicy {
            rel_tol: 1e-12,
            max_terms: 500,
        }
    }
}

impl EvalPolicy {
    pub fn new(rel_tol: f64, max_terms: usize) -> Result<Self> {
        if !(rel_tol > 0.0 && rel_tol < 1.0) {
            return Err(Error::Domain(format!("rel_tol {rel_tol} outside (0, 1)")));
        }
        if max_terms == 0 {
            return Err(Error::Domain("max_terms must be ≥ 1".into()));
        }
        Ok(EvalPolicy { rel_tol, max_terms })
    }
}
