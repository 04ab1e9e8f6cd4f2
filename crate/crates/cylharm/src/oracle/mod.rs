//! Independent brute-force references: Bessel functions from their
//! defining series/integral, the Lipschitz and Lipschitz–Hankel
//! k-integrals, ODE shooting for all three separated equations, and the
//! closed-form integral identities of the parabolic spectral machinery.
//!
//! Every oracle here deliberately uses a different algorithm than the fast
//! path it validates.

pub mod appendix;
mod bessel_ref;
pub mod dd;
mod eigen_dense;
mod lipschitz;
mod shoot;

pub use appendix::{gamma_reim_identity, verify_appendix, AppendixReport, IdentityCheck};
pub use bessel_ref::{ref_j0, ref_j1, ref_k0};
pub use eigen_dense::jacobi_eigenvalues;
pub use lipschitz::{ref_lipschitz, ref_lipschitz_hankel};
pub use shoot::{ode_shoot, ShootEquation};

/// A brute-force reference value with an error bound.
#[derive(Debug, Clone, Copy)]
pub struct OracleResult<T> {
    pub value: T,
    /// Bound on |value − truth|.
    pub error_bound: f64,
    /// True when the bound is rigorous (series tail + rounding analysis),
    /// false when it is a heuristic step-halving/Richardson estimate.
    pub rigorous: bool,
    /// Elementary evaluations spent.
    pub evals: usize,
}
