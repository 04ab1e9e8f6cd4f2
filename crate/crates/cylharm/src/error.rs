//! Error taxonomy shared by all modules.

use thiserror::Error;

/// Errors produced by evaluation routines.
///
/// Domain violations are reported eagerly (before any numerics run);
/// convergence failures carry the context needed to diagnose them.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    /// Gamma (or a gamma-weighted connection formula) evaluated at a pole.
    #[error("pole: {0}")]
    Pole(String),

    /// Kummer U principal branch requested on the cut (−∞, 0].
    #[error("argument on branch cut (-inf, 0]: {0}")]
    BranchCut(String),

    /// Input outside the operation's domain of validity.
    #[error("domain error: {0}")]
    Domain(String),

    /// The two evaluation points coincide (fundamental solution singular).
    #[error("coincident points")]
    CoincidentPoints,

    /// A series or quadrature failed to reach its tolerance in budget.
    #[error("did not converge: {0}")]
    NonConvergence(String),

    /// An intermediate or final quantity exceeds the representable range.
    #[error("overflow: {0}")]
    Overflow(String),

    /// A recessive solution decayed below the representable range.
    #[error("underflow: {0}")]
    Underflow(String),

    /// A constructed second solution is numerically parallel to the first.
    #[error("degenerate solution: {0}")]
    DegenerateSolution(String),

    /// The k-integral kernel decays too slowly to integrate reliably
    /// (J₀-based methods with z = z₀).
    #[error("slow decay: {0}")]
    SlowDecay(String),

    /// ODE integration hit unresolvable stiffness (modified Mathieu at
    /// large ξ, cosh-growth regime).
    #[error("stiffness: {0}")]
    Stiffness(String),
}

pub type Result<T> = std::result::Result<T, Error>;
