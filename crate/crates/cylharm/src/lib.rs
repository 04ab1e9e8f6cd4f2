//! Eigenfunction expansions of the fundamental solution 1/‖x−x₀‖ of the
//! 3-D Laplace equation in parabolic and elliptic cylinder coordinates.
//!
//! The plane building blocks are the Bessel kernels J₀(kr) and K₀(kr) with
//! r the in-plane distance. Each kernel is expanded in separated harmonics
//! of the respective coordinate system:
//!
//! * [`parabolic`] — K₀(kr) as a Hermite-function series and J₀(kr) as a
//!   continuous-spectrum integral over modified parabolic cylinder
//!   harmonics with explicit spectral densities.
//! * [`elliptic`] — J₀(kr) and K₀(kr) as Mathieu-function series with
//!   monodromy-derived expansion weights and modified radial functions.
//! * [`laplace3d`] — the four 3-D expansions obtained by integrating the
//!   plane expansions against e^{−k|z−z₀|} or (2/π)·cos k(z−z₀) kernels,
//!   plus exact coordinate transforms.
//! * [`specfun`] — the scalar special functions everything else consumes
//!   (complex gamma, Kummer M/U, Hermite functions, Bessel J/I/K).
//! * [`oracle`] — independent brute-force references (defining series and
//!   integrals, ODE shooting, double-double arithmetic) used to
//!   cross-validate every fast path.
//!
//! All evaluation routines are pure functions of their arguments and are
//! safe to call concurrently.

pub mod elliptic;
pub mod error;
pub mod laplace3d;
mod logspace;
pub mod ode;
pub mod oracle;
pub mod parabolic;
pub mod quad;
pub mod report;
pub mod specfun;

/// Complex scalar carrying all special-function results.
pub type Complex = num_complex::Complex64;

pub use error::{Error, Result};
pub use report::{ExpansionReport, Method};
