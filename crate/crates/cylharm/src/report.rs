//! Diagnostic report attached to every expansion evaluation.

/// Which expansion produced a value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    ParabolicK0,
    ParabolicJ0,
    EllipticJ0,
    EllipticK0,
    Direct,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::ParabolicK0 => "parabolic-k0",
            Method::ParabolicJ0 => "parabolic-j0",
            Method::EllipticJ0 => "elliptic-j0",
            Method::EllipticK0 => "elliptic-k0",
            Method::Direct => "direct",
        }
    }
}

/// Value plus convergence diagnostics for a series or integral expansion.
#[derive(Debug, Clone)]
pub struct ExpansionReport {
    pub value: f64,
    pub method: Method,
    /// Truncation levels actually used (series order, λ-cutoff, k-cutoff…),
    /// in method-specific order.
    pub truncation_used: Vec<usize>,
    /// Estimated magnitude of everything discarded. Always ≥ 0.
    pub tail_estimate: f64,
    /// |value − reference| when an oracle comparison was requested.
    pub oracle_residual: Option<f64>,
    /// Number of elementary kernel/series-term evaluations.
    pub evals: usize,
    /// Per-term magnitudes of the leading series (when the method is a
    /// single series), for convergence diagnostics.
    pub term_magnitudes: Vec<f64>,
    /// Residual imaginary part certified away by the evaluation,
    /// relative to |value|.
    pub imag_residual: f64,
}

impl ExpansionReport {
    pub fn new(value: f64, method: Method) -> Self {
        ExpansionReport {
            value,
            method,
            truncation_used: Vec::new(),
            tail_estimate: 0.0,
            oracle_residual: None,
            evals: 0,
            term_magnitudes: Vec::new(),
            imag_residual: 0.0,
        }
    }
}
