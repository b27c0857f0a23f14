use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// The computation degenerates at a cusp (j = ∞, λ ∈ {0, 1}, modulus ∈ {0, ±1}).
    #[error("cusp: {0}")]
    Cusp(String),

    #[error("{what} did not converge within {limit} steps")]
    Convergence { what: &'static str, limit: usize },

    /// None of the six branch choices produced a verified preimage.
    #[error("no branch of the inverse reproduces x (best relative defect {best_residual:e})")]
    NoBranchFound { best_residual: f64 },
}
