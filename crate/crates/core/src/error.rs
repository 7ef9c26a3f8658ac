use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    /// A request exceeds what the solver was built or configured to do.
    #[error("capability error: {0}")]
    Capability(String),

    #[error("no sign change bracketing a root on [{lo}, {hi}]")]
    Bracket { lo: f64, hi: f64 },

    #[error("no convergence after {iterations} iterations")]
    NoConvergence { iterations: usize },

    #[error("degenerate Padé system: {0}")]
    Degenerate(String),

    #[error("Padé denominator vanishes at u = {0}")]
    Pole(f64),

    #[error("converged eigenfunction has {0} interior nodes, expected 0")]
    WrongState(usize),

    #[error("invariant violated: {0}")]
    Invariant(String),
}
