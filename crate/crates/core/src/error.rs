use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// The acceptor cannot absorb the requested entanglement without
    /// leaving the `[0, pi/4]` parametrization.
    #[error("infeasible headroom: acceptor at {acceptor_ebits} ebit cannot absorb {gain} ebit")]
    InfeasibleHeadroom { acceptor_ebits: f64, gain: f64 },

    /// A closed-form derivative was requested at a point where `ln tan` diverges.
    #[error("closed form is singular at alpha = {alpha}")]
    SingularPoint { alpha: f64 },

    /// The residual does not change sign over the bracket.
    #[error("no sign change on [{lo}, {hi}]: residuals {f_lo} and {f_hi}")]
    Bracket { lo: f64, hi: f64, f_lo: f64, f_hi: f64 },

    /// Diluting into a product state has no finite copy count.
    #[error("degenerate dilution: intermediate donor state at beta - dbeta = {0} is a product state")]
    DegenerateDilution(f64),

    #[error("invalid Schmidt vector: {0}")]
    InvalidVector(String),
}
