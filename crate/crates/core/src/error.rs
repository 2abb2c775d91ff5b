use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// Errors produced by the estimation engine.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A scalar argument was NaN or infinite.
    NonFinite { what: &'static str },
    /// Correlation outside the open interval (-1, 1).
    InvalidCorrelation { rho: f64 },
    /// Probability outside the open interval (0, 1).
    InvalidProbability { p: f64 },
    /// A vector or matrix had the wrong length.
    DimensionMismatch {
        what: &'static str,
        expected: usize,
        got: usize,
    },
    /// Network construction or validation failure.
    InvalidNetwork { detail: String },
    /// Dataset construction or validation failure.
    InvalidData { detail: String },
    /// A joint cell probability collapsed to zero or below after clamping.
    DegenerateCell { index: usize },
    /// A treatment CCP was numerically 0 or 1, so a conditional outcome
    /// probability has an exactly-zero denominator.
    DenominatorUnderflow { index: usize },
    /// An augmented design matrix is rank deficient.
    RankDeficient { matrix: &'static str },
    /// A square linear system could not be solved.
    SingularMatrix { what: &'static str },
    /// The inner quasi-Newton maximizer ran out of evaluations.
    OptimizerFailed { evaluations: usize },
    /// A best-response fixed point did not reach tolerance.
    FixedPointNotConverged { iterations: usize, final_gap: f64 },
    /// The NPJL outer loop did not reach tolerance; carries the trace of
    /// (iteration, sup-norm CCP gap, pseudo-likelihood value).
    OuterNotConverged {
        iterations: usize,
        final_gap: f64,
        trace: Vec<(usize, f64, f64)>,
    },
    /// More than the tolerated share of Monte Carlo replications failed.
    FailureRateExceeded { failed: usize, total: usize },
    /// Anything else rejected at a module boundary.
    InvalidInput { detail: String },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NonFinite { what } => write!(f, "non-finite value for {what}"),
            Error::InvalidCorrelation { rho } => {
                write!(f, "correlation must lie in (-1, 1), got {rho}")
            }
            Error::InvalidProbability { p } => {
                write!(f, "probability must lie in (0, 1), got {p}")
            }
            Error::DimensionMismatch {
                what,
                expected,
                got,
            } => write!(f, "dimension mismatch for {what}: expected {expected}, got {got}"),
            Error::InvalidNetwork { detail } => write!(f, "invalid network: {detail}"),
            Error::InvalidData { detail } => write!(f, "invalid dataset: {detail}"),
            Error::DegenerateCell { index } => {
                write!(f, "degenerate joint probability cell at observation {index}")
            }
            Error::DenominatorUnderflow { index } => write!(
                f,
                "treatment CCP underflowed to 0 or 1 at observation {index}"
            ),
            Error::RankDeficient { matrix } => {
                write!(f, "design matrix {matrix} is rank deficient")
            }
            Error::SingularMatrix { what } => write!(f, "singular matrix in {what}"),
            Error::OptimizerFailed { evaluations } => write!(
                f,
                "quasi-Newton maximizer failed to converge after {evaluations} evaluations"
            ),
            Error::FixedPointNotConverged {
                iterations,
                final_gap,
            } => write!(
                f,
                "fixed point not converged after {iterations} iterations (gap {final_gap:e})"
            ),
            Error::OuterNotConverged {
                iterations,
                final_gap,
                ..
            } => write!(
                f,
                "NPJL outer loop not converged after {iterations} iterations (gap {final_gap:e})"
            ),
            Error::FailureRateExceeded { failed, total } => write!(
                f,
                "{failed} of {total} Monte Carlo replications failed (above the 5% threshold)"
            ),
            Error::InvalidInput { detail } => write!(f, "{detail}"),
        }
    }
}

impl core::error::Error for Error {}
