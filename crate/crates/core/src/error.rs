use thiserror::Error;

use crate::fusionring::ValidationReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Why a reconstruction attempt produced no certified candidate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReconstructionFailure {
    /// No integer vector reproduces the value within tolerance.
    NoMatch,
    /// A numerically matching vector exists but its coordinates exceed the height bound.
    HeightExceeded,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("residue {residue} is not coprime to conductor {conductor}")]
    NotCoprime { residue: u64, conductor: u32 },
    #[error("reconstruction failed at conductor {conductor}: {}", match .reason {
        ReconstructionFailure::NoMatch => "no integer vector matches (raise precision or wrong conductor)",
        ReconstructionFailure::HeightExceeded => "candidate exceeds the height bound (raise the bound)",
    })]
    ReconstructionFailed { conductor: u32, reason: ReconstructionFailure },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("validation failed: {0}")]
    Validation(ValidationReport),
    #[error("unknown catalog entry `{0}`")]
    UnknownCatalogEntry(String),
    #[error("no certified cyclotomic table with conductor <= {conductor_max}: {}", if *.bound_too_small {
        "numeric matches exceeded the height bound (bound too small)"
    } else {
        "no cyclotomic fit below conductor_max"
    })]
    ConductorNotFound { conductor_max: u32, bound_too_small: bool },
    #[error("degenerate spectrum after {retries} retries (input may be non-commutative or invalid)")]
    DegenerateSpectrum { retries: u32 },
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("S-matrix invariant violated: {0}")]
    InvariantViolation(String),
    #[error("S-matrix incompatible with ring: {0}")]
    IncompatibleSpec(String),
    #[error("unknown check `{0}`")]
    UnknownCheck(String),
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Name of the subsystem the error originates from.
    pub fn module(&self) -> &'static str {
        match self {
            Error::DivisionByZero | Error::NotCoprime { .. } | Error::ReconstructionFailed { .. } => "exactnum",
            Error::Parse(_) | Error::Validation(_) | Error::UnknownCatalogEntry(_) | Error::Io(_) => "fusionring",
            Error::ConductorNotFound { .. } | Error::DegenerateSpectrum { .. } => "chartable",
            Error::InvariantViolation(_) | Error::IncompatibleSpec(_) | Error::NotApplicable(_) => "theorems",
            Error::InternalInconsistency(_) => "internal",
            Error::UnknownCheck(_) | Error::Config(_) => "cli",
        }
    }

    /// True for errors caused by the user's input rather than by the computation.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Parse(_)
                | Error::Validation(_)
                | Error::UnknownCatalogEntry(_)
                | Error::UnknownCheck(_)
                | Error::InvariantViolation(_)
                | Error::IncompatibleSpec(_)
                | Error::Config(_)
                | Error::Io(_)
        )
    }
}
