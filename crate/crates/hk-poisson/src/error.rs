use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Pointwise evaluation was requested exactly at a blowup or
    /// oscillatory singular point.
    #[error("undefined at singularity θ = {location}")]
    UndefinedAtSingularity { location: f64 },

    /// The function is not of bounded variation over one period.
    #[error("not of bounded variation: {0}")]
    NotBoundedVariation(String),

    /// Quadrature could not reach the requested tolerance. Carries the best
    /// estimate obtained and its error bound.
    #[error("quadrature accuracy failure: best estimate {estimate} ± {error}")]
    AccuracyFailure { estimate: f64, error: f64 },

    /// An interior singularity has no descriptor usable by the quadrature
    /// engine (an oscillatory point without a phase map).
    #[error("unhandled singularity at θ = {location}")]
    UnhandledSingularity { location: f64 },

    /// The sharpness target does not satisfy (1-r_n)·ψ(r_n e^{iθ_n}) → 0
    /// along the sample sequence.
    #[error("target growth is not o(1/(1-r)) along the sample sequence")]
    PsiNotLittleOh,

    /// A slow-decay profile is outside (0, 1/2) or not strictly decreasing.
    #[error("invalid decay profile: {0}")]
    InvalidProfile(String),

    /// Per-radius Alexiewicz norms grew beyond the divergence heuristic; the
    /// function is not in the harmonic Hardy space of the Alexiewicz norm.
    #[error("not in the HK harmonic Hardy space: {0}")]
    NotInHkSpace(String),

    /// Argument outside the operation's domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// Function-spec or data-file syntax error.
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
