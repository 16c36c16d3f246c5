use thiserror::Error;

/// Errors raised by the construction, the eigensolver and the export layer.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("angular momentum l = {0} is not allowed here (requires l >= 1)")]
    ZeroAngularMomentum(u32),

    #[error("invalid quantum numbers n = {n}, l = {l} (requires n >= l + 1)")]
    InvalidQuantumNumbers { n: u32, l: u32 },

    #[error("quantum number l = {state} does not match factorization l = {params}")]
    QuantumNumberMismatch { state: u32, params: u32 },

    #[error("critical gamma overflows f64 for l = {0}")]
    CriticalGammaOverflow(u32),

    #[error("gamma must be a real number or +/-infinity, got {0}")]
    InvalidGamma(f64),

    #[error("radius must be positive and finite, got {0}")]
    InvalidRadius(f64),

    #[error("denominator gamma - I_l(r) vanishes at r = {r}")]
    DenominatorVanishing { r: f64 },

    #[error("gamma = {gamma} is singular for l = {l} (0 <= gamma < {critical}); pass the singular override to evaluate away from the pole")]
    SingularGamma { l: u32, gamma: f64, critical: f64 },

    #[error("operation requires a regular gamma, got {mode:?} mode")]
    NotNormalizable {
        mode: crate::factorization::GammaMode,
    },

    #[error("potential evaluation failed at r = {r}: {reason}")]
    PotentialEvaluation { r: f64, reason: String },

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("requested {requested} eigenvalues from a problem of dimension {dimension}")]
    TooManyEigenvalues { requested: usize, dimension: usize },

    #[error("inverse iteration did not converge after {0} steps")]
    InverseIterationNonConvergence(usize),

    #[error("adaptive quadrature exhausted its subdivision limit on [{a}, {b}]")]
    SubdivisionLimit { a: f64, b: f64 },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("i/o failure on {path}: {message}")]
    Io { path: String, message: String },
}

impl Error {
    /// True for failures caused by the numerics rather than by the inputs.
    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            Error::CriticalGammaOverflow(_)
                | Error::DenominatorVanishing { .. }
                | Error::InverseIterationNonConvergence(_)
                | Error::SubdivisionLimit { .. }
                | Error::PotentialEvaluation { .. }
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
