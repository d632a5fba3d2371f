use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("matrix is not skew-symmetric at entry ({i},{j})")]
    NotSkew { i: usize, j: usize },

    #[error("Jacobi identity fails at basis triple ({i},{j},{k}) for component {l}, residual {residual:.3e}")]
    JacobiViolation {
        i: usize,
        j: usize,
        k: usize,
        l: usize,
        residual: f64,
    },

    #[error("cochain is not closed: residual {residual:.3e} at basis triple ({i},{j},{k})")]
    NotACocycle {
        i: usize,
        j: usize,
        k: usize,
        residual: f64,
    },

    #[error("indeterminate rank: singular value within factor {margin:.3e} of the relative cutoff {tol:.3e}")]
    IndeterminateRank { margin: f64, tol: f64 },

    #[error("operands belong to different group charts")]
    ChartMismatch,

    #[error("value left the embedded algebra: residual {residual:.3e} exceeds tolerance {tol:.3e}")]
    NotInAlgebra { residual: f64, tol: f64 },

    #[error("embedding is not an algebra map: commutator residual {residual:.3e} at basis pair ({i},{j})")]
    UnfaithfulEmbedding { i: usize, j: usize, residual: f64 },

    #[error("embedded basis matrices are not linearly independent")]
    DependentEmbedding,

    #[error("matrix is not invertible")]
    Singular,

    #[error("non-finite value encountered in {0}")]
    NonFinite(&'static str),

    #[error("path segment {0} has non-positive duration")]
    BadSegmentDuration(usize),

    #[error(
        "quadrature did not converge on segment {segment}: disagreement {disagreement:.3e} > {tol:.3e}"
    )]
    QuadratureDivergence {
        segment: usize,
        disagreement: f64,
        tol: f64,
    },

    #[error("cocycle verdict on this chart is '{verdict}'; value is path-dependent, use theta_along_path with an explicit path")]
    NotIntegrable { verdict: &'static str },

    #[error("chart provides no canonical word decomposition; use theta_along_path with an explicit path")]
    NoCanonicalPath,

    #[error("canonical word decomposition does not reproduce the element: residual {residual:.3e}")]
    WordDecompositionFailed { residual: f64 },

    #[error("orbit chart frame is rank-deficient at the base point: selected directions {directions:?} span {got} < required {required}")]
    DegenerateFrame {
        directions: Vec<usize>,
        got: usize,
        required: usize,
    },

    #[error("unknown model '{0}'")]
    UnknownModel(String),

    #[error("invalid model at {location}: {reason}")]
    InvalidModel { location: String, reason: String },

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn invalid(location: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::InvalidModel {
            location: location.into(),
            reason: reason.into(),
        }
    }
}
