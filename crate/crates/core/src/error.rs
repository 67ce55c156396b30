use thiserror::Error;

/// Errors raised while loading categories or evaluating diagrams.
#[derive(Debug, Error)]
pub enum Error {
    #[error("schema error: {0}")]
    Schema(String),

    #[error("consistency error in {check} at ({}): residual {residual:.3e}", labels.join(", "))]
    Consistency {
        check: String,
        labels: Vec<String>,
        residual: f64,
    },

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("empty hom space: {0}")]
    EmptySpace(String),

    #[error("tolerance exceeded in {check}: residual {residual:.3e} > {tol:.1e}")]
    Tolerance { check: String, residual: f64, tol: f64 },

    #[error("morphism is not in the commutant: naturality residual {residual:.3e}")]
    NotInCommutant { residual: f64 },

    #[error("degenerate spectrum: {0}")]
    DegenerateSpectrum(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn consistency(check: &str, labels: Vec<String>, residual: f64) -> Self {
        Error::Consistency {
            check: check.to_string(),
            labels,
            residual,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
