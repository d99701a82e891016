use std::path::PathBuf;

use thiserror::Error;

/// Failures of the exact arithmetic kernel.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CycError {
    #[error("division by zero in Q(zeta_9)")]
    DivisionByZero,
    #[error("element is not fixed by complex conjugation")]
    NotReal,
    #[error("{0} is not a unit mod 9, so zeta -> zeta^{0} is not an automorphism")]
    NotAnAutomorphism(u8),
    #[error("divisor is not positive under the identity embedding")]
    NonPositiveDivisor,
}

/// Errors surfaced by the certificate stages and the pipeline.
#[derive(Debug, Error)]
pub enum CertError {
    #[error(transparent)]
    Arithmetic(#[from] CycError),

    #[error("invalid fusion ring: {0}")]
    InvalidRing(String),

    #[error("cannot parse {what}: line {line}: {msg}")]
    Parse {
        what: String,
        line: usize,
        msg: String,
    },

    #[error("stage '{stage}' is specific to the built-in rank-6 ring")]
    RingNotSupported { stage: &'static str },

    #[error("dimension vector is not a ring homomorphism of the fusion ring")]
    NotADimensionHomomorphism,

    #[error("galois permutation is not determined by dimensions: {0}")]
    AmbiguousGaloisMatch(String),

    /// An exact identity that the certificate depends on did not hold.
    #[error("certificate mismatch in {stage}: {detail}")]
    Mismatch { stage: &'static str, detail: String },

    #[error("fixture {path} is missing")]
    FixtureMissing { path: PathBuf },

    #[error("I/O error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl CertError {
    pub fn mismatch(stage: &'static str, detail: impl Into<String>) -> Self {
        CertError::Mismatch {
            stage,
            detail: detail.into(),
        }
    }
}

pub type Result<T, E = CertError> = std::result::Result<T, E>;
