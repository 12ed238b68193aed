use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("matrix {0} is not invertible over the integers")]
    NotInvertible(String),

    #[error("determinant must be 1, got {0}")]
    DeterminantNotOne(i64),

    #[error("rl_class needs |trace| > 2, got trace {0}")]
    NotHyperbolic(i64),

    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("L({alpha},{beta}) is not a lens space: gcd(alpha, beta) must be 1")]
    NotCoprime { alpha: i64, beta: i64 },

    #[error("L({alpha},{beta}) is not in canonical form")]
    NotCanonical { alpha: i64, beta: i64 },

    #[error("continued fraction hits a zero denominator at term {0}")]
    ZeroDenominator(usize),

    #[error("continued fraction needs at least one term")]
    EmptyContinuedFraction,

    #[error("braid `{0}` matches no genus one fibered knot template")]
    NoTemplate(String),

    #[error("braid `{braid}` lives in {expected}, not in {given}")]
    AmbientMismatch { braid: String, expected: String, given: String },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("internal inconsistency: {0}")]
    Inconsistency(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}
