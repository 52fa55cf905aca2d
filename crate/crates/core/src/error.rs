use thiserror::Error;

/// Errors raised by constructions, correlation and document handling.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("dimension mismatch: expected {expected:?}, found {found:?}")]
    DimensionMismatch {
        expected: (usize, usize),
        found: (usize, usize),
    },

    #[error("shift {shift} out of range for length {len}")]
    ShiftOutOfRange { shift: i64, len: usize },

    #[error(
        "gcd({m}, {s}) = {gcd} != 1: the periodic autocorrelation is {peak} at shift class \
         ({tau1}, {tau2}) (and every multiple), so the matrix is not a perfect array"
    )]
    NotCoprime {
        m: usize,
        s: i64,
        gcd: usize,
        tau1: usize,
        tau2: usize,
        peak: usize,
    },

    #[error(
        "permutations {k1} and {k2} collide in column {j}: pi_{k1}({i1}*P+{j}) = pi_{k2}({i2}*P+{j}) = {value}"
    )]
    PermutationClash {
        k1: usize,
        k2: usize,
        i1: usize,
        i2: usize,
        j: usize,
        value: usize,
    },

    #[error("{property} check failed: {detail}")]
    VerificationFailed { property: String, detail: String },

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
