use thiserror::Error;

/// Errors across graph construction, products, spectral routines and file IO.
///
/// Indices in messages are 1-based to match the file format and CLI output.
#[derive(Debug, Error)]
pub enum Error {
    #[error("rotation table is not a bijection: image ({v}, {l}) repeated or out of range")]
    NotABijection { v: usize, l: usize },

    #[error("rotation table does not cover ({u}, {k}) exactly once")]
    IncompleteTable { u: usize, k: usize },

    #[error("({vertex}, {label}) out of range for a graph on [{n}] with degree {m}")]
    OutOfRange {
        vertex: usize,
        label: usize,
        n: usize,
        m: usize,
    },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("explicit power needs {entries} rotation entries, above the cap of {cap}")]
    PowerTooLarge { entries: u128, cap: u64 },

    #[error(
        "edge multiset is not {degree}-regular at vertex {vertex}: \
         out-degree {out_degree}, in-degree {in_degree}"
    )]
    NotRegular {
        vertex: usize,
        degree: usize,
        out_degree: usize,
        in_degree: usize,
    },

    #[error("matrix is not doubly stochastic: {0}")]
    NotStochastic(String),

    #[error("argument outside [0, 1]: {name} = {value}")]
    Domain { name: &'static str, value: f64 },

    #[error("vector length {len} does not equal {n} * {m}")]
    LengthMismatch { len: usize, n: usize, m: usize },

    #[error(
        "power iteration did not converge after {iters} iterations (last Rayleigh gap {gap:e})"
    )]
    NoConvergence { iters: usize, gap: f64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
