//! LDPC codes of length `4n² − 2n` built from cyclic difference covering arrays.
//!
//! For every `n ≥ 2` the crate constructs a reduced cyclic difference covering
//! array over `Z_2n`, develops it into a resolvable partially balanced
//! incomplete block design on `6n` points, and uses the design's incidence
//! matrix as the parity-check matrix `H` of a `(4n²−2n, 3, 2n−1)`-regular
//! LDPC code. The pipeline is:
//!
//! ```text
//! dca        3-column array over Z_2n (columns: 0, j, and a split odd/even map)
//! pbibd      2n−1 starter blocks developed into orbits → 4n²−2n blocks → H
//! latin      the two nonzero array columns, read as pseudo-orthogonal Latin squares
//! analysis   RC-constraint, girth, rank 6n−2, dimension, rate, minimum distance
//! codec      systematic encoder, bit-flipping and sum-product decoders
//! channel    reproducible BSC / BI-AWGN Monte-Carlo simulation
//! alist      import/export of H in the classic alist interchange format
//! ```
//!
//! Every structural claim (array axioms, block-pair concurrence, girth, rank,
//! distance) is re-checked computationally rather than assumed; the `analysis`
//! module exposes the verifiers.

pub mod alist;
pub mod analysis;
pub mod channel;
pub mod codec;
pub mod dca;
pub mod gf2;
pub mod latin;
pub mod pbibd;
pub mod rng;

use std::fmt;

/// Crate-wide error type.
#[derive(Debug)]
pub enum Error {
    /// A parameter violated a documented precondition.
    InvalidParameter(String),
    /// Vector/matrix dimensions do not agree.
    DimensionMismatch { expected: usize, found: usize },
    /// Requested a generator for a code with no information bits.
    TrivialCode,
    /// A log-likelihood ratio was NaN or infinite.
    NonFiniteLlr { index: usize },
    /// Malformed text input.
    Parse(String),
    Io(std::io::Error),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidParameter(msg) => write!(f, "invalid parameter: {msg}"),
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::TrivialCode => write!(f, "matrix has full column rank: the code is trivial"),
            Error::NonFiniteLlr { index } => write!(f, "non-finite LLR at index {index}"),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
            Error::Io(e) => write!(f, "io error: {e}"),
        }
    }
}

impl std::error::Error for Error {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            Error::Io(e) => Some(e),
            _ => None,
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e)
    }
}

pub type Result<T> = std::result::Result<T, Error>;
