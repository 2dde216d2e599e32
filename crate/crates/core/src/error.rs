//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("rank must be at least 1, got {0}")]
    InvalidRank(usize),

    #[error("a-coordinates {0:?} are not strictly decreasing and positive")]
    NotDominantRegular(Vec<i64>),

    #[error("a-coordinates {0:?} mix parities; all entries must share one congruence class")]
    MixedParity(Vec<i64>),

    #[error(
        "a-coordinates {coords:?} have parity {found} but tensor power {power} \
         requires parity {required}"
    )]
    ParityMismatch {
        coords: Vec<i64>,
        power: u64,
        found: u8,
        required: u8,
    },

    #[error("coordinate vector has length {found}, expected rank {expected}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("orthotope endpoints must satisfy c_i <= d_i, got c={c:?}, d={d:?}")]
    InvalidOrthotope { c: Vec<f64>, d: Vec<f64> },

    #[error(
        "cutoff {cutoff} admits no support point for rank {rank}, power {power}; \
         the smallest support point already violates max_i(a_i + 2n - 1) < sqrt(N) * C"
    )]
    EmptyRegion { rank: usize, power: u64, cutoff: f64 },

    #[error("{nodes} quadrature nodes per axis are too few for rank {rank}; need at least {min}")]
    InsufficientNodes { rank: usize, nodes: usize, min: usize },

    #[error("rank {rank} exceeds the default quadrature rank limit {max}; call the *_with_nodes variant")]
    RankTooLarge { rank: usize, max: usize },

    #[error(
        "quadrature did not reach tolerance {tol:e} within the evaluation budget; \
         best estimate {best_estimate}"
    )]
    QuadratureBudget { best_estimate: f64, tol: f64 },

    #[error(
        "support of rank {rank}, power {power} has {points} points, above the exact-table \
         sampling limit {limit}; reduce the tensor power"
    )]
    SupportTooLarge {
        rank: usize,
        power: u64,
        points: u128,
        limit: u128,
    },

    #[error("tolerance must be positive, got {0}")]
    InvalidTolerance(f64),
}
