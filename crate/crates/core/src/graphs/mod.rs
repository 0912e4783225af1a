//! Labeled graphs built from Riordan and Toeplitz specifications, with
//! the odd/even block decomposition and structural predicates.

mod bitgraph;
mod decompose;
mod riordan;
mod spec;
mod toeplitz;

pub use bitgraph::{BitGraph, BitMatrix, ExportFormat};
pub use decompose::{decompose, DecompositionBlocks};
pub use riordan::{
    build_riordan, ceil_log2, is_io_decomposable, is_proper, multipartition,
    predict_bell_cross_block, predict_blocks, riordan_block, Family, RiordanSpec,
};
pub use spec::GraphSpec;
pub use toeplitz::{
    arithmetic_progression, build_delta, build_toeplitz, is_chordal_toeplitz, DeltaVariant,
};

pub(crate) use bitgraph::iter_bits;

use thiserror::Error;

use crate::series::SeriesError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error("f must have zero constant term")]
    NonzeroConstantF,
    #[error("spec is not proper: need [z^0]g = [z^1]f = 1 mod 2")]
    Improper,
    #[error("graph needs at least {min} vertices, got {n}")]
    TooFewVertices { n: usize, min: usize },
    #[error("invalid distances {distances:?} for n={n}: {reason}")]
    InvalidDistances {
        n: usize,
        distances: Vec<usize>,
        reason: String,
    },
    #[error("n={n} is below the characterization threshold {threshold}")]
    OutOfLemmaRange { n: usize, threshold: usize },
    #[error("invalid graph spec `{spec}`: {reason}")]
    InvalidSpec { spec: String, reason: String },
}
