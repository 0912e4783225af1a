//! Closed forms and bounds for independent-set counts, over arbitrary
//! precision integers. Nothing here counts a graph except where a bound
//! is defined in terms of a smaller graph's count.

mod bounds;
mod sequences;
mod wellbased;

pub use bounds::{
    chordal_toeplitz_cliques, chordal_toeplitz_cliques_corrected, chordal_toeplitz_is,
    fibonacci_upper_bound, io_dec_lower_bound, io_dec_lower_bound_as_printed,
    io_independence_claims, io_upper_bound, k_type_upper_bound, multipartite_lower_bound,
    odd_even_lower_bound, odd_even_lower_bound_as_printed, pascal_upper_bound,
};
pub use sequences::{
    delta, delta_by_recurrence, delta_by_series, fibonacci, k_fibonacci, pell, pell_binet,
    rational_series, IntPolynomial,
};
pub use wellbased::{
    is_well_based, toeplitz_lower_bound, well_based_completion, well_based_series_count,
    WellBasedResult,
};

use thiserror::Error;

use crate::graphs::GraphError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormulaError {
    #[error("k must be at least 2, got {0}")]
    KTooSmall(usize),
    #[error("index {0} is outside the domain")]
    IndexOutOfDomain(usize),
    #[error("denominator must have constant term +-1")]
    NonUnitDenominator,
    #[error("{0:?} is not well-based")]
    NotWellBased(Vec<usize>),
    #[error("distances {0:?} must be increasing and lie in [1, n-1]")]
    InvalidDistances(Vec<usize>),
    #[error("no well-based completion of {0:?} exists within [n]")]
    NoCompletion(Vec<usize>),
    #[error("n={n} is below the threshold {threshold}")]
    OrderBelowThreshold { n: usize, threshold: usize },
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("bound needs n >= {min}, got {n}")]
    NotApplicable { n: usize, min: usize },
    #[error("spec is not io-decomposable")]
    NotIoDecomposable,
    #[error("{0} evaluated to a negative value")]
    NegativeValue(&'static str),
    #[error(transparent)]
    Graph(#[from] GraphError),
}
