use super::{BitGraph, GraphError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DeltaVariant {
    /// Path plus the chords `(2i-1)(2i+1)`.
    Plain,
    /// Path plus the chords `(2i)(2i+2)`.
    Tilde,
}

pub(crate) fn validate_distances(n: usize, distances: &[usize]) -> Result<(), GraphError> {
    let bad = |reason: &str| GraphError::InvalidDistances {
        n,
        distances: distances.to_vec(),
        reason: reason.to_string(),
    };
    if distances.is_empty() {
        return Err(bad("distance list is empty"));
    }
    if distances.windows(2).any(|w| w[0] >= w[1]) {
        return Err(bad("distances must be strictly increasing"));
    }
    if distances[0] == 0 || *distances.last().unwrap() >= n {
        return Err(bad("distances must lie in 1..n-1"));
    }
    Ok(())
}

/// `T_n<t_1, ..., t_k>`: `i ~ j` iff `|i - j|` is one of the distances.
pub fn build_toeplitz(n: usize, distances: &[usize]) -> Result<BitGraph, GraphError> {
    validate_distances(n, distances)?;
    let mut g = BitGraph::empty(n);
    for &t in distances {
        for i in 1..=n - t {
            g.add_edge(i, i + t);
        }
    }
    Ok(g)
}

pub fn build_delta(n: usize, variant: DeltaVariant) -> BitGraph {
    let mut g = BitGraph::path(n);
    let first = match variant {
        DeltaVariant::Plain => 1,
        DeltaVariant::Tilde => 2,
    };
    let mut i = first;
    while i + 2 <= n {
        g.add_edge(i, i + 2);
        i += 2;
    }
    g
}

/// Chordality of `T_n<t_1, ..., t_k>`, decided by the arithmetic-progression
/// characterization `t_j = j t_1`. The characterization only covers
/// `n >= t_k + t_{k-1} + 1`; smaller orders are an error.
pub fn is_chordal_toeplitz(n: usize, distances: &[usize]) -> Result<bool, GraphError> {
    validate_distances(n, distances)?;
    let k = distances.len();
    let threshold = distances[k - 1] + if k >= 2 { distances[k - 2] } else { 0 } + 1;
    if n < threshold {
        return Err(GraphError::OutOfLemmaRange { n, threshold });
    }
    let t = distances[0];
    Ok(distances.iter().enumerate().all(|(j, &d)| d == (j + 1) * t))
}

/// `(k, t)` when the distances are `{t, 2t, ..., kt}`.
pub fn arithmetic_progression(distances: &[usize]) -> Option<(usize, usize)> {
    let t = *distances.first()?;
    distances
        .iter()
        .enumerate()
        .all(|(j, &d)| d == (j + 1) * t)
        .then_some((distances.len(), t))
}
