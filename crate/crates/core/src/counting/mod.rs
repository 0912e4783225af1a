//! Exact counting of independent sets, cliques and maximum independent
//! sets.
//!
//! Three engines compute `i(G)`:
//! - [`count_is`]: branch and reduce, `i(G) = i(G - v) + i(G - N[v])` on a
//!   vertex of maximum degree (ties to the smallest label), memoized on
//!   the remaining-vertex mask when `n <= 64`;
//! - [`count_is_banded`]: a transfer-matrix sweep over the labels for
//!   graphs whose edges all have `|i - j| <= bandwidth`;
//! - [`brute_force_is`]: enumeration of all `2^n` subsets, used as the
//!   oracle for the other two.
//!
//! All counts include the empty set.

mod branch;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use std::ops::AddAssign;
use thiserror::Error;

use crate::graphs::BitGraph;

pub type BigCount = BigUint;

pub const BRUTE_FORCE_MAX_N: usize = 24;
pub const BANDED_MAX_WIDTH: usize = 20;
pub const MAXIMAL_LIST_MAX_N: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CountError {
    #[error("n={n} exceeds the limit {max} for this engine")]
    TooLarge { n: usize, max: usize },
    #[error("edge ({0}, {1}) is longer than the bandwidth {2}")]
    BandwidthExceeded(usize, usize, usize),
    #[error("bandwidth must be in 1..={BANDED_MAX_WIDTH}, got {0}")]
    BadBandwidth(usize),
}

pub fn count_is(graph: &BitGraph) -> BigCount {
    branch::solve::<branch::Count>(graph)
}

pub fn independence_number(graph: &BitGraph) -> usize {
    branch::solve::<branch::Alpha>(graph) as usize
}

pub fn count_cliques(graph: &BitGraph) -> BigCount {
    count_is(&graph.complement())
}

/// Maximum independent sets: their size, how many there are, and the sets
/// themselves when the graph is small enough to enumerate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaximumIs {
    pub size: usize,
    pub count: BigCount,
    pub witnesses: Option<Vec<Vec<usize>>>,
}

pub fn count_maximum_is(graph: &BitGraph) -> MaximumIs {
    let (size, count) = branch::solve::<branch::MaxCount>(graph);
    let witnesses = (graph.n() <= BRUTE_FORCE_MAX_N).then(|| {
        let table = independence_table(graph);
        let mut sets: Vec<Vec<usize>> = table
            .iter()
            .enumerate()
            .filter(|&(mask, &ok)| ok && (mask as u32).count_ones() == size)
            .map(|(mask, _)| mask_labels(mask as u64))
            .collect();
        sets.sort();
        sets
    });
    MaximumIs {
        size: size as usize,
        count,
        witnesses,
    }
}

fn mask_labels(mask: u64) -> Vec<usize> {
    (0..64)
        .filter(|b| mask >> b & 1 == 1)
        .map(|b| b + 1)
        .collect()
}

fn low_masks(graph: &BitGraph) -> Vec<u64> {
    (0..graph.n())
        .map(|v| graph.adjacency().row_words(v).first().copied().unwrap_or(0))
        .collect()
}

/// `table[mask]` is true iff the vertex set `mask` is independent.
fn independence_table(graph: &BitGraph) -> Vec<bool> {
    let n = graph.n();
    let adj = low_masks(graph);
    let mut table = vec![false; 1usize << n];
    table[0] = true;
    for mask in 1usize..(1 << n) {
        let v = mask.trailing_zeros() as usize;
        let rest = mask & (mask - 1);
        table[mask] = table[rest] && adj[v] & rest as u64 == 0;
    }
    table
}

pub fn brute_force_is(graph: &BitGraph) -> Result<BigCount, CountError> {
    let n = graph.n();
    if n > BRUTE_FORCE_MAX_N {
        return Err(CountError::TooLarge {
            n,
            max: BRUTE_FORCE_MAX_N,
        });
    }
    let count = independence_table(graph).iter().filter(|&&ok| ok).count();
    Ok(BigUint::from(count))
}

pub fn count_is_banded(graph: &BitGraph, bandwidth: usize) -> Result<BigCount, CountError> {
    if bandwidth == 0 || bandwidth > BANDED_MAX_WIDTH {
        return Err(CountError::BadBandwidth(bandwidth));
    }
    if let Some((i, j)) = graph.edges().into_iter().find(|&(i, j)| j - i > bandwidth) {
        return Err(CountError::BandwidthExceeded(i, j, bandwidth));
    }
    let n = graph.n();
    let width = bandwidth.min(n.max(1));
    // back[v] bit b: v is adjacent to v - 1 - b
    let back: Vec<usize> = (1..=n)
        .map(|v| {
            (0..width)
                .filter(|&b| v > b + 1 && graph.has_edge(v, v - 1 - b))
                .fold(0, |acc, b| acc | 1 << b)
        })
        .collect();
    // counts are at most 2^n
    Ok(if n < 128 {
        BigUint::from(transfer::<u128>(&back, width))
    } else {
        transfer::<BigUint>(&back, width)
    })
}

fn transfer<T>(back: &[usize], width: usize) -> T
where
    T: Zero + One + Clone + for<'a> AddAssign<&'a T>,
{
    let states = 1usize << width;
    let full = states - 1;
    let mut cur = vec![T::zero(); states];
    cur[0] = T::one();
    for &nb in back {
        let mut next = vec![T::zero(); states];
        for (s, c) in cur.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            next[(s << 1) & full] += c;
            if s & nb == 0 {
                next[((s << 1) | 1) & full] += c;
            }
        }
        cur = next;
    }
    let mut total = T::zero();
    for c in &cur {
        total += c;
    }
    total
}

/// All inclusion-maximal independent sets, each sorted, in lexicographic
/// order. Runs Bron–Kerbosch with pivoting on the complement graph.
pub fn list_maximal_is(graph: &BitGraph) -> Result<Vec<Vec<usize>>, CountError> {
    let n = graph.n();
    if n > MAXIMAL_LIST_MAX_N {
        return Err(CountError::TooLarge {
            n,
            max: MAXIMAL_LIST_MAX_N,
        });
    }
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let comp: Vec<u64> = low_masks(graph)
        .iter()
        .enumerate()
        .map(|(v, &a)| !a & all & !(1u64 << v))
        .collect();
    let mut out = Vec::new();
    bron_kerbosch(&comp, 0, all, 0, &mut out);
    let mut sets: Vec<Vec<usize>> = out.into_iter().map(mask_labels).collect();
    sets.sort();
    Ok(sets)
}

fn bron_kerbosch(nbr: &[u64], r: u64, mut p: u64, mut x: u64, out: &mut Vec<u64>) {
    if p == 0 {
        if x == 0 {
            out.push(r);
        }
        return;
    }
    let pivot = iter_mask(p | x)
        .max_by_key(|&u| ((p & nbr[u]).count_ones(), std::cmp::Reverse(u)))
        .expect("p is nonempty");
    for v in iter_mask(p & !nbr[pivot]) {
        let bit = 1u64 << v;
        bron_kerbosch(nbr, r | bit, p & nbr[v], x & nbr[v], out);
        p &= !bit;
        x |= bit;
    }
}

fn iter_mask(mask: u64) -> impl Iterator<Item = usize> {
    let mut rest = mask;
    std::iter::from_fn(move || {
        if rest == 0 {
            return None;
        }
        let b = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        Some(b)
    })
}
