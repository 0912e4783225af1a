//! Branch and reduce over vertex masks.
//!
//! One recursion serves three questions; an [`Algebra`] says how to value
//! an edgeless remainder and how to merge the "skip v" and "take v"
//! branches.

use std::collections::HashMap;
use std::hash::Hash;

use num_bigint::BigUint;
use num_traits::One;

use crate::graphs::{iter_bits, BitGraph};

pub(super) trait Algebra {
    type Value: Clone;
    /// Value of an edgeless remainder with `free` vertices.
    fn base(free: u32) -> Self::Value;
    /// Accounts for the branch vertex in the "take" branch.
    fn take(v: Self::Value) -> Self::Value;
    fn join(skip: Self::Value, take: Self::Value) -> Self::Value;
}

pub(super) struct Count;

impl Algebra for Count {
    type Value = BigUint;

    fn base(free: u32) -> BigUint {
        BigUint::one() << free
    }

    fn take(v: BigUint) -> BigUint {
        v
    }

    fn join(skip: BigUint, take: BigUint) -> BigUint {
        skip + take
    }
}

pub(super) struct Alpha;

impl Algebra for Alpha {
    type Value = u32;

    fn base(free: u32) -> u32 {
        free
    }

    fn take(v: u32) -> u32 {
        v + 1
    }

    fn join(skip: u32, take: u32) -> u32 {
        skip.max(take)
    }
}

/// (maximum size, number of sets of that size)
pub(super) struct MaxCount;

impl Algebra for MaxCount {
    type Value = (u32, BigUint);

    fn base(free: u32) -> Self::Value {
        (free, BigUint::one())
    }

    fn take((size, count): Self::Value) -> Self::Value {
        (size + 1, count)
    }

    fn join(skip: Self::Value, take: Self::Value) -> Self::Value {
        match skip.0.cmp(&take.0) {
            std::cmp::Ordering::Greater => skip,
            std::cmp::Ordering::Less => take,
            std::cmp::Ordering::Equal => (skip.0, skip.1 + take.1),
        }
    }
}

trait Mask: Clone + Eq + Hash {
    fn is_empty(&self) -> bool;
    fn count(&self) -> u32;
    fn and_count(&self, other: &Self) -> u32;
    fn and_not(&self, other: &Self) -> Self;
    fn without(&self, v: usize) -> Self;
    fn members(&self) -> Vec<usize>;
}

impl Mask for u64 {
    fn is_empty(&self) -> bool {
        *self == 0
    }

    fn count(&self) -> u32 {
        self.count_ones()
    }

    fn and_count(&self, other: &Self) -> u32 {
        (self & other).count_ones()
    }

    fn and_not(&self, other: &Self) -> Self {
        self & !other
    }

    fn without(&self, v: usize) -> Self {
        self & !(1u64 << v)
    }

    fn members(&self) -> Vec<usize> {
        iter_bits(std::slice::from_ref(self)).collect()
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
struct Wide(Vec<u64>);

impl Mask for Wide {
    fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    fn count(&self) -> u32 {
        self.0.iter().map(|w| w.count_ones()).sum()
    }

    fn and_count(&self, other: &Self) -> u32 {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| (a & b).count_ones())
            .sum()
    }

    fn and_not(&self, other: &Self) -> Self {
        Wide(self.0.iter().zip(&other.0).map(|(a, b)| a & !b).collect())
    }

    fn without(&self, v: usize) -> Self {
        let mut w = self.clone();
        w.0[v / 64] &= !(1u64 << (v % 64));
        w
    }

    fn members(&self) -> Vec<usize> {
        iter_bits(&self.0).collect()
    }
}

struct Engine<M: Mask, A: Algebra> {
    adj: Vec<M>,
    closed: Vec<M>,
    memo: Option<HashMap<M, A::Value>>,
}

impl<M: Mask, A: Algebra> Engine<M, A> {
    fn run(&mut self, rest: M) -> A::Value {
        if rest.is_empty() {
            return A::base(0);
        }
        if let Some(hit) = self.memo.as_ref().and_then(|m| m.get(&rest)) {
            return hit.clone();
        }
        // maximum degree within `rest`, ties to the smallest label
        let mut pick = None;
        let mut best = 0;
        for v in rest.members() {
            let d = self.adj[v].and_count(&rest);
            if d > best {
                best = d;
                pick = Some(v);
            }
        }
        let value = match pick {
            None => A::base(rest.count()),
            Some(v) => {
                let skip = self.run(rest.without(v));
                let take = A::take(self.run(rest.and_not(&self.closed[v])));
                A::join(skip, take)
            }
        };
        if let Some(memo) = self.memo.as_mut() {
            memo.insert(rest, value.clone());
        }
        value
    }
}

pub(super) fn solve<A: Algebra>(graph: &BitGraph) -> A::Value {
    let n = graph.n();
    let adj = graph.adjacency();
    if n <= 64 {
        let rows: Vec<u64> = (0..n).map(|v| adj.row_words(v)[0]).collect();
        let closed = rows.iter().enumerate().map(|(v, &r)| r | 1 << v).collect();
        let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        Engine::<u64, A> {
            adj: rows,
            closed,
            memo: Some(HashMap::new()),
        }
        .run(full)
    } else {
        let rows: Vec<Wide> = (0..n).map(|v| Wide(adj.row_words(v).to_vec())).collect();
        let closed = rows
            .iter()
            .enumerate()
            .map(|(v, r)| {
                let mut c = r.clone();
                c.0[v / 64] |= 1 << (v % 64);
                c
            })
            .collect();
        let mut full = Wide(vec![u64::MAX; n.div_ceil(64)]);
        if !n.is_multiple_of(64) {
            *full.0.last_mut().unwrap() = (1u64 << (n % 64)) - 1;
        }
        Engine::<Wide, A> {
            adj: rows,
            closed,
            memo: None,
        }
        .run(full)
    }
}
