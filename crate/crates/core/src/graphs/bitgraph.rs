use std::fmt::Write as _;

use serde::Serialize;

/// Dense row-major bit matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    stride: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let stride = cols.div_ceil(64);
        BitMatrix {
            rows,
            cols,
            stride,
            data: vec![0; rows * stride],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Zero-based access.
    pub fn get(&self, r: usize, c: usize) -> bool {
        assert!(
            r < self.rows && c < self.cols,
            "cell ({r},{c}) out of bounds"
        );
        (self.data[r * self.stride + c / 64] >> (c % 64)) & 1 == 1
    }

    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        assert!(
            r < self.rows && c < self.cols,
            "cell ({r},{c}) out of bounds"
        );
        let w = &mut self.data[r * self.stride + c / 64];
        if value {
            *w |= 1 << (c % 64);
        } else {
            *w &= !(1 << (c % 64));
        }
    }

    pub fn row_words(&self, r: usize) -> &[u64] {
        &self.data[r * self.stride..(r + 1) * self.stride]
    }

    pub fn count_ones(&self) -> usize {
        self.data.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn count_zeros(&self) -> usize {
        self.rows * self.cols - self.count_ones()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&w| w == 0)
    }

    pub fn transpose(&self) -> Self {
        let mut t = BitMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in self.row_ones(r) {
                t.set(c, r, true);
            }
        }
        t
    }

    /// Entrywise sum mod 2. Panics on a shape mismatch.
    pub fn xor(&self, other: &Self) -> Self {
        assert_eq!(
            (self.rows, self.cols),
            (other.rows, other.cols),
            "shape mismatch"
        );
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a ^= b;
        }
        out
    }

    /// First cell (row-major) where the two matrices differ.
    pub fn first_difference(&self, other: &Self) -> Option<(usize, usize)> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Some((0, 0));
        }
        (0..self.rows)
            .flat_map(|r| (0..self.cols).map(move |c| (r, c)))
            .find(|&(r, c)| self.get(r, c) != other.get(r, c))
    }

    /// Column indices of the set bits in row `r`.
    pub fn row_ones(&self, r: usize) -> impl Iterator<Item = usize> + '_ {
        iter_bits(self.row_words(r))
    }
}

pub(crate) fn iter_bits(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(wi, &w)| {
        let mut rest = w;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let b = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(wi * 64 + b)
        })
    })
}

/// Simple undirected graph on the labels `1..=n`.
///
/// All public methods take and return 1-based labels.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BitGraph {
    adj: BitMatrix,
}

#[derive(Serialize)]
struct JsonGraph {
    n: usize,
    edges: Vec<[usize; 2]>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    Dot,
    Json,
}

impl BitGraph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        BitGraph {
            adj: BitMatrix::zeros(n, n),
        }
    }

    pub fn complete(n: usize) -> Self {
        Self::empty(n).complement()
    }

    pub fn path(n: usize) -> Self {
        Self::from_edges(n, (1..n).map(|i| (i, i + 1)))
    }

    pub fn from_edges<I: IntoIterator<Item = (usize, usize)>>(n: usize, edges: I) -> Self {
        let mut g = Self::empty(n);
        for (i, j) in edges {
            g.add_edge(i, j);
        }
        g
    }

    /// Symmetrizes a matrix that has zero diagonal.
    pub fn from_matrix(m: &BitMatrix) -> Self {
        assert_eq!(m.rows(), m.cols(), "adjacency must be square");
        let mut g = Self::empty(m.rows());
        for r in 0..m.rows() {
            for c in m.row_ones(r) {
                assert_ne!(r, c, "adjacency diagonal must be zero");
                g.adj.set(r, c, true);
                g.adj.set(c, r, true);
            }
        }
        g
    }

    pub fn add_edge(&mut self, i: usize, j: usize) {
        let n = self.n();
        assert!(
            (1..=n).contains(&i) && (1..=n).contains(&j),
            "label out of range 1..={n}"
        );
        assert_ne!(i, j, "loops are not allowed");
        self.adj.set(i - 1, j - 1, true);
        self.adj.set(j - 1, i - 1, true);
    }

    pub fn n(&self) -> usize {
        self.adj.rows()
    }

    pub fn adjacency(&self) -> &BitMatrix {
        &self.adj
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        i != j && self.adj.get(i - 1, j - 1)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.count_ones() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj
            .row_words(v - 1)
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj.row_ones(v - 1).map(|c| c + 1)
    }

    /// Edges `(i, j)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (1..=self.n())
            .flat_map(|i| {
                self.neighbors(i)
                    .filter(move |&j| j > i)
                    .map(move |j| (i, j))
            })
            .collect()
    }

    /// Largest `|i - j|` over all edges, 0 for an edgeless graph.
    pub fn bandwidth(&self) -> usize {
        self.edges().iter().map(|&(i, j)| j - i).max().unwrap_or(0)
    }

    /// Subgraph induced by `labels`, relabeled `1..` in the given order.
    pub fn induced(&self, labels: &[usize]) -> BitGraph {
        let mut g = BitGraph::empty(labels.len());
        for (a, &u) in labels.iter().enumerate() {
            for (b, &v) in labels.iter().enumerate().skip(a + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(a + 1, b + 1);
                }
            }
        }
        g
    }

    pub fn complement(&self) -> BitGraph {
        let n = self.n();
        let mut g = BitGraph::empty(n);
        for i in 0..n {
            for j in 0..n {
                if i != j && !self.adj.get(i, j) {
                    g.adj.set(i, j, true);
                }
            }
        }
        g
    }

    /// True iff every set in `labels` has no internal edge.
    pub fn is_independent(&self, labels: &[usize]) -> bool {
        labels
            .iter()
            .enumerate()
            .all(|(a, &u)| labels[a + 1..].iter().all(|&v| !self.has_edge(u, v)))
    }

    /// Connected components as sorted label sets, ordered by least label.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n + 1];
        let mut out = Vec::new();
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                for v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        stack.push(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Whether `1 - 2 - ... - n` is a path in the graph.
    pub fn has_consecutive_ham_path(&self) -> bool {
        (1..self.n()).all(|i| self.has_edge(i, i + 1))
    }

    pub fn export(&self, format: ExportFormat) -> String {
        match format {
            ExportFormat::Json => {
                let doc = JsonGraph {
                    n: self.n(),
                    edges: self.edges().into_iter().map(|(i, j)| [i, j]).collect(),
                };
                serde_json::to_string(&doc).expect("graph JSON is always serializable")
            }
            ExportFormat::Dot => {
                let mut s = String::from("graph G {\n");
                for v in 1..=self.n() {
                    let _ = writeln!(s, "  {v};");
                }
                for (i, j) in self.edges() {
                    let _ = writeln!(s, "  {i} -- {j};");
                }
                s.push_str("}\n");
                s
            }
        }
    }
}
