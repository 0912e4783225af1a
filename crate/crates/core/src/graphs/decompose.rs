use super::{BitGraph, BitMatrix, GraphError};

/// Odd/even block form `A = P^T [[X, B], [B^T, Y]] P` of an adjacency
/// matrix, where `P` lists the odd labels first and then the even ones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionBlocks {
    /// Adjacency among odd labels `1, 3, 5, ...` (relabeled in order).
    pub x: BitMatrix,
    /// Adjacency among even labels `2, 4, 6, ...`.
    pub y: BitMatrix,
    /// Rows are odd labels, columns even labels.
    pub b: BitMatrix,
    /// Original labels in block order: odd labels, then even labels.
    pub permutation: Vec<usize>,
}

impl DecompositionBlocks {
    pub(crate) fn from_parts(x: BitMatrix, y: BitMatrix, b: BitMatrix) -> Self {
        let n = x.rows() + y.rows();
        DecompositionBlocks {
            x,
            y,
            b,
            permutation: odd_then_even(n),
        }
    }

    pub fn n(&self) -> usize {
        self.permutation.len()
    }

    /// Inverts the relabeling and rebuilds the full adjacency.
    pub fn reassemble(&self) -> BitGraph {
        let odd = self.x.rows();
        let mut g = BitGraph::empty(self.n());
        let label = |block_index: usize| self.permutation[block_index];
        for r in 0..odd {
            for c in self.x.row_ones(r).filter(|&c| c > r) {
                g.add_edge(label(r), label(c));
            }
            for c in self.b.row_ones(r) {
                g.add_edge(label(r), label(odd + c));
            }
        }
        for r in 0..self.y.rows() {
            for c in self.y.row_ones(r).filter(|&c| c > r) {
                g.add_edge(label(odd + r), label(odd + c));
            }
        }
        g
    }
}

fn odd_then_even(n: usize) -> Vec<usize> {
    (1..=n).step_by(2).chain((2..=n).step_by(2)).collect()
}

pub fn decompose(graph: &BitGraph) -> Result<DecompositionBlocks, GraphError> {
    let n = graph.n();
    if n < 2 {
        return Err(GraphError::TooFewVertices { n, min: 2 });
    }
    let odd: Vec<usize> = (1..=n).step_by(2).collect();
    let even: Vec<usize> = (2..=n).step_by(2).collect();
    let x = graph.induced(&odd).adjacency().clone();
    let y = graph.induced(&even).adjacency().clone();
    let mut b = BitMatrix::zeros(odd.len(), even.len());
    for (r, &u) in odd.iter().enumerate() {
        for (c, &v) in even.iter().enumerate() {
            if graph.has_edge(u, v) {
                b.set(r, c, true);
            }
        }
    }
    Ok(DecompositionBlocks::from_parts(x, y, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{build_riordan, RiordanSpec};

    #[test]
    fn pascal_four_blocks() {
        let d = decompose(&build_riordan(&RiordanSpec::pascal(4)).unwrap()).unwrap();
        assert_eq!(d.x.count_ones(), 2);
        assert!(d.x.get(0, 1));
        assert!(d.y.is_zero());
        // 12, 14, 32, 34 are all edges of PG_4
        assert_eq!(d.b.count_ones(), 4);
        assert_eq!(d.permutation, vec![1, 3, 2, 4]);
    }

    #[test]
    fn path_blocks() {
        let d = decompose(&BitGraph::path(4)).unwrap();
        assert!(d.x.is_zero() && d.y.is_zero());
        assert_eq!(d.b.count_ones(), 3);
        assert!(d.b.get(0, 0) && d.b.get(1, 0) && d.b.get(1, 1));
    }

    #[test]
    fn reassembly_round_trip() {
        let g = BitGraph::from_edges(7, [(1, 2), (1, 7), (3, 5), (2, 6), (4, 7), (5, 6)]);
        assert_eq!(decompose(&g).unwrap().reassemble(), g);
    }

    #[test]
    fn needs_two_vertices() {
        assert!(decompose(&BitGraph::empty(1)).is_err());
    }
}
