//! Dense undirected simple graphs with bit-row adjacency.
//!
//! Vertices are `0..order()`. Each vertex owns a row of machine words whose
//! set bits are its neighbors, so neighborhood intersection, union and
//! difference — the workhorses of the weight functions and the saturation
//! verifier — are word-parallel.

use std::fmt;
use thiserror::Error;

const WORD_BITS: usize = 64;

/// Errors from graph construction and edge-level queries.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {v} out of range for order {order}")]
    VertexOutOfRange { v: usize, order: usize },
    #[error("self-loop at vertex {v}")]
    SelfLoop { v: usize },
    #[error("duplicate edge ({u}, {v})")]
    DuplicateEdge { u: usize, v: usize },
    #[error("edge ({u}, {v}) already present")]
    EdgeExists { u: usize, v: usize },
    #[error("({u}, {v}) is not an edge")]
    NotAnEdge { u: usize, v: usize },
}

/// An undirected simple graph on `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
    m: usize,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Graph {
        let words = n.div_ceil(WORD_BITS).max(1);
        Graph {
            n,
            words,
            bits: vec![0; n.max(1) * words],
            m: 0,
        }
    }

    /// Builds a graph from an explicit edge list.
    ///
    /// Rejects loops, endpoints `>= n`, and edges listed twice (in either
    /// orientation).
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.add_edge_mut(u, v).map_err(|e| match e {
                GraphError::EdgeExists { u, v } => GraphError::DuplicateEdge { u, v },
                other => other,
            })?;
        }
        Ok(g)
    }

    /// Number of vertices.
    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    #[inline]
    pub fn size(&self) -> usize {
        self.m
    }

    #[inline]
    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { v, order: self.n })
        }
    }

    /// The adjacency row of `v` as a word slice.
    #[inline]
    pub(crate) fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.words..(v + 1) * self.words]
    }

    /// Is `uv` an edge? Out-of-range arguments are a caller bug.
    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        debug_assert!(u < self.n && v < self.n);
        self.bits[u * self.words + v / WORD_BITS] >> (v % WORD_BITS) & 1 == 1
    }

    /// Degree of `v`.
    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Iterates over the neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> Neighbors<'_> {
        Neighbors {
            words: self.row(v),
            idx: 0,
            cur: self.row(v).first().copied().unwrap_or(0),
        }
    }

    /// Adds edge `uv` in place.
    pub fn add_edge_mut(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SelfLoop { v });
        }
        if self.has_edge(u, v) {
            return Err(GraphError::EdgeExists { u, v });
        }
        self.bits[u * self.words + v / WORD_BITS] |= 1 << (v % WORD_BITS);
        self.bits[v * self.words + u / WORD_BITS] |= 1 << (u % WORD_BITS);
        self.m += 1;
        Ok(())
    }

    /// Returns a copy of the graph with edge `uv` added; `self` is untouched.
    pub fn add_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        let mut g = self.clone();
        g.add_edge_mut(u, v)?;
        Ok(g)
    }

    pub(crate) fn remove_edge_mut(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v || !self.has_edge(u, v) {
            return Err(GraphError::NotAnEdge { u, v });
        }
        self.bits[u * self.words + v / WORD_BITS] &= !(1 << (v % WORD_BITS));
        self.bits[v * self.words + u / WORD_BITS] &= !(1 << (u % WORD_BITS));
        self.m -= 1;
        Ok(())
    }

    /// All edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            for v in self.neighbors(u) {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// All non-adjacent pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn non_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// `|N(u) ∩ N(v)|` — the number of common neighbors.
    #[inline]
    pub fn common_neighbor_count(&self, u: usize, v: usize) -> usize {
        self.row(u)
            .iter()
            .zip(self.row(v))
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// The edge neighborhood `N(uv) = (N(u) ∪ N(v)) − {u, v}`, ascending.
    ///
    /// Defined only when `uv` is an edge.
    pub fn edge_neighborhood(&self, u: usize, v: usize) -> Result<Vec<usize>, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v || !self.has_edge(u, v) {
            return Err(GraphError::NotAnEdge { u, v });
        }
        let mut out = Vec::new();
        for (i, (a, b)) in self.row(u).iter().zip(self.row(v)).enumerate() {
            let mut w = a | b;
            while w != 0 {
                let x = i * WORD_BITS + w.trailing_zeros() as usize;
                if x != u && x != v {
                    out.push(x);
                }
                w &= w - 1;
            }
        }
        Ok(out)
    }

    /// True when no three vertices are pairwise adjacent.
    pub fn is_triangle_free(&self) -> bool {
        self.edges()
            .iter()
            .all(|&(u, v)| self.common_neighbor_count(u, v) == 0)
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`. `perm` must be a
    /// permutation of `0..order()`; anything else is a caller bug.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.add_edge_mut(perm[u], perm[v]).expect("perm must be a permutation");
        }
        g
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={}, edges={:?})", self.n, self.m, self.edges())
    }
}

/// Ascending neighbor iterator; see [`Graph::neighbors`].
pub struct Neighbors<'a> {
    words: &'a [u64],
    idx: usize,
    cur: u64,
}

impl Iterator for Neighbors<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.cur != 0 {
                let v = self.idx * WORD_BITS + self.cur.trailing_zeros() as usize;
                self.cur &= self.cur - 1;
                return Some(v);
            }
            self.idx += 1;
            if self.idx >= self.words.len() {
                return None;
            }
            self.cur = self.words[self.idx];
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_graph_has_no_edges() {
        let g = Graph::empty(5);
        assert_eq!(g.order(), 5);
        assert_eq!(g.size(), 0);
        assert!(g.edges().is_empty());
        assert_eq!(g.non_edges().len(), 10);
    }

    #[test]
    fn zero_order_graph_is_fine() {
        let g = Graph::empty(0);
        assert_eq!(g.order(), 0);
        assert_eq!(g.size(), 0);
        assert!(g.edges().is_empty());
        assert!(g.non_edges().is_empty());
    }

    #[test]
    fn from_edge_list_builds_path() {
        let g = Graph::from_edge_list(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(g.size(), 2);
        assert!(g.has_edge(0, 1) && g.has_edge(1, 0));
        assert!(g.has_edge(1, 2));
        assert!(!g.has_edge(0, 2));
        assert_eq!(g.degree(1), 2);
        assert_eq!(g.degree(0), 1);
    }

    #[test]
    fn from_edge_list_rejects_bad_input() {
        assert_eq!(
            Graph::from_edge_list(3, &[(0, 0)]),
            Err(GraphError::SelfLoop { v: 0 })
        );
        assert_eq!(
            Graph::from_edge_list(3, &[(0, 3)]),
            Err(GraphError::VertexOutOfRange { v: 3, order: 3 })
        );
        assert_eq!(
            Graph::from_edge_list(3, &[(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge { u: 1, v: 0 })
        );
    }

    #[test]
    fn add_edge_is_pure() {
        let g = Graph::from_edge_list(3, &[(0, 1)]).unwrap();
        let h = g.add_edge(1, 2).unwrap();
        assert_eq!(g.size(), 1);
        assert_eq!(h.size(), 2);
        assert!(h.has_edge(1, 2));
        assert!(!g.has_edge(1, 2));
        assert_eq!(
            g.add_edge(0, 1),
            Err(GraphError::EdgeExists { u: 0, v: 1 })
        );
    }

    #[test]
    fn neighbors_are_ascending() {
        let g = Graph::from_edge_list(6, &[(2, 5), (2, 0), (2, 4)]).unwrap();
        assert_eq!(g.neighbors(2).collect::<Vec<_>>(), vec![0, 4, 5]);
        assert_eq!(g.neighbors(3).count(), 0);
    }

    #[test]
    fn rows_span_multiple_words() {
        // 130 vertices forces three words per row.
        let mut g = Graph::empty(130);
        g.add_edge_mut(0, 127).unwrap();
        g.add_edge_mut(0, 128).unwrap();
        g.add_edge_mut(129, 0).unwrap();
        assert_eq!(g.degree(0), 3);
        assert_eq!(g.neighbors(0).collect::<Vec<_>>(), vec![127, 128, 129]);
        assert!(g.has_edge(128, 0));
        assert_eq!(g.size(), 3);
    }

    #[test]
    fn edge_neighborhood_drops_endpoints() {
        // Triangle 0-1-2 plus pendant 3 at 0.
        let g = Graph::from_edge_list(4, &[(0, 1), (1, 2), (0, 2), (0, 3)]).unwrap();
        assert_eq!(g.edge_neighborhood(0, 1).unwrap(), vec![2, 3]);
        assert_eq!(g.edge_neighborhood(1, 2).unwrap(), vec![0]);
        assert_eq!(
            g.edge_neighborhood(1, 3),
            Err(GraphError::NotAnEdge { u: 1, v: 3 })
        );
    }

    #[test]
    fn isolated_edge_has_empty_neighborhood() {
        let g = Graph::from_edge_list(2, &[(0, 1)]).unwrap();
        assert_eq!(g.edge_neighborhood(0, 1).unwrap(), Vec::<usize>::new());
    }

    #[test]
    fn triangle_free_detection() {
        let g = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!(g.is_triangle_free());
        let h = g.add_edge(0, 2).unwrap();
        assert!(!h.is_triangle_free());
    }

    #[test]
    fn common_neighbors_counted() {
        let g = Graph::from_edge_list(5, &[(0, 2), (1, 2), (0, 3), (1, 3), (0, 4)]).unwrap();
        assert_eq!(g.common_neighbor_count(0, 1), 2);
        assert_eq!(g.common_neighbor_count(2, 3), 2);
        assert_eq!(g.common_neighbor_count(0, 4), 0);
    }

    #[test]
    fn degree_sum_is_twice_size() {
        let g = Graph::from_edge_list(6, &[(0, 1), (0, 2), (3, 4), (4, 5), (1, 2)]).unwrap();
        let sum: usize = (0..g.order()).map(|v| g.degree(v)).sum();
        assert_eq!(sum, 2 * g.size());
    }

    #[test]
    fn relabel_permutes_edges() {
        let g = Graph::from_edge_list(3, &[(0, 1), (1, 2)]).unwrap();
        let h = g.relabel(&[2, 0, 1]);
        assert_eq!(h.edges(), vec![(0, 1), (0, 2)]);
    }
}
