//! Edge weight functions and the derived constants `k0`, `k1`, `k0'`, `k1'`.
//!
//! For an edge `uv` with `d(u) <= d(v)`:
//!
//! * `wt_cp(uv) = 2|N(u) ∩ N(v)| + |N(v) − N(u)| − 1`, which simplifies to
//!   `|N(u) ∩ N(v)| + max(d(u), d(v)) − 1`;
//! * `wt0(uv) = max(d(u), d(v)) − 1`;
//! * `wt1(uv) = max { d(w) : w ∈ N(uv) }`, defined only when the edge
//!   neighborhood `N(uv)` is nonempty (i.e. `uv` is not an isolated edge).
//!
//! The constants minimize over all edges: `k0 = min wt0`, `k1 = min wt1`,
//! `k0' = min { wt0(e) : wt1(e) = k1 }`, `k1' = min { wt1(e) : wt0(e) = k0 }`.
//! On triangle-free graphs `wt_cp` and `wt0` coincide.

use crate::graph::Graph;
use thiserror::Error;

/// Errors from weight computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeightError {
    #[error("({u}, {v}) is not an edge")]
    NotAnEdge { u: usize, v: usize },
    #[error("graph has no edges, weight constants undefined")]
    NoEdges,
    #[error("isolated edge ({u}, {v}): wt1 undefined, constants undefined")]
    IsolatedEdge { u: usize, v: usize },
}

/// All three weights of a single edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeWeights {
    pub edge: (usize, usize),
    pub wt_cp: usize,
    pub wt0: usize,
    /// `None` exactly when the edge is isolated.
    pub wt1: Option<usize>,
}

/// Lexicographically least edges attaining each constant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightWitnesses {
    pub k0: (usize, usize),
    pub k1: (usize, usize),
    pub k0p: (usize, usize),
    pub k1p: (usize, usize),
    pub min_wt_cp: (usize, usize),
}

/// The weight constants of a pattern graph, with the per-edge table they
/// were minimized over.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightSummary {
    /// Order of the graph the summary was computed from.
    pub order: usize,
    pub k0: usize,
    pub k1: usize,
    pub k0p: usize,
    pub k1p: usize,
    pub min_wt_cp: usize,
    pub per_edge: Vec<EdgeWeights>,
    pub witnesses: WeightWitnesses,
}

fn require_edge(h: &Graph, u: usize, v: usize) -> Result<(), WeightError> {
    if u < h.order() && v < h.order() && u != v && h.has_edge(u, v) {
        Ok(())
    } else {
        Err(WeightError::NotAnEdge { u, v })
    }
}

/// `wt_cp` of edge `uv`.
pub fn wt_cp(h: &Graph, u: usize, v: usize) -> Result<usize, WeightError> {
    require_edge(h, u, v)?;
    // 2|N(u)∩N(v)| + |N(v)−N(u)| − 1 with d(u) <= d(v); since u ∈ N(v)−N(u)
    // this is |N(u)∩N(v)| + max degree − 1 regardless of orientation.
    Ok(h.common_neighbor_count(u, v) + h.degree(u).max(h.degree(v)) - 1)
}

/// `wt0` of edge `uv`: the larger endpoint degree minus one.
pub fn wt0(h: &Graph, u: usize, v: usize) -> Result<usize, WeightError> {
    require_edge(h, u, v)?;
    Ok(h.degree(u).max(h.degree(v)) - 1)
}

/// `wt1` of edge `uv`: the largest degree over the edge neighborhood, or
/// `None` for an isolated edge.
pub fn wt1(h: &Graph, u: usize, v: usize) -> Result<Option<usize>, WeightError> {
    require_edge(h, u, v)?;
    Ok(h.edge_neighborhood(u, v)
        .unwrap()
        .into_iter()
        .map(|w| h.degree(w))
        .max())
}

/// Does `h` contain an edge both of whose endpoints have degree one?
pub fn has_isolated_edge(h: &Graph) -> bool {
    h.edges()
        .iter()
        .any(|&(u, v)| h.degree(u) == 1 && h.degree(v) == 1)
}

/// Computes all four weight constants plus the `wt_cp` minimum by scanning
/// every edge. Fails on edgeless graphs and on graphs with an isolated edge
/// (where `wt1`, hence `k1` and both primed constants, are undefined).
pub fn weight_summary(h: &Graph) -> Result<WeightSummary, WeightError> {
    let edges = h.edges();
    if edges.is_empty() {
        return Err(WeightError::NoEdges);
    }
    let mut per_edge = Vec::with_capacity(edges.len());
    for &(u, v) in &edges {
        let w1 = wt1(h, u, v)?;
        if w1.is_none() {
            return Err(WeightError::IsolatedEdge { u, v });
        }
        per_edge.push(EdgeWeights {
            edge: (u, v),
            wt_cp: wt_cp(h, u, v)?,
            wt0: wt0(h, u, v)?,
            wt1: w1,
        });
    }

    let min_by = |f: &dyn Fn(&EdgeWeights) -> Option<usize>| -> (usize, (usize, usize)) {
        per_edge
            .iter()
            .filter_map(|e| f(e).map(|val| (val, e.edge)))
            .min()
            .expect("at least one edge qualifies")
    };

    let (k0, k0_edge) = min_by(&|e| Some(e.wt0));
    let (k1, k1_edge) = min_by(&|e| e.wt1);
    let (k0p, k0p_edge) = min_by(&|e| (e.wt1 == Some(k1)).then_some(e.wt0));
    let (k1p, k1p_edge) = min_by(&|e| (e.wt0 == k0).then(|| e.wt1.unwrap()));
    let (min_wt_cp, cp_edge) = min_by(&|e| Some(e.wt_cp));

    Ok(WeightSummary {
        order: h.order(),
        k0,
        k1,
        k0p,
        k1p,
        min_wt_cp,
        per_edge,
        witnesses: WeightWitnesses {
            k0: k0_edge,
            k1: k1_edge,
            k0p: k0p_edge,
            k1p: k1p_edge,
            min_wt_cp: cp_edge,
        },
    })
}
