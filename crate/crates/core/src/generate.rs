//! Parameterized graph families used as patterns, hosts and fixtures.

use crate::graph::Graph;
use thiserror::Error;

/// Errors from family generators with constrained parameters.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenerateError {
    #[error("cycle needs at least 3 vertices, got {0}")]
    CycleTooShort(usize),
    #[error("circulant offset {offset} out of range 1..={max} for order {n}")]
    BadCirculantOffset { n: usize, offset: usize, max: usize },
    #[error("duplicate circulant offset {0}")]
    DuplicateCirculantOffset(usize),
    #[error("regular bipartite wiring requires equal sides, got {a} and {b}")]
    UnequalSides { a: usize, b: usize },
    #[error("cannot wire {r}-regular bipartite graph on sides of {side}")]
    DegreeTooLarge { side: usize, r: usize },
}

/// The path `P_n` on `n` vertices: edges `(i, i+1)`.
pub fn path(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for i in 1..n {
        g.add_edge_mut(i - 1, i).unwrap();
    }
    g
}

/// The cycle `C_n`, `n >= 3`.
pub fn cycle(n: usize) -> Result<Graph, GenerateError> {
    if n < 3 {
        return Err(GenerateError::CycleTooShort(n));
    }
    let mut g = path(n);
    g.add_edge_mut(n - 1, 0).unwrap();
    Ok(g)
}

/// The star `K_{1,k}`: vertex 0 is the center, `1..=k` are leaves.
pub fn star(k: usize) -> Graph {
    let mut g = Graph::empty(k + 1);
    for v in 1..=k {
        g.add_edge_mut(0, v).unwrap();
    }
    g
}

/// The complete graph `K_n`.
pub fn clique(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge_mut(u, v).unwrap();
        }
    }
    g
}

/// Complete multipartite graph; `parts[i]` vertices in part `i`, parts laid
/// out consecutively, all cross-part pairs adjacent.
pub fn complete_multipartite(parts: &[usize]) -> Graph {
    let n: usize = parts.iter().sum();
    let mut g = Graph::empty(n);
    let mut starts = Vec::with_capacity(parts.len());
    let mut acc = 0;
    for &p in parts {
        starts.push(acc);
        acc += p;
    }
    for i in 0..parts.len() {
        for j in i + 1..parts.len() {
            for u in starts[i]..starts[i] + parts[i] {
                for v in starts[j]..starts[j] + parts[j] {
                    g.add_edge_mut(u, v).unwrap();
                }
            }
        }
    }
    g
}

/// Circulant graph on `n` vertices: `i` adjacent to `i ± d (mod n)` for each
/// offset `d`. Offsets must be distinct and lie in `1..=n/2`.
pub fn circulant(n: usize, offsets: &[usize]) -> Result<Graph, GenerateError> {
    let max = n / 2;
    let mut seen = vec![false; max + 1];
    let mut g = Graph::empty(n);
    for &d in offsets {
        if d == 0 || d > max {
            return Err(GenerateError::BadCirculantOffset { n, offset: d, max });
        }
        if seen[d] {
            return Err(GenerateError::DuplicateCirculantOffset(d));
        }
        seen[d] = true;
        for i in 0..n {
            let j = (i + d) % n;
            // The antipodal offset on even n pairs each i with i + n/2 once.
            let _ = g.add_edge_mut(i, j);
        }
    }
    Ok(g)
}

/// An `r`-regular bipartite graph wired cyclically: left vertex `i`
/// (indices `0..a`) joins right vertices `i, i+1, ..., i+r-1 (mod a)`
/// (indices `a..2a`). Requires equal sides `a = b >= r`.
pub fn regular_bipartite(a: usize, b: usize, r: usize) -> Result<Graph, GenerateError> {
    if a != b {
        return Err(GenerateError::UnequalSides { a, b });
    }
    if r > a {
        return Err(GenerateError::DegreeTooLarge { side: a, r });
    }
    let mut g = Graph::empty(2 * a);
    for i in 0..a {
        for o in 0..r {
            g.add_edge_mut(i, a + (i + o) % a).unwrap();
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_shapes() {
        assert_eq!(path(0).order(), 0);
        assert_eq!(path(1).size(), 0);
        let p4 = path(4);
        assert_eq!(p4.size(), 3);
        assert_eq!(p4.edges(), vec![(0, 1), (1, 2), (2, 3)]);
    }

    #[test]
    fn cycle_shapes() {
        assert!(cycle(2).is_err());
        let c5 = cycle(5).unwrap();
        assert_eq!(c5.size(), 5);
        assert!((0..5).all(|v| c5.degree(v) == 2));
    }

    #[test]
    fn star_center_is_zero() {
        let s = star(5);
        assert_eq!(s.order(), 6);
        assert_eq!(s.size(), 5);
        assert_eq!(s.degree(0), 5);
        assert!((1..6).all(|v| s.degree(v) == 1));
    }

    #[test]
    fn clique_is_complete() {
        let k4 = clique(4);
        assert_eq!(k4.size(), 6);
        assert!(k4.non_edges().is_empty());
    }

    #[test]
    fn complete_multipartite_shapes() {
        // K_{1,1,3}: two singletons joined to each other and to a 3-set.
        let g = complete_multipartite(&[1, 1, 3]);
        assert_eq!(g.order(), 5);
        assert_eq!(g.size(), 1 + 3 + 3);
        assert!(!g.has_edge(2, 3));
        assert!(g.has_edge(0, 1));
    }

    #[test]
    fn circulant_degrees() {
        let g = circulant(10, &[1, 2]).unwrap();
        assert!((0..10).all(|v| g.degree(v) == 4));
        // Antipodal offset contributes degree 1, not 2.
        let h = circulant(6, &[3]).unwrap();
        assert!((0..6).all(|v| h.degree(v) == 1));
        assert!(circulant(6, &[4]).is_err());
        assert!(circulant(6, &[1, 1]).is_err());
    }

    #[test]
    fn regular_bipartite_is_regular_and_bipartite() {
        let g = regular_bipartite(6, 6, 2).unwrap();
        assert_eq!(g.order(), 12);
        assert_eq!(g.size(), 12);
        assert!((0..12).all(|v| g.degree(v) == 2));
        for u in 0..6 {
            for v in 0..6 {
                assert!(!g.has_edge(u, v) || u == v);
            }
        }
        assert!(regular_bipartite(3, 4, 1).is_err());
        assert!(regular_bipartite(3, 3, 4).is_err());
        assert_eq!(regular_bipartite(4, 4, 0).unwrap().size(), 0);
    }
}
