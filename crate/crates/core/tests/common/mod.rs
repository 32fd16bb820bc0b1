//! Independent reference implementations and shared fixtures for the
//! integration suites. Everything here is deliberately naive: plain
//! nested loops and full injection scans with no ordering heuristics, no
//! anchoring, and no pruning beyond validity, so that agreement with the
//! library is meaningful.

use saturn_core::constructions::double_star;
use saturn_core::generate::{clique, cycle, path, star};
use saturn_core::Graph;

/// Tries every injective map from pattern vertices to host vertices.
pub fn naive_has_embedding(host: &Graph, pattern: &Graph) -> bool {
    fn extend(host: &Graph, pattern: &Graph, map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let p = map.len();
        if p == pattern.order() {
            return true;
        }
        for v in 0..host.order() {
            if used[v] {
                continue;
            }
            let consistent = (0..p).all(|q| !pattern.has_edge(q, p) || host.has_edge(map[q], v));
            if !consistent {
                continue;
            }
            map.push(v);
            used[v] = true;
            if extend(host, pattern, map, used) {
                return true;
            }
            map.pop();
            used[v] = false;
        }
        false
    }
    if pattern.order() > host.order() {
        return false;
    }
    extend(host, pattern, &mut Vec::new(), &mut vec![false; host.order()])
}

pub fn naive_is_free(host: &Graph, pattern: &Graph) -> bool {
    !naive_has_embedding(host, pattern)
}

/// The double loop straight from the definition: free, and every non-edge
/// addition creates a copy (checked by full unanchored search).
pub fn naive_is_saturated(host: &Graph, pattern: &Graph) -> bool {
    naive_is_free(host, pattern)
        && host
            .non_edges()
            .into_iter()
            .all(|(u, v)| naive_has_embedding(&host.add_edge(u, v).unwrap(), pattern))
}

/// The triangle with one pendant edge.
pub fn paw() -> Graph {
    Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 0), (0, 3)]).unwrap()
}

/// The seven-pattern corpus used by the oracle sweeps, all of order at
/// most 5.
pub fn corpus() -> Vec<(String, Graph)> {
    vec![
        ("P_3".to_string(), path(3)),
        ("P_4".to_string(), path(4)),
        ("K_1,3".to_string(), star(3)),
        ("K_3".to_string(), clique(3)),
        ("C_4".to_string(), cycle(4).unwrap()),
        ("S_2,3".to_string(), double_star(2, 3)),
        ("paw".to_string(), paw()),
    ]
}

/// The triangle-free members of [`corpus`], by name.
pub fn triangle_free_corpus() -> Vec<(String, Graph)> {
    corpus()
        .into_iter()
        .filter(|(_, h)| h.is_triangle_free())
        .collect()
}
