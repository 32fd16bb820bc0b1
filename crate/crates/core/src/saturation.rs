//! Subgraph embeddings, saturation verdicts, and the structural predicates
//! that minimum saturated graphs must satisfy.
//!
//! Semantics are *subgraph*, not induced: a pattern `H` embeds in a host `G`
//! when some injection maps every pattern edge onto a host edge; host edges
//! between image vertices that `H` lacks are allowed.
//!
//! The saturation check leans on one observation: if `G` is `H`-free, then
//! every copy of `H` in `G + xy` uses the new edge `xy`. So maximality is
//! decided by *anchored* searches only — for each non-edge, try mapping each
//! pattern edge onto it in both orientations.

use crate::bounds::Rat;
use crate::graph::Graph;
use crate::weights::WeightSummary;
use rayon::prelude::*;

/// An injective map from pattern vertices to host vertices sending every
/// pattern edge onto a host edge; `map[p]` is the image of pattern vertex
/// `p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    pub map: Vec<usize>,
}

impl Embedding {
    /// Re-checks the embedding conditions from scratch.
    pub fn is_valid(&self, host: &Graph, pattern: &Graph) -> bool {
        if self.map.len() != pattern.order() {
            return false;
        }
        if self.map.iter().any(|&v| v >= host.order()) {
            return false;
        }
        let injective = self
            .map
            .iter()
            .enumerate()
            .all(|(i, &v)| self.map[i + 1..].iter().all(|&w| w != v));
        injective
            && pattern
                .edges()
                .iter()
                .all(|&(u, v)| host.has_edge(self.map[u], self.map[v]))
    }
}

/// The outcome of a saturation check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SaturationVerdict {
    /// `g` contains no copy of the pattern.
    pub is_free: bool,
    /// `g` is pattern-free and every added edge would create a copy.
    pub is_saturated: bool,
    /// A copy of the pattern inside `g`, present exactly when not free.
    pub free_witness: Option<Embedding>,
    /// The smallest non-edge whose addition creates no copy, when `g` is
    /// free but not saturated.
    pub maximality_counterexample: Option<(usize, usize)>,
}

/// Tuning knobs for [`is_h_saturated_with`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SaturationOptions {
    /// Skip an anchored orientation when the endpoint degrees in `g + xy`
    /// cannot cover the anchored pattern-edge degrees. This is an exact
    /// necessary condition, so verdicts never change; disable it to audit
    /// that claim.
    pub degree_prefilter: bool,
}

impl Default for SaturationOptions {
    fn default() -> Self {
        Self { degree_prefilter: true }
    }
}

/// Searches for an embedding of `pattern` into `host`.
///
/// With `anchor = Some(((pu, pv), (hu, hv)))` the search is constrained to
/// map the pattern edge `(pu, pv)` onto the host pair `(hu, hv)` in that
/// orientation; callers wanting both orientations swap the host pair
/// themselves. The anchored pair must be an edge of the host for a hit to
/// exist.
///
/// The search is exact: `None` means no embedding exists. Pattern vertices
/// are matched most-constrained-first (placed neighbors, then degree), and
/// candidates are scanned in ascending host order, so results are
/// deterministic.
pub fn find_embedding(
    host: &Graph,
    pattern: &Graph,
    anchor: Option<((usize, usize), (usize, usize))>,
) -> Option<Embedding> {
    let np = pattern.order();
    let nh = host.order();
    if np > nh {
        return None;
    }
    let mut map = vec![usize::MAX; np];
    let mut used = vec![false; nh];
    let mut placed = vec![false; np];
    let mut order: Vec<usize> = Vec::with_capacity(np);

    if let Some(((pu, pv), (hu, hv))) = anchor {
        debug_assert!(pattern.has_edge(pu, pv), "anchor must be a pattern edge");
        if !host.has_edge(hu, hv) || hu == hv {
            return None;
        }
        if host.degree(hu) < pattern.degree(pu) || host.degree(hv) < pattern.degree(pv) {
            return None;
        }
        map[pu] = hu;
        map[pv] = hv;
        used[hu] = true;
        used[hv] = true;
        placed[pu] = true;
        placed[pv] = true;
        order.push(pu);
        order.push(pv);
    }

    while order.len() < np {
        // Most constrained next: most already-placed neighbors, then highest
        // degree, then lowest index.
        let next = (0..np)
            .filter(|&p| !placed[p])
            .max_by_key(|&p| {
                let anchored_neighbors = pattern.neighbors(p).filter(|&q| placed[q]).count();
                (anchored_neighbors, pattern.degree(p), std::cmp::Reverse(p))
            })
            .expect("unplaced vertex exists");
        placed[next] = true;
        order.push(next);
    }

    let start = order.iter().take_while(|&&p| map[p] != usize::MAX).count();
    extend_embedding(host, pattern, &order, start, &mut map, &mut used)
        .then_some(Embedding { map })
}

fn extend_embedding(
    host: &Graph,
    pattern: &Graph,
    order: &[usize],
    depth: usize,
    map: &mut Vec<usize>,
    used: &mut Vec<bool>,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let p = order[depth];
    let pdeg = pattern.degree(p);
    let anchored: Vec<usize> = pattern
        .neighbors(p)
        .filter(|&q| map[q] != usize::MAX)
        .map(|q| map[q])
        .collect();

    let try_vertex = |v: usize, map: &mut Vec<usize>, used: &mut Vec<bool>| -> bool {
        map[p] = v;
        used[v] = true;
        if extend_embedding(host, pattern, order, depth + 1, map, used) {
            return true;
        }
        map[p] = usize::MAX;
        used[v] = false;
        false
    };

    match anchored.split_first() {
        Some((&first, rest)) => {
            for v in host.neighbors(first) {
                if used[v] || host.degree(v) < pdeg {
                    continue;
                }
                if rest.iter().any(|&img| !host.has_edge(img, v)) {
                    continue;
                }
                if try_vertex(v, map, used) {
                    return true;
                }
            }
        }
        None => {
            for v in 0..host.order() {
                if used[v] || host.degree(v) < pdeg {
                    continue;
                }
                if try_vertex(v, map, used) {
                    return true;
                }
            }
        }
    }
    false
}

/// Does `g` contain no subgraph isomorphic to `h`?
pub fn is_h_free(g: &Graph, h: &Graph) -> bool {
    find_embedding(g, h, None).is_none()
}

/// Would adding the non-edge `(x, y)` to `g` create a copy of `h`? Sound
/// only when `g` itself is `h`-free, which makes anchored search complete.
fn addition_creates_h(g: &Graph, h: &Graph, x: usize, y: usize, opts: SaturationOptions) -> bool {
    let host = g.add_edge(x, y).expect("sweep only visits non-edges");
    let (dx, dy) = (host.degree(x), host.degree(y));
    for &(pu, pv) in &h.edges() {
        for ((a, b), (ha, hb)) in [((pu, pv), (x, y)), ((pu, pv), (y, x))] {
            if opts.degree_prefilter
                && (host_degree(ha, dx, dy, x) < h.degree(a)
                    || host_degree(hb, dx, dy, x) < h.degree(b))
            {
                continue;
            }
            if find_embedding(&host, h, Some(((a, b), (ha, hb)))).is_some() {
                return true;
            }
        }
    }
    false
}

fn host_degree(v: usize, dx: usize, dy: usize, x: usize) -> usize {
    if v == x {
        dx
    } else {
        dy
    }
}

/// Full saturation check with default options.
pub fn is_h_saturated(g: &Graph, h: &Graph) -> SaturationVerdict {
    is_h_saturated_with(g, h, SaturationOptions::default())
}

/// Full saturation check: freeness by plain search, maximality by an
/// anchored sweep over all non-edges. The sweep runs in parallel; the
/// reported counterexample is always the lexicographically smallest failing
/// non-edge, so the verdict does not depend on thread count.
pub fn is_h_saturated_with(g: &Graph, h: &Graph, opts: SaturationOptions) -> SaturationVerdict {
    let free_witness = find_embedding(g, h, None);
    if let Some(w) = free_witness {
        return SaturationVerdict {
            is_free: false,
            is_saturated: false,
            free_witness: Some(w),
            maximality_counterexample: None,
        };
    }
    let non_edges = g.non_edges();
    let counterexample = non_edges
        .par_iter()
        .find_first(|&&(x, y)| !addition_creates_h(g, h, x, y, opts))
        .copied();
    SaturationVerdict {
        is_free: true,
        is_saturated: counterexample.is_none(),
        free_witness: None,
        maximality_counterexample: counterexample,
    }
}

/// Result of the neighbor-surplus check of [`satisfies_property_p`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PropertyPReport {
    pub holds: bool,
    /// The smallest nonadjacent low-degree pair violating the property.
    pub counterexample: Option<(usize, usize)>,
}

/// Checks the neighbor-surplus property with parameters `(k0, k1p)`: for
/// every nonadjacent pair `x, y` with both degrees at most `k0`, some
/// `z ∈ N(x)` has `|N(z) − (N(x) ∪ {y})| ≥ k1p`, or symmetrically some
/// `z' ∈ N(y)` has `|N(z') − (N(y) ∪ {x})| ≥ k1p`. The set difference is
/// literal: `x` itself counts as a neighbor of `z` outside `N(x)`.
pub fn satisfies_property_p(g: &Graph, k0: usize, k1p: usize) -> PropertyPReport {
    let surplus_from = |x: usize, y: usize| -> bool {
        g.neighbors(x).any(|z| {
            let outside = g
                .neighbors(z)
                .filter(|&w| w != y && !g.has_edge(x, w))
                .count();
            outside >= k1p
        })
    };
    for x in 0..g.order() {
        if g.degree(x) > k0 {
            continue;
        }
        for y in x + 1..g.order() {
            if g.degree(y) > k0 || g.has_edge(x, y) {
                continue;
            }
            if !surplus_from(x, y) && !surplus_from(y, x) {
                return PropertyPReport {
                    holds: false,
                    counterexample: Some((x, y)),
                };
            }
        }
    }
    PropertyPReport { holds: true, counterexample: None }
}

/// Named verdicts from [`check_clique_propositions`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CliquePropositions {
    /// `{v : d(v) < k0}` is a clique.
    pub low_degree_clique: bool,
    /// `{v : no neighbor of degree ≥ k1}` is a clique.
    pub no_high_neighbor_clique: bool,
    /// `{v : d(v) ≤ k0 and no neighbor of degree ≥ k1'}` is a clique.
    pub low_no_primed_neighbor_clique: bool,
    /// Triangle-free refinement, evaluated only on request: the low-degree
    /// vertices with no high-degree neighbor, or whose single high-degree
    /// neighbor `w` has `d(w) = k1'` and a common neighbor, form a clique.
    pub triangle_free_clique: Option<bool>,
}

impl CliquePropositions {
    pub fn all_pass(&self) -> bool {
        self.low_degree_clique
            && self.no_high_neighbor_clique
            && self.low_no_primed_neighbor_clique
            && self.triangle_free_clique.unwrap_or(true)
    }
}

fn set_is_clique(g: &Graph, set: &[usize]) -> bool {
    set.iter()
        .enumerate()
        .all(|(i, &u)| set[i + 1..].iter().all(|&v| g.has_edge(u, v)))
}

/// Evaluates, on any graph, the clique predicates that hold in saturated
/// hosts. The caller vouches that `g` is saturated for the pattern behind
/// `summary`; on other graphs the predicates may legitimately fail (which
/// is what makes them useful as a cross-check).
pub fn check_clique_propositions(
    g: &Graph,
    summary: &WeightSummary,
    triangle_free: bool,
) -> CliquePropositions {
    let n = g.order();
    let (k0, k1, k1p) = (summary.k0, summary.k1, summary.k1p);
    let low: Vec<usize> = (0..n).filter(|&v| g.degree(v) < k0).collect();
    let no_high: Vec<usize> = (0..n)
        .filter(|&v| g.neighbors(v).all(|w| g.degree(w) < k1))
        .collect();
    let low_no_primed: Vec<usize> = (0..n)
        .filter(|&v| g.degree(v) <= k0 && g.neighbors(v).all(|w| g.degree(w) < k1p))
        .collect();
    let triangle_free_clique = triangle_free.then(|| {
        let set: Vec<usize> = (0..n)
            .filter(|&v| g.degree(v) <= k0 && tf_clique_condition(g, v, k1p))
            .collect();
        set_is_clique(g, &set)
    });
    CliquePropositions {
        low_degree_clique: set_is_clique(g, &low),
        no_high_neighbor_clique: set_is_clique(g, &no_high),
        low_no_primed_neighbor_clique: set_is_clique(g, &low_no_primed),
        triangle_free_clique,
    }
}

/// Condition (i) or (ii) of the triangle-free clique refinement for a
/// low-degree vertex `v`: no neighbor of degree ≥ `k1p`, or a unique such
/// neighbor `w` with `d(w) = k1p` and `N(v) ∩ N(w) ≠ ∅`.
fn tf_clique_condition(g: &Graph, v: usize, k1p: usize) -> bool {
    let highs: Vec<usize> = g.neighbors(v).filter(|&w| g.degree(w) >= k1p).collect();
    match highs.as_slice() {
        [] => true,
        [w] => g.degree(*w) == k1p && g.common_neighbor_count(v, *w) > 0,
        _ => false,
    }
}

/// The degree partition used by the size-bound proofs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreePartition {
    /// `{v : d(v) ≤ k0}`.
    pub s: Vec<usize>,
    /// `{v : k0 < d(v) < k1p}`.
    pub m: Vec<usize>,
    /// High vertices: all of `{d ≥ k1p}` in the plain split, exactly
    /// `{d = k1p}` in the strict split.
    pub l: Vec<usize>,
    /// Empty in the plain split; `{d > k1p}` in the strict split.
    pub xl: Vec<usize>,
    /// Average degree over `l`, when nonempty.
    pub d_l: Option<Rat>,
    /// Average degree over `xl`, when nonempty.
    pub d_xl: Option<Rat>,
    /// `{v : d(v) < k0}`.
    pub clique_a: Vec<usize>,
    /// Low vertices with no high-degree neighbor — refined by the
    /// triangle-free conditions in the strict split.
    pub clique_b: Vec<usize>,
}

/// Splits the vertices of `g` by degree against the thresholds `k0 < k1p`.
///
/// `xl_threshold_strict = false` is the general split (`L = {d ≥ k1p}`,
/// no `XL`); `true` is the triangle-free split (`L = {d = k1p}`,
/// `XL = {d > k1p}`), whose `clique_b` uses the refined conditions of
/// [`check_clique_propositions`].
pub fn degree_partition(
    g: &Graph,
    k0: usize,
    k1p: usize,
    xl_threshold_strict: bool,
) -> DegreePartition {
    let n = g.order();
    let s: Vec<usize> = (0..n).filter(|&v| g.degree(v) <= k0).collect();
    let m: Vec<usize> = (0..n)
        .filter(|&v| k0 < g.degree(v) && g.degree(v) < k1p)
        .collect();
    let (l, xl): (Vec<usize>, Vec<usize>) = if xl_threshold_strict {
        (
            (0..n).filter(|&v| g.degree(v) == k1p).collect(),
            (0..n).filter(|&v| g.degree(v) > k1p).collect(),
        )
    } else {
        ((0..n).filter(|&v| g.degree(v) >= k1p).collect(), Vec::new())
    };
    let avg = |set: &[usize]| -> Option<Rat> {
        (!set.is_empty()).then(|| {
            let total: i64 = set.iter().map(|&v| g.degree(v) as i64).sum();
            Rat::new(total, set.len() as i64)
        })
    };
    let clique_a: Vec<usize> = (0..n).filter(|&v| g.degree(v) < k0).collect();
    let clique_b: Vec<usize> = if xl_threshold_strict {
        (0..n)
            .filter(|&v| g.degree(v) <= k0 && tf_clique_condition(g, v, k1p))
            .collect()
    } else {
        s.iter()
            .copied()
            .filter(|&v| g.neighbors(v).all(|w| g.degree(w) < k1p))
            .collect()
    };
    DegreePartition {
        d_l: avg(&l),
        d_xl: avg(&xl),
        s,
        m,
        l,
        xl,
        clique_a,
        clique_b,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{
        caterpillar_p5, double_star, example_kdelta_doublestar, example_kdelta_star, fig4_gadget,
        saturated_double_star, saturated_shorty,
    };
    use crate::generate::{clique, cycle, path, star};
    use crate::weights::weight_summary;

    #[test]
    fn triangle_contains_path() {
        let e = find_embedding(&clique(3), &path(3), None).unwrap();
        assert!(e.is_valid(&clique(3), &path(3)));
    }

    #[test]
    fn star_has_no_triangle() {
        assert!(is_h_free(&star(4), &clique(3)));
        assert!(!is_h_free(&cycle(5).unwrap(), &path(4)));
    }

    #[test]
    fn pattern_larger_than_host_never_embeds() {
        assert!(find_embedding(&clique(3), &path(4), None).is_none());
    }

    #[test]
    fn edgeless_pattern_embeds_by_order() {
        let h = Graph::empty(3);
        assert!(find_embedding(&clique(3), &h, None).is_some());
        assert!(find_embedding(&Graph::empty(3), &h, None).is_some());
        assert!(find_embedding(&Graph::empty(2), &h, None).is_none());
    }

    #[test]
    fn anchored_search_respects_orientation() {
        // P_3 pattern edge (0,1): vertex 1 is the middle (degree 2).
        let host = path(3); // 0-1-2
        let p = path(3);
        assert!(find_embedding(&host, &p, Some(((0, 1), (0, 1)))).is_some());
        // Anchoring the middle of the pattern onto the end of the path fails.
        assert!(find_embedding(&host, &p, Some(((1, 0), (0, 1)))).is_none());
        // Anchor on a non-edge of the host: no hit.
        assert!(find_embedding(&host, &p, Some(((0, 1), (0, 2)))).is_none());
    }

    #[test]
    fn flagship_host_is_double_star_saturated() {
        let g = saturated_double_star(4, 5, 18).unwrap().graph;
        let h = double_star(4, 5);
        assert_eq!(g.non_edges().len(), 123);
        let verdict = is_h_saturated(&g, &h);
        assert!(verdict.is_free);
        assert!(verdict.is_saturated);
        assert_eq!(verdict.free_witness, None);
        assert_eq!(verdict.maximality_counterexample, None);
    }

    #[test]
    fn flagship_host_is_shorty_saturated() {
        let g = saturated_shorty(2, 19).unwrap().graph;
        let verdict = is_h_saturated(&g, &caterpillar_p5(1));
        assert!(verdict.is_saturated);
    }

    #[test]
    fn stars_are_triangle_saturated() {
        for n in 3..=8 {
            let verdict = is_h_saturated(&star(n - 1), &clique(3));
            assert!(verdict.is_saturated, "K_1,{} should be K_3-saturated", n - 1);
        }
    }

    #[test]
    fn empty_graph_counterexample_is_lowest_non_edge() {
        let verdict = is_h_saturated(&Graph::empty(4), &clique(3));
        assert!(verdict.is_free);
        assert!(!verdict.is_saturated);
        assert_eq!(verdict.maximality_counterexample, Some((0, 1)));
    }

    #[test]
    fn non_free_host_reports_witness() {
        let verdict = is_h_saturated(&clique(4), &clique(3));
        assert!(!verdict.is_free);
        assert!(!verdict.is_saturated);
        let w = verdict.free_witness.unwrap();
        assert!(w.is_valid(&clique(4), &clique(3)));
    }

    #[test]
    fn empty_host_is_single_edge_saturated() {
        let verdict = is_h_saturated(&Graph::empty(5), &clique(2));
        assert!(verdict.is_saturated);
    }

    #[test]
    fn prefilter_does_not_change_verdicts() {
        let on = SaturationOptions { degree_prefilter: true };
        let off = SaturationOptions { degree_prefilter: false };
        let cases: Vec<(Graph, Graph)> = vec![
            (star(4), clique(3)),
            (Graph::empty(4), clique(3)),
            (path(5), path(3)),
            (saturated_shorty(1, 14).unwrap().graph, caterpillar_p5(0)),
        ];
        for (g, h) in cases {
            assert_eq!(is_h_saturated_with(&g, &h, on), is_h_saturated_with(&g, &h, off));
        }
    }

    #[test]
    fn fig4_gadget_free_but_not_saturated() {
        let g = fig4_gadget();
        let h = caterpillar_p5(1);
        let verdict = is_h_saturated(&g, &h);
        assert!(verdict.is_free, "the gadget contains no copy of the pattern");
        assert!(!verdict.is_saturated);
        let (x, y) = verdict.maximality_counterexample.unwrap();
        assert!(!addition_creates_h(&g, &h, x, y, SaturationOptions::default()));
    }

    #[test]
    fn fig4_gadget_has_the_property() {
        let report = satisfies_property_p(&fig4_gadget(), 2, 3);
        assert!(report.holds);
        assert_eq!(report.counterexample, None);
    }

    #[test]
    fn kdelta_star_lacks_the_property() {
        let g = example_kdelta_star(3, 5, 2).unwrap().graph;
        let report = satisfies_property_p(&g, 3, 5);
        assert!(!report.holds);
        // The counterexample is a genuine nonadjacent low-degree pair.
        let (x, y) = report.counterexample.unwrap();
        assert!(g.degree(x) <= 3 && g.degree(y) <= 3 && !g.has_edge(x, y));
        // A trivial surplus threshold is always met through any neighbor.
        assert!(satisfies_property_p(&g, 3, 1).holds);
    }

    #[test]
    fn complete_graphs_have_the_property_vacuously() {
        assert!(satisfies_property_p(&clique(5), 10, 100).holds);
    }

    #[test]
    fn clique_propositions_on_star_host() {
        // K_{1,5} is K_3-saturated; triangle weights: k0 = 1, k1 = k1p = 2.
        let summary = weight_summary(&clique(3)).unwrap();
        assert_eq!((summary.k0, summary.k1, summary.k1p), (1, 2, 2));
        let report = check_clique_propositions(&star(5), &summary, false);
        assert!(report.all_pass());
        assert_eq!(report.triangle_free_clique, None);
    }

    #[test]
    fn clique_propositions_reject_isolated_pair()  {
        // Two isolated vertices are nonadjacent low-degree vertices: the
        // low-degree set is not a clique, so the check has teeth.
        let summary = weight_summary(&clique(3)).unwrap();
        let report = check_clique_propositions(&Graph::empty(2), &summary, false);
        assert!(!report.low_degree_clique);
        assert!(!report.all_pass());
    }

    #[test]
    fn degree_partition_of_flagship_host() {
        let g = saturated_double_star(4, 5, 18).unwrap().graph;
        let part = degree_partition(&g, 3, 5, false);
        assert_eq!(part.s.len(), 16);
        assert_eq!(part.m.len(), 0);
        assert_eq!(part.l.len(), 2);
        assert!(part.xl.is_empty());
        assert_eq!(part.d_l, Some(Rat::from_integer(6)));
        assert_eq!(part.d_xl, None);
        assert!(part.clique_a.is_empty());
        // clique_b: no neighbor of degree >= 5 means exactly the K_4 block.
        assert_eq!(part.clique_b, vec![14, 15, 16, 17]);

        let strict = degree_partition(&g, 3, 5, true);
        assert!(strict.l.is_empty());
        assert_eq!(strict.xl.len(), 2);
        assert_eq!(strict.d_xl, Some(Rat::from_integer(6)));
    }

    #[test]
    fn degree_partition_of_doublestar_example() {
        let g = example_kdelta_doublestar(3, 5, 2).unwrap().graph;
        let part = degree_partition(&g, 3, 5, true);
        assert_eq!(part.l.len(), 4);
        assert_eq!(part.d_l, Some(Rat::from_integer(5)));
        assert!(part.xl.is_empty());
    }

    #[test]
    fn degree_partition_of_regular_graph() {
        let part = degree_partition(&cycle(6).unwrap(), 2, 4, false);
        assert_eq!(part.s.len(), 6);
        assert!(part.m.is_empty() && part.l.is_empty() && part.xl.is_empty());
        assert_eq!(part.d_l, None);
    }

    #[test]
    fn partition_sets_cover_all_vertices() {
        for (g, k0, k1p, strict) in [
            (saturated_shorty(2, 27).unwrap().graph, 3, 4, true),
            (fig4_gadget(), 2, 3, false),
            (star(6), 1, 2, true),
        ] {
            let part = degree_partition(&g, k0, k1p, strict);
            let mut all: Vec<usize> =
                [&part.s, &part.m, &part.l, &part.xl].iter().flat_map(|s| s.iter().copied()).collect();
            all.sort_unstable();
            assert_eq!(all, (0..g.order()).collect::<Vec<_>>());
        }
    }

    #[test]
    fn embedding_validity_is_checked_strictly() {
        let host = path(4);
        let pattern = path(3);
        assert!(!Embedding { map: vec![0, 0, 1] }.is_valid(&host, &pattern));
        assert!(!Embedding { map: vec![0, 1] }.is_valid(&host, &pattern));
        assert!(!Embedding { map: vec![0, 2, 3] }.is_valid(&host, &pattern));
        assert!(Embedding { map: vec![0, 1, 2] }.is_valid(&host, &pattern));
    }
}
