//! Pattern graphs and explicit saturated host constructions.
//!
//! The two flagship builders, [`saturated_double_star`] and
//! [`saturated_shorty`], assemble hosts from hubs (high-degree vertices, the
//! set `L`), leaf classes (one independent class per hub), cyclic regular
//! bipartite wirings between designated class pairs, a small clique `B`, and
//! — when the admissible remainder is odd — one special vertex `v` spliced in
//! by edge swaps. Every builder recomputes its expected size from the
//! closed-form count and audits the structural properties its saturation
//! argument rests on; any mismatch is an error, never a silent result.

use crate::bounds::{double_star_threshold, shorty_threshold};
use crate::generate;
use crate::graph::Graph;
use std::collections::BTreeMap;
use thiserror::Error;

/// Errors from host construction.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("requires 2 <= s < t, got s = {s}, t = {t} (s = 1 degenerates to a star)")]
    BadCenters { s: usize, t: usize },
    #[error("parameter s must be at least 1")]
    ZeroS,
    #[error("n = {n} below the admissible threshold {min}")]
    BelowThreshold { n: usize, min: usize },
    #[error("degree parameters require 0 < delta < k, got delta = {delta}, k = {k}")]
    BadDegreeSplit { delta: usize, k: usize },
    #[error("need at least one copy")]
    ZeroCopies,
    #[error("no {r}-regular graph on {m} vertices exists (parity)")]
    ParityImpossible { r: usize, m: usize },
    #[error("{r}-regular wiring impossible on only {m} vertices")]
    WiringTooDense { r: usize, m: usize },
    #[error("cannot place the special vertex without breaking class structure (s = {s}, n = {n})")]
    SpecialVertexPlacement { s: usize, n: usize },
    #[error("construction has {got} edges but the closed form gives {expected}")]
    SizeMismatch { got: usize, expected: usize },
    #[error("construction failed its own property audit: {failed:?}")]
    AuditFailed { failed: Vec<&'static str> },
    #[error("n = {n} smaller than required minimum {min}")]
    NTooSmall { n: usize, min: usize },
    #[error("complete-graph parameter must be at least 2, got {t}")]
    CliqueTooSmall { t: usize },
}

/// What a vertex does inside a construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VertexRole {
    /// High-degree vertex owning leaf class `class`; `partner` is the
    /// adjacent hub when hubs come in matched pairs.
    Hub { class: usize, partner: Option<usize> },
    /// Member of leaf class `class`.
    Leaf { class: usize },
    /// Member of the residual clique `B`.
    CliqueB,
    /// The odd-remainder special vertex.
    SpecialV,
    /// Star or double-star center in copy `copy` of a disjoint-union build.
    Center { copy: usize },
    /// Member of part `index` of a complete multipartite build.
    Part { index: usize },
}

/// A built host graph plus the evidence that it is what it claims to be.
#[derive(Debug, Clone)]
pub struct ConstructionReport {
    pub graph: Graph,
    /// Size demanded by the closed-form count; always equals
    /// `graph.size()` (enforced at build time).
    pub expected_size: usize,
    /// Role of every vertex, indexed by vertex.
    pub roles: Vec<VertexRole>,
    /// Named structural properties checked after assembly; all true.
    pub properties: Vec<(&'static str, bool)>,
}

// ---------------------------------------------------------------------------
// pattern graphs
// ---------------------------------------------------------------------------

/// The double star `S_{s,t}`: adjacent centers of degree `s` (vertex 0) and
/// `t` (vertex 1), with `s-1` leaves `2..s+1` and `t-1` leaves `s+1..s+t`.
pub fn double_star(s: usize, t: usize) -> Graph {
    assert!(s >= 1 && t >= 1, "double star centers need degree at least 1");
    let mut g = Graph::empty(s + t);
    g.add_edge_mut(0, 1).unwrap();
    for v in 2..s + 1 {
        g.add_edge_mut(0, v).unwrap();
    }
    for v in s + 1..s + t {
        g.add_edge_mut(1, v).unwrap();
    }
    g
}

/// The caterpillar `P_5^s`: a path `0-1-2-3-4` with `s` extra leaves on each
/// of the three internal vertices, so the internal degrees are `s + 2`.
pub fn caterpillar_p5(s: usize) -> Graph {
    let mut g = Graph::empty(5 + 3 * s);
    for i in 1..5 {
        g.add_edge_mut(i - 1, i).unwrap();
    }
    for (slot, center) in [1, 2, 3].into_iter().enumerate() {
        for j in 0..s {
            g.add_edge_mut(center, 5 + slot * s + j).unwrap();
        }
    }
    g
}

/// A fixed 10-vertex gadget: two adjacent degree-3 pairs each dressed with a
/// shared leaf, plus a nonadjacent pair `x, y` tethered back to them. Used
/// as a fixture for the neighbor-surplus property check: the property holds
/// with `(k0, k1') = (2, 3)` yet the graph is not caterpillar-saturated.
pub fn fig4_gadget() -> Graph {
    Graph::from_edge_list(
        10,
        &[
            (0, 6), // z  - x
            (1, 7), // z' - y
            (2, 8), // h2 - l20
            (3, 9), // h3 - l30
            (0, 1), // z  - z'
            (2, 3), // h2 - h3
            (0, 4), // z  - l0
            (2, 4), // h2 - l0
            (1, 5), // z' - l1
            (3, 5), // h3 - l1
            (6, 8), // x  - l20
            (7, 9), // y  - l30
        ],
    )
    .unwrap()
}

/// Display labels for [`fig4_gadget`], keyed by vertex.
pub fn fig4_labels() -> BTreeMap<usize, String> {
    [
        (0, "z"),
        (1, "z'"),
        (2, "h2"),
        (3, "h3"),
        (4, "l0"),
        (5, "l1"),
        (6, "x"),
        (7, "y"),
        (8, "l20"),
        (9, "l30"),
    ]
    .into_iter()
    .map(|(v, name)| (v, name.to_string()))
    .collect()
}

// ---------------------------------------------------------------------------
// shared assembly helpers
// ---------------------------------------------------------------------------

/// Wires an `r`-regular graph over the vertex list `ids` (cyclic offsets,
/// plus the antipodal matching when `r` is odd).
fn wire_regular_on(g: &mut Graph, ids: &[usize], r: usize) -> Result<(), ConstructionError> {
    let m = ids.len();
    if r == 0 {
        return Ok(());
    }
    if r >= m {
        return Err(ConstructionError::WiringTooDense { r, m });
    }
    if r % 2 == 1 && m % 2 == 1 {
        return Err(ConstructionError::ParityImpossible { r, m });
    }
    for d in 1..=r / 2 {
        for i in 0..m {
            g.add_edge_mut(ids[i], ids[(i + d) % m]).unwrap();
        }
    }
    if r % 2 == 1 {
        for i in 0..m / 2 {
            g.add_edge_mut(ids[i], ids[i + m / 2]).unwrap();
        }
    }
    Ok(())
}

/// Is there an independent set of size `target` inside `pool` (vertices of
/// `g`) that contains `w`? Pools here are near-independent, so the branching
/// on conflict edges stays shallow.
fn has_independent_set_with(g: &Graph, pool: &[usize], w: usize, target: usize) -> bool {
    if !pool.contains(&w) {
        return false;
    }
    let rest: Vec<usize> = pool
        .iter()
        .copied()
        .filter(|&x| x != w && !g.has_edge(x, w))
        .collect();
    target <= 1 || has_independent_set(g, &rest, target - 1)
}

fn has_independent_set(g: &Graph, pool: &[usize], target: usize) -> bool {
    if target == 0 {
        return true;
    }
    if pool.len() < target {
        return false;
    }
    for i in 0..pool.len() {
        for j in i + 1..pool.len() {
            if g.has_edge(pool[i], pool[j]) {
                // Any independent set omits one endpoint; branch on both.
                let without = |skip: usize| -> Vec<usize> {
                    pool.iter().copied().filter(|&x| x != skip).collect()
                };
                return has_independent_set(g, &without(pool[i]), target)
                    || has_independent_set(g, &without(pool[j]), target);
            }
        }
    }
    true // pool is independent and large enough
}

fn is_clique(g: &Graph, set: &[usize]) -> bool {
    set.iter()
        .enumerate()
        .all(|(i, &u)| set[i + 1..].iter().all(|&v| g.has_edge(u, v)))
}

fn finish(
    graph: Graph,
    expected_size: usize,
    roles: Vec<VertexRole>,
    properties: Vec<(&'static str, bool)>,
) -> Result<ConstructionReport, ConstructionError> {
    if graph.size() != expected_size {
        return Err(ConstructionError::SizeMismatch {
            got: graph.size(),
            expected: expected_size,
        });
    }
    let failed: Vec<&'static str> = properties
        .iter()
        .filter(|(_, ok)| !ok)
        .map(|&(name, _)| name)
        .collect();
    if !failed.is_empty() {
        return Err(ConstructionError::AuditFailed { failed });
    }
    Ok(ConstructionReport {
        graph,
        expected_size,
        roles,
        properties,
    })
}

/// Exact integer quotient; `None` flags a non-integral closed form, which
/// would mean the formula and the assembly disagree.
fn exact_div(num: i64, den: i64) -> Option<i64> {
    (num % den == 0).then(|| num / den)
}

// ---------------------------------------------------------------------------
// saturated double-star hosts
// ---------------------------------------------------------------------------

/// Closed-form size of the `S_{s,t}`-saturated host on `n` vertices.
fn double_star_host_size(s: usize, t: usize, n: usize) -> Option<usize> {
    let period = 2 * (t as i64) + 4;
    let (si, ti, ni) = (s as i64, t as i64, n as i64);
    let r = (ni - si).rem_euclid(period);
    let size = if r % 2 == 0 {
        exact_div(si * ((ti + 1) * ni - (ti - si + 2) + r), period)?
    } else {
        exact_div(si * ((ti + 1) * (ni - 1) - (ti - si + 2) + (r - 1)), period)? + (si + 1) / 2
    };
    Some(size as usize)
}

/// Builds an `S_{s,t}`-saturated graph on `n` vertices, `2 <= s < t`,
/// `n >= q(2t+4) + s` with `q = max(1, floor(s/2) - 1)`.
///
/// Structure: `2*floor((n-s)/(2t+4))` hubs each adjacent to a class of
/// `t + 1` independent leaves; classes are paired and joined by cyclic
/// `(s-2)`-regular bipartite wirings, which gives every leaf degree `s - 1`;
/// a `K_s` occupies the top indices. An even remainder enlarges the first
/// two classes by `r/2` each; an odd remainder additionally splices in a
/// special vertex of degree `s - 1` by swapping one wiring edge per class
/// pair onto it.
pub fn saturated_double_star(
    s: usize,
    t: usize,
    n: usize,
) -> Result<ConstructionReport, ConstructionError> {
    if s < 2 || s >= t {
        return Err(ConstructionError::BadCenters { s, t });
    }
    let min = double_star_threshold(s, t);
    if n < min {
        return Err(ConstructionError::BelowThreshold { n, min });
    }
    let period = 2 * t + 4;
    let r = (n - s) % period;
    let half = (n - s) / period;
    let hubs = 2 * half;
    let rr = r - r % 2; // even part absorbed into the first class pair

    let mut class_size = vec![t + 1; hubs];
    class_size[0] += rr / 2;
    class_size[1] += rr / 2;
    let mut class_start = vec![0usize; hubs];
    let mut acc = hubs;
    for i in 0..hubs {
        class_start[i] = acc;
        acc += class_size[i];
    }
    let special = (r % 2 == 1).then_some(acc);
    let b_start = n - s;

    let mut g = Graph::empty(n);
    for i in 0..hubs {
        for off in 0..class_size[i] {
            g.add_edge_mut(i, class_start[i] + off).unwrap();
        }
    }
    for j in 0..half {
        let (a, b) = (2 * j, 2 * j + 1);
        let sz = class_size[a];
        for p in 0..sz {
            for o in 0..s - 2 {
                g.add_edge_mut(class_start[a] + p, class_start[b] + (p + o) % sz)
                    .unwrap();
            }
        }
    }
    for u in b_start..n {
        for v in u + 1..n {
            g.add_edge_mut(u, v).unwrap();
        }
    }

    if let Some(v) = special {
        // Degree target s - 1: one or two hub edges by parity of s, then one
        // wiring-edge swap per distinct class pair.
        let v_hubs: &[usize] = if s.is_multiple_of(2) { &[0] } else { &[0, 1] };
        for &h in v_hubs {
            g.add_edge_mut(v, h).unwrap();
        }
        let swaps = (s - 2 - s % 2) / 2;
        let mut done = 0;
        for j in (1..half).chain([0]) {
            if done == swaps {
                break;
            }
            let (x, y) = (class_start[2 * j], class_start[2 * j + 1]);
            g.remove_edge_mut(x, y).unwrap();
            g.add_edge_mut(v, x).unwrap();
            g.add_edge_mut(v, y).unwrap();
            done += 1;
        }
        if done < swaps {
            return Err(ConstructionError::SpecialVertexPlacement { s, n });
        }
    }

    let mut roles = Vec::with_capacity(n);
    for i in 0..hubs {
        roles.push(VertexRole::Hub { class: i, partner: None });
    }
    for (i, &sz) in class_size.iter().enumerate() {
        roles.extend(std::iter::repeat_n(VertexRole::Leaf { class: i }, sz));
    }
    if special.is_some() {
        roles.push(VertexRole::SpecialV);
    }
    roles.extend(std::iter::repeat_n(VertexRole::CliqueB, s));

    let expected = double_star_host_size(s, t, n)
        .ok_or(ConstructionError::SizeMismatch { got: g.size(), expected: 0 })?;
    let properties = audit_double_star_host(&g, s, t, hubs);
    finish(g, expected, roles, properties)
}

/// Checks the structural conditions the double-star saturation argument
/// uses: (i) exact low degrees on `S = V − L` and high degrees on hubs;
/// (ii) hub neighborhoods lie in `S` and every neighbor sits inside a
/// `(t+1)`-independent subset of that neighborhood; (iii) the vertices of
/// `S` without hub neighbors form exactly the clique `B` of order `s`, and
/// at most one vertex of `S` sees two or more hubs.
fn audit_double_star_host(g: &Graph, s: usize, t: usize, hubs: usize) -> Vec<(&'static str, bool)> {
    let n = g.order();
    let is_hub = |v: usize| v < hubs;
    let degrees_ok = (0..n).all(|v| {
        if is_hub(v) {
            g.degree(v) > t
        } else {
            g.degree(v) == s - 1
        }
    });
    let hub_neighborhoods_ok = (0..hubs).all(|h| {
        let nh: Vec<usize> = g.neighbors(h).collect();
        nh.iter().all(|&w| !is_hub(w))
            && nh
                .iter()
                .all(|&w| has_independent_set_with(g, &nh, w, t + 1))
    });
    let hubless: Vec<usize> = (hubs..n)
        .filter(|&v| g.neighbors(v).all(|w| !is_hub(w)))
        .collect();
    let clique_b_ok = hubless.len() == s && is_clique(g, &hubless);
    let multi_hub = (hubs..n)
        .filter(|&v| g.neighbors(v).filter(|&w| is_hub(w)).count() >= 2)
        .count();
    vec![
        ("degrees", degrees_ok),
        ("hub-classes-independent", hub_neighborhoods_ok),
        ("residual-clique", clique_b_ok),
        ("single-multi-hub-vertex", multi_hub <= 1),
    ]
}

// ---------------------------------------------------------------------------
// saturated caterpillar hosts
// ---------------------------------------------------------------------------

/// Closed-form size of the `P_5^{s-1}`-saturated host on `n` vertices.
fn shorty_host_size(s: usize, n: usize) -> Option<usize> {
    let (si, ni) = (s as i64, n as i64);
    let period = 2 * si + 4;
    let r = (ni - si - 1).rem_euclid(period);
    let quad = si * si + 2 * si + 2;
    let size = if r % 2 == 0 {
        exact_div(quad * ni - 2 * (si + 1) + r * si, period)?
    } else {
        exact_div(quad * (ni - 1) - 2 * (si + 1) + (r - 1) * si, period)? + (si + 2) / 2
    };
    Some(size as usize)
}

/// Builds a `P_5^{s-1}`-saturated graph on `n` vertices, `s >= 1`,
/// `n >= q(2s+4) + s + 1` with `q = max(2, floor((s-1)/2))`.
///
/// Structure: hubs come in adjacent partner pairs (balanced double stars
/// `S_{s+2,s+2}`), each hub owning an independent class of `s + 1` leaves.
/// Classes of *non-partner* hubs are joined by cyclic `(s-1)`-regular
/// bipartite wirings — double stars are paired up, or formed into one triple
/// when their number is odd — so every leaf has degree `s`. A `K_{s+1}`
/// occupies the top indices. Even remainders enlarge one class in each of
/// two wired-together double stars; odd remainders additionally splice in a
/// special vertex of degree `s`.
pub fn saturated_shorty(s: usize, n: usize) -> Result<ConstructionReport, ConstructionError> {
    if s < 1 {
        return Err(ConstructionError::ZeroS);
    }
    let min = shorty_threshold(s);
    if n < min {
        return Err(ConstructionError::BelowThreshold { n, min });
    }
    let period = 2 * s + 4;
    let r = (n - s - 1) % period;
    let half = (n - s - 1) / period; // number of double stars; >= 2
    let hubs = 2 * half;
    let rr = r - r % 2;

    // Which class pairs get wired, and which two classes absorb the even
    // remainder. With an odd number of double stars the first three form a
    // triple wired in a 6-cycle of classes; the enlarged classes are always
    // wired to each other.
    let mut wired: Vec<(usize, usize)> = Vec::new();
    let enlarged: (usize, usize);
    let first_paired_ds: usize;
    if half.is_multiple_of(2) {
        enlarged = (0, 2);
        wired.push((0, 2));
        wired.push((1, 3));
        first_paired_ds = 2;
    } else {
        enlarged = (0, 5);
        wired.push((1, 2));
        wired.push((3, 4));
        wired.push((0, 5));
        first_paired_ds = 3;
    }
    for d in (first_paired_ds..half).step_by(2) {
        wired.push((2 * d, 2 * d + 2));
        wired.push((2 * d + 1, 2 * d + 3));
    }

    let mut class_size = vec![s + 1; hubs];
    class_size[enlarged.0] += rr / 2;
    class_size[enlarged.1] += rr / 2;
    let mut class_start = vec![0usize; hubs];
    let mut acc = hubs;
    for i in 0..hubs {
        class_start[i] = acc;
        acc += class_size[i];
    }
    let special = (r % 2 == 1).then_some(acc);

    let mut g = Graph::empty(n);
    for d in 0..half {
        g.add_edge_mut(2 * d, 2 * d + 1).unwrap();
    }
    for i in 0..hubs {
        for off in 0..class_size[i] {
            g.add_edge_mut(i, class_start[i] + off).unwrap();
        }
    }
    for &(a, b) in &wired {
        let sz = class_size[a];
        debug_assert_eq!(sz, class_size[b]);
        for p in 0..sz {
            for o in 0..s - 1 {
                g.add_edge_mut(class_start[a] + p, class_start[b] + (p + o) % sz)
                    .unwrap();
            }
        }
    }
    let b_start = n - s - 1;
    for u in b_start..n {
        for v in u + 1..n {
            g.add_edge_mut(u, v).unwrap();
        }
    }

    if let Some(v) = special {
        // One hub edge when s is odd, two unmatched hub edges when s is
        // even, then wiring-edge swaps on distinct wired class pairs. Pairs
        // touching the partner class of a hub adjacent to v are off limits:
        // an edge from v into such a class would join the leaf sets of two
        // partner hubs.
        let v_hubs: &[usize] = if s % 2 == 1 { &[0] } else { &[0, 2] };
        for &h in v_hubs {
            g.add_edge_mut(v, h).unwrap();
        }
        let blocked: Vec<usize> = v_hubs.iter().map(|&h| h ^ 1).collect();
        let swaps = (s - 1) / 2;
        let mut done = 0;
        for &(a, b) in &wired {
            if done == swaps {
                break;
            }
            if blocked.contains(&a) || blocked.contains(&b) {
                continue;
            }
            let (x, y) = (class_start[a], class_start[b]);
            g.remove_edge_mut(x, y).unwrap();
            g.add_edge_mut(v, x).unwrap();
            g.add_edge_mut(v, y).unwrap();
            done += 1;
        }
        if done < swaps {
            return Err(ConstructionError::SpecialVertexPlacement { s, n });
        }
    }

    let mut roles = Vec::with_capacity(n);
    for i in 0..hubs {
        roles.push(VertexRole::Hub { class: i, partner: Some(i ^ 1) });
    }
    for (i, &sz) in class_size.iter().enumerate() {
        roles.extend(std::iter::repeat_n(VertexRole::Leaf { class: i }, sz));
    }
    if special.is_some() {
        roles.push(VertexRole::SpecialV);
    }
    roles.extend(std::iter::repeat_n(VertexRole::CliqueB, s + 1));

    let expected = shorty_host_size(s, n)
        .ok_or(ConstructionError::SizeMismatch { got: g.size(), expected: 0 })?;
    let properties = audit_shorty_host(&g, s, hubs);
    finish(g, expected, roles, properties)
}

/// Checks the structural conditions the caterpillar saturation argument
/// uses: (i) every non-hub has degree exactly `s` and every hub at least
/// `s + 2`; (ii) each hub has exactly one hub neighbor (its partner),
/// partners share no neighbor, and no edge joins their leaf sets; (iii)
/// every leaf-set member sits inside an `(s+1)`-independent subset of that
/// leaf set; (iv) the non-hub vertices without hub neighbors form exactly
/// the clique `B` of order `s + 1`, and at most one vertex sees two hubs.
fn audit_shorty_host(g: &Graph, s: usize, hubs: usize) -> Vec<(&'static str, bool)> {
    let n = g.order();
    let is_hub = |v: usize| v < hubs;
    let degrees_ok = (0..n).all(|v| {
        if is_hub(v) {
            g.degree(v) >= s + 2
        } else {
            g.degree(v) == s
        }
    });
    let partners_ok = (0..hubs).all(|h| {
        let hub_neighbors: Vec<usize> = g.neighbors(h).filter(|&w| is_hub(w)).collect();
        hub_neighbors == vec![h ^ 1]
    });
    let partner_separation_ok = (0..hubs).step_by(2).all(|h| {
        let u = h;
        let w = h + 1;
        let nu: Vec<usize> = g.neighbors(u).filter(|&x| !is_hub(x)).collect();
        let nw: Vec<usize> = g.neighbors(w).filter(|&x| !is_hub(x)).collect();
        let disjoint = nu.iter().all(|x| !nw.contains(x));
        let no_cross_edges = nu
            .iter()
            .all(|&x| nw.iter().all(|&y| !g.has_edge(x, y)));
        disjoint && no_cross_edges
    });
    let leaf_sets_ok = (0..hubs).all(|h| {
        let nh: Vec<usize> = g.neighbors(h).filter(|&w| !is_hub(w)).collect();
        nh.iter()
            .all(|&w| has_independent_set_with(g, &nh, w, s + 1))
    });
    let hubless: Vec<usize> = (hubs..n)
        .filter(|&v| g.neighbors(v).all(|w| !is_hub(w)))
        .collect();
    let clique_b_ok = hubless.len() == s + 1 && is_clique(g, &hubless);
    let multi_hub = (hubs..n)
        .filter(|&v| g.neighbors(v).filter(|&w| is_hub(w)).count() >= 2)
        .count();
    vec![
        ("degrees", degrees_ok),
        ("hub-partners", partners_ok),
        ("partner-separation", partner_separation_ok),
        ("leaf-classes-independent", leaf_sets_ok),
        ("residual-clique", clique_b_ok),
        ("single-multi-hub-vertex", multi_hub <= 1),
    ]
}

// ---------------------------------------------------------------------------
// minimum-average-degree examples
// ---------------------------------------------------------------------------

/// Disjoint stars `K_{1,k}` with a `(delta-1)`-regular graph over the union
/// of their leaves: minimum degree `delta`, every degree-`delta` vertex
/// adjacent to a degree-`k` center, and average degree exactly
/// `delta + (k-delta)/(k+1)`.
pub fn example_kdelta_star(
    delta: usize,
    k: usize,
    ell: usize,
) -> Result<ConstructionReport, ConstructionError> {
    if delta == 0 || delta >= k {
        return Err(ConstructionError::BadDegreeSplit { delta, k });
    }
    if ell == 0 {
        return Err(ConstructionError::ZeroCopies);
    }
    let block = k + 1;
    let n = ell * block;
    let mut g = Graph::empty(n);
    let mut roles = Vec::with_capacity(n);
    let mut leaves = Vec::with_capacity(ell * k);
    for copy in 0..ell {
        let base = copy * block;
        for off in 1..=k {
            g.add_edge_mut(base, base + off).unwrap();
            leaves.push(base + off);
        }
        roles.push(VertexRole::Center { copy });
        roles.extend(std::iter::repeat_n(VertexRole::Leaf { class: copy }, k));
    }
    wire_regular_on(&mut g, &leaves, delta - 1)?;

    let expected = ell * k + ell * k * (delta - 1) / 2;
    let properties = audit_kdelta(&g, delta, k, false);
    finish(g, expected, roles, properties)
}

/// Disjoint balanced double stars `S_{k,k}` with a `(delta-1)`-regular graph
/// over the union of their leaves: as [`example_kdelta_star`] but achieving
/// the strengthened average `delta + (k-delta)/k`, with every vertex having
/// exactly one neighbor of degree `k`.
pub fn example_kdelta_doublestar(
    delta: usize,
    k: usize,
    ell: usize,
) -> Result<ConstructionReport, ConstructionError> {
    if delta == 0 || delta >= k {
        return Err(ConstructionError::BadDegreeSplit { delta, k });
    }
    if ell == 0 {
        return Err(ConstructionError::ZeroCopies);
    }
    let block = 2 * k;
    let n = ell * block;
    let mut g = Graph::empty(n);
    let mut roles = Vec::with_capacity(n);
    let mut leaves = Vec::with_capacity(2 * ell * (k - 1));
    for copy in 0..ell {
        let base = copy * block;
        g.add_edge_mut(base, base + 1).unwrap();
        roles.push(VertexRole::Center { copy });
        roles.push(VertexRole::Center { copy });
        for off in 2..=k {
            g.add_edge_mut(base, base + off).unwrap();
            leaves.push(base + off);
        }
        for off in k + 1..2 * k {
            g.add_edge_mut(base + 1, base + off).unwrap();
            leaves.push(base + off);
        }
        roles.extend(std::iter::repeat_n(VertexRole::Leaf { class: copy }, 2 * (k - 1)));
    }
    wire_regular_on(&mut g, &leaves, delta - 1)?;

    let expected = ell * (2 * k - 1) + ell * (k - 1) * (delta - 1);
    let properties = audit_kdelta(&g, delta, k, true);
    finish(g, expected, roles, properties)
}

/// Audits the degree structure of the minimum-average-degree examples.
fn audit_kdelta(g: &Graph, delta: usize, k: usize, unique_high: bool) -> Vec<(&'static str, bool)> {
    let n = g.order();
    let degrees_ok = (0..n).all(|v| g.degree(v) == delta || g.degree(v) == k);
    let min_ok = (0..n).map(|v| g.degree(v)).min() == Some(delta);
    let low_has_high = (0..n)
        .filter(|&v| g.degree(v) == delta)
        .all(|v| g.neighbors(v).any(|w| g.degree(w) >= k));
    let mut props = vec![
        ("two-degree-classes", degrees_ok),
        ("min-degree", min_ok),
        ("low-vertices-see-high", low_has_high),
    ];
    if unique_high {
        let unique = (0..n).all(|v| g.neighbors(v).filter(|&w| g.degree(w) >= k).count() == 1);
        props.push(("unique-high-neighbor", unique));
    }
    props
}

// ---------------------------------------------------------------------------
// complete-graph saturated hosts
// ---------------------------------------------------------------------------

/// The classical minimum `K_{t+1}`-saturated graph: `K_{t-1}` joined to an
/// independent set of `n - t + 1` vertices (a complete multipartite graph
/// with `t - 1` singleton parts).
pub fn ehm_construction(t: usize, n: usize) -> Result<ConstructionReport, ConstructionError> {
    if t < 2 {
        return Err(ConstructionError::CliqueTooSmall { t });
    }
    if n < t + 1 {
        return Err(ConstructionError::NTooSmall { n, min: t + 1 });
    }
    let mut parts = vec![1; t - 1];
    parts.push(n - t + 1);
    let g = generate::complete_multipartite(&parts);
    let mut roles = Vec::with_capacity(n);
    for index in 0..t - 1 {
        roles.push(VertexRole::Part { index });
    }
    roles.extend(std::iter::repeat_n(VertexRole::Part { index: t - 1 }, n - t + 1));
    let expected = (t - 1) * (t - 2) / 2 + (t - 1) * (n - t + 1);
    let singleton_degrees = (0..t - 1).all(|v| g.degree(v) == n - 1);
    let big_part_degrees = (t - 1..n).all(|v| g.degree(v) == t - 1);
    let properties = vec![
        ("singleton-degrees", singleton_degrees),
        ("big-part-degrees", big_part_degrees),
    ];
    finish(g, expected, roles, properties)
}
