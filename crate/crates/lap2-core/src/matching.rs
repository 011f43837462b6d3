//! Maximum matching in general graphs via augmenting paths with blossom
//! contraction, plus the cycle-edge bookkeeping the eigenvector
//! constructions rely on.
//!
//! Determinism: the greedy seed scans edges in sorted order, augmenting
//! search starts from free vertices in ascending index and expands sorted
//! adjacency lists, so the returned matching is a pure function of the
//! input graph.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{Graph, GraphClass, GraphError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MatchingError {
    /// The graph has no cycle (tree or otherwise out of scope).
    NotCyclic,
    Graph(GraphError),
}

impl fmt::Display for MatchingError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatchingError::NotCyclic => write!(f, "graph has no cycle"),
            MatchingError::Graph(e) => write!(f, "{e}"),
        }
    }
}

impl From<GraphError> for MatchingError {
    fn from(e: GraphError) -> Self {
        MatchingError::Graph(e)
    }
}

/// A matching: pairwise vertex-disjoint edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    edges: Vec<(usize, usize)>,
    n: usize,
}

impl Matching {
    /// Builds a matching from explicit edges of `g`, validating disjointness.
    pub fn from_edges(g: &Graph, edges: &[(usize, usize)]) -> Option<Matching> {
        let mut canon: Vec<(usize, usize)> = edges
            .iter()
            .map(|&(a, b)| (a.min(b), a.max(b)))
            .collect();
        canon.sort_unstable();
        canon.dedup();
        if canon.len() != edges.len() {
            return None;
        }
        let mut used = vec![false; g.vertex_count()];
        for &(a, b) in &canon {
            if !g.has_edge(a, b) || used[a] || used[b] {
                return None;
            }
            used[a] = true;
            used[b] = true;
        }
        Some(Matching {
            edges: canon,
            n: g.vertex_count(),
        })
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// True iff the matching covers every vertex.
    pub fn perfect(&self) -> bool {
        2 * self.edges.len() == self.n
    }

    pub fn contains(&self, e: (usize, usize)) -> bool {
        let key = (e.0.min(e.1), e.0.max(e.1));
        self.edges.binary_search(&key).is_ok()
    }

    /// The matched partner of `v`, if covered.
    pub fn mate(&self, v: usize) -> Option<usize> {
        for &(a, b) in &self.edges {
            if a == v {
                return Some(b);
            }
            if b == v {
                return Some(a);
            }
        }
        None
    }
}

const UNMATCHED: usize = usize::MAX;

/// Maximum-cardinality matching (exact) via Edmonds' blossom algorithm.
pub fn maximum_matching(g: &Graph) -> Matching {
    let n = g.vertex_count();
    let mut mate = vec![UNMATCHED; n];
    // Greedy seed over sorted edges.
    for &(a, b) in g.edges() {
        if mate[a] == UNMATCHED && mate[b] == UNMATCHED {
            mate[a] = b;
            mate[b] = a;
        }
    }
    for start in 0..n {
        if mate[start] != UNMATCHED {
            continue;
        }
        if let Some(end) = find_augmenting_path(g, &mate, start) {
            augment(&mut mate, &end);
        }
    }
    let mut edges = Vec::new();
    for v in 0..n {
        let w = mate[v];
        if w != UNMATCHED && v < w {
            edges.push((v, w));
        }
    }
    Matching { edges, n }
}

struct PathEnd {
    v: usize,
    parent: Vec<usize>,
}

fn find_augmenting_path(g: &Graph, mate: &[usize], start: usize) -> Option<PathEnd> {
    let n = g.vertex_count();
    let mut base: Vec<usize> = (0..n).collect();
    let mut parent = vec![UNMATCHED; n];
    let mut used = vec![false; n];
    let mut queue = Vec::new();
    let mut head = 0usize;
    used[start] = true;
    queue.push(start);
    while head < queue.len() {
        let v = queue[head];
        head += 1;
        for &w in g.neighbors(v) {
            if base[v] == base[w] || mate[v] == w {
                continue;
            }
            if w == start || (mate[w] != UNMATCHED && parent[mate[w]] != UNMATCHED) {
                // Odd cycle found: contract the blossom.
                let cur_base = lowest_common_ancestor(&base, &parent, mate, v, w);
                let mut blossom = vec![false; n];
                mark_path(&mut blossom, &base, &mut parent, mate, v, cur_base, w);
                mark_path(&mut blossom, &base, &mut parent, mate, w, cur_base, v);
                for i in 0..n {
                    if blossom[base[i]] {
                        base[i] = cur_base;
                        if !used[i] {
                            used[i] = true;
                            queue.push(i);
                        }
                    }
                }
            } else if parent[w] == UNMATCHED {
                parent[w] = v;
                if mate[w] == UNMATCHED {
                    return Some(PathEnd { v: w, parent });
                }
                used[mate[w]] = true;
                queue.push(mate[w]);
            }
        }
    }
    None
}

fn lowest_common_ancestor(
    base: &[usize],
    parent: &[usize],
    mate: &[usize],
    mut a: usize,
    mut b: usize,
) -> usize {
    let mut seen = vec![false; base.len()];
    loop {
        a = base[a];
        seen[a] = true;
        if mate[a] == UNMATCHED {
            break;
        }
        a = parent[mate[a]];
    }
    loop {
        b = base[b];
        if seen[b] {
            return b;
        }
        b = parent[mate[b]];
    }
}

fn mark_path(
    blossom: &mut [bool],
    base: &[usize],
    parent: &mut [usize],
    mate: &[usize],
    mut v: usize,
    cur_base: usize,
    mut child: usize,
) {
    while base[v] != cur_base {
        blossom[base[v]] = true;
        blossom[base[mate[v]]] = true;
        parent[v] = child;
        child = mate[v];
        v = parent[mate[v]];
    }
}

fn augment(mate: &mut [usize], end: &PathEnd) {
    let mut v = end.v;
    while v != UNMATCHED {
        let pv = end.parent[v];
        let ppv = mate[pv];
        mate[v] = pv;
        mate[pv] = v;
        v = ppv;
    }
}

/// Cycle edges not covered by `m`, grouped per cycle in canonical cycle
/// order. Requires a unicyclic or bicyclic graph.
pub fn non_matching_cycle_edges(
    g: &Graph,
    m: &Matching,
) -> Result<Vec<Vec<(usize, usize)>>, MatchingError> {
    let class = g.classify()?;
    let cycles: Vec<Vec<usize>> = match class {
        GraphClass::Unicyclic { cycle } => vec![cycle],
        GraphClass::Bicyclic { cycle1, cycle2 } => vec![cycle1, cycle2],
        _ => return Err(MatchingError::NotCyclic),
    };
    let mut out = Vec::with_capacity(cycles.len());
    for cycle in cycles {
        let mut group = Vec::new();
        for i in 0..cycle.len() {
            let a = cycle[i];
            let b = cycle[(i + 1) % cycle.len()];
            let e = (a.min(b), a.max(b));
            if !m.contains(e) {
                group.push(e);
            }
        }
        out.push(group);
    }
    Ok(out)
}
