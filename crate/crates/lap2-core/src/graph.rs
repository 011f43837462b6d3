//! Simple undirected graphs, Laplacians, and the structural queries the
//! eigenvalue-2 machinery needs: class detection (tree / unicyclic /
//! bicyclic), cycle extraction, the one-edge connection operator and the
//! decomposition of a unicyclic graph into rooted trees hanging off its cycle.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use alloc::{format, vec};
use core::fmt;

use crate::families::FamilySpec;

/// Errors from graph construction and structural queries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    /// An edge with both endpoints equal.
    LoopEdge(usize),
    /// The same unordered pair appeared twice.
    DuplicateEdge(usize, usize),
    /// A vertex index at or past `n`.
    IndexOutOfRange(usize),
    /// Operation requires a connected graph.
    Disconnected,
    /// Bicyclic graph whose two cycles share vertices (theta-like);
    /// outside this crate's scope.
    UnsupportedBicyclic,
    /// Operation requires a unicyclic graph.
    NotUnicyclic,
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::LoopEdge(v) => write!(f, "loop edge at vertex {v}"),
            GraphError::DuplicateEdge(u, v) => write!(f, "duplicate edge ({u}, {v})"),
            GraphError::IndexOutOfRange(v) => write!(f, "vertex index {v} out of range"),
            GraphError::Disconnected => write!(f, "graph is disconnected"),
            GraphError::UnsupportedBicyclic => {
                write!(f, "bicyclic graph with intersecting cycles is unsupported")
            }
            GraphError::NotUnicyclic => write!(f, "graph is not unicyclic"),
        }
    }
}

/// Join edge recorded when a graph is produced by a one-edge connection.
///
/// `u` is a vertex of the first operand, `v` a vertex of the second in its
/// own labelling; the second operand's vertices are shifted by `n1` in the
/// joined graph, so the actual edge is `(u, n1 + v)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JoinEdge {
    pub u: usize,
    pub v: usize,
    pub n1: usize,
    pub n2: usize,
}

/// Provenance metadata carried by generated graphs. Not part of graph
/// identity: equality and ordering ignore it.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GraphMeta {
    /// Family specification this graph was generated from, if any.
    pub family: Option<FamilySpec>,
    /// Join edge, when the graph is a one-edge connection.
    pub join: Option<JoinEdge>,
}

/// Immutable simple undirected graph on vertices `0..n`.
#[derive(Debug, Clone)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
    /// Optional provenance; ignored by equality.
    pub meta: GraphMeta,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges
    }
}

impl Eq for Graph {}

impl PartialOrd for Graph {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Graph {
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        (self.n, &self.edges).cmp(&(other.n, &other.edges))
    }
}

impl Graph {
    /// Builds a graph from an edge list, canonicalizing each pair to
    /// `(min, max)` and sorting the edge set.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut canon: Vec<(usize, usize)> = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            if a == b {
                return Err(GraphError::LoopEdge(a));
            }
            if a >= n {
                return Err(GraphError::IndexOutOfRange(a));
            }
            if b >= n {
                return Err(GraphError::IndexOutOfRange(b));
            }
            canon.push((a.min(b), a.max(b)));
        }
        canon.sort_unstable();
        for w in canon.windows(2) {
            if w[0] == w[1] {
                return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
            }
        }
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in &canon {
            adj[a].push(b);
            adj[b].push(a);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph {
            n,
            edges: canon,
            adj,
            meta: GraphMeta::default(),
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Sorted edge list, each pair `(u, v)` with `u < v`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// A short deterministic identifier, used to tag certificates.
    pub fn id(&self) -> String {
        let mut s = format!("n{}", self.n);
        for &(a, b) in &self.edges {
            s.push_str(&format!(";{a}-{b}"));
        }
        s
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    /// Laplacian matrix `L = D - A` as dense integer rows.
    pub fn laplacian(&self) -> LaplacianMatrix {
        let mut rows = vec![vec![0i64; self.n]; self.n];
        for v in 0..self.n {
            rows[v][v] = self.degree(v) as i64;
            for &w in &self.adj[v] {
                rows[v][w] = -1;
            }
        }
        LaplacianMatrix { rows }
    }

    /// The graph with one edge removed. Provenance metadata is dropped.
    pub fn delete_edge(&self, e: (usize, usize)) -> Graph {
        let key = (e.0.min(e.1), e.0.max(e.1));
        let edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .copied()
            .filter(|&f| f != key)
            .collect();
        Graph::new(self.n, &edges).expect("edge subset of a valid graph")
    }

    /// The graph with one edge added.
    pub fn add_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        let mut edges = self.edges.clone();
        edges.push((u, v));
        Graph::new(self.n, &edges)
    }

    /// Induced subgraph after deleting `remove`; returns the new graph and
    /// the map from old vertex index to new index.
    pub fn remove_vertices(&self, remove: &BTreeSet<usize>) -> (Graph, Vec<Option<usize>>) {
        let mut map = vec![None; self.n];
        let mut next = 0usize;
        for v in 0..self.n {
            if !remove.contains(&v) {
                map[v] = Some(next);
                next += 1;
            }
        }
        let edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .filter_map(|&(a, b)| match (map[a], map[b]) {
                (Some(x), Some(y)) => Some((x, y)),
                _ => None,
            })
            .collect();
        let g = Graph::new(next, &edges).expect("induced subgraph of a valid graph");
        (g, map)
    }

    /// Disjoint union with `other` (vertices shifted by `self.n`) plus the
    /// joining edge `(u, self.n + v)`. The join edge is recorded in the
    /// result's metadata so callers can recover the operands.
    pub fn one_edge_connect(&self, other: &Graph, u: usize, v: usize) -> Result<Graph, GraphError> {
        if u >= self.n {
            return Err(GraphError::IndexOutOfRange(u));
        }
        if v >= other.n {
            return Err(GraphError::IndexOutOfRange(v));
        }
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(a, b)| (a + self.n, b + self.n)));
        edges.push((u, self.n + v));
        let mut g = Graph::new(self.n + other.n, &edges)?;
        g.meta.join = Some(JoinEdge {
            u,
            v,
            n1: self.n,
            n2: other.n,
        });
        g.meta.family = match (&self.meta.family, &other.meta.family) {
            (Some(a), Some(b))
                if !matches!(a, FamilySpec::Join { .. })
                    && !matches!(b, FamilySpec::Join { .. }) =>
            {
                Some(FamilySpec::Join {
                    first: alloc::boxed::Box::new(a.clone()),
                    second: alloc::boxed::Box::new(b.clone()),
                    u,
                    v,
                })
            }
            _ => None,
        };
        Ok(g)
    }

    /// Classifies a connected graph and extracts its cycle structure.
    pub fn classify(&self) -> Result<GraphClass, GraphError> {
        if !self.is_connected() {
            return Err(GraphError::Disconnected);
        }
        let n = self.n;
        let m = self.edges.len();
        if n == 0 {
            return Ok(GraphClass::Other);
        }
        if m == n - 1 {
            return Ok(GraphClass::Tree);
        }
        if m != n && m != n + 1 {
            return Ok(GraphClass::Other);
        }
        // Non-bridge edges are exactly the cycle edges of unicyclic and
        // one-edge-connected bicyclic graphs.
        let bridges = self.bridges();
        let cycle_edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .copied()
            .filter(|e| !bridges.contains(e))
            .collect();
        let comps = edge_components(n, &cycle_edges);
        if m == n {
            if comps.len() != 1 {
                return Ok(GraphClass::Other);
            }
            let cycle = orient_cycle(self, &comps[0])?;
            return Ok(GraphClass::Unicyclic { cycle });
        }
        // m == n + 1
        if comps.len() != 2 {
            return Err(GraphError::UnsupportedBicyclic);
        }
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        for comp in &comps {
            cycles.push(orient_cycle(self, comp)?);
        }
        cycles.sort_by_key(|c| c[0]);
        let c2 = cycles.pop().expect("two cycles");
        let c1 = cycles.pop().expect("two cycles");
        let disjoint = c1.iter().all(|v| !c2.contains(v));
        if !disjoint {
            return Err(GraphError::UnsupportedBicyclic);
        }
        Ok(GraphClass::Bicyclic {
            cycle1: c1,
            cycle2: c2,
        })
    }

    /// Decomposes a unicyclic graph into the rooted trees attached to its
    /// cycle, in cycle order. Each tree contains its root (a cycle vertex).
    pub fn unicyclic_decompose(&self) -> Result<Vec<AttachedTree>, GraphError> {
        let cycle = match self.classify()? {
            GraphClass::Unicyclic { cycle } => cycle,
            _ => return Err(GraphError::NotUnicyclic),
        };
        let on_cycle: BTreeSet<usize> = cycle.iter().copied().collect();
        let mut trees = Vec::with_capacity(cycle.len());
        for &root in &cycle {
            // Collect the component of `root` after removing cycle edges:
            // walk from the root avoiding other cycle vertices.
            let mut vertices = vec![root];
            let mut stack = vec![root];
            let mut seen: BTreeSet<usize> = BTreeSet::new();
            seen.insert(root);
            while let Some(v) = stack.pop() {
                for &w in &self.adj[v] {
                    if on_cycle.contains(&w) || seen.contains(&w) {
                        continue;
                    }
                    seen.insert(w);
                    vertices.push(w);
                    stack.push(w);
                }
            }
            vertices.sort_unstable();
            trees.push(AttachedTree { root, vertices });
        }
        Ok(trees)
    }

    /// Tarjan bridge detection; returns the set of bridge edges `(u, v)`,
    /// `u < v`.
    fn bridges(&self) -> BTreeSet<(usize, usize)> {
        let n = self.n;
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut timer = 0usize;
        let mut out = BTreeSet::new();
        // Iterative DFS to avoid recursion depth concerns.
        let mut stack: Vec<(usize, usize, usize)> = Vec::new(); // (v, parent, next adj index)
        for start in 0..n {
            if disc[start] != usize::MAX {
                continue;
            }
            disc[start] = timer;
            low[start] = timer;
            timer += 1;
            stack.push((start, usize::MAX, 0));
            while let Some(&mut (v, parent, ref mut idx)) = stack.last_mut() {
                if *idx < self.adj[v].len() {
                    let w = self.adj[v][*idx];
                    *idx += 1;
                    if disc[w] == usize::MAX {
                        disc[w] = timer;
                        low[w] = timer;
                        timer += 1;
                        stack.push((w, v, 0));
                    } else if w != parent {
                        low[v] = low[v].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if let Some(&mut (p, _, _)) = stack.last_mut() {
                        low[p] = low[p].min(low[v]);
                        if low[v] > disc[p] {
                            out.insert((p.min(v), p.max(v)));
                        }
                    }
                }
            }
        }
        out
    }
}

/// One rooted tree from a unicyclic decomposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AttachedTree {
    /// Cycle vertex the tree hangs off (contained in `vertices`).
    pub root: usize,
    /// Sorted vertices of the tree, root included.
    pub vertices: Vec<usize>,
}

impl AttachedTree {
    pub fn order(&self) -> usize {
        self.vertices.len()
    }
}

/// Structural class of a connected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphClass {
    Tree,
    /// Connected with `|E| = n`; carries the unique cycle in canonical
    /// orientation.
    Unicyclic { cycle: Vec<usize> },
    /// One-edge connection of two unicyclic graphs; carries both
    /// vertex-disjoint cycles, ordered by smallest vertex.
    Bicyclic {
        cycle1: Vec<usize>,
        cycle2: Vec<usize>,
    },
    Other,
}

impl GraphClass {
    pub fn girths(&self) -> Vec<usize> {
        match self {
            GraphClass::Unicyclic { cycle } => vec![cycle.len()],
            GraphClass::Bicyclic { cycle1, cycle2 } => vec![cycle1.len(), cycle2.len()],
            _ => Vec::new(),
        }
    }
}

/// Dense integer Laplacian. Rows sum to zero and the matrix is symmetric by
/// construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaplacianMatrix {
    rows: Vec<Vec<i64>>,
}

impl LaplacianMatrix {
    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.rows[i][j]
    }

    /// `L - mu*I` as plain rows, the matrix whose rank determines
    /// eigenvalue multiplicities.
    pub fn shifted(&self, mu: i64) -> Vec<Vec<i64>> {
        let mut rows = self.rows.clone();
        for (i, row) in rows.iter_mut().enumerate() {
            row[i] -= mu;
        }
        rows
    }
}

/// Vertices of each connected component spanned by `edges` (isolated
/// vertices are skipped), sorted internally and by smallest vertex.
fn edge_components(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut seen = vec![false; n];
    let mut comps = Vec::new();
    for s in 0..n {
        if seen[s] || adj[s].is_empty() {
            continue;
        }
        let mut comp = Vec::new();
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(v) = stack.pop() {
            comp.push(v);
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        comp.sort_unstable();
        comps.push(comp);
    }
    comps
}

/// Orders the vertex set of a simple cycle into a walk starting at the
/// minimum-index vertex and moving toward its smaller-index cycle neighbor.
fn orient_cycle(g: &Graph, comp: &[usize]) -> Result<Vec<usize>, GraphError> {
    let set: BTreeSet<usize> = comp.iter().copied().collect();
    // Every vertex must have exactly two neighbors inside the component.
    let mut cyc_adj: Vec<(usize, Vec<usize>)> = Vec::with_capacity(comp.len());
    for &v in comp {
        let nbrs: Vec<usize> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|w| set.contains(w))
            .collect();
        if nbrs.len() != 2 {
            return Err(GraphError::UnsupportedBicyclic);
        }
        cyc_adj.push((v, nbrs));
    }
    let find = |v: usize| -> &Vec<usize> {
        &cyc_adj[comp.binary_search(&v).expect("cycle vertex")].1
    };
    let start = comp[0];
    let first = *find(start).iter().min().expect("two neighbors");
    let mut walk = vec![start, first];
    loop {
        let v = *walk.last().expect("nonempty");
        let prev = walk[walk.len() - 2];
        let nbrs = find(v);
        let next = if nbrs[0] == prev { nbrs[1] } else { nbrs[0] };
        if next == start {
            break;
        }
        walk.push(next);
    }
    Ok(walk)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(g: usize) -> Graph {
        let edges: Vec<(usize, usize)> = (0..g).map(|i| (i, (i + 1) % g)).collect();
        Graph::new(g, &edges).unwrap()
    }

    #[test]
    fn build_rejects_bad_edges() {
        assert_eq!(
            Graph::new(3, &[(0, 0)]).unwrap_err(),
            GraphError::LoopEdge(0)
        );
        assert_eq!(
            Graph::new(3, &[(0, 1), (1, 0)]).unwrap_err(),
            GraphError::DuplicateEdge(0, 1)
        );
        assert_eq!(
            Graph::new(3, &[(0, 3)]).unwrap_err(),
            GraphError::IndexOutOfRange(3)
        );
    }

    #[test]
    fn build_canonicalizes() {
        let g = Graph::new(3, &[(2, 0), (1, 0), (2, 1)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (1, 2)]);
        assert_eq!(g.neighbors(2), &[0, 1]);
    }

    #[test]
    fn laplacian_of_single_edge() {
        let g = Graph::new(2, &[(0, 1)]).unwrap();
        let l = g.laplacian();
        assert_eq!(l.rows(), &[vec![1, -1], vec![-1, 1]]);
    }

    #[test]
    fn laplacian_of_triangle() {
        let l = cycle(3).laplacian();
        assert_eq!(
            l.rows(),
            &[vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]]
        );
    }

    #[test]
    fn laplacian_pendant_square_diagonal() {
        // C4 with one pendant, the 5-vertex half of the worked example.
        let g = Graph::new(5, &[(0, 1), (1, 2), (2, 4), (1, 3), (3, 4)]).unwrap();
        let l = g.laplacian();
        let diag: Vec<i64> = (0..5).map(|i| l.entry(i, i)).collect();
        assert_eq!(diag, vec![1, 3, 2, 2, 2]);
        for i in 0..5 {
            assert_eq!(l.rows()[i].iter().sum::<i64>(), 0);
        }
    }

    #[test]
    fn classify_basics() {
        assert_eq!(
            cycle(4).classify().unwrap(),
            GraphClass::Unicyclic {
                cycle: vec![0, 1, 2, 3]
            }
        );
        let p3 = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3.classify().unwrap(), GraphClass::Tree);
        let disc = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(disc.classify().unwrap_err(), GraphError::Disconnected);
    }

    #[test]
    fn classify_join_of_cycles() {
        let g = cycle(3).one_edge_connect(&cycle(4), 0, 0).unwrap();
        assert_eq!(g.vertex_count(), 7);
        assert_eq!(g.edge_count(), 8);
        match g.classify().unwrap() {
            GraphClass::Bicyclic { cycle1, cycle2 } => {
                assert_eq!(cycle1.len(), 3);
                assert_eq!(cycle2.len(), 4);
                assert_eq!(cycle1[0], 0);
                assert_eq!(cycle2[0], 3);
            }
            other => panic!("expected bicyclic, got {other:?}"),
        }
        assert_eq!(
            g.meta.join,
            Some(JoinEdge {
                u: 0,
                v: 0,
                n1: 3,
                n2: 4
            })
        );
    }

    #[test]
    fn theta_graph_rejected() {
        // Two vertices joined by three disjoint paths: cycles share vertices.
        let g = Graph::new(5, &[(0, 1), (0, 2), (0, 3), (4, 1), (4, 2), (4, 3)]).unwrap();
        assert_eq!(g.classify().unwrap_err(), GraphError::UnsupportedBicyclic);
    }

    #[test]
    fn one_edge_connect_of_single_edges_is_path() {
        let s2 = Graph::new(2, &[(0, 1)]).unwrap();
        let g = s2.one_edge_connect(&s2, 0, 0).unwrap();
        // P4 as 1-0-2-3.
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (2, 3)]);
        assert_eq!(g.classify().unwrap(), GraphClass::Tree);
    }

    #[test]
    fn one_edge_connect_counts() {
        let g = cycle(3).one_edge_connect(&cycle(3), 1, 2).unwrap();
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(g.edge_count(), 7);
        assert!(g.has_edge(1, 5));
    }

    #[test]
    fn decompose_cycle_and_sun() {
        let trees = cycle(4).unicyclic_decompose().unwrap();
        assert_eq!(trees.len(), 4);
        assert!(trees.iter().all(|t| t.order() == 1));

        // Sun over C3: cycle 0..3, pendants 3,4,5.
        let sun3 = Graph::new(6, &[(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)]).unwrap();
        let trees = sun3.unicyclic_decompose().unwrap();
        assert_eq!(trees.len(), 3);
        assert!(trees.iter().all(|t| t.order() == 2));
    }

    #[test]
    fn decompose_pendant_square_orders() {
        let g = Graph::new(5, &[(0, 1), (1, 2), (2, 4), (1, 3), (3, 4)]).unwrap();
        let trees = g.unicyclic_decompose().unwrap();
        let mut orders: Vec<usize> = trees.iter().map(|t| t.order()).collect();
        let total: usize = orders.iter().sum();
        assert_eq!(total, 5);
        orders.sort_unstable();
        assert_eq!(orders, vec![1, 1, 1, 2]);
    }

    #[test]
    fn cycle_orientation_is_canonical() {
        // Relabelled C4: 0-2-1-3-0.
        let g = Graph::new(4, &[(0, 2), (2, 1), (1, 3), (3, 0)]).unwrap();
        match g.classify().unwrap() {
            GraphClass::Unicyclic { cycle } => assert_eq!(cycle, vec![0, 2, 1, 3]),
            other => panic!("unexpected {other:?}"),
        }
    }
}
