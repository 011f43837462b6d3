//! Deterministic generators and exhaustive enumerators for the graph
//! families under study: cycles, sun graphs, broken sun graphs, unicyclic
//! graphs `C(T_1,...,T_g)` built from rooted trees attached to a cycle, and
//! one-edge connections of those.
//!
//! Enumeration is canonical: broken sun pendant masks are deduplicated up to
//! rotation and reflection of the cycle (one representative per orbit, the
//! lexicographically smallest sorted position list), and tree arrangements
//! are deduplicated the same way (representative: lexicographically greatest
//! sequence of level-sequence encodings, which makes heavier trees sit at
//! low cycle positions and agrees with the mask convention on broken suns).

use alloc::boxed::Box;
use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use alloc::{format, vec};
use core::fmt;

use crate::graph::{Graph, GraphError};
use crate::matching::maximum_matching;

/// Largest attached-tree order the enumerators consider.
pub const TREE_ORDER_CAP: usize = 8;

/// Declarative description of a generated graph.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum FamilySpec {
    Cycle {
        g: usize,
    },
    Sun {
        g: usize,
    },
    BrokenSun {
        g: usize,
        /// Sorted cycle positions that carry a pendant vertex.
        pendants: Vec<usize>,
    },
    UnicyclicTrees {
        g: usize,
        /// One parent array per cycle position; entry 0 is the root
        /// (attached to the cycle), `trees[i][j]` is the parent of local
        /// vertex `j` for `j >= 1`.
        trees: Vec<Vec<usize>>,
    },
    Join {
        first: Box<FamilySpec>,
        second: Box<FamilySpec>,
        u: usize,
        v: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvalidSpec(pub String);

impl fmt::Display for InvalidSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid family spec: {}", self.0)
    }
}

impl FamilySpec {
    /// Number of vertices of the generated graph.
    pub fn order(&self) -> usize {
        match self {
            FamilySpec::Cycle { g } => *g,
            FamilySpec::Sun { g } => 2 * g,
            FamilySpec::BrokenSun { g, pendants } => g + pendants.len(),
            FamilySpec::UnicyclicTrees { trees, .. } => trees.iter().map(|t| t.len()).sum(),
            FamilySpec::Join { first, second, .. } => first.order() + second.order(),
        }
    }

    /// Compact deterministic label, used in instance descriptors.
    pub fn label(&self) -> String {
        match self {
            FamilySpec::Cycle { g } => format!("C{g}"),
            FamilySpec::Sun { g } => format!("Sun{g}"),
            FamilySpec::BrokenSun { g, pendants } => format!("BS{g}{pendants:?}"),
            FamilySpec::UnicyclicTrees { g, trees } => format!("U{g}{trees:?}"),
            FamilySpec::Join { first, second, u, v } => {
                format!("({})(+)({})@{u},{v}", first.label(), second.label())
            }
        }
    }

    fn validate(&self) -> Result<(), InvalidSpec> {
        match self {
            FamilySpec::Cycle { g } | FamilySpec::Sun { g } => {
                if *g < 3 {
                    return Err(InvalidSpec(format!("girth {g} < 3")));
                }
            }
            FamilySpec::BrokenSun { g, pendants } => {
                if *g < 3 {
                    return Err(InvalidSpec(format!("girth {g} < 3")));
                }
                if pendants.windows(2).any(|w| w[0] >= w[1]) {
                    return Err(InvalidSpec("pendant positions not strictly increasing".into()));
                }
                if pendants.iter().any(|&p| p >= *g) {
                    return Err(InvalidSpec("pendant position past girth".into()));
                }
            }
            FamilySpec::UnicyclicTrees { g, trees } => {
                if *g < 3 {
                    return Err(InvalidSpec(format!("girth {g} < 3")));
                }
                if trees.len() != *g {
                    return Err(InvalidSpec(format!(
                        "expected {g} trees, got {}",
                        trees.len()
                    )));
                }
                for t in trees {
                    validate_parent_array(t)?;
                }
            }
            FamilySpec::Join { first, second, u, v } => {
                if matches!(**first, FamilySpec::Join { .. })
                    || matches!(**second, FamilySpec::Join { .. })
                {
                    return Err(InvalidSpec("nested joins are out of scope".into()));
                }
                first.validate()?;
                second.validate()?;
                if *u >= first.order() {
                    return Err(InvalidSpec(format!("join vertex {u} out of range")));
                }
                if *v >= second.order() {
                    return Err(InvalidSpec(format!("join vertex {v} out of range")));
                }
            }
        }
        Ok(())
    }

    /// Normalizes the cyclic variants to an explicit tree arrangement.
    fn as_trees(&self) -> Option<(usize, Vec<Vec<usize>>)> {
        match self {
            FamilySpec::Cycle { g } => Some((*g, vec![vec![0]; *g])),
            FamilySpec::Sun { g } => Some((*g, vec![vec![0, 0]; *g])),
            FamilySpec::BrokenSun { g, pendants } => {
                let trees = (0..*g)
                    .map(|i| {
                        if pendants.contains(&i) {
                            vec![0, 0]
                        } else {
                            vec![0]
                        }
                    })
                    .collect();
                Some((*g, trees))
            }
            FamilySpec::UnicyclicTrees { g, trees } => Some((*g, trees.clone())),
            FamilySpec::Join { .. } => None,
        }
    }
}

fn validate_parent_array(t: &[usize]) -> Result<(), InvalidSpec> {
    if t.is_empty() {
        return Err(InvalidSpec("empty tree".into()));
    }
    if t[0] != 0 {
        return Err(InvalidSpec("tree root must be index 0".into()));
    }
    for (j, &p) in t.iter().enumerate().skip(1) {
        if p >= t.len() || p == j {
            return Err(InvalidSpec(format!("bad parent {p} for vertex {j}")));
        }
        // Acyclicity: following parents from j must reach the root.
        let mut cur = j;
        let mut steps = 0;
        while cur != 0 {
            cur = t[cur];
            steps += 1;
            if steps > t.len() {
                return Err(InvalidSpec("parent array has a cycle".into()));
            }
        }
    }
    Ok(())
}

/// Builds the graph a family spec describes. Cycle vertices are `0..g-1`
/// in cycle order; tree vertices follow in per-position blocks.
pub fn generate(spec: &FamilySpec) -> Result<Graph, InvalidSpec> {
    spec.validate()?;
    let mut g = match spec {
        FamilySpec::Join { first, second, u, v } => {
            let a = generate(first)?;
            let b = generate(second)?;
            a.one_edge_connect(&b, *u, *v)
                .map_err(|e| InvalidSpec(format!("{e}")))?
        }
        _ => {
            let (girth, trees) = spec.as_trees().expect("non-join spec");
            build_unicyclic(girth, &trees).map_err(|e| InvalidSpec(format!("{e}")))?
        }
    };
    g.meta.family = Some(spec.clone());
    Ok(g)
}

fn build_unicyclic(girth: usize, trees: &[Vec<usize>]) -> Result<Graph, GraphError> {
    let n: usize = trees.iter().map(|t| t.len()).sum();
    let mut edges = Vec::with_capacity(n + 1);
    for i in 0..girth {
        edges.push((i, (i + 1) % girth));
    }
    let mut base = girth;
    for (i, t) in trees.iter().enumerate() {
        // Local vertex 0 is the cycle vertex i; local j >= 1 maps to
        // base + j - 1.
        let map = |j: usize| if j == 0 { i } else { base + j - 1 };
        for (j, &p) in t.iter().enumerate().skip(1) {
            edges.push((map(j), map(p)));
        }
        base += t.len() - 1;
    }
    Graph::new(n, &edges)
}

/// Number of attached trees of odd order in a unicyclic graph.
pub fn odd_tree_count(g: &Graph) -> Result<usize, GraphError> {
    let trees = g.unicyclic_decompose()?;
    Ok(trees.iter().filter(|t| t.order() % 2 == 1).count())
}

/// Matching filter for family enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatchingFilter {
    Any,
    PerfectMatching,
    NoPerfectMatching,
}

impl MatchingFilter {
    fn admits(&self, g: &Graph) -> bool {
        match self {
            MatchingFilter::Any => true,
            MatchingFilter::PerfectMatching => maximum_matching(g).perfect(),
            MatchingFilter::NoPerfectMatching => !maximum_matching(g).perfect(),
        }
    }
}

/// Canonical representative of a pendant mask under the dihedral group:
/// the orbit element whose sorted position list is lexicographically
/// smallest.
pub fn canonical_mask(g: usize, pendants: &[usize]) -> Vec<usize> {
    let mut best: Option<Vec<usize>> = None;
    for r in 0..g {
        for flip in [false, true] {
            let mut image: Vec<usize> = pendants
                .iter()
                .map(|&p| {
                    if flip {
                        (g + r - p % g) % g
                    } else {
                        (p + r) % g
                    }
                })
                .collect();
            image.sort_unstable();
            if best.as_ref().is_none_or(|b| image < *b) {
                best = Some(image);
            }
        }
    }
    best.unwrap_or_default()
}

/// All broken sun graphs of the given girth, one per pendant-mask orbit,
/// filtered by matching structure. Emitted in ascending (weight, mask)
/// order.
pub fn enumerate_broken_suns(
    girth: usize,
    filter: MatchingFilter,
) -> impl Iterator<Item = Graph> {
    let mut masks: Vec<Vec<usize>> = Vec::new();
    if (3..=60).contains(&girth) {
        for bits in 0u64..(1u64 << girth) {
            let mask: Vec<usize> = (0..girth).filter(|&i| bits >> i & 1 == 1).collect();
            if canonical_mask(girth, &mask) == mask {
                masks.push(mask);
            }
        }
    }
    masks.sort_by_key(|m| (m.len(), m.clone()));
    masks.into_iter().filter_map(move |pendants| {
        let spec = FamilySpec::BrokenSun { g: girth, pendants };
        let graph = generate(&spec).expect("enumerated spec is valid");
        filter.admits(&graph).then_some(graph)
    })
}

/// Level sequence of a rooted tree: depth of each vertex in preorder,
/// children visited in canonically descending order.
pub type TreeShape = Vec<u8>;

/// Canonical rooted tree shapes by order, `table[k]` holding all shapes of
/// order `k` in ascending level-sequence order.
pub struct ShapeTable {
    by_order: Vec<Vec<TreeShape>>,
}

impl ShapeTable {
    pub fn up_to(cap: usize) -> ShapeTable {
        let mut by_order: Vec<Vec<TreeShape>> = vec![Vec::new(), vec![vec![0]]];
        for k in 2..=cap {
            let mut shapes: Vec<TreeShape> = Vec::new();
            let mut lists = Vec::new();
            children_lists(&by_order, k - 1, None, &mut Vec::new(), &mut lists);
            for children in lists {
                let mut shape: TreeShape = vec![0];
                for child in children {
                    shape.extend(child.iter().map(|d| d + 1));
                }
                shapes.push(shape);
            }
            shapes.sort();
            shapes.dedup();
            by_order.push(shapes);
        }
        ShapeTable { by_order }
    }

    pub fn of_order(&self, k: usize) -> &[TreeShape] {
        &self.by_order[k]
    }
}

/// Extends a non-increasing children sequence with total remaining size.
fn children_lists(
    table: &[Vec<TreeShape>],
    remaining: usize,
    max: Option<&TreeShape>,
    acc: &mut Vec<TreeShape>,
    out: &mut Vec<Vec<TreeShape>>,
) {
    if remaining == 0 {
        out.push(acc.clone());
        return;
    }
    for size in (1..=remaining).rev() {
        for shape in &table[size] {
            if let Some(m) = max {
                if shape > m {
                    continue;
                }
            }
            acc.push(shape.clone());
            children_lists(table, remaining - size, Some(shape), acc, out);
            acc.pop();
        }
    }
}

/// Parent array (preorder) of a level-sequence shape.
pub fn shape_to_parents(shape: &TreeShape) -> Vec<usize> {
    let mut parents = vec![0usize; shape.len()];
    let mut last_at_depth = vec![0usize; shape.len() + 1];
    for (i, &d) in shape.iter().enumerate().skip(1) {
        parents[i] = last_at_depth[d as usize - 1];
        last_at_depth[d as usize] = i;
    }
    parents
}

/// True iff the arrangement equals the lexicographically greatest element
/// of its orbit under rotation and reflection.
fn arrangement_is_canonical(arr: &[TreeShape]) -> bool {
    let g = arr.len();
    for r in 0..g {
        for flip in [false, true] {
            for i in 0..g {
                let j = if flip { (g + r - i % g) % g } else { (i + r) % g };
                match arr[j].cmp(&arr[i]) {
                    core::cmp::Ordering::Greater => return false,
                    core::cmp::Ordering::Less => break,
                    core::cmp::Ordering::Equal => {}
                }
            }
        }
    }
    true
}

/// All unicyclic graphs `C(T_1,...,T_g)` with at most `n_max` vertices and
/// the given girth, one per dihedral orbit of the tree arrangement, trees
/// capped at [`TREE_ORDER_CAP`] vertices. Emitted in ascending
/// (order, arrangement) order.
pub fn enumerate_unicyclic(n_max: usize, girth: usize) -> impl Iterator<Item = Graph> {
    let specs = unicyclic_specs(n_max, girth);
    specs
        .into_iter()
        .map(|spec| generate(&spec).expect("enumerated spec is valid"))
}

/// The family specs behind [`enumerate_unicyclic`], without building graphs.
pub fn unicyclic_specs(n_max: usize, girth: usize) -> Vec<FamilySpec> {
    if girth < 3 || n_max < girth {
        return Vec::new();
    }
    let cap = TREE_ORDER_CAP.min(n_max.saturating_sub(girth) + 1);
    let table = ShapeTable::up_to(cap);
    let mut arrangements: Vec<(usize, Vec<TreeShape>)> = Vec::new();
    let mut acc: Vec<TreeShape> = Vec::new();
    fill_positions(&table, girth, n_max, cap, &mut acc, &mut arrangements);
    arrangements.sort();
    arrangements
        .into_iter()
        .map(|(_, arr)| FamilySpec::UnicyclicTrees {
            g: girth,
            trees: arr.iter().map(shape_to_parents).collect(),
        })
        .collect()
}

fn fill_positions(
    table: &ShapeTable,
    girth: usize,
    n_max: usize,
    cap: usize,
    acc: &mut Vec<TreeShape>,
    out: &mut Vec<(usize, Vec<TreeShape>)>,
) {
    if acc.len() == girth {
        if arrangement_is_canonical(acc) {
            let n: usize = acc.iter().map(|s| s.len()).sum();
            out.push((n, acc.clone()));
        }
        return;
    }
    let used: usize = acc.iter().map(|s| s.len()).sum();
    let slots_left = girth - acc.len();
    let budget = n_max - used - (slots_left - 1); // each later slot needs >= 1
    for size in 1..=cap.min(budget) {
        for shape in table.of_order(size) {
            acc.push(shape.clone());
            fill_positions(table, girth, n_max, cap, acc, out);
            acc.pop();
        }
    }
}

/// True iff the graph is a broken sun: unicyclic with every attached tree
/// of order at most 2.
pub fn is_broken_sun(g: &Graph) -> bool {
    match g.unicyclic_decompose() {
        Ok(trees) => trees.iter().all(|t| t.order() <= 2),
        Err(_) => false,
    }
}

/// Representatives (smallest index per orbit) of the vertex orbits induced
/// by the dihedral symmetries of the spec's tree arrangement. For join
/// specs and as a safe default this is every vertex.
pub fn vertex_orbit_reps(spec: &FamilySpec) -> Vec<usize> {
    let Some((girth, trees)) = spec.as_trees() else {
        return (0..spec.order()).collect();
    };
    let n: usize = trees.iter().map(|t| t.len()).sum();
    // Block offset of each position's non-root vertices.
    let mut base = vec![0usize; girth];
    let mut next = girth;
    for i in 0..girth {
        base[i] = next;
        next += trees[i].len() - 1;
    }
    let global = |pos: usize, local: usize| -> usize {
        if local == 0 {
            pos
        } else {
            base[pos] + local - 1
        }
    };
    let mut orbit = (0..n).collect::<Vec<usize>>();
    // Union by minimum over all symmetries of the arrangement.
    let find = |orbit: &mut Vec<usize>, mut x: usize| -> usize {
        while orbit[x] != x {
            orbit[x] = orbit[orbit[x]];
            x = orbit[x];
        }
        x
    };
    for r in 0..girth {
        for flip in [false, true] {
            let sigma = |i: usize| if flip { (girth + r - i % girth) % girth } else { (i + r) % girth };
            if (0..girth).any(|i| trees[sigma(i)] != trees[i]) {
                continue;
            }
            for pos in 0..girth {
                for local in 0..trees[pos].len() {
                    let a = global(pos, local);
                    let b = global(sigma(pos), local);
                    let (ra, rb) = (find(&mut orbit, a), find(&mut orbit, b));
                    if ra != rb {
                        let (lo, hi) = (ra.min(rb), ra.max(rb));
                        orbit[hi] = lo;
                    }
                }
            }
        }
    }
    let mut reps = BTreeSet::new();
    for v in 0..n {
        let r = find(&mut orbit, v);
        reps.insert(r);
    }
    reps.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matching::maximum_matching;

    #[test]
    fn sun3_degrees() {
        let g = generate(&FamilySpec::Sun { g: 3 }).unwrap();
        assert_eq!(g.vertex_count(), 6);
        let mut degs: Vec<usize> = (0..6).map(|v| g.degree(v)).collect();
        degs.sort_unstable();
        assert_eq!(degs, vec![1, 1, 1, 3, 3, 3]);
    }

    #[test]
    fn broken_sun_mask_placement() {
        let g = generate(&FamilySpec::BrokenSun {
            g: 4,
            pendants: vec![0, 2],
        })
        .unwrap();
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(g.degree(0), 3);
        assert_eq!(g.degree(1), 2);
        assert_eq!(g.degree(2), 3);
        assert!(g.has_edge(0, 4));
        assert!(g.has_edge(2, 5));
    }

    #[test]
    fn cycle_too_short_rejected() {
        assert!(generate(&FamilySpec::Cycle { g: 2 }).is_err());
    }

    #[test]
    fn generate_records_spec_in_meta() {
        let spec = FamilySpec::BrokenSun {
            g: 5,
            pendants: vec![1, 3],
        };
        let g = generate(&spec).unwrap();
        assert_eq!(g.meta.family.as_ref(), Some(&spec));
    }

    #[test]
    fn rooted_tree_shape_counts() {
        let table = ShapeTable::up_to(8);
        let counts: Vec<usize> = (1..=8).map(|k| table.of_order(k).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 9, 20, 48, 115]);
    }

    #[test]
    fn shape_to_parents_roundtrip() {
        let shape: TreeShape = vec![0, 1, 2, 1];
        assert_eq!(shape_to_parents(&shape), vec![0, 0, 1, 0]);
    }

    #[test]
    fn broken_sun_orbit_counts() {
        // Bracelet counts for binary necklaces under the dihedral group.
        let expect = [(3usize, 4usize), (4, 6), (5, 8), (6, 13)];
        for (g, want) in expect {
            let got = enumerate_broken_suns(g, MatchingFilter::Any).count();
            assert_eq!(got, want, "girth {g}");
        }
    }

    #[test]
    fn broken_sun_pm_filter_matches_exhaustive_oracle() {
        // Independent oracle: re-enumerate orbits and decide the perfect
        // matching question by brute force over all edge subsets.
        fn brute_pm(g: &Graph) -> bool {
            fn go(edges: &[(usize, usize)], used: &mut [bool], idx: usize, have: usize) -> usize {
                if idx == edges.len() {
                    return have;
                }
                let mut best = go(edges, used, idx + 1, have);
                let (a, b) = edges[idx];
                if !used[a] && !used[b] {
                    used[a] = true;
                    used[b] = true;
                    best = best.max(go(edges, used, idx + 1, have + 1));
                    used[a] = false;
                    used[b] = false;
                }
                best
            }
            let mut used = vec![false; g.vertex_count()];
            2 * go(g.edges(), &mut used, 0, 0) == g.vertex_count()
        }
        for girth in 3..=6 {
            let fast: Vec<Graph> =
                enumerate_broken_suns(girth, MatchingFilter::PerfectMatching).collect();
            let oracle: Vec<Graph> = enumerate_broken_suns(girth, MatchingFilter::Any)
                .filter(brute_pm)
                .collect();
            assert_eq!(fast, oracle, "girth {girth}");
        }
    }

    #[test]
    fn broken_sun_g4_pm_stream() {
        // Oracle-verified: exactly the bare cycle, the adjacent pendant
        // pair, and the full sun admit a perfect matching at girth 4.
        let masks: Vec<Vec<usize>> = enumerate_broken_suns(4, MatchingFilter::PerfectMatching)
            .map(|g| match g.meta.family {
                Some(FamilySpec::BrokenSun { pendants, .. }) => pendants,
                _ => panic!("missing spec"),
            })
            .collect();
        assert_eq!(masks, vec![vec![], vec![0, 1], vec![0, 1, 2, 3]]);
    }

    #[test]
    fn broken_sun_g4_no_pm_contains_opposite_pair() {
        let masks: Vec<Vec<usize>> = enumerate_broken_suns(4, MatchingFilter::NoPerfectMatching)
            .map(|g| match g.meta.family {
                Some(FamilySpec::BrokenSun { pendants, .. }) => pendants,
                _ => panic!("missing spec"),
            })
            .collect();
        assert!(masks.contains(&vec![0, 2]));
        // Its maximum matching has size 2 < 3.
        let g = generate(&FamilySpec::BrokenSun {
            g: 4,
            pendants: vec![0, 2],
        })
        .unwrap();
        assert_eq!(maximum_matching(&g).size(), 2);
    }

    #[test]
    fn unicyclic_minimal_strata() {
        let only_c4: Vec<Graph> = enumerate_unicyclic(4, 4).collect();
        assert_eq!(only_c4.len(), 1);
        assert_eq!(only_c4[0].edge_count(), 4);

        let up_to_5: Vec<Graph> = enumerate_unicyclic(5, 4).collect();
        assert_eq!(up_to_5.len(), 2);
        assert_eq!(up_to_5[1].vertex_count(), 5);

        let g3: Vec<Graph> = enumerate_unicyclic(6, 3).collect();
        let sun3 = generate(&FamilySpec::Sun { g: 3 }).unwrap();
        assert!(g3.contains(&sun3));
    }

    #[test]
    fn broken_suns_coincide_with_small_tree_arrangements() {
        // Broken suns are exactly the arrangements with trees of order <= 2
        // and the two canonical forms agree vertex for vertex.
        for girth in 3..=5 {
            let from_masks: BTreeSet<Graph> =
                enumerate_broken_suns(girth, MatchingFilter::Any).collect();
            let from_trees: BTreeSet<Graph> = enumerate_unicyclic(2 * girth, girth)
                .filter(|g| {
                    g.unicyclic_decompose()
                        .map(|ts| ts.iter().all(|t| t.order() <= 2))
                        .unwrap_or(false)
                })
                .collect();
            assert_eq!(from_masks, from_trees, "girth {girth}");
        }
    }

    #[test]
    fn odd_tree_counts() {
        let sun3 = generate(&FamilySpec::Sun { g: 3 }).unwrap();
        assert_eq!(odd_tree_count(&sun3).unwrap(), 0);
        let c4 = generate(&FamilySpec::Cycle { g: 4 }).unwrap();
        assert_eq!(odd_tree_count(&c4).unwrap(), 4);
        let pendant_square = Graph::new(5, &[(0, 1), (1, 2), (2, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(odd_tree_count(&pendant_square).unwrap(), 3);
    }

    #[test]
    fn orbit_reps_of_symmetric_families() {
        // Every vertex of a cycle is equivalent.
        assert_eq!(vertex_orbit_reps(&FamilySpec::Cycle { g: 5 }), vec![0]);
        // A sun has one cycle orbit and one pendant orbit.
        assert_eq!(vertex_orbit_reps(&FamilySpec::Sun { g: 4 }), vec![0, 4]);
        // Pendants at 0 and 2 on C4: cycle vertices split, pendants merge.
        let reps = vertex_orbit_reps(&FamilySpec::BrokenSun {
            g: 4,
            pendants: vec![0, 2],
        });
        assert_eq!(reps, vec![0, 1, 4]);
    }

    #[test]
    fn join_spec_generates_bicyclic() {
        let spec = FamilySpec::Join {
            first: Box::new(FamilySpec::Sun { g: 3 }),
            second: Box::new(FamilySpec::Sun { g: 3 }),
            u: 3,
            v: 3,
        };
        let g = generate(&spec).unwrap();
        assert_eq!(g.vertex_count(), 12);
        assert_eq!(g.edge_count(), 13);
        assert!(g.meta.join.is_some());
    }
}
