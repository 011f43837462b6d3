//! Constructive eigenvalue-2 eigenvector builders.
//!
//! Every constructor verifies its output exactly against the vertex-wise
//! eigen-valuation before returning; no certificate leaves this module
//! unchecked. Construction failures that the underlying theorems rule out
//! surface as loud `ConstructionExhausted` / `PatternFailed` /
//! `CaseExhausted` values so a harness can treat them as potential
//! falsifications, never as silently patched cases.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use alloc::{format, vec};
use core::fmt;

use num_traits::Zero;

use crate::exact::{is_plus_minus_single, normalize_first_nonzero, Int, Rat};
use crate::families::is_broken_sun;
use crate::graph::{Graph, GraphClass};
use crate::matching::{maximum_matching, Matching};
use crate::spectra::{integral_multiplicity, verify_eigenpair, SpectraError};

/// Which construction produced a certificate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    TreeMatching,
    BrokenSunSearch,
    PendantPairRecursion,
    Glue,
    ZeroPattern,
    Nullspace,
}

impl Provenance {
    pub fn as_str(&self) -> &'static str {
        match self {
            Provenance::TreeMatching => "TreeMatching",
            Provenance::BrokenSunSearch => "BrokenSunSearch",
            Provenance::PendantPairRecursion => "PendantPairRecursion",
            Provenance::Glue => "Glue",
            Provenance::ZeroPattern => "ZeroPattern",
            Provenance::Nullspace => "Nullspace",
        }
    }
}

/// Shape of the certificate's value set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ValueAlphabet {
    /// Every entry is `r` or `-r` for one positive `r` (normalized to 1).
    PlusMinusR,
    /// Every entry lies in `{-1, 0, 1}`.
    ZeroOnePattern,
    General,
}

impl ValueAlphabet {
    pub fn as_str(&self) -> &'static str {
        match self {
            ValueAlphabet::PlusMinusR => "PlusMinusR",
            ValueAlphabet::ZeroOnePattern => "ZeroOnePattern",
            ValueAlphabet::General => "General",
        }
    }

    fn of(vector: &[Rat]) -> ValueAlphabet {
        if is_plus_minus_single(vector) {
            return ValueAlphabet::PlusMinusR;
        }
        let one = Rat::from(Int::from(1));
        if vector
            .iter()
            .all(|x| x.is_zero() || *x == one || *x == -one.clone())
        {
            return ValueAlphabet::ZeroOnePattern;
        }
        ValueAlphabet::General
    }
}

/// An exactly verified eigenvector for eigenvalue 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigenCertificate {
    pub graph_id: String,
    pub eigenvalue: i64,
    pub vector: Vec<Rat>,
    pub provenance: Provenance,
    pub alphabet: ValueAlphabet,
}

impl EigenCertificate {
    fn build(g: &Graph, vector: Vec<Rat>, provenance: Provenance) -> EigenCertificate {
        EigenCertificate {
            graph_id: g.id(),
            eigenvalue: 2,
            alphabet: ValueAlphabet::of(&vector),
            vector,
            provenance,
        }
    }
}

/// Re-checks a certificate against a graph, exactly.
pub fn verify_certificate(g: &Graph, cert: &EigenCertificate) -> bool {
    verify_eigenpair(g, cert.eigenvalue, &cert.vector).unwrap_or(false)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CertError {
    NotTree,
    NoPerfectMatching,
    PreconditionFailed(String),
    /// The guaranteed search ran out of candidates; a potential theorem
    /// falsification, reported loudly.
    ConstructionExhausted(String),
    /// Gluing formula inapplicable: value 0 at the second attachment vertex
    /// but nonzero at the first.
    GlueUndefined,
    PatternFailed(String),
    CaseExhausted(String),
    Spectra(SpectraError),
}

impl fmt::Display for CertError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CertError::NotTree => write!(f, "graph is not a tree"),
            CertError::NoPerfectMatching => write!(f, "matching is not a perfect matching"),
            CertError::PreconditionFailed(r) => write!(f, "precondition failed: {r}"),
            CertError::ConstructionExhausted(r) => write!(f, "construction exhausted: {r}"),
            CertError::GlueUndefined => write!(f, "glue undefined: zero value at attachment"),
            CertError::PatternFailed(r) => write!(f, "pattern failed: {r}"),
            CertError::CaseExhausted(r) => write!(f, "case analysis exhausted: {r}"),
            CertError::Spectra(e) => write!(f, "{e}"),
        }
    }
}

impl From<SpectraError> for CertError {
    fn from(e: SpectraError) -> Self {
        CertError::Spectra(e)
    }
}

fn rat(x: i64) -> Rat {
    Rat::from(Int::from(x))
}

/// Eigenvector of a tree with a perfect matching: entries are all `1` or
/// `-1`, flipping across matched edges and constant across unmatched ones.
pub fn tree_pm_eigenvector(t: &Graph, m: &Matching) -> Result<EigenCertificate, CertError> {
    match t.classify() {
        Ok(GraphClass::Tree) => {}
        _ => return Err(CertError::NotTree),
    }
    let valid = Matching::from_edges(t, m.edges());
    if valid.as_ref() != Some(m) || !m.perfect() {
        return Err(CertError::NoPerfectMatching);
    }
    let n = t.vertex_count();
    let mut values: Vec<Option<Rat>> = vec![None; n];
    values[0] = Some(rat(1));
    let mut stack = vec![0usize];
    while let Some(p) = stack.pop() {
        let xp = values[p].clone().expect("visited");
        for &c in t.neighbors(p) {
            if values[c].is_some() {
                continue;
            }
            values[c] = Some(if m.contains((p, c)) {
                -xp.clone()
            } else {
                xp.clone()
            });
            stack.push(c);
        }
    }
    let vector: Vec<Rat> = values.into_iter().map(|v| v.expect("tree connected")).collect();
    if !verify_eigenpair(t, 2, &vector)? {
        return Err(CertError::ConstructionExhausted(
            "matching-rule vector failed the eigen-valuation on a tree with perfect matching"
                .into(),
        ));
    }
    Ok(EigenCertificate::build(t, vector, Provenance::TreeMatching))
}

/// Eigenvector of a broken sun with a perfect matching and eigenvalue 2:
/// delete a non-matching cycle edge, build the tree vector, keep the first
/// candidate that still verifies on the full graph.
pub fn broken_sun_eigenvector(g: &Graph) -> Result<EigenCertificate, CertError> {
    if !is_broken_sun(g) {
        return Err(CertError::PreconditionFailed("not a broken sun".into()));
    }
    let m = maximum_matching(g);
    if !m.perfect() {
        return Err(CertError::PreconditionFailed("no perfect matching".into()));
    }
    if integral_multiplicity(g, 2) == 0 {
        return Err(CertError::PreconditionFailed(
            "eigenvalue 2 has multiplicity 0".into(),
        ));
    }
    let cycle = match g.classify() {
        Ok(GraphClass::Unicyclic { cycle }) => cycle,
        _ => return Err(CertError::PreconditionFailed("not unicyclic".into())),
    };
    for i in 0..cycle.len() {
        let a = cycle[i];
        let b = cycle[(i + 1) % cycle.len()];
        let e = (a.min(b), a.max(b));
        if m.contains(e) {
            continue;
        }
        let tree = g.delete_edge(e);
        let mt = Matching::from_edges(&tree, m.edges())
            .expect("perfect matching avoids the deleted edge");
        let cert = tree_pm_eigenvector(&tree, &mt)?;
        if cert.vector[e.0] == cert.vector[e.1] {
            let mut vector = cert.vector;
            normalize_first_nonzero(&mut vector);
            if !verify_eigenpair(g, 2, &vector)? {
                continue;
            }
            return Ok(EigenCertificate::build(
                g,
                vector,
                Provenance::BrokenSunSearch,
            ));
        }
    }
    Err(CertError::ConstructionExhausted(format!(
        "no non-matching cycle edge of {} yields a verifying tree vector",
        g.id()
    )))
}

/// One pendant-pair strip: the deepest tree vertex `u`, its degree-2
/// neighbor `v`, and `v`'s other neighbor `w`, in original vertex labels.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Strip {
    pub u: usize,
    pub v: usize,
    pub w: usize,
}

/// Result of reducing a unicyclic graph to a broken sun by repeatedly
/// stripping deepest pendant pairs.
#[derive(Debug, Clone)]
pub struct StripDecomposition {
    /// Strips in removal order, original labels.
    pub strips: Vec<Strip>,
    /// The remaining broken sun, compacted labels.
    pub base: Graph,
    /// Map from base vertex index to original vertex index.
    pub base_orig: Vec<usize>,
}

/// Deterministic pendant-pair strip sequence: while some attached tree has
/// order at least 3, take the tree with the smallest root, its
/// smallest-index deepest vertex `u`, and remove `{u, v}`.
pub fn pendant_pair_strips(g: &Graph) -> Result<StripDecomposition, CertError> {
    let mut cur = g.clone();
    let mut orig: Vec<usize> = (0..g.vertex_count()).collect();
    let mut strips = Vec::new();
    loop {
        let trees = cur
            .unicyclic_decompose()
            .map_err(|e| CertError::PreconditionFailed(format!("{e}")))?;
        let Some(tree) = trees
            .iter()
            .filter(|t| t.order() >= 3)
            .min_by_key(|t| t.root)
        else {
            break;
        };
        // Depths from the root inside the tree.
        let inside: BTreeSet<usize> = tree.vertices.iter().copied().collect();
        let mut depth = vec![usize::MAX; cur.vertex_count()];
        depth[tree.root] = 0;
        let mut queue = vec![tree.root];
        let mut head = 0;
        while head < queue.len() {
            let p = queue[head];
            head += 1;
            for &c in cur.neighbors(p) {
                if inside.contains(&c) && depth[c] == usize::MAX {
                    depth[c] = depth[p] + 1;
                    queue.push(c);
                }
            }
        }
        let max_depth = tree
            .vertices
            .iter()
            .map(|&v| depth[v])
            .max()
            .expect("nonempty tree");
        let u = *tree
            .vertices
            .iter()
            .filter(|&&v| depth[v] == max_depth)
            .min()
            .expect("some vertex at max depth");
        if cur.degree(u) != 1 {
            return Err(CertError::PreconditionFailed(format!(
                "deepest tree vertex {} is not pendant",
                orig[u]
            )));
        }
        let v = cur.neighbors(u)[0];
        if cur.degree(v) != 2 {
            return Err(CertError::PreconditionFailed(format!(
                "support vertex {} does not have degree 2",
                orig[v]
            )));
        }
        let w = *cur
            .neighbors(v)
            .iter()
            .find(|&&x| x != u)
            .expect("degree 2");
        strips.push(Strip {
            u: orig[u],
            v: orig[v],
            w: orig[w],
        });
        let remove: BTreeSet<usize> = [u, v].into_iter().collect();
        let (next, map) = cur.remove_vertices(&remove);
        let mut next_orig = vec![0usize; next.vertex_count()];
        for (old, slot) in map.iter().enumerate() {
            if let Some(new) = slot {
                next_orig[*new] = orig[old];
            }
        }
        cur = next;
        orig = next_orig;
    }
    Ok(StripDecomposition {
        strips,
        base: cur,
        base_orig: orig,
    })
}

/// Eigenvector of a unicyclic graph with a perfect matching and eigenvalue
/// 2: strip deepest pendant pairs down to a broken sun, solve there, then
/// extend each strip with `value(v) = value(w)`, `value(u) = -value(w)`.
pub fn unicyclic_eigenvector(g: &Graph) -> Result<EigenCertificate, CertError> {
    if !matches!(g.classify(), Ok(GraphClass::Unicyclic { .. })) {
        return Err(CertError::PreconditionFailed("not unicyclic".into()));
    }
    if !maximum_matching(g).perfect() {
        return Err(CertError::PreconditionFailed("no perfect matching".into()));
    }
    if integral_multiplicity(g, 2) == 0 {
        return Err(CertError::PreconditionFailed(
            "eigenvalue 2 has multiplicity 0".into(),
        ));
    }
    let decomp = pendant_pair_strips(g)?;
    let base_cert = match broken_sun_eigenvector(&decomp.base) {
        Ok(c) => c,
        Err(CertError::PreconditionFailed(r)) => {
            // The strips are supposed to preserve both the perfect matching
            // and the multiplicity; a base failure would falsify that.
            return Err(CertError::ConstructionExhausted(format!(
                "stripped base lost a precondition: {r}"
            )));
        }
        Err(e) => return Err(e),
    };
    if decomp.strips.is_empty() {
        return Ok(base_cert);
    }
    let mut values: Vec<Option<Rat>> = vec![None; g.vertex_count()];
    for (i, &o) in decomp.base_orig.iter().enumerate() {
        values[o] = Some(base_cert.vector[i].clone());
    }
    for strip in decomp.strips.iter().rev() {
        let w = values[strip.w]
            .clone()
            .expect("strip target assigned before replay");
        values[strip.v] = Some(w.clone());
        values[strip.u] = Some(-w);
    }
    let mut vector: Vec<Rat> = values
        .into_iter()
        .map(|v| v.expect("all vertices assigned"))
        .collect();
    normalize_first_nonzero(&mut vector);
    if !verify_eigenpair(g, 2, &vector)? {
        return Err(CertError::ConstructionExhausted(format!(
            "pendant-pair extension failed the eigen-valuation on {}",
            g.id()
        )));
    }
    Ok(EigenCertificate::build(
        g,
        vector,
        Provenance::PendantPairRecursion,
    ))
}

/// Glues eigenvectors across a one-edge connection: with `x` on `g1` and
/// `y` on `g2`, the joined graph carries `(X, (x(u)/y(v)) Y)` when
/// `y(v) != 0`, and `(X, 0)` when both attachment values vanish.
pub fn glue_eigenvectors(
    g1: &Graph,
    x: &EigenCertificate,
    g2: &Graph,
    y: &EigenCertificate,
    u: usize,
    v: usize,
) -> Result<EigenCertificate, CertError> {
    if u >= g1.vertex_count() || v >= g2.vertex_count() {
        return Err(CertError::PreconditionFailed(
            "attachment vertex out of range".into(),
        ));
    }
    if !verify_certificate(g1, x) || !verify_certificate(g2, y) {
        return Err(CertError::PreconditionFailed(
            "input certificate does not verify".into(),
        ));
    }
    let joined = g1
        .one_edge_connect(g2, u, v)
        .map_err(|e| CertError::PreconditionFailed(format!("{e}")))?;
    let yv = &y.vector[v];
    let xu = &x.vector[u];
    let mut vector = x.vector.clone();
    if !yv.is_zero() {
        let ratio = xu.clone() / yv.clone();
        vector.extend(y.vector.iter().map(|t| ratio.clone() * t.clone()));
    } else if xu.is_zero() {
        vector.extend(core::iter::repeat(Rat::zero()).take(g2.vertex_count()));
    } else {
        return Err(CertError::GlueUndefined);
    }
    if !verify_eigenpair(&joined, 2, &vector)? {
        return Err(CertError::ConstructionExhausted(format!(
            "glued vector failed the eigen-valuation on {}",
            joined.id()
        )));
    }
    Ok(EigenCertificate::build(&joined, vector, Provenance::Glue))
}

/// Degree-3 cycle positions and the (cyclic) gaps of degree-2 vertices
/// between consecutive ones.
fn pattern_gaps(g: &Graph, cycle: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let marked: Vec<usize> = (0..cycle.len())
        .filter(|&i| g.degree(cycle[i]) == 3)
        .collect();
    let gaps = match marked.len() {
        0 => Vec::new(),
        1 => vec![cycle.len() - 1],
        _ => marked
            .iter()
            .enumerate()
            .map(|(idx, &p)| {
                let q = marked[(idx + 1) % marked.len()];
                (q + cycle.len() - p - 1) % cycle.len()
            })
            .collect(),
    };
    (marked, gaps)
}

/// Zero-pattern eigenvector for a broken sun without a perfect matching:
/// girth divisible by 4 and an odd number of degree-2 vertices between
/// consecutive degree-3 cycle vertices; values cycle through `0,1,0,-1`
/// starting at a degree-3 vertex and pendants take the negative of their
/// neighbor.
pub fn pattern_eigenvector_no_pm(g: &Graph) -> Result<EigenCertificate, CertError> {
    if !is_broken_sun(g) {
        return Err(CertError::PreconditionFailed("not a broken sun".into()));
    }
    let cycle = match g.classify() {
        Ok(GraphClass::Unicyclic { cycle }) => cycle,
        _ => return Err(CertError::PreconditionFailed("not unicyclic".into())),
    };
    if maximum_matching(g).perfect() {
        return Err(CertError::PreconditionFailed(
            "graph has a perfect matching".into(),
        ));
    }
    if cycle.len() % 4 != 0 {
        return Err(CertError::PreconditionFailed(format!(
            "girth {} is not divisible by 4",
            cycle.len()
        )));
    }
    let (marked, gaps) = pattern_gaps(g, &cycle);
    if marked.is_empty() {
        return Err(CertError::PreconditionFailed(
            "no degree-3 cycle vertex to start the pattern".into(),
        ));
    }
    if let Some(even) = gaps.iter().find(|&&gap| gap % 2 == 0) {
        return Err(CertError::PreconditionFailed(format!(
            "even gap of {even} degree-2 vertices between degree-3 vertices"
        )));
    }
    let start = marked[0];
    let pattern = [0i64, 1, 0, -1];
    let mut vector = vec![Rat::zero(); g.vertex_count()];
    for off in 0..cycle.len() {
        let vtx = cycle[(start + off) % cycle.len()];
        vector[vtx] = rat(pattern[off % 4]);
    }
    for v in 0..g.vertex_count() {
        if g.degree(v) == 1 {
            let nbr = g.neighbors(v)[0];
            vector[v] = -vector[nbr].clone();
        }
    }
    normalize_first_nonzero(&mut vector);
    if !verify_eigenpair(g, 2, &vector)? {
        return Err(CertError::PatternFailed(format!(
            "pattern vector failed the eigen-valuation on {}",
            g.id()
        )));
    }
    Ok(EigenCertificate::build(g, vector, Provenance::ZeroPattern))
}

/// True iff the graph satisfies the zero-pattern preconditions: broken sun,
/// no perfect matching, girth divisible by 4, all gaps odd.
pub fn pattern_preconditions_hold(g: &Graph) -> bool {
    if !is_broken_sun(g) || maximum_matching(g).perfect() {
        return false;
    }
    let Ok(GraphClass::Unicyclic { cycle }) = g.classify() else {
        return false;
    };
    if cycle.len() % 4 != 0 {
        return false;
    }
    let (marked, gaps) = pattern_gaps(g, &cycle);
    !marked.is_empty() && gaps.iter().all(|gap| gap % 2 == 1)
}

/// Eigenvector for the one-edge connection of a matching-free patterned
/// broken sun with either another such broken sun or a unicyclic graph
/// that has a perfect matching and eigenvalue 2. The composed vector is
/// chosen by case analysis on the attachment degrees and values.
pub fn bicyclic_no_pm_eigenvector(
    g1: &Graph,
    g2: &Graph,
    u: usize,
    v: usize,
) -> Result<EigenCertificate, CertError> {
    if u >= g1.vertex_count() || v >= g2.vertex_count() {
        return Err(CertError::PreconditionFailed(
            "attachment vertex out of range".into(),
        ));
    }
    let x = pattern_eigenvector_no_pm(g1)?;
    let (y, mixed) = if pattern_preconditions_hold(g2) {
        (pattern_eigenvector_no_pm(g2)?, false)
    } else if matches!(g2.classify(), Ok(GraphClass::Unicyclic { .. }))
        && maximum_matching(g2).perfect()
        && integral_multiplicity(g2, 2) >= 1
    {
        (unicyclic_eigenvector(g2)?, true)
    } else {
        return Err(CertError::PreconditionFailed(
            "second graph neither pattern-eligible nor a matched unicyclic graph \
             with eigenvalue 2"
                .into(),
        ));
    };
    let joined = g1
        .one_edge_connect(g2, u, v)
        .map_err(|e| CertError::PreconditionFailed(format!("{e}")))?;
    let xu = x.vector[u].clone();
    let yv = y.vector[v].clone();
    let du = g1.degree(u);
    let dv = g2.degree(v);

    enum Pick {
        XY,
        XNegY,
        XZero,
        ZeroY,
    }
    let pick = if mixed {
        // Second side carries a +/-1 vector, never zero at v.
        if xu.is_zero() {
            Pick::XZero
        } else if xu == yv {
            Pick::XY
        } else {
            Pick::XNegY
        }
    } else if du != 2 && dv != 2 {
        Pick::XY
    } else if du != 2 {
        Pick::XZero
    } else if dv != 2 {
        Pick::ZeroY
    } else if xu == yv {
        Pick::XY
    } else if xu.is_zero() {
        Pick::XZero
    } else if yv.is_zero() {
        Pick::ZeroY
    } else {
        Pick::XNegY
    };

    let vector: Vec<Rat> = match pick {
        Pick::XY => x.vector.iter().cloned().chain(y.vector.iter().cloned()).collect(),
        Pick::XNegY => x
            .vector
            .iter()
            .cloned()
            .chain(y.vector.iter().map(|t| -t.clone()))
            .collect(),
        Pick::XZero => x
            .vector
            .iter()
            .cloned()
            .chain(core::iter::repeat(Rat::zero()).take(g2.vertex_count()))
            .collect(),
        Pick::ZeroY => core::iter::repeat(Rat::zero())
            .take(g1.vertex_count())
            .chain(y.vector.iter().cloned())
            .collect(),
    };
    if !verify_eigenpair(&joined, 2, &vector)? {
        return Err(CertError::CaseExhausted(format!(
            "case-analysis vector failed the eigen-valuation on {}",
            joined.id()
        )));
    }
    Ok(EigenCertificate::build(
        &joined,
        vector,
        Provenance::ZeroPattern,
    ))
}

/// Fallback certificate from the exact nullspace, when no structural
/// construction applies. Carries `Nullspace` provenance, not a theorem
/// claim.
pub fn nullspace_certificate(g: &Graph) -> Result<EigenCertificate, CertError> {
    let basis = crate::spectra::nullspace_2(g);
    let Some(vector) = basis.into_iter().next() else {
        return Err(CertError::PreconditionFailed(
            "eigenvalue 2 has multiplicity 0".into(),
        ));
    };
    if !verify_eigenpair(g, 2, &vector)? {
        return Err(CertError::ConstructionExhausted(
            "nullspace vector failed the eigen-valuation".into(),
        ));
    }
    Ok(EigenCertificate::build(g, vector, Provenance::Nullspace))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{generate, FamilySpec};
    use crate::spectra::rat_vec;

    fn path(n: usize) -> Graph {
        let edges: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
        Graph::new(n, &edges).unwrap()
    }

    fn sun(g: usize) -> Graph {
        generate(&FamilySpec::Sun { g }).unwrap()
    }

    fn broken_sun(g: usize, pendants: &[usize]) -> Graph {
        generate(&FamilySpec::BrokenSun {
            g,
            pendants: pendants.to_vec(),
        })
        .unwrap()
    }

    #[test]
    fn tree_vector_on_single_edge() {
        let s2 = Graph::new(2, &[(0, 1)]).unwrap();
        let m = maximum_matching(&s2);
        let cert = tree_pm_eigenvector(&s2, &m).unwrap();
        assert_eq!(cert.vector, rat_vec(&[1, -1]));
        assert_eq!(cert.alphabet, ValueAlphabet::PlusMinusR);
    }

    #[test]
    fn tree_vector_on_paths() {
        let p4 = path(4);
        let cert = tree_pm_eigenvector(&p4, &maximum_matching(&p4)).unwrap();
        assert_eq!(cert.vector, rat_vec(&[1, -1, -1, 1]));

        let p6 = path(6);
        let cert = tree_pm_eigenvector(&p6, &maximum_matching(&p6)).unwrap();
        assert_eq!(cert.vector, rat_vec(&[1, -1, -1, 1, 1, -1]));
    }

    #[test]
    fn tree_vector_rejects_bad_inputs() {
        let c3 = generate(&FamilySpec::Cycle { g: 3 }).unwrap();
        let m = maximum_matching(&c3);
        assert_eq!(tree_pm_eigenvector(&c3, &m).unwrap_err(), CertError::NotTree);

        let p3 = path(3);
        let m = maximum_matching(&p3);
        assert_eq!(
            tree_pm_eigenvector(&p3, &m).unwrap_err(),
            CertError::NoPerfectMatching
        );
    }

    #[test]
    fn broken_sun_vector_on_suns() {
        let cert = broken_sun_eigenvector(&sun(3)).unwrap();
        assert_eq!(cert.vector, rat_vec(&[1, 1, 1, -1, -1, -1]));
        assert_eq!(cert.provenance, Provenance::BrokenSunSearch);

        let cert4 = broken_sun_eigenvector(&sun(4)).unwrap();
        assert_eq!(cert4.alphabet, ValueAlphabet::PlusMinusR);
        assert!(verify_certificate(&sun(4), &cert4));
    }

    #[test]
    fn broken_sun_vector_on_bare_cycle() {
        let c4 = generate(&FamilySpec::Cycle { g: 4 }).unwrap();
        let cert = broken_sun_eigenvector(&c4).unwrap();
        assert_eq!(cert.vector, rat_vec(&[1, -1, -1, 1]));
    }

    #[test]
    fn broken_sun_vector_rejects_mult_zero() {
        // Pendants at 0,1 on C4: perfect matching but multiplicity 0.
        let g = broken_sun(4, &[0, 1]);
        assert!(matches!(
            broken_sun_eigenvector(&g),
            Err(CertError::PreconditionFailed(_))
        ));
    }

    #[test]
    fn strips_on_attached_path() {
        // C4 with a 3-vertex path attached at cycle vertex 0.
        let spec = FamilySpec::UnicyclicTrees {
            g: 4,
            trees: vec![vec![0, 0, 1], vec![0], vec![0], vec![0]],
        };
        let g = generate(&spec).unwrap();
        let decomp = pendant_pair_strips(&g).unwrap();
        assert_eq!(decomp.strips.len(), 1);
        assert_eq!(decomp.strips[0], Strip { u: 5, v: 4, w: 0 });
        assert_eq!(decomp.base.vertex_count(), 4);
    }

    #[test]
    fn unicyclic_vector_after_one_strip() {
        let spec = FamilySpec::UnicyclicTrees {
            g: 4,
            trees: vec![vec![0, 0, 1], vec![0], vec![0], vec![0]],
        };
        let g = generate(&spec).unwrap();
        let cert = unicyclic_eigenvector(&g).unwrap();
        assert_eq!(cert.provenance, Provenance::PendantPairRecursion);
        assert_eq!(cert.alphabet, ValueAlphabet::PlusMinusR);
        assert!(verify_certificate(&g, &cert));
    }

    #[test]
    fn unicyclic_vector_with_two_deep_trees() {
        let spec = FamilySpec::UnicyclicTrees {
            g: 4,
            trees: vec![vec![0, 0, 1], vec![0], vec![0, 0, 1], vec![0]],
        };
        let g = generate(&spec).unwrap();
        let cert = unicyclic_eigenvector(&g).unwrap();
        assert!(verify_certificate(&g, &cert));
    }

    #[test]
    fn unicyclic_delegates_on_broken_suns() {
        let cert = unicyclic_eigenvector(&sun(3)).unwrap();
        assert_eq!(cert.provenance, Provenance::BrokenSunSearch);
    }

    #[test]
    fn glue_suns_at_pendants() {
        let s3 = sun(3);
        let x = broken_sun_eigenvector(&s3).unwrap();
        let glued = glue_eigenvectors(&s3, &x, &s3, &x, 3, 3).unwrap();
        assert_eq!(glued.provenance, Provenance::Glue);
        assert_eq!(glued.alphabet, ValueAlphabet::PlusMinusR);
        // First half is X entrywise.
        assert_eq!(&glued.vector[..6], &x.vector[..]);
    }

    #[test]
    fn glue_is_scale_invariant() {
        let s3 = sun(3);
        let x = broken_sun_eigenvector(&s3).unwrap();
        let mut scaled = x.clone();
        for t in scaled.vector.iter_mut() {
            *t = t.clone() * rat(5);
        }
        let a = glue_eigenvectors(&s3, &x, &s3, &x, 3, 4).unwrap();
        let b = glue_eigenvectors(&s3, &x, &s3, &scaled, 3, 4).unwrap();
        assert_eq!(a.vector, b.vector);
    }

    #[test]
    fn glue_zero_zero_case() {
        let g = broken_sun(4, &[0, 2]);
        let x = pattern_eigenvector_no_pm(&g).unwrap();
        // Value at vertex 0 is 0 on both sides.
        let glued = glue_eigenvectors(&g, &x, &g, &x, 0, 0).unwrap();
        assert!(glued.vector[6..].iter().all(|t| t.is_zero()));
    }

    #[test]
    fn glue_undefined_case() {
        let s3 = sun(3);
        let x = broken_sun_eigenvector(&s3).unwrap();
        let g = broken_sun(4, &[0, 2]);
        let y = pattern_eigenvector_no_pm(&g).unwrap();
        // y(0) = 0 but x(0) = 1.
        assert_eq!(
            glue_eigenvectors(&s3, &x, &g, &y, 0, 0).unwrap_err(),
            CertError::GlueUndefined
        );
    }

    #[test]
    fn pattern_on_small_broken_suns() {
        let cert = pattern_eigenvector_no_pm(&broken_sun(4, &[0, 2])).unwrap();
        assert_eq!(cert.vector, rat_vec(&[0, 1, 0, -1, 0, 0]));
        assert_eq!(cert.alphabet, ValueAlphabet::ZeroOnePattern);

        let cert8 = pattern_eigenvector_no_pm(&broken_sun(8, &[0, 4])).unwrap();
        assert_eq!(cert8.vector, rat_vec(&[0, 1, 0, -1, 0, 1, 0, -1, 0, 0]));
    }

    #[test]
    fn pattern_precondition_failures() {
        // Even gap: pendants at 0 and 3 on C8 leave two degree-2 vertices
        // between them.
        assert!(matches!(
            pattern_eigenvector_no_pm(&broken_sun(8, &[0, 3])),
            Err(CertError::PreconditionFailed(_))
        ));
        // Girth not divisible by 4.
        assert!(matches!(
            pattern_eigenvector_no_pm(&broken_sun(6, &[0, 3])),
            Err(CertError::PreconditionFailed(_))
        ));
        // Perfect matching present.
        assert!(matches!(
            pattern_eigenvector_no_pm(&broken_sun(4, &[0, 1])),
            Err(CertError::PreconditionFailed(_))
        ));
    }

    #[test]
    fn pattern_succeeds_on_odd_gaps_with_close_pendants() {
        // Gaps of 1 and 5 degree-2 vertices: both odd, so the pattern
        // applies and verifies.
        let cert = pattern_eigenvector_no_pm(&broken_sun(8, &[0, 2])).unwrap();
        assert!(verify_certificate(&broken_sun(8, &[0, 2]), &cert));
    }

    #[test]
    fn bicyclic_pattern_pair_pendant_to_pendant() {
        let g = broken_sun(4, &[0, 2]);
        // Vertices 4 and 5 are pendants.
        let cert = bicyclic_no_pm_eigenvector(&g, &g, 4, 4).unwrap();
        let joined = g.one_edge_connect(&g, 4, 4).unwrap();
        assert!(verify_certificate(&joined, &cert));
        assert_eq!(cert.alphabet, ValueAlphabet::ZeroOnePattern);
    }

    #[test]
    fn bicyclic_pattern_pair_unequal_degree_two_values() {
        let g = broken_sun(4, &[0, 2]);
        // Pattern values: vertex 1 carries 1, vertex 3 carries -1.
        let cert = bicyclic_no_pm_eigenvector(&g, &g, 1, 3).unwrap();
        let joined = g.one_edge_connect(&g, 1, 3).unwrap();
        assert!(verify_certificate(&joined, &cert));
        // Chosen case is (X, -Y): second block at its vertex 3 carries 1.
        assert_eq!(cert.vector[6 + 3], rat(1));
    }

    #[test]
    fn bicyclic_mixed_pair_with_matched_side() {
        let g1 = broken_sun(4, &[0, 2]);
        let g2 = sun(3);
        for (u, v) in [(0usize, 0usize), (1, 0), (4, 3)] {
            let cert = bicyclic_no_pm_eigenvector(&g1, &g2, u, v).unwrap();
            let joined = g1.one_edge_connect(&g2, u, v).unwrap();
            assert!(verify_certificate(&joined, &cert), "join at ({u},{v})");
        }
    }

    #[test]
    fn nullspace_fallback() {
        let c4 = generate(&FamilySpec::Cycle { g: 4 }).unwrap();
        let cert = nullspace_certificate(&c4).unwrap();
        assert_eq!(cert.provenance, Provenance::Nullspace);
        assert!(verify_certificate(&c4, &cert));

        let c3 = generate(&FamilySpec::Cycle { g: 3 }).unwrap();
        assert!(matches!(
            nullspace_certificate(&c3),
            Err(CertError::PreconditionFailed(_))
        ));
    }
}
