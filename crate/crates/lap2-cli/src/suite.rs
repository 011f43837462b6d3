//! The exhaustive verification suite: enumerates desk-scale corpora for
//! every check, fans the instances out across workers, and folds the
//! verdicts into a deterministic report.
//!
//! Instance order is fixed (corpus order, then join vertices), workers pick
//! instances by index stride, and aggregation merges by index, so the
//! resulting report is byte-identical across runs and thread counts.

use std::collections::BTreeMap;
use std::time::Instant;

use lap2_core::checks::{self, CheckResult, TheoremId, Verdict};
use lap2_core::families::{
    self, enumerate_unicyclic, generate, vertex_orbit_reps, FamilySpec, MatchingFilter,
    ShapeTable,
};
use lap2_core::graph::Graph;
use lap2_core::matching::maximum_matching;
use lap2_core::spectra::{integral_multiplicity, spanning_tree_count};

use crate::json::{ReportJson, SummaryCounts};

/// Deterministic sample size kept per (theorem, verdict) in the report;
/// failures are always all kept.
pub const SAMPLES_PER_VERDICT: usize = 3;

pub const SUITE_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConfigInvalid(pub String);

impl std::fmt::Display for ConfigInvalid {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "invalid config: {}", self.0)
    }
}

impl std::error::Error for ConfigInvalid {}

#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub girth_min: usize,
    pub girth_max: usize,
    /// Vertex cap for the unicyclic corpus.
    pub unicyclic_nmax: usize,
    /// Cap on the joined order of bicyclic instances.
    pub bicyclic_sum_max: usize,
    /// Broken suns are enumerated up to this girth (certificate checks).
    pub broken_sun_girth_max: usize,
    /// Vertex cap for the exhaustive spanning-forest identity.
    pub forest_oracle_nmax: usize,
    /// Vertex cap for the per-edge interlacing sweep.
    pub interlacing_nmax: usize,
    /// Vertex cap for the eigen-valuation consistency sweep.
    pub eigen_valuation_nmax: usize,
    /// Cap on the matched operand in mixed compositions.
    pub mixed_pm_nmax: usize,
    /// Optional cap on the number of graph pairs per pair-based check.
    pub pair_budget: Option<usize>,
    /// Restrict to these theorems; `None` runs everything.
    pub theorems: Option<Vec<TheoremId>>,
    pub threads: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            girth_min: 3,
            girth_max: 8,
            unicyclic_nmax: 14,
            bicyclic_sum_max: 16,
            broken_sun_girth_max: 12,
            forest_oracle_nmax: 9,
            interlacing_nmax: 10,
            eigen_valuation_nmax: 8,
            mixed_pm_nmax: 10,
            pair_budget: None,
            theorems: None,
            threads: default_threads(),
        }
    }
}

/// Worker count: `LAP2_THREADS` when set, otherwise the available
/// parallelism.
pub fn default_threads() -> usize {
    if let Ok(v) = std::env::var("LAP2_THREADS") {
        if let Ok(n) = v.trim().parse::<usize>() {
            if n >= 1 {
                return n;
            }
        }
    }
    std::thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1)
}

impl SuiteConfig {
    pub fn validate(&self) -> Result<(), ConfigInvalid> {
        if self.girth_min < 3 {
            return Err(ConfigInvalid("girth_min must be at least 3".into()));
        }
        if self.girth_max < self.girth_min {
            return Err(ConfigInvalid("girth_max below girth_min".into()));
        }
        if self.unicyclic_nmax < self.girth_min {
            return Err(ConfigInvalid(
                "unicyclic_nmax below the smallest girth".into(),
            ));
        }
        if self.bicyclic_sum_max < 2 * self.girth_min {
            return Err(ConfigInvalid(
                "bicyclic_sum_max cannot hold two cycles".into(),
            ));
        }
        if self.broken_sun_girth_max < self.girth_min || self.broken_sun_girth_max > 60 {
            return Err(ConfigInvalid("broken_sun_girth_max out of range".into()));
        }
        if self.forest_oracle_nmax < 2 {
            return Err(ConfigInvalid("forest_oracle_nmax too small".into()));
        }
        if self.threads == 0 {
            return Err(ConfigInvalid("threads must be positive".into()));
        }
        if let Some(0) = self.pair_budget {
            return Err(ConfigInvalid("pair_budget must be positive".into()));
        }
        Ok(())
    }

    fn wants(&self, t: TheoremId) -> bool {
        match &self.theorems {
            None => true,
            Some(list) => list.contains(&t),
        }
    }

    /// Serialized form for reports. Worker count is a runtime knob, not
    /// part of the semantic configuration, so it is omitted and reports
    /// stay byte-identical across thread counts.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "girth_min": self.girth_min,
            "girth_max": self.girth_max,
            "unicyclic_nmax": self.unicyclic_nmax,
            "bicyclic_sum_max": self.bicyclic_sum_max,
            "broken_sun_girth_max": self.broken_sun_girth_max,
            "forest_oracle_nmax": self.forest_oracle_nmax,
            "interlacing_nmax": self.interlacing_nmax,
            "eigen_valuation_nmax": self.eigen_valuation_nmax,
            "mixed_pm_nmax": self.mixed_pm_nmax,
            "pair_budget": self.pair_budget,
            "theorems": self.theorems.as_ref().map(|ts| {
                ts.iter().map(|t| t.as_str()).collect::<Vec<_>>()
            }),
        })
    }
}

struct Entry {
    graph: Graph,
    n: usize,
    perfect: bool,
    has2: bool,
    orbits: Vec<usize>,
}

impl Entry {
    fn new(graph: Graph) -> Entry {
        let n = graph.vertex_count();
        let perfect = maximum_matching(&graph).perfect();
        let has2 = integral_multiplicity(&graph, 2) >= 1;
        let orbits = match &graph.meta.family {
            Some(spec) => vertex_orbit_reps(spec),
            None => (0..n).collect(),
        };
        Entry {
            graph,
            n,
            perfect,
            has2,
            orbits,
        }
    }
}

struct Corpus {
    unicyclic: Vec<Entry>,
    broken_suns: Vec<Entry>,
    /// Indices into `broken_suns` that satisfy the zero-pattern
    /// preconditions.
    pattern_eligible: Vec<usize>,
    trees: Vec<Graph>,
}

fn build_corpus(config: &SuiteConfig) -> Corpus {
    let mut unicyclic = Vec::new();
    for g in config.girth_min..=config.girth_max {
        for graph in enumerate_unicyclic(config.unicyclic_nmax, g) {
            unicyclic.push(Entry::new(graph));
        }
    }
    let mut broken_suns = Vec::new();
    for g in config.girth_min..=config.broken_sun_girth_max {
        for graph in families::enumerate_broken_suns(g, MatchingFilter::Any) {
            broken_suns.push(Entry::new(graph));
        }
    }
    let pattern_eligible = broken_suns
        .iter()
        .enumerate()
        .filter(|(_, e)| lap2_core::eigvec::pattern_preconditions_hold(&e.graph))
        .map(|(i, _)| i)
        .collect();
    // Free trees for the edge-addition remark: every rooted shape of even
    // order up to 8, realized as a graph.
    let table = ShapeTable::up_to(8);
    let mut trees = Vec::new();
    for order in [4usize, 6, 8] {
        for shape in table.of_order(order) {
            let parents = families::shape_to_parents(shape);
            let edges: Vec<(usize, usize)> = (1..order).map(|j| (j, parents[j])).collect();
            trees.push(Graph::new(order, &edges).expect("tree from parent array"));
        }
    }
    Corpus {
        unicyclic,
        broken_suns,
        pattern_eligible,
        trees,
    }
}

/// One schedulable unit. Pair tasks cover all join-vertex orbit choices for
/// one ordered pair of corpus graphs.
enum Task {
    WorkedExample,
    ForestGraph(usize),
    ForestPair(usize, usize),
    EigenValuation(usize),
    EigenValuationExample(u8),
    Interlacing(usize),
    InterlacingPair(usize, usize),
    Remark32(usize),
    BrokenSunCert(usize),
    BrokenSunContraction(usize),
    UnicyclicCert(usize),
    MultBounds(usize, usize),
    JoinPm(usize, usize),
    EdgeDeletion(usize, usize),
    TwoTree(usize, usize),
    PatternPair(usize, usize),
    MixedPair(usize, usize),
}

fn join_orbit_results<F>(a: &Entry, b: &Entry, same: bool, mut f: F) -> Vec<CheckResult>
where
    F: FnMut(&Graph, &Graph, usize, usize) -> Vec<CheckResult>,
{
    let mut out = Vec::new();
    for &u in &a.orbits {
        for &v in &b.orbits {
            if same && v < u {
                continue;
            }
            out.extend(f(&a.graph, &b.graph, u, v));
        }
    }
    out
}

fn run_task(task: &Task, corpus: &Corpus) -> Vec<CheckResult> {
    match task {
        Task::WorkedExample => vec![checks::check_worked_example()],
        Task::ForestGraph(i) => vec![checks::check_forest_coefficients(
            &corpus.unicyclic[*i].graph,
            usize::MAX,
        )],
        Task::ForestPair(i, j) => {
            let (a, b) = (&corpus.unicyclic[*i], &corpus.unicyclic[*j]);
            join_orbit_results(a, b, i == j, |g1, g2, u, v| {
                let joined = g1.one_edge_connect(g2, u, v).expect("orbit in range");
                vec![checks::check_forest_coefficients(&joined, usize::MAX)]
            })
        }
        Task::EigenValuation(i) => {
            vec![checks::check_eigen_valuation(&corpus.unicyclic[*i].graph)]
        }
        Task::EigenValuationExample(k) => {
            let (g1, g2, joined) = checks::worked_example();
            let g = match k {
                0 => g1,
                1 => g2,
                _ => joined,
            };
            vec![checks::check_eigen_valuation(&g)]
        }
        Task::Interlacing(i) => checks::check_interlacing(&corpus.unicyclic[*i].graph),
        Task::InterlacingPair(i, j) => {
            let (a, b) = (&corpus.unicyclic[*i], &corpus.unicyclic[*j]);
            join_orbit_results(a, b, i == j, |g1, g2, u, v| {
                let joined = g1.one_edge_connect(g2, u, v).expect("orbit in range");
                checks::check_interlacing(&joined)
            })
        }
        Task::Remark32(i) => {
            let t = &corpus.trees[*i];
            let m = maximum_matching(t);
            vec![checks::check_remark_3_2(t, &m)]
        }
        Task::BrokenSunCert(i) => {
            vec![checks::check_broken_sun_certificate(&corpus.broken_suns[*i].graph)]
        }
        Task::BrokenSunContraction(i) => {
            vec![checks::check_broken_sun_contraction(&corpus.broken_suns[*i].graph)]
        }
        Task::UnicyclicCert(i) => {
            vec![checks::check_unicyclic_certificate(&corpus.unicyclic[*i].graph)]
        }
        Task::MultBounds(i, j) => {
            let (a, b) = (&corpus.unicyclic[*i], &corpus.unicyclic[*j]);
            join_orbit_results(a, b, i == j, |g1, g2, u, v| {
                let joined = g1.one_edge_connect(g2, u, v).expect("orbit in range");
                checks::check_mult_bounds(&joined).unwrap_or_default()
            })
        }
        Task::JoinPm(i, j) => {
            let (a, b) = (&corpus.unicyclic[*i], &corpus.unicyclic[*j]);
            join_orbit_results(a, b, i == j, |g1, g2, u, v| {
                vec![checks::check_join_pm(g1, g2, u, v)]
            })
        }
        Task::EdgeDeletion(i, j) => {
            let (a, b) = (&corpus.unicyclic[*i], &corpus.unicyclic[*j]);
            join_orbit_results(a, b, i == j, |g1, g2, u, v| {
                checks::check_edge_deletion_thm(g1, g2, u, v)
            })
        }
        Task::TwoTree(i, j) => {
            let (a, b) = (&corpus.unicyclic[*i], &corpus.unicyclic[*j]);
            join_orbit_results(a, b, i == j, |g1, g2, u, v| {
                vec![checks::check_twotree_iff(g1, g2, u, v)]
            })
        }
        Task::PatternPair(i, j) => {
            let (a, b) = (&corpus.broken_suns[*i], &corpus.broken_suns[*j]);
            join_orbit_results(a, b, i == j, |g1, g2, u, v| {
                vec![checks::check_no_pm_theorems(g1, g2, u, v)]
            })
        }
        Task::MixedPair(i, j) => {
            let (a, b) = (&corpus.broken_suns[*i], &corpus.unicyclic[*j]);
            join_orbit_results(a, b, false, |g1, g2, u, v| {
                vec![checks::check_no_pm_theorems(g1, g2, u, v)]
            })
        }
    }
}

/// Ordered same-corpus pairs `(i, j)`, `i <= j`, with a sum cap and entry
/// filters, optionally truncated by the pair budget.
fn same_corpus_pairs<F>(
    entries: &[Entry],
    sum_max: usize,
    budget: Option<usize>,
    keep: F,
) -> Vec<(usize, usize)>
where
    F: Fn(&Entry) -> bool,
{
    let idx: Vec<usize> = (0..entries.len()).filter(|&i| keep(&entries[i])).collect();
    let mut out = Vec::new();
    'outer: for (a, &i) in idx.iter().enumerate() {
        for &j in &idx[a..] {
            if entries[i].n + entries[j].n > sum_max {
                continue;
            }
            out.push((i, j));
            if let Some(cap) = budget {
                if out.len() >= cap {
                    break 'outer;
                }
            }
        }
    }
    out
}

#[derive(Debug)]
pub struct SuiteOutcome {
    pub summary: BTreeMap<TheoremId, SummaryCounts>,
    /// All failures plus a deterministic sample of other verdicts.
    pub kept_results: Vec<CheckResult>,
    pub notes: Vec<String>,
    pub fail_count: usize,
    pub duration_secs: f64,
}

impl SuiteOutcome {
    pub fn passed(&self) -> bool {
        self.fail_count == 0
    }
}

struct Folded {
    counts: BTreeMap<(TheoremId, Verdict), usize>,
    /// (task index, result); failures all kept, others trimmed per key.
    kept: BTreeMap<(TheoremId, Verdict), Vec<(usize, CheckResult)>>,
}

impl Folded {
    fn new() -> Folded {
        Folded {
            counts: BTreeMap::new(),
            kept: BTreeMap::new(),
        }
    }

    fn add(&mut self, idx: usize, r: CheckResult) {
        let key = (r.theorem, r.verdict);
        *self.counts.entry(key).or_insert(0) += 1;
        let slot = self.kept.entry(key).or_default();
        if r.verdict == Verdict::Fail {
            slot.push((idx, r));
        } else {
            slot.push((idx, r));
            slot.sort_by_key(|(i, _)| *i);
            slot.truncate(SAMPLES_PER_VERDICT);
        }
    }

    fn merge(&mut self, other: Folded) {
        for (key, c) in other.counts {
            *self.counts.entry(key).or_insert(0) += c;
        }
        for (key, mut rs) in other.kept {
            let slot = self.kept.entry(key).or_default();
            slot.append(&mut rs);
            slot.sort_by_key(|(i, _)| *i);
            if key.1 != Verdict::Fail {
                slot.truncate(SAMPLES_PER_VERDICT);
            }
        }
    }
}

fn run_tasks(tasks: &[Task], corpus: &Corpus, threads: usize) -> Folded {
    if threads <= 1 || tasks.len() < 2 {
        let mut folded = Folded::new();
        for (idx, task) in tasks.iter().enumerate() {
            for r in run_task(task, corpus) {
                folded.add(idx, r);
            }
        }
        return folded;
    }
    std::thread::scope(|scope| {
        let mut handles = Vec::with_capacity(threads);
        for w in 0..threads {
            handles.push(scope.spawn(move || {
                let mut folded = Folded::new();
                let mut i = w;
                while i < tasks.len() {
                    for r in run_task(&tasks[i], corpus) {
                        folded.add(i, r);
                    }
                    i += threads;
                }
                folded
            }));
        }
        let mut total = Folded::new();
        for h in handles {
            total.merge(h.join().expect("suite worker"));
        }
        total
    })
}

/// Runs the configured checks over the enumerated corpora.
pub fn run_suite(config: &SuiteConfig) -> Result<SuiteOutcome, ConfigInvalid> {
    config.validate()?;
    let start = Instant::now();
    let corpus = build_corpus(config);
    let budget = config.pair_budget;
    let mut tasks: Vec<Task> = Vec::new();

    if config.wants(TheoremId::Ex4_5) {
        tasks.push(Task::WorkedExample);
    }
    if config.wants(TheoremId::T2_1) {
        for i in 0..corpus.unicyclic.len() {
            if corpus.unicyclic[i].n <= config.forest_oracle_nmax {
                tasks.push(Task::ForestGraph(i));
            }
        }
        for (i, j) in same_corpus_pairs(&corpus.unicyclic, config.forest_oracle_nmax, budget, |_| {
            true
        }) {
            tasks.push(Task::ForestPair(i, j));
        }
    }
    if config.wants(TheoremId::Eq1) {
        for i in 0..corpus.unicyclic.len() {
            if corpus.unicyclic[i].n <= config.eigen_valuation_nmax {
                tasks.push(Task::EigenValuation(i));
            }
        }
        for k in 0..3 {
            tasks.push(Task::EigenValuationExample(k));
        }
    }
    if config.wants(TheoremId::T3_1) {
        for i in 0..corpus.unicyclic.len() {
            if corpus.unicyclic[i].n <= config.interlacing_nmax {
                tasks.push(Task::Interlacing(i));
            }
        }
        for (i, j) in
            same_corpus_pairs(&corpus.unicyclic, config.interlacing_nmax, budget, |_| true)
        {
            tasks.push(Task::InterlacingPair(i, j));
        }
    }
    if config.wants(TheoremId::R3_2) {
        for i in 0..corpus.trees.len() {
            tasks.push(Task::Remark32(i));
        }
    }
    if config.wants(TheoremId::T3_3) {
        for i in 0..corpus.broken_suns.len() {
            tasks.push(Task::BrokenSunCert(i));
        }
        for i in 0..corpus.broken_suns.len() {
            if corpus.broken_suns[i].graph.vertex_count() >= 7 {
                tasks.push(Task::BrokenSunContraction(i));
            }
        }
    }
    if config.wants(TheoremId::T3_4) {
        for i in 0..corpus.unicyclic.len() {
            tasks.push(Task::UnicyclicCert(i));
        }
    }
    if config.wants(TheoremId::L4_1) || config.wants(TheoremId::T4_2) {
        for (i, j) in
            same_corpus_pairs(&corpus.unicyclic, config.bicyclic_sum_max, budget, |_| true)
        {
            tasks.push(Task::MultBounds(i, j));
        }
    }
    if config.wants(TheoremId::R4_3) {
        for (i, j) in same_corpus_pairs(&corpus.unicyclic, config.bicyclic_sum_max, budget, |e| {
            e.perfect
        }) {
            tasks.push(Task::JoinPm(i, j));
        }
    }
    if config.wants(TheoremId::T4_4) || config.wants(TheoremId::C4_5) {
        for (i, j) in same_corpus_pairs(&corpus.unicyclic, config.bicyclic_sum_max, budget, |e| {
            e.perfect
        }) {
            tasks.push(Task::EdgeDeletion(i, j));
        }
    }
    if config.wants(TheoremId::T4_6) {
        for (i, j) in same_corpus_pairs(&corpus.unicyclic, config.bicyclic_sum_max, budget, |e| {
            e.perfect && e.has2
        }) {
            tasks.push(Task::TwoTree(i, j));
        }
    }
    if config.wants(TheoremId::T4_7) {
        let el = &corpus.pattern_eligible;
        let mut count = 0usize;
        'outer: for (a, &i) in el.iter().enumerate() {
            for &j in &el[a..] {
                if corpus.broken_suns[i].n + corpus.broken_suns[j].n > config.bicyclic_sum_max {
                    continue;
                }
                tasks.push(Task::PatternPair(i, j));
                count += 1;
                if let Some(cap) = budget {
                    if count >= cap {
                        break 'outer;
                    }
                }
            }
        }
    }
    if config.wants(TheoremId::T4_8) {
        let mut count = 0usize;
        'outer: for &i in &corpus.pattern_eligible {
            for j in 0..corpus.unicyclic.len() {
                let e = &corpus.unicyclic[j];
                if !e.perfect || !e.has2 || e.n > config.mixed_pm_nmax {
                    continue;
                }
                if corpus.broken_suns[i].n + e.n > config.bicyclic_sum_max {
                    continue;
                }
                tasks.push(Task::MixedPair(i, j));
                count += 1;
                if let Some(cap) = budget {
                    if count >= cap {
                        break 'outer;
                    }
                }
            }
        }
    }

    let folded = run_tasks(&tasks, &corpus, config.threads);

    let mut summary: BTreeMap<TheoremId, SummaryCounts> = BTreeMap::new();
    let mut fail_count = 0usize;
    for (&(theorem, verdict), &count) in &folded.counts {
        if !config.wants(theorem) {
            continue;
        }
        let entry = summary.entry(theorem).or_default();
        for _ in 0..count {
            entry.record(verdict);
        }
        if verdict == Verdict::Fail {
            fail_count += count;
        }
    }
    let mut kept: Vec<(usize, CheckResult)> = folded
        .kept
        .into_iter()
        .filter(|((theorem, _), _)| config.wants(*theorem))
        .flat_map(|(_, rs)| rs)
        .collect();
    kept.sort_by(|(i, a), (j, b)| (i, a.theorem, a.instance.0.as_str())
        .cmp(&(j, b.theorem, b.instance.0.as_str())));
    let kept_results: Vec<CheckResult> = kept.into_iter().map(|(_, r)| r).collect();

    let notes = suite_notes(config);

    Ok(SuiteOutcome {
        summary,
        kept_results,
        notes,
        fail_count,
        duration_secs: start.elapsed().as_secs_f64(),
    })
}

/// Standing observations recorded with every report.
fn suite_notes(config: &SuiteConfig) -> Vec<String> {
    let mut notes = vec![
        "C4.5 and the textually identical corollary repeated later both map to the single \
         check C4.5."
            .to_string(),
        "T4.4/C4.5 applicability requires eigenvalue 2 on both operands (as in T4.6). \
         Without it the deletion claim is falsified exactly: BS4[0,1] (+) BS4[0,1] joined \
         at pendants (4,4) is matched with eigenvalue 2 of multiplicity 1 at spectral \
         position n/2 + 1, and every cycle-edge deletion has multiplicity 0."
            .to_string(),
    ];
    // Spanning-tree counts of one-edge connections: tau(G1 (+) G2) =
    // tau(G1) * tau(G2). Recorded per girth pair so every report pins the
    // exact values against the doubled 2*g1*g2 variant.
    let mut taus = Vec::new();
    for g1 in config.girth_min..=config.girth_max {
        for g2 in g1..=config.girth_max {
            if g1 + g2 > config.bicyclic_sum_max {
                continue;
            }
            let c1 = generate(&FamilySpec::Cycle { g: g1 }).expect("cycle");
            let c2 = generate(&FamilySpec::Cycle { g: g2 }).expect("cycle");
            let joined = c1.one_edge_connect(&c2, 0, 0).expect("join");
            let tau = spanning_tree_count(&joined).expect("connected");
            taus.push(format!("({g1},{g2})->{tau}"));
        }
    }
    notes.push(format!(
        "spanning-tree count of C_g1 (+) C_g2 equals g1*g2 exactly (not 2*g1*g2): {}",
        taus.join(", ")
    ));
    notes
}

/// Report JSON for an outcome.
pub fn report_json(config: &SuiteConfig, outcome: &SuiteOutcome) -> ReportJson {
    ReportJson {
        suite_version: SUITE_VERSION.to_string(),
        config: config.to_json(),
        results: outcome
            .kept_results
            .iter()
            .map(crate::json::CheckResultJson::from_result)
            .collect(),
        summary: outcome
            .summary
            .iter()
            .map(|(t, c)| (t.as_str().to_string(), c.clone()))
            .collect(),
        notes: outcome.notes.clone(),
    }
}
