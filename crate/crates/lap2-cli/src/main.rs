//! Command-line surface: generate family graphs, compute spectral reports,
//! build eigenvalue-2 certificates, enumerate corpora and run the theorem
//! verification suite.
//!
//! Exit codes: 0 success, 1 suite failures, 2 invalid input or config,
//! 3 construction preconditions not met, 4 a guaranteed construction ran
//! out of candidates (potential falsification, reported loudly).

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use lap2_cli::graph6;
use lap2_cli::json::{
    to_canonical_json, to_canonical_json_line, CertificateJson, FamilySpecJson, GraphJson,
};
use lap2_cli::report::{auto_certificate, spectral_report, split_join};
use lap2_cli::suite::{default_threads, report_json, run_suite, SuiteConfig};

use lap2_core::checks::TheoremId;
use lap2_core::eigvec::{
    broken_sun_eigenvector, glue_eigenvectors, pattern_eigenvector_no_pm, tree_pm_eigenvector,
    unicyclic_eigenvector, CertError,
};
use lap2_core::families::{
    enumerate_broken_suns, enumerate_unicyclic, generate, FamilySpec, MatchingFilter,
};
use lap2_core::graph::Graph;
use lap2_core::matching::maximum_matching;

#[derive(Parser)]
#[command(name = "lap2", version, about = "Laplacian eigenvalue 2 toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Construction {
    Auto,
    Tree,
    BrokenSun,
    Unicyclic,
    Glue,
    Pattern,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyKind {
    BrokenSun,
    Unicyclic,
}

#[derive(Clone, Copy, ValueEnum)]
enum FilterKind {
    Any,
    Pm,
    NoPm,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph from a family spec (JSON file or inline string).
    Gen {
        /// Path to a family spec JSON file.
        #[arg(long, conflicts_with = "inline")]
        spec: Option<PathBuf>,
        /// Inline family spec JSON.
        #[arg(long)]
        inline: Option<String>,
        /// Write here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Emit graph6 instead of JSON.
        #[arg(long)]
        graph6: bool,
    },
    /// Exact spectral report for a graph (JSON or graph6 input).
    Spectrum {
        graph: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build an eigenvalue-2 eigenvector certificate.
    Cert {
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = Construction::Auto)]
        construction: Construction,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the theorem verification suite over enumerated corpora.
    Verify {
        /// Suite selection; only "default" exists.
        #[arg(long, default_value = "default")]
        suite: String,
        /// Restrict to one or more theorem ids (e.g. T4.6).
        #[arg(long)]
        theorem: Vec<String>,
        /// Unicyclic corpus vertex cap.
        #[arg(long)]
        nmax: Option<usize>,
        /// Joined-order cap for bicyclic instances.
        #[arg(long)]
        bicyclic_nmax: Option<usize>,
        #[arg(long)]
        girth_min: Option<usize>,
        #[arg(long)]
        girth_max: Option<usize>,
        /// Cap on graph pairs per pair-based check.
        #[arg(long)]
        pair_budget: Option<usize>,
        /// Worker threads (default: LAP2_THREADS or all cores).
        #[arg(long)]
        threads: Option<usize>,
        /// Write the JSON report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Suppress the per-theorem summary on stderr.
        #[arg(long)]
        quiet: bool,
    },
    /// Enumerate family members as JSON lines (or graph6 lines).
    Enumerate {
        #[arg(long, value_enum)]
        family: FamilyKind,
        #[arg(long)]
        girth: usize,
        /// Vertex cap (unicyclic family only; default 14).
        #[arg(long)]
        n_max: Option<usize>,
        #[arg(long, value_enum, default_value_t = FilterKind::Any)]
        filter: FilterKind,
        #[arg(long)]
        graph6: bool,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Failure {
        Failure {
            code,
            message: message.into(),
        }
    }
}

fn cert_error_failure(e: CertError) -> Failure {
    match e {
        CertError::ConstructionExhausted(_) | CertError::PatternFailed(_) | CertError::CaseExhausted(_) => {
            Failure::new(4, format!("falsification notice: {e}"))
        }
        other => Failure::new(3, format!("{other}")),
    }
}

fn write_output(out: &Option<PathBuf>, content: &str) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, content)
            .map_err(|e| Failure::new(2, format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn read_graph(path: &PathBuf) -> Result<Graph, Failure> {
    let raw = fs::read_to_string(path)
        .map_err(|e| Failure::new(2, format!("cannot read {}: {e}", path.display())))?;
    let trimmed = raw.trim_start();
    if trimmed.starts_with('{') {
        let parsed: GraphJson = serde_json::from_str(trimmed)
            .map_err(|e| Failure::new(2, format!("graph JSON: {e}")))?;
        parsed.to_graph().map_err(|e| Failure::new(2, e))
    } else {
        let line = trimmed
            .lines()
            .next()
            .ok_or_else(|| Failure::new(2, "empty graph file"))?;
        graph6::decode(line).map_err(|e| Failure::new(2, e))
    }
}

fn render_graph(g: &Graph, as_graph6: bool) -> Result<String, Failure> {
    if as_graph6 {
        let mut s = graph6::encode(g).map_err(|e| Failure::new(2, e))?;
        s.push('\n');
        Ok(s)
    } else {
        Ok(to_canonical_json(&GraphJson::from_graph(g)))
    }
}

fn cmd_gen(
    spec: Option<PathBuf>,
    inline: Option<String>,
    out: Option<PathBuf>,
    as_graph6: bool,
) -> Result<(), Failure> {
    let raw = match (spec, inline) {
        (Some(path), None) => fs::read_to_string(&path)
            .map_err(|e| Failure::new(2, format!("cannot read {}: {e}", path.display())))?,
        (None, Some(s)) => s,
        _ => return Err(Failure::new(2, "provide exactly one of --spec or --inline")),
    };
    let parsed: FamilySpecJson =
        serde_json::from_str(&raw).map_err(|e| Failure::new(2, format!("family spec: {e}")))?;
    let spec = FamilySpec::from(&parsed);
    let graph = generate(&spec).map_err(|e| Failure::new(2, format!("{e}")))?;
    write_output(&out, &render_graph(&graph, as_graph6)?)
}

fn cmd_spectrum(path: PathBuf, out: Option<PathBuf>) -> Result<(), Failure> {
    let graph = read_graph(&path)?;
    let report = spectral_report(&graph);
    write_output(&out, &to_canonical_json(&report))
}

fn cmd_cert(path: PathBuf, construction: Construction, out: Option<PathBuf>) -> Result<(), Failure> {
    let graph = read_graph(&path)?;
    let cert = match construction {
        Construction::Auto => auto_certificate(&graph),
        Construction::Tree => {
            let m = maximum_matching(&graph);
            tree_pm_eigenvector(&graph, &m)
        }
        Construction::BrokenSun => broken_sun_eigenvector(&graph),
        Construction::Unicyclic => unicyclic_eigenvector(&graph),
        Construction::Pattern => pattern_eigenvector_no_pm(&graph),
        Construction::Glue => match split_join(&graph) {
            Some((g1, g2, u, v)) => auto_certificate(&g1).and_then(|x| {
                auto_certificate(&g2).and_then(|y| glue_eigenvectors(&g1, &x, &g2, &y, u, v))
            }),
            None => Err(CertError::PreconditionFailed(
                "graph carries no one-edge-connection metadata".into(),
            )),
        },
    }
    .map_err(cert_error_failure)?;
    write_output(&out, &to_canonical_json(&CertificateJson::from_certificate(&cert)))
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    suite: String,
    theorem: Vec<String>,
    nmax: Option<usize>,
    bicyclic_nmax: Option<usize>,
    girth_min: Option<usize>,
    girth_max: Option<usize>,
    pair_budget: Option<usize>,
    threads: Option<usize>,
    out: Option<PathBuf>,
    quiet: bool,
) -> Result<bool, Failure> {
    if suite != "default" {
        return Err(Failure::new(2, format!("unknown suite {suite:?}")));
    }
    let mut config = SuiteConfig::default();
    if let Some(v) = nmax {
        config.unicyclic_nmax = v;
    }
    if let Some(v) = bicyclic_nmax {
        config.bicyclic_sum_max = v;
    }
    if let Some(v) = girth_min {
        config.girth_min = v;
    }
    if let Some(v) = girth_max {
        config.girth_max = v;
    }
    config.pair_budget = pair_budget;
    config.threads = threads.unwrap_or_else(default_threads);
    if !theorem.is_empty() {
        let mut ids = Vec::new();
        for t in &theorem {
            match TheoremId::parse(t) {
                Some(id) => ids.push(id),
                None => return Err(Failure::new(2, format!("unknown theorem id {t:?}"))),
            }
        }
        config.theorems = Some(ids);
    }
    let outcome = run_suite(&config).map_err(|e| Failure::new(2, format!("{e}")))?;
    let report = report_json(&config, &outcome);
    write_output(&out, &to_canonical_json(&report))?;
    if !quiet {
        for (theorem, counts) in &outcome.summary {
            eprintln!(
                "{:>6}: pass {:>8}  fail {:>4}  inapplicable {:>8}",
                theorem.as_str(),
                counts.pass,
                counts.fail,
                counts.inapplicable
            );
        }
        eprintln!(
            "suite finished in {:.1}s: {}",
            outcome.duration_secs,
            if outcome.passed() { "all checks passed" } else { "FAILURES PRESENT" }
        );
    }
    Ok(outcome.passed())
}

fn cmd_enumerate(
    family: FamilyKind,
    girth: usize,
    n_max: Option<usize>,
    filter: FilterKind,
    as_graph6: bool,
) -> Result<(), Failure> {
    if girth < 3 {
        return Err(Failure::new(2, "girth must be at least 3"));
    }
    let filter = match filter {
        FilterKind::Any => MatchingFilter::Any,
        FilterKind::Pm => MatchingFilter::PerfectMatching,
        FilterKind::NoPm => MatchingFilter::NoPerfectMatching,
    };
    let graphs: Vec<Graph> = match family {
        FamilyKind::BrokenSun => {
            if girth > 60 {
                return Err(Failure::new(2, "girth too large to enumerate"));
            }
            enumerate_broken_suns(girth, filter).collect()
        }
        FamilyKind::Unicyclic => {
            let cap = n_max.unwrap_or(14);
            if cap < girth {
                return Err(Failure::new(2, "n_max below girth"));
            }
            let admit = move |g: &Graph| match filter {
                MatchingFilter::Any => true,
                MatchingFilter::PerfectMatching => maximum_matching(g).perfect(),
                MatchingFilter::NoPerfectMatching => !maximum_matching(g).perfect(),
            };
            enumerate_unicyclic(cap, girth).filter(admit).collect()
        }
    };
    let mut out = String::new();
    for g in &graphs {
        if as_graph6 {
            out.push_str(&graph6::encode(g).map_err(|e| Failure::new(2, e))?);
        } else {
            out.push_str(&to_canonical_json_line(&GraphJson::from_graph(g)));
        }
        out.push('\n');
    }
    print!("{out}");
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome: Result<bool, Failure> = match cli.command {
        Command::Gen {
            spec,
            inline,
            out,
            graph6,
        } => cmd_gen(spec, inline, out, graph6).map(|_| true),
        Command::Spectrum { graph, out } => cmd_spectrum(graph, out).map(|_| true),
        Command::Cert {
            graph,
            construction,
            out,
        } => cmd_cert(graph, construction, out).map(|_| true),
        Command::Verify {
            suite,
            theorem,
            nmax,
            bicyclic_nmax,
            girth_min,
            girth_max,
            pair_budget,
            threads,
            out,
            quiet,
        } => cmd_verify(
            suite,
            theorem,
            nmax,
            bicyclic_nmax,
            girth_min,
            girth_max,
            pair_budget,
            threads,
            out,
            quiet,
        ),
        Command::Enumerate {
            family,
            girth,
            n_max,
            filter,
            graph6,
        } => cmd_enumerate(family, girth, n_max, filter, graph6).map(|_| true),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(f) => {
            eprintln!("lap2: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
