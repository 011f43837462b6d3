//! Serde models for the on-disk formats: graphs, family specs, matchings,
//! certificates, spectral reports and suite reports.
//!
//! Serialization goes through `serde_json::Value` so object keys come out
//! sorted; together with exact rationals rendered as `p/q` strings this
//! keeps every output byte-deterministic and diff-friendly.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use lap2_core::checks::{CheckResult, Verdict, Witness};
use lap2_core::eigvec::EigenCertificate;
use lap2_core::exact::Rat;
use lap2_core::families::FamilySpec;
use lap2_core::graph::{Graph, GraphClass, JoinEdge};
use lap2_core::matching::Matching;

use num_traits::One;

/// Serializes with sorted object keys.
pub fn to_canonical_json<T: Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("in-memory serialization");
    let mut s = serde_json::to_string_pretty(&v).expect("in-memory serialization");
    s.push('\n');
    s
}

/// Compact single-line variant, also key-sorted.
pub fn to_canonical_json_line<T: Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("in-memory serialization");
    serde_json::to_string(&v).expect("in-memory serialization")
}

/// Exact rational as `p` or `p/q`.
pub fn rat_to_string(r: &Rat) -> String {
    if r.denom().is_one() {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "variant")]
pub enum FamilySpecJson {
    Cycle {
        g: usize,
    },
    Sun {
        g: usize,
    },
    BrokenSun {
        g: usize,
        pendants: Vec<usize>,
    },
    UnicyclicTrees {
        g: usize,
        trees: Vec<Vec<usize>>,
    },
    Join {
        first: Box<FamilySpecJson>,
        second: Box<FamilySpecJson>,
        u: usize,
        v: usize,
    },
}

impl From<&FamilySpec> for FamilySpecJson {
    fn from(spec: &FamilySpec) -> Self {
        match spec {
            FamilySpec::Cycle { g } => FamilySpecJson::Cycle { g: *g },
            FamilySpec::Sun { g } => FamilySpecJson::Sun { g: *g },
            FamilySpec::BrokenSun { g, pendants } => FamilySpecJson::BrokenSun {
                g: *g,
                pendants: pendants.clone(),
            },
            FamilySpec::UnicyclicTrees { g, trees } => FamilySpecJson::UnicyclicTrees {
                g: *g,
                trees: trees.clone(),
            },
            FamilySpec::Join { first, second, u, v } => FamilySpecJson::Join {
                first: Box::new(FamilySpecJson::from(first.as_ref())),
                second: Box::new(FamilySpecJson::from(second.as_ref())),
                u: *u,
                v: *v,
            },
        }
    }
}

impl From<&FamilySpecJson> for FamilySpec {
    fn from(spec: &FamilySpecJson) -> Self {
        match spec {
            FamilySpecJson::Cycle { g } => FamilySpec::Cycle { g: *g },
            FamilySpecJson::Sun { g } => FamilySpec::Sun { g: *g },
            FamilySpecJson::BrokenSun { g, pendants } => FamilySpec::BrokenSun {
                g: *g,
                pendants: pendants.clone(),
            },
            FamilySpecJson::UnicyclicTrees { g, trees } => FamilySpec::UnicyclicTrees {
                g: *g,
                trees: trees.clone(),
            },
            FamilySpecJson::Join { first, second, u, v } => FamilySpec::Join {
                first: Box::new(FamilySpec::from(first.as_ref())),
                second: Box::new(FamilySpec::from(second.as_ref())),
                u: *u,
                v: *v,
            },
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct JoinJson {
    pub u: usize,
    pub v: usize,
    pub n1: usize,
    pub n2: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize, Default)]
pub struct MetaJson {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub family: Option<FamilySpecJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub join: Option<JoinJson>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub meta: Option<MetaJson>,
}

impl GraphJson {
    pub fn from_graph(g: &Graph) -> GraphJson {
        let meta = if g.meta.family.is_none() && g.meta.join.is_none() {
            None
        } else {
            Some(MetaJson {
                family: g.meta.family.as_ref().map(FamilySpecJson::from),
                join: g.meta.join.as_ref().map(|j| JoinJson {
                    u: j.u,
                    v: j.v,
                    n1: j.n1,
                    n2: j.n2,
                }),
            })
        };
        GraphJson {
            n: g.vertex_count(),
            edges: g.edges().iter().map(|&(a, b)| [a, b]).collect(),
            meta,
        }
    }

    pub fn to_graph(&self) -> Result<Graph, String> {
        let edges: Vec<(usize, usize)> = self.edges.iter().map(|e| (e[0], e[1])).collect();
        let mut g = Graph::new(self.n, &edges).map_err(|e| format!("{e}"))?;
        if let Some(meta) = &self.meta {
            g.meta.family = meta.family.as_ref().map(FamilySpec::from);
            g.meta.join = meta.join.as_ref().map(|j| JoinEdge {
                u: j.u,
                v: j.v,
                n1: j.n1,
                n2: j.n2,
            });
        }
        Ok(g)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MatchingJson {
    pub edges: Vec<[usize; 2]>,
    pub size: usize,
    pub perfect: bool,
}

impl MatchingJson {
    pub fn from_matching(m: &Matching) -> MatchingJson {
        MatchingJson {
            edges: m.edges().iter().map(|&(a, b)| [a, b]).collect(),
            size: m.size(),
            perfect: m.perfect(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CertificateJson {
    pub graph_id: String,
    pub eigenvalue: i64,
    pub vector: Vec<String>,
    pub provenance: String,
    pub alphabet: String,
}

impl CertificateJson {
    pub fn from_certificate(c: &EigenCertificate) -> CertificateJson {
        CertificateJson {
            graph_id: c.graph_id.clone(),
            eigenvalue: c.eigenvalue,
            vector: c.vector.iter().map(rat_to_string).collect(),
            provenance: c.provenance.as_str().to_string(),
            alphabet: c.alphabet.as_str().to_string(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SpectralReportJson {
    pub n: usize,
    pub m: usize,
    pub class: String,
    pub girths: Vec<usize>,
    pub matching: MatchingJson,
    pub mult2: usize,
    pub xi: Vec<String>,
    pub spectrum_float: Vec<f64>,
    pub certificates: Vec<CertificateJson>,
}

pub fn class_name(class: &Result<GraphClass, lap2_core::graph::GraphError>) -> String {
    match class {
        Ok(GraphClass::Tree) => "Tree".to_string(),
        Ok(GraphClass::Unicyclic { .. }) => "Unicyclic".to_string(),
        Ok(GraphClass::Bicyclic { .. }) => "Bicyclic".to_string(),
        Ok(GraphClass::Other) => "Other".to_string(),
        Err(e) => format!("{e}"),
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct WitnessJson {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub graph: Option<GraphJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<CertificateJson>,
    pub quantities: BTreeMap<String, String>,
}

impl WitnessJson {
    pub fn from_witness(w: &Witness) -> WitnessJson {
        WitnessJson {
            graph: w.graph.as_ref().map(GraphJson::from_graph),
            certificate: w.certificate.as_ref().map(CertificateJson::from_certificate),
            quantities: w
                .quantities
                .iter()
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckResultJson {
    pub theorem: String,
    pub instance: String,
    pub verdict: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessJson>,
}

impl CheckResultJson {
    pub fn from_result(r: &CheckResult) -> CheckResultJson {
        CheckResultJson {
            theorem: r.theorem.as_str().to_string(),
            instance: r.instance.0.clone(),
            verdict: r.verdict.as_str().to_string(),
            witness: r.witness.as_ref().map(WitnessJson::from_witness),
        }
    }
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct SummaryCounts {
    pub pass: usize,
    pub fail: usize,
    pub inapplicable: usize,
}

impl SummaryCounts {
    pub fn record(&mut self, v: Verdict) {
        match v {
            Verdict::Pass => self.pass += 1,
            Verdict::Fail => self.fail += 1,
            Verdict::Inapplicable => self.inapplicable += 1,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ReportJson {
    pub suite_version: String,
    pub config: serde_json::Value,
    /// Every failure plus a deterministic sample of the other verdicts;
    /// the summary carries the complete counts.
    pub results: Vec<CheckResultJson>,
    pub summary: BTreeMap<String, SummaryCounts>,
    pub notes: Vec<String>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use lap2_core::families::{generate, FamilySpec};

    #[test]
    fn graph_json_roundtrip() {
        let g = generate(&FamilySpec::Sun { g: 3 }).unwrap();
        let j = GraphJson::from_graph(&g);
        let back = j.to_graph().unwrap();
        assert_eq!(back, g);
        assert_eq!(back.meta.family, g.meta.family);
    }

    #[test]
    fn canonical_json_sorts_keys() {
        #[derive(Serialize)]
        struct T {
            zeta: u32,
            alpha: u32,
        }
        let s = to_canonical_json(&T { zeta: 1, alpha: 2 });
        let a = s.find("alpha").unwrap();
        let z = s.find("zeta").unwrap();
        assert!(a < z);
    }

    #[test]
    fn rational_strings() {
        use lap2_core::exact::Int;
        let half = Rat::new(Int::from(-1), Int::from(2));
        assert_eq!(rat_to_string(&half), "-1/2");
        assert_eq!(rat_to_string(&Rat::from(Int::from(7))), "7");
    }
}
