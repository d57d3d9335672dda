//! Exhaustive verification over graph6 corpora.
//!
//! A corpus is one or more graph6 files, one graph per line. Graphs are
//! filtered by order and connectivity class, then every graph is tested for
//! each member of a theorem list by exact parallel-minor search. Work runs
//! on a rayon pool; results are merged in corpus order so reports do not
//! depend on scheduling.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::connectivity::meets_class;
use crate::containment::find_parallel_minor;
use crate::error::{Error, Result};
use crate::extraction::{Certificate, ExtractionOutcome, ExtractionResult};
use crate::families::{generate, theorem_list, FamilyId, FamilyTag};
use crate::graph::SimpleGraph;
use crate::graph6;
use crate::partition::BranchPartition;
use crate::search::{Budget, SearchOutcome};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusSpec {
    pub sources: Vec<PathBuf>,
    /// Keep only graphs of this connectivity class (4 = internally 4-connected).
    pub class: Option<usize>,
    pub order_min: usize,
    pub order_max: usize,
    /// Caller's word that every graph of each order in range is present.
    pub exhaustive: bool,
}

impl CorpusSpec {
    pub fn new(sources: Vec<PathBuf>) -> Self {
        CorpusSpec {
            sources,
            class: None,
            order_min: 0,
            order_max: usize::MAX,
            exhaustive: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusGraph {
    pub graph6: String,
    pub graph: SimpleGraph,
}

/// Decodes graph6 text, one graph per non-empty line.
pub fn parse_corpus(text: &str) -> Result<Vec<CorpusGraph>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            let l = l.trim();
            graph6::decode(l)
                .map(|graph| CorpusGraph {
                    graph6: l.to_string(),
                    graph,
                })
                .map_err(|e| Error::CorpusParse {
                    line: i + 1,
                    message: e.to_string(),
                })
        })
        .collect()
}

/// Reads every source and applies the order and class filters.
pub fn load_corpus(spec: &CorpusSpec) -> Result<Vec<CorpusGraph>> {
    let mut out = Vec::new();
    for path in &spec.sources {
        let text = fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        out.extend(parse_corpus(&text)?);
    }
    out.retain(|g| {
        let n = g.graph.order();
        n >= spec.order_min && n <= spec.order_max && spec.class.is_none_or(|c| meets_class(&g.graph, c))
    });
    Ok(out)
}

/// A certificate as stored on disk, with the host it belongs to.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StoredCertificate {
    pub version: u32,
    pub host: String,
    pub family: FamilyTag,
    pub k: usize,
    #[serde(default, skip_serializing_if = "is_zero")]
    pub a: usize,
    pub partition: Vec<Vec<usize>>,
    #[serde(default)]
    pub trace: Vec<String>,
}

fn is_zero(a: &usize) -> bool {
    *a == 0
}

impl StoredCertificate {
    pub fn id(&self) -> FamilyId {
        FamilyId {
            tag: self.family,
            k: self.k,
            a: self.a,
        }
    }

    pub fn new(host: &SimpleGraph, cert: &Certificate, trace: Vec<String>) -> Self {
        StoredCertificate {
            version: 1,
            host: graph6::encode(host),
            family: cert.family.tag,
            k: cert.family.k,
            a: cert.family.a,
            partition: cert.partition.parts().to_vec(),
            trace,
        }
    }

    pub fn from_outcome(host: &SimpleGraph, outcome: &ExtractionOutcome) -> Option<Self> {
        match &outcome.result {
            ExtractionResult::Family(c) => Some(Self::new(host, c, outcome.trace.clone())),
            ExtractionResult::Insufficient(_) => None,
        }
    }

    /// Rebuilds the certificate and checks it against the stored host.
    pub fn verify(&self) -> Result<(SimpleGraph, Certificate)> {
        if self.version != 1 {
            return Err(Error::PreconditionViolated(format!("unknown certificate version {}", self.version)));
        }
        let host = graph6::decode(&self.host)?;
        let partition = BranchPartition::new(&host, self.partition.clone())?;
        let cert = Certificate {
            family: self.id(),
            partition,
        };
        if !cert.verify(&host) {
            return Err(Error::InvalidPartition(format!("quotient is not {}", self.id())));
        }
        Ok((host, cert))
    }
}

pub fn save_certificates(path: &Path, certs: &[StoredCertificate]) -> Result<()> {
    let text = serde_json::to_string_pretty(certs).map_err(|e| Error::Io(e.to_string()))?;
    fs::write(path, text)?;
    Ok(())
}

/// Loads certificates and re-verifies every one of them.
pub fn load_certificates(path: &Path) -> Result<Vec<StoredCertificate>> {
    let text = fs::read_to_string(path)?;
    let certs: Vec<StoredCertificate> = serde_json::from_str(&text).map_err(|e| Error::Io(e.to_string()))?;
    for c in &certs {
        c.verify()?;
    }
    Ok(certs)
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderStats {
    pub tested: usize,
    pub hits: usize,
    pub misses: usize,
    /// Search budget ran out before any member was found or excluded.
    pub undecided: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub class: usize,
    pub k: usize,
    pub families: Vec<FamilyId>,
    pub per_order: BTreeMap<usize, OrderStats>,
    /// Keyed by the family's display name.
    pub family_hits: BTreeMap<String, usize>,
    /// graph6 of every graph containing no listed family.
    pub misses: Vec<String>,
    pub undecided: Vec<String>,
    pub certificates: Vec<StoredCertificate>,
    /// Smallest order from which every tested graph is a hit.
    pub threshold: Option<usize>,
    pub elapsed_ms: u128,
}

impl VerificationReport {
    pub fn tested(&self) -> usize {
        self.per_order.values().map(|s| s.tested).sum()
    }

    /// Smallest `n` such that no order `≥ n` has a miss or an undecided graph.
    fn compute_threshold(&mut self) {
        let mut threshold = None;
        for (&n, s) in self.per_order.iter().rev() {
            if s.misses + s.undecided > 0 {
                break;
            }
            threshold = Some(n);
        }
        self.threshold = threshold;
    }
}

enum GraphResult {
    Hit(StoredCertificate),
    Miss,
    Undecided,
}

fn test_graph(g: &CorpusGraph, targets: &[(FamilyId, SimpleGraph)], budget: Budget) -> GraphResult {
    let mut undecided = false;
    for (id, t) in targets {
        match find_parallel_minor(&g.graph, t, budget) {
            SearchOutcome::Found(p) => {
                let cert = Certificate { family: *id, partition: p };
                return GraphResult::Hit(StoredCertificate::new(&g.graph, &cert, Vec::new()));
            }
            SearchOutcome::Absent => {}
            SearchOutcome::BudgetExceeded => undecided = true,
        }
    }
    if undecided {
        GraphResult::Undecided
    } else {
        GraphResult::Miss
    }
}

/// Tests every corpus graph for the class-`c` list at `k`. `jobs = 0` uses
/// rayon's default pool size.
pub fn corpus_verify(spec: &CorpusSpec, c: usize, k: usize, budget: Budget, jobs: usize) -> Result<VerificationReport> {
    let families = theorem_list(c, k)?;
    let graphs = load_corpus(spec)?;
    verify_graphs(&graphs, c, k, families, budget, jobs)
}

pub(crate) fn verify_graphs(
    graphs: &[CorpusGraph],
    c: usize,
    k: usize,
    families: Vec<FamilyId>,
    budget: Budget,
    jobs: usize,
) -> Result<VerificationReport> {
    let start = Instant::now();
    let targets: Vec<(FamilyId, SimpleGraph)> = families.iter().map(|&id| Ok((id, generate(id)?))).collect::<Result<_>>()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::Io(e.to_string()))?;
    let results: Vec<GraphResult> = pool.install(|| graphs.par_iter().map(|g| test_graph(g, &targets, budget)).collect());
    let mut report = VerificationReport {
        class: c,
        k,
        families,
        per_order: BTreeMap::new(),
        family_hits: BTreeMap::new(),
        misses: Vec::new(),
        undecided: Vec::new(),
        certificates: Vec::new(),
        threshold: None,
        elapsed_ms: 0,
    };
    for (g, r) in graphs.iter().zip(results) {
        let stats = report.per_order.entry(g.graph.order()).or_default();
        stats.tested += 1;
        match r {
            GraphResult::Hit(cert) => {
                stats.hits += 1;
                *report.family_hits.entry(cert.id().to_string()).or_default() += 1;
                report.certificates.push(cert);
            }
            GraphResult::Miss => {
                stats.misses += 1;
                report.misses.push(g.graph6.clone());
            }
            GraphResult::Undecided => {
                stats.undecided += 1;
                report.undecided.push(g.graph6.clone());
            }
        }
    }
    report.compute_threshold();
    report.elapsed_ms = start.elapsed().as_millis();
    Ok(report)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Threshold {
    Reached(usize),
    NotReached,
}

/// Threshold of [`corpus_verify`], only for corpora attested exhaustive.
pub fn empirical_threshold(c: usize, k: usize, spec: &CorpusSpec, budget: Budget, jobs: usize) -> Result<Threshold> {
    if !spec.exhaustive {
        return Err(Error::NonExhaustiveCorpus);
    }
    let report = corpus_verify(spec, c, k, budget, jobs)?;
    Ok(report.threshold.map_or(Threshold::NotReached, Threshold::Reached))
}
