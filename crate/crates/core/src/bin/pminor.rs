//! Command-line front end. Results go to standard output as graph6 or JSON,
//! diagnostics to standard error.
//!
//! Exit codes: 0 success, 1 negative answer, 2 usage or input error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use pminor::connectivity::{is_internally_4_connected, is_k_connected, vertex_connectivity};
use pminor::containment::{find_minor, find_parallel_minor};
use pminor::extraction::{extract, ramsey_search, RamseySet};
use pminor::families::{generate, vertex_labels, FamilyId, FamilyTag};
use pminor::graph::to_edge_list;
use pminor::harness::{corpus_verify, empirical_threshold, save_certificates, CorpusSpec, StoredCertificate, Threshold};
use pminor::{graph6, Budget, Error, SearchOutcome, SimpleGraph};

#[derive(Parser)]
#[command(name = "pminor", version, about = "Parallel minors of simple graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a family member as graph6 (or a labelled edge list).
    GenFamily {
        /// Family tag, e.g. wheel, fan, zigzag, k2k-prime.
        tag: String,
        k: usize,
        /// Small side for complete-bipartite.
        #[arg(long, default_value_t = 0)]
        a: usize,
        #[arg(long)]
        labels: bool,
    },
    /// Is TARGET a parallel minor of HOST? Prints the branch partition.
    CheckPminor {
        host: String,
        target: String,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Is TARGET a minor of HOST? Prints the branch sets.
    CheckMinor {
        host: String,
        target: String,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Vertex connectivity and class membership.
    Connectivity { graph: String },
    /// Run the extraction driver for class C at parameter K.
    Extract {
        graph: String,
        #[arg(long)]
        c: usize,
        #[arg(long)]
        k: usize,
        /// Also write the certificate as JSON to this file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Test every corpus graph against the class-C list at K.
    VerifyCorpus {
        #[command(flatten)]
        corpus: CorpusArgs,
        /// Leave certificates out of the report.
        #[arg(long)]
        summary: bool,
    },
    /// Smallest order from which every corpus graph hits the list.
    Threshold {
        #[command(flatten)]
        corpus: CorpusArgs,
    },
    /// K vertices forming a clique or an independent set.
    Ramsey {
        graph: String,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        budget: Option<u64>,
    },
}

#[derive(Args)]
struct CorpusArgs {
    /// graph6 files, one graph per line.
    #[arg(required = true)]
    files: Vec<PathBuf>,
    #[arg(long)]
    c: usize,
    #[arg(long)]
    k: usize,
    #[arg(long, default_value_t = 0)]
    order_min: usize,
    #[arg(long, default_value_t = usize::MAX)]
    order_max: usize,
    #[arg(long)]
    budget: Option<u64>,
    /// Worker threads; 0 picks the number of cores.
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    /// Declare that the files hold every graph of each order in range.
    #[arg(long)]
    exhaustive_attest: bool,
}

impl CorpusArgs {
    fn spec(&self) -> CorpusSpec {
        CorpusSpec {
            sources: self.files.clone(),
            class: Some(self.c),
            order_min: self.order_min,
            order_max: self.order_max,
            exhaustive: self.exhaustive_attest,
        }
    }
}

enum Failure {
    Negative,
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn budget(b: Option<u64>) -> Budget {
    b.map_or_else(Budget::default, Budget)
}

/// A graph6 file (first non-empty line) or a literal graph6 string.
fn read_graph(arg: &str) -> Result<SimpleGraph, Failure> {
    let text = match std::fs::read_to_string(arg) {
        Ok(t) => t,
        Err(_) if !std::path::Path::new(arg).exists() => arg.to_string(),
        Err(e) => return Err(Failure::Usage(format!("{arg}: {e}"))),
    };
    let line = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty())
        .ok_or_else(|| Failure::Usage(format!("{arg}: no graph")))?;
    Ok(graph6::decode(line)?)
}

fn print(v: &serde_json::Value) {
    println!("{}", serde_json::to_string(v).expect("json values serialise"));
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::GenFamily { tag, k, a, labels } => {
            let tag: FamilyTag = tag.parse()?;
            let id = if tag == FamilyTag::CompleteBipartite { FamilyId::bipartite(a, k) } else { FamilyId::new(tag, k) };
            let g = generate(id)?;
            if labels {
                let g = g.with_labels(vertex_labels(id)?)?;
                print!("{}", to_edge_list(&g));
            } else {
                println!("{}", graph6::encode(&g));
            }
        }
        Command::CheckPminor { host, target, budget: b } => {
            let (h, t) = (read_graph(&host)?, read_graph(&target)?);
            match find_parallel_minor(&h, &t, budget(b)) {
                SearchOutcome::Found(p) => print(&json!({ "found": true, "partition": p.parts() })),
                SearchOutcome::Absent => {
                    print(&json!({ "found": false }));
                    return Err(Failure::Negative);
                }
                SearchOutcome::BudgetExceeded => return Err(Failure::Usage("search budget exceeded".into())),
            }
        }
        Command::CheckMinor { host, target, budget: b } => {
            let (h, t) = (read_graph(&host)?, read_graph(&target)?);
            match find_minor(&h, &t, budget(b)) {
                SearchOutcome::Found(e) => print(&json!({ "found": true, "branch_sets": e.branch_sets })),
                SearchOutcome::Absent => {
                    print(&json!({ "found": false }));
                    return Err(Failure::Negative);
                }
                SearchOutcome::BudgetExceeded => return Err(Failure::Usage("search budget exceeded".into())),
            }
        }
        Command::Connectivity { graph } => {
            let g = read_graph(&graph)?;
            print(&json!({
                "order": g.order(),
                "size": g.size(),
                "vertex_connectivity": vertex_connectivity(&g),
                "connected": is_k_connected(&g, 1),
                "two_connected": is_k_connected(&g, 2),
                "three_connected": is_k_connected(&g, 3),
                "internally_four_connected": is_internally_4_connected(&g),
            }));
        }
        Command::Extract { graph, c, k, out } => {
            let g = read_graph(&graph)?;
            let outcome = extract(&g, c, k)?;
            print(&outcome.to_json());
            match StoredCertificate::from_outcome(&g, &outcome) {
                Some(cert) => {
                    if let Some(path) = out {
                        save_certificates(&path, &[cert])?;
                    }
                }
                None => return Err(Failure::Negative),
            }
        }
        Command::VerifyCorpus { corpus, summary } => {
            let mut report = corpus_verify(&corpus.spec(), corpus.c, corpus.k, budget(corpus.budget), corpus.jobs)?;
            if summary {
                report.certificates.clear();
            }
            print(&serde_json::to_value(&report).expect("report serialises"));
        }
        Command::Threshold { corpus } => {
            match empirical_threshold(corpus.c, corpus.k, &corpus.spec(), budget(corpus.budget), corpus.jobs)? {
                Threshold::Reached(n) => print(&json!({ "threshold": n })),
                Threshold::NotReached => {
                    print(&json!({ "threshold": "not-reached" }));
                    return Err(Failure::Negative);
                }
            }
        }
        Command::Ramsey { graph, k, budget: b } => {
            let g = read_graph(&graph)?;
            match ramsey_search(&g, k, budget(b)) {
                SearchOutcome::Found(RamseySet::Clique(c)) => print(&json!({ "clique": c })),
                SearchOutcome::Found(RamseySet::Independent(i)) => print(&json!({ "independent": i })),
                SearchOutcome::Absent => {
                    print(&json!({ "found": false }));
                    return Err(Failure::Negative);
                }
                SearchOutcome::BudgetExceeded => return Err(Failure::Usage("search budget exceeded".into())),
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Negative) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("pminor: {msg}");
            ExitCode::from(2)
        }
    }
}
