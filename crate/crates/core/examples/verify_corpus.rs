//! Verifies the shipped corpora for the connected and 2-connected lists and
//! reports the empirical threshold. Run in release.
//!
//! ```text
//! cargo run --release --example verify_corpus -- 2 3
//! ```

use std::path::PathBuf;

use pminor::harness::{corpus_verify, CorpusSpec};
use pminor::Budget;

fn main() {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<usize>().expect("numeric argument"));
    let c = args.next().unwrap_or(1);
    let k = args.next().unwrap_or(3);
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("corpus");
    let mut spec = CorpusSpec::new((1..=7).map(|n| dir.join(format!("graphs{n}.g6"))).collect());
    spec.class = Some(c);
    spec.exhaustive = true;
    let report = corpus_verify(&spec, c, k, Budget::default(), 0).expect("corpus loads");
    for (n, s) in &report.per_order {
        println!("order {n}: {} tested, {} hits, {} misses, {} undecided", s.tested, s.hits, s.misses, s.undecided);
    }
    for (family, hits) in &report.family_hits {
        println!("  {family}: {hits}");
    }
    println!("threshold {:?} after {} ms", report.threshold, report.elapsed_ms);
}
