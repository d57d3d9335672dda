//! Writes `corpus/graphs{n}.g6`: every simple graph of order `n` up to
//! isomorphism, for `n` from 1 to the given maximum (default 8).
//!
//! Each graph of order `n` arises from one of order `n − 1` by adding a
//! vertex, so augmenting every representative with every neighbourhood and
//! keeping one graph per isomorphism class is complete.
//!
//! ```text
//! cargo run --release --example build_corpus -- 8 crates/core/corpus
//! ```

use std::collections::HashMap;
use std::path::PathBuf;

use pminor::{graph6, is_isomorphic, SimpleGraph};

/// Cheap invariant: sorted (degree, sorted neighbour degrees) per vertex.
fn key(g: &SimpleGraph) -> Vec<(usize, Vec<usize>)> {
    let mut k: Vec<(usize, Vec<usize>)> = (0..g.order())
        .map(|v| {
            let mut nd: Vec<usize> = g.neighbors(v).iter().map(|&w| g.degree(w)).collect();
            nd.sort_unstable();
            (g.degree(v), nd)
        })
        .collect();
    k.sort();
    k
}

fn next_order(prev: &[SimpleGraph]) -> Vec<SimpleGraph> {
    let n = prev.first().map_or(0, |g| g.order());
    let mut buckets: HashMap<(usize, Vec<(usize, Vec<usize>)>), Vec<SimpleGraph>> = HashMap::new();
    let mut out = Vec::new();
    for g in prev {
        for mask in 0u32..(1 << n) {
            let mut edges: Vec<(usize, usize)> = g.edges().collect();
            edges.extend((0..n).filter(|&i| mask >> i & 1 == 1).map(|i| (i, n)));
            let h = SimpleGraph::from_edges(n + 1, &edges).expect("valid edges");
            let bucket = buckets.entry((h.size(), key(&h))).or_default();
            if bucket.iter().all(|r| is_isomorphic(r, &h).is_none()) {
                bucket.push(h.clone());
                out.push(h);
            }
        }
    }
    out
}

fn main() {
    let mut args = std::env::args().skip(1);
    let max: usize = args.next().map_or(8, |a| a.parse().expect("order must be a number"));
    let dir = PathBuf::from(args.next().unwrap_or_else(|| "corpus".into()));
    std::fs::create_dir_all(&dir).expect("create corpus directory");
    let mut level = vec![SimpleGraph::empty(1)];
    for n in 1..=max {
        if n > 1 {
            level = next_order(&level);
        }
        let mut lines: Vec<String> = level.iter().map(graph6::encode).collect();
        lines.sort();
        let path = dir.join(format!("graphs{n}.g6"));
        std::fs::write(&path, lines.join("\n") + "\n").expect("write corpus file");
        println!("order {n}: {} graphs -> {}", lines.len(), path.display());
    }
}
