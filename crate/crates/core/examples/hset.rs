//! Runs the H-set improvement on a Hamiltonian graph of bounded degree until
//! the path is long enough.

use pminor::extraction::{hset_improve, HSet, Improvement};
use pminor::{quotient, BranchPartition, SimpleGraph};

fn main() {
    let (n, d, k) = (200, 5, 6);
    // A cycle with chords i ~ i + 7 on every fifth vertex keeps degrees below d.
    let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    edges.extend((0..n).step_by(5).map(|i| (i, (i + 7) % n)));
    let host = SimpleGraph::from_edges_simplified(n, edges);
    assert!(host.max_degree() < d);

    let start = (0..n).find(|&v| host.degree(v) == 2).expect("some vertex has no chord");
    let next = (start + 1) % n;
    let (_, prov) = quotient(&host, &BranchPartition::identity(n)).unwrap();
    let mut h = HSet::new(prov, (0..n).collect(), vec![(start.min(next), start.max(next))], vec![start, next], (start, next))
        .expect("initial H-set");
    loop {
        let w = h.weight();
        println!("|M| = {:>2}, path {:?}, weight ({}, {})", h.graph().order(), h.path, w.sigma, w.pi);
        match hset_improve(&h, d, k).expect("preconditions hold") {
            Improvement::PathLongEnough => break,
            Improvement::Improved(next) => h = next,
        }
        if h.path.len() < k && h.graph().max_degree() >= d {
            println!("a vertex reached degree {d}");
            break;
        }
    }
}
