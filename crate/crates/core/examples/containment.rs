//! Minor versus parallel minor on a few small pairs.
//!
//! A parallel minor only contracts: every host edge between two parts
//! survives. So a cycle's parallel minors are shorter cycles, while its
//! ordinary minors include every path.

use pminor::containment::verify_parallel_minor;
use pminor::{is_minor, is_parallel_minor, SimpleGraph};

fn main() {
    let pairs = [
        ("C5", SimpleGraph::cycle(5), "P3", SimpleGraph::path(3)),
        ("C5", SimpleGraph::cycle(5), "C3", SimpleGraph::cycle(3)),
        ("Petersen", SimpleGraph::petersen(), "K5", SimpleGraph::complete(5)),
        ("Petersen", SimpleGraph::petersen(), "K4", SimpleGraph::complete(4)),
    ];
    for (hn, host, tn, target) in &pairs {
        let minor = is_minor(host, target).expect("within limits").is_some();
        let parallel = is_parallel_minor(host, target);
        println!("{tn} in {hn}: minor {minor}, parallel minor {}", parallel.is_some());
        if let Some(p) = parallel {
            assert!(verify_parallel_minor(host, target, &p));
            println!("  parts {:?}", p.parts());
        }
    }
}
