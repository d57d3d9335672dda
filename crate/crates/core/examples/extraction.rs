//! The four extraction drivers on standard hosts, with their traces.
//!
//! ```text
//! cargo run --release --example extraction -- 'graph6' 2 4
//! ```

use pminor::families::{FamilyId, FamilyTag};
use pminor::{extract, generate, graph6, SimpleGraph};

fn show(name: &str, g: &SimpleGraph, c: usize, k: usize) {
    let out = extract(g, c, k).expect("host meets the class");
    match out.certificate() {
        Some(cert) => {
            assert!(cert.verify(g));
            println!("{name}, c = {c}, k = {k}: {}", cert.family);
        }
        None => println!("{name}, c = {c}, k = {k}: insufficient"),
    }
    for line in &out.trace {
        println!("    {line}");
    }
}

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    if let [g, c, k] = args.as_slice() {
        let g = graph6::decode(g).expect("graph6 input");
        show("input", &g, c.parse().expect("class"), k.parse().expect("k"));
        return;
    }
    let id = |t, k| generate(FamilyId::new(t, k)).unwrap();
    show("P50", &SimpleGraph::path(50), 1, 5);
    show("K_(1,50)", &id(FamilyTag::Star, 50), 1, 5);
    show("C15", &SimpleGraph::cycle(15), 2, 5);
    show("W20", &id(FamilyTag::Wheel, 20), 3, 5);
    show("K20", &SimpleGraph::complete(20), 3, 6);
    show("Z20", &id(FamilyTag::Zigzag, 20), 4, 5);
}
