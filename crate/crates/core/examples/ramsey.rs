//! Induced cliques and independent sets.

use pminor::extraction::bounds::ramsey_bound;
use pminor::extraction::{ramsey_induced, RamseyOutcome};
use pminor::SimpleGraph;

fn main() {
    let p = SimpleGraph::petersen();
    for k in 2..=5 {
        match ramsey_induced(&p, k) {
            RamseyOutcome::Clique(c) => println!("Petersen, k = {k}: clique {c:?}"),
            RamseyOutcome::Independent(i) => println!("Petersen, k = {k}: independent {i:?}"),
            RamseyOutcome::NotFound => println!("Petersen, k = {k}: neither"),
            RamseyOutcome::BudgetExceeded => println!("Petersen, k = {k}: budget ran out"),
        }
    }
    for k in 2..=6 {
        println!("R({k},{k}) <= {:?}", ramsey_bound(k, k));
    }
}
