//! Constructive extraction of unavoidable parallel minors.
//!
//! Every step works on a [`Contracted`] view of a fixed host and returns
//! either a family [`Certificate`] whose quotient equals the generator
//! output vertex for vertex, a larger structured minor for the next step, or
//! `Insufficient` with the step that stalled.

use crate::containment::find_parallel_minor;
use crate::families::{generate, FamilyId};
use crate::graph::SimpleGraph;
use crate::iso::is_isomorphic;
use crate::partition::{quotient, BranchPartition, Contracted};
use crate::search::{Budget, SearchOutcome};

pub mod bounds;
pub mod connected;
pub mod drivers;
mod finders;
pub mod hamiltonian;
pub mod hset;
pub mod necessity;
pub mod paths;
pub mod ramsey;
pub mod two_connected;

pub use bounds::BoundTable;
pub use connected::{connected_step, star_or_path_minor, StarOrPath};
pub use drivers::{extract, extract_1c, extract_2c, extract_3c, extract_4c, ExtractionOutcome, ExtractionResult};
pub use hamiltonian::{hamiltonian_step, HamiltonianOutcome};
pub use hset::{hset_improve, hset_step, HSet, HSetWeight, Improvement};
pub use necessity::{necessity_check, Counterexample, NecessityReport};
pub use ramsey::{ramsey_induced, ramsey_search, RamseyOutcome, RamseySet};
pub use two_connected::{cycle_or_k2r, two_connected_step, CycleOrK2r};

/// A family member found as a parallel minor: part `i` contracts to vertex
/// `i` of `generate(family)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub family: FamilyId,
    pub partition: BranchPartition,
}

impl Certificate {
    /// Re-checks the certificate against the host: the quotient must equal
    /// the generator output exactly.
    pub fn verify(&self, host: &SimpleGraph) -> bool {
        let Ok(target) = generate(self.family) else { return false };
        match quotient(host, &self.partition) {
            Ok((q, _)) => q == target,
            Err(_) => false,
        }
    }
}

/// Outcome of a single proof step.
#[derive(Debug, Clone)]
pub enum StepOutcome {
    Family(Certificate),
    /// A minor of the next connectivity class, large enough for the caller.
    Minor(Contracted),
    Insufficient(String),
}

/// A step outcome together with the proof cases taken.
#[derive(Debug, Clone)]
pub struct Step {
    pub outcome: StepOutcome,
    pub trace: Vec<String>,
}

impl Step {
    pub(crate) fn new(outcome: StepOutcome, trace: Vec<String>) -> Self {
        Step { outcome, trace }
    }
}

pub(crate) const LIFT_BUDGET: Budget = Budget(400_000);
pub(crate) const WIDE_LIFT_BUDGET: Budget = Budget(2_000_000);
pub(crate) const DIRECT_BUDGET: Budget = Budget(10_000);

/// Renumbers `c` so its quotient equals `generate(id)`, if isomorphic.
pub(crate) fn certify(c: &Contracted, id: FamilyId) -> Option<Certificate> {
    let target = generate(id).ok()?;
    if target.order() != c.graph.order() || target.size() != c.graph.size() {
        return None;
    }
    let map = is_isomorphic(&target, &c.graph)?;
    let fixed = c.reordered(&map);
    debug_assert_eq!(fixed.graph, target);
    Some(Certificate {
        family: id,
        partition: fixed.partition,
    })
}

/// Contracts `c` further to the first of `ids` found by exact search on its
/// quotient; the result's quotient is the generator output itself.
pub(crate) fn search_families(c: &Contracted, ids: &[FamilyId], budget: Budget) -> Option<(FamilyId, Contracted)> {
    for &id in ids {
        let Ok(target) = generate(id) else { continue };
        if target.order() > c.graph.order() {
            continue;
        }
        if let SearchOutcome::Found(inner) = find_parallel_minor(&c.graph, &target, budget) {
            let out = c.refine(&inner);
            debug_assert_eq!(out.graph, target);
            return Some((id, out));
        }
    }
    None
}

/// Lifts a partition of `H − removed` (vertex `i` of the smaller graph is
/// `kept[i]`) to `H`, adding each removed vertex as its own part at the end.
pub(crate) fn lift_parts(parts: &[Vec<usize>], kept: &[usize], removed: &[usize]) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = parts.iter().map(|p| p.iter().map(|&v| kept[v]).collect()).collect();
    out.extend(removed.iter().map(|&v| vec![v]));
    out
}

/// Multi-source BFS from the seed sets: every vertex joins the seed that
/// reaches it first. Vertices no seed reaches stay `None`.
pub(crate) fn absorb_into(g: &SimpleGraph, seeds: &[Vec<usize>]) -> Vec<Option<usize>> {
    let mut owner = vec![None; g.order()];
    let mut queue = std::collections::VecDeque::new();
    for (i, s) in seeds.iter().enumerate() {
        for &v in s {
            owner[v] = Some(i);
            queue.push_back(v);
        }
    }
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if owner[w].is_none() {
                owner[w] = owner[u];
                queue.push_back(w);
            }
        }
    }
    owner
}

/// Groups an owner vector into parts, in seed order.
pub(crate) fn owner_parts(owner: &[Option<usize>], count: usize) -> Option<Vec<Vec<usize>>> {
    let mut parts = vec![Vec::new(); count];
    for (v, o) in owner.iter().enumerate() {
        parts[(*o)?].push(v);
    }
    Some(parts)
}
