//! Parallel-minor and minor containment with certificates.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::iso::is_isomorphic;
use crate::partition::{quotient, BranchPartition};
use crate::search::{BranchSearch, Budget, Mode, SearchOutcome};

/// Finds a branch partition of `host` whose quotient is `target`, with part
/// `i` contracting to target vertex `i`.
pub fn find_parallel_minor(host: &SimpleGraph, target: &SimpleGraph, budget: Budget) -> SearchOutcome<BranchPartition> {
    if target.order() > host.order() || target.size() > host.size() {
        return SearchOutcome::Absent;
    }
    BranchSearch::new(host, target, Mode::Exact, budget).run().map(|labels| {
        let mut parts = vec![Vec::new(); target.order()];
        for (v, l) in labels.into_iter().enumerate() {
            parts[l.expect("exact mode never drops vertices")].push(v);
        }
        BranchPartition::new(host, parts).expect("search yields connected parts")
    })
}

/// `M ⪯∥ G`: a branch partition of `host` whose quotient is isomorphic to
/// `target` (part `i` maps to target vertex `i`), or `None`.
pub fn is_parallel_minor(host: &SimpleGraph, target: &SimpleGraph) -> Option<BranchPartition> {
    find_parallel_minor(host, target, Budget::UNLIMITED).found()
}

/// Re-checks a parallel-minor certificate.
pub fn verify_parallel_minor(host: &SimpleGraph, target: &SimpleGraph, partition: &BranchPartition) -> bool {
    match quotient(host, partition) {
        Ok((q, _)) => is_isomorphic(&q, target).is_some(),
        Err(_) => false,
    }
}

/// Disjoint connected branch sets of the host, one per target vertex, with
/// a host edge witnessing each target edge.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinorEmbedding {
    pub branch_sets: Vec<Vec<usize>>,
    /// `(target edge, host edge)` pairs.
    pub edge_witness: Vec<((usize, usize), (usize, usize))>,
}

impl MinorEmbedding {
    /// Builds the embedding from branch sets, computing edge witnesses.
    pub fn from_branch_sets(host: &SimpleGraph, target: &SimpleGraph, branch_sets: Vec<Vec<usize>>) -> Result<Self> {
        if branch_sets.len() != target.order() {
            return Err(Error::InvalidPartition(format!(
                "{} branch sets for a target of order {}",
                branch_sets.len(),
                target.order()
            )));
        }
        let mut owner = vec![usize::MAX; host.order()];
        for (x, set) in branch_sets.iter().enumerate() {
            if set.is_empty() || !host.is_connected_set(set) {
                return Err(Error::InvalidPartition(format!("branch set {x} is empty or disconnected")));
            }
            for &v in set {
                if v >= host.order() || owner[v] != usize::MAX {
                    return Err(Error::InvalidPartition(format!("vertex {v} reused or out of range")));
                }
                owner[v] = x;
            }
        }
        let mut edge_witness = Vec::with_capacity(target.size());
        for (x, y) in target.edges() {
            let w = branch_sets[x]
                .iter()
                .find_map(|&u| host.neighbors(u).iter().find(|&&v| owner[v] == y).map(|&v| (u, v)))
                .ok_or_else(|| Error::InvalidPartition(format!("no host edge between branch sets {x} and {y}")))?;
            edge_witness.push(((x, y), w));
        }
        Ok(MinorEmbedding {
            branch_sets,
            edge_witness,
        })
    }

    pub fn verify(&self, host: &SimpleGraph, target: &SimpleGraph) -> bool {
        match MinorEmbedding::from_branch_sets(host, target, self.branch_sets.clone()) {
            Ok(_) => {
                let owner = self.owner(host.order());
                self.edge_witness.len() == target.size()
                    && self.edge_witness.iter().all(|&((x, y), (u, v))| {
                        target.has_edge(x, y)
                            && host.has_edge(u, v)
                            && owner[u] == Some(x)
                            && owner[v] == Some(y)
                    })
            }
            Err(_) => false,
        }
    }

    fn owner(&self, n: usize) -> Vec<Option<usize>> {
        let mut owner = vec![None; n];
        for (x, set) in self.branch_sets.iter().enumerate() {
            for &v in set {
                owner[v] = Some(x);
            }
        }
        owner
    }

    /// Absorbs unused vertices into adjacent branch sets (multi-source BFS,
    /// smaller target label first), giving a member of `Φ(host, target)`:
    /// the quotient has the target's order and contains it under the identity.
    pub fn extend_to_partition(&self, host: &SimpleGraph) -> Result<BranchPartition> {
        let mut owner = self.owner(host.order());
        let mut queue: VecDeque<usize> = VecDeque::new();
        let mut seeds: Vec<(usize, usize)> = owner
            .iter()
            .enumerate()
            .filter_map(|(v, o)| o.map(|x| (x, v)))
            .collect();
        seeds.sort_unstable();
        queue.extend(seeds.into_iter().map(|(_, v)| v));
        while let Some(u) = queue.pop_front() {
            for &w in host.neighbors(u) {
                if owner[w].is_none() {
                    owner[w] = owner[u];
                    queue.push_back(w);
                }
            }
        }
        if owner.iter().any(Option::is_none) {
            return Err(Error::Disconnected);
        }
        let mut parts = vec![Vec::new(); self.branch_sets.len()];
        for (v, o) in owner.into_iter().enumerate() {
            parts[o.unwrap()].push(v);
        }
        BranchPartition::new(host, parts)
    }
}

/// Minor search with an explicit node budget.
pub fn find_minor(host: &SimpleGraph, target: &SimpleGraph, budget: Budget) -> SearchOutcome<MinorEmbedding> {
    if target.order() > host.order() || target.size() > host.size() {
        return SearchOutcome::Absent;
    }
    BranchSearch::new(host, target, Mode::Subgraph, budget).run().map(|labels| {
        let mut sets = vec![Vec::new(); target.order()];
        for (v, l) in labels.into_iter().enumerate() {
            if let Some(x) = l {
                sets[x].push(v);
            }
        }
        MinorEmbedding::from_branch_sets(host, target, sets).expect("search yields a valid model")
    })
}

/// `N ⪯ G` with the default budget; `SearchBudgetExceeded` is an error,
/// distinct from a verified absence.
pub fn is_minor(host: &SimpleGraph, target: &SimpleGraph) -> Result<Option<MinorEmbedding>> {
    is_minor_with_budget(host, target, Budget::default())
}

pub fn is_minor_with_budget(host: &SimpleGraph, target: &SimpleGraph, budget: Budget) -> Result<Option<MinorEmbedding>> {
    match find_minor(host, target, budget) {
        SearchOutcome::Found(e) => Ok(Some(e)),
        SearchOutcome::Absent => Ok(None),
        SearchOutcome::BudgetExceeded => Err(Error::SearchBudgetExceeded(budget.0)),
    }
}

/// Visits every partition of `host` into connected parts (restricted growth
/// order over a BFS vertex order), optionally with exactly `parts` parts.
/// The visitor returns `false` to stop early.
pub fn for_each_connected_partition<F>(host: &SimpleGraph, parts: Option<usize>, mut visit: F)
where
    F: FnMut(&BranchPartition) -> bool,
{
    let n = host.order();
    if n == 0 {
        return;
    }
    let mut order = Vec::with_capacity(n);
    for comp in host.components() {
        order.extend(host.bfs_order(comp[0]));
    }
    let mut label = vec![usize::MAX; n];
    let mut walker = PartitionWalker {
        host,
        order: &order,
        label: &mut label,
        want: parts,
        visit: &mut visit,
    };
    walker.step(0, 0);
}

struct PartitionWalker<'a, F> {
    host: &'a SimpleGraph,
    order: &'a [usize],
    label: &'a mut Vec<usize>,
    want: Option<usize>,
    visit: &'a mut F,
}

impl<F: FnMut(&BranchPartition) -> bool> PartitionWalker<'_, F> {
    fn step(&mut self, depth: usize, used: usize) -> bool {
        if let Some(w) = self.want {
            if used > w || used + (self.order.len() - depth) < w {
                return true;
            }
        }
        if depth == self.order.len() {
            let mut parts = vec![Vec::new(); used];
            for (v, &l) in self.label.iter().enumerate() {
                parts[l].push(v);
            }
            if parts.iter().all(|p| self.host.is_connected_set(p)) {
                let p = BranchPartition::new(self.host, parts).expect("checked connected");
                return (self.visit)(&p);
            }
            return true;
        }
        let v = self.order[depth];
        for x in 0..=used {
            self.label[v] = x;
            if self.connectable(x) && (x == used || self.neighbours_ok(v)) {
                let next = if x == used { used + 1 } else { used };
                if !self.step(depth + 1, next) {
                    self.label[v] = usize::MAX;
                    return false;
                }
            }
            self.label[v] = usize::MAX;
        }
        true
    }

    fn neighbours_ok(&self, v: usize) -> bool {
        // Every part touching v must still be connectable once v is taken.
        self.host
            .neighbors(v)
            .iter()
            .filter(|&&w| self.label[w] != usize::MAX)
            .all(|&w| self.connectable(self.label[w]))
    }

    fn connectable(&self, x: usize) -> bool {
        let members: Vec<usize> = (0..self.host.order()).filter(|&u| self.label[u] == x).collect();
        let Some(&start) = members.first() else { return true };
        let mut seen = vec![false; self.host.order()];
        seen[start] = true;
        let mut stack = vec![start];
        let mut reached = 1;
        while let Some(u) = stack.pop() {
            for &w in self.host.neighbors(u) {
                if !seen[w] && (self.label[w] == x || self.label[w] == usize::MAX) {
                    seen[w] = true;
                    reached += (self.label[w] == x) as usize;
                    stack.push(w);
                }
            }
        }
        reached == members.len()
    }
}

/// Default cap on host order for Φ enumeration.
pub const PHI_ORDER_CAP: usize = 12;

/// `Φ(G, N)`: parallel minors of `host` of order `|N|` containing `N`
/// (under some labelling) as a spanning subgraph. One entry per isomorphism
/// class, each with its lexicographically smallest normalized partition.
pub fn phi_enumerate(host: &SimpleGraph, target: &SimpleGraph) -> Result<Vec<(SimpleGraph, BranchPartition)>> {
    phi_enumerate_capped(host, target, PHI_ORDER_CAP)
}

pub fn phi_enumerate_capped(host: &SimpleGraph, target: &SimpleGraph, cap: usize) -> Result<Vec<(SimpleGraph, BranchPartition)>> {
    if host.order() > cap {
        return Err(Error::CombinatorialBlowup {
            order: host.order(),
            cap,
        });
    }
    if !host.is_connected() || !target.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut found: Vec<(SimpleGraph, BranchPartition)> = Vec::new();
    for_each_connected_partition(host, Some(target.order()), |p| {
        let (q, _) = quotient(host, p).expect("enumerated partitions are valid");
        if q.size() >= target.size() && find_minor(&q, target, Budget::UNLIMITED).is_found() {
            let p = p.normalized();
            let q = quotient(host, &p).expect("normalized partition is valid").0;
            match found.iter_mut().find(|(g, _)| is_isomorphic(g, &q).is_some()) {
                Some(entry) => {
                    if p.parts() < entry.1.parts() {
                        *entry = (q, p);
                    }
                }
                None => found.push((q, p)),
            }
        }
        true
    });
    found.sort_by(|a, b| a.1.parts().cmp(b.1.parts()));
    Ok(found)
}
