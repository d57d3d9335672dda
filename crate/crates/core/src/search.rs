//! Backtracking over branch-set assignments.
//!
//! Every host vertex receives a target label (or, in minor mode, a whole
//! host component may be dropped). Two rules prune the tree:
//!
//! * a part must stay connectable through still-unassigned vertices, and
//! * a target edge whose part has no unassigned neighbour left must already
//!   be realised by some host edge.
//!
//! In exact mode a host edge between parts whose labels are not adjacent in
//! the target is rejected immediately, so the final quotient is the target
//! itself and not merely a supergraph of it.

use crate::graph::SimpleGraph;

/// Tri-state result of a bounded search. `BudgetExceeded` is never an answer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome<T> {
    Found(T),
    Absent,
    BudgetExceeded,
}

impl<T> SearchOutcome<T> {
    pub fn found(self) -> Option<T> {
        match self {
            SearchOutcome::Found(t) => Some(t),
            _ => None,
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self, SearchOutcome::Found(_))
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> SearchOutcome<U> {
        match self {
            SearchOutcome::Found(t) => SearchOutcome::Found(f(t)),
            SearchOutcome::Absent => SearchOutcome::Absent,
            SearchOutcome::BudgetExceeded => SearchOutcome::BudgetExceeded,
        }
    }
}

/// Node budget for a single search call.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget(pub u64);

impl Budget {
    pub const UNLIMITED: Budget = Budget(u64::MAX);
}

impl Default for Budget {
    fn default() -> Self {
        Budget(20_000_000)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Mode {
    /// Quotient must equal the target under the labelling.
    Exact,
    /// Quotient must contain the target; components may be dropped.
    Subgraph,
}

const UNSET: usize = usize::MAX;
const DROPPED: usize = usize::MAX - 1;

pub(crate) struct BranchSearch<'a> {
    host: &'a SimpleGraph,
    target: &'a SimpleGraph,
    mode: Mode,
    order: Vec<usize>,
    component_start: Vec<bool>,
    component_of: Vec<usize>,
    label: Vec<usize>,
    part_size: Vec<usize>,
    // realised[x * m + y]: number of host edges currently joining parts x and y
    realised: Vec<u32>,
    nodes: u64,
    budget: u64,
    exhausted: bool,
}

impl<'a> BranchSearch<'a> {
    pub(crate) fn new(host: &'a SimpleGraph, target: &'a SimpleGraph, mode: Mode, budget: Budget) -> Self {
        let comps = host.components();
        let mut order = Vec::with_capacity(host.order());
        let mut component_start = vec![false; host.order()];
        let mut component_of = vec![0; host.order()];
        for (ci, comp) in comps.iter().enumerate() {
            let root = *comp.iter().max_by_key(|&&v| (host.degree(v), std::cmp::Reverse(v))).unwrap();
            let bfs = host.bfs_order(root);
            component_start[bfs[0]] = true;
            for &v in &bfs {
                component_of[v] = ci;
            }
            order.extend(bfs);
        }
        let m = target.order();
        BranchSearch {
            host,
            target,
            mode,
            order,
            component_start,
            component_of,
            label: vec![UNSET; host.order()],
            part_size: vec![0; m],
            realised: vec![0; m * m],
            nodes: 0,
            budget: budget.0,
            exhausted: false,
        }
    }

    /// Runs the search; the result maps host vertices to target labels, with
    /// `None` for vertices of dropped components.
    pub(crate) fn run(mut self) -> SearchOutcome<Vec<Option<usize>>> {
        let m = self.target.order();
        let n = self.host.order();
        if m > n || (m == 0 && self.mode == Mode::Exact && n > 0) {
            return SearchOutcome::Absent;
        }
        if m == 0 {
            return SearchOutcome::Found(vec![None; n]);
        }
        if self.mode == Mode::Exact && self.host.components().len() != self.target.components().len() {
            return SearchOutcome::Absent;
        }
        if self.recurse(0) {
            let out = self
                .label
                .iter()
                .map(|&l| if l == DROPPED { None } else { Some(l) })
                .collect();
            SearchOutcome::Found(out)
        } else if self.exhausted {
            SearchOutcome::BudgetExceeded
        } else {
            SearchOutcome::Absent
        }
    }

    fn recurse(&mut self, depth: usize) -> bool {
        self.nodes += 1;
        if self.nodes > self.budget {
            self.exhausted = true;
            return false;
        }
        let remaining = self.order.len() - depth;
        let unused = self.part_size.iter().filter(|&&s| s == 0).count();
        if remaining < unused {
            return false;
        }
        if depth == self.order.len() {
            return self.complete();
        }
        let v = self.order[depth];

        if self.component_start[v] && self.mode == Mode::Subgraph {
            // Option: drop this whole component.
            let comp = self.component_of[v];
            let members: Vec<usize> = self.order[depth..]
                .iter()
                .copied()
                .take_while(|&w| self.component_of[w] == comp)
                .collect();
            let skip = members.len();
            if self.order.len() - depth - skip >= unused {
                for &w in &members {
                    self.label[w] = DROPPED;
                }
                if self.recurse(depth + skip) {
                    return true;
                }
                for &w in &members {
                    self.label[w] = UNSET;
                }
                if self.exhausted {
                    return false;
                }
            }
        }

        for x in self.candidate_labels(v) {
            if self.assign(v, x) {
                if self.feasible(v, x) && self.recurse(depth + 1) {
                    return true;
                }
                self.unassign(v, x);
            } else {
                self.unassign(v, x);
            }
            if self.exhausted {
                return false;
            }
        }
        false
    }

    fn candidate_labels(&self, v: usize) -> Vec<usize> {
        let m = self.target.order();
        let mut seen = vec![false; m];
        let mut out = Vec::with_capacity(m);
        for &w in self.host.neighbors(v) {
            let l = self.label[w];
            if l < m && !seen[l] {
                seen[l] = true;
                out.push(l);
            }
        }
        let mut fresh: Vec<usize> = (0..m).filter(|&x| !seen[x] && self.part_size[x] == 0).collect();
        fresh.sort_by_key(|&x| (std::cmp::Reverse(self.target.degree(x)), x));
        for x in fresh {
            seen[x] = true;
            out.push(x);
        }
        out.extend((0..m).filter(|&x| !seen[x]));
        out
    }

    /// Places `v` in part `x`; false when an exact-mode edge rule is broken.
    fn assign(&mut self, v: usize, x: usize) -> bool {
        let m = self.target.order();
        self.label[v] = x;
        self.part_size[x] += 1;
        let mut ok = true;
        for &w in self.host.neighbors(v) {
            let y = self.label[w];
            if y < m && y != x {
                self.realised[x * m + y] += 1;
                self.realised[y * m + x] += 1;
                if self.mode == Mode::Exact && !self.target.has_edge(x, y) {
                    ok = false;
                }
            }
        }
        ok
    }

    fn unassign(&mut self, v: usize, x: usize) {
        let m = self.target.order();
        for &w in self.host.neighbors(v) {
            let y = self.label[w];
            if y < m && y != x {
                self.realised[x * m + y] -= 1;
                self.realised[y * m + x] -= 1;
            }
        }
        self.part_size[x] -= 1;
        self.label[v] = UNSET;
    }

    fn feasible(&self, v: usize, x: usize) -> bool {
        let m = self.target.order();
        let mut touched = vec![x];
        for &w in self.host.neighbors(v) {
            let y = self.label[w];
            if y < m && !touched.contains(&y) {
                touched.push(y);
            }
        }
        for &y in &touched {
            if !self.part_connectable(y) {
                return false;
            }
            if !self.part_open(y) {
                for &z in self.target.neighbors(y) {
                    if self.realised[y * m + z] == 0 {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Whether part `x` can still become connected via unassigned vertices.
    fn part_connectable(&self, x: usize) -> bool {
        let members: Vec<usize> = (0..self.host.order()).filter(|&u| self.label[u] == x).collect();
        let Some(&start) = members.first() else {
            return true;
        };
        let mut seen = vec![false; self.host.order()];
        seen[start] = true;
        let mut stack = vec![start];
        let mut reached = 1;
        while let Some(u) = stack.pop() {
            for &w in self.host.neighbors(u) {
                if !seen[w] && (self.label[w] == x || self.label[w] == UNSET) {
                    seen[w] = true;
                    if self.label[w] == x {
                        reached += 1;
                    }
                    stack.push(w);
                }
            }
        }
        reached == members.len()
    }

    /// Whether part `x` still has an unassigned neighbour.
    fn part_open(&self, x: usize) -> bool {
        (0..self.host.order())
            .filter(|&u| self.label[u] == x)
            .any(|u| self.host.neighbors(u).iter().any(|&w| self.label[w] == UNSET))
    }

    fn complete(&self) -> bool {
        let m = self.target.order();
        if self.part_size.iter().any(|&s| s == 0) {
            return false;
        }
        for x in 0..m {
            if !self.part_connectable(x) {
                return false;
            }
        }
        self.target.edges().all(|(x, y)| self.realised[x * m + y] > 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn budget_is_reported_separately() {
        let host = SimpleGraph::petersen();
        let target = SimpleGraph::complete(5);
        let out = BranchSearch::new(&host, &target, Mode::Subgraph, Budget(3)).run();
        assert_eq!(out, SearchOutcome::BudgetExceeded);
    }

    #[test]
    fn exact_mode_identity() {
        let g = SimpleGraph::cycle(5);
        let out = BranchSearch::new(&g, &g, Mode::Exact, Budget::UNLIMITED).run();
        assert!(out.is_found());
    }
}
