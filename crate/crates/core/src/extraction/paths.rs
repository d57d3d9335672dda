//! Long paths and cycles by budgeted depth-first search.
//!
//! Neighbours are tried fewest-free-neighbours first, and a branch is cut
//! when the vertices still reachable cannot beat the best found so far. With
//! an unlimited budget both searches are exact.

use crate::graph::SimpleGraph;
use crate::search::Budget;

struct Dfs<'a> {
    g: &'a SimpleGraph,
    on_path: Vec<bool>,
    path: Vec<usize>,
    best: Vec<usize>,
    close_to: Option<usize>,
    nodes: u64,
    budget: u64,
    target: usize,
}

impl Dfs<'_> {
    fn reachable_bound(&self, from: usize) -> usize {
        let mut seen = self.on_path.clone();
        let mut stack = vec![from];
        let mut count = 0;
        while let Some(u) = stack.pop() {
            for &w in self.g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count
    }

    fn record(&mut self) {
        let end = *self.path.last().unwrap();
        let ok = match self.close_to {
            None => true,
            Some(r) => self.path.len() >= 3 && self.g.has_edge(end, r),
        };
        if ok && self.path.len() > self.best.len() {
            self.best = self.path.clone();
        }
    }

    fn go(&mut self) {
        self.nodes += 1;
        if self.nodes > self.budget || self.best.len() >= self.target {
            return;
        }
        self.record();
        let end = *self.path.last().unwrap();
        if self.path.len() + self.reachable_bound(end) <= self.best.len() {
            return;
        }
        let mut next: Vec<usize> = self.g.neighbors(end).iter().copied().filter(|&w| !self.on_path[w]).collect();
        next.sort_by_key(|&w| (self.g.neighbors(w).iter().filter(|&&x| !self.on_path[x]).count(), w));
        for w in next {
            self.on_path[w] = true;
            self.path.push(w);
            self.go();
            self.path.pop();
            self.on_path[w] = false;
            if self.nodes > self.budget || self.best.len() >= self.target {
                return;
            }
        }
    }
}

fn search(g: &SimpleGraph, cycle: bool, target: usize, budget: Budget) -> Vec<usize> {
    let n = g.order();
    if n == 0 {
        return Vec::new();
    }
    let mut roots: Vec<usize> = (0..n).collect();
    roots.sort_by_key(|&v| (g.degree(v), v));
    if cycle {
        roots.reverse();
    }
    let per_root = (budget.0 / n as u64).max(1);
    let mut best: Vec<usize> = Vec::new();
    for &r in &roots {
        let mut dfs = Dfs {
            g,
            on_path: vec![false; n],
            path: vec![r],
            best: best.clone(),
            close_to: cycle.then_some(r),
            nodes: 0,
            budget: per_root,
            target,
        };
        dfs.on_path[r] = true;
        dfs.go();
        best = dfs.best;
        if best.len() >= target || best.len() == n {
            break;
        }
    }
    best
}

/// A long path (vertex sequence); exact for small graphs.
pub fn long_path(g: &SimpleGraph, budget: Budget) -> Vec<usize> {
    search(g, false, g.order(), budget)
}

/// A path with at least `target` vertices if one is found, otherwise the
/// longest seen.
pub fn path_of_length(g: &SimpleGraph, target: usize, budget: Budget) -> Vec<usize> {
    search(g, false, target, budget)
}

/// A long cycle as a vertex sequence, or empty if none was found.
pub fn long_cycle(g: &SimpleGraph, budget: Budget) -> Vec<usize> {
    search(g, true, g.order(), budget)
}

/// A cycle with at least `target` vertices if one is found, otherwise the
/// longest seen.
pub fn cycle_of_length(g: &SimpleGraph, target: usize, budget: Budget) -> Vec<usize> {
    search(g, true, target, budget)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn petersen_paths_and_cycles() {
        let p = SimpleGraph::petersen();
        assert_eq!(long_path(&p, Budget::UNLIMITED).len(), 10);
        let c = long_cycle(&p, Budget::UNLIMITED);
        // Petersen is not Hamiltonian; its longest cycle has 9 vertices.
        assert_eq!(c.len(), 9);
        assert!(c.windows(2).all(|w| p.has_edge(w[0], w[1])) && p.has_edge(c[0], c[8]));
    }

    #[test]
    fn trees_have_no_cycle() {
        let t = SimpleGraph::path(6);
        assert!(long_cycle(&t, Budget::UNLIMITED).is_empty());
        assert_eq!(long_path(&t, Budget::UNLIMITED).len(), 6);
    }
}
