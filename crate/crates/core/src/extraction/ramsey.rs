//! Induced cliques and independent sets by pivoting.
//!
//! The search picks a pivot `p`, splits the rest into neighbours and
//! non-neighbours, and recurses into whichever side meets the
//! `binom(s + t − 2, s − 1)` bound first. That branch never fails, so above
//! the bound no backtracking happens. Below it the search falls back to the
//! other side and then to excluding `p`, which makes it exhaustive.

use crate::graph::SimpleGraph;
use crate::search::{Budget, SearchOutcome};

use super::bounds::ramsey_bound;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RamseyOutcome {
    /// `k` pairwise adjacent vertices, ascending.
    Clique(Vec<usize>),
    /// `k` pairwise nonadjacent vertices, ascending.
    Independent(Vec<usize>),
    NotFound,
    /// The node budget ran out before the search finished.
    BudgetExceeded,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RamseySet {
    Clique(Vec<usize>),
    Independent(Vec<usize>),
}

/// Induced `K_k` or `K̄_k` with a generous default budget.
pub fn ramsey_induced(g: &SimpleGraph, k: usize) -> RamseyOutcome {
    match ramsey_search(g, k, Budget::default()) {
        SearchOutcome::Found(RamseySet::Clique(c)) => RamseyOutcome::Clique(c),
        SearchOutcome::Found(RamseySet::Independent(i)) => RamseyOutcome::Independent(i),
        SearchOutcome::Absent => RamseyOutcome::NotFound,
        SearchOutcome::BudgetExceeded => RamseyOutcome::BudgetExceeded,
    }
}

pub fn ramsey_search(g: &SimpleGraph, k: usize, budget: Budget) -> SearchOutcome<RamseySet> {
    if k == 0 {
        return SearchOutcome::Found(RamseySet::Clique(Vec::new()));
    }
    let mut pivot = Pivot { g, nodes: 0, budget: budget.0 };
    let cand: Vec<usize> = (0..g.order()).collect();
    match pivot.find(&cand, k, k) {
        Some(found) => SearchOutcome::Found(match found {
            Found::Clique(mut c) => {
                c.sort_unstable();
                RamseySet::Clique(c)
            }
            Found::Independent(mut i) => {
                i.sort_unstable();
                RamseySet::Independent(i)
            }
        }),
        None if pivot.nodes > pivot.budget => SearchOutcome::BudgetExceeded,
        None => SearchOutcome::Absent,
    }
}

enum Found {
    Clique(Vec<usize>),
    Independent(Vec<usize>),
}

struct Pivot<'a> {
    g: &'a SimpleGraph,
    nodes: u64,
    budget: u64,
}

impl Pivot<'_> {
    /// A clique of size `s` or an independent set of size `t` inside `cand`.
    fn find(&mut self, cand: &[usize], s: usize, t: usize) -> Option<Found> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return None;
        }
        if s == 0 {
            return Some(Found::Clique(Vec::new()));
        }
        if t == 0 {
            return Some(Found::Independent(Vec::new()));
        }
        let (&p, rest) = cand.split_first()?;
        let (nbr, non): (Vec<usize>, Vec<usize>) = rest.iter().partition(|&&w| self.g.has_edge(p, w));
        let nbr_first = !(non.len() as u128 >= ramsey_bound(s, t - 1).unwrap_or(u128::MAX)
            && (nbr.len() as u128) < ramsey_bound(s - 1, t).unwrap_or(u128::MAX));
        for side in if nbr_first { [true, false] } else { [false, true] } {
            let hit = if side {
                self.find(&nbr, s - 1, t).map(|f| match f {
                    Found::Clique(mut c) => {
                        c.push(p);
                        Found::Clique(c)
                    }
                    other => other,
                })
            } else {
                self.find(&non, s, t - 1).map(|f| match f {
                    Found::Independent(mut i) => {
                        i.push(p);
                        Found::Independent(i)
                    }
                    other => other,
                })
            };
            if hit.is_some() {
                return hit;
            }
            if self.nodes > self.budget {
                return None;
            }
        }
        self.find(rest, s, t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        assert_eq!(ramsey_induced(&SimpleGraph::complete(6), 3), RamseyOutcome::Clique(vec![0, 1, 2]));
        assert_eq!(ramsey_induced(&SimpleGraph::cycle(5), 3), RamseyOutcome::NotFound);
        assert_eq!(ramsey_induced(&SimpleGraph::cycle(6), 3), RamseyOutcome::Independent(vec![0, 2, 4]));
    }
}
