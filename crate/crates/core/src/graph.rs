//! Immutable labeled simple graphs.
//!
//! Vertices are dense ids `0..n`. Adjacency is kept twice: as sorted
//! neighbor lists for iteration and as a flat boolean matrix for constant
//! time edge queries. Graphs never change after construction; every
//! operation that contracts or deletes builds a new value.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    n: usize,
    adj: Vec<Vec<usize>>,
    matrix: Vec<bool>,
    labels: Option<Vec<String>>,
}

impl SimpleGraph {
    /// Edgeless graph of order `n`.
    pub fn empty(n: usize) -> Self {
        SimpleGraph {
            n,
            adj: vec![Vec::new(); n],
            matrix: vec![false; n * n],
            labels: None,
        }
    }

    /// Builds a graph from an edge list, rejecting loops and repeated edges.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = SimpleGraph::empty(n);
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::Loop(u));
            }
            if g.matrix[u * n + v] {
                return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
            }
            g.insert_edge(u, v);
        }
        g.sort_lists();
        Ok(g)
    }

    /// Builds a graph from an edge list, dropping loops and repeated edges.
    /// This is the simplification step of a contraction.
    pub fn from_edges_simplified<I>(n: usize, edges: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = SimpleGraph::empty(n);
        for (u, v) in edges {
            assert!(u < n && v < n, "edge {u}-{v} out of range for order {n}");
            if u != v && !g.matrix[u * n + v] {
                g.insert_edge(u, v);
            }
        }
        g.sort_lists();
        g
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        SimpleGraph::from_edges_simplified(n, edges)
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        SimpleGraph::from_edges_simplified(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub fn path(n: usize) -> Self {
        SimpleGraph::from_edges_simplified(n, (1..n).map(|i| (i - 1, i)))
    }

    /// The Petersen graph: outer 5-cycle 0..5, inner pentagram 5..10.
    pub fn petersen() -> Self {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        SimpleGraph::from_edges_simplified(10, edges)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::ParameterOutOfRange(format!(
                "{} labels for a graph of order {}",
                labels.len(),
                self.n
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.n,
            })
        }
    }

    fn insert_edge(&mut self, u: usize, v: usize) {
        self.matrix[u * self.n + v] = true;
        self.matrix[v * self.n + u] = true;
        self.adj[u].push(v);
        self.adj[v].push(u);
    }

    fn sort_lists(&mut self) {
        for list in &mut self.adj {
            list.sort_unstable();
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.matrix[u * self.n + v]
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v].as_str())
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// Vertex of maximum degree, smallest id on ties.
    pub fn max_degree_vertex(&self) -> Option<usize> {
        (0..self.n).max_by_key(|&v| (self.degree(v), std::cmp::Reverse(v)))
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.adj[u]
                .iter()
                .copied()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// Subgraph induced by `vertices`; vertex `i` of the result is `vertices[i]`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> SimpleGraph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let edges = vertices.iter().enumerate().flat_map(|(i, &v)| {
            let index = &index;
            self.adj[v]
                .iter()
                .filter_map(move |&w| (index[w] != usize::MAX && index[w] > i).then(|| (i, index[w])))
        });
        let mut g = SimpleGraph::from_edges_simplified(vertices.len(), edges.collect::<Vec<_>>());
        if let Some(labels) = &self.labels {
            g.labels = Some(vertices.iter().map(|&v| labels[v].clone()).collect());
        }
        g
    }

    /// `G - removed`, returning the subgraph and the surviving original ids.
    pub fn without_vertices(&self, removed: &[usize]) -> (SimpleGraph, Vec<usize>) {
        let mut gone = vec![false; self.n];
        for &v in removed {
            gone[v] = true;
        }
        let keep: Vec<usize> = (0..self.n).filter(|&v| !gone[v]).collect();
        (self.induced_subgraph(&keep), keep)
    }

    /// Renames vertex `v` to `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> SimpleGraph {
        let edges: Vec<_> = self.edges().map(|(u, v)| (perm[u], perm[v])).collect();
        SimpleGraph::from_edges_simplified(self.n, edges)
    }

    pub fn with_edge(&self, u: usize, v: usize) -> SimpleGraph {
        let mut edges: Vec<_> = self.edges().collect();
        edges.push((u, v));
        let mut g = SimpleGraph::from_edges_simplified(self.n, edges);
        g.labels = self.labels.clone();
        g
    }

    pub fn without_edge(&self, u: usize, v: usize) -> SimpleGraph {
        let edges: Vec<_> = self
            .edges()
            .filter(|&(a, b)| !((a, b) == (u, v) || (a, b) == (v, u)))
            .collect();
        let mut g = SimpleGraph::from_edges_simplified(self.n, edges);
        g.labels = self.labels.clone();
        g
    }

    /// Breadth-first order from `root`, visiting neighbors in increasing id.
    pub fn bfs_order(&self, root: usize) -> Vec<usize> {
        let mut seen = vec![false; self.n];
        let mut order = Vec::with_capacity(self.n);
        let mut queue = VecDeque::from([root]);
        seen[root] = true;
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        order
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut comp = Vec::new();
            let mut stack = vec![s];
            seen[s] = true;
            while let Some(v) = stack.pop() {
                comp.push(v);
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.bfs_order(0).len() == self.n
    }

    /// Whether `set` induces a connected subgraph. The empty set is not connected.
    pub fn is_connected_set(&self, set: &[usize]) -> bool {
        let Some(&first) = set.first() else {
            return false;
        };
        let mut inside = vec![false; self.n];
        for &v in set {
            inside[v] = true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![first];
        seen[first] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &self.adj[v] {
                if inside[w] && !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == set.len()
    }

    pub fn complement(&self) -> SimpleGraph {
        let n = self.n;
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        let edges: Vec<_> = edges.filter(|&(u, v)| !self.has_edge(u, v)).collect();
        SimpleGraph::from_edges_simplified(n, edges)
    }

    /// Whether `cycle` lists every vertex once with consecutive entries adjacent.
    pub fn is_hamilton_cycle(&self, cycle: &[usize]) -> bool {
        if cycle.len() != self.n || self.n < 3 {
            return false;
        }
        let mut seen = vec![false; self.n];
        for &v in cycle {
            if v >= self.n || seen[v] {
                return false;
            }
            seen[v] = true;
        }
        (0..self.n).all(|i| self.has_edge(cycle[i], cycle[(i + 1) % self.n]))
    }
}

impl fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimpleGraph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

/// Serialized adjacency form used for debugging output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdjacencyJson {
    pub order: usize,
    pub adjacency: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl From<&SimpleGraph> for AdjacencyJson {
    fn from(g: &SimpleGraph) -> Self {
        AdjacencyJson {
            order: g.n,
            adjacency: g.adj.clone(),
            labels: g.labels.clone(),
        }
    }
}

impl TryFrom<AdjacencyJson> for SimpleGraph {
    type Error = Error;

    fn try_from(j: AdjacencyJson) -> Result<Self> {
        let mut edges = Vec::new();
        for (u, list) in j.adjacency.iter().enumerate() {
            for &v in list {
                if v >= j.order {
                    return Err(Error::VertexOutOfRange {
                        vertex: v,
                        order: j.order,
                    });
                }
                if !j.adjacency[v].contains(&u) {
                    return Err(Error::ParameterOutOfRange(format!(
                        "adjacency is not symmetric at {u}-{v}"
                    )));
                }
                if u < v {
                    edges.push((u, v));
                } else if u == v {
                    return Err(Error::Loop(u));
                }
            }
        }
        let g = SimpleGraph::from_edges(j.order, &edges)?;
        match j.labels {
            Some(l) => g.with_labels(l),
            None => Ok(g),
        }
    }
}

/// Edge-list text form: first line `n m`, then one `u v` pair per line.
pub fn to_edge_list(g: &SimpleGraph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for (u, v) in g.edges() {
        match g.labels() {
            Some(l) => out.push_str(&format!("{u} {v} # {} {}\n", l[u], l[v])),
            None => out.push_str(&format!("{u} {v}\n")),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_loops_and_duplicates() {
        assert_eq!(SimpleGraph::from_edges(3, &[(1, 1)]), Err(Error::Loop(1)));
        assert_eq!(
            SimpleGraph::from_edges(3, &[(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge(0, 1))
        );
        assert!(matches!(
            SimpleGraph::from_edges(3, &[(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, .. })
        ));
    }

    #[test]
    fn basic_counts() {
        let p = SimpleGraph::petersen();
        assert_eq!(p.order(), 10);
        assert_eq!(p.size(), 15);
        assert!((0..10).all(|v| p.degree(v) == 3));
        assert_eq!(SimpleGraph::complete(5).size(), 10);
        assert_eq!(SimpleGraph::cycle(7).size(), 7);
        assert_eq!(SimpleGraph::path(1).size(), 0);
    }

    #[test]
    fn induced_and_components() {
        let c6 = SimpleGraph::cycle(6);
        let (g, keep) = c6.without_vertices(&[0, 3]);
        assert_eq!(keep, vec![1, 2, 4, 5]);
        assert_eq!(g.components(), vec![vec![0, 1], vec![2, 3]]);
        assert!(!g.is_connected());
        assert!(c6.is_connected_set(&[0, 1, 5]));
        assert!(!c6.is_connected_set(&[0, 2]));
    }

    #[test]
    fn hamilton_cycle_check() {
        let c5 = SimpleGraph::cycle(5);
        assert!(c5.is_hamilton_cycle(&[0, 1, 2, 3, 4]));
        assert!(c5.is_hamilton_cycle(&[2, 1, 0, 4, 3]));
        assert!(!c5.is_hamilton_cycle(&[0, 2, 1, 3, 4]));
    }

    #[test]
    fn json_round_trip() {
        let g = SimpleGraph::petersen();
        let j = AdjacencyJson::from(&g);
        let text = serde_json::to_string(&j).unwrap();
        let back: AdjacencyJson = serde_json::from_str(&text).unwrap();
        assert_eq!(SimpleGraph::try_from(back).unwrap(), g);
    }
}
