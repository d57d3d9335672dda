//! Branch partitions and quotients.
//!
//! A [`BranchPartition`] splits every vertex of a host into connected parts.
//! Contracting each part to a single vertex and simplifying gives the
//! quotient, which is exactly a parallel minor of the host. Composition of
//! partitions lets a chain of contractions be collapsed into one certificate
//! against the original host.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BranchPartition {
    parts: Vec<Vec<usize>>,
    #[serde(skip)]
    part_of: Vec<usize>,
}

impl BranchPartition {
    /// Validates `parts` against `host`: disjoint, nonempty, covering and connected.
    pub fn new(host: &SimpleGraph, parts: Vec<Vec<usize>>) -> Result<Self> {
        let p = Self::unchecked(host.order(), parts)?;
        p.check_connected(host)?;
        Ok(p)
    }

    /// Checks disjointness and coverage only.
    fn unchecked(n: usize, mut parts: Vec<Vec<usize>>) -> Result<Self> {
        let mut part_of = vec![usize::MAX; n];
        for (i, part) in parts.iter_mut().enumerate() {
            if part.is_empty() {
                return Err(Error::InvalidPartition(format!("part {i} is empty")));
            }
            part.sort_unstable();
            for &v in part.iter() {
                if v >= n {
                    return Err(Error::InvalidPartition(format!(
                        "vertex {v} out of range for order {n}"
                    )));
                }
                if part_of[v] != usize::MAX {
                    return Err(Error::InvalidPartition(format!(
                        "vertex {v} lies in parts {} and {i}",
                        part_of[v]
                    )));
                }
                part_of[v] = i;
            }
        }
        if let Some(v) = part_of.iter().position(|&p| p == usize::MAX) {
            return Err(Error::InvalidPartition(format!("vertex {v} is in no part")));
        }
        Ok(BranchPartition { parts, part_of })
    }

    fn check_connected(&self, host: &SimpleGraph) -> Result<()> {
        for (i, part) in self.parts.iter().enumerate() {
            if !host.is_connected_set(part) {
                return Err(Error::InvalidPartition(format!(
                    "part {i} {part:?} is not connected"
                )));
            }
        }
        Ok(())
    }

    /// Builds a partition from a vertex-to-part map with parts numbered `0..`.
    pub fn from_assignment(host: &SimpleGraph, assignment: &[usize]) -> Result<Self> {
        if assignment.len() != host.order() {
            return Err(Error::InvalidPartition(format!(
                "assignment covers {} of {} vertices",
                assignment.len(),
                host.order()
            )));
        }
        let count = assignment.iter().map(|&a| a + 1).max().unwrap_or(0);
        let mut parts = vec![Vec::new(); count];
        for (v, &a) in assignment.iter().enumerate() {
            parts[a].push(v);
        }
        Self::new(host, parts)
    }

    pub fn identity(n: usize) -> Self {
        BranchPartition {
            parts: (0..n).map(|v| vec![v]).collect(),
            part_of: (0..n).collect(),
        }
    }

    /// Reattaches `part_of` after deserialization and revalidates.
    pub fn revalidate(self, host: &SimpleGraph) -> Result<Self> {
        Self::new(host, self.parts)
    }

    pub fn parts(&self) -> &[Vec<usize>] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn part_of(&self, v: usize) -> usize {
        self.part_of[v]
    }

    pub fn assignment(&self) -> &[usize] {
        &self.part_of
    }

    /// Partition of the host obtained by first applying `self` and then
    /// `inner`, a partition of the quotient's vertices.
    pub fn compose(&self, inner: &BranchPartition) -> BranchPartition {
        assert_eq!(inner.part_of.len(), self.parts.len(), "inner partition has wrong order");
        let parts: Vec<Vec<usize>> = inner
            .parts
            .iter()
            .map(|group| {
                let mut merged: Vec<usize> =
                    group.iter().flat_map(|&q| self.parts[q].iter().copied()).collect();
                merged.sort_unstable();
                merged
            })
            .collect();
        let n = self.part_of.len();
        BranchPartition::unchecked(n, parts).expect("composition of partitions is a partition")
    }

    /// Parts sorted by smallest member; the canonical order for comparisons.
    pub fn normalized(&self) -> BranchPartition {
        let mut parts = self.parts.clone();
        parts.sort();
        BranchPartition::unchecked(self.part_of.len(), parts).expect("reordering keeps validity")
    }

    /// Relabels parts so that quotient vertex `i` becomes `order[i]`-th part.
    pub fn reordered(&self, order: &[usize]) -> BranchPartition {
        let parts = order.iter().map(|&i| self.parts[i].clone()).collect();
        BranchPartition::unchecked(self.part_of.len(), parts).expect("reordering keeps validity")
    }
}

/// Which host edges were merged into each quotient edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeProvenance {
    pub partition: BranchPartition,
    pub quotient: SimpleGraph,
    class_of: BTreeMap<(usize, usize), Vec<(usize, usize)>>,
}

impl EdgeProvenance {
    /// Host edges lying between the parts of quotient vertices `a` and `b`.
    pub fn class(&self, a: usize, b: usize) -> &[(usize, usize)] {
        self.class_of
            .get(&(a.min(b), a.max(b)))
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }

    pub fn classes(&self) -> impl Iterator<Item = (&(usize, usize), &Vec<(usize, usize)>)> {
        self.class_of.iter()
    }

    /// Provenance after contracting further by `inner`, a partition of the
    /// quotient. Host edges inside a merged part drop out.
    pub fn refine(&self, inner: &BranchPartition) -> EdgeProvenance {
        let mut class_of: BTreeMap<(usize, usize), Vec<(usize, usize)>> = BTreeMap::new();
        for (&(a, b), edges) in &self.class_of {
            let (x, y) = (inner.part_of(a), inner.part_of(b));
            if x != y {
                class_of.entry((x.min(y), x.max(y))).or_default().extend_from_slice(edges);
            }
        }
        for edges in class_of.values_mut() {
            edges.sort_unstable();
        }
        EdgeProvenance {
            partition: self.partition.compose(inner),
            quotient: quotient_graph(&self.quotient, inner),
            class_of,
        }
    }
}

/// Simple quotient of `host` by `partition`, with full edge provenance.
pub fn quotient(host: &SimpleGraph, partition: &BranchPartition) -> Result<(SimpleGraph, EdgeProvenance)> {
    if partition.part_of.len() != host.order() {
        return Err(Error::InvalidPartition(format!(
            "partition covers {} vertices, host has {}",
            partition.part_of.len(),
            host.order()
        )));
    }
    partition.check_connected(host)?;
    let mut class_of: BTreeMap<(usize, usize), Vec<(usize, usize)>> = BTreeMap::new();
    for (u, v) in host.edges() {
        let (a, b) = (partition.part_of(u), partition.part_of(v));
        if a != b {
            class_of.entry((a.min(b), a.max(b))).or_default().push((u, v));
        }
    }
    let q = SimpleGraph::from_edges_simplified(partition.len(), class_of.keys().copied().collect::<Vec<_>>());
    Ok((
        q.clone(),
        EdgeProvenance {
            partition: partition.clone(),
            quotient: q,
            class_of,
        },
    ))
}

/// Quotient graph only; panics on an invalid partition.
pub(crate) fn quotient_graph(host: &SimpleGraph, partition: &BranchPartition) -> SimpleGraph {
    let edges: Vec<_> = host
        .edges()
        .map(|(u, v)| (partition.part_of(u), partition.part_of(v)))
        .collect();
    SimpleGraph::from_edges_simplified(partition.len(), edges)
}

/// A parallel minor of a fixed host together with the partition witnessing it.
///
/// Extraction code threads these through each proof step: contracting inside
/// the quotient is expressed as a partition of the quotient and composed back
/// onto the host.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Contracted {
    pub partition: BranchPartition,
    pub graph: SimpleGraph,
}

impl Contracted {
    pub fn identity(host: &SimpleGraph) -> Self {
        Contracted {
            partition: BranchPartition::identity(host.order()),
            graph: host.clone(),
        }
    }

    pub fn new(host: &SimpleGraph, partition: BranchPartition) -> Result<Self> {
        let (graph, _) = quotient(host, &partition)?;
        Ok(Contracted { partition, graph })
    }

    /// Contracts further: `inner` partitions the current quotient.
    pub fn refine(&self, inner: &BranchPartition) -> Contracted {
        let graph = quotient_graph(&self.graph, inner);
        Contracted {
            partition: self.partition.compose(inner),
            graph,
        }
    }

    /// Contracts further using a quotient-vertex assignment.
    pub fn refine_assignment(&self, assignment: &[usize]) -> Result<Contracted> {
        let inner = BranchPartition::from_assignment(&self.graph, assignment)?;
        Ok(self.refine(&inner))
    }

    /// Renumbers quotient vertices so the `i`-th becomes old vertex `order[i]`.
    pub fn reordered(&self, order: &[usize]) -> Contracted {
        let partition = self.partition.reordered(order);
        let mut inverse = vec![0; order.len()];
        for (i, &o) in order.iter().enumerate() {
            inverse[o] = i;
        }
        Contracted {
            partition,
            graph: self.graph.permuted(&inverse),
        }
    }

    pub fn provenance(&self, host: &SimpleGraph) -> EdgeProvenance {
        quotient(host, &self.partition).expect("contracted partition stays valid").1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c4() -> SimpleGraph {
        SimpleGraph::cycle(4)
    }

    #[test]
    fn identity_quotient_is_host() {
        let g = c4();
        let (q, prov) = quotient(&g, &BranchPartition::identity(4)).unwrap();
        assert_eq!(q, g);
        assert!(prov.classes().all(|(_, c)| c.len() == 1));
    }

    #[test]
    fn c4_to_triangle() {
        let g = c4();
        let p = BranchPartition::new(&g, vec![vec![0, 1], vec![2], vec![3]]).unwrap();
        let (q, _) = quotient(&g, &p).unwrap();
        assert_eq!(q, SimpleGraph::complete(3));
    }

    #[test]
    fn k4_pairs_give_k2_with_class_four() {
        let g = SimpleGraph::complete(4);
        let p = BranchPartition::new(&g, vec![vec![0, 1], vec![2, 3]]).unwrap();
        let (q, prov) = quotient(&g, &p).unwrap();
        assert_eq!(q, SimpleGraph::complete(2));
        assert_eq!(prov.class(0, 1).len(), 4);
        assert_eq!(prov.class(1, 0).len(), 4);
    }

    #[test]
    fn invalid_partitions_rejected() {
        let g = c4();
        let bad = [
            vec![vec![0, 1], vec![1, 2], vec![3]],
            vec![vec![0, 1], vec![2]],
            vec![vec![0, 2], vec![1], vec![3]],
            vec![vec![0, 1, 2, 3], vec![]],
        ];
        for parts in bad {
            assert!(matches!(BranchPartition::new(&g, parts), Err(Error::InvalidPartition(_))));
        }
    }

    #[test]
    fn composition_equals_coarser_partition() {
        let g = SimpleGraph::cycle(6);
        let first = BranchPartition::new(&g, vec![vec![0, 1], vec![2], vec![3, 4], vec![5]]).unwrap();
        let step = Contracted::new(&g, first).unwrap();
        let inner = BranchPartition::new(&step.graph, vec![vec![0, 1], vec![2, 3]]).unwrap();
        let two = step.refine(&inner);
        let direct = BranchPartition::new(&g, vec![vec![0, 1, 2], vec![3, 4, 5]]).unwrap();
        assert_eq!(two.partition.normalized(), direct.normalized());
        assert_eq!(two.graph, quotient(&g, &direct).unwrap().0);
    }
}
