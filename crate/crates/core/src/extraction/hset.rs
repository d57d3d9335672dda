//! H-sets: a Hamiltonian parallel minor with a marked path and a growing
//! parallel class.
//!
//! Conventions: `cycle` lists quotient vertices in Hamilton-cycle order,
//! `path` runs along the cycle and every vertex but its last has degree two,
//! and `e` is a quotient edge of `path`. `s` holds host edges, all lying in
//! the parallel class of `e`.

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::partition::{BranchPartition, EdgeProvenance};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HSetWeight {
    pub sigma: usize,
    pub pi: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HSet {
    pub provenance: EdgeProvenance,
    pub cycle: Vec<usize>,
    pub s: Vec<(usize, usize)>,
    pub path: Vec<usize>,
    pub e: (usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Improvement {
    PathLongEnough,
    Improved(HSet),
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::PreconditionViolated(msg.into())
}

impl HSet {
    /// Builds and validates an H-set.
    pub fn new(
        provenance: EdgeProvenance,
        cycle: Vec<usize>,
        s: Vec<(usize, usize)>,
        path: Vec<usize>,
        e: (usize, usize),
    ) -> Result<Self> {
        let h = HSet {
            provenance,
            cycle,
            s,
            path,
            e,
        };
        h.validate()?;
        Ok(h)
    }

    pub fn graph(&self) -> &SimpleGraph {
        &self.provenance.quotient
    }

    pub fn weight(&self) -> HSetWeight {
        HSetWeight {
            sigma: self.s.len(),
            pi: self.path.len(),
        }
    }

    fn cycle_positions(&self) -> Vec<usize> {
        let mut pos = vec![usize::MAX; self.graph().order()];
        for (i, &v) in self.cycle.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }

    pub fn validate(&self) -> Result<()> {
        let m = self.graph();
        let n = m.order();
        if !m.is_hamilton_cycle(&self.cycle) {
            return Err(Error::NotHamiltonianCycle(format!("{:?}", self.cycle)));
        }
        let pos = self.cycle_positions();
        if self.path.len() < 2 || self.path.len() > n {
            return Err(invalid(format!("path has {} vertices", self.path.len())));
        }
        if self.path.iter().any(|&v| v >= n) {
            return Err(invalid("path leaves the quotient"));
        }
        let step = (pos[self.path[1]] + n - pos[self.path[0]]) % n;
        if step != 1 && step != n - 1 {
            return Err(invalid("path does not follow the cycle"));
        }
        for w in self.path.windows(2) {
            if (pos[w[1]] + n - pos[w[0]]) % n != step {
                return Err(invalid("path does not follow the cycle"));
            }
        }
        let mut seen = self.path.clone();
        seen.sort_unstable();
        seen.dedup();
        if seen.len() != self.path.len() {
            return Err(invalid("path repeats a vertex"));
        }
        if let Some(&v) = self.path[..self.path.len() - 1].iter().find(|&&v| m.degree(v) != 2) {
            return Err(invalid(format!("path vertex {v} has degree {}", m.degree(v))));
        }
        let (a, b) = self.e;
        if !self.path.windows(2).any(|w| (w[0], w[1]) == (a, b) || (w[0], w[1]) == (b, a)) {
            return Err(invalid(format!("e = {a}{b} is not an edge of the path")));
        }
        if self.s.is_empty() {
            return Err(invalid("S is empty"));
        }
        let class = self.provenance.class(a, b);
        let mut s = self.s.clone();
        s.sort_unstable();
        s.dedup();
        if s.len() != self.s.len() {
            return Err(invalid("S repeats an edge"));
        }
        if let Some(f) = self.s.iter().find(|f| !class.contains(f)) {
            return Err(invalid(format!("{f:?} is not parallel to e")));
        }
        Ok(())
    }

    /// Whether `self` is an H-minor of `other`: both over the same host, each
    /// part of `self` is an arc of `other`'s cycle, and consecutive parts on
    /// `self.cycle` are joined by an edge of `other.cycle`.
    pub fn is_h_minor_of(&self, other: &HSet) -> bool {
        let new = &self.provenance.partition;
        let old = &other.provenance.partition;
        if new.assignment().len() != old.assignment().len() {
            return false;
        }
        let n_old = other.cycle.len();
        // Which new part each old quotient vertex falls into.
        let mut lands = vec![usize::MAX; other.graph().order()];
        for (v, &q) in old.assignment().iter().enumerate() {
            let x = new.part_of(v);
            if lands[q] != usize::MAX && lands[q] != x {
                return false;
            }
            lands[q] = x;
        }
        // Each new part is one cyclic arc: count boundaries along the old cycle.
        let mut boundaries = vec![0usize; new.len()];
        for i in 0..n_old {
            let (a, b) = (lands[other.cycle[i]], lands[other.cycle[(i + 1) % n_old]]);
            if a != b {
                boundaries[a] += 1;
            }
        }
        if new.len() > 1 && boundaries.iter().any(|&c| c != 1) {
            return false;
        }
        let n_new = self.cycle.len();
        (0..n_new).all(|j| {
            let (x, y) = (self.cycle[j], self.cycle[(j + 1) % n_new]);
            (0..n_old).any(|i| {
                let (p, q) = (other.cycle[i], other.cycle[(i + 1) % n_old]);
                (lands[p], lands[q]) == (x, y) || (lands[p], lands[q]) == (y, x)
            })
        })
    }

    /// Cycle vertices listed so that the first `|P|` are the path in order.
    fn oriented(&self) -> Vec<usize> {
        let n = self.cycle.len();
        let pos = self.cycle_positions();
        let start = pos[self.path[0]];
        let forward = self.cycle[(start + 1) % n] == self.path[1];
        (0..n)
            .map(|i| {
                let j = if forward { (start + i) % n } else { (start + n - i) % n };
                self.cycle[j]
            })
            .collect()
    }
}

/// One improvement step, without the size preconditions.
///
/// The high end `v` of the path and its neighbours cut the cycle into
/// segments. If the longest one ends just before `v` the path grows by one
/// vertex; otherwise the segment's far end gives a new edge parallel to `e`.
pub fn hset_step(h: &HSet) -> Result<HSet> {
    let m = h.graph();
    let n = m.order();
    let pi = h.path.len();
    if pi >= n {
        return Err(invalid("path already covers the cycle"));
    }
    let rot = h.oriented();
    let mut pos = vec![0; n];
    for (i, &v) in rot.iter().enumerate() {
        pos[v] = i;
    }
    let vp = pi - 1;
    let mut marked: Vec<usize> = m.neighbors(rot[vp]).iter().map(|&w| pos[w]).collect();
    marked.push(vp);
    marked.sort_unstable();
    marked.dedup();
    debug_assert_eq!(&marked[..2], &[vp - 1, vp]);
    let last = *marked.last().unwrap();
    let wrap_len = vp - 1 + n - last;
    // Segments starting after the path: (marked[i], marked[i + 1]), i ≥ 2.
    let inner = marked[2..].windows(2).map(|w| (w[1] - w[0], w[0], w[1]));
    let best_inner = inner.fold(None, |best: Option<(usize, usize, usize)>, cand| match best {
        Some(b) if b.0 >= cand.0 => Some(b),
        _ => Some(cand),
    });

    let mut assign = vec![0; n];
    let (path, e, s) = match best_inner {
        Some((len, l, mm)) if len > wrap_len => {
            // Parts: A = mm..n ∪ 0..=a, B = a+1..=vp, L = pi..=l, then l+1..mm.
            let (x, y) = (pos[h.e.0], pos[h.e.1]);
            let a = x.min(y);
            for i in 0..n {
                assign[rot[i]] = if i >= mm || i <= a {
                    0
                } else if i <= vp {
                    1
                } else if i <= l {
                    2
                } else {
                    3 + (i - l - 1)
                };
            }
            let f = *h
                .provenance
                .class(rot[vp], rot[mm])
                .first()
                .expect("marked vertex is a neighbour");
            let mut s = h.s.clone();
            s.push(f);
            (vec![1, 0], (0, 1), s)
        }
        _ => {
            // Contract pi..=last into one vertex appended to the path.
            for i in 0..n {
                assign[rot[i]] = if i < pi {
                    i
                } else if i <= last {
                    pi
                } else {
                    i - (last - pi)
                };
            }
            let e = (assign[h.e.0], assign[h.e.1]);
            ((0..=pi).collect(), e, h.s.clone())
        }
    };
    let inner = BranchPartition::from_assignment(m, &assign)?;
    let provenance = h.provenance.refine(&inner);
    let cycle = (0..inner.len()).collect();
    let out = HSet {
        provenance,
        cycle,
        s,
        path,
        e,
    };
    debug_assert!(out.validate().is_ok(), "{:?}", out.validate());
    Ok(out)
}

/// Returns `PathLongEnough` when `|P| ≥ k`; otherwise requires `|M| > dk`
/// and `Δ(M) < d` and returns an H-minor of greater weight with
/// `|M'| > |M| / d`.
pub fn hset_improve(h: &HSet, d: usize, k: usize) -> Result<Improvement> {
    if h.path.len() >= k {
        return Ok(Improvement::PathLongEnough);
    }
    let n = h.graph().order();
    if n <= d.saturating_mul(k) {
        return Err(invalid(format!("|M| > dk fails: |M| = {n}, dk = {}", d * k)));
    }
    let delta = h.graph().max_degree();
    if delta >= d {
        return Err(invalid(format!("Δ(M) < d fails: Δ = {delta}, d = {d}")));
    }
    let next = hset_step(h)?;
    debug_assert!(next.weight() > h.weight() && next.graph().order() * d > n);
    Ok(Improvement::Improved(next))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::quotient;

    fn c8_chord() -> (SimpleGraph, HSet) {
        // v1..v8 are 0..7; chord v4 v8.
        let mut edges: Vec<_> = (0..8).map(|i| (i, (i + 1) % 8)).collect();
        edges.push((3, 7));
        let g = SimpleGraph::from_edges(8, &edges).unwrap();
        let (_, prov) = quotient(&g, &BranchPartition::identity(8)).unwrap();
        let h = HSet::new(prov, (0..8).collect(), vec![(0, 1)], vec![0, 1, 2, 3], (0, 1)).unwrap();
        (g, h)
    }

    #[test]
    fn example_needs_more_vertices() {
        let (_, h) = c8_chord();
        assert!(matches!(hset_improve(&h, 4, 5), Err(Error::PreconditionViolated(_))));
        let next = hset_step(&h).unwrap();
        assert_eq!(next.weight(), HSetWeight { sigma: 1, pi: 5 });
        assert_eq!(next.graph().order(), 5);
        assert!(next.is_h_minor_of(&h));
        let merged = &next.provenance.partition.parts()[4];
        assert_eq!(merged, &vec![4, 5, 6, 7]);
    }

    fn cycle_with_chords(n: usize, chords: &[(usize, usize)], path: Vec<usize>) -> HSet {
        let mut edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        edges.extend_from_slice(chords);
        let g = SimpleGraph::from_edges(n, &edges).unwrap();
        let (_, prov) = quotient(&g, &BranchPartition::identity(n)).unwrap();
        HSet::new(prov, (0..n).collect(), vec![(0, 1)], path, (0, 1)).unwrap()
    }

    #[test]
    fn longest_segment_decides_the_case() {
        // Segments after the path have length 3; the wrap segment has 4.
        let h = cycle_with_chords(12, &[(2, 6), (2, 9)], vec![0, 1, 2]);
        let next = hset_step(&h).unwrap();
        assert_eq!(next.weight(), HSetWeight { sigma: 1, pi: 4 });
        // Segment 5..10 has length 5 and beats the wrap segment.
        let h = cycle_with_chords(12, &[(2, 5), (2, 10)], vec![0, 1, 2]);
        let next = hset_step(&h).unwrap();
        assert_eq!(next.weight(), HSetWeight { sigma: 2, pi: 2 });
        assert!(next.s.contains(&(2, 10)));
        assert!(next.is_h_minor_of(&h));
    }
}
