//! Contracting edges of a Hamilton cycle until either a vertex of high
//! degree or a `C_k` appears.

use crate::error::{Error, Result};
use crate::families::{FamilyId, FamilyTag};
use crate::graph::SimpleGraph;
use crate::partition::{quotient, BranchPartition, Contracted};

use super::bounds::hset_rounds;
use super::hset::{hset_step, HSet};
use super::{certify, Certificate};

#[derive(Debug, Clone)]
pub enum HamiltonianOutcome {
    /// `C_k` as a parallel minor.
    Cycle(Certificate),
    /// Contracting `contracted_edges` (all on the cycle) gives a quotient in
    /// which `vertex` has at least `d` neighbours.
    HighDegree {
        contracted: Contracted,
        vertex: usize,
        contracted_edges: Vec<(usize, usize)>,
    },
    Insufficient(String),
}

fn cycle_edges_inside(cycle: &[usize], partition: &BranchPartition) -> Vec<(usize, usize)> {
    let n = cycle.len();
    (0..n)
        .map(|i| (cycle[i], cycle[(i + 1) % n]))
        .filter(|&(a, b)| partition.part_of(a) == partition.part_of(b))
        .map(|(a, b)| (a.min(b), a.max(b)))
        .collect()
}

fn high_degree(g: &SimpleGraph, cycle: &[usize], c: Contracted, vertex: usize) -> HamiltonianOutcome {
    let contracted_edges = cycle_edges_inside(cycle, &c.partition);
    HamiltonianOutcome::HighDegree {
        contracted: c,
        vertex,
        contracted_edges,
    }
    .checked(g)
}

impl HamiltonianOutcome {
    fn checked(self, g: &SimpleGraph) -> Self {
        if let HamiltonianOutcome::HighDegree { contracted, .. } = &self {
            debug_assert_eq!(quotient(g, &contracted.partition).unwrap().0, contracted.graph);
        }
        self
    }
}

/// `C_k` from host parts listed in cycle order.
fn cycle_certificate(g: &SimpleGraph, parts: Vec<Vec<usize>>, k: usize) -> Option<Certificate> {
    let p = BranchPartition::new(g, parts).ok()?;
    let c = Contracted::new(g, p).ok()?;
    certify(&c, FamilyId::new(FamilyTag::Cycle, k))
}

pub fn hamiltonian_step(g: &SimpleGraph, cycle: &[usize], k: usize, d: usize) -> Result<HamiltonianOutcome> {
    hamiltonian_traced(g, cycle, k, d, &mut Vec::new())
}

pub(crate) fn hamiltonian_traced(
    g: &SimpleGraph,
    cycle: &[usize],
    k: usize,
    d: usize,
    trace: &mut Vec<String>,
) -> Result<HamiltonianOutcome> {
    if !g.is_hamilton_cycle(cycle) {
        return Err(Error::NotHamiltonianCycle(format!("{cycle:?}")));
    }
    if k < 3 || d < 3 {
        return Err(Error::ParameterOutOfRange(format!("need k, d > 2, got k = {k}, d = {d}")));
    }
    let n = g.order();
    if let Some(v) = (0..n).find(|&v| g.degree(v) >= d) {
        trace.push(format!("hamiltonian: vertex {v} already has degree {}", g.degree(v)));
        return Ok(high_degree(g, cycle, Contracted::identity(g), v));
    }
    if n < k {
        return Ok(HamiltonianOutcome::Insufficient(format!("order {n} below k = {k}")));
    }
    if g.size() == n {
        trace.push("hamiltonian: graph is its cycle".into());
        let mut parts: Vec<Vec<usize>> = cycle[..k - 1].iter().map(|&v| vec![v]).collect();
        parts.push(cycle[k - 1..].to_vec());
        return Ok(cycle_certificate(g, parts, k).map_or_else(
            || HamiltonianOutcome::Insufficient("cycle contraction failed".into()),
            HamiltonianOutcome::Cycle,
        ));
    }

    // Reduce around v = cycle[0] to its longest segment.
    let mut pos = vec![0; n];
    for (i, &v) in cycle.iter().enumerate() {
        pos[v] = i;
    }
    let mut marked: Vec<usize> = g.neighbors(cycle[0]).iter().map(|&w| pos[w]).collect();
    marked.push(0);
    marked.sort_unstable();
    let (len, l, m) = marked
        .windows(2)
        .map(|w| (w[1] - w[0], w[0], w[1]))
        .fold((0, 0, 0), |best, cand| if cand.0 > best.0 { cand } else { best });
    if len < 2 {
        return Ok(HamiltonianOutcome::Insufficient(format!(
            "no segment of length 2 around vertex {}",
            cycle[0]
        )));
    }
    trace.push(format!("hamiltonian: reduce to segment {l}..{m} of length {len}"));
    let mut parts = vec![vec![cycle[0]], cycle[1..=l].to_vec()];
    parts.extend(cycle[l + 1..m].iter().map(|&v| vec![v]));
    parts.push(cycle[m..].to_vec());
    let partition = BranchPartition::new(g, parts)?;
    let (mq, provenance) = quotient(g, &partition)?;
    let qn = mq.order();
    let qcycle: Vec<usize> = (0..qn).collect();
    debug_assert!(mq.is_hamilton_cycle(&qcycle));

    let mut path = vec![0, 1];
    while mq.degree(*path.last().unwrap()) == 2 && path.len() < qn {
        path.push(path.len());
    }
    if path.len() == qn {
        // The reduced graph is a cycle.
        if qn < k {
            return Ok(HamiltonianOutcome::Insufficient(format!("reduced cycle has {qn} < k vertices")));
        }
        let c = Contracted {
            partition: provenance.partition.clone(),
            graph: mq,
        };
        return Ok(path_to_cycle(g, &c, &path, k));
    }
    let e_host = provenance.class(0, 1)[0];
    let mut h = HSet::new(provenance, qcycle, vec![e_host], path, (0, 1))?;

    for round in 0..hset_rounds(k, d) {
        let mgraph = h.graph();
        if let Some(v) = (0..mgraph.order()).find(|&v| mgraph.degree(v) >= d) {
            trace.push(format!("hamiltonian: round {round}, degree {} reached", mgraph.degree(v)));
            let c = Contracted {
                partition: h.provenance.partition.clone(),
                graph: mgraph.clone(),
            };
            return Ok(high_degree(g, cycle, c, v));
        }
        if h.path.len() >= k {
            trace.push(format!("hamiltonian: round {round}, path of {} vertices", h.path.len()));
            let c = Contracted {
                partition: h.provenance.partition.clone(),
                graph: mgraph.clone(),
            };
            return Ok(path_to_cycle(g, &c, &h.path, k));
        }
        if h.s.len() >= d {
            for end in [h.e.0, h.e.1] {
                let arc = h.provenance.partition.parts()[end].clone();
                let mut parts = vec![arc.clone()];
                parts.extend((0..n).filter(|v| !arc.contains(v)).map(|v| vec![v]));
                let c = Contracted::new(g, BranchPartition::new(g, parts)?)?;
                if c.graph.degree(0) >= d {
                    trace.push(format!("hamiltonian: round {round}, parallel class of {} edges", h.s.len()));
                    return Ok(high_degree(g, cycle, c, 0));
                }
            }
        }
        h = match hset_step(&h) {
            Ok(next) => next,
            Err(err) => return Ok(HamiltonianOutcome::Insufficient(format!("H-set step stalled: {err}"))),
        };
    }
    Ok(HamiltonianOutcome::Insufficient(format!(
        "no outcome after {} H-set rounds",
        hset_rounds(k, d)
    )))
}

/// `C_k` from a path of degree-2 quotient vertices: keep `path[..k-1]` and
/// merge the rest of the cycle, which is an arc.
fn path_to_cycle(g: &SimpleGraph, c: &Contracted, path: &[usize], k: usize) -> HamiltonianOutcome {
    let kept = &path[..k - 1];
    let mut assign = vec![k - 1; c.graph.order()];
    for (i, &v) in kept.iter().enumerate() {
        assign[v] = i;
    }
    let refined = match c.refine_assignment(&assign) {
        Ok(r) => r,
        Err(err) => return HamiltonianOutcome::Insufficient(format!("cycle contraction failed: {err}")),
    };
    match certify(&refined, FamilyId::new(FamilyTag::Cycle, k)) {
        Some(cert) => {
            debug_assert!(cert.verify(g));
            HamiltonianOutcome::Cycle(cert)
        }
        None => HamiltonianOutcome::Insufficient("contracted path did not give a cycle".into()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle_with_chords(n: usize, chords: &[(usize, usize)]) -> SimpleGraph {
        let mut edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        edges.extend_from_slice(chords);
        SimpleGraph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn bare_cycle() {
        let g = SimpleGraph::cycle(10);
        let cyc: Vec<usize> = (0..10).collect();
        let HamiltonianOutcome::Cycle(cert) = hamiltonian_step(&g, &cyc, 6, 3).unwrap() else { panic!() };
        assert!(cert.verify(&g));
        let inside = cycle_edges_inside(&cyc, &cert.partition);
        assert_eq!(inside.len(), 4);
    }

    #[test]
    fn degree_already_present() {
        let g = cycle_with_chords(6, &[(0, 2), (0, 3), (0, 4)]);
        let out = hamiltonian_step(&g, &(0..6).collect::<Vec<_>>(), 3, 4).unwrap();
        let HamiltonianOutcome::HighDegree { vertex, contracted_edges, .. } = out else { panic!() };
        assert_eq!((vertex, contracted_edges.len()), (0, 0));
        let g = cycle_with_chords(8, &[(0, 3), (0, 5)]);
        let out = hamiltonian_step(&g, &(0..8).collect::<Vec<_>>(), 8, 4).unwrap();
        assert!(matches!(out, HamiltonianOutcome::HighDegree { vertex: 0, .. }));
    }

    #[test]
    fn contracts_only_cycle_edges() {
        // Chords spaced along a long cycle, degree at most 3.
        let chords: Vec<_> = (0..10).map(|i| (4 * i, 4 * i + 2)).collect();
        let g = cycle_with_chords(40, &chords);
        let cyc: Vec<usize> = (0..40).collect();
        match hamiltonian_step(&g, &cyc, 5, 4).unwrap() {
            HamiltonianOutcome::Cycle(cert) => {
                assert!(cert.verify(&g));
                for part in cert.partition.parts() {
                    assert!(is_arc(part, 40));
                }
            }
            HamiltonianOutcome::HighDegree { contracted, vertex, .. } => {
                assert!(contracted.graph.degree(vertex) >= 4);
                for part in contracted.partition.parts() {
                    assert!(is_arc(part, 40));
                }
            }
            HamiltonianOutcome::Insufficient(r) => panic!("{r}"),
        }
    }

    fn is_arc(part: &[usize], n: usize) -> bool {
        let set: std::collections::BTreeSet<_> = part.iter().copied().collect();
        let starts = part.iter().filter(|&&v| !set.contains(&((v + n - 1) % n))).count();
        starts == 1 || part.len() == n
    }
}
