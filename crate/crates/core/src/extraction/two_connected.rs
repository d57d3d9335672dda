//! 2-connected hosts: a `K_{2,r}` or a long cycle.

use crate::connectivity::{disjoint_paths, meets_class};
use crate::containment::MinorEmbedding;
use crate::error::{Error, Result};
use crate::families::{generate, theorem_tags, FamilyId, FamilyTag};
use crate::graph::SimpleGraph;
use crate::partition::{BranchPartition, Contracted};
use crate::search::{Budget, SearchOutcome};

use super::bounds::f1;
use super::connected::{connected_traced, RAMSEY_BUDGET};
use super::hamiltonian::{hamiltonian_traced, HamiltonianOutcome};
use super::paths::cycle_of_length;
use super::ramsey::{ramsey_search, RamseySet};
use super::{certify, lift_parts, search_families, Step, StepOutcome, LIFT_BUDGET, WIDE_LIFT_BUDGET};

pub(crate) const CYCLE_BUDGET: Budget = Budget(400_000);

#[derive(Debug, Clone)]
pub enum CycleOrK2r {
    Cycle(MinorEmbedding),
    K2r(MinorEmbedding),
    Insufficient(String),
}

/// Two vertices joined by the most internally disjoint paths that have an
/// interior, with those interiors.
pub(crate) fn best_k2(g: &SimpleGraph, want: usize) -> Option<(usize, usize, Vec<Vec<usize>>)> {
    let mut cand: Vec<usize> = (0..g.order()).collect();
    cand.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    cand.truncate(14);
    let mut best: Option<(usize, usize, Vec<Vec<usize>>)> = None;
    for (i, &a) in cand.iter().enumerate() {
        for &b in &cand[i + 1..] {
            let bound = g.degree(a).min(g.degree(b));
            if best.as_ref().is_some_and(|x| x.2.len() >= bound) {
                continue;
            }
            let inner: Vec<Vec<usize>> = disjoint_paths(g, a, b, g.order())
                .into_iter()
                .filter(|p| p.len() >= 3)
                .map(|p| p[1..p.len() - 1].to_vec())
                .collect();
            if best.as_ref().is_none_or(|x| inner.len() > x.2.len()) {
                best = Some((a.min(b), a.max(b), inner));
                if best.as_ref().unwrap().2.len() >= want {
                    return best;
                }
            }
        }
    }
    best
}

fn k2r_embedding(g: &SimpleGraph, a: usize, b: usize, inner: &[Vec<usize>]) -> Result<MinorEmbedding> {
    let target = generate(FamilyId::bipartite(2, inner.len()))?;
    let mut sets = vec![vec![a], vec![b]];
    sets.extend(inner.iter().cloned());
    MinorEmbedding::from_branch_sets(g, &target, sets)
}

fn cycle_embedding(g: &SimpleGraph, cycle: &[usize], r: usize) -> Result<MinorEmbedding> {
    let mut sets: Vec<Vec<usize>> = cycle[..r - 1].iter().map(|&v| vec![v]).collect();
    sets.push(cycle[r - 1..].to_vec());
    MinorEmbedding::from_branch_sets(g, &SimpleGraph::cycle(r), sets)
}

/// `C_r` or `K_{2,r}` as a minor of a 2-connected graph.
pub fn cycle_or_k2r(g: &SimpleGraph, r: usize) -> Result<CycleOrK2r> {
    if !meets_class(g, 2) {
        return Err(Error::NotTwoConnected);
    }
    if r < 3 {
        return Err(Error::ParameterOutOfRange(format!("r must exceed 2, got {r}")));
    }
    let cycle = cycle_of_length(g, r, CYCLE_BUDGET);
    if cycle.len() >= r {
        return Ok(CycleOrK2r::Cycle(cycle_embedding(g, &cycle, r)?));
    }
    if let Some((a, b, inner)) = best_k2(g, r) {
        if inner.len() >= r {
            return Ok(CycleOrK2r::K2r(k2r_embedding(g, a, b, &inner[..r])?));
        }
    }
    Ok(CycleOrK2r::Insufficient(format!("longest cycle found has {} vertices", cycle.len())))
}

/// `K'_{2,k}`, `C_k`, `F_k` or `K_k`, or else a 3-connected parallel minor
/// of order at least `q`.
pub fn two_connected_step(g: &SimpleGraph, k: usize, q: usize) -> Result<Step> {
    if !meets_class(g, 2) {
        return Err(Error::NotTwoConnected);
    }
    if k < 3 || q < 3 {
        return Err(Error::ParameterOutOfRange(format!("need k, q > 2, got k = {k}, q = {q}")));
    }
    let mut trace = Vec::new();
    let outcome = two_connected_traced(g, k, q, &mut trace)?;
    Ok(Step::new(outcome, trace))
}

pub(crate) fn two_connected_traced(g: &SimpleGraph, k: usize, q: usize, trace: &mut Vec<String>) -> Result<StepOutcome> {
    let r = f1(k + 1).map_or(usize::MAX, |v| usize::try_from(v).unwrap_or(usize::MAX));
    let k2 = best_k2(g, r);
    let width = k2.as_ref().map_or(0, |x| x.2.len());
    trace.push(format!("two-connected: largest K_(2,r) found has r = {width}, f1(k+1) = {r}"));
    if width >= r {
        if let Some(out) = k2_case(g, k2.as_ref().unwrap(), k, trace)? {
            return Ok(out);
        }
    }
    let second = cycle_case(g, k, q, trace)?;
    if let StepOutcome::Family(_) = second {
        return Ok(second);
    }
    if width > k && width < r {
        if let Some(out) = k2_case(g, k2.as_ref().unwrap(), k, trace)? {
            return Ok(out);
        }
    }
    Ok(second)
}

/// Case 1: both hubs of `K_{2,r}` see every other vertex of `H`.
fn k2_case(
    g: &SimpleGraph,
    (a, b, inner): &(usize, usize, Vec<Vec<usize>>),
    k: usize,
    trace: &mut Vec<String>,
) -> Result<Option<StepOutcome>> {
    trace.push(format!("two-connected: case 1, K_(2,{})", inner.len()));
    let emb = k2r_embedding(g, *a, *b, inner)?;
    let h = Contracted::new(g, emb.extend_to_partition(g)?)?;
    let (rest, kept) = h.graph.without_vertices(&[0, 1]);
    let found = match ramsey_search(&rest, k + 1, RAMSEY_BUDGET) {
        SearchOutcome::Found(f) => f,
        _ => {
            trace.push("two-connected: case 1, no induced clique or independent set".into());
            return Ok(None);
        }
    };
    let n = h.graph.order();
    let (id, assign) = match found {
        RamseySet::Clique(c) => {
            trace.push(format!("two-connected: case 1, clique of {} in H - v - w", k + 1));
            let mut assign = vec![0; n];
            for (i, &x) in c[..k - 1].iter().enumerate() {
                assign[kept[x]] = i + 1;
            }
            (FamilyId::new(FamilyTag::Clique, k), assign)
        }
        RamseySet::Independent(x) => {
            trace.push(format!("two-connected: case 1, independent set of {} in H - v - w", k + 1));
            // v absorbs everything but w and k of the independent vertices;
            // the spare one makes v and w adjacent.
            let mut assign = vec![0; n];
            assign[1] = 1;
            for (i, &y) in x[1..].iter().enumerate() {
                assign[kept[y]] = i + 2;
            }
            (FamilyId::new(FamilyTag::K2kPrime, k), assign)
        }
    };
    let out = h.refine_assignment(&assign)?;
    Ok(certify(&out, id).map(StepOutcome::Family))
}

/// Case 2: a long cycle, a high-degree vertex on it, a fan, and the
/// connected step on the fan's path.
fn cycle_case(g: &SimpleGraph, k: usize, q: usize, trace: &mut Vec<String>) -> Result<StepOutcome> {
    let cycle = cycle_of_length(g, g.order(), CYCLE_BUDGET);
    let len = cycle.len();
    trace.push(format!("two-connected: case 2, cycle C_{len}"));
    if len < 3 {
        return Ok(StepOutcome::Insufficient("case 2: no cycle found".into()));
    }
    let emb = MinorEmbedding::from_branch_sets(g, &SimpleGraph::cycle(len), cycle.iter().map(|&v| vec![v]).collect())?;
    let h = Contracted::new(g, emb.extend_to_partition(g)?)?;
    let hcycle: Vec<usize> = (0..len).collect();
    let top = (len - 1).min(4 * k);
    let mut last = StepOutcome::Insufficient(format!("case 2: cycle of {len} too short for k = {k}"));
    for d in (k.max(3)..=top).rev() {
        let mut inner_trace = Vec::new();
        match hamiltonian_traced(&h.graph, &hcycle, k, d, &mut inner_trace)? {
            HamiltonianOutcome::Cycle(cert) => {
                trace.append(&mut inner_trace);
                let out = h.refine(&cert.partition);
                trace.push(format!("two-connected: case 2, C_{k} with d = {d}"));
                return Ok(certify(&out, cert.family).map_or_else(
                    || StepOutcome::Insufficient("cycle lift failed".into()),
                    StepOutcome::Family,
                ));
            }
            HamiltonianOutcome::HighDegree { contracted, vertex, .. } => {
                trace.append(&mut inner_trace);
                trace.push(format!("two-connected: case 2, degree {} with d = {d}", contracted.graph.degree(vertex)));
                let hc = h.refine(&contracted.partition);
                return fan_case(&hc, &contracted.partition, vertex, k, q, trace);
            }
            HamiltonianOutcome::Insufficient(reason) => {
                last = StepOutcome::Insufficient(format!("case 2: {reason}"));
            }
        }
    }
    Ok(last)
}

/// Arcs of a cycle `0..len` listed in cyclic order, starting at part `x`.
pub(crate) fn arc_order(partition: &BranchPartition, x: usize) -> Vec<usize> {
    let mut order: Vec<usize> = (0..partition.len()).collect();
    order.sort_by_key(|&p| partition.parts()[p][0]);
    let at = order.iter().position(|&p| p == x).expect("x is a part");
    order.rotate_left(at);
    order
}

/// Splits the cycle after `x` into segments holding one neighbour of `x`
/// each, giving a fan with hub `x`, then runs the connected step on the path.
fn fan_case(hc: &Contracted, arcs: &BranchPartition, x: usize, k: usize, q: usize, trace: &mut Vec<String>) -> Result<StepOutcome> {
    let order = arc_order(arcs, x);
    let ys = &order[1..];
    let hits: Vec<usize> = (0..ys.len()).filter(|&i| hc.graph.has_edge(x, ys[i])).collect();
    let mut assign = vec![0; hc.graph.order()];
    for (i, &y) in ys.iter().enumerate() {
        assign[y] = hits.partition_point(|&p| p <= i).max(1);
    }
    let fan = hc.refine_assignment(&assign)?;
    let s = fan.graph.order() - 1;
    trace.push(format!("two-connected: case 2, fan F_{s}"));
    let (rest, kept) = fan.graph.without_vertices(&[0]);
    let inner = connected_traced(&rest, k, q.saturating_sub(1).max(3), trace)?;
    lift_by_hub(&fan, 0, &kept, inner, k, 2, trace)
}

/// Lifts a result found on `h − hub` (vertex `i` of the smaller graph is
/// `kept[i]`) back to `h`, aiming for the class-`class` list at `k`. The
/// mapped family is tried first.
pub(crate) fn lift_by_hub(
    h: &Contracted,
    hub: usize,
    kept: &[usize],
    inner: StepOutcome,
    k: usize,
    class: usize,
    trace: &mut Vec<String>,
) -> Result<StepOutcome> {
    match inner {
        StepOutcome::Family(cert) => {
            let parts = lift_parts(cert.partition.parts(), kept, &[hub]);
            let lifted = h.refine(&BranchPartition::new(&h.graph, parts)?);
            let mapped = hub_lift(cert.family.tag, class);
            let rest: Vec<FamilyId> = theorem_tags(class)?
                .iter()
                .filter(|t| !mapped.contains(t))
                .map(|&t| FamilyId::new(t, k))
                .collect();
            let mapped: Vec<FamilyId> = mapped.iter().map(|&t| FamilyId::new(t, k)).collect();
            // The mapped family is usually there, so it gets the wide budget.
            let found = search_families(&lifted, &mapped, WIDE_LIFT_BUDGET).or_else(|| search_families(&lifted, &rest, LIFT_BUDGET));
            match found {
                Some((id, out)) => {
                    trace.push(format!("lift: {} plus v gives {id}", cert.family));
                    Ok(certify(&out, id).map_or_else(
                        || StepOutcome::Insufficient("lift certificate failed".into()),
                        StepOutcome::Family,
                    ))
                }
                None => Ok(StepOutcome::Insufficient(format!("lift of {} found no listed family", cert.family))),
            }
        }
        StepOutcome::Minor(m) => {
            let parts = lift_parts(m.partition.parts(), kept, &[hub]);
            let lifted = h.refine(&BranchPartition::new(&h.graph, parts)?);
            trace.push(format!("lift: minor plus v has order {}", lifted.graph.order()));
            Ok(StepOutcome::Minor(lifted))
        }
        other => Ok(other),
    }
}

/// Families to try after adding a dominating vertex, in preference order.
pub(crate) fn hub_lift(tag: FamilyTag, class: usize) -> Vec<FamilyTag> {
    use FamilyTag::*;
    let mapped = match (class, tag) {
        (2, Star) => K2kPrime,
        (2, Path) | (2, Cycle) => Fan,
        (3, K2kPrime) => K3kPrime,
        (3, Cycle) => Wheel,
        (3, Fan) => DoubleFan,
        (4, K3kPrime) => K4kPrime,
        (4, Wheel) => DoubleWheel,
        (4, DoubleFan) => TripleFan,
        _ => Clique,
    };
    let mut out = vec![mapped];
    if class == 4 && tag == Wheel {
        out.push(DoubleWheelAxle);
    }
    if !out.contains(&Clique) {
        out.push(Clique);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn family(g: &SimpleGraph, k: usize, q: usize) -> Option<FamilyId> {
        let step = two_connected_step(g, k, q).unwrap();
        match step.outcome {
            StepOutcome::Family(c) => {
                assert!(c.verify(g), "{:?}", step.trace);
                Some(c.family)
            }
            _ => None,
        }
    }

    #[test]
    fn fan_cycle_and_k2prime() {
        let fan = generate(FamilyId::new(FamilyTag::Fan, 6)).unwrap();
        assert_eq!(family(&fan, 6, 100), Some(FamilyId::new(FamilyTag::Fan, 6)));
        assert_eq!(family(&SimpleGraph::cycle(30), 6, 10), Some(FamilyId::new(FamilyTag::Cycle, 6)));
        let k2 = generate(FamilyId::new(FamilyTag::K2kPrime, 20)).unwrap();
        assert_eq!(family(&k2, 5, 1000), Some(FamilyId::new(FamilyTag::K2kPrime, 5)));
    }

    #[test]
    fn cycle_or_k2r_examples() {
        assert!(matches!(cycle_or_k2r(&SimpleGraph::cycle(10), 7).unwrap(), CycleOrK2r::Cycle(_)));
        let k29 = generate(FamilyId::bipartite(2, 9)).unwrap();
        let CycleOrK2r::K2r(e) = cycle_or_k2r(&k29, 6).unwrap() else { panic!() };
        assert!(e.verify(&k29, &generate(FamilyId::bipartite(2, 6)).unwrap()));
        let prism = SimpleGraph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)]).unwrap();
        let CycleOrK2r::Cycle(e) = cycle_or_k2r(&prism, 6).unwrap() else { panic!() };
        assert!(e.verify(&prism, &SimpleGraph::cycle(6)));
    }
}
