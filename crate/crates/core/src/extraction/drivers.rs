//! Extraction drivers for connectivity classes 1 to 4.
//!
//! Each class reduces to the one below: find a large structured minor `H`,
//! drop its highest-degree vertex `v`, extract from `H − v` with a larger
//! parameter and lift the answer back through `v`. Class 1 runs the
//! connected step, then the two-connected step at `2k`, and halves.
//!
//! Results are certificates against the caller's graph; `Insufficient`
//! reports the step that stalled. A host of at most [`SMALL_HOST`] vertices
//! falls back to direct search of the list when the structured route stalls.

use serde_json::{json, Value};

use crate::connectivity::{is_internally_4_connected, meets_class};
use crate::containment::{find_parallel_minor, MinorEmbedding};
use crate::error::{Error, Result};
use crate::families::{generate, theorem_list, theorem_tags, FamilyId, FamilyTag};
use crate::graph::SimpleGraph;
use crate::partition::{BranchPartition, Contracted};
use crate::search::SearchOutcome;

use super::connected::{best_star, connected_traced, star_case};
use super::finders::{find_double_wheel, find_ladder, k4q_or_dq, ladder_pairs, wheel_or_k3r};
use super::hamiltonian::{hamiltonian_traced, HamiltonianOutcome};
use super::two_connected::{lift_by_hub, two_connected_traced};
use super::{certify, search_families, Certificate, StepOutcome, DIRECT_BUDGET, LIFT_BUDGET};

/// Hosts up to this order fall back to direct search.
pub const SMALL_HOST: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExtractionResult {
    Family(Certificate),
    Insufficient(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtractionOutcome {
    pub class: usize,
    pub k: usize,
    pub result: ExtractionResult,
    pub trace: Vec<String>,
}

impl ExtractionOutcome {
    pub fn certificate(&self) -> Option<&Certificate> {
        match &self.result {
            ExtractionResult::Family(c) => Some(c),
            ExtractionResult::Insufficient(_) => None,
        }
    }

    /// `{"version":1,"family":..,"k":..,"partition":..,"trace":..}`; an
    /// insufficient run has `"family": null` and a `"reason"`.
    pub fn to_json(&self) -> Value {
        match &self.result {
            ExtractionResult::Family(c) => {
                let mut v = json!({
                    "version": 1,
                    "class": self.class,
                    "family": c.family.tag.name(),
                    "k": c.family.k,
                    "partition": c.partition.parts(),
                    "trace": self.trace,
                });
                if c.family.a != 0 {
                    v["a"] = json!(c.family.a);
                }
                v
            }
            ExtractionResult::Insufficient(reason) => json!({
                "version": 1,
                "class": self.class,
                "family": null,
                "k": self.k,
                "reason": reason,
                "trace": self.trace,
            }),
        }
    }
}

fn outcome(g: &SimpleGraph, class: usize, k: usize, out: StepOutcome, trace: Vec<String>) -> ExtractionOutcome {
    let result = match out {
        StepOutcome::Family(cert) => {
            debug_assert!(cert.verify(g), "driver produced an invalid certificate");
            debug_assert!(theorem_list(class, k).unwrap().contains(&cert.family));
            ExtractionResult::Family(cert)
        }
        StepOutcome::Minor(_) => ExtractionResult::Insufficient("stopped at an intermediate minor".into()),
        StepOutcome::Insufficient(r) => ExtractionResult::Insufficient(r),
    };
    ExtractionOutcome { class, k, result, trace }
}

fn check_k(class: usize, k: usize) -> Result<()> {
    theorem_list(class, k).map(|_| ())
}

/// `K_{1,k}`, `C_k`, `P_k` or `K_k` from a connected graph.
pub fn extract_1c(g: &SimpleGraph, k: usize) -> Result<ExtractionOutcome> {
    check_k(1, k)?;
    if !meets_class(g, 1) {
        return Err(Error::Disconnected);
    }
    let mut trace = Vec::new();
    let out = run_1c(g, k, &mut trace)?;
    Ok(outcome(g, 1, k, out, trace))
}

/// `K'_{2,k}`, `C_k`, `F_k` or `K_k` from a 2-connected graph.
pub fn extract_2c(g: &SimpleGraph, k: usize) -> Result<ExtractionOutcome> {
    check_k(2, k)?;
    if !meets_class(g, 2) {
        return Err(Error::NotTwoConnected);
    }
    let mut trace = Vec::new();
    let out = run_2c(g, k, &mut trace)?;
    Ok(outcome(g, 2, k, out, trace))
}

/// `K'_{3,k}`, `W_k`, `DF_k` or `K_k` from a 3-connected graph.
pub fn extract_3c(g: &SimpleGraph, k: usize) -> Result<ExtractionOutcome> {
    check_k(3, k)?;
    if !meets_class(g, 3) {
        return Err(Error::NotThreeConnected);
    }
    let mut trace = Vec::new();
    let out = run_3c(g, k, &mut trace)?;
    Ok(outcome(g, 3, k, out, trace))
}

/// `K'_{4,k}`, `D_k`, `D'_k`, `TF_k`, `M_k`, `Z_k` or `K_k` from an
/// internally 4-connected graph.
pub fn extract_4c(g: &SimpleGraph, k: usize) -> Result<ExtractionOutcome> {
    check_k(4, k)?;
    if !is_internally_4_connected(g) {
        return Err(Error::NotInternallyFourConnected);
    }
    let mut trace = Vec::new();
    let out = run_4c(g, k, &mut trace)?;
    Ok(outcome(g, 4, k, out, trace))
}

/// Dispatches on the connectivity class.
pub fn extract(g: &SimpleGraph, c: usize, k: usize) -> Result<ExtractionOutcome> {
    match c {
        1 => extract_1c(g, k),
        2 => extract_2c(g, k),
        3 => extract_3c(g, k),
        4 => extract_4c(g, k),
        _ => Err(Error::ParameterOutOfRange(format!("connectivity class {c} not in 1..=4"))),
    }
}

fn is_family(out: &StepOutcome) -> bool {
    matches!(out, StepOutcome::Family(_))
}

/// Direct search of the class list on a small host.
fn direct(g: &SimpleGraph, class: usize, k: usize, trace: &mut Vec<String>) -> Option<StepOutcome> {
    for id in theorem_list(class, k).ok()? {
        let Ok(target) = generate(id) else { continue };
        if target.order() > g.order() {
            continue;
        }
        if let SearchOutcome::Found(p) = find_parallel_minor(g, &target, DIRECT_BUDGET) {
            trace.push(format!("direct search on {} vertices finds {id}", g.order()));
            let c = Contracted::new(g, p).ok()?;
            return certify(&c, id).map(StepOutcome::Family);
        }
    }
    None
}

fn with_fallback(
    g: &SimpleGraph,
    class: usize,
    k: usize,
    out: StepOutcome,
    trace: &mut Vec<String>,
) -> StepOutcome {
    if is_family(&out) || g.order() > SMALL_HOST {
        return out;
    }
    direct(g, class, k, trace).unwrap_or(out)
}

/// Contracts `c` to a member of the class list at `k`, trying `first` in
/// order before the rest of the list.
fn settle(c: &Contracted, first: &[FamilyTag], class: usize, k: usize) -> Option<Certificate> {
    let mut tags = first.to_vec();
    for &t in theorem_tags(class).ok()? {
        if !tags.contains(&t) {
            tags.push(t);
        }
    }
    let ids: Vec<FamilyId> = tags
        .into_iter()
        .map(|t| FamilyId::new(t, k))
        .filter(|id| id.k >= id.tag.min_k())
        .collect();
    let (id, out) = search_families(c, &ids, LIFT_BUDGET)?;
    certify(&out, id)
}

/// Halves a class-2 member at `2k` down to the class-1 list at `k`:
/// `K'_{2,2k} → K_{1,k}`, `C_{2k} → C_k`, `F_{2k} → K_{1,k}` and
/// `K_{2k} → K_k`. `c` is the certificate's contracted view.
fn halve(c: &Contracted, family: FamilyId, k: usize) -> Option<Certificate> {
    let n = c.graph.order();
    let (id, assign): (FamilyId, Vec<usize>) = match family.tag {
        FamilyTag::K2kPrime if family.k >= 2 * k => {
            // Both hubs and the first k leaves form the centre.
            let assign = (0..n).map(|v| if v < 2 + k { 0 } else { v - 1 - k }).collect();
            (FamilyId::new(FamilyTag::Star, k), assign)
        }
        FamilyTag::Cycle if family.k == 2 * k => (FamilyId::new(FamilyTag::Cycle, k), (0..n).map(|v| v / 2).collect()),
        FamilyTag::Fan if family.k >= 2 * k => {
            // The hub takes every odd path vertex; even ones stay as leaves.
            let assign = (0..n)
                .map(|v| if v < 2 * k && v % 2 == 0 { v / 2 + 1 } else { 0 })
                .collect();
            (FamilyId::new(FamilyTag::Star, k), assign)
        }
        FamilyTag::Clique if family.k >= k => {
            let assign = (0..n).map(|v| if v + 1 < k { v + 1 } else { 0 }).collect();
            (FamilyId::new(FamilyTag::Clique, k), assign)
        }
        _ => return settle(c, &[], 1, k),
    };
    c.refine_assignment(&assign)
        .ok()
        .and_then(|out| certify(&out, id))
        .or_else(|| settle(c, &[id.tag], 1, k))
}

pub(crate) fn run_1c(g: &SimpleGraph, k: usize, trace: &mut Vec<String>) -> Result<StepOutcome> {
    if k <= 2 {
        return Ok(direct(g, 1, k, trace).unwrap_or_else(|| StepOutcome::Insufficient("direct search failed".into())));
    }
    let out = match connected_traced(g, k, k, trace)? {
        StepOutcome::Minor(h) => from_block(&h, k, trace)?,
        other => other,
    };
    Ok(with_fallback(g, 1, k, out, trace))
}

/// Class 1 continued on a 2-connected block `h`: the two-connected step at
/// `2k` (or at `k` when the block is too small), then halving.
fn from_block(h: &Contracted, k: usize, trace: &mut Vec<String>) -> Result<StepOutcome> {
    let mut last = StepOutcome::Insufficient("block too small".into());
    let mut params = vec![2 * k];
    if k >= 3 {
        params.push(k);
    }
    for kk in params {
        if h.graph.order() < kk {
            continue;
        }
        trace.push(format!("one-connected: two-connected step on a block of {} at {kk}", h.graph.order()));
        match two_connected_traced(&h.graph, kk, kk + 3, trace)? {
            StepOutcome::Family(cert) => {
                let c = h.refine(&cert.partition);
                let got = if kk == 2 * k { halve(&c, cert.family, k) } else { settle(&c, &[], 1, k) };
                if let Some(cert2) = got {
                    trace.push(format!("one-connected: {} gives {}", cert.family, cert2.family));
                    return Ok(StepOutcome::Family(cert2));
                }
                last = StepOutcome::Insufficient(format!("no class-1 member inside {}", cert.family));
            }
            StepOutcome::Minor(h3) => {
                let h3 = h.refine(&h3.partition);
                trace.push(format!("one-connected: star pivot on a 3-connected minor of {}", h3.graph.order()));
                let (centre, leaves) = best_star(&h3.graph, k);
                if leaves.len() >= k {
                    if let Some(StepOutcome::Family(cert)) = star_case(&h3.graph, &centre, &leaves, k, trace)? {
                        let c = h3.refine(&cert.partition);
                        if let Some(cert) = certify(&c, cert.family) {
                            return Ok(StepOutcome::Family(cert));
                        }
                    }
                }
                last = StepOutcome::Insufficient("star pivot failed".into());
            }
            other => last = other,
        }
    }
    Ok(last)
}

/// Extension of a minor embedding, its highest-degree quotient vertex `v`,
/// and `H − v` with the kept-vertex map.
fn pivot(g: &SimpleGraph, emb: &MinorEmbedding) -> Result<(Contracted, usize, SimpleGraph, Vec<usize>)> {
    let h = Contracted::new(g, emb.extend_to_partition(g)?)?;
    let v = (0..h.graph.order())
        .max_by_key(|&x| (h.graph.degree(x), std::cmp::Reverse(x)))
        .ok_or(Error::Disconnected)?;
    let (sub, kept) = h.graph.without_vertices(&[v]);
    Ok((h, v, sub, kept))
}

pub(crate) fn run_2c(g: &SimpleGraph, k: usize, trace: &mut Vec<String>) -> Result<StepOutcome> {
    let out = match two_connected_traced(g, k, k + 3, trace)? {
        StepOutcome::Minor(h3) => {
            trace.push(format!("two-connected driver: 3-connected minor of order {}", h3.graph.order()));
            match wheel_or_k3r(&h3.graph) {
                Some((id, emb)) => {
                    trace.push(format!("two-connected driver: {id} inside it"));
                    let (h, v, sub, kept) = pivot(&h3.graph, &emb)?;
                    let h = h3.refine(&h.partition);
                    if sub.is_connected() && sub.order() >= 1 {
                        let inner = run_1c(&sub, k + 2, trace)?;
                        lift_by_hub(&h, v, &kept, inner, k, 2, trace)?
                    } else {
                        StepOutcome::Insufficient("H - v is disconnected".into())
                    }
                }
                None => StepOutcome::Insufficient("no wheel or K_(3,r) found in the 3-connected minor".into()),
            }
        }
        other => other,
    };
    Ok(with_fallback(g, 2, k, out, trace))
}

pub(crate) fn run_3c(g: &SimpleGraph, k: usize, trace: &mut Vec<String>) -> Result<StepOutcome> {
    let out = match wheel_or_k3r(g) {
        Some((id, emb)) => {
            trace.push(format!("three-connected: {id} found"));
            let (h, v, sub, kept) = pivot(g, &emb)?;
            if meets_class(&sub, 2) {
                let inner = run_2c(&sub, k + 2, trace)?;
                lift_by_hub(&h, v, &kept, inner, k, 3, trace)?
            } else {
                StepOutcome::Insufficient("H - v is not 2-connected".into())
            }
        }
        None => StepOutcome::Insufficient("no wheel or K_(3,r) found".into()),
    };
    Ok(with_fallback(g, 3, k, out, trace))
}

pub(crate) fn run_4c(g: &SimpleGraph, k: usize, trace: &mut Vec<String>) -> Result<StepOutcome> {
    let mut out = StepOutcome::Insufficient("no K_(4,q), double wheel or ladder found".into());
    if let Some((id, emb)) = k4q_or_dq(g) {
        trace.push(format!("four-connected: {id} found"));
        if id.k >= k + 3 {
            out = branch_a(g, &emb, k, trace)?;
        } else {
            out = StepOutcome::Insufficient(format!("{id} is below k + 3"));
        }
    }
    if !is_family(&out) {
        if let Some(order) = find_ladder(g) {
            trace.push(format!("four-connected: ladder of {} vertices", order.len()));
            let ladder = ladder_branch(g, &order, k, trace)?;
            if is_family(&ladder) {
                out = ladder;
            }
        }
    }
    Ok(with_fallback(g, 4, k, out, trace))
}

/// `K_{4,q}` or `D_q` with `q ≥ k + 3`: pivot and recurse into class 3.
fn branch_a(g: &SimpleGraph, emb: &MinorEmbedding, k: usize, trace: &mut Vec<String>) -> Result<StepOutcome> {
    let (h, v, sub, kept) = pivot(g, emb)?;
    if !meets_class(&sub, 3) {
        return Ok(StepOutcome::Insufficient("H - v is not 3-connected".into()));
    }
    let inner = run_3c(&sub, k + 3, trace)?;
    lift_by_hub(&h, v, &kept, inner, k, 4, trace)
}

/// Assignment of ladder positions to `U_j` (`j`) and `V_j` (`arcs + j`),
/// one pair per ladder rung collapsed into arcs of the rung cycle. Arcs are
/// listed in cyclic order. For an odd ladder the pairs of the arc that
/// wraps past the twist are swapped so every set stays connected.
fn paired_assignment(pairs: &[(usize, usize, Option<usize>)], arcs: &[Vec<usize>], n: usize, odd: bool) -> Vec<usize> {
    let r = pairs.len();
    let a = arcs.len();
    let mut assign = vec![0; n];
    for (j, arc) in arcs.iter().enumerate() {
        let wraps = arc.contains(&0) && arc.contains(&(r - 1));
        for &i in arc {
            let (mut u, mut v, extra) = pairs[i];
            if odd && wraps && i > r / 2 {
                std::mem::swap(&mut u, &mut v);
            }
            assign[u] = j;
            assign[v] = a + j;
            if let Some(x) = extra {
                assign[x] = a + j;
            }
        }
    }
    assign
}

/// Parts of a cycle contraction, in cyclic order.
fn cyclic_arcs(p: &BranchPartition) -> Vec<Vec<usize>> {
    let mut arcs: Vec<Vec<usize>> = p.parts().to_vec();
    arcs.sort_by_key(|a| a.iter().copied().min());
    arcs
}

/// Square-of-cycle ladder: collapse rungs, contract the rung cycle to
/// `C_{2k}` or a high-degree vertex, then pair back up.
fn ladder_branch(g: &SimpleGraph, order: &[usize], k: usize, trace: &mut Vec<String>) -> Result<StepOutcome> {
    let n = order.len();
    let odd = n % 2 == 1;
    let square = if odd {
        generate(FamilyId::new(FamilyTag::MoebiusZigzag, (n - 1) / 2))?
    } else {
        generate(FamilyId::new(FamilyTag::Zigzag, n / 2))?
    };
    let emb = MinorEmbedding::from_branch_sets(g, &square, order.iter().map(|&v| vec![v]).collect())?;
    let h = Contracted::new(g, emb.extend_to_partition(g)?)?;
    let positions: Vec<usize> = (0..n).collect();
    let pairs = ladder_pairs(&positions);
    let r = pairs.len();
    if r < 2 * k {
        return Ok(StepOutcome::Insufficient(format!("ladder has {r} rungs, fewer than 2k")));
    }
    let mut collapse = vec![0; n];
    for (i, &(u, v, extra)) in pairs.iter().enumerate() {
        collapse[u] = i;
        collapse[v] = i;
        if let Some(x) = extra {
            collapse[x] = i;
        }
    }
    let hc = h.refine_assignment(&collapse)?;
    let cycle: Vec<usize> = (0..r).collect();
    let top = (4 * (k + 3)).min(r - 1);
    let mut last = StepOutcome::Insufficient("rung cycle gave nothing".into());
    for d in (3..=top).rev() {
        let mut inner = Vec::new();
        match hamiltonian_traced(&hc.graph, &cycle, 2 * k, d, &mut inner)? {
            HamiltonianOutcome::Cycle(cert) => {
                trace.append(&mut inner);
                trace.push(format!("four-connected: rung cycle contracts to C_{} with d = {d}", 2 * k));
                let arcs = cyclic_arcs(&cert.partition);
                let assign = paired_assignment(&pairs, &arcs, n, odd);
                let Ok(paired) = h.refine_assignment(&assign) else {
                    return Ok(StepOutcome::Insufficient("paired contraction is not connected".into()));
                };
                return Ok(zigzag_cleanup(&paired, k, odd, trace));
            }
            HamiltonianOutcome::HighDegree { contracted, vertex, .. } => {
                trace.append(&mut inner);
                trace.push(format!(
                    "four-connected: rung cycle vertex of degree {} with d = {d}",
                    contracted.graph.degree(vertex)
                ));
                let arcs = cyclic_arcs(&contracted.partition);
                let assign = paired_assignment(&pairs, &arcs, n, odd);
                let Ok(paired) = h.refine_assignment(&assign) else {
                    return Ok(StepOutcome::Insufficient("paired contraction is not connected".into()));
                };
                return double_wheel_branch(g, &paired, k, trace);
            }
            HamiltonianOutcome::Insufficient(reason) => last = StepOutcome::Insufficient(reason),
        }
    }
    Ok(last)
}

/// From the paired contraction of `C_{2k}` arcs: merge `U_{2j−1} ∪ U_{2j}`
/// and `V_{2j} ∪ V_{2j+1}` to reach `Z_k`. Odd ladders try the same merge
/// and then a bounded search.
fn zigzag_cleanup(paired: &Contracted, k: usize, odd: bool, trace: &mut Vec<String>) -> StepOutcome {
    let a = 2 * k;
    let assign: Vec<usize> = (0..2 * a)
        .map(|x| if x < a { x / 2 } else { k + ((x - a + a - 1) % a) / 2 })
        .collect();
    let first = if odd { FamilyTag::MoebiusZigzag } else { FamilyTag::Zigzag };
    if let Ok(out) = paired.refine_assignment(&assign) {
        for tag in [first, FamilyTag::Zigzag] {
            if let Some(cert) = certify(&out, FamilyId::new(tag, k)) {
                trace.push(format!("four-connected: paired merge gives {}", cert.family));
                return StepOutcome::Family(cert);
            }
        }
    }
    match settle(paired, &[first], 4, k) {
        Some(cert) => {
            trace.push(format!("four-connected: search on the paired contraction gives {}", cert.family));
            StepOutcome::Family(cert)
        }
        None => StepOutcome::Insufficient("paired contraction holds no listed family".into()),
    }
}

/// High degree on the rung cycle: look for a large double wheel in the
/// paired contraction and continue as for `D_q`.
fn double_wheel_branch(g: &SimpleGraph, paired: &Contracted, k: usize, trace: &mut Vec<String>) -> Result<StepOutcome> {
    let Some((id, emb)) = find_double_wheel(&paired.graph) else {
        return Ok(StepOutcome::Insufficient("no double wheel in the paired contraction".into()));
    };
    trace.push(format!("four-connected: {id} in the paired contraction"));
    if id.k < k + 3 {
        return Ok(StepOutcome::Insufficient(format!("{id} is below k + 3")));
    }
    let sets: Vec<Vec<usize>> = emb
        .branch_sets
        .iter()
        .map(|set| {
            let mut s: Vec<usize> = set.iter().flat_map(|&x| paired.partition.parts()[x].iter().copied()).collect();
            s.sort_unstable();
            s
        })
        .collect();
    let lifted = MinorEmbedding::from_branch_sets(g, &generate(id)?, sets)?;
    branch_a(g, &lifted, k, trace)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(tag: FamilyTag, k: usize) -> SimpleGraph {
        generate(FamilyId::new(tag, k)).unwrap()
    }

    fn got(o: &ExtractionOutcome) -> FamilyId {
        o.certificate().unwrap_or_else(|| panic!("{:?}", o)).family
    }

    #[test]
    fn one_connected_examples() {
        let o = extract_1c(&SimpleGraph::path(50), 5).unwrap();
        assert_eq!(got(&o), FamilyId::new(FamilyTag::Path, 5));
        let o = extract_1c(&fam(FamilyTag::Star, 50), 5).unwrap();
        assert_eq!(got(&o), FamilyId::new(FamilyTag::Star, 5));
    }

    #[test]
    fn two_connected_examples() {
        let o = extract_2c(&SimpleGraph::cycle(15), 5).unwrap();
        assert_eq!(got(&o), FamilyId::new(FamilyTag::Cycle, 5));
        let o = extract_2c(&fam(FamilyTag::K2kPrime, 30), 6).unwrap();
        assert_eq!(got(&o), FamilyId::new(FamilyTag::K2kPrime, 6));
        let o = extract_2c(&fam(FamilyTag::Wheel, 20), 5).unwrap();
        assert!(o.certificate().is_some(), "{o:?}");
    }

    #[test]
    fn three_connected_examples() {
        let o = extract_3c(&fam(FamilyTag::Wheel, 10), 5).unwrap();
        assert_eq!(got(&o), FamilyId::new(FamilyTag::Wheel, 5));
        let o = extract_3c(&fam(FamilyTag::K3kPrime, 20), 5).unwrap();
        assert_eq!(got(&o), FamilyId::new(FamilyTag::K3kPrime, 5));
        let o = extract_3c(&SimpleGraph::complete(20), 6).unwrap();
        assert_eq!(got(&o), FamilyId::new(FamilyTag::Clique, 6));
    }

    #[test]
    fn four_connected_examples() {
        let o = extract_4c(&fam(FamilyTag::Zigzag, 20), 5).unwrap();
        assert_eq!(got(&o), FamilyId::new(FamilyTag::Zigzag, 5));
        let o = extract_4c(&fam(FamilyTag::DoubleWheel, 20), 6).unwrap();
        assert_eq!(got(&o), FamilyId::new(FamilyTag::DoubleWheel, 6));
    }

    #[test]
    fn preconditions() {
        assert_eq!(extract_2c(&SimpleGraph::path(5), 3).unwrap_err(), Error::NotTwoConnected);
        assert_eq!(extract_1c(&SimpleGraph::empty(2), 3).unwrap_err(), Error::Disconnected);
        assert!(matches!(extract_3c(&SimpleGraph::complete(6), 3), Err(Error::ParameterOutOfRange(_))));
    }

    #[test]
    fn json_shape() {
        let o = extract_1c(&SimpleGraph::path(10), 4).unwrap();
        let v = o.to_json();
        assert_eq!(v["version"], 1);
        assert_eq!(v["family"], "path");
        assert_eq!(v["k"], 4);
    }
}
