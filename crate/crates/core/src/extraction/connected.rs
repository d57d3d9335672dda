//! Connected hosts: a large star or a long path.

use crate::connectivity::blocks;
use crate::containment::MinorEmbedding;
use crate::error::{Error, Result};
use crate::families::{generate, FamilyId, FamilyTag};
use crate::graph::SimpleGraph;
use crate::partition::{BranchPartition, Contracted};
use crate::search::{Budget, SearchOutcome};

use super::bounds::f1;
use super::paths::path_of_length;
use super::ramsey::{ramsey_search, RamseySet};
use super::{absorb_into, certify, owner_parts, Step, StepOutcome};

pub(crate) const PATH_BUDGET: Budget = Budget(400_000);
pub(crate) const RAMSEY_BUDGET: Budget = Budget(400_000);

#[derive(Debug, Clone)]
pub enum StarOrPath {
    Star(MinorEmbedding),
    Path(MinorEmbedding),
    Insufficient(String),
}

/// A connected set `S` with many neighbours, grown greedily from the
/// highest-degree vertices. Returns `(S, N(S))`, both ascending; stops early
/// once `|N(S)| ≥ want`.
pub(crate) fn best_star(g: &SimpleGraph, want: usize) -> (Vec<usize>, Vec<usize>) {
    let n = g.order();
    let mut starts: Vec<usize> = (0..n).collect();
    starts.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut best: (Vec<usize>, Vec<usize>) = (Vec::new(), Vec::new());
    for &s in starts.iter().take(6) {
        let mut in_s = vec![false; n];
        let mut in_n = vec![false; n];
        in_s[s] = true;
        let mut set = vec![s];
        for &w in g.neighbors(s) {
            in_n[w] = true;
        }
        let mut count = g.degree(s);
        let mut local_best = (set.clone(), count);
        for _ in 0..n {
            if local_best.1 >= want {
                break;
            }
            let pick = (0..n)
                .filter(|&w| in_n[w])
                .map(|w| {
                    let fresh = g.neighbors(w).iter().filter(|&&x| !in_s[x] && !in_n[x]).count();
                    (fresh as isize - 1, w)
                })
                .max_by_key(|&(gain, w)| (gain, std::cmp::Reverse(w)));
            let Some((gain, w)) = pick else { break };
            if gain < 0 {
                break;
            }
            in_n[w] = false;
            in_s[w] = true;
            set.push(w);
            for &x in g.neighbors(w) {
                if !in_s[x] && !in_n[x] {
                    in_n[x] = true;
                }
            }
            count = (count as isize + gain) as usize;
            if count > local_best.1 {
                local_best = (set.clone(), count);
            }
        }
        if local_best.1 > best.1.len() {
            let mut centre = local_best.0;
            centre.sort_unstable();
            let leaves = neighbourhood(g, &centre);
            best = (centre, leaves);
            if best.1.len() >= want {
                break;
            }
        }
    }
    best
}

fn neighbourhood(g: &SimpleGraph, set: &[usize]) -> Vec<usize> {
    let mut inside = vec![false; g.order()];
    for &v in set {
        inside[v] = true;
    }
    let mut out: Vec<usize> = set.iter().flat_map(|&v| g.neighbors(v).iter().copied()).filter(|&w| !inside[w]).collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// `K_{1,r}` or `P_q` as a minor of a connected graph.
pub fn star_or_path_minor(g: &SimpleGraph, r: usize, q: usize) -> Result<StarOrPath> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let (centre, leaves) = best_star(g, r);
    if leaves.len() >= r {
        let star = generate(FamilyId::new(FamilyTag::Star, r))?;
        let mut sets = vec![centre];
        sets.extend(leaves[..r].iter().map(|&v| vec![v]));
        return Ok(StarOrPath::Star(MinorEmbedding::from_branch_sets(g, &star, sets)?));
    }
    let path = path_of_length(g, q, PATH_BUDGET);
    if q >= 1 && path.len() >= q {
        let target = SimpleGraph::path(q);
        let sets = path[..q].iter().map(|&v| vec![v]).collect();
        return Ok(StarOrPath::Path(MinorEmbedding::from_branch_sets(g, &target, sets)?));
    }
    Ok(StarOrPath::Insufficient(format!(
        "largest star found has {} leaves and longest path {} vertices",
        leaves.len(),
        path.len()
    )))
}

/// `K_{1,k}`, `P_k` or `K_k`, or else a 2-connected parallel minor of order
/// at least `l`.
pub fn connected_step(g: &SimpleGraph, k: usize, l: usize) -> Result<Step> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut trace = Vec::new();
    let outcome = connected_traced(g, k, l, &mut trace)?;
    Ok(Step::new(outcome, trace))
}

pub(crate) fn connected_traced(g: &SimpleGraph, k: usize, l: usize, trace: &mut Vec<String>) -> Result<StepOutcome> {
    let r = f1(k).map_or(usize::MAX, |v| usize::try_from(v).unwrap_or(usize::MAX));
    let (centre, leaves) = best_star(g, r.max(k));
    trace.push(format!("connected: largest star found has {} leaves, f1(k) = {r}", leaves.len()));
    if leaves.len() < r {
        trace.push(format!("connected: no K_(1,{r}) found"));
    }
    if leaves.len() >= r {
        if let Some(out) = star_case(g, &centre, &leaves, k, trace)? {
            return Ok(out);
        }
    }
    let second = path_case(g, k, l, trace)?;
    if let StepOutcome::Family(_) = second {
        return Ok(second);
    }
    if leaves.len() >= k && leaves.len() < r {
        if let Some(out) = star_case(g, &centre, &leaves, k, trace)? {
            return Ok(out);
        }
    }
    Ok(second)
}

/// Case 1: pivot on the centre of a star, Ramsey on the rest.
pub(crate) fn star_case(
    g: &SimpleGraph,
    centre: &[usize],
    leaves: &[usize],
    k: usize,
    trace: &mut Vec<String>,
) -> Result<Option<StepOutcome>> {
    let r = leaves.len();
    trace.push(format!("connected: case 1, star K_(1,{r})"));
    let star = generate(FamilyId::new(FamilyTag::Star, r))?;
    let mut sets = vec![centre.to_vec()];
    sets.extend(leaves.iter().map(|&v| vec![v]));
    let emb = MinorEmbedding::from_branch_sets(g, &star, sets)?;
    let h = Contracted::new(g, emb.extend_to_partition(g)?)?;
    let (rest, kept) = h.graph.without_vertices(&[0]);
    let found = match ramsey_search(&rest, k, RAMSEY_BUDGET) {
        SearchOutcome::Found(f) => f,
        _ => {
            trace.push("connected: case 1, no induced clique or independent set".into());
            return Ok(None);
        }
    };
    let (id, keep) = match found {
        RamseySet::Clique(c) => {
            trace.push(format!("connected: case 1, clique of {k} in H - v"));
            (FamilyId::new(FamilyTag::Clique, k), c[..k.saturating_sub(1)].to_vec())
        }
        RamseySet::Independent(i) => {
            trace.push(format!("connected: case 1, independent set of {k} in H - v"));
            (FamilyId::new(FamilyTag::Star, k), i)
        }
    };
    // Everything outside `keep` joins v, which is adjacent to all of H - v.
    let keep: Vec<usize> = keep.iter().map(|&x| kept[x]).collect();
    let mut assign = vec![0; h.graph.order()];
    for (i, &x) in keep.iter().enumerate() {
        assign[x] = i + 1;
    }
    let out = h.refine_assignment(&assign)?;
    Ok(certify(&out, id).map(StepOutcome::Family))
}

/// Case 2: a longest path, its block chain, then either a path through the
/// cut vertices or the largest block.
fn path_case(g: &SimpleGraph, k: usize, l: usize, trace: &mut Vec<String>) -> Result<StepOutcome> {
    let path = path_of_length(g, g.order(), PATH_BUDGET);
    let q = path.len();
    trace.push(format!("connected: case 2, path P_{q}"));
    let target = SimpleGraph::path(q);
    let sets = path.iter().map(|&v| vec![v]).collect();
    let emb = MinorEmbedding::from_branch_sets(g, &target, sets)?;
    let h = Contracted::new(g, emb.extend_to_partition(g)?)?;
    // Vertex i of H is path vertex i, so the blocks are intervals of 0..q.
    let (mut bl, cuts) = blocks(&h.graph);
    bl.sort_by_key(|b| b[0]);
    trace.push(format!("connected: case 2, {} cut vertices", cuts.len()));
    if !cuts.is_empty() && cuts.len() + 2 >= k && k >= 1 {
        // Parts [0, c1), [c1, c2), ..., {c_last}, (c_last, q): a path.
        let last = *cuts.last().unwrap();
        let mut assign = vec![0; q];
        let mut part = 0;
        for (v, slot) in assign.iter_mut().enumerate() {
            if v > 0 && (cuts.binary_search(&v).is_ok() || v == last + 1) {
                part += 1;
            }
            *slot = part.min(k - 1);
        }
        let out = h.refine_assignment(&assign)?;
        if let Some(cert) = certify(&out, FamilyId::new(FamilyTag::Path, k)) {
            trace.push(format!("connected: case 2, path P_{k} through cut vertices"));
            return Ok(StepOutcome::Family(cert));
        }
    }
    let Some(block) = bl.iter().filter(|b| b.len() >= 3).max_by_key(|b| (b.len(), std::cmp::Reverse(b[0]))) else {
        return Ok(StepOutcome::Insufficient("case 2: no 2-connected block".into()));
    };
    if block.len() < l {
        return Ok(StepOutcome::Insufficient(format!(
            "case 2: largest block has {} < l = {l} vertices",
            block.len()
        )));
    }
    let seeds: Vec<Vec<usize>> = block.iter().map(|&v| vec![v]).collect();
    let owner = absorb_into(&h.graph, &seeds);
    let parts = owner_parts(&owner, seeds.len()).expect("H is connected");
    let out = h.refine(&BranchPartition::new(&h.graph, parts)?);
    trace.push(format!("connected: case 2, block of order {}", out.graph.order()));
    Ok(StepOutcome::Minor(out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::connectivity::meets_class;

    fn family(g: &SimpleGraph, k: usize, l: usize) -> Option<FamilyId> {
        match connected_step(g, k, l).unwrap().outcome {
            StepOutcome::Family(c) => {
                assert!(c.verify(g));
                Some(c.family)
            }
            _ => None,
        }
    }

    #[test]
    fn stars_and_paths() {
        let star = generate(FamilyId::new(FamilyTag::Star, 5)).unwrap();
        assert_eq!(family(&star, 5, 3), Some(FamilyId::new(FamilyTag::Star, 5)));
        assert_eq!(family(&SimpleGraph::path(20), 5, 4), Some(FamilyId::new(FamilyTag::Path, 5)));
    }

    #[test]
    fn long_cycle_is_its_own_block() {
        let g = SimpleGraph::cycle(20);
        let step = connected_step(&g, 5, 10).unwrap();
        let StepOutcome::Minor(m) = step.outcome else { panic!("{:?}", step.trace) };
        assert!(m.graph.order() >= 10 && meets_class(&m.graph, 2));
    }

    #[test]
    fn star_or_path_examples() {
        assert!(matches!(star_or_path_minor(&SimpleGraph::path(10), 3, 5).unwrap(), StarOrPath::Path(_)));
        let star = generate(FamilyId::new(FamilyTag::Star, 9)).unwrap();
        let StarOrPath::Star(e) = star_or_path_minor(&star, 4, 4).unwrap() else { panic!() };
        assert_eq!(e.branch_sets.len(), 5);
    }
}
