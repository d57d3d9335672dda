//! Heuristic finders for the large structured minors the higher drivers
//! start from: wheels, `K_{a,r}`, double wheels and square-of-cycle ladders.
//!
//! All of them return minor embeddings checked against their targets. A
//! miss only means the heuristic did not find one.

use crate::containment::MinorEmbedding;
use crate::families::{generate, FamilyId, FamilyTag};
use crate::graph::SimpleGraph;
use crate::search::Budget;

use super::paths::long_cycle;

const CYCLE_BUDGET: Budget = Budget(200_000);
const LADDER_BUDGET: u64 = 2_000_000;

/// Vertices by degree, highest first, ties by index.
fn by_degree(g: &SimpleGraph, take: usize) -> Vec<usize> {
    let mut vs: Vec<usize> = (0..g.order()).collect();
    vs.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    vs.truncate(take);
    vs
}

fn embed(g: &SimpleGraph, id: FamilyId, sets: Vec<Vec<usize>>) -> Option<(FamilyId, MinorEmbedding)> {
    let target = generate(id).ok()?;
    let e = MinorEmbedding::from_branch_sets(g, &target, sets).ok()?;
    Some((id, e))
}

/// Longest cycle of `g − removed`, in host vertex ids.
fn cycle_avoiding(g: &SimpleGraph, removed: &[usize]) -> Vec<usize> {
    let (rest, kept) = g.without_vertices(removed);
    long_cycle(&rest, CYCLE_BUDGET).into_iter().map(|v| kept[v]).collect()
}

/// Splits `cycle` into arcs that each start at a position satisfying `hit`.
fn arcs_at(cycle: &[usize], hit: impl Fn(usize) -> bool) -> Vec<Vec<usize>> {
    let starts: Vec<usize> = (0..cycle.len()).filter(|&i| hit(cycle[i])).collect();
    let Some(&first) = starts.first() else { return Vec::new() };
    let mut arcs = Vec::with_capacity(starts.len());
    for (j, &s) in starts.iter().enumerate() {
        let end = starts.get(j + 1).copied().unwrap_or(first + cycle.len());
        arcs.push((s..end).map(|i| cycle[i % cycle.len()]).collect());
    }
    arcs
}

/// Vertices reachable from `start` without touching `blocked`.
fn grow(g: &SimpleGraph, start: usize, blocked: &[bool]) -> Vec<usize> {
    let mut seen = vec![false; g.order()];
    seen[start] = true;
    let mut stack = vec![start];
    let mut out = vec![start];
    while let Some(u) = stack.pop() {
        for &w in g.neighbors(u) {
            if !seen[w] && !blocked[w] {
                seen[w] = true;
                out.push(w);
                stack.push(w);
            }
        }
    }
    out.sort_unstable();
    out
}

/// A wheel `W_r` as a minor: hub from the top-degree vertices, rim from a
/// long cycle avoiding it.
pub(crate) fn find_wheel(g: &SimpleGraph) -> Option<(FamilyId, MinorEmbedding)> {
    let mut best: Option<(FamilyId, MinorEmbedding)> = None;
    for h in by_degree(g, 5) {
        let cycle = cycle_avoiding(g, &[h]);
        if cycle.len() < 3 {
            continue;
        }
        let mut on_cycle = vec![false; g.order()];
        for &v in &cycle {
            on_cycle[v] = true;
        }
        let hub = grow(g, h, &on_cycle);
        let mut in_hub = vec![false; g.order()];
        for &v in &hub {
            in_hub[v] = true;
        }
        let arcs = arcs_at(&cycle, |v| g.neighbors(v).iter().any(|&w| in_hub[w]));
        let r = arcs.len();
        if r < 3 || best.as_ref().is_some_and(|(id, _)| id.k >= r) {
            continue;
        }
        let mut sets = arcs;
        sets.push(hub);
        if let Some(found) = embed(g, FamilyId::new(FamilyTag::Wheel, r), sets) {
            best = Some(found);
        }
    }
    best
}

fn combinations(pool: &[usize], a: usize, out: &mut Vec<Vec<usize>>, cur: &mut Vec<usize>, from: usize) {
    if cur.len() == a {
        out.push(cur.clone());
        return;
    }
    for i in from..pool.len() {
        cur.push(pool[i]);
        combinations(pool, a, out, cur, i + 1);
        cur.pop();
    }
}

/// `K_{a,r}` as a minor: `a` single-vertex hubs from the top-degree
/// vertices; each leaf is a common neighbour or a component of the rest
/// touching every hub.
pub(crate) fn find_kar(g: &SimpleGraph, a: usize) -> Option<(FamilyId, MinorEmbedding)> {
    let n = g.order();
    let pool = by_degree(g, 10);
    let mut tuples = Vec::new();
    combinations(&pool, a, &mut tuples, &mut Vec::new(), 0);
    let mut best: Option<(usize, Vec<Vec<usize>>)> = None;
    for hubs in tuples {
        let mut blocked = vec![false; n];
        for &h in &hubs {
            blocked[h] = true;
        }
        let mut leaves: Vec<Vec<usize>> = Vec::new();
        for v in 0..n {
            if !blocked[v] && hubs.iter().all(|&h| g.has_edge(h, v)) {
                leaves.push(vec![v]);
                blocked[v] = true;
            }
        }
        for v in 0..n {
            if blocked[v] {
                continue;
            }
            let comp = grow(g, v, &blocked);
            for &u in &comp {
                blocked[u] = true;
            }
            if hubs.iter().all(|&h| comp.iter().any(|&u| g.has_edge(h, u))) {
                leaves.push(comp);
            }
        }
        if leaves.len() > best.as_ref().map_or(0, |b| b.0) {
            let mut sets: Vec<Vec<usize>> = hubs.iter().map(|&h| vec![h]).collect();
            let r = leaves.len();
            sets.extend(leaves);
            best = Some((r, sets));
        }
    }
    let (r, sets) = best?;
    if r < 1 {
        return None;
    }
    embed(g, FamilyId::bipartite(a, r), sets)
}

/// `W_r` or `K_{3,r}`, whichever is larger; the wheel wins ties.
pub(crate) fn wheel_or_k3r(g: &SimpleGraph) -> Option<(FamilyId, MinorEmbedding)> {
    let w = find_wheel(g);
    let b = find_kar(g, 3);
    match (w, b) {
        (Some(w), Some(b)) => Some(if b.0.k > w.0.k { b } else { w }),
        (w, b) => w.or(b),
    }
}

/// A double wheel `D_q` as a minor: two hubs from the top-degree vertices
/// and a long cycle avoiding both, cut greedily into arcs that each see
/// both hubs.
pub(crate) fn find_double_wheel(g: &SimpleGraph) -> Option<(FamilyId, MinorEmbedding)> {
    let pool = by_degree(g, 6);
    let mut best: Option<(usize, Vec<Vec<usize>>)> = None;
    for (i, &a) in pool.iter().enumerate() {
        for &b in &pool[i + 1..] {
            let cycle = cycle_avoiding(g, &[a, b]);
            let len = cycle.len();
            if len < 3 {
                continue;
            }
            for start in 0..len {
                let mut arcs: Vec<Vec<usize>> = Vec::new();
                let mut cur = Vec::new();
                let (mut sa, mut sb) = (false, false);
                for off in 0..len {
                    let v = cycle[(start + off) % len];
                    cur.push(v);
                    sa |= g.has_edge(a, v);
                    sb |= g.has_edge(b, v);
                    if sa && sb {
                        arcs.push(std::mem::take(&mut cur));
                        sa = false;
                        sb = false;
                    }
                }
                if let Some(last) = arcs.last_mut() {
                    last.extend(cur);
                }
                if arcs.len() >= 3 && arcs.len() > best.as_ref().map_or(0, |x| x.0) {
                    let q = arcs.len();
                    arcs.push(vec![a]);
                    arcs.push(vec![b]);
                    best = Some((q, arcs));
                }
            }
        }
    }
    let (q, sets) = best?;
    embed(g, FamilyId::new(FamilyTag::DoubleWheel, q), sets)
}

/// `K_{4,q}` or `D_q`, whichever is larger; the bipartite graph wins ties.
pub(crate) fn k4q_or_dq(g: &SimpleGraph) -> Option<(FamilyId, MinorEmbedding)> {
    let b = find_kar(g, 4);
    let d = find_double_wheel(g);
    match (b, d) {
        (Some(b), Some(d)) => Some(if d.0.k > b.0.k { d } else { b }),
        (b, d) => b.or(d),
    }
}

struct LadderDfs<'a> {
    g: &'a SimpleGraph,
    seq: Vec<usize>,
    used: Vec<bool>,
    best: Vec<usize>,
    nodes: u64,
}

impl LadderDfs<'_> {
    fn closes(&self) -> bool {
        let s = &self.seq;
        let l = s.len();
        l >= 5
            && self.g.has_edge(s[l - 1], s[0])
            && self.g.has_edge(s[l - 1], s[1])
            && self.g.has_edge(s[l - 2], s[0])
    }

    fn run(&mut self) {
        self.nodes += 1;
        if self.nodes > LADDER_BUDGET || self.best.len() == self.g.order() {
            return;
        }
        if self.seq.len() > self.best.len() && self.closes() {
            self.best = self.seq.clone();
        }
        let l = self.seq.len();
        let (x, y) = (self.seq[l - 2], self.seq[l - 1]);
        let next: Vec<usize> = self
            .g
            .neighbors(y)
            .iter()
            .copied()
            .filter(|&w| !self.used[w] && self.g.has_edge(x, w))
            .collect();
        for w in next {
            self.used[w] = true;
            self.seq.push(w);
            self.run();
            self.seq.pop();
            self.used[w] = false;
        }
    }
}

/// Cyclic order `c_0 … c_{N−1}` with `c_i ~ c_{i+1}` and `c_i ~ c_{i+2}`
/// (indices mod `N`), so the vertices carry the square of `C_N` as a
/// subgraph. Longest found within the budget; `N ≥ 5`.
pub(crate) fn find_ladder(g: &SimpleGraph) -> Option<Vec<usize>> {
    let mut dfs = LadderDfs {
        g,
        seq: Vec::new(),
        used: vec![false; g.order()],
        best: Vec::new(),
        nodes: 0,
    };
    'outer: for x in 0..g.order() {
        for &y in g.neighbors(x) {
            if dfs.nodes > LADDER_BUDGET || dfs.best.len() == g.order() {
                break 'outer;
            }
            dfs.seq = vec![x, y];
            dfs.used[x] = true;
            dfs.used[y] = true;
            dfs.run();
            dfs.used[x] = false;
            dfs.used[y] = false;
        }
    }
    (dfs.best.len() >= 5).then_some(dfs.best)
}

/// Pairs of a ladder order: `{c_{2i}, c_{2i+1}}` for even `N`; for odd `N`
/// the triangle `{c_0, c_1, c_2}` followed by `{c_{2i+1}, c_{2i+2}}`.
/// Each pair is `(u, v, extra)` with the triangle's `c_0` as the extra
/// vertex, placed on the `v` side.
pub(crate) fn ladder_pairs(order: &[usize]) -> Vec<(usize, usize, Option<usize>)> {
    let n = order.len();
    if n % 2 == 0 {
        (0..n / 2).map(|i| (order[2 * i], order[2 * i + 1], None)).collect()
    } else {
        let mut out = vec![(order[1], order[2], Some(order[0]))];
        out.extend((1..(n - 1) / 2).map(|i| (order[2 * i + 1], order[2 * i + 2], None)));
        out
    }
}
