//! Brute-force oracles shared by the integration tests. None of them call
//! into the library's search, quotient, isomorphism or connectivity code.
#![allow(dead_code)]

use std::collections::BTreeSet;
use std::path::PathBuf;

use pminor::SimpleGraph;
use rand::Rng;

/// Adjacency matrix as plain booleans.
pub fn matrix(g: &SimpleGraph) -> Vec<Vec<bool>> {
    let n = g.order();
    let mut m = vec![vec![false; n]; n];
    for (u, v) in g.edges() {
        m[u][v] = true;
        m[v][u] = true;
    }
    m
}

pub fn from_matrix(m: &[Vec<bool>]) -> SimpleGraph {
    let n = m.len();
    let mut edges = Vec::new();
    for (i, row) in m.iter().enumerate() {
        for j in i + 1..n {
            if row[j] {
                edges.push((i, j));
            }
        }
    }
    SimpleGraph::from_edges(n, &edges).unwrap()
}

/// All set partitions of `0..n` as restricted growth strings.
pub fn set_partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(i: usize, n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == n {
            out.push(cur.clone());
            return;
        }
        for x in 0..=max {
            cur.push(x);
            rec(i + 1, n, if x == max { max + 1 } else { max }, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        out.push(Vec::new());
    } else {
        rec(0, n, 0, &mut Vec::new(), &mut out);
    }
    out
}

/// Whether `set` induces a connected subgraph (depth-first over the matrix).
pub fn connected_set(m: &[Vec<bool>], set: &[usize]) -> bool {
    let Some(&s) = set.first() else { return false };
    let mut seen = vec![s];
    let mut stack = vec![s];
    while let Some(u) = stack.pop() {
        for &w in set {
            if m[u][w] && !seen.contains(&w) {
                seen.push(w);
                stack.push(w);
            }
        }
    }
    seen.len() == set.len()
}

/// Quotient by an assignment, or `None` if some part is disconnected.
pub fn quotient_of(g: &SimpleGraph, assign: &[usize]) -> Option<SimpleGraph> {
    let m = matrix(g);
    let parts = assign.iter().max().map_or(0, |&x| x + 1);
    for p in 0..parts {
        let members: Vec<usize> = (0..g.order()).filter(|&v| assign[v] == p).collect();
        if !connected_set(&m, &members) {
            return None;
        }
    }
    let mut q = vec![vec![false; parts]; parts];
    for (u, v) in g.edges() {
        let (a, b) = (assign[u], assign[v]);
        if a != b {
            q[a][b] = true;
            q[b][a] = true;
        }
    }
    Some(from_matrix(&q))
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                rec(cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Canonical form: lexicographically largest upper-triangle bit string over
/// all relabellings. Fine up to about eight vertices.
pub fn canon(g: &SimpleGraph, perms: &[Vec<usize>]) -> (usize, Vec<bool>) {
    let n = g.order();
    let m = matrix(g);
    let mut best: Option<Vec<bool>> = None;
    for p in perms {
        let mut bits = Vec::with_capacity(n * n / 2);
        for j in 1..n {
            for i in 0..j {
                bits.push(m[p[i]][p[j]]);
            }
        }
        if best.as_ref().is_none_or(|b| bits > *b) {
            best = Some(bits);
        }
    }
    (n, best.unwrap_or_default())
}

pub struct Perms(Vec<Vec<Vec<usize>>>);

impl Perms {
    pub fn up_to(n: usize) -> Self {
        Perms((0..=n).map(permutations).collect())
    }

    pub fn canon(&self, g: &SimpleGraph) -> (usize, Vec<bool>) {
        canon(g, &self.0[g.order()])
    }

    pub fn isomorphic(&self, a: &SimpleGraph, b: &SimpleGraph) -> bool {
        a.order() == b.order() && a.size() == b.size() && self.canon(a) == self.canon(b)
    }
}

/// Canonical forms of every parallel minor of `g` with `parts` vertices.
pub fn parallel_minors(g: &SimpleGraph, parts: Option<usize>, perms: &Perms) -> BTreeSet<(usize, Vec<bool>)> {
    let mut out = BTreeSet::new();
    for assign in set_partitions(g.order()) {
        let count = assign.iter().max().map_or(0, |&x| x + 1);
        if parts.is_some_and(|p| p != count) {
            continue;
        }
        if let Some(q) = quotient_of(g, &assign) {
            out.insert(perms.canon(&q));
        }
    }
    out
}

/// Whether `small` is isomorphic to a (not necessarily induced) subgraph of
/// `big`, by injective backtracking.
pub fn is_subgraph(small: &SimpleGraph, big: &SimpleGraph) -> bool {
    let (s, b) = (matrix(small), matrix(big));
    fn rec(i: usize, s: &[Vec<bool>], b: &[Vec<bool>], map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        if i == s.len() {
            return true;
        }
        for x in 0..b.len() {
            if used[x] {
                continue;
            }
            if (0..i).all(|j| !s[i][j] || b[x][map[j]]) {
                used[x] = true;
                map.push(x);
                if rec(i + 1, s, b, map, used) {
                    return true;
                }
                map.pop();
                used[x] = false;
            }
        }
        false
    }
    small.order() <= big.order() && small.size() <= big.size() && rec(0, &s, &b, &mut Vec::new(), &mut vec![false; b.len()])
}

fn connected_without(m: &[Vec<bool>], removed: &[usize]) -> bool {
    let rest: Vec<usize> = (0..m.len()).filter(|v| !removed.contains(v)).collect();
    rest.is_empty() || connected_set(m, &rest)
}

fn subsets(n: usize, size: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, size: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            cur.push(v);
            rec(v + 1, n, size, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, size, &mut Vec::new(), &mut out);
    out
}

/// Vertex connectivity by trying every removal set in increasing size.
pub fn connectivity(g: &SimpleGraph) -> usize {
    let n = g.order();
    let m = matrix(g);
    for size in 0..n.saturating_sub(1) {
        for s in subsets(n, size) {
            if !connected_without(&m, &s) {
                return size;
            }
        }
    }
    n.saturating_sub(1)
}

/// 3-connected, and removing any three vertices leaves either a connected
/// graph or one isolated vertex plus one other component.
pub fn internally_4_connected(g: &SimpleGraph) -> bool {
    let n = g.order();
    if n < 5 || connectivity(g) < 3 {
        return false;
    }
    let m = matrix(g);
    for s in subsets(n, 3) {
        let rest: Vec<usize> = (0..n).filter(|v| !s.contains(v)).collect();
        let mut comps: Vec<usize> = Vec::new();
        let mut done = vec![false; n];
        for &r in &rest {
            if done[r] {
                continue;
            }
            let mut comp = vec![r];
            done[r] = true;
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                for &w in &rest {
                    if m[u][w] && !done[w] {
                        done[w] = true;
                        comp.push(w);
                    }
                }
                i += 1;
            }
            comps.push(comp.len());
        }
        if comps.len() > 2 || (comps.len() == 2 && !comps.contains(&1)) {
            return false;
        }
    }
    true
}

/// Checks a partition against a host and the expected quotient, without the
/// library: parts cover the host, are connected, and the quotient matches
/// edge for edge.
pub fn partition_realises(host: &SimpleGraph, parts: &[Vec<usize>], expected: &SimpleGraph) -> bool {
    let mut assign = vec![usize::MAX; host.order()];
    for (i, p) in parts.iter().enumerate() {
        for &v in p {
            if v >= host.order() || assign[v] != usize::MAX {
                return false;
            }
            assign[v] = i;
        }
    }
    if assign.contains(&usize::MAX) {
        return false;
    }
    quotient_of(host, &assign).is_some_and(|q| q == *expected)
}

pub fn corpus_path(n: usize) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("corpus").join(format!("graphs{n}.g6"))
}

pub fn corpus(n: usize) -> Vec<SimpleGraph> {
    std::fs::read_to_string(corpus_path(n))
        .unwrap()
        .lines()
        .filter(|l| !l.is_empty())
        .map(|l| pminor::graph6::decode(l).unwrap())
        .collect()
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> SimpleGraph {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    SimpleGraph::from_edges(n, &edges).unwrap()
}

/// A random graph of class `c`: a random spanning structure plus noise,
/// retried until the library-independent connectivity check passes.
pub fn random_connected(rng: &mut impl Rng, n: usize, c: usize) -> SimpleGraph {
    loop {
        let mut edges: Vec<(usize, usize)> = Vec::new();
        let mut order: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            order.swap(i, rng.gen_range(0..=i));
        }
        // Random tree, then `c − 1` extra random neighbours per vertex.
        for i in 1..n {
            edges.push((order[rng.gen_range(0..i)], order[i]));
        }
        for v in 0..n {
            for _ in 1..c.max(1) {
                let w = rng.gen_range(0..n);
                if w != v {
                    edges.push((v, w));
                }
            }
        }
        let extra = rng.gen_range(0..n);
        for _ in 0..extra {
            let (a, b) = (rng.gen_range(0..n), rng.gen_range(0..n));
            if a != b {
                edges.push((a, b));
            }
        }
        let g = SimpleGraph::from_edges_simplified(n, edges);
        if class_ok(&g, c) {
            return g;
        }
    }
}

/// Connectivity class by flow-free means: removal of every small set.
pub fn class_ok(g: &SimpleGraph, c: usize) -> bool {
    let n = g.order();
    let m = matrix(g);
    if n <= c {
        return false;
    }
    (0..c).all(|size| subsets(n, size).iter().all(|s| connected_without(&m, s)))
}
