//! Exact vertex connectivity.
//!
//! Local connectivity between two nonadjacent vertices is a unit-capacity
//! max-flow on the vertex-split network (Menger). Global connectivity uses
//! Even's reduction: only pairs whose first vertex is among the first
//! `κ + 1` vertices need to be checked.

use std::collections::VecDeque;

use crate::graph::SimpleGraph;

struct FlowEdge {
    to: usize,
    cap: u32,
}

/// Vertex-split flow network: `v` becomes `2v` (in) and `2v + 1` (out).
struct SplitNetwork {
    edges: Vec<FlowEdge>,
    adj: Vec<Vec<usize>>,
}

impl SplitNetwork {
    fn new(g: &SimpleGraph, s: usize, t: usize) -> Self {
        let mut net = SplitNetwork {
            edges: Vec::new(),
            adj: vec![Vec::new(); 2 * g.order()],
        };
        let big = g.order() as u32 + 1;
        for v in 0..g.order() {
            let cap = if v == s || v == t { big } else { 1 };
            net.add(2 * v, 2 * v + 1, cap);
        }
        for (u, v) in g.edges() {
            net.add(2 * u + 1, 2 * v, 1);
            net.add(2 * v + 1, 2 * u, 1);
        }
        net
    }

    fn add(&mut self, from: usize, to: usize, cap: u32) {
        self.adj[from].push(self.edges.len());
        self.edges.push(FlowEdge { to, cap });
        self.adj[to].push(self.edges.len());
        self.edges.push(FlowEdge { to: from, cap: 0 });
    }

    fn augment(&mut self, source: usize, sink: usize) -> bool {
        let mut via = vec![usize::MAX; self.adj.len()];
        let mut seen = vec![false; self.adj.len()];
        seen[source] = true;
        let mut queue = VecDeque::from([source]);
        while let Some(x) = queue.pop_front() {
            if x == sink {
                break;
            }
            for &e in &self.adj[x] {
                let y = self.edges[e].to;
                if self.edges[e].cap > 0 && !seen[y] {
                    seen[y] = true;
                    via[y] = e;
                    queue.push_back(y);
                }
            }
        }
        if !seen[sink] {
            return false;
        }
        let mut x = sink;
        while x != source {
            let e = via[x];
            self.edges[e].cap -= 1;
            self.edges[e ^ 1].cap += 1;
            x = self.edges[e ^ 1].to;
        }
        true
    }

    /// Max flow from `s_out` to `t_in`, stopping once `limit` is reached.
    fn max_flow(&mut self, s: usize, t: usize, limit: usize) -> usize {
        let mut flow = 0;
        while flow < limit && self.augment(2 * s + 1, 2 * t) {
            flow += 1;
        }
        flow
    }
}

/// Maximum number of internally disjoint `s`-`t` paths, capped at `limit`.
/// For adjacent `s`, `t` the direct edge counts as one path.
pub fn local_connectivity(g: &SimpleGraph, s: usize, t: usize, limit: usize) -> usize {
    assert_ne!(s, t);
    let mut net = SplitNetwork::new(g, s, t);
    net.max_flow(s, t, limit)
}

/// Internally disjoint `s`-`t` paths realising the local connectivity (at most
/// `limit` of them), each listed from `s` to `t`.
pub fn disjoint_paths(g: &SimpleGraph, s: usize, t: usize, limit: usize) -> Vec<Vec<usize>> {
    assert_ne!(s, t);
    let mut net = SplitNetwork::new(g, s, t);
    let flow = net.max_flow(s, t, limit);
    // Flow on an original edge u_out -> v_in shows as a saturated forward arc.
    let mut next: Vec<Vec<usize>> = vec![Vec::new(); g.order()];
    for u in 0..g.order() {
        for &e in &net.adj[2 * u + 1] {
            if e % 2 == 0 && net.edges[e].cap == 0 {
                let v = net.edges[e].to / 2;
                if net.edges[e].to % 2 == 0 && v != u {
                    next[u].push(v);
                }
            }
        }
    }
    // Cancel opposite flows u->v, v->u.
    for u in 0..g.order() {
        let outs = next[u].clone();
        for v in outs {
            if let Some(pos) = next[v].iter().position(|&w| w == u) {
                next[v].remove(pos);
                let p = next[u].iter().position(|&w| w == v).unwrap();
                next[u].remove(p);
            }
        }
    }
    let mut paths = Vec::with_capacity(flow);
    for _ in 0..flow {
        let mut path = vec![s];
        let mut x = s;
        let mut steps = 0;
        while x != t {
            let Some(y) = next[x].pop() else { break };
            path.push(y);
            x = y;
            steps += 1;
            if steps > g.order() {
                break;
            }
        }
        if x == t {
            paths.push(path);
        }
    }
    paths
}

/// Minimum size of a vertex cut; `n - 1` for complete graphs, 0 if disconnected.
pub fn vertex_connectivity(g: &SimpleGraph) -> usize {
    let n = g.order();
    if n <= 1 {
        return 0;
    }
    if !g.is_connected() {
        return 0;
    }
    let mut best = g.min_degree().min(n - 1);
    let mut i = 0;
    while i <= best && i < n {
        for j in i + 1..n {
            if !g.has_edge(i, j) {
                best = best.min(local_connectivity(g, i, j, best));
            }
        }
        i += 1;
    }
    best
}

/// Whether `g` is `c`-connected: more than `c` vertices and no cut below `c`.
/// Complete graphs `K_n` count as `(n-1)`-connected.
pub fn is_k_connected(g: &SimpleGraph, c: usize) -> bool {
    match c {
        0 => true,
        1 => g.order() >= 1 && g.is_connected(),
        _ => g.order() > c && vertex_connectivity(g) >= c,
    }
}

/// 3-connected, and every 3-vertex cut leaves exactly two components one of
/// which is a single vertex.
pub fn is_internally_4_connected(g: &SimpleGraph) -> bool {
    let n = g.order();
    if n < 5 || vertex_connectivity(g) < 3 {
        return false;
    }
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                let (rest, _) = g.without_vertices(&[a, b, c]);
                let comps = rest.components();
                if comps.len() > 1 && (comps.len() != 2 || comps.iter().all(|x| x.len() != 1)) {
                    return false;
                }
            }
        }
    }
    true
}

/// Connectivity class used throughout: 1, 2, 3, or internally 4-connected (4).
pub fn meets_class(g: &SimpleGraph, c: usize) -> bool {
    match c {
        1 => g.order() >= 1 && g.is_connected(),
        2 => g.order() >= 3 && vertex_connectivity(g) >= 2,
        3 => g.order() >= 4 && vertex_connectivity(g) >= 3,
        4 => is_internally_4_connected(g),
        _ => false,
    }
}

/// Blocks (maximal 2-connected subgraphs or bridges) and cut vertices.
pub fn blocks(g: &SimpleGraph) -> (Vec<Vec<usize>>, Vec<usize>) {
    let n = g.order();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut is_cut = vec![false; n];
    let mut out = Vec::new();
    let mut timer = 0;
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        if g.degree(root) == 0 {
            disc[root] = timer;
            timer += 1;
            out.push(vec![root]);
            continue;
        }
        // Iterative DFS: (vertex, parent, next neighbour index).
        let mut stack = vec![(root, usize::MAX, 0usize)];
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        let mut root_children = 0;
        while let Some(&mut (v, parent, ref mut idx)) = stack.last_mut() {
            if *idx < g.degree(v) {
                let w = g.neighbors(v)[*idx];
                *idx += 1;
                if disc[w] == usize::MAX {
                    edge_stack.push((v, w));
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    if v == root {
                        root_children += 1;
                    }
                    stack.push((w, v, 0));
                } else if w != parent && disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[v]);
                    if low[v] >= disc[p] {
                        if p != root {
                            is_cut[p] = true;
                        }
                        let mut block = Vec::new();
                        while let Some((a, b)) = edge_stack.pop() {
                            block.push(a);
                            block.push(b);
                            if (a, b) == (p, v) {
                                break;
                            }
                        }
                        block.sort_unstable();
                        block.dedup();
                        out.push(block);
                    }
                }
            }
        }
        if root_children > 1 {
            is_cut[root] = true;
        }
    }
    let cuts = (0..n).filter(|&v| is_cut[v]).collect();
    (out, cuts)
}

pub fn cut_vertices(g: &SimpleGraph) -> Vec<usize> {
    blocks(g).1
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wheel(k: usize) -> SimpleGraph {
        let mut edges: Vec<_> = (0..k).map(|i| (i, (i + 1) % k)).collect();
        edges.extend((0..k).map(|i| (i, k)));
        SimpleGraph::from_edges(k + 1, &edges).unwrap()
    }

    #[test]
    fn small_values() {
        assert_eq!(vertex_connectivity(&SimpleGraph::cycle(5)), 2);
        assert_eq!(vertex_connectivity(&SimpleGraph::complete(5)), 4);
        assert_eq!(vertex_connectivity(&SimpleGraph::petersen()), 3);
        assert_eq!(vertex_connectivity(&SimpleGraph::path(4)), 1);
        assert_eq!(vertex_connectivity(&SimpleGraph::empty(3)), 0);
    }

    #[test]
    fn petersen_pairs_by_flow() {
        // Oracle: every nonadjacent pair has exactly 3 disjoint paths.
        let p = SimpleGraph::petersen();
        for u in 0..10 {
            for v in u + 1..10 {
                if !p.has_edge(u, v) {
                    assert_eq!(local_connectivity(&p, u, v, 10), 3);
                    let paths = disjoint_paths(&p, u, v, 10);
                    assert_eq!(paths.len(), 3);
                    let mut inner: Vec<usize> = paths.iter().flat_map(|q| q[1..q.len() - 1].to_vec()).collect();
                    let before = inner.len();
                    inner.sort_unstable();
                    inner.dedup();
                    assert_eq!(before, inner.len());
                    for q in &paths {
                        assert!(q.windows(2).all(|w| p.has_edge(w[0], w[1])));
                    }
                }
            }
        }
    }

    #[test]
    fn internal_four_connectivity() {
        assert!(is_internally_4_connected(&SimpleGraph::complete(5)));
        assert!(is_internally_4_connected(&wheel(5)));
        assert!(!is_internally_4_connected(&wheel(6)));
    }

    #[test]
    fn blocks_of_two_triangles_and_tail() {
        // Triangles 0-1-2 and 2-3-4 sharing 2, plus pendant edge 4-5.
        let g = SimpleGraph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2), (4, 5)]).unwrap();
        let (mut bl, cuts) = blocks(&g);
        bl.sort();
        assert_eq!(bl, vec![vec![0, 1, 2], vec![2, 3, 4], vec![4, 5]]);
        assert_eq!(cuts, vec![2, 4]);
    }
}
