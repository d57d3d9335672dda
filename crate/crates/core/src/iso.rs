//! Isomorphism by colour refinement and backtracking.
//!
//! Both graphs are refined together so colour names agree across them. The
//! backtracking then maps vertices colour class by colour class, always
//! extending from a vertex adjacent to something already mapped so the
//! candidate set stays within a neighbourhood.

use std::collections::BTreeMap;

use crate::graph::SimpleGraph;

/// Stable colouring of the disjoint union of `graphs`, starting from degrees.
pub(crate) fn refine_colors(graphs: &[&SimpleGraph]) -> Vec<Vec<usize>> {
    let mut colors: Vec<Vec<usize>> = graphs
        .iter()
        .map(|g| (0..g.order()).map(|v| g.degree(v)).collect())
        .collect();
    loop {
        let mut signatures: BTreeMap<(usize, Vec<usize>), usize> = BTreeMap::new();
        let mut keyed: Vec<Vec<(usize, Vec<usize>)>> = Vec::with_capacity(graphs.len());
        for (gi, g) in graphs.iter().enumerate() {
            let keys: Vec<_> = (0..g.order())
                .map(|v| {
                    let mut ns: Vec<usize> = g.neighbors(v).iter().map(|&w| colors[gi][w]).collect();
                    ns.sort_unstable();
                    (colors[gi][v], ns)
                })
                .collect();
            for k in &keys {
                let next = signatures.len();
                signatures.entry(k.clone()).or_insert(next);
            }
            keyed.push(keys);
        }
        // Renumber by sorted signature so the naming is order independent.
        let names: BTreeMap<&(usize, Vec<usize>), usize> =
            signatures.keys().enumerate().map(|(i, k)| (k, i)).collect();
        let next: Vec<Vec<usize>> = keyed
            .iter()
            .map(|keys| keys.iter().map(|k| names[k]).collect())
            .collect();
        let before: usize = count_classes(&colors);
        let after: usize = count_classes(&next);
        colors = next;
        if after == before {
            return colors;
        }
    }
}

fn count_classes(colors: &[Vec<usize>]) -> usize {
    let mut all: Vec<usize> = colors.iter().flatten().copied().collect();
    all.sort_unstable();
    all.dedup();
    all.len()
}

/// A bijection `f` with `uv ∈ E(g) ⇔ f(u)f(v) ∈ E(h)`, or `None`.
pub fn is_isomorphic(g: &SimpleGraph, h: &SimpleGraph) -> Option<Vec<usize>> {
    if g.order() != h.order() || g.size() != h.size() || g.degree_sequence() != h.degree_sequence() {
        return None;
    }
    let n = g.order();
    if n == 0 {
        return Some(Vec::new());
    }
    let colors = refine_colors(&[g, h]);
    let (cg, ch) = (&colors[0], &colors[1]);
    let mut hist_g = cg.clone();
    let mut hist_h = ch.clone();
    hist_g.sort_unstable();
    hist_h.sort_unstable();
    if hist_g != hist_h {
        return None;
    }
    let mut class_size: BTreeMap<usize, usize> = BTreeMap::new();
    for &c in cg {
        *class_size.entry(c).or_default() += 1;
    }
    let mut state = IsoState {
        g,
        h,
        cg,
        ch,
        class_size: &class_size,
        map: vec![usize::MAX; n],
        used: vec![false; n],
    };
    state.extend(0).then(|| state.map)
}

struct IsoState<'a> {
    g: &'a SimpleGraph,
    h: &'a SimpleGraph,
    cg: &'a [usize],
    ch: &'a [usize],
    class_size: &'a BTreeMap<usize, usize>,
    map: Vec<usize>,
    used: Vec<bool>,
}

impl IsoState<'_> {
    fn next_vertex(&self) -> usize {
        // Most mapped neighbours first, then smallest colour class, then id.
        (0..self.g.order())
            .filter(|&v| self.map[v] == usize::MAX)
            .min_by_key(|&v| {
                let mapped = self.g.neighbors(v).iter().filter(|&&w| self.map[w] != usize::MAX).count();
                (std::cmp::Reverse(mapped), self.class_size[&self.cg[v]], v)
            })
            .expect("called with an unmapped vertex")
    }

    fn consistent(&self, v: usize, image: usize) -> bool {
        for &w in self.g.neighbors(v) {
            let fw = self.map[w];
            if fw != usize::MAX && !self.h.has_edge(image, fw) {
                return false;
            }
        }
        // Non-edges must map to non-edges; count mapped neighbours on each side.
        let mapped_g = self.g.neighbors(v).iter().filter(|&&w| self.map[w] != usize::MAX).count();
        let mapped_h = self.h.neighbors(image).iter().filter(|&&x| self.used[x]).count();
        mapped_g == mapped_h
    }

    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.g.order() {
            return true;
        }
        let v = self.next_vertex();
        let anchor = self.g.neighbors(v).iter().copied().find(|&w| self.map[w] != usize::MAX);
        let candidates: Vec<usize> = match anchor {
            Some(w) => self.h.neighbors(self.map[w]).to_vec(),
            None => (0..self.h.order()).collect(),
        };
        for x in candidates {
            if self.used[x] || self.ch[x] != self.cg[v] || !self.consistent(v, x) {
                continue;
            }
            self.map[v] = x;
            self.used[x] = true;
            if self.extend(depth + 1) {
                return true;
            }
            self.map[v] = usize::MAX;
            self.used[x] = false;
        }
        false
    }
}

/// Checks that `map` is an isomorphism from `g` to `h`.
pub fn verify_isomorphism(g: &SimpleGraph, h: &SimpleGraph, map: &[usize]) -> bool {
    if g.order() != h.order() || map.len() != g.order() || g.size() != h.size() {
        return false;
    }
    let mut seen = vec![false; h.order()];
    for &x in map {
        if x >= h.order() || seen[x] {
            return false;
        }
        seen[x] = true;
    }
    g.edges().all(|(u, v)| h.has_edge(map[u], map[v]))
}
