//! Generators and recognisers for the unavoidable families.
//!
//! Labelling conventions (all 0-based):
//!
//! | family | vertices |
//! |---|---|
//! | `K_{1,k}` | centre 0, leaves `1..=k` |
//! | `C_k`, `P_k` | `0..k` in order |
//! | `K'_{a,k}`, `K_{a,k}` | a-side `0..a`, k-side `a..a+k` |
//! | `F_k`, `DF_k`, `TF_k` | path `0..k`, hubs `k..` |
//! | `W_k`, `D_k`, `D'_k` | rim `0..k`, hubs `k..` |
//! | `Z_k` | `u_i = 2i`, `v_i = 2i + 1`, the square of `C_{2k}` |
//! | `M_k` | `0..2k+1`, the square of `C_{2k+1}` |

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::iso::is_isomorphic;
use crate::partition::{quotient, BranchPartition, EdgeProvenance};

/// Family tags in their tie-breaking order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FamilyTag {
    Star,
    Cycle,
    Path,
    Clique,
    K2kPrime,
    Fan,
    K3kPrime,
    Wheel,
    DoubleFan,
    K4kPrime,
    DoubleWheel,
    DoubleWheelAxle,
    TripleFan,
    MoebiusZigzag,
    Zigzag,
    CompleteBipartite,
}

impl FamilyTag {
    pub const ALL: [FamilyTag; 16] = [
        FamilyTag::Star,
        FamilyTag::Cycle,
        FamilyTag::Path,
        FamilyTag::Clique,
        FamilyTag::K2kPrime,
        FamilyTag::Fan,
        FamilyTag::K3kPrime,
        FamilyTag::Wheel,
        FamilyTag::DoubleFan,
        FamilyTag::K4kPrime,
        FamilyTag::DoubleWheel,
        FamilyTag::DoubleWheelAxle,
        FamilyTag::TripleFan,
        FamilyTag::MoebiusZigzag,
        FamilyTag::Zigzag,
        FamilyTag::CompleteBipartite,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyTag::Star => "star",
            FamilyTag::Cycle => "cycle",
            FamilyTag::Path => "path",
            FamilyTag::Clique => "clique",
            FamilyTag::K2kPrime => "k2k-prime",
            FamilyTag::Fan => "fan",
            FamilyTag::K3kPrime => "k3k-prime",
            FamilyTag::Wheel => "wheel",
            FamilyTag::DoubleFan => "double-fan",
            FamilyTag::K4kPrime => "k4k-prime",
            FamilyTag::DoubleWheel => "double-wheel",
            FamilyTag::DoubleWheelAxle => "double-wheel-axle",
            FamilyTag::TripleFan => "triple-fan",
            FamilyTag::MoebiusZigzag => "moebius-zigzag",
            FamilyTag::Zigzag => "zigzag",
            FamilyTag::CompleteBipartite => "complete-bipartite",
        }
    }

    /// Smallest `k` accepted by the generator.
    pub fn min_k(self) -> usize {
        match self {
            FamilyTag::Cycle | FamilyTag::Wheel | FamilyTag::DoubleWheel | FamilyTag::DoubleWheelAxle | FamilyTag::Zigzag => 3,
            FamilyTag::MoebiusZigzag => 2,
            _ => 1,
        }
    }

    /// Order of the generated graph (`a` only matters for bipartite).
    pub fn order(self, k: usize, a: usize) -> usize {
        match self {
            FamilyTag::Star => k + 1,
            FamilyTag::Cycle | FamilyTag::Path | FamilyTag::Clique => k,
            FamilyTag::K2kPrime => k + 2,
            FamilyTag::K3kPrime => k + 3,
            FamilyTag::K4kPrime => k + 4,
            FamilyTag::Fan | FamilyTag::Wheel => k + 1,
            FamilyTag::DoubleFan | FamilyTag::DoubleWheel | FamilyTag::DoubleWheelAxle => k + 2,
            FamilyTag::TripleFan => k + 3,
            FamilyTag::Zigzag => 2 * k,
            FamilyTag::MoebiusZigzag => 2 * k + 1,
            FamilyTag::CompleteBipartite => a + k,
        }
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.to_ascii_lowercase().replace('_', "-");
        let alias = match norm.as_str() {
            "k1k" => "star",
            "k" | "complete" => "clique",
            "w" => "wheel",
            "f" => "fan",
            "df" => "double-fan",
            "tf" => "triple-fan",
            "d" => "double-wheel",
            "d-prime" | "dprime" => "double-wheel-axle",
            "m" | "moebius" | "mobius" => "moebius-zigzag",
            "z" => "zigzag",
            "kab" | "bipartite" => "complete-bipartite",
            other => other,
        };
        FamilyTag::ALL
            .into_iter()
            .find(|t| t.name() == alias)
            .ok_or_else(|| Error::ParameterOutOfRange(format!("unknown family tag {s:?}")))
    }
}

/// A concrete family member. `a` is the small side of `K_{a,k}` and is zero
/// for every other tag.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct FamilyId {
    pub tag: FamilyTag,
    pub k: usize,
    #[serde(default, skip_serializing_if = "is_zero")]
    pub a: usize,
}

fn is_zero(a: &usize) -> bool {
    *a == 0
}

impl FamilyId {
    pub fn new(tag: FamilyTag, k: usize) -> Self {
        FamilyId { tag, k, a: 0 }
    }

    pub fn bipartite(a: usize, k: usize) -> Self {
        FamilyId {
            tag: FamilyTag::CompleteBipartite,
            k,
            a,
        }
    }

    pub fn order(&self) -> usize {
        self.tag.order(self.k, self.a)
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.tag == FamilyTag::CompleteBipartite {
            write!(f, "{}({},{})", self.tag, self.a, self.k)
        } else {
            write!(f, "{}({})", self.tag, self.k)
        }
    }
}

fn square_of_cycle(n: usize) -> SimpleGraph {
    SimpleGraph::from_edges_simplified(n, (0..n).flat_map(|i| [(i, (i + 1) % n), (i, (i + 2) % n)]))
}

fn joined_path(k: usize, hubs: usize, closed: bool, hub_edges: bool) -> SimpleGraph {
    let mut edges: Vec<(usize, usize)> = (1..k).map(|i| (i - 1, i)).collect();
    if closed {
        edges.push((k - 1, 0));
    }
    for h in k..k + hubs {
        edges.extend((0..k).map(|i| (i, h)));
        if hub_edges {
            edges.extend((k..h).map(|g| (g, h)));
        }
    }
    SimpleGraph::from_edges_simplified(k + hubs, edges)
}

fn k_prime(a: usize, k: usize, clique_side: bool) -> SimpleGraph {
    let mut edges = Vec::new();
    for x in 0..a {
        edges.extend((a..a + k).map(|y| (x, y)));
        if clique_side {
            edges.extend((0..x).map(|w| (w, x)));
        }
    }
    SimpleGraph::from_edges_simplified(a + k, edges)
}

/// Canonical labelled member of a family.
pub fn generate(id: FamilyId) -> Result<SimpleGraph> {
    let FamilyId { tag, k, a } = id;
    if k < tag.min_k() || (tag == FamilyTag::CompleteBipartite && a == 0) {
        return Err(Error::ParameterOutOfRange(format!("{id} is below the smallest member")));
    }
    if tag != FamilyTag::CompleteBipartite && a != 0 {
        return Err(Error::ParameterOutOfRange(format!("{tag} takes no side parameter")));
    }
    Ok(match tag {
        FamilyTag::Star => SimpleGraph::from_edges_simplified(k + 1, (1..=k).map(|i| (0, i))),
        FamilyTag::Cycle => SimpleGraph::cycle(k),
        FamilyTag::Path => SimpleGraph::path(k),
        FamilyTag::Clique => SimpleGraph::complete(k),
        FamilyTag::K2kPrime => k_prime(2, k, true),
        FamilyTag::K3kPrime => k_prime(3, k, true),
        FamilyTag::K4kPrime => k_prime(4, k, true),
        FamilyTag::Fan => joined_path(k, 1, false, false),
        FamilyTag::Wheel => joined_path(k, 1, true, false),
        FamilyTag::DoubleFan => joined_path(k, 2, false, true),
        FamilyTag::TripleFan => joined_path(k, 3, false, true),
        FamilyTag::DoubleWheel => joined_path(k, 2, true, false),
        FamilyTag::DoubleWheelAxle => joined_path(k, 2, true, true),
        FamilyTag::Zigzag => square_of_cycle(2 * k),
        FamilyTag::MoebiusZigzag => square_of_cycle(2 * k + 1),
        FamilyTag::CompleteBipartite => k_prime(a, k, false),
    })
}

/// Vertex labels matching the conventions above (`u1`, `v1`, `h1`, ...).
pub fn vertex_labels(id: FamilyId) -> Result<Vec<String>> {
    let n = generate(id)?.order();
    let k = id.k;
    let labels = (0..n)
        .map(|v| match id.tag {
            FamilyTag::Star if v == 0 => "c".to_string(),
            FamilyTag::Star => format!("l{v}"),
            FamilyTag::Zigzag if v % 2 == 0 => format!("u{}", v / 2 + 1),
            FamilyTag::Zigzag => format!("v{}", v / 2 + 1),
            FamilyTag::K2kPrime | FamilyTag::K3kPrime | FamilyTag::K4kPrime | FamilyTag::CompleteBipartite => {
                let a = n - k;
                if v < a {
                    format!("a{}", v + 1)
                } else {
                    format!("b{}", v - a + 1)
                }
            }
            FamilyTag::Fan
            | FamilyTag::Wheel
            | FamilyTag::DoubleFan
            | FamilyTag::TripleFan
            | FamilyTag::DoubleWheel
            | FamilyTag::DoubleWheelAxle
                if v >= k =>
            {
                format!("h{}", v - k + 1)
            }
            _ => format!("v{}", v + 1),
        })
        .collect();
    Ok(labels)
}

/// Smallest `k` at which a connectivity class's theorem applies.
pub fn theorem_min_k(c: usize) -> Result<usize> {
    match c {
        1 => Ok(1),
        2 => Ok(3),
        3 => Ok(4),
        4 => Ok(5),
        _ => Err(Error::ParameterOutOfRange(format!("connectivity class {c} not in 1..=4"))),
    }
}

/// Tags of the unavoidable list for connectivity class `c`.
pub fn theorem_tags(c: usize) -> Result<&'static [FamilyTag]> {
    use FamilyTag::*;
    match c {
        1 => Ok(&[Star, Cycle, Path, Clique]),
        2 => Ok(&[K2kPrime, Cycle, Fan, Clique]),
        3 => Ok(&[K3kPrime, Wheel, DoubleFan, Clique]),
        4 => Ok(&[K4kPrime, DoubleWheel, DoubleWheelAxle, TripleFan, MoebiusZigzag, Zigzag, Clique]),
        _ => Err(Error::ParameterOutOfRange(format!("connectivity class {c} not in 1..=4"))),
    }
}

/// The unavoidable list for class `c` at parameter `k`. Members whose
/// generator is undefined at this `k` (such as `C_1`) are left out.
pub fn theorem_list(c: usize, k: usize) -> Result<Vec<FamilyId>> {
    let min = theorem_min_k(c)?;
    if k < min {
        return Err(Error::ParameterOutOfRange(format!("class {c} needs k >= {min}, got {k}")));
    }
    Ok(theorem_tags(c)?
        .iter()
        .map(|&t| FamilyId::new(t, k))
        .filter(|id| id.k >= id.tag.min_k())
        .collect())
}

/// Result of [`identify`]: the first matching member in tag order plus any
/// other members that generate the same graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Identification {
    pub id: FamilyId,
    pub ties: Vec<FamilyId>,
}

/// Every family member with a given order.
pub fn members_of_order(n: usize) -> Vec<FamilyId> {
    let mut out = Vec::new();
    for tag in FamilyTag::ALL {
        if tag == FamilyTag::CompleteBipartite {
            for a in 1..n {
                let k = n - a;
                if a <= k {
                    out.push(FamilyId::bipartite(a, k));
                }
            }
            continue;
        }
        for k in tag.min_k()..=n {
            if tag.order(k, 0) == n {
                out.push(FamilyId::new(tag, k));
            }
        }
    }
    out
}

/// Names the family member isomorphic to `g`, if any.
pub fn identify(g: &SimpleGraph) -> Option<Identification> {
    let mut hits = members_of_order(g.order()).into_iter().filter(|&id| {
        let h = generate(id).expect("members_of_order yields valid ids");
        h.size() == g.size() && is_isomorphic(&h, g).is_some()
    });
    let id = hits.next()?;
    Some(Identification { id, ties: hits.collect() })
}

/// A ladder collapsed to a cycle by contracting its rungs.
#[derive(Debug, Clone)]
pub struct RungCollapse {
    /// Which ladder was recognised.
    pub ladder: FamilyId,
    /// Isomorphism from the generator labelling to the input.
    pub ladder_map: Vec<usize>,
    pub provenance: EdgeProvenance,
    /// Hamilton cycle of the quotient, in order.
    pub cycle: Vec<usize>,
}

impl RungCollapse {
    pub fn quotient(&self) -> &SimpleGraph {
        &self.provenance.quotient
    }
}

/// Contracts the rungs of `Z_k` (pairs `u_i v_i`) or of `M_k` (one triangle,
/// then the remaining rungs), giving `C_k` for `k ≥ 3`.
pub fn rung_contraction(ladder: &SimpleGraph) -> Result<RungCollapse> {
    let n = ladder.order();
    let (id, parts): (FamilyId, Vec<Vec<usize>>) = if n % 2 == 0 {
        let k = n / 2;
        (FamilyId::new(FamilyTag::Zigzag, k), (0..k).map(|i| vec![2 * i, 2 * i + 1]).collect())
    } else {
        let k = (n.max(1) - 1) / 2;
        let mut parts = vec![vec![0, 1, 2]];
        parts.extend((1..k).map(|i| vec![2 * i + 1, 2 * i + 2]));
        (FamilyId::new(FamilyTag::MoebiusZigzag, k), parts)
    };
    if id.k < 3 {
        return Err(Error::NotALadder(format!(
            "order {n} gives {id}, too small to collapse to a cycle"
        )));
    }
    let model = generate(id)?;
    let map = is_isomorphic(&model, ladder).ok_or_else(|| Error::NotALadder(format!("input is not isomorphic to {id}")))?;
    let parts: Vec<Vec<usize>> = parts.iter().map(|p| p.iter().map(|&v| map[v]).collect()).collect();
    let partition = BranchPartition::new(ladder, parts)?;
    let (q, provenance) = quotient(ladder, &partition)?;
    let cycle: Vec<usize> = (0..id.k).collect();
    debug_assert!(q.is_hamilton_cycle(&cycle) && q.size() == id.k);
    Ok(RungCollapse {
        ladder: id,
        ladder_map: map,
        provenance,
        cycle,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wheel_five() {
        let w = generate(FamilyId::new(FamilyTag::Wheel, 5)).unwrap();
        assert_eq!((w.order(), w.size(), w.degree(5)), (6, 10, 5));
    }

    #[test]
    fn small_ladders() {
        let octahedron = SimpleGraph::complete(6).without_edge(0, 1).without_edge(2, 3).without_edge(4, 5);
        let z3 = generate(FamilyId::new(FamilyTag::Zigzag, 3)).unwrap();
        assert!(is_isomorphic(&z3, &octahedron).is_some());
        let m2 = generate(FamilyId::new(FamilyTag::MoebiusZigzag, 2)).unwrap();
        assert_eq!(m2, SimpleGraph::complete(5));
    }

    #[test]
    fn closed_forms() {
        for k in 3..9 {
            let z = generate(FamilyId::new(FamilyTag::Zigzag, k)).unwrap();
            assert_eq!((z.order(), z.size()), (2 * k, 4 * k));
            let m = generate(FamilyId::new(FamilyTag::MoebiusZigzag, k)).unwrap();
            assert_eq!((m.order(), m.size()), (2 * k + 1, 2 * (2 * k + 1)));
            assert_eq!(generate(FamilyId::new(FamilyTag::TripleFan, k)).unwrap().order(), k + 3);
            assert_eq!(generate(FamilyId::new(FamilyTag::DoubleWheel, k)).unwrap().order(), k + 2);
        }
    }

    #[test]
    fn identify_ties_and_round_trip() {
        let hit = identify(&SimpleGraph::complete(3)).unwrap();
        assert_eq!(hit.id, FamilyId::new(FamilyTag::Cycle, 3));
        assert!(hit.ties.contains(&FamilyId::new(FamilyTag::Clique, 3)));
        let d6 = FamilyId::new(FamilyTag::DoubleWheel, 6);
        assert_eq!(identify(&generate(d6).unwrap()).unwrap().id, d6);
        assert!(identify(&SimpleGraph::petersen()).is_none());
    }

    #[test]
    fn rung_collapse() {
        for k in 3..=8 {
            let z = generate(FamilyId::new(FamilyTag::Zigzag, k)).unwrap();
            let rc = rung_contraction(&z).unwrap();
            assert!(is_isomorphic(rc.quotient(), &SimpleGraph::cycle(k)).is_some());
        }
        let z4 = generate(FamilyId::new(FamilyTag::Zigzag, 4)).unwrap();
        let rc = rung_contraction(&z4).unwrap();
        assert!(rc.provenance.classes().all(|(_, c)| !c.is_empty()));
        let m3 = generate(FamilyId::new(FamilyTag::MoebiusZigzag, 3)).unwrap();
        assert_eq!(rung_contraction(&m3).unwrap().quotient().size(), 3);
        assert!(matches!(rung_contraction(&SimpleGraph::complete(5)), Err(Error::NotALadder(_))));
        assert!(matches!(rung_contraction(&SimpleGraph::cycle(8)), Err(Error::NotALadder(_))));
    }

    #[test]
    fn tags_parse() {
        for t in FamilyTag::ALL {
            assert_eq!(t.name().parse::<FamilyTag>().unwrap(), t);
        }
        assert_eq!("W".parse::<FamilyTag>().unwrap(), FamilyTag::Wheel);
    }
}
