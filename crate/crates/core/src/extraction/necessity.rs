//! Same-family closure: large well-connected parallel minors of a family
//! member should again be members of that family.

use crate::connectivity::meets_class;
use crate::containment::for_each_connected_partition;
use crate::error::{Error, Result};
use crate::families::{generate, FamilyId, FamilyTag};
use crate::graph::SimpleGraph;
use crate::iso::is_isomorphic;
use crate::partition::{quotient, BranchPartition};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub member: FamilyId,
    pub partition: BranchPartition,
    pub quotient: SimpleGraph,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NecessityReport {
    pub tag: FamilyTag,
    pub class: usize,
    pub order_cap: usize,
    /// Quotients below this order are not checked.
    pub floor: usize,
    pub members: Vec<FamilyId>,
    /// Proper quotients of class `class` and order at least `floor`.
    pub minors_checked: usize,
    pub counterexamples: Vec<Counterexample>,
}

impl NecessityReport {
    pub fn holds(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

/// Member of `tag` (same `a` as `like`) isomorphic to `g`, if any.
fn member_like(g: &SimpleGraph, like: FamilyId) -> Option<FamilyId> {
    (like.tag.min_k()..=g.order())
        .map(|k| FamilyId { k, ..like })
        .filter(|id| id.order() == g.order())
        .find(|&id| generate(id).is_ok_and(|t| t.size() == g.size() && is_isomorphic(&t, g).is_some()))
}

/// Enumerates every connected partition of every member of `tag` up to
/// `order_cap` vertices. A quotient that is `c`-connected with at least
/// `c + 3` vertices must be a member of the same family.
pub fn necessity_check(tag: FamilyTag, c: usize, order_cap: usize) -> Result<NecessityReport> {
    if !(1..=4).contains(&c) {
        return Err(Error::ParameterOutOfRange(format!("connectivity class {c} not in 1..=4")));
    }
    let floor = c + 3;
    let a = if tag == FamilyTag::CompleteBipartite { c } else { 0 };
    let mut report = NecessityReport {
        tag,
        class: c,
        order_cap,
        floor,
        members: Vec::new(),
        minors_checked: 0,
        counterexamples: Vec::new(),
    };
    for k in tag.min_k().. {
        let id = FamilyId { tag, k, a };
        if id.order() > order_cap {
            break;
        }
        if id.order() < floor {
            continue;
        }
        let g = generate(id)?;
        report.members.push(id);
        for_each_connected_partition(&g, None, |p| {
            if p.len() == g.order() || p.len() < floor {
                return true;
            }
            let (q, _) = quotient(&g, p).expect("enumerated partitions are valid");
            if meets_class(&q, c) {
                report.minors_checked += 1;
                if member_like(&q, id).is_none() {
                    report.counterexamples.push(Counterexample {
                        member: id,
                        partition: p.clone(),
                        quotient: q,
                    });
                }
            }
            true
        });
    }
    Ok(report)
}
