//! Generators against independent counts and connectivity, and identify as
//! the inverse of generate.

mod common;

use pminor::families::{theorem_tags, FamilyId, FamilyTag};
use pminor::{generate, identify, theorem_list};

fn id(tag: FamilyTag, k: usize) -> FamilyId {
    if tag == FamilyTag::CompleteBipartite {
        FamilyId::bipartite(3, k)
    } else {
        FamilyId::new(tag, k)
    }
}

#[test]
fn identify_inverts_generate() {
    for tag in FamilyTag::ALL {
        for k in tag.min_k().max(3)..=9 {
            let member = id(tag, k);
            let g = generate(member).unwrap();
            let found = identify(&g).unwrap_or_else(|| panic!("{member} not identified"));
            let all: Vec<FamilyId> = std::iter::once(found.id).chain(found.ties).collect();
            assert!(all.contains(&member), "{member} identified as {all:?}");
            for other in all {
                assert_eq!(generate(other).unwrap().order(), g.order());
            }
        }
    }
}

#[test]
fn orders_match_the_tag_formula() {
    for tag in FamilyTag::ALL {
        for k in tag.min_k()..=10 {
            let member = id(tag, k);
            assert_eq!(generate(member).unwrap().order(), member.order(), "{member}");
        }
    }
}

#[test]
fn list_members_have_their_class() {
    let k = 6;
    for c in 1..=4 {
        for member in theorem_list(c, k).unwrap() {
            let g = generate(member).unwrap();
            let ok = if c == 4 { common::internally_4_connected(&g) } else { common::connectivity(&g) >= c };
            assert!(ok, "{member} is not in class {c}");
        }
    }
}

#[test]
fn lists_have_the_expected_lengths() {
    let lens: Vec<usize> = (1..=4).map(|c| theorem_tags(c).unwrap().len()).collect();
    assert_eq!(lens, vec![4, 4, 4, 7]);
}

#[test]
fn small_members_are_pairwise_distinct_within_a_list() {
    let perms = common::Perms::up_to(8);
    for c in 1..=3 {
        let k = pminor::families::theorem_min_k(c).unwrap().max(4);
        let gs: Vec<_> = theorem_list(c, k).unwrap().into_iter().map(|m| generate(m).unwrap()).collect();
        for i in 0..gs.len() {
            for j in i + 1..gs.len() {
                if gs[i].order() <= 8 && gs[j].order() <= 8 {
                    assert!(!perms.isomorphic(&gs[i], &gs[j]), "class {c}: members {i} and {j} coincide");
                }
            }
        }
    }
}
