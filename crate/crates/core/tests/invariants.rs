//! Property tests of the core operations against the brute-force oracles.

mod common;

use proptest::prelude::*;

use pminor::containment::{find_parallel_minor, verify_parallel_minor};
use pminor::iso::verify_isomorphism;
use pminor::{graph6, is_internally_4_connected, is_isomorphic, quotient, vertex_connectivity, BranchPartition, Budget, SearchOutcome, SimpleGraph};

fn graph(max_n: usize) -> impl Strategy<Value = SimpleGraph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut i = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[i] {
                        edges.push((u, v));
                    }
                    i += 1;
                }
            }
            SimpleGraph::from_edges(n, &edges).unwrap()
        })
    })
}

fn graph_with_assignment(max_n: usize) -> impl Strategy<Value = (SimpleGraph, Vec<usize>)> {
    graph(max_n).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), proptest::collection::vec(0..n, n))
    })
}

/// Relabels an arbitrary vector into a restricted growth string.
fn normalise(raw: &[usize]) -> Vec<usize> {
    let mut seen: Vec<usize> = Vec::new();
    raw.iter()
        .map(|x| match seen.iter().position(|y| y == x) {
            Some(i) => i,
            None => {
                seen.push(*x);
                seen.len() - 1
            }
        })
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn graph6_round_trip(g in graph(40)) {
        prop_assert_eq!(graph6::decode(&graph6::encode(&g)).unwrap(), g);
    }

    #[test]
    fn quotient_matches_oracle((g, raw) in graph_with_assignment(9)) {
        let assign = normalise(&raw);
        let expected = common::quotient_of(&g, &assign);
        let got = BranchPartition::from_assignment(&g, &assign).and_then(|p| quotient(&g, &p));
        match expected {
            Some(q) => prop_assert_eq!(got.unwrap().0, q),
            None => prop_assert!(got.is_err()),
        }
    }

    #[test]
    fn connectivity_matches_oracle(g in graph(8)) {
        prop_assert_eq!(vertex_connectivity(&g), common::connectivity(&g));
        prop_assert_eq!(is_internally_4_connected(&g), common::internally_4_connected(&g));
    }

    #[test]
    fn isomorphism_of_a_relabelling((g, raw) in graph_with_assignment(9)) {
        // A permutation from sorting the random keys.
        let mut perm: Vec<usize> = (0..g.order()).collect();
        perm.sort_by_key(|&i| (raw[i], i));
        let h = g.permuted(&perm);
        let map = is_isomorphic(&g, &h).expect("relabelled graphs are isomorphic");
        prop_assert!(verify_isomorphism(&g, &h, &map));
    }

    #[test]
    fn quotients_are_found_again((g, raw) in graph_with_assignment(8)) {
        let assign = normalise(&raw);
        if let Some(q) = common::quotient_of(&g, &assign) {
            match find_parallel_minor(&g, &q, Budget::default()) {
                SearchOutcome::Found(p) => {
                    prop_assert!(verify_parallel_minor(&g, &q, &p));
                    prop_assert!(common::partition_realises(&g, p.parts(), &q));
                }
                other => prop_assert!(false, "expected a partition, got {:?}", other.is_found()),
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    /// Absence claims agree with exhaustive enumeration of the host's
    /// parallel minors.
    #[test]
    fn containment_agrees_with_enumeration(host in graph(6), target in graph(4)) {
        let perms = common::Perms::up_to(6);
        let all = common::parallel_minors(&host, Some(target.order()), &perms);
        let expected = all.contains(&perms.canon(&target));
        let got = find_parallel_minor(&host, &target, Budget::default());
        prop_assert_eq!(got.is_found(), expected);
    }
}
