//! Extraction drivers on standard hosts. Every certificate is re-checked by
//! the brute-force quotient in `common`, not by the library.

mod common;

use pminor::extraction::{extract_1c, extract_2c, extract_3c, extract_4c, ExtractionOutcome};
use pminor::families::{FamilyId, FamilyTag};
use pminor::{generate, theorem_list, Error, SimpleGraph};

fn fam(tag: FamilyTag, k: usize) -> SimpleGraph {
    generate(FamilyId::new(tag, k)).unwrap()
}

/// The certified family, after the oracle accepts the partition.
fn checked(host: &SimpleGraph, out: &ExtractionOutcome, c: usize, k: usize) -> FamilyId {
    let cert = out.certificate().unwrap_or_else(|| panic!("no certificate: {:?}", out.trace));
    let target = generate(cert.family).unwrap();
    assert!(common::partition_realises(host, cert.partition.parts(), &target), "oracle rejects {}", cert.family);
    assert!(theorem_list(c, k).unwrap().contains(&cert.family));
    cert.family
}

#[test]
fn long_path_gives_path() {
    let g = SimpleGraph::path(50);
    assert_eq!(checked(&g, &extract_1c(&g, 5).unwrap(), 1, 5), FamilyId::new(FamilyTag::Path, 5));
}

#[test]
fn big_star_gives_star() {
    let g = fam(FamilyTag::Star, 50);
    assert_eq!(checked(&g, &extract_1c(&g, 5).unwrap(), 1, 5), FamilyId::new(FamilyTag::Star, 5));
}

#[test]
fn long_cycle_gives_cycle() {
    let g = SimpleGraph::cycle(15);
    assert_eq!(checked(&g, &extract_2c(&g, 5).unwrap(), 2, 5), FamilyId::new(FamilyTag::Cycle, 5));
}

#[test]
fn wide_k2_prime_keeps_its_shape() {
    let g = fam(FamilyTag::K2kPrime, 30);
    assert_eq!(checked(&g, &extract_2c(&g, 6).unwrap(), 2, 6), FamilyId::new(FamilyTag::K2kPrime, 6));
}

#[test]
fn wheel_is_two_connected_host() {
    let g = fam(FamilyTag::Wheel, 20);
    checked(&g, &extract_2c(&g, 5).unwrap(), 2, 5);
}

#[test]
fn wheels_shrink_to_wheels() {
    for k in 4..=6 {
        let g = fam(FamilyTag::Wheel, k + 5);
        assert_eq!(checked(&g, &extract_3c(&g, k).unwrap(), 3, k), FamilyId::new(FamilyTag::Wheel, k));
    }
}

#[test]
fn k3_prime_and_clique_in_three_connected() {
    let g = fam(FamilyTag::K3kPrime, 20);
    assert_eq!(checked(&g, &extract_3c(&g, 5).unwrap(), 3, 5), FamilyId::new(FamilyTag::K3kPrime, 5));
    let g = SimpleGraph::complete(20);
    assert_eq!(checked(&g, &extract_3c(&g, 6).unwrap(), 3, 6), FamilyId::new(FamilyTag::Clique, 6));
}

#[test]
fn internally_four_connected_hosts() {
    let g = SimpleGraph::complete(20);
    assert_eq!(checked(&g, &extract_4c(&g, 6).unwrap(), 4, 6), FamilyId::new(FamilyTag::Clique, 6));
    let g = fam(FamilyTag::Zigzag, 20);
    assert_eq!(checked(&g, &extract_4c(&g, 5).unwrap(), 4, 5), FamilyId::new(FamilyTag::Zigzag, 5));
    let g = fam(FamilyTag::DoubleWheel, 20);
    assert_eq!(checked(&g, &extract_4c(&g, 6).unwrap(), 4, 6), FamilyId::new(FamilyTag::DoubleWheel, 6));
}

#[test]
fn class_preconditions_are_enforced() {
    assert_eq!(extract_1c(&SimpleGraph::empty(3), 3).unwrap_err(), Error::Disconnected);
    assert_eq!(extract_2c(&SimpleGraph::path(6), 3).unwrap_err(), Error::NotTwoConnected);
    assert_eq!(extract_3c(&SimpleGraph::cycle(8), 4).unwrap_err(), Error::NotThreeConnected);
    let w = fam(FamilyTag::Wheel, 8);
    assert_eq!(extract_4c(&w, 5).unwrap_err(), Error::NotInternallyFourConnected);
}
