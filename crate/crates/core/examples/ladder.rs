//! Ladders: rung contraction to a cycle, and the internally 4-connected
//! driver on zigzag and double wheel hosts.

use pminor::extraction::extract_4c;
use pminor::families::{rung_contraction, FamilyId, FamilyTag};
use pminor::generate;

fn main() {
    for (tag, k) in [(FamilyTag::Zigzag, 6), (FamilyTag::MoebiusZigzag, 6)] {
        let ladder = generate(FamilyId::new(tag, k)).unwrap();
        let rc = rung_contraction(&ladder).expect("a ladder");
        println!("{}: {} vertices collapse to a cycle of {}", rc.ladder, ladder.order(), rc.quotient().order());
        for (i, p) in rc.provenance.partition.parts().iter().enumerate() {
            println!("    rung {i}: {p:?}");
        }
    }
    for (tag, k, want) in [(FamilyTag::Zigzag, 20, 5), (FamilyTag::DoubleWheel, 20, 6), (FamilyTag::MoebiusZigzag, 15, 5)] {
        let host = generate(FamilyId::new(tag, k)).unwrap();
        let out = extract_4c(&host, want).expect("internally 4-connected");
        let found = out.certificate().map_or("insufficient".to_string(), |c| c.family.to_string());
        println!("{} at k = {want}: {found}", FamilyId::new(tag, k));
    }
}
