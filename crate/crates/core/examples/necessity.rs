//! Checks on small orders that a family's proper parallel minors of the same
//! connectivity class stay inside the family.

use pminor::extraction::necessity_check;
use pminor::families::FamilyTag;

fn main() {
    for (tag, c, cap) in [(FamilyTag::Cycle, 2, 9), (FamilyTag::Fan, 2, 8), (FamilyTag::Wheel, 3, 8), (FamilyTag::Path, 1, 9)] {
        let r = necessity_check(tag, c, cap).expect("valid class");
        println!(
            "{tag} at class {c}, orders {}..={cap}: {} members, {} minors, {}",
            r.floor,
            r.members.len(),
            r.minors_checked,
            if r.holds() { "closed".to_string() } else { format!("{} counterexamples", r.counterexamples.len()) }
        );
    }
}
