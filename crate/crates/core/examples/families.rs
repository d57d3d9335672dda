//! Generates one member of every family and identifies it back.

use pminor::families::{vertex_labels, FamilyId, FamilyTag};
use pminor::{generate, identify};

fn main() {
    let k = 5;
    for tag in FamilyTag::ALL {
        let id = if tag == FamilyTag::CompleteBipartite { FamilyId::bipartite(3, k) } else { FamilyId::new(tag, k) };
        let g = generate(id).expect("k is large enough for every tag");
        let found = identify(&g).expect("generator output is a member");
        let labels = vertex_labels(id).expect("labels exist");
        println!(
            "{id:<24} order {:>3} size {:>3}  identified as {}  first labels {:?}",
            g.order(),
            g.size(),
            found.id,
            &labels[..labels.len().min(4)]
        );
    }
}
