//! Vertex connectivity, blocks and cut vertices.

use pminor::connectivity::{blocks, cut_vertices, disjoint_paths};
use pminor::{is_internally_4_connected, vertex_connectivity, SimpleGraph};

fn main() {
    let p = SimpleGraph::petersen();
    println!("Petersen: connectivity {}, internally 4-connected {}", vertex_connectivity(&p), is_internally_4_connected(&p));
    for path in disjoint_paths(&p, 0, 7, 3) {
        println!("  path {path:?}");
    }

    // Two triangles sharing vertex 2, with a pendant vertex on 4.
    let bowtie = SimpleGraph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4), (4, 5)]).unwrap();
    let (bs, _) = blocks(&bowtie);
    println!("bowtie plus pendant: blocks {bs:?}, cut vertices {:?}", cut_vertices(&bowtie));
}
