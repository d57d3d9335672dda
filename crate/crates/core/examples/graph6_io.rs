//! graph6 round trips, and decoding from the command line.
//!
//! ```text
//! cargo run --example graph6_io -- 'ICpbbVy~_'
//! ```

use pminor::{graph6, SimpleGraph};

fn main() {
    let mut args = std::env::args().skip(1).peekable();
    if args.peek().is_none() {
        for g in [SimpleGraph::petersen(), SimpleGraph::complete(5), SimpleGraph::path(70)] {
            let text = graph6::encode(&g);
            assert_eq!(graph6::decode(&text).unwrap(), g);
            println!("order {:>2}: {text}", g.order());
        }
        return;
    }
    for a in args {
        match graph6::decode(&a) {
            Ok(g) => println!("{a}: order {}, size {}, degrees {:?}", g.order(), g.size(), g.degree_sequence()),
            Err(e) => println!("{a}: {e}"),
        }
    }
}
