//! Reading, validating and writing the `.hg` text format.
//!
//!     cargo run --example hg_format

use hyperzeta::{parse_hypergraph, Hypergraph};

const TEXT: &str = "\
# a 3-edge with a pendant path attached
vertices 6
edge 0 1 2
edge 0 3
edge 1 3
edge 2 3
edge 3 4
edge 4 5
";

fn main() -> hyperzeta::Result<()> {
    let h: Hypergraph = parse_hypergraph(TEXT)?;
    let report = h.validate();
    println!("{report:?}");
    println!("problems: {:?}", report.failures());
    let core = h.prune_leaves();
    print!("after pruning degree-1 vertices:\n{}", core.to_hg_string());
    println!("dual:\n{}", core.dual().to_hg_string());
    for bad in ["vertices 3\nedge 0 5\nedge 1 2\n", "edge 0 1\n", "vertices 2\nedge 0 0 1\n"] {
        println!("{:?} -> {}", bad, parse_hypergraph(bad).unwrap_err());
    }
    Ok(())
}
