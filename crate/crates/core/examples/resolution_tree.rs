//! The binary tree of partial resolutions and the packets of spanning
//! subgraphs hanging off its leaves.

use ribbon_graph::quasitree::{subgraph_decomposition, ResolutionTree};
use ribbon_graph::{EdgeOrder, RibbonGraph};

fn main() -> ribbon_graph::Result<()> {
    // One vertex, a twisted loop e1 crossing e2 and e3.
    let g: RibbonGraph = "circle: e2> e1> e2< e3> e1> e3<".parse()?;
    let tree = ResolutionTree::build(&g, &EdgeOrder::identity(3))?;
    print!("{}", tree.render(&g));

    println!();
    for f in g.edges().subsets() {
        let d = subgraph_decomposition(&tree, &g, f)?;
        println!(
            "F = {:<12} Q = {:<9} S1 = {:<5} S2 = {}",
            g.format_set(f),
            g.format_set(d.quasi_tree),
            g.format_set(d.s1),
            g.format_set(d.s2)
        );
    }
    Ok(())
}
