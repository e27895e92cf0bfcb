//! Partial duals of a small non-orientable ribbon graph.
//!
//! Every subset of edges gives a partial dual. Its vertices are the boundary
//! components of the chosen spanning subgraph, and dualising twice with the
//! same subset returns the original graph.

use ribbon_graph::duality::{contract, natural_dual, partial_dual};
use ribbon_graph::RibbonGraph;

fn main() -> ribbon_graph::Result<()> {
    let g: RibbonGraph = "sign b -\ncircle: a> b> a< c>\ncircle: b> c<".parse()?;
    println!("G:\n{g}");
    let c = g.counts();
    println!("v={} e={} k={} f={} orientable={}\n", c.v, c.e, c.k, c.f, g.is_orientable());

    for set in g.edges().subsets() {
        let d = partial_dual(&g, set);
        let back = partial_dual(&d, set);
        println!(
            "E' = {:<9} v(G^E') = {}  f(F_E') = {}  involution ok: {}",
            g.format_set(set),
            d.num_vertices(),
            g.faces(set),
            back.same_ribbon_graph(&g)
        );
    }

    println!("\nnatural dual:\n{}", natural_dual(&g).canonical());
    println!("G / a:\n{}", contract(&g, g.edge_index("a")?)?);
    Ok(())
}
