//! The signed polynomial of a graph computed twice: by summing over every
//! spanning subgraph and by the quasi-tree expansion.

use ribbon_graph::oracle::{br_poly, signed_br};
use ribbon_graph::quasitree::qt_expansion_signed;
use ribbon_graph::{EdgeOrder, RibbonGraph};

const GRAPH: &str = include_str!("../fixtures/appendix.rg");

fn main() -> ribbon_graph::Result<()> {
    let g: RibbonGraph = GRAPH.parse()?;
    let by_subgraphs = signed_br(&g);
    let by_quasi_trees = qt_expansion_signed(&g, &EdgeOrder::identity(g.num_edges()))?;
    println!("R_s(G; x+1, y, z) = {by_subgraphs}");
    println!("quasi-tree sum     = {by_quasi_trees}");
    assert_eq!(by_subgraphs, by_quasi_trees);

    // Forgetting the signs gives the classical polynomial, reduced mod w^2 - w.
    println!("R(|G|; x, y, z, w) = {}", br_poly(&g.unsigned()));
    Ok(())
}
