//! Quasi-trees of a graph with their activities and contributions.
//!
//! `cargo run --example quasi_tree_table -- e4,e3,e2,e1` uses a different
//! edge order (lowest first).

use ribbon_graph::quasitree::{qt_expansion_signed, qt_report};
use ribbon_graph::{EdgeOrder, RibbonGraph};

const GRAPH: &str = include_str!("../fixtures/appendix.rg");

fn main() -> ribbon_graph::Result<()> {
    let g: RibbonGraph = GRAPH.parse()?;
    let order = match std::env::args().nth(1) {
        Some(order_text) => {
            let seq = order_text.split(',').map(|l| g.edge_index(l.trim())).collect::<Result<Vec<_>, _>>()?;
            EdgeOrder::from_sequence(&seq, g.num_edges())?
        }
        None => EdgeOrder::identity(g.num_edges()),
    };
    for row in qt_report(&g, &order)? {
        println!("{}", row.record.display(&g));
        println!("    N = {}", row.n);
        println!("    S = {}", row.s);
    }
    println!("sum = {}", qt_expansion_signed(&g, &order)?);
    Ok(())
}
