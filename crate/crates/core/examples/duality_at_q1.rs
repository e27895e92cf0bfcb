//! At q = 1 the signed multivariate polynomial does not see partial duality,
//! and each quasi-tree's share moves with it.

use ribbon_graph::duality::partial_dual;
use ribbon_graph::oracle::{at_q1, at_q1_single_alpha, signed_multivariate_br};
use ribbon_graph::quasitree::{n_term_q1, phi, q1_expansion, records, QuasiTreeRecord};
use ribbon_graph::{EdgeOrder, RibbonGraph};

const GRAPH: &str = include_str!("../fixtures/appendix.rg");

fn main() -> ribbon_graph::Result<()> {
    let g: RibbonGraph = GRAPH.parse()?;
    let order = EdgeOrder::identity(g.num_edges());
    let z = at_q1(&signed_multivariate_br(&g));
    println!("Z_s(G; 1, alpha, c) has {} terms", z.len());

    for set in g.edges().subsets() {
        let d = partial_dual(&g, set);
        let same = at_q1(&signed_multivariate_br(&d)) == z;
        let shares = records(&g, &order)?.iter().all(|r| {
            QuasiTreeRecord::new(&d, phi(set, r.edges), &order)
                .map(|r2| n_term_q1(&d, &r2) == n_term_q1(&g, r))
                .unwrap_or(false)
        });
        println!("E' = {:<14} Z unchanged: {same}  per-quasi-tree shares unchanged: {shares}", g.format_set(set));
    }

    let single = q1_expansion(&g, &order)?;
    assert_eq!(single, at_q1_single_alpha(&g, &signed_multivariate_br(&g)));
    println!("\nwith one weight A: {single}");
    Ok(())
}
