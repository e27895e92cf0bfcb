use ribbon_graph::poly::{rank_poly, tutte, AbstractGraph, RankArgs};
use ribbon_graph::{LaurentPoly, RibbonGraph, Sign};

fn main() -> ribbon_graph::Result<()> {
    // K4 as an abstract graph.
    let mut k4 = AbstractGraph::new(4);
    let mut label = 0;
    for u in 0..4 {
        for v in u + 1..4 {
            k4.add_edge(u, v, Sign::Plus, label);
            label += 1;
        }
    }
    println!("T(K4) = {}", tutte(&k4));
    println!("Ra(K4) = {}", rank_poly(&k4, &RankArgs::symbolic()));

    // The underlying graph of a ribbon graph forgets the surface.
    let g: RibbonGraph = "circle: a> b> a< b<".parse()?;
    let h = g.underlying_graph();
    println!("T(underlying torus graph) = {}", tutte(&h));

    // T(2, 2) counts all edge subsets.
    let two = LaurentPoly::constant(2);
    println!("T(K4; 2, 2) = {}", ribbon_graph::poly::tutte_at(&k4, &two, &two));
    Ok(())
}
