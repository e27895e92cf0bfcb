//! The Kauffman bracket of a virtual link diagram, three ways.

use ribbon_graph::virtual_link::{
    bracket_via_ribbon, connected_state_expansion, connected_state_terms, kauffman_statesum, State, VirtualDiagram,
};
use ribbon_graph::EdgeOrder;

const DIAGRAM: &str = include_str!("../fixtures/whitehead.gauss");

fn main() -> ribbon_graph::Result<()> {
    let d: VirtualDiagram = DIAGRAM.parse()?;
    let n = d.num_crossings();
    for s in State::all(n) {
        let sum = d.summary(&s)?;
        println!("{s}  (a, b, c) = ({}, {}, {})", sum.a, sum.b, sum.c);
    }

    let order = EdgeOrder::identity(n);
    println!("\nstate sum:       {}", kauffman_statesum(&d));
    println!("ribbon graph:    {}", bracket_via_ribbon(&d, &State::all_a(n))?);
    println!("connected states {}", connected_state_expansion(&d, &order)?);
    for t in connected_state_terms(&d, &order)? {
        println!(
            "  {}  live A {:?}  live B {:?}  term {}",
            t.state,
            t.live_a.iter().map(|x| d.label(x)).collect::<Vec<_>>(),
            t.live_b.iter().map(|x| d.label(x)).collect::<Vec<_>>(),
            t.term
        );
    }
    Ok(())
}
