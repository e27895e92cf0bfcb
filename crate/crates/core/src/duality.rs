//! Partial duality and the operations built from it.

use crate::edge_set::EdgeSet;
use crate::error::{Error, Result};
use crate::ribbon::RibbonGraph;

/// `G^{E'}`: the circles are the boundary components of `F_{E'}`; labels are
/// kept and the signs of `E'` are flipped.
pub fn partial_dual(g: &RibbonGraph, set: EdgeSet) -> RibbonGraph {
    let circles = g.boundary_trace(set);
    let signs = g
        .signs()
        .iter()
        .enumerate()
        .map(|(e, &s)| if set.contains(e) { s.flipped() } else { s })
        .collect();
    RibbonGraph::new(g.labels().to_vec(), signs, circles).expect("boundary trace keeps two arrows per edge")
}

pub fn natural_dual(g: &RibbonGraph) -> RibbonGraph {
    partial_dual(g, g.edges())
}

/// `G - e`.
pub fn delete(g: &RibbonGraph, e: usize) -> Result<RibbonGraph> {
    check_edge(g, e)?;
    Ok(g.keep_edges(g.edges().without(e)))
}

/// Removes every edge of `set`.
pub fn delete_all(g: &RibbonGraph, set: EdgeSet) -> RibbonGraph {
    g.keep_edges(g.edges().difference(set))
}

/// `G/e = G^{{e}} - e`.
pub fn contract(g: &RibbonGraph, e: usize) -> Result<RibbonGraph> {
    check_edge(g, e)?;
    Ok(contract_all(g, EdgeSet::singleton(e)))
}

/// `G/A = G^{A} - A`.
pub fn contract_all(g: &RibbonGraph, set: EdgeSet) -> RibbonGraph {
    delete_all(&partial_dual(g, set), set)
}

fn check_edge(g: &RibbonGraph, e: usize) -> Result<()> {
    if e < g.num_edges() {
        Ok(())
    } else {
        Err(Error::UnknownEdge(format!("#{e}")))
    }
}

/// Whether the arrows of `e` and `f` alternate around the single circle of `g`.
pub fn crossing(g: &RibbonGraph, e: usize, f: usize) -> Result<bool> {
    if g.num_vertices() != 1 {
        return Err(Error::NotOneVertex(g.num_vertices()));
    }
    check_edge(g, e)?;
    check_edge(g, f)?;
    if e == f {
        return Err(Error::SameEdge);
    }
    let [a1, a2] = g.slots(e);
    let (lo, hi) = (a1.pos.min(a2.pos), a1.pos.max(a2.pos));
    let inside = g
        .slots(f)
        .iter()
        .filter(|s| lo < s.pos && s.pos < hi)
        .count();
    Ok(inside == 1)
}

/// Edges `e` and `f` link with respect to the quasi-tree `q` when they cross
/// in `G^{E(q)}`.
pub fn links(g: &RibbonGraph, q: EdgeSet, e: usize, f: usize) -> Result<bool> {
    let d = partial_dual(g, q);
    if d.num_vertices() != 1 {
        return Err(Error::NotQuasiTree(g.format_set(q)));
    }
    crossing(&d, e, f)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(text: &str) -> RibbonGraph {
        text.parse().unwrap()
    }

    #[test]
    fn empty_dual_is_identity() {
        let h = g("sign b -\ncircle: a> b< a< c>\ncircle: b> c>\ncircle:");
        assert_eq!(partial_dual(&h, EdgeSet::EMPTY), h);
    }

    #[test]
    fn moebius_is_self_dual() {
        let m = g("circle: e> e>");
        let d = partial_dual(&m, m.edges());
        assert_eq!(d.num_vertices(), 1);
        assert_eq!(d.counts().f, 1);
        assert!(d.is_twisted(0));
    }

    #[test]
    fn dual_of_annulus() {
        let a = g("circle: e> e<");
        let d = natural_dual(&a);
        let c = d.counts();
        assert_eq!((c.v, c.e, c.f), (2, 1, 1));
    }

    #[test]
    fn contractions() {
        let bridge = g("circle: e>\ncircle: e<");
        let c = contract(&bridge, 0).unwrap().counts();
        assert_eq!((c.v, c.e), (1, 0));
        let twisted = g("circle: e> e>");
        assert_eq!(contract(&twisted, 0).unwrap().num_vertices(), 1);
        let plain = g("circle: e> e<");
        assert_eq!(contract(&plain, 0).unwrap().num_vertices(), 2);
        assert!(contract(&plain, 3).is_err());
    }

    #[test]
    fn deletion() {
        let plain = g("circle: e> e<");
        let d = delete(&plain, 0).unwrap();
        assert_eq!((d.num_vertices(), d.num_edges()), (1, 0));
    }

    #[test]
    fn crossing_rules() {
        let h = g("circle: e2> e1> e2< e3> e1> e3<");
        assert!(crossing(&h, 0, 1).unwrap());
        assert!(crossing(&h, 0, 2).unwrap());
        assert!(!crossing(&h, 1, 2).unwrap());
        assert_eq!(crossing(&h, 1, 1), Err(Error::SameEdge));
        let nested = g("circle: e1> e1< e2> e2<");
        assert!(!crossing(&nested, 0, 1).unwrap());
        let two = g("circle: e>\ncircle: e<");
        assert_eq!(crossing(&two, 0, 0), Err(Error::NotOneVertex(2)));
    }
}
