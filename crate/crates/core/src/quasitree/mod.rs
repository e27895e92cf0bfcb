//! Quasi-trees, activities with respect to a quasi-tree, the binary tree of
//! partial resolutions, and the quasi-tree expansions built on them.

mod expansion;
mod resolution;

use std::fmt;

use crate::duality::partial_dual;
use crate::edge_set::{EdgeOrder, EdgeSet};
use crate::error::{Error, Result};
use crate::poly::AbstractGraph;
use crate::ribbon::{GraphCounts, RibbonGraph, UnionFind};

pub use expansion::{
    n_term, n_term_q1, q1_expansion, qt_expansion_multivariate, qt_expansion_signed, qt_expansion_w1,
    qt_report, signed_term, QtReportRow,
};
pub use resolution::{nugatory, PartialResolution, ResolutionNode, ResolutionTree};

/// A spanning subgraph is a quasi-tree when it has exactly one boundary
/// component.
pub fn is_quasi_tree(g: &RibbonGraph, set: EdgeSet) -> bool {
    g.faces(set) == 1
}

pub(crate) fn require_connected(g: &RibbonGraph) -> Result<()> {
    let k = g.counts().k;
    if k == 1 {
        Ok(())
    } else {
        Err(Error::Disconnected(k))
    }
}

/// All quasi-trees, by filtering every spanning subgraph.
pub fn quasi_trees(g: &RibbonGraph) -> Result<Vec<EdgeSet>> {
    require_connected(g)?;
    Ok(g.edges().subsets().filter(|&s| is_quasi_tree(g, s)).collect())
}

/// For a one-vertex graph, `result[e]` holds the edges crossing `e`.
pub fn crossing_masks(d: &RibbonGraph) -> Result<Vec<EdgeSet>> {
    if d.num_vertices() != 1 {
        return Err(Error::NotOneVertex(d.num_vertices()));
    }
    let word = &d.circles()[0];
    let n = d.num_edges();
    let mut masks = vec![EdgeSet::EMPTY; n];
    for e in 0..n {
        let [a, b] = d.slots(e);
        let (lo, hi) = (a.pos.min(b.pos), a.pos.max(b.pos));
        // Edges met exactly once strictly between the two marks of `e`.
        let mut single = EdgeSet::EMPTY;
        for arrow in &word[lo + 1..hi] {
            single = single.toggled(arrow.edge);
        }
        masks[e] = single;
    }
    Ok(masks)
}

/// The six activity classes of the edges with respect to a quasi-tree.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Activities {
    pub internal_live_orientable: EdgeSet,
    pub internal_live_nonorientable: EdgeSet,
    pub internal_dead: EdgeSet,
    pub external_live_orientable: EdgeSet,
    pub external_live_nonorientable: EdgeSet,
    pub external_dead: EdgeSet,
}

impl Activities {
    /// `D ∪ I_n`, the edges every subgraph of the quasi-tree's class contains.
    pub fn base(&self) -> EdgeSet {
        self.internal_dead.union(self.internal_live_nonorientable)
    }

    pub fn internal(&self) -> EdgeSet {
        self.base().union(self.internal_live_orientable)
    }

    pub fn live_orientable(&self) -> EdgeSet {
        self.internal_live_orientable.union(self.external_live_orientable)
    }

    pub fn live(&self) -> EdgeSet {
        self.live_orientable()
            .union(self.internal_live_nonorientable)
            .union(self.external_live_nonorientable)
    }

    pub fn all(&self) -> EdgeSet {
        self.internal()
            .union(self.external_live_orientable)
            .union(self.external_live_nonorientable)
            .union(self.external_dead)
    }
}

/// Activities of every edge with respect to the quasi-tree `q` and `order`.
///
/// In the one-vertex graph `G^{E(q)}` an edge is live when it crosses no
/// lower-ordered edge, and orientable when it is an untwisted loop.
pub fn activities(g: &RibbonGraph, q: EdgeSet, order: &EdgeOrder) -> Result<Activities> {
    check_order(g, order)?;
    let d = partial_dual(g, q);
    if d.num_vertices() != 1 {
        return Err(Error::NotQuasiTree(g.format_set(q)));
    }
    let masks = crossing_masks(&d)?;
    let mut act = Activities::default();
    for e in 0..g.num_edges() {
        let live = masks[e].iter().all(|f| !order.precedes(f, e));
        let orientable = !d.is_twisted(e);
        let slot = match (q.contains(e), live, orientable) {
            (true, true, true) => &mut act.internal_live_orientable,
            (true, true, false) => &mut act.internal_live_nonorientable,
            (true, false, _) => &mut act.internal_dead,
            (false, true, true) => &mut act.external_live_orientable,
            (false, true, false) => &mut act.external_live_nonorientable,
            (false, false, _) => &mut act.external_dead,
        };
        *slot = slot.with(e);
    }
    Ok(act)
}

pub(crate) fn check_order(g: &RibbonGraph, order: &EdgeOrder) -> Result<()> {
    if order.len() == g.num_edges() {
        Ok(())
    } else {
        Err(Error::InvalidOrder(format!(
            "order has {} edges, graph has {}",
            order.len(),
            g.num_edges()
        )))
    }
}

/// `G_Q`: the underlying graph with `D ∪ I_n` contracted, keeping only the
/// edges of `I_o`.
pub fn build_gq(g: &RibbonGraph, act: &Activities) -> AbstractGraph {
    let mut uf = UnionFind::new(g.num_vertices());
    for e in act.base().iter() {
        let (a, b) = g.endpoints(e);
        uf.union(a, b);
    }
    let id = uf.labels();
    let mut h = AbstractGraph::new(uf.count());
    for e in act.internal_live_orientable.iter() {
        let (a, b) = g.endpoints(e);
        h.add_edge(id[a], id[b], g.sign(e), e);
    }
    h
}

/// Everything the expansions need about one quasi-tree.
#[derive(Clone, Debug)]
pub struct QuasiTreeRecord {
    pub edges: EdgeSet,
    pub activities: Activities,
    pub gq: AbstractGraph,
    /// Counts of `F_{D ∪ I_n}`.
    pub base_counts: GraphCounts,
}

impl QuasiTreeRecord {
    pub fn new(g: &RibbonGraph, q: EdgeSet, order: &EdgeOrder) -> Result<Self> {
        let act = activities(g, q, order)?;
        Ok(QuasiTreeRecord {
            edges: q,
            activities: act,
            gq: build_gq(g, &act),
            base_counts: g.sub_counts(act.base()),
        })
    }

    pub fn display<'a>(&'a self, g: &'a RibbonGraph) -> impl fmt::Display + 'a {
        RecordDisplay { r: self, g }
    }
}

struct RecordDisplay<'a> {
    r: &'a QuasiTreeRecord,
    g: &'a RibbonGraph,
}

impl fmt::Display for RecordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a = &self.r.activities;
        let s = |x| self.g.format_set(x);
        write!(
            f,
            "Q={} Io={} In={} D={} Eo={} En={} dead={}",
            s(self.r.edges),
            s(a.internal_live_orientable),
            s(a.internal_live_nonorientable),
            s(a.internal_dead),
            s(a.external_live_orientable),
            s(a.external_live_nonorientable),
            s(a.external_dead)
        )
    }
}

/// Quasi-tree records, one per leaf of the resolution tree.
pub fn records(g: &RibbonGraph, order: &EdgeOrder) -> Result<Vec<QuasiTreeRecord>> {
    let tree = ResolutionTree::build(g, order)?;
    tree.leaves()
        .map(|n| QuasiTreeRecord::new(g, n.quasi_tree.expect("leaf"), order))
        .collect()
}

/// `φ(F) = E' Δ E(F)`.
pub fn phi(e_prime: EdgeSet, f: EdgeSet) -> EdgeSet {
    e_prime.symmetric_difference(f)
}

/// The decomposition `E(F) = D(Q_F) ∪ I_n(Q_F) ∪ S₁ ∪ S₂` of a spanning
/// subgraph through the leaf class that contains it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub quasi_tree: EdgeSet,
    pub s1: EdgeSet,
    pub s2: EdgeSet,
}

pub fn subgraph_decomposition(tree: &ResolutionTree, g: &RibbonGraph, f: EdgeSet) -> Result<Decomposition> {
    let leaf = tree
        .leaves()
        .find(|n| n.rho.contains(f))
        .expect("leaf classes cover every subgraph");
    let q = leaf.quasi_tree.expect("leaf");
    let act = activities(g, q, tree.order())?;
    Ok(Decomposition {
        quasi_tree: q,
        s1: f.intersection(act.internal_live_orientable),
        s2: f.intersection(act.external_live_orientable),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(text: &str) -> RibbonGraph {
        text.parse().unwrap()
    }

    #[test]
    fn small_quasi_tree_checks() {
        assert!(is_quasi_tree(&g("circle: a> b> a< b<"), EdgeSet::EMPTY));
        let m = g("circle: e> e>");
        assert!(is_quasi_tree(&m, m.edges()));
        let a = g("circle: e> e<");
        assert!(!is_quasi_tree(&a, a.edges()));
    }

    #[test]
    fn plane_path_has_one_quasi_tree() {
        let path = g("circle: a>\ncircle: a< b>\ncircle: b<");
        assert_eq!(quasi_trees(&path).unwrap(), vec![path.edges()]);
    }

    #[test]
    fn disconnected_is_rejected() {
        let two = g("circle:\ncircle:");
        assert_eq!(quasi_trees(&two), Err(Error::Disconnected(2)));
    }

    #[test]
    fn gq_without_orientable_internal_edges() {
        let m = g("circle: e> e>");
        let act = activities(&m, m.edges(), &EdgeOrder::identity(1)).unwrap();
        let gq = build_gq(&m, &act);
        assert_eq!((gq.num_vertices(), gq.num_edges()), (1, 0));
    }

    #[test]
    fn phi_is_an_involution() {
        let e = EdgeSet::from_indices([0, 2]);
        assert_eq!(phi(e, EdgeSet::EMPTY), e);
        assert_eq!(phi(e, e), EdgeSet::EMPTY);
        let f = EdgeSet::from_indices([1, 2]);
        assert_eq!(phi(e, phi(e, f)), f);
    }
}
