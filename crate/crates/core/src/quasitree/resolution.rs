use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;

use super::{check_order, is_quasi_tree, require_connected};
use crate::edge_set::{EdgeOrder, EdgeSet};
use crate::error::{Error, Result};
use crate::ribbon::RibbonGraph;

/// A map from edges to `{0, 1, *}`: `resolved` holds the edges with a value,
/// `ones` those resolved to 1.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct PartialResolution {
    pub resolved: EdgeSet,
    pub ones: EdgeSet,
    edges: usize,
}

impl PartialResolution {
    pub fn unresolved_all(edges: usize) -> Self {
        PartialResolution {
            resolved: EdgeSet::EMPTY,
            ones: EdgeSet::EMPTY,
            edges,
        }
    }

    pub fn value(&self, e: usize) -> Option<bool> {
        self.resolved.contains(e).then(|| self.ones.contains(e))
    }

    pub fn unresolved(&self) -> EdgeSet {
        self.resolved.complement(self.edges)
    }

    pub fn resolve(&self, e: usize, one: bool) -> Self {
        PartialResolution {
            resolved: self.resolved.with(e),
            ones: if one { self.ones.with(e) } else { self.ones },
            edges: self.edges,
        }
    }

    /// Whether the resolution with edge set `f` lies in `[ρ]`.
    pub fn contains(&self, f: EdgeSet) -> bool {
        f.intersection(self.resolved) == self.ones
    }

    /// Every edge set in `[ρ]`.
    pub fn class(&self) -> impl Iterator<Item = EdgeSet> + '_ {
        self.unresolved().subsets().map(move |s| s.union(self.ones))
    }

    pub fn class_size(&self) -> u64 {
        1u64 << self.unresolved().len()
    }
}

impl fmt::Display for PartialResolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in 0..self.edges {
            let c = match self.value(e) {
                None => '*',
                Some(false) => '0',
                Some(true) => '1',
            };
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for PartialResolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Memoised test for "the class contains a quasi-tree".
struct QuasiTreeSearch<'a> {
    g: &'a RibbonGraph,
    memo: RefCell<HashMap<(EdgeSet, EdgeSet), bool>>,
}

impl<'a> QuasiTreeSearch<'a> {
    fn new(g: &'a RibbonGraph) -> Self {
        QuasiTreeSearch {
            g,
            memo: RefCell::new(HashMap::new()),
        }
    }

    fn class_has_quasi_tree(&self, rho: &PartialResolution) -> bool {
        let key = (rho.resolved, rho.ones);
        if let Some(&hit) = self.memo.borrow().get(&key) {
            return hit;
        }
        let found = rho.class().any(|s| is_quasi_tree(self.g, s));
        self.memo.borrow_mut().insert(key, found);
        found
    }

    fn nugatory(&self, rho: &PartialResolution, e: usize) -> bool {
        !self.class_has_quasi_tree(&rho.resolve(e, false)) || !self.class_has_quasi_tree(&rho.resolve(e, true))
    }
}

/// Whether `e` is nugatory at `rho`: one of its two resolutions leaves a
/// class without quasi-trees.
pub fn nugatory(g: &RibbonGraph, rho: &PartialResolution, e: usize) -> Result<bool> {
    if rho.value(e).is_some() {
        return Err(Error::AlreadyResolved(g.label(e).to_string()));
    }
    Ok(QuasiTreeSearch::new(g).nugatory(rho, e))
}

#[derive(Clone, Debug)]
pub struct ResolutionNode {
    pub rho: PartialResolution,
    /// Edge resolved to produce the children, and the children's indices
    /// (resolved to 0, resolved to 1).
    pub split: Option<(usize, [usize; 2])>,
    /// Nugatory edges skipped at this node before the split.
    pub skipped: EdgeSet,
    /// The unique quasi-tree of the class, for leaves.
    pub quasi_tree: Option<EdgeSet>,
}

impl ResolutionNode {
    pub fn is_leaf(&self) -> bool {
        self.split.is_none()
    }
}

/// The rooted binary tree of partial resolutions. Edges are resolved from the
/// highest to the lowest; nugatory edges stay unresolved.
#[derive(Clone, Debug)]
pub struct ResolutionTree {
    order: EdgeOrder,
    nodes: Vec<ResolutionNode>,
}

impl ResolutionTree {
    pub fn build(g: &RibbonGraph, order: &EdgeOrder) -> Result<Self> {
        require_connected(g)?;
        check_order(g, order)?;
        let search = QuasiTreeSearch::new(g);
        let descending: Vec<usize> = order.sequence().into_iter().rev().collect();
        let mut nodes: Vec<ResolutionNode> = Vec::new();
        let root = PartialResolution::unresolved_all(g.num_edges());
        // (node index, position in `descending` to continue from)
        let mut stack = vec![(0usize, 0usize)];
        nodes.push(ResolutionNode {
            rho: root,
            split: None,
            skipped: EdgeSet::EMPTY,
            quasi_tree: None,
        });
        while let Some((idx, mut pos)) = stack.pop() {
            let rho = nodes[idx].rho;
            let mut skipped = EdgeSet::EMPTY;
            while pos < descending.len() && search.nugatory(&rho, descending[pos]) {
                skipped = skipped.with(descending[pos]);
                pos += 1;
            }
            nodes[idx].skipped = skipped;
            if pos == descending.len() {
                let q = rho
                    .class()
                    .find(|&s| is_quasi_tree(g, s))
                    .expect("every node's class holds a quasi-tree");
                nodes[idx].quasi_tree = Some(q);
                continue;
            }
            let e = descending[pos];
            let mut kids = [0; 2];
            for (i, one) in [false, true].into_iter().enumerate() {
                kids[i] = nodes.len();
                nodes.push(ResolutionNode {
                    rho: rho.resolve(e, one),
                    split: None,
                    skipped: EdgeSet::EMPTY,
                    quasi_tree: None,
                });
            }
            nodes[idx].split = Some((e, kids));
            stack.push((kids[1], pos + 1));
            stack.push((kids[0], pos + 1));
        }
        Ok(ResolutionTree {
            order: order.clone(),
            nodes,
        })
    }

    pub fn order(&self) -> &EdgeOrder {
        &self.order
    }

    pub fn root(&self) -> &ResolutionNode {
        &self.nodes[0]
    }

    pub fn nodes(&self) -> &[ResolutionNode] {
        &self.nodes
    }

    /// Leaves in left-to-right order.
    pub fn leaves(&self) -> impl Iterator<Item = &ResolutionNode> {
        let mut out = Vec::new();
        let mut stack = vec![0usize];
        while let Some(i) = stack.pop() {
            match self.nodes[i].split {
                None => out.push(&self.nodes[i]),
                Some((_, [l, r])) => {
                    stack.push(r);
                    stack.push(l);
                }
            }
        }
        out.into_iter()
    }

    /// Finds a node by its `{0,1,*}` string, written in edge-index order.
    pub fn find(&self, label: &str) -> Option<&ResolutionNode> {
        self.nodes.iter().find(|n| n.rho.to_string() == label)
    }

    /// Indented drawing of the tree, one node per line.
    pub fn render(&self, g: &RibbonGraph) -> String {
        let mut out = String::new();
        self.render_node(g, 0, 0, &mut out);
        out
    }

    fn render_node(&self, g: &RibbonGraph, i: usize, depth: usize, out: &mut String) {
        let n = &self.nodes[i];
        out.push_str(&"  ".repeat(depth));
        out.push_str(&n.rho.to_string());
        if !n.skipped.is_empty() {
            out.push_str(&format!("  nugatory {}", g.format_set(n.skipped)));
        }
        if let Some(q) = n.quasi_tree {
            out.push_str(&format!("  -> Q = {}", g.format_set(q)));
        }
        out.push('\n');
        if let Some((_, [l, r])) = n.split {
            self.render_node(g, l, depth + 1, out);
            self.render_node(g, r, depth + 1, out);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(text: &str) -> RibbonGraph {
        text.parse().unwrap()
    }

    #[test]
    fn nugatory_on_single_loops() {
        let plain = g("circle: e> e<");
        let root = PartialResolution::unresolved_all(1);
        assert!(nugatory(&plain, &root, 0).unwrap());
        let twisted = g("circle: e> e>");
        assert!(!nugatory(&twisted, &root, 0).unwrap());
        let resolved = root.resolve(0, true);
        assert!(matches!(nugatory(&twisted, &resolved, 0), Err(Error::AlreadyResolved(_))));
    }

    #[test]
    fn labels_use_edge_index_order() {
        let rho = PartialResolution::unresolved_all(3).resolve(1, true).resolve(2, false);
        assert_eq!(rho.to_string(), "*10");
        assert!(rho.contains(EdgeSet::from_indices([0, 1])));
        assert!(!rho.contains(EdgeSet::from_indices([1, 2])));
        assert_eq!(rho.class_size(), 2);
    }

    #[test]
    fn twisted_loop_tree() {
        let twisted = g("circle: e> e>");
        let t = ResolutionTree::build(&twisted, &EdgeOrder::identity(1)).unwrap();
        let qs: Vec<_> = t.leaves().map(|n| n.quasi_tree.unwrap()).collect();
        assert_eq!(qs, vec![EdgeSet::EMPTY, EdgeSet::singleton(0)]);
    }
}
