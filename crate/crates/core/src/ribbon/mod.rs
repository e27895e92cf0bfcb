//! Ribbon graphs in arrow presentation.
//!
//! Every vertex is a circle with a fixed reference orientation. Every edge is
//! a pair of equally labelled arrows drawn on the circles. An arrow is
//! `forward` when it points along the reference orientation of its circle.
//! An edge whose two arrows have opposite senses is untwisted, an edge whose
//! arrows have the same sense carries a half twist.

mod boundary;
mod canonical;
mod format;

use std::collections::HashMap;
use std::fmt;

use crate::edge_set::{EdgeSet, MAX_EDGES};
use crate::error::{Error, Result};
use crate::poly::AbstractGraph;

pub use boundary::TracedCircle;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flipped(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn is_plus(self) -> bool {
        self == Sign::Plus
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

/// One arrow of an edge on a vertex circle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Arrow {
    pub edge: usize,
    pub forward: bool,
}

impl Arrow {
    pub fn new(edge: usize, forward: bool) -> Self {
        Arrow { edge, forward }
    }

    pub fn reversed(self) -> Self {
        Arrow {
            edge: self.edge,
            forward: !self.forward,
        }
    }
}

/// Position of an arrow: circle index and slot on that circle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Slot {
    pub circle: usize,
    pub pos: usize,
}

/// The counting data v, e, k, r, n, f and t of a (spanning sub)ribbon graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GraphCounts {
    pub v: usize,
    pub e: usize,
    pub k: usize,
    pub f: usize,
    /// 0 when orientable, 1 otherwise.
    pub t: u8,
}

impl GraphCounts {
    pub fn r(&self) -> usize {
        self.v - self.k
    }

    pub fn n(&self) -> usize {
        self.e - self.r()
    }

    /// `k - f + n`, the Euler genus.
    pub fn euler_genus(&self) -> i64 {
        self.k as i64 - self.f as i64 + self.n() as i64
    }
}

/// A signed ribbon graph in arrow presentation.
///
/// Edge labels are kept in a fixed order; the index of a label is the edge id
/// used by [`Arrow`], [`EdgeSet`] and the default edge order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RibbonGraph {
    labels: Vec<String>,
    signs: Vec<Sign>,
    circles: Vec<Vec<Arrow>>,
    slots: Vec<[Slot; 2]>,
}

impl RibbonGraph {
    /// Validates and builds a ribbon graph. Every edge must carry exactly two
    /// arrows.
    pub fn new(labels: Vec<String>, signs: Vec<Sign>, circles: Vec<Vec<Arrow>>) -> Result<Self> {
        if labels.len() > MAX_EDGES {
            return Err(Error::TooManyEdges(labels.len()));
        }
        assert_eq!(labels.len(), signs.len(), "one sign per edge");
        let mut seen: Vec<Vec<Slot>> = vec![Vec::with_capacity(2); labels.len()];
        for (c, circle) in circles.iter().enumerate() {
            for (pos, a) in circle.iter().enumerate() {
                let Some(s) = seen.get_mut(a.edge) else {
                    return Err(Error::UnknownEdge(format!("#{}", a.edge)));
                };
                s.push(Slot { circle: c, pos });
            }
        }
        let mut slots = Vec::with_capacity(labels.len());
        for (e, s) in seen.into_iter().enumerate() {
            if s.len() != 2 {
                return Err(Error::parse(
                    0,
                    format!("edge `{}` carries {} arrows, expected 2", labels[e], s.len()),
                ));
            }
            slots.push([s[0], s[1]]);
        }
        Ok(RibbonGraph {
            labels,
            signs,
            circles,
            slots,
        })
    }

    /// The graph with no vertices and no edges.
    pub fn empty() -> Self {
        RibbonGraph {
            labels: vec![],
            signs: vec![],
            circles: vec![],
            slots: vec![],
        }
    }

    pub fn num_vertices(&self) -> usize {
        self.circles.len()
    }

    pub fn num_edges(&self) -> usize {
        self.labels.len()
    }

    pub fn edges(&self) -> EdgeSet {
        EdgeSet::full(self.num_edges())
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, e: usize) -> &str {
        &self.labels[e]
    }

    pub fn edge_index(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownEdge(label.to_string()))
    }

    /// Resolves a list of labels into an edge set.
    pub fn edge_set<S: AsRef<str>>(&self, labels: &[S]) -> Result<EdgeSet> {
        labels.iter().try_fold(EdgeSet::EMPTY, |acc, l| {
            Ok(acc.with(self.edge_index(l.as_ref())?))
        })
    }

    pub fn format_set(&self, set: EdgeSet) -> String {
        let names: Vec<&str> = set.iter().map(|e| self.label(e)).collect();
        format!("{{{}}}", names.join(","))
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    pub fn sign(&self, e: usize) -> Sign {
        self.signs[e]
    }

    pub fn negative_edges(&self) -> EdgeSet {
        EdgeSet::from_indices((0..self.num_edges()).filter(|&e| self.signs[e] == Sign::Minus))
    }

    pub fn positive_edges(&self) -> EdgeSet {
        self.edges().difference(self.negative_edges())
    }

    pub fn circles(&self) -> &[Vec<Arrow>] {
        &self.circles
    }

    pub fn slots(&self, e: usize) -> [Slot; 2] {
        self.slots[e]
    }

    pub fn arrow_at(&self, slot: Slot) -> Arrow {
        self.circles[slot.circle][slot.pos]
    }

    /// The two circles (vertices) incident with edge `e`.
    pub fn endpoints(&self, e: usize) -> (usize, usize) {
        let [a, b] = self.slots[e];
        (a.circle, b.circle)
    }

    pub fn is_loop(&self, e: usize) -> bool {
        let (a, b) = self.endpoints(e);
        a == b
    }

    /// True when the two arrows of `e` have the same sense, i.e. the band
    /// carries a half twist relative to the reference orientations.
    pub fn is_twisted(&self, e: usize) -> bool {
        let [a, b] = self.slots[e];
        self.arrow_at(a).forward == self.arrow_at(b).forward
    }

    /// Same graph with every sign set to `+`.
    pub fn unsigned(&self) -> RibbonGraph {
        let mut g = self.clone();
        g.signs = vec![Sign::Plus; g.labels.len()];
        g
    }

    pub fn with_signs(&self, signs: Vec<Sign>) -> RibbonGraph {
        assert_eq!(signs.len(), self.num_edges());
        let mut g = self.clone();
        g.signs = signs;
        g
    }

    pub fn is_unsigned(&self) -> bool {
        self.signs.iter().all(|s| s.is_plus())
    }

    /// Number of connected components of the spanning subgraph with edges `set`.
    pub fn components_of(&self, set: EdgeSet) -> usize {
        let mut uf = UnionFind::new(self.num_vertices());
        for e in set.iter() {
            let (a, b) = self.endpoints(e);
            uf.union(a, b);
        }
        uf.count()
    }

    /// Component index of every circle in the spanning subgraph with edges `set`.
    pub fn component_labels(&self, set: EdgeSet) -> Vec<usize> {
        let mut uf = UnionFind::new(self.num_vertices());
        for e in set.iter() {
            let (a, b) = self.endpoints(e);
            uf.union(a, b);
        }
        uf.labels()
    }

    /// Orientability of the spanning subgraph with edges `set`: whether the
    /// circles can be re-oriented so that no edge of `set` is twisted.
    pub fn is_orientable_sub(&self, set: EdgeSet) -> bool {
        // Two-colour circles; an edge forces equal colours when untwisted and
        // different colours when twisted.
        let v = self.num_vertices();
        let mut adj: Vec<Vec<(usize, bool)>> = vec![vec![]; v];
        for e in set.iter() {
            let (a, b) = self.endpoints(e);
            let flip = self.is_twisted(e);
            if a == b {
                if flip {
                    return false;
                }
                continue;
            }
            adj[a].push((b, flip));
            adj[b].push((a, flip));
        }
        let mut colour: Vec<Option<bool>> = vec![None; v];
        let mut stack = Vec::new();
        for start in 0..v {
            if colour[start].is_some() {
                continue;
            }
            colour[start] = Some(false);
            stack.push(start);
            while let Some(x) = stack.pop() {
                let cx = colour[x].unwrap();
                for &(y, flip) in &adj[x] {
                    let want = cx ^ flip;
                    match colour[y] {
                        None => {
                            colour[y] = Some(want);
                            stack.push(y);
                        }
                        Some(cy) if cy != want => return false,
                        _ => {}
                    }
                }
            }
        }
        true
    }

    pub fn is_orientable(&self) -> bool {
        self.is_orientable_sub(self.edges())
    }

    /// Counts of the spanning subribbon graph `F_set`.
    pub fn sub_counts(&self, set: EdgeSet) -> GraphCounts {
        GraphCounts {
            v: self.num_vertices(),
            e: set.len(),
            k: self.components_of(set),
            f: self.faces(set),
            t: u8::from(!self.is_orientable_sub(set)),
        }
    }

    pub fn counts(&self) -> GraphCounts {
        self.sub_counts(self.edges())
    }

    pub fn is_connected(&self) -> bool {
        self.components_of(self.edges()) <= 1
    }

    /// `F_set`: same circles, only the arrows of edges in `set` kept.
    pub fn spanning_sub(&self, set: EdgeSet) -> RibbonGraph {
        self.keep_edges(set)
    }

    /// Removes every edge outside `keep`, renumbering the survivors in order.
    pub(crate) fn keep_edges(&self, keep: EdgeSet) -> RibbonGraph {
        let mut remap = vec![usize::MAX; self.num_edges()];
        let mut labels = Vec::new();
        let mut signs = Vec::new();
        for e in keep.iter() {
            remap[e] = labels.len();
            labels.push(self.labels[e].clone());
            signs.push(self.signs[e]);
        }
        let circles = self
            .circles
            .iter()
            .map(|c| {
                c.iter()
                    .filter(|a| keep.contains(a.edge))
                    .map(|a| Arrow::new(remap[a.edge], a.forward))
                    .collect()
            })
            .collect();
        RibbonGraph::new(labels, signs, circles).expect("sub-presentation stays valid")
    }

    /// The underlying multigraph: circles become vertices, signs are kept.
    pub fn underlying_graph(&self) -> AbstractGraph {
        let mut h = AbstractGraph::new(self.num_vertices());
        for e in 0..self.num_edges() {
            let (a, b) = self.endpoints(e);
            h.add_edge(a, b, self.signs[e], e);
        }
        h
    }

    /// Disjoint union; labels of `other` must not clash with ours.
    pub fn disjoint_union(&self, other: &RibbonGraph) -> Result<RibbonGraph> {
        let mut labels = self.labels.clone();
        for l in &other.labels {
            if labels.contains(l) {
                return Err(Error::InvalidOrder(format!("label `{l}` occurs in both graphs")));
            }
            labels.push(l.clone());
        }
        let off = self.num_edges();
        let mut signs = self.signs.clone();
        signs.extend_from_slice(&other.signs);
        let mut circles = self.circles.clone();
        circles.extend(
            other
                .circles
                .iter()
                .map(|c| c.iter().map(|a| Arrow::new(a.edge + off, a.forward)).collect()),
        );
        RibbonGraph::new(labels, signs, circles)
    }

    /// Same graph with the label of edge `e` replaced by `labels[e]`.
    pub fn relabelled(&self, labels: Vec<String>) -> Result<RibbonGraph> {
        assert_eq!(labels.len(), self.num_edges());
        RibbonGraph::new(labels, self.signs.clone(), self.circles.clone())
    }

    /// Reverses both arrows of edge `e`; the ribbon graph is unchanged.
    pub fn with_edge_reversed(&self, e: usize) -> RibbonGraph {
        let mut g = self.clone();
        for s in g.slots[e] {
            let a = &mut g.circles[s.circle][s.pos];
            *a = a.reversed();
        }
        g
    }

    /// Rotates circle `c` so that it starts at slot `by`.
    pub fn with_circle_rotated(&self, c: usize, by: usize) -> RibbonGraph {
        let mut circles = self.circles.clone();
        if !circles[c].is_empty() {
            let by = by % circles[c].len();
            circles[c].rotate_left(by);
        }
        RibbonGraph::new(self.labels.clone(), self.signs.clone(), circles).expect("rotation keeps arrows")
    }

    /// Reverses the reference orientation of circle `c`.
    pub fn with_circle_reflected(&self, c: usize) -> RibbonGraph {
        let mut circles = self.circles.clone();
        circles[c].reverse();
        for a in circles[c].iter_mut() {
            *a = a.reversed();
        }
        RibbonGraph::new(self.labels.clone(), self.signs.clone(), circles).expect("reflection keeps arrows")
    }
}

impl fmt::Debug for RibbonGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RibbonGraph[")?;
        for (i, c) in self.circles.iter().enumerate() {
            if i > 0 {
                write!(f, " | ")?;
            }
            let toks: Vec<String> = c
                .iter()
                .map(|a| format!("{}{}", self.labels[a.edge], if a.forward { '>' } else { '<' }))
                .collect();
            write!(f, "{}", toks.join(" "))?;
        }
        let neg: Vec<&str> = self.negative_edges().iter().map(|e| self.label(e)).collect();
        if !neg.is_empty() {
            write!(f, "; negative {}", neg.join(","))?;
        }
        write!(f, "]")
    }
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
    count: usize,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            count: n,
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        self.count -= 1;
        true
    }

    pub(crate) fn count(&self) -> usize {
        self.count
    }

    /// Dense component labels, numbered by smallest member.
    pub(crate) fn labels(&mut self) -> Vec<usize> {
        let n = self.parent.len();
        let mut id: HashMap<usize, usize> = HashMap::new();
        (0..n)
            .map(|x| {
                let r = self.find(x);
                let next = id.len();
                *id.entry(r).or_insert(next)
            })
            .collect()
    }
}
