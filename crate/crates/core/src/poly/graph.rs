//! Ordinary multigraphs and their classical subgraph-expansion polynomials.

use crate::edge_set::EdgeSet;
use crate::ribbon::{Sign, UnionFind};

use super::{LaurentPoly, Var};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GraphEdge {
    pub u: usize,
    pub v: usize,
    pub sign: Sign,
    /// Id of the ribbon-graph edge this one comes from.
    pub label: usize,
}

impl GraphEdge {
    pub fn is_loop(&self) -> bool {
        self.u == self.v
    }
}

/// A multigraph with signed edges; loops and parallel edges allowed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct AbstractGraph {
    vertices: usize,
    edges: Vec<GraphEdge>,
}

impl AbstractGraph {
    pub fn new(vertices: usize) -> Self {
        AbstractGraph {
            vertices,
            edges: Vec::new(),
        }
    }

    pub fn add_edge(&mut self, u: usize, v: usize, sign: Sign, label: usize) {
        assert!(u < self.vertices && v < self.vertices, "endpoint out of range");
        self.edges.push(GraphEdge { u, v, sign, label });
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[GraphEdge] {
        &self.edges
    }

    /// Components of the spanning subgraph on the edges in `set` (indices
    /// into [`edges`](Self::edges)).
    pub fn components(&self, set: EdgeSet) -> usize {
        let mut uf = UnionFind::new(self.vertices);
        for i in set.iter() {
            uf.union(self.edges[i].u, self.edges[i].v);
        }
        uf.count()
    }

    pub fn rank(&self) -> usize {
        self.vertices - self.components(EdgeSet::full(self.num_edges()))
    }

    /// `H / set`: endpoints of the edges in `set` identified, those edges
    /// removed (contracting a loop deletes it). Vertices are renumbered by
    /// their smallest original member.
    pub fn contract(&self, set: EdgeSet) -> AbstractGraph {
        let mut uf = UnionFind::new(self.vertices);
        for i in set.iter() {
            uf.union(self.edges[i].u, self.edges[i].v);
        }
        let id = uf.labels();
        let mut h = AbstractGraph::new(uf.count());
        for (i, e) in self.edges.iter().enumerate() {
            if !set.contains(i) {
                h.add_edge(id[e.u], id[e.v], e.sign, e.label);
            }
        }
        h
    }

    /// Keeps only the edges in `set`.
    pub fn restrict(&self, set: EdgeSet) -> AbstractGraph {
        AbstractGraph {
            vertices: self.vertices,
            edges: set.iter().map(|i| self.edges[i]).collect(),
        }
    }

    fn subsets(&self) -> impl Iterator<Item = EdgeSet> {
        assert!(self.num_edges() <= 63, "subset expansion over more than 2^63 terms");
        EdgeSet::full(self.num_edges()).subsets()
    }
}

/// Evaluation point of the rank polynomial.
#[derive(Clone, Debug)]
pub struct RankArgs {
    pub alpha: LaurentPoly,
    pub beta: LaurentPoly,
    pub gamma: LaurentPoly,
    pub delta: LaurentPoly,
}

impl RankArgs {
    /// The indeterminates A, B, c, d standing for α, β, γ, δ.
    pub fn symbolic() -> Self {
        RankArgs {
            alpha: LaurentPoly::var(Var::A),
            beta: LaurentPoly::var(Var::B),
            gamma: LaurentPoly::var(Var::C),
            delta: LaurentPoly::var(Var::D),
        }
    }
}

fn power(p: &LaurentPoly, k: usize, cache: &mut Vec<LaurentPoly>) -> LaurentPoly {
    while cache.len() <= k {
        let next = if cache.is_empty() {
            LaurentPoly::one()
        } else {
            cache.last().unwrap() * p
        };
        cache.push(next);
    }
    cache[k].clone()
}

/// Powers of one base, memoised.
struct Powers<'a> {
    base: &'a LaurentPoly,
    cache: Vec<LaurentPoly>,
}

impl<'a> Powers<'a> {
    fn new(base: &'a LaurentPoly) -> Self {
        Powers {
            base,
            cache: Vec::new(),
        }
    }

    fn get(&mut self, k: usize) -> LaurentPoly {
        power(self.base, k, &mut self.cache)
    }
}

/// `Σ_F α^{e₊(F̄)+e₋(F)} β^{e₊(F)+e₋(F̄)} γ^{k(F)-k(H)} δ^{n(F)}`.
pub fn rank_poly(h: &AbstractGraph, args: &RankArgs) -> LaurentPoly {
    let m = h.num_edges();
    let kh = h.components(EdgeSet::full(m));
    let neg = EdgeSet::from_indices((0..m).filter(|&i| h.edges[i].sign == Sign::Minus));
    let mut pa = Powers::new(&args.alpha);
    let mut pb = Powers::new(&args.beta);
    let mut pg = Powers::new(&args.gamma);
    let mut pd = Powers::new(&args.delta);
    let mut total = LaurentPoly::zero();
    for f in h.subsets() {
        let fbar = f.complement(m);
        let a = fbar.difference(neg).len() + f.intersection(neg).len();
        let b = f.difference(neg).len() + fbar.intersection(neg).len();
        let k = h.components(f);
        let n = f.len() + k - h.vertices;
        total += pa.get(a) * pb.get(b) * pg.get(k - kh) * pd.get(n);
    }
    total
}

/// `T(H; x, y) = Σ_F (x-1)^{k(F)-k(H)} (y-1)^{n(F)}`, evaluated at the given
/// arguments.
pub fn tutte_at(h: &AbstractGraph, x: &LaurentPoly, y: &LaurentPoly) -> LaurentPoly {
    let xm1 = x - &LaurentPoly::one();
    let ym1 = y - &LaurentPoly::one();
    let m = h.num_edges();
    let kh = h.components(EdgeSet::full(m));
    let mut px = Powers::new(&xm1);
    let mut py = Powers::new(&ym1);
    h.subsets()
        .map(|f| {
            let k = h.components(f);
            px.get(k - kh) * py.get(f.len() + k - h.vertices)
        })
        .sum()
}

/// The Tutte polynomial in x and y.
pub fn tutte(h: &AbstractGraph) -> LaurentPoly {
    tutte_at(h, &LaurentPoly::x(), &LaurentPoly::y())
}

/// `Z_T(H; q, w) = Σ_F q^{k(F)} Π_{e∈F} w(e)`, with `weight` giving each edge's
/// variable.
pub fn multivariate_tutte_with(
    h: &AbstractGraph,
    q: &LaurentPoly,
    weight: impl Fn(&GraphEdge) -> LaurentPoly,
) -> LaurentPoly {
    let weights: Vec<LaurentPoly> = h.edges.iter().map(weight).collect();
    let mut pq = Powers::new(q);
    h.subsets()
        .map(|f| {
            let prod: LaurentPoly = f.iter().map(|i| weights[i].clone()).product();
            pq.get(h.components(f)) * prod
        })
        .sum()
}
