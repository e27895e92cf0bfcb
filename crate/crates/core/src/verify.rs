//! Property suites comparing every expansion with the brute-force oracle,
//! shared by the `verify` subcommand and the test suite.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::duality::{contract_all, delete_all, links, partial_dual};
use crate::edge_set::{EdgeOrder, EdgeSet};
use crate::generate::{exhaustive_connected, orders, random_connected, random_gauss};
use crate::oracle::{at_q1, at_q1_single_alpha, br_poly, multivariate_br, signed_br, signed_multivariate_br};
use crate::poly::{LaurentPoly, Var};
use crate::quasitree::{
    activities, is_quasi_tree, n_term, n_term_q1, phi, q1_expansion, qt_expansion_multivariate, qt_expansion_signed,
    qt_expansion_w1, quasi_trees, records, subgraph_decomposition, QuasiTreeRecord, ResolutionTree,
};
use crate::ribbon::RibbonGraph;
use crate::virtual_link::{
    bracket_via_ribbon, connected_state_expansion, connected_states, connected_states_direct, kauffman_statesum,
    State, VirtualDiagram,
};

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub name: &'static str,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {:<24} {} cases",
            if self.passed() { "PASS" } else { "FAIL" },
            self.name,
            self.cases
        )?;
        for msg in self.failures.iter().take(5) {
            write!(f, "\n    {msg}")?;
        }
        if self.failures.len() > 5 {
            write!(f, "\n    ... {} more", self.failures.len() - 5)?;
        }
        Ok(())
    }
}

/// A graph together with the orders it is checked under.
#[derive(Clone, Debug)]
pub struct Case {
    pub graph: RibbonGraph,
    pub orders: Vec<EdgeOrder>,
}

/// The exhaustive population up to `min(max_edges, 3)` edges plus
/// `random_per_size` random graphs for each size from 4 to `max_edges`.
pub fn population(max_edges: usize, random_per_size: usize, orders_each: usize, seed: u64) -> Vec<Case> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut graphs = exhaustive_connected(max_edges.min(3));
    for e in 4..=max_edges {
        for _ in 0..random_per_size {
            graphs.push(random_connected(&mut rng, e, 3));
        }
    }
    graphs
        .into_iter()
        .map(|g| {
            let orders = orders(&mut rng, g.num_edges(), orders_each);
            Case { graph: g, orders }
        })
        .collect()
}

fn run<F>(name: &'static str, cases: &[Case], check: F) -> SuiteReport
where
    F: Fn(&Case) -> Vec<String> + Sync,
{
    let failures: Vec<String> = cases.par_iter().flat_map_iter(|c| check(c)).collect();
    SuiteReport {
        name,
        cases: cases.len(),
        failures,
    }
}

fn show(g: &RibbonGraph) -> String {
    g.to_string().trim_end().replace('\n', " | ")
}

fn compare(what: &str, g: &RibbonGraph, got: crate::Result<LaurentPoly>, want: &LaurentPoly) -> Option<String> {
    match got {
        Ok(p) if &p == want => None,
        Ok(p) => Some(format!("{what}: {} gave {p}, oracle {want}", show(g))),
        Err(e) => Some(format!("{what}: {} failed: {e}", show(g))),
    }
}

/// Signed quasi-tree expansion against the spanning-subgraph sum.
pub fn signed_suite(cases: &[Case]) -> SuiteReport {
    run("signed expansion", cases, |c| {
        let want = signed_br(&c.graph);
        c.orders
            .iter()
            .filter_map(|o| compare("signed", &c.graph, qt_expansion_signed(&c.graph, o), &want))
            .collect()
    })
}

/// Unsigned expansion against `R(G; x, y, z, 1)`.
pub fn w1_suite(cases: &[Case]) -> SuiteReport {
    run("w = 1 expansion", cases, |c| {
        let g = c.graph.unsigned();
        let want = br_poly(&g).subs(&[(Var::W, LaurentPoly::one())]).expect("monomial substitution");
        c.orders
            .iter()
            .filter_map(|o| compare("w1", &g, qt_expansion_w1(&g, o), &want))
            .collect()
    })
}

pub fn multivariate_suite(cases: &[Case]) -> SuiteReport {
    run("multivariate expansion", cases, |c| {
        let want = multivariate_br(&c.graph);
        c.orders
            .iter()
            .filter_map(|o| compare("multivariate", &c.graph, qt_expansion_multivariate(&c.graph, o), &want))
            .collect()
    })
}

/// The `q = 1`, single-weight expansion.
pub fn q1_suite(cases: &[Case]) -> SuiteReport {
    run("q = 1 expansion", cases, |c| {
        let want = at_q1_single_alpha(&c.graph, &signed_multivariate_br(&c.graph));
        c.orders
            .iter()
            .filter_map(|o| compare("q1", &c.graph, q1_expansion(&c.graph, o), &want))
            .collect()
    })
}

/// Involution, invariance of `Z_s(G; 1, α, c)`, and per-quasi-tree equality
/// of `N(Q)` across every partial dual.
pub fn duality_suite(cases: &[Case]) -> SuiteReport {
    run("partial duality", cases, |c| {
        let g = &c.graph;
        let mut out = Vec::new();
        let z = at_q1(&signed_multivariate_br(g));
        let qs = quasi_trees(g).expect("connected");
        let order = &c.orders[0];
        let n_g: Vec<LaurentPoly> = qs
            .iter()
            .map(|&q| at_q1(&n_term(g, &QuasiTreeRecord::new(g, q, order).expect("quasi-tree"))))
            .collect();
        for ep in g.edges().subsets() {
            let d = partial_dual(g, ep);
            if !partial_dual(&d, ep).same_ribbon_graph(g) {
                out.push(format!("involution fails for {} at {}", show(g), g.format_set(ep)));
            }
            if at_q1(&signed_multivariate_br(&d)) != z {
                out.push(format!("Z_s(1) differs for {} at {}", show(g), g.format_set(ep)));
            }
            for (i, &q) in qs.iter().enumerate() {
                let pq = phi(ep, q);
                let rec = match QuasiTreeRecord::new(&d, pq, order) {
                    Ok(r) => r,
                    Err(e) => {
                        out.push(format!("{} at {}: {e}", show(g), g.format_set(ep)));
                        continue;
                    }
                };
                let n_d = at_q1(&n_term(&d, &rec));
                if n_d != n_g[i] || n_term_q1(&d, &rec) != n_d {
                    out.push(format!(
                        "N differs for {} at E'={} Q={}",
                        show(g),
                        g.format_set(ep),
                        g.format_set(q)
                    ));
                }
            }
        }
        out
    })
}

/// The face formula through partial duals, the component and face counts
/// of subgraphs inside a quasi-tree's class, the toggle lemmas for
/// quasi-trees, the classification of leaf edges, and the bijection between
/// spanning subgraphs and leaf classes.
pub fn structural_suite(cases: &[Case]) -> SuiteReport {
    run("structural lemmas", cases, |c| {
        let g = &c.graph;
        let mut out = Vec::new();
        let all = g.edges();
        let face = |f: EdgeSet| g.faces(f);

        for f in all.subsets() {
            let d = partial_dual(g, f);
            for fp in all.subsets() {
                let delta = f.symmetric_difference(fp);
                let h = delete_all(&d, delta.complement(g.num_edges()));
                if contract_all(&h, h.edges()).num_vertices() != face(fp) {
                    out.push(format!("face formula: {} F={} F'={}", show(g), g.format_set(f), g.format_set(fp)));
                }
            }
        }

        for order in &c.orders {
            let recs = match records(g, order) {
                Ok(r) => r,
                Err(e) => return vec![format!("{}: {e}", show(g))],
            };
            for r in &recs {
                let a = &r.activities;
                let base = a.base();
                let bc = &r.base_counts;
                let pos_in_gq = |s1: EdgeSet| {
                    EdgeSet::from_indices(
                        r.gq.edges().iter().enumerate().filter(|(_, ge)| s1.contains(ge.label)).map(|(i, _)| i),
                    )
                };
                for s1 in a.internal_live_orientable.subsets() {
                    let w_edges = pos_in_gq(s1);
                    let k_w = r.gq.components(w_edges);
                    let n_w = (s1.len() + k_w) as i64 - r.gq.num_vertices() as i64;
                    let c1 = g.sub_counts(base.union(s1));
                    for s2 in a.external_live_orientable.subsets() {
                        let cf = g.sub_counts(base.union(s1).union(s2));
                        let bad_k = cf.k != c1.k || c1.k != k_w;
                        let bad_f = cf.f as i64 != bc.f as i64 - s1.len() as i64 + s2.len() as i64;
                        let bad_n = cf.n() as i64 != bc.n() as i64 + n_w + s2.len() as i64;
                        let bad_g = cf.euler_genus() != bc.euler_genus() + 2 * n_w;
                        if bad_k || bad_f || bad_n || bad_g {
                            out.push(format!(
                                "class counts: {} Q={} S1={} S2={}",
                                show(g),
                                g.format_set(r.edges),
                                g.format_set(s1),
                                g.format_set(s2)
                            ));
                        }
                    }
                }
            }

            let tree = ResolutionTree::build(g, order).expect("connected");
            for leaf in tree.leaves() {
                let q = leaf.quasi_tree.expect("leaf");
                let d = partial_dual(g, q);
                let a = activities(g, q, order).expect("quasi-tree");
                for e in 0..g.num_edges() {
                    let orientable = !d.is_twisted(e);
                    let live = a.live().contains(e);
                    let ok = if leaf.rho.value(e).is_none() {
                        orientable && live
                    } else {
                        !live || !orientable
                    };
                    if !ok {
                        out.push(format!("leaf {} edge {}: {}", leaf.rho, g.label(e), show(g)));
                    }
                }
            }

            let mut seen = std::collections::HashSet::new();
            for f in all.subsets() {
                let dec = subgraph_decomposition(&tree, g, f).expect("decomposition");
                let a = activities(g, dec.quasi_tree, order).expect("quasi-tree");
                let rebuilt = a.base().union(dec.s1).union(dec.s2);
                if rebuilt != f || !seen.insert((dec.quasi_tree, dec.s1, dec.s2)) {
                    out.push(format!("subgraph bijection: {} F={}", show(g), g.format_set(f)));
                }
            }
            let classes: u64 = recs
                .iter()
                .map(|r| 1u64 << r.activities.live_orientable().len())
                .sum();
            if classes != 1u64 << g.num_edges() {
                out.push(format!("class sizes sum to {classes}: {}", show(g)));
            }
        }

        for q in quasi_trees(g).expect("connected") {
            let d = partial_dual(g, q);
            for e in 0..g.num_edges() {
                if d.is_twisted(e) && !is_quasi_tree(g, q.toggled(e)) {
                    out.push(format!("twisted toggle: {} Q={} e={}", show(g), g.format_set(q), g.label(e)));
                }
                for f in e + 1..g.num_edges() {
                    let linked = links(g, q, e, f).expect("quasi-tree");
                    let twisted = d.is_twisted(e) as u8 + d.is_twisted(f) as u8;
                    if linked && twisted <= 1 && !is_quasi_tree(g, q.toggled(e).toggled(f)) {
                        out.push(format!(
                            "linked toggle: {} Q={} e={} f={}",
                            show(g),
                            g.format_set(q),
                            g.label(e),
                            g.label(f)
                        ));
                    }
                }
            }
        }
        out
    })
}

/// Random signed Gauss codes: the three bracket computations agree, and the
/// two ways of finding connected states agree.
pub fn bracket_suite(count: usize, max_crossings: usize, seed: u64) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let diagrams: Vec<VirtualDiagram> = (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=max_crossings);
            random_gauss(&mut rng, n, 2)
        })
        .collect();
    let order_sets: Vec<Vec<EdgeOrder>> = diagrams.iter().map(|d| orders(&mut rng, d.num_crossings(), 3)).collect();
    let failures: Vec<String> = diagrams
        .par_iter()
        .zip(order_sets.par_iter())
        .flat_map_iter(|(d, os)| bracket_failures(d, os))
        .collect();
    SuiteReport {
        name: "bracket",
        cases: count,
        failures,
    }
}

pub fn bracket_failures(d: &VirtualDiagram, orders: &[EdgeOrder]) -> Vec<String> {
    let code = d.serialize().trim_end().replace('\n', " | ");
    let want = kauffman_statesum(d);
    let mut out = Vec::new();
    for o in orders {
        match connected_state_expansion(d, o) {
            Ok(p) if p == want => {}
            Ok(p) => out.push(format!("{code}: connected {p}, state sum {want}")),
            Err(e) => out.push(format!("{code}: {e}")),
        }
    }
    let direct = connected_states_direct(d);
    for s in State::all(d.num_crossings()) {
        match bracket_via_ribbon(d, &s) {
            Ok(p) if p == want => {}
            Ok(p) => out.push(format!("{code} state {s}: ribbon {p}, state sum {want}")),
            Err(e) => out.push(format!("{code}: {e}")),
        }
        match connected_states(d, &s) {
            Ok(cs) if cs == direct => {}
            Ok(_) => out.push(format!("{code}: connected states differ from base {s}")),
            Err(e) => out.push(format!("{code}: {e}")),
        }
        let g = d.build_ribbon(&s).expect("state");
        for t in State::all(d.num_crossings()) {
            let diff = EdgeSet(s.b_mask() ^ t.b_mask());
            let via = partial_dual(&g, diff);
            if !via.same_ribbon_graph(&d.build_ribbon(&t).expect("state")) {
                out.push(format!("{code}: G^{t} is not the partial dual of G^{s}"));
            }
        }
    }
    out
}

/// All suites, as run by the `verify` subcommand.
pub fn run_all(max_edges: usize, seed: u64) -> Vec<SuiteReport> {
    let cases = population(max_edges, 40, 3, seed);
    vec![
        signed_suite(&cases),
        w1_suite(&cases),
        multivariate_suite(&cases),
        q1_suite(&cases),
        duality_suite(&cases),
        structural_suite(&cases),
        bracket_suite(50, 4, seed),
    ]
}
