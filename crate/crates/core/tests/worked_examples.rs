mod common;

use std::process::Command;

use common::*;
use ribbon_graph::duality::{contract, crossing, links, partial_dual};
use ribbon_graph::poly::{rank_poly, tutte, AbstractGraph, RankArgs};
use ribbon_graph::quasitree::{activities, is_quasi_tree, phi, qt_report, quasi_trees, records, ResolutionTree};
use ribbon_graph::virtual_link::{connected_states, connected_states_direct, State};
use ribbon_graph::{oracle, EdgeOrder, EdgeSet, LaurentPoly, RibbonGraph, Sign, Var};

/// One vertex; e1 is a twisted loop crossing both e2 and e3.
fn crossing_example() -> RibbonGraph {
    "circle: e2> e1> e2< e3> e1> e3<".parse().unwrap()
}

#[test]
fn crossing_example_crossings_and_links() {
    let g = crossing_example();
    assert!(g.is_twisted(0));
    assert!(crossing(&g, 0, 1).unwrap());
    assert!(crossing(&g, 0, 2).unwrap());
    assert!(!crossing(&g, 1, 2).unwrap());
    assert!(is_quasi_tree(&g, EdgeSet::EMPTY));
    assert!(is_quasi_tree(&g, EdgeSet::singleton(0)));
    assert!(links(&g, EdgeSet::singleton(0), 1, 2).unwrap());
}

#[test]
fn crossing_example_activities() {
    let g = crossing_example();
    let order = EdgeOrder::identity(3);
    let a = activities(&g, EdgeSet::EMPTY, &order).unwrap();
    assert_eq!(a.internal(), EdgeSet::EMPTY);
    assert_eq!(a.internal_dead, EdgeSet::EMPTY);
    assert_eq!(a.external_live_nonorientable, EdgeSet::singleton(0));
    assert_eq!(a.external_live_orientable, EdgeSet::EMPTY);
    assert_eq!(a.external_dead, set(&[1, 2]));

    let a = activities(&g, EdgeSet::singleton(0), &order).unwrap();
    assert_eq!(a.internal_live_nonorientable, EdgeSet::singleton(0));
    assert_eq!(a.internal_live_orientable, EdgeSet::EMPTY);
    assert_eq!(a.internal_dead, EdgeSet::EMPTY);
    assert_eq!(a.external_dead, set(&[1, 2]));
}

#[test]
fn crossing_example_resolution_tree() {
    let g = crossing_example();
    let t = ResolutionTree::build(&g, &EdgeOrder::identity(3)).unwrap();
    let leaf = t.find("100").expect("leaf 100");
    assert!(leaf.is_leaf());
    assert_eq!(leaf.quasi_tree, Some(EdgeSet::singleton(0)));
    // e1 is resolved there, twisted in the dual, and live.
    let d = partial_dual(&g, EdgeSet::singleton(0));
    assert!(d.is_twisted(0));
    let a = activities(&g, EdgeSet::singleton(0), t.order()).unwrap();
    assert!(a.live().contains(0));
    assert!(t.find("*10").is_some());
    // The toggles through e1 give the remaining quasi-trees.
    assert_eq!(
        quasi_trees(&g).unwrap(),
        vec![EdgeSet::EMPTY, set(&[0]), set(&[0, 1]), set(&[0, 2])]
    );
}

#[test]
fn appendix_graph_facts() {
    let g = appendix_graph();
    assert!(!g.is_orientable());
    assert_eq!(g.faces(EdgeSet::singleton(2)), 1);
    let mut want: Vec<EdgeSet> = TABLE1.iter().map(|r| set(r[0])).collect();
    want.sort();
    assert_eq!(quasi_trees(&g).unwrap(), want);
    assert_eq!(oracle::signed_br(&g), p(APPENDIX_RS));

    let order = EdgeOrder::identity(4);
    let a = activities(&g, EdgeSet::singleton(2), &order).unwrap();
    assert_eq!(
        (a.internal_live_orientable, a.internal_live_nonorientable, a.internal_dead, a.external_live_orientable),
        (set(&[2]), EdgeSet::EMPTY, EdgeSet::EMPTY, set(&[0]))
    );

    let rows = qt_report(&g, &order).unwrap();
    let row = |q: &[usize]| rows.iter().find(|r| r.record.edges == set(q)).unwrap();
    let r134 = row(&[0, 2, 3]);
    assert_eq!(r134.record.gq.num_edges(), 1);
    assert_eq!(r134.record.gq.edges()[0].label, 0);
    assert_eq!(r134.s, p("1 + y*z^2"));
    assert_eq!(row(&[2]).s, p("x^(1/2)*y^(1/2) + x^(-1/2)*y^(1/2)"));
    assert!(matches_table1_ns(&g));

    let grouped = p("(1 + x^-1)*y*(1 + y) + 1 + y + (1 + x)*y*(1 + y)*z + x*(1 + y)*z + y*(1 + y*z^2) \
                     + x*y*z^2 + x*y^2*z^3");
    assert_eq!(grouped, p(APPENDIX_RS));
}

#[test]
fn face_bookkeeping_under_phi() {
    for g in small_population() {
        let order = EdgeOrder::identity(g.num_edges());
        for r in records(&g, &order).unwrap() {
            assert_eq!(phi(r.edges, r.edges), EdgeSet::EMPTY);
            for ep in g.edges().subsets() {
                let d = partial_dual(&g, ep);
                let q2 = phi(ep, r.edges);
                assert!(is_quasi_tree(&d, q2), "{g}");
                let a2 = activities(&d, q2, &order).unwrap();
                let a = r.activities;
                let lhs = d.sub_counts(a2.base()).f as i64;
                let rhs = r.base_counts.f as i64 - a.internal_live_orientable.intersection(ep).len() as i64
                    + a.external_live_orientable.intersection(ep).len() as i64;
                assert_eq!(lhs, rhs, "{g}");
            }
        }
    }
}

#[test]
fn positive_graphs_reduce_to_w1() {
    for g in small_population().into_iter().filter(|g| g.is_unsigned()) {
        let w1 = oracle::br_poly(&g).subs(&[(Var::W, LaurentPoly::one())]).unwrap();
        let shifted = w1.subs(&[(Var::X, p("x + 1"))]).unwrap();
        assert_eq!(oracle::signed_br(&g), shifted, "{g}");
    }
}

#[test]
fn contracting_a_twisted_loop() {
    let m: RibbonGraph = "circle: e> e>".parse().unwrap();
    let c = contract(&m, 0).unwrap();
    assert_eq!((c.num_vertices(), c.num_edges()), (1, 0));
}

#[test]
fn rank_polynomial_identities() {
    let mut h = AbstractGraph::new(3);
    h.add_edge(0, 1, Sign::Plus, 0);
    h.add_edge(1, 2, Sign::Plus, 1);
    h.add_edge(2, 0, Sign::Plus, 2);
    h.add_edge(0, 0, Sign::Plus, 3);
    let generic = rank_poly(&h, &RankArgs::symbolic());
    let normalised = rank_poly(
        &h,
        &RankArgs {
            alpha: LaurentPoly::one(),
            beta: p("B/A"),
            gamma: p("c"),
            delta: p("d"),
        },
    );
    assert_eq!(generic, LaurentPoly::var_pow(Var::A, 4) * normalised);
    let at = rank_poly(
        &h,
        &RankArgs {
            alpha: LaurentPoly::one(),
            beta: LaurentPoly::one(),
            gamma: p("x - 1"),
            delta: p("y - 1"),
        },
    );
    assert_eq!(at, tutte(&h));
}

#[test]
fn whitehead_states() {
    let d = whitehead();
    let s = d.summary(&State::all_a(3)).unwrap();
    assert_eq!((s.a, s.b, s.c), (3, 0, 2));
    let mut cs: Vec<usize> = State::all(3).map(|s| d.summary(&s).unwrap().c).collect();
    cs.sort();
    assert_eq!(cs, vec![1, 1, 1, 1, 1, 1, 2, 2]);
    let direct = connected_states_direct(&d);
    assert_eq!(direct.len(), 6);
    assert_eq!(connected_states(&d, &State::all_a(3)).unwrap(), direct);
    assert!(live_dictionaries_agree(&d, &EdgeOrder::identity(3)));
    for s in State::all(3) {
        assert_eq!(d.build_ribbon(&s).unwrap().num_vertices(), d.summary(&s).unwrap().c);
    }
}

fn ribbon(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_ribbon")).args(args).output().unwrap();
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn fixture_path(name: &str) -> String {
    format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn cli_poly_and_bracket() {
    let (code, out, _) = ribbon(&["poly", &fixture_path("appendix.rg"), "--which", "Rs"]);
    assert_eq!(code, 0);
    assert_eq!(p(out.trim()), p(APPENDIX_RS));
    assert_eq!(out.trim(), p(APPENDIX_RS).to_string());
    for method in ["statesum", "connected", "ribbon"] {
        let (code, out, _) = ribbon(&["bracket", &fixture_path("whitehead.gauss"), "--method", method]);
        assert_eq!(code, 0);
        assert_eq!(p(out.trim()), p(WHITEHEAD_BRACKET), "{method}");
    }
}

#[test]
fn cli_dual_with_no_edges_is_identity() {
    let (code, out, _) = ribbon(&["dual", &fixture_path("appendix.rg"), "--edges", ""]);
    assert_eq!(code, 0);
    let back: RibbonGraph = out.parse().unwrap();
    assert!(back.same_ribbon_graph(&appendix_graph()));
    let (code, out, _) = ribbon(&["dual", &fixture_path("appendix.rg"), "--edges", "e1,e3"]);
    assert_eq!(code, 0);
    let d: RibbonGraph = out.parse().unwrap();
    let g = appendix_graph();
    assert!(d.same_ribbon_graph(&partial_dual(&g, g.edge_set(&["e1", "e3"]).unwrap())));
}

#[test]
fn cli_exit_codes() {
    let dir = std::env::temp_dir().join(format!("ribbon-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.rg");
    std::fs::write(&bad, "circle: e1>\n").unwrap();
    let (code, _, err) = ribbon(&["poly", bad.to_str().unwrap()]);
    assert_eq!(code, 2, "{err}");
    let two = dir.join("two.rg");
    std::fs::write(&two, "circle:\ncircle:\n").unwrap();
    let (code, _, err) = ribbon(&["qtexp", two.to_str().unwrap()]);
    assert_eq!(code, 1, "{err}");
    assert!(!err.is_empty());
    let (code, _, _) = ribbon(&["dual", &fixture_path("appendix.rg"), "--edges", "nope"]);
    assert_eq!(code, 1);
}

#[test]
fn cli_qtexp_and_verify() {
    let (code, out, _) = ribbon(&["qtexp", &fixture_path("appendix.rg"), "--order", "e1,e2,e3,e4"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().filter(|l| l.starts_with("Q=")).count(), 7);
    let total = out.lines().last().unwrap().strip_prefix("total ").unwrap();
    assert_eq!(p(total), p(APPENDIX_RS));
    let (code, out, _) = ribbon(&["verify", "--max-edges", "3", "--seed", "5"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.starts_with("seed 5"));
    assert!(out.lines().skip(1).all(|l| l.starts_with("PASS")));
}
