#![allow(dead_code)]

use std::collections::HashSet;

use ribbon_graph::generate::exhaustive_connected;
use ribbon_graph::poly::LaurentPoly;
use ribbon_graph::quasitree::{activities, quasi_trees};
use ribbon_graph::ribbon::{Arrow, RibbonGraph, Sign};
use ribbon_graph::virtual_link::{kauffman_statesum, live_by_marks, Passage, State, VirtualDiagram};
use ribbon_graph::{oracle, EdgeOrder, EdgeSet};

pub fn p(s: &str) -> LaurentPoly {
    s.parse().unwrap()
}

pub fn fixture(name: &str) -> String {
    let path = format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}"))
}

pub fn appendix_graph() -> RibbonGraph {
    fixture("appendix.rg").parse().unwrap()
}

pub fn whitehead() -> VirtualDiagram {
    fixture("whitehead.gauss").parse().unwrap()
}

pub const APPENDIX_RS: &str = "1 + 3*y + y^2 + x*z + y*z + 2*x*y*z + y^2*z + x*y^2*z + x*y*z^2 + y^2*z^2 \
                               + x*y^2*z^3 + x^-1*y + x^-1*y^2";

/// Quasi-tree rows of the appendix table: `E(Q)`, then `I_o, I_n, D, E_o`,
/// edges numbered from 0.
pub const TABLE1: [[&[usize]; 5]; 7] = [
    [&[2], &[2], &[], &[], &[0]],
    [&[3], &[], &[], &[3], &[0]],
    [&[1, 2], &[2], &[1], &[], &[0]],
    [&[1, 3], &[], &[1], &[3], &[0]],
    [&[0, 2, 3], &[0], &[], &[2, 3], &[]],
    [&[1, 2, 3], &[], &[], &[1, 2, 3], &[]],
    [&[0, 1, 2, 3], &[], &[0], &[1, 2, 3], &[]],
];

/// The `N` and `S` columns of the appendix table, row by row.
pub const TABLE1_NS: [(&str, &str); 7] = [
    ("x^(-1/2)*y^(1/2)*(1 + y)", "x^(1/2)*y^(1/2) + x^(-1/2)*y^(1/2)"),
    ("1 + y", "1"),
    ("x^(1/2)*y^(1/2)*z*(1 + y)", "x^(1/2)*y^(1/2) + x^(-1/2)*y^(1/2)"),
    ("x*z*(1 + y)", "1"),
    ("y", "1 + y*z^2"),
    ("x*y*z^2", "1"),
    ("x*y^2*z^3", "1"),
];

/// Whether the per-quasi-tree factors of the report match the table.
pub fn matches_table1_ns(g: &RibbonGraph) -> bool {
    let rows = ribbon_graph::quasitree::qt_report(g, &EdgeOrder::identity(4)).unwrap();
    TABLE1.iter().zip(TABLE1_NS).all(|(r, (n, s))| {
        rows.iter()
            .find(|row| row.record.edges == set(r[0]))
            .is_some_and(|row| row.n == p(n) && row.s == p(s))
    })
}

pub fn set(ix: &[usize]) -> EdgeSet {
    EdgeSet::from_indices(ix.iter().copied())
}

/// Whether `g` (edges `e1..e4` in index order, ordered by index) has exactly
/// the quasi-trees and activity rows of the table.
pub fn matches_table1(g: &RibbonGraph) -> bool {
    let mut want: Vec<EdgeSet> = TABLE1.iter().map(|r| set(r[0])).collect();
    want.sort();
    if quasi_trees(g).ok().as_deref() != Some(&want[..]) {
        return false;
    }
    let order = EdgeOrder::identity(4);
    TABLE1.iter().all(|r| {
        let a = activities(g, set(r[0]), &order).unwrap();
        (a.internal_live_orientable, a.internal_live_nonorientable, a.internal_dead, a.external_live_orientable)
            == (set(r[1]), set(r[2]), set(r[3]), set(r[4]))
    })
}

fn permute(g: &RibbonGraph, perm: &[usize]) -> RibbonGraph {
    let circles = g
        .circles()
        .iter()
        .map(|c| c.iter().map(|a| Arrow::new(perm[a.edge], a.forward)).collect())
        .collect();
    let signs = (0..4).map(|i| g.sign(perm.iter().position(|&x| x == i).unwrap())).collect();
    RibbonGraph::new(g.labels().to_vec(), signs, circles).unwrap()
}

/// Every labelled 4-edge signed ribbon graph on at most three vertices whose
/// quasi-trees and activities match the table and whose signed polynomial is
/// the tabulated one, up to equality of labelled ribbon graphs.
pub fn appendix_search() -> Vec<RibbonGraph> {
    let want = p(APPENDIX_RS);
    let mut found: Vec<RibbonGraph> = Vec::new();
    let mut seen = HashSet::new();
    let perms: Vec<Vec<usize>> = permutations(4);
    for g in ribbon_graph::generate::all_presentations(4, 3) {
        if !g.is_unsigned() {
            continue;
        }
        for perm in &perms {
            let h = permute(&g, perm);
            if !matches_table1(&h) {
                continue;
            }
            for neg in 0..16u64 {
                let signs = (0..4).map(|i| if neg >> i & 1 == 1 { Sign::Minus } else { Sign::Plus }).collect();
                let s = h.with_signs(signs);
                if oracle::signed_br(&s) == want && seen.insert(s.canonical()) {
                    found.push(s);
                }
            }
        }
    }
    found
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        out.push(p.clone());
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| p[i] < p[i + 1]) else {
            return out;
        };
        let j = (i + 1..n).rev().find(|&j| p[j] > p[i]).unwrap();
        p.swap(i, j);
        p[i + 1..].reverse();
    }
}

/// Circle counts of the eight states, listed with crossing 1 most significant
/// and A before B.
pub const TABLE2_C: [usize; 8] = [2, 1, 1, 1, 1, 2, 1, 1];

/// Live orientable crossings `(A-split, B-split)` of the connected states,
/// crossings numbered from 0.
pub const TABLE2_LIVE: [Option<(&[usize], &[usize])>; 8] = [
    None,
    Some((&[0], &[])),
    Some((&[], &[])),
    Some((&[], &[])),
    Some((&[], &[0])),
    None,
    Some((&[], &[])),
    Some((&[], &[])),
];

pub const WHITEHEAD_BRACKET: &str = "A^3*d + 3*A^2*B + 2*A*B^2 + A*B^2*d + B^3";

/// The table's row `i` as a state: bit `2 - j` of `i` is the splitting of
/// crossing `j`.
pub fn table2_state(i: usize) -> State {
    let mask = (0..3).filter(|j| i >> (2 - j) & 1 == 1).fold(0u64, |m, j| m | 1 << j);
    State::from_mask(3, mask)
}

pub fn matches_table2(d: &VirtualDiagram) -> bool {
    let order = EdgeOrder::identity(3);
    (0..8).all(|i| {
        let s = table2_state(i);
        if d.summary(&s).unwrap().c != TABLE2_C[i] {
            return false;
        }
        match TABLE2_LIVE[i] {
            None => true,
            Some((a, b)) => {
                let g = d.build_ribbon(&s).unwrap();
                let lo = activities(&g, EdgeSet::EMPTY, &order).unwrap().external_live_orientable;
                let lb = EdgeSet(lo.0 & s.b_mask());
                (lo.difference(lb), lb) == (set(a), set(b))
            }
        }
    })
}

/// Two-component signed Gauss codes with three crossings, every component
/// carrying at least one passage, that reproduce the state table and bracket.
pub fn whitehead_search() -> Vec<VirtualDiagram> {
    let want = p(WHITEHEAD_BRACKET);
    let passages: Vec<Passage> = (0..3)
        .flat_map(|x| [Passage { crossing: x, over: true }, Passage { crossing: x, over: false }])
        .collect();
    let labels: Vec<String> = (1..=3).map(|i| i.to_string()).collect();
    let mut found = Vec::new();
    let mut seen = HashSet::new();
    for perm in permutations(6) {
        let word: Vec<Passage> = perm.iter().map(|&i| passages[i]).collect();
        for cut in 1..6 {
            let (c1, c2) = word.split_at(cut);
            // Rotate each component to start at its least passage.
            let key = (min_rot(c1), min_rot(c2));
            let key = if key.0 <= key.1 { key } else { (key.1, key.0) };
            if !seen.insert(key.clone()) {
                continue;
            }
            for neg in 0..8u64 {
                let signs = (0..3).map(|i| if neg >> i & 1 == 1 { Sign::Minus } else { Sign::Plus }).collect();
                let d = VirtualDiagram::new(labels.clone(), signs, vec![c1.to_vec(), c2.to_vec()]).unwrap();
                if matches_table2(&d) && kauffman_statesum(&d) == want {
                    found.push(d);
                }
            }
        }
    }
    found
}

fn min_rot(c: &[Passage]) -> Vec<(usize, bool)> {
    let v: Vec<(usize, bool)> = c.iter().map(|p| (p.crossing, p.over)).collect();
    (0..v.len())
        .map(|r| {
            let mut w = v.clone();
            w.rotate_left(r);
            w
        })
        .min()
        .unwrap()
}

/// The live classification of a connected state read off its state circle,
/// compared against the classification from the ribbon graph.
pub fn live_dictionaries_agree(d: &VirtualDiagram, order: &EdgeOrder) -> bool {
    State::all(d.num_crossings()).all(|s| {
        if d.summary(&s).unwrap().c != 1 {
            return true;
        }
        let g = d.build_ribbon(&s).unwrap();
        let a = activities(&g, EdgeSet::EMPTY, order).unwrap();
        live_by_marks(d, &s, order).unwrap() == a.live()
    })
}

pub fn small_population() -> Vec<RibbonGraph> {
    exhaustive_connected(3)
}
