//! Test populations: every small connected signed ribbon graph, random larger
//! ones, random crossing orders and random signed Gauss codes.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::edge_set::EdgeOrder;
use crate::ribbon::{Arrow, RibbonGraph, Sign};
use crate::virtual_link::{Passage, VirtualDiagram};

fn edge_labels(e: usize) -> Vec<String> {
    (1..=e).map(|i| format!("e{i}")).collect()
}

/// Words over `2e` slots where each edge occurs twice and edges are numbered
/// in order of first appearance.
fn growth_words(e: usize) -> Vec<Vec<usize>> {
    fn go(e: usize, word: &mut Vec<usize>, count: &mut Vec<u8>, opened: usize, out: &mut Vec<Vec<usize>>) {
        if word.len() == 2 * e {
            out.push(word.clone());
            return;
        }
        for x in 0..opened.min(e) {
            if count[x] == 1 {
                count[x] = 2;
                word.push(x);
                go(e, word, count, opened, out);
                word.pop();
                count[x] = 1;
            }
        }
        if opened < e {
            count[opened] = 1;
            word.push(opened);
            go(e, word, count, opened + 1, out);
            word.pop();
            count[opened] = 0;
        }
    }
    let mut out = Vec::new();
    go(e, &mut Vec::new(), &mut vec![0; e], 0, &mut out);
    out
}

/// Compositions of `n` into `k` positive parts.
fn compositions(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return if n == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    if k == 1 {
        return if n >= 1 { vec![vec![n]] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in 1..n {
        for mut rest in compositions(n - first, k - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn assemble(word: &[usize], parts: &[usize], twist: u64, neg: u64) -> RibbonGraph {
    let e = word.len() / 2;
    let mut seen = vec![false; e];
    let arrows: Vec<Arrow> = word
        .iter()
        .map(|&x| {
            let forward = if seen[x] { twist >> x & 1 == 1 } else { true };
            seen[x] = true;
            Arrow::new(x, forward)
        })
        .collect();
    let mut circles = Vec::new();
    let mut at = 0;
    for &p in parts {
        circles.push(arrows[at..at + p].to_vec());
        at += p;
    }
    if circles.is_empty() {
        circles.push(Vec::new());
    }
    let signs = (0..e).map(|x| if neg >> x & 1 == 1 { Sign::Minus } else { Sign::Plus }).collect();
    RibbonGraph::new(edge_labels(e), signs, circles).expect("generated presentation is valid")
}

/// Every unsigned arrow presentation with `e` edges on at most `max_vertices`
/// circles, edges numbered by first appearance, first arrow of each edge
/// pointing forward. Disconnected presentations are included.
pub fn all_presentations(e: usize, max_vertices: usize) -> impl Iterator<Item = RibbonGraph> {
    growth_words(e).into_iter().flat_map(move |word| {
        (1..=max_vertices.min(2 * e).max(1)).flat_map(move |v| {
            let word = word.clone();
            compositions(2 * e, v)
                .into_iter()
                .flat_map(move |parts| {
                    let word = word.clone();
                    (0..1u64 << e).map(move |twist| assemble(&word, &parts, twist, 0))
                })
        })
    })
}

/// Every connected signed ribbon graph with at most `max_edges` edges, one
/// per isomorphism class, edges labelled `e1, e2, ...`.
pub fn exhaustive_connected(max_edges: usize) -> Vec<RibbonGraph> {
    let mut out = vec![RibbonGraph::new(Vec::new(), Vec::new(), vec![Vec::new()]).expect("one vertex")];
    for e in 1..=max_edges {
        let mut seen = HashSet::new();
        for word in growth_words(e) {
            for v in 1..=e + 1 {
                for parts in compositions(2 * e, v) {
                    for twist in 0..1u64 << e {
                        let g = assemble(&word, &parts, twist, 0);
                        if !g.is_connected() {
                            continue;
                        }
                        for neg in 0..1u64 << e {
                            let signs =
                                (0..e).map(|x| if neg >> x & 1 == 1 { Sign::Minus } else { Sign::Plus }).collect();
                            let h = g.with_signs(signs);
                            if seen.insert(h.isomorphism_key()) {
                                out.push(h);
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

/// A random connected signed ribbon graph with `e` edges and at most
/// `max_vertices` vertices.
pub fn random_connected<R: Rng>(rng: &mut R, e: usize, max_vertices: usize) -> RibbonGraph {
    loop {
        let mut word: Vec<usize> = (0..e).flat_map(|x| [x, x]).collect();
        word.shuffle(rng);
        let v = rng.gen_range(1..=max_vertices.clamp(1, 2 * e.max(1)));
        let mut cuts: Vec<usize> = (1..2 * e).collect();
        cuts.shuffle(rng);
        let mut cuts: Vec<usize> = cuts.into_iter().take(v - 1).collect();
        cuts.sort_unstable();
        let mut parts = Vec::new();
        let mut prev = 0;
        for c in cuts.into_iter().chain([2 * e]) {
            parts.push(c - prev);
            prev = c;
        }
        let arrows: Vec<Arrow> = word.iter().map(|&x| Arrow::new(x, rng.gen())).collect();
        let mut circles = Vec::new();
        let mut at = 0;
        for p in parts {
            circles.push(arrows[at..at + p].to_vec());
            at += p;
        }
        let signs = (0..e).map(|_| if rng.gen() { Sign::Minus } else { Sign::Plus }).collect();
        let g = RibbonGraph::new(edge_labels(e), signs, circles).expect("generated presentation is valid");
        if g.is_connected() {
            return g;
        }
    }
}

pub fn random_order<R: Rng>(rng: &mut R, n: usize) -> EdgeOrder {
    let mut seq: Vec<usize> = (0..n).collect();
    seq.shuffle(rng);
    EdgeOrder::from_sequence(&seq, n).expect("a permutation")
}

/// Up to `count` distinct orders: the identity first, then random ones.
pub fn orders<R: Rng>(rng: &mut R, n: usize, count: usize) -> Vec<EdgeOrder> {
    let mut out = vec![EdgeOrder::identity(n)];
    let total: usize = (1..=n).product();
    let mut tries = 0;
    while out.len() < count.min(total) && tries < 1000 {
        let o = random_order(rng, n);
        if !out.contains(&o) {
            out.push(o);
        }
        tries += 1;
    }
    out
}

/// A random signed Gauss code with `n` crossings on at most `max_components`
/// components, each component holding at least one passage.
pub fn random_gauss<R: Rng>(rng: &mut R, n: usize, max_components: usize) -> VirtualDiagram {
    let mut passages: Vec<Passage> = (0..n)
        .flat_map(|x| [Passage { crossing: x, over: true }, Passage { crossing: x, over: false }])
        .collect();
    passages.shuffle(rng);
    let k = rng.gen_range(1..=max_components.clamp(1, (2 * n).max(1)));
    let mut cuts: Vec<usize> = (1..2 * n).collect();
    cuts.shuffle(rng);
    let mut cuts: Vec<usize> = cuts.into_iter().take(k.saturating_sub(1)).collect();
    cuts.sort_unstable();
    let mut components = Vec::new();
    let mut prev = 0;
    for c in cuts.into_iter().chain([2 * n]) {
        components.push(passages[prev..c].to_vec());
        prev = c;
    }
    let labels = (1..=n).map(|i| i.to_string()).collect();
    let signs = (0..n).map(|_| if rng.gen() { Sign::Minus } else { Sign::Plus }).collect();
    VirtualDiagram::new(labels, signs, components).expect("generated code is valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn growth_word_counts() {
        // (2e)! / (2^e e!) matchings.
        assert_eq!(growth_words(1).len(), 1);
        assert_eq!(growth_words(2).len(), 3);
        assert_eq!(growth_words(3).len(), 15);
    }

    #[test]
    fn one_edge_population() {
        // Twisted loop, untwisted loop, bridge; each with either sign.
        assert_eq!(exhaustive_connected(1).len(), 1 + 6);
    }

    #[test]
    fn random_graphs_are_connected() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let g = random_connected(&mut rng, 4, 3);
            assert!(g.is_connected());
            assert_eq!(g.num_edges(), 4);
        }
    }

    #[test]
    fn random_codes_parse_back() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for n in 1..=4 {
            let d = random_gauss(&mut rng, n, 2);
            assert_eq!(d.serialize().parse::<VirtualDiagram>().unwrap(), d);
        }
    }
}
