//! Canonical representatives of arrow presentations.
//!
//! Two presentations describe the same labelled ribbon graph when they differ
//! by reordering circles, rotating a circle, reversing a circle's reference
//! orientation, or reversing both arrows of an edge. The canonical form picks
//! one representative per class, so structural equality of canonical forms
//! is equality of labelled ribbon graphs.

use super::{Arrow, RibbonGraph, Sign};

/// Circle words (edge ids) plus the twist bit of every edge.
type Key = (Vec<Vec<usize>>, Vec<bool>);

fn min_rotation(word: &[usize]) -> Vec<usize> {
    if word.is_empty() {
        return Vec::new();
    }
    (0..word.len())
        .map(|r| {
            let mut w = word.to_vec();
            w.rotate_left(r);
            w
        })
        .min()
        .unwrap()
}

impl RibbonGraph {
    fn key_for(&self, reflect: u64, perm: &[usize]) -> Key {
        let mut words = Vec::with_capacity(self.circles.len());
        let mut twist = vec![false; self.num_edges()];
        let mut first_sense: Vec<Option<bool>> = vec![None; self.num_edges()];
        for (c, circle) in self.circles.iter().enumerate() {
            let flip = reflect >> c & 1 == 1;
            let mut word: Vec<usize> = circle.iter().map(|a| perm[a.edge]).collect();
            if flip {
                word.reverse();
            }
            for a in circle {
                let sense = a.forward ^ flip;
                let e = perm[a.edge];
                match first_sense[e] {
                    None => first_sense[e] = Some(sense),
                    Some(s) => twist[e] = s == sense,
                }
            }
            words.push(min_rotation(&word));
        }
        words.sort();
        (words, twist)
    }

    fn best_key(&self, perm: &[usize]) -> Key {
        let v = self.circles.len();
        assert!(v < 32, "canonical form enumerates 2^v reflections");
        (0..1u64 << v)
            .map(|r| self.key_for(r, perm))
            .min()
            .unwrap_or_default()
    }

    fn from_key(labels: Vec<String>, signs: Vec<Sign>, key: &Key) -> RibbonGraph {
        let (words, twist) = key;
        let mut seen = vec![false; labels.len()];
        let circles = words
            .iter()
            .map(|w| {
                w.iter()
                    .map(|&e| {
                        let fwd = if seen[e] { twist[e] } else { true };
                        seen[e] = true;
                        Arrow::new(e, fwd)
                    })
                    .collect()
            })
            .collect();
        RibbonGraph::new(labels, signs, circles).expect("canonical rebuild is valid")
    }

    /// Canonical representative with the same labels and signs.
    pub fn canonical(&self) -> RibbonGraph {
        let id: Vec<usize> = (0..self.num_edges()).collect();
        let key = self.best_key(&id);
        RibbonGraph::from_key(self.labels.clone(), self.signs.clone(), &key)
    }

    /// Equality as labelled, signed ribbon graphs.
    pub fn same_ribbon_graph(&self, other: &RibbonGraph) -> bool {
        self.labels == other.labels
            && self.signs == other.signs
            && self.circles.len() == other.circles.len()
            && self.canonical() == other.canonical()
    }

    /// A key identifying the signed ribbon graph up to relabelling of edges.
    /// Enumerates all edge permutations, so keep `e` small.
    pub fn isomorphism_key(&self) -> (Vec<Vec<usize>>, Vec<bool>, Vec<Sign>) {
        let n = self.num_edges();
        assert!(n <= 8, "isomorphism key enumerates e! relabellings");
        let mut perm: Vec<usize> = (0..n).collect();
        let mut best: Option<(Vec<Vec<usize>>, Vec<bool>, Vec<Sign>)> = None;
        loop {
            let (words, twist) = self.best_key(&perm);
            let mut signs = vec![Sign::Plus; n];
            for e in 0..n {
                signs[perm[e]] = self.signs[e];
            }
            let cand = (words, twist, signs);
            if best.as_ref().is_none_or(|b| &cand < b) {
                best = Some(cand);
            }
            if !next_permutation(&mut perm) {
                break;
            }
        }
        best.unwrap()
    }
}

pub(crate) fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(text: &str) -> RibbonGraph {
        text.parse().unwrap()
    }

    #[test]
    fn presentation_moves_preserve_canonical_form() {
        let h = g("circle: a> b< a< c>\ncircle: b> c>\ncircle:");
        let c = h.canonical();
        assert_eq!(h.with_circle_rotated(0, 3).canonical(), c);
        assert_eq!(h.with_circle_reflected(1).canonical(), c);
        assert_eq!(h.with_edge_reversed(2).canonical(), c);
        let swapped = g("circle: b> c>\ncircle:\ncircle: a> b< a< c>");
        assert_eq!(swapped.canonical(), c);
    }

    #[test]
    fn twist_is_detected() {
        assert_ne!(g("circle: a> a<").canonical(), g("circle: a> a>").canonical());
    }

    #[test]
    fn relabelling_key() {
        let h1 = g("circle: a> b> a< b<");
        let h2 = g("circle: b> a> b< a<");
        assert_eq!(h1.isomorphism_key(), h2.isomorphism_key());
        let h3 = g("circle: a> a< b> b<");
        assert_ne!(h1.isomorphism_key(), h3.isomorphism_key());
    }

    #[test]
    fn permutations() {
        let mut p = vec![0, 1, 2];
        let mut n = 1;
        while next_permutation(&mut p) {
            n += 1;
        }
        assert_eq!(n, 6);
    }
}
