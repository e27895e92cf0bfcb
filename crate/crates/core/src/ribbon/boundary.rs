//! Boundary walks on the surface of a ribbon graph.
//!
//! Each arrow occupies a segment of its circle with a start and an end point,
//! taken along the circle's reference orientation. Consecutive segments on a
//! circle are joined by arcs. A segment whose edge is not attached is itself
//! part of the boundary; an attached edge replaces both of its segments by the
//! two long sides of its band, one joining the tails of the two arrows and one
//! joining their heads. Every point then has exactly one arc neighbour and one
//! other neighbour, so the boundary is a disjoint union of cycles.

use super::{Arrow, RibbonGraph};
use crate::edge_set::EdgeSet;

/// One boundary component, as the cyclic word of arrows met along it.
pub type TracedCircle = Vec<Arrow>;

struct Layout {
    /// Global index of the first arrow of every circle.
    offset: Vec<usize>,
    /// (circle, position) of every global arrow index.
    owner: Vec<(usize, usize)>,
}

impl Layout {
    fn new(g: &RibbonGraph) -> Self {
        let mut offset = Vec::with_capacity(g.circles.len());
        let mut owner = Vec::new();
        for (c, circle) in g.circles.iter().enumerate() {
            offset.push(owner.len());
            owner.extend((0..circle.len()).map(|p| (c, p)));
        }
        Layout { offset, owner }
    }

    fn global(&self, c: usize, p: usize) -> usize {
        self.offset[c] + p
    }
}

// Point encoding: 2*g is the start of segment g, 2*g+1 its end.
const START: usize = 0;
const END: usize = 1;

impl RibbonGraph {
    fn tail_point(&self, lay: &Layout, c: usize, p: usize) -> usize {
        let g = lay.global(c, p);
        if self.circles[c][p].forward {
            2 * g + START
        } else {
            2 * g + END
        }
    }

    fn arc_partner(&self, lay: &Layout, point: usize) -> usize {
        let g = point / 2;
        let (c, p) = lay.owner[g];
        let len = self.circles[c].len();
        if point % 2 == END {
            2 * lay.global(c, (p + 1) % len) + START
        } else {
            2 * lay.global(c, (p + len - 1) % len) + END
        }
    }

    /// The non-arc neighbour of `point`, and the arrow recorded when the walk
    /// goes from `point` to it.
    fn other_partner(&self, lay: &Layout, attached: EdgeSet, point: usize) -> (usize, Arrow) {
        let g = point / 2;
        let (c, p) = lay.owner[g];
        let arrow = self.circles[c][p];
        let e = arrow.edge;
        let is_tail = self.tail_point(lay, c, p) == point;
        if !attached.contains(e) {
            let to = point ^ 1;
            return (to, Arrow::new(e, is_tail));
        }
        let [s1, s2] = self.slots[e];
        let first = lay.global(s1.circle, s1.pos) == g;
        let mate = if first { s2 } else { s1 };
        let mate_tail = self.tail_point(lay, mate.circle, mate.pos);
        let to = if is_tail { mate_tail } else { mate_tail ^ 1 };
        // Long sides run from the first arrow's tail (head) to the second
        // arrow's tail (head).
        (to, Arrow::new(e, first))
    }

    fn walk(&self, attached: EdgeSet, mut visit: impl FnMut(Option<Vec<Arrow>>), record: bool) {
        let lay = Layout::new(self);
        let mut seen = vec![false; 2 * lay.owner.len()];
        for (c, circle) in self.circles.iter().enumerate() {
            if circle.is_empty() {
                visit(record.then(Vec::new));
                continue;
            }
            for p in 0..circle.len() {
                for side in [START, END] {
                    let start = 2 * lay.global(c, p) + side;
                    if seen[start] {
                        continue;
                    }
                    let mut word = Vec::new();
                    let mut at = start;
                    loop {
                        seen[at] = true;
                        let (to, tok) = self.other_partner(&lay, attached, at);
                        seen[to] = true;
                        if record {
                            word.push(tok);
                        }
                        at = self.arc_partner(&lay, to);
                        if at == start {
                            break;
                        }
                    }
                    visit(record.then_some(word));
                }
            }
        }
    }

    /// Boundary components of `F_attached`, transcribed as arrow words.
    ///
    /// Edges outside `attached` show up as marking arrows where the walk runs
    /// along their segments; attached edges show up once on each long side of
    /// their band. Arrow senses are relative to the direction of the walk.
    pub fn boundary_trace(&self, attached: EdgeSet) -> Vec<TracedCircle> {
        let mut out = Vec::new();
        self.walk(attached, |w| out.push(w.unwrap()), true);
        out
    }

    /// `f(F_set)`, the number of boundary components.
    pub fn faces(&self, set: EdgeSet) -> usize {
        let mut n = 0;
        self.walk(set, |_| n += 1, false);
        n
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(text: &str) -> RibbonGraph {
        text.parse().unwrap()
    }

    #[test]
    fn single_loops() {
        let annulus = g("circle: e1> e1<");
        assert_eq!(annulus.boundary_trace(annulus.edges()).len(), 2);
        let moebius = g("circle: e1> e1>");
        assert_eq!(moebius.boundary_trace(moebius.edges()).len(), 1);
    }

    #[test]
    fn empty_attachment_reproduces_circles() {
        let h = g("circle: e2> e1> e2< e3> e1> e3<\ncircle:");
        let traced = h.boundary_trace(EdgeSet::EMPTY);
        assert_eq!(traced, h.circles().to_vec());
    }

    #[test]
    fn each_long_side_is_transcribed_once() {
        let h = g("circle: a> b< a< b>\ncircle: c> \ncircle: c<");
        for set in h.edges().subsets() {
            let traced = h.boundary_trace(set);
            let mut count = vec![0; h.num_edges()];
            for w in &traced {
                for a in w {
                    count[a.edge] += 1;
                }
            }
            assert!(count.iter().all(|&n| n == 2));
            assert_eq!(traced.len(), h.faces(set));
        }
    }
}
