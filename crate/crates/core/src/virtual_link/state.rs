//! States of a diagram, their circles, and the ribbon graph of a state.
//!
//! Each classical crossing has four ends numbered counter-clockwise from the
//! north-east: 0 = NE, 1 = NW, 2 = SW, 3 = SE. The over strand runs from 2 to
//! 0. The under strand runs from 3 to 1 at a positive crossing and from 1 to 3
//! at a negative one. An A-splitting joins ends 0-3 and 1-2, a B-splitting
//! joins 0-1 and 2-3.

use std::fmt;

use super::{Passage, VirtualDiagram};
use crate::edge_set::EdgeSet;
use crate::error::{Error, Result};
use crate::ribbon::{Arrow, RibbonGraph, Sign};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Splitting {
    A,
    B,
}

/// A splitting for every crossing.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct State(Vec<Splitting>);

impl State {
    pub fn all_a(n: usize) -> Self {
        State(vec![Splitting::A; n])
    }

    /// Bit `i` of `b_mask` set means crossing `i` is B-split.
    pub fn from_mask(n: usize, b_mask: u64) -> Self {
        State((0..n).map(|i| if b_mask >> i & 1 == 1 { Splitting::B } else { Splitting::A }).collect())
    }

    pub fn b_mask(&self) -> u64 {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, s)| **s == Splitting::B)
            .fold(0, |m, (i, _)| m | 1 << i)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, i: usize) -> Splitting {
        self.0[i]
    }

    /// Flips the crossings in `set`.
    pub fn toggled(&self, set: EdgeSet) -> State {
        State::from_mask(self.len(), self.b_mask() ^ set.0)
    }

    /// `C_{s≠s'}`: crossings split differently.
    pub fn difference(&self, other: &State) -> EdgeSet {
        EdgeSet(self.b_mask() ^ other.b_mask())
    }

    /// Every state of an `n`-crossing diagram.
    pub fn all(n: usize) -> impl Iterator<Item = State> {
        assert!(n < 64);
        (0..1u64 << n).map(move |m| State::from_mask(n, m))
    }
}

impl fmt::Display for State {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            f.write_str(match s {
                Splitting::A => "A",
                Splitting::B => "B",
            })?;
        }
        Ok(())
    }
}

impl fmt::Debug for State {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `(a, b, c)`: numbers of A-splittings, B-splittings and state circles.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct StateSummary {
    pub a: usize,
    pub b: usize,
    pub c: usize,
}

/// A pass along one splitting strand: crossing and the ends it runs between.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StrandPass {
    pub crossing: usize,
    pub from: u8,
    pub to: u8,
}

fn ends(p: Passage, sign: Sign) -> (u8, u8) {
    match (p.over, sign) {
        (true, _) => (2, 0),
        (false, Sign::Plus) => (3, 1),
        (false, Sign::Minus) => (1, 3),
    }
}

fn smoothing_partner(s: Splitting, end: u8) -> u8 {
    match s {
        Splitting::A => 3 - end,
        Splitting::B => end ^ 1,
    }
}

/// Direction of the arrow placed on each strand: `(tail, head)` pairs.
fn arrows_of(s: Splitting) -> [(u8, u8); 2] {
    match s {
        Splitting::A => [(1, 2), (0, 3)],
        Splitting::B => [(0, 1), (3, 2)],
    }
}

impl VirtualDiagram {
    fn check_state(&self, s: &State) -> Result<()> {
        if s.len() == self.num_crossings() {
            Ok(())
        } else {
            Err(Error::InvalidState(format!(
                "{} splittings for {} crossings",
                s.len(),
                self.num_crossings()
            )))
        }
    }

    /// State circles, each as the cyclic sequence of splitting strands it runs
    /// along. Crossingless components give empty circles, listed last.
    pub fn state_circles(&self, s: &State) -> Result<Vec<Vec<StrandPass>>> {
        self.check_state(s)?;
        let n = self.num_crossings();
        // arc[4x + end] = the end reached by following the diagram away from
        // this end.
        let mut arc = vec![usize::MAX; 4 * n];
        for comp in self.components() {
            for (i, p) in comp.iter().enumerate() {
                let q = comp[(i + 1) % comp.len()];
                let out = 4 * p.crossing + ends(*p, self.sign(p.crossing)).1 as usize;
                let inn = 4 * q.crossing + ends(q, self.sign(q.crossing)).0 as usize;
                arc[out] = inn;
                arc[inn] = out;
            }
        }
        let mut seen = vec![false; 4 * n];
        let mut circles = Vec::new();
        for start in 0..4 * n {
            if seen[start] {
                continue;
            }
            let mut circle = Vec::new();
            let mut at = start;
            loop {
                let x = at / 4;
                let from = (at % 4) as u8;
                let to = smoothing_partner(s.get(x), from);
                seen[at] = true;
                seen[4 * x + to as usize] = true;
                circle.push(StrandPass { crossing: x, from, to });
                at = arc[4 * x + to as usize];
                if at == start {
                    break;
                }
            }
            circles.push(circle);
        }
        let empty = self.components().iter().filter(|c| c.is_empty()).count();
        circles.extend(std::iter::repeat_n(Vec::new(), empty));
        Ok(circles)
    }

    pub fn summary(&self, s: &State) -> Result<StateSummary> {
        let c = self.state_circles(s)?.len();
        let b = s.b_mask().count_ones() as usize;
        Ok(StateSummary {
            a: s.len() - b,
            b,
            c,
        })
    }

    /// The signed ribbon graph `G_L^s`: one circle per state circle, one edge
    /// per crossing (same label), positive when A-split.
    pub fn build_ribbon(&self, s: &State) -> Result<RibbonGraph> {
        let circles = self
            .state_circles(s)?
            .into_iter()
            .map(|c| {
                c.into_iter()
                    .map(|p| {
                        let [first, second] = arrows_of(s.get(p.crossing));
                        let (tail, head) = if [first.0, first.1].contains(&p.from) && [first.0, first.1].contains(&p.to) {
                            first
                        } else {
                            second
                        };
                        Arrow::new(p.crossing, p.from == tail && p.to == head)
                    })
                    .collect()
            })
            .collect();
        let signs = (0..self.num_crossings())
            .map(|i| match s.get(i) {
                Splitting::A => Sign::Plus,
                Splitting::B => Sign::Minus,
            })
            .collect();
        RibbonGraph::new(self.labels().to_vec(), signs, circles)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kink_states() {
        let d: VirtualDiagram = "O1+ U1+".parse().unwrap();
        let a = d.summary(&State::all_a(1)).unwrap();
        assert_eq!((a.a, a.b, a.c), (1, 0, 2));
        let b = d.summary(&State::from_mask(1, 1)).unwrap();
        assert_eq!((b.a, b.b, b.c), (0, 1, 1));
    }

    #[test]
    fn crossingless_unknot() {
        let d: VirtualDiagram = "()".parse().unwrap();
        let s = d.summary(&State::all_a(0)).unwrap();
        assert_eq!((s.a, s.b, s.c), (0, 0, 1));
        let g = d.build_ribbon(&State::all_a(0)).unwrap();
        assert_eq!((g.num_vertices(), g.num_edges()), (1, 0));
    }

    #[test]
    fn ribbon_vertices_are_state_circles() {
        let d: VirtualDiagram = "O1+ U2- O3+\nU1+ O2- U3+".parse().unwrap();
        for s in State::all(3) {
            let g = d.build_ribbon(&s).unwrap();
            assert_eq!(g.num_vertices(), d.summary(&s).unwrap().c);
        }
    }

    #[test]
    fn wrong_state_length() {
        let d: VirtualDiagram = "O1+ U1+".parse().unwrap();
        assert!(matches!(d.summary(&State::all_a(2)), Err(Error::InvalidState(_))));
    }
}
