//! The Kauffman bracket `[L](A, B, d)` by the state sum, through the signed
//! ribbon graph of a state, and as a sum over connected states.

use rayon::prelude::*;

use super::{State, StateSummary, VirtualDiagram};
use crate::edge_set::{EdgeOrder, EdgeSet};
use crate::error::{Error, Result};
use crate::oracle::signed_br;
use crate::poly::{LaurentPoly, Var};
use crate::quasitree::{activities, quasi_trees};

fn lp(s: &str) -> LaurentPoly {
    s.parse().expect("well-formed constant expression")
}

fn state_monomial(s: &StateSummary) -> LaurentPoly {
    LaurentPoly::var_pow(Var::A, s.a as i32)
        * LaurentPoly::var_pow(Var::B, s.b as i32)
        * LaurentPoly::var_pow(Var::D, s.c as i32 - 1)
}

/// `Σ_s A^a B^b d^{c-1}` over all states.
pub fn kauffman_statesum(d: &VirtualDiagram) -> LaurentPoly {
    let n = d.num_crossings();
    assert!(n < 40, "state sum over 2^{n} states");
    (0..1u64 << n)
        .into_par_iter()
        .map(|m| state_monomial(&d.summary(&State::from_mask(n, m)).expect("state has the right length")))
        .reduce(LaurentPoly::zero, |a, b| a + b)
}

/// `A^{n(G)} B^{r(G)} d^{k(G)-1} R_s(G; Ad/B + 1, Bd/A, 1/d)` for
/// `G = G_L^s`.
pub fn bracket_via_ribbon(d: &VirtualDiagram, s: &State) -> Result<LaurentPoly> {
    let g = d.build_ribbon(s)?;
    let c = g.counts();
    let r = signed_br(&g).subs(&[
        (Var::X, lp("A*d/B")),
        (Var::Y, lp("B*d/A")),
        (Var::Z, lp("d^-1")),
    ])?;
    Ok(LaurentPoly::var_pow(Var::A, c.n() as i32)
        * LaurentPoly::var_pow(Var::B, c.r() as i32)
        * LaurentPoly::var_pow(Var::D, c.k as i32 - 1)
        * r)
}

/// States with a single state circle, found as the states `s'` for which
/// `C_{base≠s'}` is a quasi-tree of `G_L^{base}`. Empty when that graph is
/// disconnected, since then no state is connected.
pub fn connected_states(d: &VirtualDiagram, base: &State) -> Result<Vec<State>> {
    let g = d.build_ribbon(base)?;
    match quasi_trees(&g) {
        Ok(qs) => {
            let mut out: Vec<State> = qs.into_iter().map(|q| base.toggled(q)).collect();
            out.sort_by_key(State::b_mask);
            Ok(out)
        }
        Err(Error::Disconnected(_)) => Ok(Vec::new()),
        Err(e) => Err(e),
    }
}

/// Connected states by checking every state.
pub fn connected_states_direct(d: &VirtualDiagram) -> Vec<State> {
    State::all(d.num_crossings())
        .filter(|s| d.summary(s).map(|x| x.c == 1).unwrap_or(false))
        .collect()
}

/// Live crossings of a connected state, read off its state circle: a crossing
/// is live when no lower crossing has exactly one mark between its two marks.
pub fn live_by_marks(d: &VirtualDiagram, s: &State, order: &EdgeOrder) -> Result<EdgeSet> {
    let circles = d.state_circles(s)?;
    if circles.len() != 1 {
        return Err(Error::NotOneVertex(circles.len()));
    }
    let marks: Vec<usize> = circles[0].iter().map(|p| p.crossing).collect();
    let mut live = EdgeSet::EMPTY;
    for x in 0..d.num_crossings() {
        let pos: Vec<usize> = (0..marks.len()).filter(|&i| marks[i] == x).collect();
        let mut single = EdgeSet::EMPTY;
        for &m in &marks[pos[0] + 1..pos[1]] {
            single = single.toggled(m);
        }
        if single.iter().all(|y| !order.precedes(y, x)) {
            live = live.with(x);
        }
    }
    Ok(live)
}

/// One connected state's share of the expansion.
#[derive(Clone, Debug)]
pub struct ConnectedStateTerm {
    pub state: State,
    pub summary: StateSummary,
    /// Live orientable crossings resolved by A- and by B-splittings.
    pub live_a: EdgeSet,
    pub live_b: EdgeSet,
    pub term: LaurentPoly,
}

/// Terms of `Σ A^a B^b (1 + Bd/A)^{|L_o^a|} (1 + Ad/B)^{|L_o^b|}` for a
/// diagram whose state graphs are connected.
pub fn connected_state_terms(d: &VirtualDiagram, order: &EdgeOrder) -> Result<Vec<ConnectedStateTerm>> {
    if order.len() != d.num_crossings() {
        return Err(Error::InvalidOrder(format!(
            "order has {} crossings, diagram has {}",
            order.len(),
            d.num_crossings()
        )));
    }
    let states = connected_states(d, &State::all_a(d.num_crossings()))?;
    states
        .into_par_iter()
        .map(|s| {
            let g = d.build_ribbon(&s)?;
            let lo = activities(&g, EdgeSet::EMPTY, order)?.external_live_orientable;
            let live_b = EdgeSet(lo.0 & s.b_mask());
            let live_a = lo.difference(live_b);
            let summary = d.summary(&s)?;
            let term = LaurentPoly::var_pow(Var::A, summary.a as i32)
                * LaurentPoly::var_pow(Var::B, summary.b as i32)
                * lp("1 + B*d/A").pow(live_a.len() as u32)
                * lp("1 + A*d/B").pow(live_b.len() as u32);
            Ok(ConnectedStateTerm {
                state: s,
                summary,
                live_a,
                live_b,
                term,
            })
        })
        .collect()
}

fn restrict_order(d: &VirtualDiagram, part: &VirtualDiagram, order: &EdgeOrder) -> Result<EdgeOrder> {
    let seq: Vec<usize> = order
        .sequence()
        .into_iter()
        .filter_map(|x| part.crossing_index(d.label(x)).ok())
        .collect();
    EdgeOrder::from_sequence(&seq, part.num_crossings())
}

/// The bracket as a sum over connected states. A split diagram is handled
/// through `[L] = d^{m-1} Π [L_i]` over its `m` split parts.
pub fn connected_state_expansion(d: &VirtualDiagram, order: &EdgeOrder) -> Result<LaurentPoly> {
    if order.len() != d.num_crossings() {
        return Err(Error::InvalidOrder(format!(
            "order has {} crossings, diagram has {}",
            order.len(),
            d.num_crossings()
        )));
    }
    let parts = d.split_parts();
    let mut out = LaurentPoly::var_pow(Var::D, parts.len() as i32 - 1);
    for part in &parts {
        let o = restrict_order(d, part, order)?;
        let sum: LaurentPoly = connected_state_terms(part, &o)?.into_iter().map(|t| t.term).sum();
        out = out * sum;
    }
    Ok(out)
}
