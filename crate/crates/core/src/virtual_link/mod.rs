//! Virtual link diagrams given by signed Gauss codes, their states, and the
//! Kauffman bracket computed three ways.

mod bracket;
mod gauss;
mod state;

pub use bracket::{
    bracket_via_ribbon, connected_state_expansion, connected_state_terms, connected_states, connected_states_direct, kauffman_statesum,
    live_by_marks, ConnectedStateTerm,
};
pub use gauss::{Passage, VirtualDiagram};
pub use state::{Splitting, State, StateSummary, StrandPass};

/// `(summary, circles)` for one state.
pub fn resolve_state(d: &VirtualDiagram, s: &State) -> crate::Result<(StateSummary, Vec<Vec<StrandPass>>)> {
    let circles = d.state_circles(s)?;
    Ok((d.summary(s)?, circles))
}
