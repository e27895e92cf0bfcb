//! Exact Laurent polynomials and classical graph polynomials.

mod graph;
mod laurent;
mod parse;

pub use graph::{multivariate_tutte_with, rank_poly, tutte, tutte_at, AbstractGraph, GraphEdge, RankArgs};
pub use laurent::{LaurentPoly, Monomial, Var};
