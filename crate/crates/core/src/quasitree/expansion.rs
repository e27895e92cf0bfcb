//! Quasi-tree expansions of the signed, unsigned and multivariate
//! polynomials, and the per-quasi-tree terms used by the duality results.

use rayon::prelude::*;

use super::{activities, records, require_connected, QuasiTreeRecord};
use crate::duality::partial_dual;
use crate::edge_set::{EdgeOrder, EdgeSet};
use crate::error::{Error, Result};
use crate::oracle::{alpha, beta, mono};
use crate::poly::{multivariate_tutte_with, rank_poly, tutte_at, AbstractGraph, LaurentPoly, RankArgs, Var};
use crate::ribbon::{RibbonGraph, Sign};

fn lp(s: &str) -> LaurentPoly {
    s.parse().expect("well-formed constant expression")
}

fn split_signs(g: &RibbonGraph, set: EdgeSet) -> (usize, usize) {
    let neg = set.intersection(g.negative_edges()).len();
    (set.len() - neg, neg)
}

/// The two factors of one quasi-tree's contribution to `R_s(G; x+1, y, z)`:
/// `(N, S)` with `N` holding everything up to the rank polynomial and `S`
/// the prefixed rank polynomial of `G_Q`.
pub fn signed_term(g: &RibbonGraph, r: &QuasiTreeRecord) -> (LaurentPoly, LaurentPoly) {
    let act = &r.activities;
    let (_, neg_g) = split_signs(g, g.edges());
    let (_, neg_base) = split_signs(g, act.base());
    let (pos_eo, neg_eo) = split_signs(g, act.external_live_orientable);
    let (_, neg_io) = split_signs(g, act.internal_live_orientable);
    let bc = &r.base_counts;
    let neg_g = neg_g as i64;
    let neg_base = neg_base as i64;
    let n = LaurentPoly::monomial(mono(&[
        (Var::X, -neg_g + 2 * neg_base),
        (Var::Y, neg_g + 2 * (bc.n() as i64 - neg_base)),
        (Var::Z, 2 * bc.euler_genus()),
    ])) * lp("1 + x").pow(neg_eo as u32)
        * lp("1 + y").pow(pos_eo as u32);
    let s = rank_prefix(&r.gq, neg_io) * rank_factor(&r.gq);
    (n, s)
}

fn rank_prefix(gq: &AbstractGraph, neg_io: usize) -> LaurentPoly {
    let p = (gq.rank() + neg_io) as i64;
    LaurentPoly::monomial(mono(&[(Var::X, p), (Var::Y, -p)]))
}

/// `Ra(G_Q; 1, x^{-1/2}y^{1/2}, x^{1/2}y^{1/2}, x^{1/2}y^{1/2}z²)`.
fn rank_factor(gq: &AbstractGraph) -> LaurentPoly {
    rank_poly(
        gq,
        &RankArgs {
            alpha: LaurentPoly::one(),
            beta: lp("x^(-1/2)*y^(1/2)"),
            gamma: lp("x^(1/2)*y^(1/2)"),
            delta: lp("x^(1/2)*y^(1/2)*z^2"),
        },
    )
}

/// Quasi-tree expansion of `R_s(G; x+1, y, z)` for a connected signed graph.
/// Exponents of x and y are half-integers when `e₋(G)` is odd.
pub fn qt_expansion_signed(g: &RibbonGraph, order: &EdgeOrder) -> Result<LaurentPoly> {
    let recs = records(g, order)?;
    Ok(recs
        .par_iter()
        .map(|r| {
            let (n, s) = signed_term(g, r);
            n * s
        })
        .reduce(LaurentPoly::zero, |a, b| a + b))
}

/// Quasi-tree expansion of `R(G; x, y, z, 1)` for a connected unsigned graph.
pub fn qt_expansion_w1(g: &RibbonGraph, order: &EdgeOrder) -> Result<LaurentPoly> {
    if !g.is_unsigned() {
        return Err(Error::SignedInput);
    }
    let recs = records(g, order)?;
    let y_arg = lp("y*z^2 + 1");
    let x = LaurentPoly::x();
    let terms: Vec<LaurentPoly> = recs
        .par_iter()
        .map(|r| {
            let bc = &r.base_counts;
            LaurentPoly::monomial(mono(&[
                (Var::Y, 2 * bc.n() as i64),
                (Var::Z, 2 * bc.euler_genus()),
            ])) * lp("1 + y").pow(r.activities.external_live_orientable.len() as u32)
                * tutte_at(&r.gq, &x, &y_arg)
        })
        .collect();
    Ok(terms.into_iter().sum())
}

/// Quasi-tree expansion of `Z(G; q, β, c)`.
pub fn qt_expansion_multivariate(g: &RibbonGraph, order: &EdgeOrder) -> Result<LaurentPoly> {
    let recs = records(g, order)?;
    let c = LaurentPoly::c();
    let c_inv = lp("c^-1");
    let terms: Vec<LaurentPoly> = recs
        .par_iter()
        .map(|r| {
            let act = &r.activities;
            let base: LaurentPoly = act.base().iter().map(|e| LaurentPoly::var(beta(g, e))).product();
            let eo: LaurentPoly = act
                .external_live_orientable
                .iter()
                .map(|e| LaurentPoly::one() + &c * LaurentPoly::var(beta(g, e)))
                .product();
            let zt = multivariate_tutte_with(&r.gq, &LaurentPoly::q(), |ge| {
                LaurentPoly::var(beta(g, ge.label)) * &c_inv
            });
            base * LaurentPoly::var_pow(Var::C, r.base_counts.f as i32) * eo * zt
        })
        .collect();
    Ok(terms.into_iter().sum())
}

/// `N_G(Q; q, α, c)`, one quasi-tree's share of `Z_s(G; q, α, c)`.
pub fn n_term(g: &RibbonGraph, r: &QuasiTreeRecord) -> LaurentPoly {
    let act = &r.activities;
    let q = LaurentPoly::q();
    let c = LaurentPoly::c();
    let a = |e: usize| LaurentPoly::var(alpha(g, e));
    let a_inv = |e: usize| LaurentPoly::var_pow(alpha(g, e), -1);
    let neg = g.negative_edges();

    let mut out = LaurentPoly::var_pow(Var::C, r.base_counts.f as i32);
    for e in neg.iter() {
        out = out * a(e) * lp("q^(-1/2)");
    }
    for e in act.base().iter() {
        out = if neg.contains(e) {
            out * &q * a_inv(e)
        } else {
            out * a(e)
        };
    }
    for e in act.external_live_orientable.iter() {
        let f = if neg.contains(e) {
            LaurentPoly::one() + &q * &c * a_inv(e)
        } else {
            LaurentPoly::one() + a(e) * &c
        };
        out = out * f;
    }
    // Σ_{F ⊆ G_Q} q^{k(F)+e₋(F)} (α/c)^{E₊(F)} (αc)^{-E₋(F)}
    let zr = multivariate_tutte_with(&r.gq, &q, |ge| {
        if ge.sign == Sign::Minus {
            &q * a_inv(ge.label) * lp("c^-1")
        } else {
            a(ge.label) * lp("c^-1")
        }
    });
    out * zr
}

/// Closed form of `N_G(Q; 1, α, c)`.
pub fn n_term_q1(g: &RibbonGraph, r: &QuasiTreeRecord) -> LaurentPoly {
    let act = &r.activities;
    let neg = g.negative_edges();
    let c = LaurentPoly::c();
    let a = |e: usize| LaurentPoly::var(alpha(g, e));

    let base = act.base();
    let io = act.internal_live_orientable;
    let eo = act.external_live_orientable;
    let mut exps = vec![0i64; g.num_edges()];
    for e in neg.iter() {
        exps[e] += 1;
    }
    for e in base.iter() {
        exps[e] += if neg.contains(e) { -1 } else { 1 };
    }
    for e in io.union(eo).intersection(neg).iter() {
        exps[e] -= 1;
    }
    let mut factors: Vec<(Var, i64)> = exps
        .iter()
        .enumerate()
        .map(|(e, &k)| (alpha(g, e), 2 * k))
        .collect();
    factors.push((Var::C, 2 * (r.base_counts.f as i64 - io.len() as i64)));
    let mut out = LaurentPoly::monomial(mono(&factors));
    let one_plus = eo.difference(neg).union(io.intersection(neg));
    let sum_with = eo.intersection(neg).union(io.difference(neg));
    for e in one_plus.iter() {
        out = out * (LaurentPoly::one() + a(e) * &c);
    }
    for e in sum_with.iter() {
        out = out * (a(e) + &c);
    }
    out
}

/// `Z_s(G; 1, α, c)` with every edge weight equal to the single variable
/// `A`, summed over quasi-trees through the graphs `G^{E(Q)}`.
pub fn q1_expansion(g: &RibbonGraph, order: &EdgeOrder) -> Result<LaurentPoly> {
    require_connected(g)?;
    let qs = super::quasi_trees(g)?;
    let terms: Result<Vec<LaurentPoly>> = qs
        .par_iter()
        .map(|&q| {
            let d = partial_dual(g, q);
            let lo = activities(&d, EdgeSet::EMPTY, order)?.external_live_orientable;
            let neg_d = d.negative_edges();
            let pos_lo = lo.difference(neg_d).len() as u32;
            let neg_lo = lo.intersection(neg_d).len() as u32;
            Ok(LaurentPoly::var_pow(Var::A, neg_d.len() as i32)
                * lp("1 + A*c").pow(pos_lo)
                * lp("1 + c/A").pow(neg_lo))
        })
        .collect();
    Ok(LaurentPoly::c() * terms?.into_iter().sum::<LaurentPoly>())
}

/// One row of the quasi-tree table.
#[derive(Clone, Debug)]
pub struct QtReportRow {
    pub record: QuasiTreeRecord,
    /// `N` as tabulated, i.e. including the monomial prefix of `S`.
    pub n: LaurentPoly,
    /// The bare rank polynomial of `G_Q` at the expansion's arguments.
    pub s: LaurentPoly,
}

/// Table of quasi-trees with activities and the two factors of each term,
/// normalised so that `n * s` is the term.
pub fn qt_report(g: &RibbonGraph, order: &EdgeOrder) -> Result<Vec<QtReportRow>> {
    let recs = records(g, order)?;
    Ok(recs
        .into_iter()
        .map(|r| {
            let (n, _) = signed_term(g, &r);
            let neg_io = r
                .activities
                .internal_live_orientable
                .intersection(g.negative_edges())
                .len();
            let n = n * rank_prefix(&r.gq, neg_io);
            let s = rank_factor(&r.gq);
            QtReportRow { record: r, n, s }
        })
        .collect())
}
