//! Brute-force spanning-subgraph sums. Everything else in the crate is tested
//! against these.

use rayon::prelude::*;

use crate::edge_set::EdgeSet;
use crate::poly::{LaurentPoly, Monomial, Var};
use crate::ribbon::RibbonGraph;

pub fn alpha(g: &RibbonGraph, e: usize) -> Var {
    Var::Alpha(g.label(e).to_string())
}

pub fn beta(g: &RibbonGraph, e: usize) -> Var {
    Var::Beta(g.label(e).to_string())
}

pub(crate) fn mono(factors: &[(Var, i64)]) -> Monomial {
    factors.iter().fold(Monomial::one(), |m, (v, h)| {
        m.mul(&Monomial::var_half(v.clone(), i32::try_from(*h).expect("exponent fits")))
    })
}

/// Sums `term(F)` over every spanning subgraph, in parallel.
pub fn subgraph_sum<F>(g: &RibbonGraph, term: F) -> LaurentPoly
where
    F: Fn(EdgeSet) -> LaurentPoly + Sync,
{
    let m = g.num_edges();
    assert!(m < 40, "spanning-subgraph sum over 2^{m} terms");
    (0..1u64 << m)
        .into_par_iter()
        .fold(LaurentPoly::zero, |mut acc, bits| {
            acc += term(EdgeSet(bits));
            acc
        })
        .reduce(LaurentPoly::zero, |mut a, b| {
            a += b;
            a
        })
}

/// `2 s(F) = e₋(F) - e₋(F̄)`.
pub fn twice_s(g: &RibbonGraph, f: EdgeSet) -> i64 {
    let neg = g.negative_edges();
    f.intersection(neg).len() as i64 - neg.difference(f).len() as i64
}

/// `R(G; x, y, z, w)` modulo `w² - w`.
pub fn br_poly(g: &RibbonGraph) -> LaurentPoly {
    let kg = g.counts().k as i64;
    let xm1 = LaurentPoly::x() - LaurentPoly::one();
    let raw = subgraph_sum(g, |f| {
        let c = g.sub_counts(f);
        let m = mono(&[
            (Var::Y, 2 * c.n() as i64),
            (Var::Z, 2 * c.euler_genus()),
            (Var::W, 2 * c.t as i64),
        ]);
        xm1.pow((c.k as i64 - kg) as u32).mul_monomial(&m)
    });
    raw.reduce_w().expect("w exponents are 0 or 1")
}

/// `R_s(G; x+1, y, z)` as a Laurent polynomial in x, y, z.
pub fn signed_br(g: &RibbonGraph) -> LaurentPoly {
    let kg = g.counts().k as i64;
    subgraph_sum(g, |f| {
        let c = g.sub_counts(f);
        let s2 = twice_s(g, f);
        LaurentPoly::monomial(mono(&[
            (Var::X, 2 * (c.k as i64 - kg) + s2),
            (Var::Y, 2 * c.n() as i64 - s2),
            (Var::Z, 2 * c.euler_genus()),
        ]))
    })
}

/// `Z(G; q, β, c) = Σ_F q^{k(F)} Π_{e∈F} β_e c^{f(F)}`.
pub fn multivariate_br(g: &RibbonGraph) -> LaurentPoly {
    subgraph_sum(g, |f| {
        let c = g.sub_counts(f);
        let mut factors = vec![(Var::Q, 2 * c.k as i64), (Var::C, 2 * c.f as i64)];
        factors.extend(f.iter().map(|e| (beta(g, e), 2)));
        LaurentPoly::monomial(mono(&factors))
    })
}

/// The monomial `M_G(F)` of the signed multivariate polynomial.
pub fn signed_multivariate_term(g: &RibbonGraph, f: EdgeSet) -> LaurentPoly {
    let c = g.sub_counts(f);
    let neg = g.negative_edges();
    let weighted = f.difference(neg).union(neg.difference(f));
    let mut factors = vec![
        (Var::Q, 2 * c.k as i64 + twice_s(g, f)),
        (Var::C, 2 * c.f as i64),
    ];
    factors.extend(weighted.iter().map(|e| (alpha(g, e), 2)));
    LaurentPoly::monomial(mono(&factors))
}

/// `Z_s(G; q, α, c)`.
pub fn signed_multivariate_br(g: &RibbonGraph) -> LaurentPoly {
    subgraph_sum(g, |f| signed_multivariate_term(g, f))
}

/// Sets `q = 1` and every per-edge `α_e` to the single variable `A`.
pub fn at_q1_single_alpha(g: &RibbonGraph, p: &LaurentPoly) -> LaurentPoly {
    let mut pairs = vec![(Var::Q, LaurentPoly::one())];
    pairs.extend((0..g.num_edges()).map(|e| (alpha(g, e), LaurentPoly::var(Var::A))));
    p.subs(&pairs).expect("monomial substitution")
}

/// Sets `q = 1`, keeping per-edge weights.
pub fn at_q1(p: &LaurentPoly) -> LaurentPoly {
    p.subs(&[(Var::Q, LaurentPoly::one())]).expect("monomial substitution")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(text: &str) -> RibbonGraph {
        text.parse().unwrap()
    }

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn br_small_cases() {
        assert_eq!(br_poly(&g("circle:")), p("1"));
        assert_eq!(br_poly(&g("circle: e> e<")), p("1 + y"));
        assert_eq!(br_poly(&g("circle: e> e>")), p("1 + y*z*w"));
        assert_eq!(br_poly(&g("circle: e>\ncircle: e<")), p("x"));
    }

    #[test]
    fn multivariate_small_cases() {
        assert_eq!(multivariate_br(&g("circle:")), p("q*c"));
        assert_eq!(multivariate_br(&g("circle: e> e<")), p("q*c + q*c^2*beta:e"));
    }

    #[test]
    fn signed_negative_loop() {
        // F = ∅: k=1, s=-1/2, n=0, k-f+n = 0;  F = {e}: s=1/2, n=1, k-f+n = 0.
        let h = g("sign e -\ncircle: e> e<");
        assert_eq!(signed_br(&h), p("x^(-1/2)*y^(1/2) + x^(1/2)*y^(1/2)"));
    }

    #[test]
    fn signed_agrees_with_unsigned_at_w1() {
        let h = g("circle: a> b> a> c< b< c<");
        let shifted = br_poly(&h)
            .subs(&[(Var::W, p("1")), (Var::X, p("x + 1"))])
            .unwrap();
        assert_eq!(signed_br(&h), shifted);
    }
}
