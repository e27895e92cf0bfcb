use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Polynomial indeterminates. The derived order is the printing order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    X,
    Y,
    Z,
    W,
    Q,
    C,
    A,
    B,
    D,
    /// Per-edge weight of the signed multivariate polynomial.
    Alpha(String),
    /// Per-edge weight of the unsigned multivariate polynomial.
    Beta(String),
}

impl Var {
    pub fn name(&self) -> String {
        match self {
            Var::X => "x".into(),
            Var::Y => "y".into(),
            Var::Z => "z".into(),
            Var::W => "w".into(),
            Var::Q => "q".into(),
            Var::C => "c".into(),
            Var::D => "d".into(),
            Var::A => "A".into(),
            Var::B => "B".into(),
            Var::Alpha(e) => format!("alpha:{e}"),
            Var::Beta(e) => format!("beta:{e}"),
        }
    }

    pub fn from_name(s: &str) -> Option<Var> {
        Some(match s {
            "x" => Var::X,
            "y" => Var::Y,
            "z" => Var::Z,
            "w" => Var::W,
            "q" => Var::Q,
            "c" => Var::C,
            "d" => Var::D,
            "A" => Var::A,
            "B" => Var::B,
            _ => {
                if let Some(e) = s.strip_prefix("alpha:") {
                    Var::Alpha(e.to_string())
                } else if let Some(e) = s.strip_prefix("beta:") {
                    Var::Beta(e.to_string())
                } else {
                    return None;
                }
            }
        })
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// A product of variable powers. Exponents are stored doubled, so `x^(1/2)`
/// is `(X, 1)`. Factors are sorted by variable and never have exponent zero.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<(Var, i32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    /// `v^(halves/2)`.
    pub fn var_half(v: Var, halves: i32) -> Self {
        if halves == 0 {
            Monomial::one()
        } else {
            Monomial(vec![(v, halves)])
        }
    }

    pub fn factors(&self) -> &[(Var, i32)] {
        &self.0
    }

    /// Doubled exponent of `v`.
    pub fn exponent_halves(&self, v: &Var) -> i32 {
        self.0
            .iter()
            .find(|(w, _)| w == v)
            .map_or(0, |&(_, e)| e)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    fn total_halves(&self) -> i64 {
        self.0.iter().map(|&(_, e)| e as i64).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j].clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let e = a[i].1 + b[j].1;
                    if e != 0 {
                        out.push((a[i].0.clone(), e));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    /// Raises to the power `halves/2`; `None` if an exponent would leave the
    /// half-integer lattice.
    pub fn pow_half(&self, halves: i32) -> Option<Monomial> {
        let mut out = Vec::with_capacity(self.0.len());
        for (v, e) in &self.0 {
            let prod = e * halves;
            if prod % 2 != 0 {
                return None;
            }
            if prod != 0 {
                out.push((v.clone(), prod / 2));
            }
        }
        Some(Monomial(out))
    }

    fn without(&self, v: &Var) -> Monomial {
        Monomial(self.0.iter().filter(|(w, _)| w != v).cloned().collect())
    }

    fn print_order(&self, other: &Monomial) -> std::cmp::Ordering {
        // Ascending total degree, then larger exponents of earlier variables
        // first.
        self.total_halves().cmp(&other.total_halves()).then_with(|| {
            let (a, b) = (&self.0, &other.0);
            for k in 0..a.len().max(b.len()) {
                match (a.get(k), b.get(k)) {
                    (Some((va, ea)), Some((vb, eb))) => {
                        if va != vb {
                            // The one carrying the earlier variable wins if its
                            // exponent is positive.
                            return if va < vb {
                                0.cmp(ea)
                            } else {
                                eb.cmp(&0)
                            };
                        }
                        if ea != eb {
                            return eb.cmp(ea);
                        }
                    }
                    (Some((_, ea)), None) => return 0.cmp(ea),
                    (None, Some((_, eb))) => return eb.cmp(&0),
                    (None, None) => break,
                }
            }
            std::cmp::Ordering::Equal
        })
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (v, e)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            write!(f, "{v}")?;
            if e % 2 != 0 {
                write!(f, "^({e}/2)")?;
            } else if *e != 2 {
                write!(f, "^{}", e / 2)?;
            }
        }
        Ok(())
    }
}

/// Exact Laurent polynomial with half-integer exponents and big-integer
/// coefficients.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        LaurentPoly::term(Monomial::one(), BigInt::from(c))
    }

    pub fn term(m: Monomial, c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        LaurentPoly { terms }
    }

    pub fn monomial(m: Monomial) -> Self {
        LaurentPoly::term(m, BigInt::one())
    }

    pub fn var(v: Var) -> Self {
        LaurentPoly::monomial(Monomial::var_half(v, 2))
    }

    /// `v^k` for integer `k`.
    pub fn var_pow(v: Var, k: i32) -> Self {
        LaurentPoly::monomial(Monomial::var_half(v, 2 * k))
    }

    /// `v^(halves/2)`.
    pub fn var_half(v: Var, halves: i32) -> Self {
        LaurentPoly::monomial(Monomial::var_half(v, halves))
    }

    pub fn x() -> Self {
        LaurentPoly::var(Var::X)
    }
    pub fn y() -> Self {
        LaurentPoly::var(Var::Y)
    }
    pub fn z() -> Self {
        LaurentPoly::var(Var::Z)
    }
    pub fn w() -> Self {
        LaurentPoly::var(Var::W)
    }
    pub fn q() -> Self {
        LaurentPoly::var(Var::Q)
    }
    pub fn c() -> Self {
        LaurentPoly::var(Var::C)
    }
    pub fn d() -> Self {
        LaurentPoly::var(Var::D)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// The single term, if there is exactly one.
    pub fn as_term(&self) -> Option<(&Monomial, &BigInt)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, k: i64) -> LaurentPoly {
        let k = BigInt::from(k);
        let mut out = LaurentPoly::zero();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c * &k);
        }
        out
    }

    pub fn mul_monomial(&self, m: &Monomial) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(n, c)| (n.mul(m), c.clone())).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> LaurentPoly {
        let mut result = LaurentPoly::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// `self^(halves/2)`. Works for unit monomials at any half-integer power
    /// and for arbitrary polynomials at non-negative integer powers.
    pub fn pow_half(&self, halves: i32) -> Result<LaurentPoly> {
        if halves >= 0 && halves % 2 == 0 {
            return Ok(self.pow((halves / 2) as u32));
        }
        let err = || Error::NonRepresentablePower(format!("({self})^({halves}/2)"));
        let (m, c) = self.as_term().ok_or_else(err)?;
        let m = m.pow_half(halves).ok_or_else(err)?;
        let coeff = if c.is_one() {
            BigInt::one()
        } else if *c == -BigInt::one() && halves % 2 == 0 {
            if (halves / 2) % 2 == 0 {
                BigInt::one()
            } else {
                -BigInt::one()
            }
        } else {
            return Err(err());
        };
        Ok(LaurentPoly::term(m, coeff))
    }

    pub fn inverse(&self) -> Result<LaurentPoly> {
        self.pow_half(-2)
    }

    /// Identifies `w^2` with `w`: every positive power of `w` becomes `w`.
    pub fn reduce_w(&self) -> Result<LaurentPoly> {
        let mut out = LaurentPoly::zero();
        for (m, c) in &self.terms {
            let e = m.exponent_halves(&Var::W);
            if e < 0 || e % 2 != 0 {
                return Err(Error::InvalidWPower(m.to_string()));
            }
            let m = if e > 0 {
                m.without(&Var::W).mul(&Monomial::var_half(Var::W, 2))
            } else {
                m.clone()
            };
            out.add_term(m, c.clone());
        }
        Ok(out)
    }

    /// Simultaneous substitution. Fractional or negative powers of a bound
    /// variable need a unit-monomial replacement.
    pub fn substitute(&self, bindings: &HashMap<Var, LaurentPoly>) -> Result<LaurentPoly> {
        let mut cache: HashMap<(Var, i32), LaurentPoly> = HashMap::new();
        let mut out = LaurentPoly::zero();
        for (m, c) in &self.terms {
            let mut acc = LaurentPoly::term(Monomial::one(), c.clone());
            let mut free = Monomial::one();
            for (v, e) in m.factors() {
                match bindings.get(v) {
                    None => free = free.mul(&Monomial::var_half(v.clone(), *e)),
                    Some(r) => {
                        let key = (v.clone(), *e);
                        if !cache.contains_key(&key) {
                            let p = r.pow_half(*e).map_err(|_| {
                                Error::NonRepresentablePower(format!("{v} with exponent {e}/2 -> ({r})"))
                            })?;
                            cache.insert(key.clone(), p);
                        }
                        acc = &acc * &cache[&key];
                    }
                }
            }
            out += acc.mul_monomial(&free);
        }
        Ok(out)
    }

    /// Substitutes single variables; a convenience wrapper over [`substitute`].
    ///
    /// [`substitute`]: LaurentPoly::substitute
    pub fn subs(&self, pairs: &[(Var, LaurentPoly)]) -> Result<LaurentPoly> {
        self.substitute(&pairs.iter().cloned().collect())
    }

    /// True when every exponent is an integer.
    pub fn is_integral(&self) -> bool {
        self.terms
            .keys()
            .all(|m| m.factors().iter().all(|(_, e)| e % 2 == 0))
    }

    /// Largest exponent of `v` (as halves), if the polynomial is non-zero.
    pub fn max_exponent_halves(&self, v: &Var) -> Option<i32> {
        self.terms.keys().map(|m| m.exponent_halves(v)).max()
    }

    /// Sum of the coefficients.
    pub fn coefficient_sum(&self) -> BigInt {
        self.terms.values().sum()
    }

    fn sorted_terms(&self) -> Vec<(&Monomial, &BigInt)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| a.0.print_order(b.0));
        v
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.sorted_terms().into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::constant(c)
    }
}

impl From<Var> for LaurentPoly {
    fn from(v: Var) -> Self {
        LaurentPoly::var(v)
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl AddAssign for LaurentPoly {
    fn add_assign(&mut self, rhs: LaurentPoly) {
        if self.terms.len() < rhs.terms.len() {
            let lhs = std::mem::replace(self, rhs);
            *self += &lhs;
        } else {
            for (m, c) in rhs.terms {
                self.add_term(m, c);
            }
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c.clone());
        }
    }
}

impl MulAssign<&LaurentPoly> for LaurentPoly {
    fn mul_assign(&mut self, rhs: &LaurentPoly) {
        *self = &*self * rhs;
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

macro_rules! owned_ops {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $f(self, rhs: LaurentPoly) -> LaurentPoly { (&self).$f(&rhs) }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $f(self, rhs: &LaurentPoly) -> LaurentPoly { (&self).$f(rhs) }
        }
        impl $tr<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $f(self, rhs: LaurentPoly) -> LaurentPoly { self.$f(&rhs) }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::zero(), |mut a, b| {
            a += b;
            a
        })
    }
}

impl std::iter::Product for LaurentPoly {
    fn product<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::one(), |a, b| &a * &b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let (x, y) = (LaurentPoly::x(), LaurentPoly::y());
        assert_eq!((&x + &y) * (&x - &y), p("x^2 - y^2"));
    }

    #[test]
    fn half_powers() {
        let x = LaurentPoly::x();
        let h = x.pow_half(1).unwrap();
        assert_eq!(&h * &h, x);
        assert_eq!(x.pow_half(-2).unwrap() * &x, LaurentPoly::one());
        assert!(p("1 + x").pow_half(1).is_err());
        assert!(p("1 + x").pow_half(-2).is_err());
        assert_eq!(p("-x").pow_half(-2).unwrap(), p("-x^-1"));
    }

    #[test]
    fn reduction_modulo_w() {
        assert_eq!(p("w^3").reduce_w().unwrap(), p("w"));
        assert_eq!(p("w + w^2").reduce_w().unwrap(), p("2*w"));
        assert_eq!(p("1 + w").reduce_w().unwrap(), p("1 + w"));
        assert!(p("w^-1").reduce_w().is_err());
        assert!(p("w^(1/2)").reduce_w().is_err());
    }

    #[test]
    fn substitution() {
        let r = p("x*y").subs(&[(Var::X, LaurentPoly::q())]).unwrap();
        assert_eq!(r, p("q*y"));
        let r = p("x^(1/2)").subs(&[(Var::X, p("y^2*z"))]).unwrap();
        assert_eq!(r, p("y*z^(1/2)"));
        assert!(p("x^-1").subs(&[(Var::X, p("1 + y"))]).is_err());
        let r = p("x^2 + x").subs(&[(Var::X, p("1 + y"))]).unwrap();
        assert_eq!(r, p("2 + 3*y + y^2"));
    }

    #[test]
    fn printing() {
        assert_eq!(
            p("x^-1*y + 1 + 3*y + y^2 + x*z").to_string(),
            "1 + x^-1*y + 3*y + x*z + y^2"
        );
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(p("-2*x^(1/2)").to_string(), "-2*x^(1/2)");
        assert_eq!(p("alpha:e1^2*c").to_string(), "c*alpha:e1^2");
    }

    #[test]
    fn integrality() {
        assert!(p("x^-3*y").is_integral());
        assert!(!p("x^(1/2)").is_integral());
    }
}
