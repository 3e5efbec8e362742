//! Sparse polynomials with integer coefficients in `λ, x_1, x_2, ...`.
//!
//! Variable 0 is `λ`; variable `k >= 1` is `x_k`.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::QPoly;
use crate::budget::Budget;
use crate::error::{Error, Result};

/// Exponent vector stored as `(variable, exponent)` pairs, sorted by
/// variable, with no zero exponents. Ordered graded-lexicographically.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<(u32, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: u32, e: u32) -> Self {
        Monomial::from_pairs([(v, e)])
    }

    /// `λ^lambda · Π x_k^e` from `(k, e)` pairs; repeated variables add up.
    pub fn new(lambda: u32, xs: impl IntoIterator<Item = (u32, u32)>) -> Self {
        Monomial::from_pairs(std::iter::once((0, lambda)).chain(xs))
    }

    fn from_pairs(pairs: impl IntoIterator<Item = (u32, u32)>) -> Self {
        let mut map = BTreeMap::new();
        for (v, e) in pairs {
            *map.entry(v).or_insert(0) += e;
        }
        Monomial(map.into_iter().filter(|&(_, e)| e > 0).collect())
    }

    pub fn exponent(&self, v: u32) -> u32 {
        self.0
            .binary_search_by_key(&v, |&(var, _)| var)
            .map_or(0, |k| self.0[k].1)
    }

    pub fn lambda(&self) -> u32 {
        self.exponent(0)
    }

    /// `(k, e)` pairs for the `x` variables.
    pub fn xs(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.0.iter().copied().filter(|&(v, _)| v > 0)
    }

    pub fn pairs(&self) -> &[(u32, u32)] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn x_degree(&self) -> u32 {
        self.xs().map(|(_, e)| e).sum()
    }

    fn times(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut a, mut b) = (self.0.iter().peekable(), other.0.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(&&(va, ea)), Some(&&(vb, eb))) => match va.cmp(&vb) {
                    Ordering::Less => {
                        out.push((va, ea));
                        a.next();
                    }
                    Ordering::Greater => {
                        out.push((vb, eb));
                        b.next();
                    }
                    Ordering::Equal => {
                        out.push((va, ea + eb));
                        a.next();
                        b.next();
                    }
                },
                (Some(&&p), None) => {
                    out.push(p);
                    a.next();
                }
                (None, Some(&&p)) => {
                    out.push(p);
                    b.next();
                }
                (None, None) => break,
            }
        }
        Monomial(out)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            // Lexicographic on the dense exponent vector (λ, x_1, x_2, ...):
            // at the first variable where they differ, the larger exponent wins.
            let (mut a, mut b) = (self.0.iter(), other.0.iter());
            loop {
                match (a.next(), b.next()) {
                    (None, None) => return Ordering::Equal,
                    (Some(_), None) => return Ordering::Greater,
                    (None, Some(_)) => return Ordering::Less,
                    (Some(&(va, ea)), Some(&(vb, eb))) => {
                        if va != vb {
                            return vb.cmp(&va);
                        }
                        if ea != eb {
                            return ea.cmp(&eb);
                        }
                    }
                }
            }
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|&(v, e)| {
                let name = if v == 0 { "lambda".to_string() } else { format!("x{v}") };
                if e == 1 {
                    name
                } else {
                    format!("{name}^{e}")
                }
            })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SparsePoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl SparsePoly {
    pub fn zero() -> Self {
        SparsePoly::default()
    }

    pub fn one() -> Self {
        SparsePoly::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        SparsePoly::term(Monomial::one(), c)
    }

    pub fn term(m: Monomial, c: impl Into<BigInt>) -> Self {
        let mut p = SparsePoly::zero();
        p.add_term(m, c.into());
        p
    }

    pub fn lambda() -> Self {
        SparsePoly::term(Monomial::var(0, 1), 1)
    }

    pub fn x(k: u32) -> Self {
        assert!(k >= 1, "x variables are numbered from 1");
        SparsePoly::term(Monomial::var(k, 1), 1)
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

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Terms in increasing graded-lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(SparsePoly::one(), |acc, _| &acc * self)
    }

    pub fn has_lambda(&self) -> bool {
        self.terms.keys().any(|m| m.lambda() > 0)
    }

    /// Evaluates with `λ = lambda` and `x_k = xs(k)`.
    pub fn eval(&self, lambda: &BigInt, xs: impl Fn(u32) -> BigInt) -> BigInt {
        self.terms
            .iter()
            .map(|(m, c)| {
                m.pairs().iter().fold(c.clone(), |acc, &(v, e)| {
                    let base = if v == 0 { lambda.clone() } else { xs(v) };
                    acc * num_traits::pow(base, e as usize)
                })
            })
            .sum()
    }

    /// Sum of all coefficients.
    pub fn at_ones(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Substitutes `x_k = q^(k-1)`. Rejects polynomials involving `λ`.
    pub fn principal_specialization(&self) -> Result<QPoly> {
        let mut out = QPoly::zero();
        for (m, c) in &self.terms {
            if m.lambda() > 0 {
                return Err(Error::LambdaPresent);
            }
            let e = m.xs().map(|(k, e)| (k - 1) * e).sum();
            out.add_term(e, c.clone());
        }
        Ok(out)
    }

    /// Collapses every `x_k` to 1, leaving a polynomial in `λ` (as `q`).
    pub fn lambda_part(&self) -> QPoly {
        let mut out = QPoly::zero();
        for (m, c) in &self.terms {
            out.add_term(m.lambda(), c.clone());
        }
        out
    }

    /// Smallest monomial (graded-lex) whose coefficients differ.
    pub fn first_difference(&self, other: &SparsePoly) -> Option<Monomial> {
        self.terms
            .keys()
            .chain(other.terms.keys())
            .filter(|m| self.coeff(m) != other.coeff(m))
            .min()
            .cloned()
    }
}

/// `Π_{1 <= i < j <= n} (x_i + λ x_j)`, fully expanded; errors once the
/// number of terms exceeds the budget.
pub fn tournament_gf(n: usize, budget: &Budget) -> Result<SparsePoly> {
    if n == 0 {
        return Err(Error::OrderTooSmall(0, 1));
    }
    let mut acc = SparsePoly::one();
    for i in 1..=n as u32 {
        for j in i + 1..=n as u32 {
            let factor = SparsePoly::x(i) + SparsePoly::lambda() * SparsePoly::x(j);
            acc = &acc * &factor;
            budget.check_items("polynomial terms", &BigUint::from(acc.len()))?;
        }
    }
    Ok(acc)
}

impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if k == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let a = c.abs();
            match (a.is_one(), m.pairs().is_empty()) {
                (_, true) => write!(f, "{a}")?,
                (true, false) => write!(f, "{m}")?,
                (false, false) => write!(f, "{a}*{m}")?,
            }
        }
        Ok(())
    }
}

impl AddAssign<&SparsePoly> for SparsePoly {
    fn add_assign(&mut self, rhs: &SparsePoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl Add for SparsePoly {
    type Output = SparsePoly;
    fn add(mut self, rhs: SparsePoly) -> SparsePoly {
        self += &rhs;
        self
    }
}

impl Neg for SparsePoly {
    type Output = SparsePoly;
    fn neg(self) -> SparsePoly {
        SparsePoly {
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl Sub for SparsePoly {
    type Output = SparsePoly;
    fn sub(self, rhs: SparsePoly) -> SparsePoly {
        self + (-rhs)
    }
}

impl Mul for &SparsePoly {
    type Output = SparsePoly;
    fn mul(self, rhs: &SparsePoly) -> SparsePoly {
        let mut out = SparsePoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.times(mb), ca * cb);
            }
        }
        out
    }
}

impl Mul for SparsePoly {
    type Output = SparsePoly;
    fn mul(self, rhs: SparsePoly) -> SparsePoly {
        &self * &rhs
    }
}

impl std::iter::Sum for SparsePoly {
    fn sum<I: Iterator<Item = SparsePoly>>(iter: I) -> SparsePoly {
        iter.fold(SparsePoly::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    lambda: u32,
    x: BTreeMap<u32, u32>,
    coeff: String,
}

impl Serialize for SparsePoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<TermJson> = self
            .terms
            .iter()
            .map(|(m, c)| TermJson {
                lambda: m.lambda(),
                x: m.xs().collect(),
                coeff: c.to_string(),
            })
            .collect();
        rows.serialize(s)
    }
}

impl<'de> Deserialize<'de> for SparsePoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<TermJson>::deserialize(d)?;
        let mut p = SparsePoly::zero();
        for row in rows {
            if row.x.contains_key(&0) {
                return Err(serde::de::Error::custom("x variables are numbered from 1"));
            }
            let c: BigInt = row.coeff.parse().map_err(serde::de::Error::custom)?;
            p.add_term(Monomial::new(row.lambda, row.x), c);
        }
        Ok(p)
    }
}
