//! Closed-form counts and rank generating functions for order ideals of
//! `T_n(S)`, each also available as a product over `1 <= i <= j <= k <= n-1`.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::QPoly;
use crate::error::{Error, Result};
use crate::poset::ColorSet;

fn check_n(n: usize, min: usize) -> Result<()> {
    if n < min {
        return Err(Error::OrderTooSmall(n, min));
    }
    Ok(())
}

fn factorial(m: u64) -> BigUint {
    (1..=m).fold(BigUint::one(), |acc, k| acc * k)
}

fn exact_div(num: &BigUint, den: &BigUint) -> Result<BigUint> {
    let (q, r) = num.div_rem(den);
    if !r.is_zero() {
        return Err(Error::InexactDivision(format!("{num} / {den}")));
    }
    Ok(q)
}

/// `[m]_q! = [1]_q [2]_q ... [m]_q`.
pub fn q_factorial(m: u32) -> QPoly {
    (1..=m).map(QPoly::q_int).product()
}

/// Gaussian binomial `[m choose k]_q`.
pub fn q_binomial(m: u32, k: u32) -> QPoly {
    if k > m {
        return QPoly::zero();
    }
    (q_factorial(m))
        .div_exact(&(&q_factorial(k) * &q_factorial(m - k)))
        .expect("q-binomial coefficients are polynomials")
}

/// `Π_{j=1}^n [j]_q!`.
pub fn q_factorial_product(n: usize) -> QPoly {
    (1..=n as u32).map(q_factorial).product()
}

/// `Π_{j=1}^n [n choose j]_q`.
pub fn q_binomial_product(n: usize) -> QPoly {
    (1..=n as u32).map(|j| q_binomial(n as u32, j)).product()
}

/// `Π_{j=1}^{n-1} (1 + q^j)^{n-j}`.
pub fn three_color_product(n: usize) -> QPoly {
    (1..n as u32)
        .map(|j| QPoly::one_plus_q_pow(j).pow(n as u32 - j))
        .product()
}

/// Carlitz–Riordan q-Catalan numbers `C_0(q), ..., C_j(q)`.
pub fn carlitz_riordan_table(j: usize) -> Vec<QPoly> {
    let mut c = vec![QPoly::one()];
    for m in 1..=j {
        let next = (1..=m).map(|k| (&c[k - 1] * &c[m - k]).shift(k as u32 - 1)).sum();
        c.push(next);
    }
    c
}

pub fn carlitz_riordan(j: usize) -> QPoly {
    carlitz_riordan_table(j).pop().unwrap()
}

/// `(Π_{j=1}^n C_j, Π_{j=1}^n C_j(q))`.
pub fn catalan_product(n: usize) -> (BigUint, QPoly) {
    let table = carlitz_riordan_table(n);
    let q: QPoly = table[1..].iter().cloned().product();
    let count = q.at_one().to_biguint().expect("positive coefficients");
    (count, q)
}

/// `Π_{j=0}^{n-1} (3j+1)! / (n+j)!`, built up from `A(1) = 1` via
/// `A(m+1) = A(m) (3m+1)! m! / ((2m)! (2m+1)!)`, dividing exactly at each step.
pub fn asm_number(n: usize) -> Result<BigUint> {
    check_n(n, 1)?;
    let mut a = BigUint::one();
    for m in 1..n as u64 {
        let num = a * factorial(3 * m + 1) * factorial(m);
        a = exact_div(&num, &(factorial(2 * m) * factorial(2 * m + 1)))?;
    }
    Ok(a)
}

/// Totally symmetric plane partitions in an `(n-1)`-box:
/// `Π_{1 <= i <= j <= n-1} (i+j+n-2) / (i+2j-2)`.
pub fn tspp_number(n: usize) -> Result<BigUint> {
    check_n(n, 2)?;
    let (mut num, mut den) = (BigUint::one(), BigUint::one());
    for i in 1..n as u64 {
        for j in i..n as u64 {
            num *= i + j + n as u64 - 2;
            den *= i + 2 * j - 2;
        }
    }
    exact_div(&num, &den)
}

/// Triples `1 <= i <= j <= k <= n-1`.
fn triples(n: usize) -> impl Iterator<Item = (u32, u32, u32)> {
    let m = n as u32;
    (1..m).flat_map(move |i| (i..m).flat_map(move |j| (j..m).map(move |k| (i, j, k))))
}

fn integer_triple_product(n: usize, f: impl Fn(u32, u32, u32) -> (u32, u32)) -> Result<BigUint> {
    let (mut num, mut den) = (BigUint::one(), BigUint::one());
    for (i, j, k) in triples(n) {
        let (a, b) = f(i, j, k);
        num *= a;
        den *= b;
    }
    exact_div(&num, &den)
}

fn q_triple_product(n: usize, f: impl Fn(u32, u32, u32) -> (u32, u32)) -> Result<QPoly> {
    let (mut num, mut den) = (QPoly::one(), QPoly::one());
    for (i, j, k) in triples(n) {
        let (a, b) = f(i, j, k);
        num = &num * &QPoly::q_int(a);
        den = &den * &QPoly::q_int(b);
    }
    num.div_exact(&den)
}

/// The triple-product forms, indexed by which family they belong to.
pub mod triple {
    use super::*;

    /// `Π [i+1]_q / [i]_q`, equal to [`q_factorial_product`].
    pub fn q_factorial_product(n: usize) -> Result<QPoly> {
        q_triple_product(n, |i, _, _| (i + 1, i))
    }

    /// `Π [j+1]_q / [j]_q`, equal to [`q_binomial_product`].
    pub fn q_binomial_product(n: usize) -> Result<QPoly> {
        q_triple_product(n, |_, j, _| (j + 1, j))
    }

    /// `Π [i+j]_q / [i+j-1]_q`, equal to [`three_color_product`].
    pub fn three_color_product(n: usize) -> Result<QPoly> {
        q_triple_product(n, |i, j, _| (i + j, i + j - 1))
    }

    /// `Π (i+j+2) / (i+j)`, the product of the first `n` Catalan numbers.
    pub fn catalan_product(n: usize) -> Result<BigUint> {
        integer_triple_product(n, |i, j, _| (i + j + 2, i + j))
    }

    /// `Π (i+j+k+1) / (i+j+k-1)`, equal to [`asm_number`].
    pub fn asm_number(n: usize) -> Result<BigUint> {
        integer_triple_product(n, |i, j, k| (i + j + k + 1, i + j + k - 1))
    }

    /// `Π (i+j+k-1) / (i+j+k-2)`, equal to [`tspp_number`].
    pub fn tspp_number(n: usize) -> Result<BigUint> {
        integer_triple_product(n, |i, j, k| (i + j + k - 1, i + j + k - 2))
    }
}

/// Closed forms known for a color set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// No edges: every subset is an ideal.
    Antichain,
    SingleColor,
    OppositePair,
    /// `{b,g}, {b,s}, {y,o}, {g,s}`.
    CatalanPair,
    /// `{r,y}, {r,g}, {y,g}, {b,o}`, whose duals are isomorphic to the pairs above.
    DualCatalanPair,
    ThreeColor,
    FourColor,
    Full,
}

impl Family {
    pub fn of(colors: ColorSet) -> Option<Family> {
        let is = |s: &str| colors == s.parse::<ColorSet>().unwrap();
        let any = |sets: &[&str]| sets.iter().any(|s| is(s));
        if !colors.is_admissible() {
            return None;
        }
        Some(match colors.len() {
            0 => Family::Antichain,
            1 => Family::SingleColor,
            2 if any(&["go", "rs", "by"]) => Family::OppositePair,
            2 if any(&["bg", "bs", "yo", "gs"]) => Family::CatalanPair,
            2 => Family::DualCatalanPair,
            3 if any(&["rgy", "bgs"]) => return None,
            3 => Family::ThreeColor,
            4 => Family::FourColor,
            6 => Family::Full,
            _ => return None,
        })
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::Antichain => "antichain",
            Family::SingleColor => "single color",
            Family::OppositePair => "opposite pair",
            Family::CatalanPair => "catalan pair",
            Family::DualCatalanPair => "dual catalan pair",
            Family::ThreeColor => "three colors",
            Family::FourColor => "four colors",
            Family::Full => "all colors",
        }
    }
}

/// Closed-form value for `|J(T_n(S))|` and, when known, its rank generating function.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedForm {
    pub family: Family,
    pub count: BigUint,
    pub rank_gf: Option<QPoly>,
}

/// Number of vertices of `T_n`.
fn vertex_count(n: usize) -> u32 {
    let n = n as u32;
    (n + 1) * n * (n - 1) / 6
}

/// Looks up the closed form for `T_n(S)`; `None` when no formula is known
/// (`{r,g,y}`, its dual `{b,g,s}` and the five-color sets).
pub fn closed_form(n: usize, colors: ColorSet) -> Result<Option<ClosedForm>> {
    check_n(n, 2)?;
    colors.check_admissible()?;
    let Some(family) = Family::of(colors) else {
        return Ok(None);
    };
    let rank_gf = match family {
        Family::Antichain => Some(QPoly::one_plus_q_pow(1).pow(vertex_count(n))),
        Family::SingleColor => Some(q_factorial_product(n)),
        Family::OppositePair => Some(q_binomial_product(n)),
        Family::CatalanPair => Some(catalan_product(n).1),
        // Ideals of a poset and of its dual correspond by complement,
        // so F(J(P), q) = q^|P| F(J(P*), 1/q).
        Family::DualCatalanPair => Some(catalan_product(n).1.reversed(vertex_count(n))),
        Family::ThreeColor => Some(three_color_product(n)),
        Family::FourColor | Family::Full => None,
    };
    let count = match (&rank_gf, family) {
        (Some(f), _) => f.at_one().to_biguint().expect("positive coefficients"),
        (None, Family::FourColor) => asm_number(n)?,
        (None, _) => tspp_number(n)?,
    };
    Ok(Some(ClosedForm { family, count, rank_gf }))
}
