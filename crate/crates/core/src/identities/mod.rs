//! Expansions of the tournament generating function `Π_{i<j} (x_i + λ x_j)`
//! over ASMs and TSSCPP arrays, and exact verification reports.

mod stats;

use std::time::Instant;

use num_bigint::{BigInt, BigUint};
use num_integer::binomial;
use serde::Serialize;

pub use stats::{array_stats, asm_stats, column_weights, ArrayStats, AsmStats};

use crate::arrays::{enumerate_arrays, enumerate_row_shuffles, Asm, ASM_COLORS, SORTED_TOURNAMENT_COLORS, SSYT_COLORS};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::poly::{closed_form, tournament_gf, Monomial, QPoly, SparsePoly};
use crate::poset::{ColorSet, Method, Subposet};

fn check_n(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::OrderTooSmall(0, 1));
    }
    Ok(())
}

/// Adds `λ^e (1 + λ)^m · x^xs` to `p`.
fn add_lambda_binomial_term(p: &mut SparsePoly, e: u32, m: u32, xs: &[(u32, u32)]) {
    for t in 0..=m {
        let c = binomial(BigInt::from(m), BigInt::from(t));
        p.add_term(Monomial::new(e + t, xs.iter().copied()), c);
    }
}

/// `Σ_{α ∈ Y_n({b,y,o,g})} λ^E(α) (1 + λ)^N(α) Π_k x_k^(C_k(α) - 1)`.
pub fn asm_expansion_rhs(n: usize, budget: &Budget) -> Result<SparsePoly> {
    check_n(n)?;
    let mut p = SparsePoly::zero();
    for a in enumerate_arrays(n, ASM_COLORS, budget)? {
        let s = array_stats(&a);
        let xs: Vec<(u32, u32)> = (1..=n).map(|k| (k as u32, s.content[k] as u32 - 1)).collect();
        add_lambda_binomial_term(&mut p, s.equalities as u32, s.strict_between as u32, &xs);
    }
    Ok(p)
}

/// `Σ_A λ^(I(A) - N(A)) (1 + λ)^N(A) Π_j x_j^(Σ_i (n-i) A[i][j])` over ASMs of order `n`.
pub fn robbins_rumsey_rhs(n: usize, budget: &Budget) -> Result<SparsePoly> {
    check_n(n)?;
    let mut p = SparsePoly::zero();
    for a in Asm::enumerate(n, budget)? {
        let s = asm_stats(&a);
        let w = column_weights(&a);
        let xs: Vec<(u32, u32)> = (1..=n).map(|j| (j as u32, w[j] as u32)).collect();
        let e = s.inversions - s.negatives as i64;
        add_lambda_binomial_term(&mut p, e as u32, s.negatives as u32, &xs);
    }
    Ok(p)
}

/// `Σ_{α ∈ Y_n({b,r,g,y})} λ^E(α) Π_{i<n} x_i^(n-i-E_i(α)) Σ_{α'} Π_v x_v^(E^v(α'))`,
/// the inner sum running over the row shuffles `α'` of `α`. The diagonal
/// `v = i + j` of an equality is the label of the upset winner, so `v`
/// runs over `2..=n`.
pub fn tsscpp_expansion_rhs(n: usize, budget: &Budget) -> Result<SparsePoly> {
    check_n(n)?;
    let mut p = SparsePoly::zero();
    for alpha in enumerate_arrays(n, SORTED_TOURNAMENT_COLORS, budget)? {
        let s = array_stats(&alpha);
        let losses: Vec<(u32, u32)> = (1..n)
            .map(|i| (i as u32, (n - i - s.row_equalities[i]) as u32))
            .collect();
        for shuffled in enumerate_row_shuffles(&alpha)? {
            let d = array_stats(&shuffled).diagonal_equalities;
            let wins = (2..=n).map(|v| (v as u32, d[v] as u32));
            let m = Monomial::new(s.equalities as u32, losses.iter().copied().chain(wins));
            p.add_term(m, BigInt::from(1));
        }
    }
    Ok(p)
}

/// `Σ_{α ∈ Y_n({b,r,g,y})} λ^E(α) Π_{1<=i<=k<=n-1} binomial(C_{i+1,k}(α), E_{i,k}(α))`,
/// as a polynomial in `λ`.
pub fn tsscpp_lambda_count(n: usize, budget: &Budget) -> Result<QPoly> {
    check_n(n)?;
    let mut p = QPoly::zero();
    for alpha in enumerate_arrays(n, SORTED_TOURNAMENT_COLORS, budget)? {
        let s = array_stats(&alpha);
        let mut weight = BigUint::from(1u32);
        for i in 1..n {
            for k in i..n {
                weight *= binomial(
                    BigUint::from(s.row_content[i + 1][k]),
                    BigUint::from(s.row_value_equalities[i][k]),
                );
            }
        }
        p.add_term(s.equalities as u32, weight.into());
    }
    Ok(p)
}

/// `Σ_{α ∈ Y_n({g,y,o})} Π_k x_k^(C_k(α) - 1)`.
pub fn schur_staircase_sum(n: usize, budget: &Budget) -> Result<SparsePoly> {
    check_n(n)?;
    let mut p = SparsePoly::zero();
    for a in enumerate_arrays(n, SSYT_COLORS, budget)? {
        let s = array_stats(&a);
        let xs = (1..=n).map(|k| (k as u32, s.content[k] as u32 - 1));
        p.add_term(Monomial::new(0, xs), BigInt::from(1));
    }
    Ok(p)
}

/// `Π_{1<=i<j<=n} (x_i + x_j)`.
pub fn staircase_product(n: usize) -> SparsePoly {
    let mut p = SparsePoly::one();
    for i in 1..=n as u32 {
        for j in i + 1..=n as u32 {
            p = &p * &(SparsePoly::x(i) + SparsePoly::x(j));
        }
    }
    p
}

pub fn schur_staircase_check(n: usize, budget: &Budget) -> Result<bool> {
    Ok(schur_staircase_sum(n, budget)? == staircase_product(n))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Identity {
    /// Tournament product against the ASM inversion expansion.
    RobbinsRumsey,
    /// Tournament product against the ASM-array expansion.
    Asm,
    /// Tournament product against the TSSCPP-array expansion with row shuffles.
    Tsscpp,
    /// `(1+λ)^(n choose 2)` against the TSSCPP binomial-product count.
    TsscppCount,
    /// Staircase tableaux against `Π (x_i + x_j)`.
    Schur,
    /// Every closed-form count and rank generating function against ideal enumeration.
    Formulas,
}

impl Identity {
    pub const ALL: [Identity; 6] = [
        Identity::RobbinsRumsey,
        Identity::Asm,
        Identity::Tsscpp,
        Identity::TsscppCount,
        Identity::Schur,
        Identity::Formulas,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::RobbinsRumsey => "rr",
            Identity::Asm => "asm",
            Identity::Tsscpp => "tsscpp",
            Identity::TsscppCount => "tsscpp-count",
            Identity::Schur => "schur",
            Identity::Formulas => "formulas",
        }
    }
}

impl std::str::FromStr for Identity {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Identity::ALL
            .into_iter()
            .find(|i| i.name() == s)
            .ok_or_else(|| crate::error::invalid(format!("unknown identity {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Equal,
    Mismatch,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub identity: String,
    pub n: usize,
    pub status: Status,
    pub first_diff_monomial: Option<String>,
    pub elapsed_ms: u64,
}

impl VerificationReport {
    pub fn is_equal(&self) -> bool {
        self.status == Status::Equal
    }
}

fn report(identity: String, n: usize, diff: Option<String>, started: Instant) -> VerificationReport {
    VerificationReport {
        identity,
        n,
        status: if diff.is_none() {
            Status::Equal
        } else {
            Status::Mismatch
        },
        first_diff_monomial: diff,
        elapsed_ms: started.elapsed().as_millis() as u64,
    }
}

fn qpoly_difference(a: &QPoly, b: &QPoly, var: &str) -> Option<String> {
    let top = a.degree().max(b.degree())?;
    (0..=top)
        .find(|&e| a.coeff(e) != b.coeff(e))
        .map(|e| format!("{var}^{e}"))
}

/// Checks one identity at order `n`. `Formulas` yields one report per color
/// set with a closed form (orders `n >= 2`); the others yield a single report.
pub fn verify(identity: Identity, n: usize, budget: &Budget) -> Result<Vec<VerificationReport>> {
    check_n(n)?;
    let started = Instant::now();
    let single = |diff: Option<String>| Ok(vec![report(identity.name().to_string(), n, diff, started)]);
    let against_tournaments = |rhs: SparsePoly| -> Result<Option<String>> {
        let lhs = tournament_gf(n, budget)?;
        Ok(lhs.first_difference(&rhs).map(|m| m.to_string()))
    };
    match identity {
        Identity::RobbinsRumsey => single(against_tournaments(robbins_rumsey_rhs(n, budget)?)?),
        Identity::Asm => single(against_tournaments(asm_expansion_rhs(n, budget)?)?),
        Identity::Tsscpp => single(against_tournaments(tsscpp_expansion_rhs(n, budget)?)?),
        Identity::TsscppCount => {
            let expected = QPoly::one_plus_q_pow(1).pow((n * (n - 1) / 2) as u32);
            let got = tsscpp_lambda_count(n, budget)?;
            single(qpoly_difference(&expected, &got, "lambda"))
        }
        Identity::Schur => {
            let lhs = schur_staircase_sum(n, budget)?;
            single(lhs.first_difference(&staircase_product(n)).map(|m| m.to_string()))
        }
        Identity::Formulas => verify_formulas(n, budget),
    }
}

fn verify_formulas(n: usize, budget: &Budget) -> Result<Vec<VerificationReport>> {
    let mut out = Vec::new();
    if n < 2 {
        return Ok(out);
    }
    for colors in ColorSet::all_admissible() {
        let started = Instant::now();
        let Some(form) = closed_form(n, colors)? else {
            continue;
        };
        let poset = Subposet::build(n, colors)?;
        // Enumerate when affordable; beyond the budget fall back to the counting program.
        let method = match budget.check_items("order ideals", &form.count) {
            Ok(()) => Method::Enumerate,
            Err(_) => Method::Dp,
        };
        let measured = poset.rank_gf_by(method, budget)?;
        let diff = match &form.rank_gf {
            Some(f) => qpoly_difference(f, &measured, "q"),
            None => (BigInt::from(form.count.clone()) != measured.at_one()).then(|| "q^0".to_string()),
        };
        let label = if colors.is_empty() {
            "empty".to_string()
        } else {
            colors.compact()
        };
        out.push(report(format!("formulas/{label}"), n, diff, started));
    }
    Ok(out)
}
