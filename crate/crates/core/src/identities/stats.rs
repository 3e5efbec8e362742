//! Array and ASM statistics used by the tournament expansions.

use serde::Serialize;

use crate::arrays::{Asm, StaircaseArray};

/// Diagonal-equality and content statistics of a staircase array.
///
/// An entry `x[i][j]` with `j >= 1` is a diagonal equality when it equals its
/// southwest neighbor `x[i+1][j-1]`. Vectors are indexed directly by row `i`,
/// diagonal `v = i + j` or value `k`; slot 0 is unused.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ArrayStats {
    pub n: usize,
    /// `E`: total diagonal equalities.
    pub equalities: usize,
    /// `E_i`, per row.
    pub row_equalities: Vec<usize>,
    /// `E^v`, per diagonal `v = i + j`.
    pub diagonal_equalities: Vec<usize>,
    /// `E_{i,k}`: equalities of value `k` in row `i`.
    pub row_value_equalities: Vec<Vec<usize>>,
    /// `C_k`: entries equal to `k`, including column 0.
    pub content: Vec<usize>,
    /// `C_{i,k}`.
    pub row_content: Vec<Vec<usize>>,
    /// `N`: entries strictly above their west neighbor and strictly below their southwest neighbor.
    pub strict_between: usize,
}

pub fn array_stats(a: &StaircaseArray) -> ArrayStats {
    let n = a.n();
    let mut s = ArrayStats {
        n,
        equalities: 0,
        row_equalities: vec![0; n + 1],
        diagonal_equalities: vec![0; n + 1],
        row_value_equalities: vec![vec![0; n + 1]; n + 1],
        content: vec![0; n + 1],
        row_content: vec![vec![0; n + 1]; n + 1],
        strict_between: 0,
    };
    for (i, j) in a.cells() {
        let x = a.get(i, j);
        s.content[x as usize] += 1;
        s.row_content[i][x as usize] += 1;
        if j == 0 {
            continue;
        }
        let sw = a.get(i + 1, j - 1);
        if x == sw {
            s.equalities += 1;
            s.row_equalities[i] += 1;
            s.diagonal_equalities[i + j] += 1;
            s.row_value_equalities[i][x as usize] += 1;
        }
        if x > a.get(i, j - 1) && x < sw {
            s.strict_between += 1;
        }
    }
    s
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AsmStats {
    /// `I(A) = Σ A[i][j] A[k][l]` over `i > k`, `j < l`.
    pub inversions: i64,
    pub negatives: usize,
}

pub fn asm_stats(a: &Asm) -> AsmStats {
    let m = a.rows();
    let n = a.n();
    let mut inversions = 0i64;
    for i in 0..n {
        for j in 0..n {
            if m[i][j] == 0 {
                continue;
            }
            for row in &m[..i] {
                for &y in &row[j + 1..] {
                    inversions += (m[i][j] * y) as i64;
                }
            }
        }
    }
    AsmStats {
        inversions,
        negatives: a.count_negative(),
    }
}

/// `Σ_i (n - i) A[i][j]` for each column `j = 1..=n` (slot 0 unused).
pub fn column_weights(a: &Asm) -> Vec<i64> {
    let n = a.n();
    let mut w = vec![0i64; n + 1];
    for (r, row) in a.rows().iter().enumerate() {
        for (c, &v) in row.iter().enumerate() {
            w[c + 1] += (n - r - 1) as i64 * v as i64;
        }
    }
    w
}
