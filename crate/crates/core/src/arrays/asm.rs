//! Alternating sign matrices and monotone triangles.

use serde::{Deserialize, Serialize};

use super::{StaircaseArray, ASM_COLORS};
use crate::budget::Budget;
use crate::error::{invalid, Error, Result};

/// An `n x n` alternating sign matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<i8>>", into = "Vec<Vec<i8>>")]
pub struct Asm {
    entries: Vec<Vec<i8>>,
}

impl Asm {
    pub fn new(entries: Vec<Vec<i8>>) -> Result<Self> {
        let n = entries.len();
        if n == 0 {
            return Err(invalid("ASM must be at least 1x1"));
        }
        if let Some(r) = entries.iter().position(|row| row.len() != n) {
            return Err(invalid(format!(
                "ASM row {} has length {}, expected {n}",
                r + 1,
                entries[r].len()
            )));
        }
        let mut col_sums = vec![0i32; n];
        for (r, row) in entries.iter().enumerate() {
            let mut row_sum = 0i32;
            for (c, &a) in row.iter().enumerate() {
                if !(-1..=1).contains(&a) {
                    return Err(invalid(format!(
                        "ASM entry ({},{}) = {a} not in {{-1,0,1}}",
                        r + 1,
                        c + 1
                    )));
                }
                row_sum += a as i32;
                col_sums[c] += a as i32;
                if !(0..=1).contains(&row_sum) {
                    return Err(invalid(format!(
                        "ASM row {} partial sum leaves {{0,1}} at column {}",
                        r + 1,
                        c + 1
                    )));
                }
                if !(0..=1).contains(&col_sums[c]) {
                    return Err(invalid(format!(
                        "ASM column {} partial sum leaves {{0,1}} at row {}",
                        c + 1,
                        r + 1
                    )));
                }
            }
            if row_sum != 1 {
                return Err(invalid(format!("ASM row {} sums to {row_sum}", r + 1)));
            }
        }
        if let Some(c) = col_sums.iter().position(|&s| s != 1) {
            return Err(invalid(format!("ASM column {} sums to {}", c + 1, col_sums[c])));
        }
        Ok(Asm { entries })
    }

    pub fn identity(n: usize) -> Self {
        Asm {
            entries: (0..n).map(|r| (0..n).map(|c| i8::from(r == c)).collect()).collect(),
        }
    }

    /// Permutation matrix with a 1 in row `i`, column `perm[i]` (0-based).
    pub fn from_permutation(perm: &[usize]) -> Result<Self> {
        let n = perm.len();
        let mut entries = vec![vec![0i8; n]; n];
        for (r, &c) in perm.iter().enumerate() {
            if c >= n {
                return Err(invalid(format!("permutation value {c} out of range")));
            }
            entries[r][c] = 1;
        }
        Asm::new(entries)
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn rows(&self) -> &[Vec<i8>] {
        &self.entries
    }

    /// Entry `A[i][j]`, 1-based.
    pub fn get(&self, i: usize, j: usize) -> i8 {
        self.entries[i - 1][j - 1]
    }

    pub fn count_negative(&self) -> usize {
        self.entries.iter().flatten().filter(|&&a| a == -1).count()
    }

    /// Row `i` of the triangle lists the columns whose partial sum through row `i` is 1.
    pub fn to_monotone_triangle(&self) -> MonotoneTriangle {
        let n = self.n();
        let mut sums = vec![0i8; n];
        let mut rows = Vec::with_capacity(n);
        for row in &self.entries {
            for (s, a) in sums.iter_mut().zip(row) {
                *s += a;
            }
            rows.push(
                sums.iter()
                    .enumerate()
                    .filter(|(_, &s)| s == 1)
                    .map(|(c, _)| c as u32 + 1)
                    .collect(),
            );
        }
        MonotoneTriangle { rows }
    }

    pub fn to_array(&self) -> StaircaseArray {
        self.to_monotone_triangle().to_array()
    }

    /// Inverse of [`Asm::to_array`]; the array must lie in `Y_n({g,y,o,b})`.
    pub fn from_array(array: &StaircaseArray) -> Result<Self> {
        Ok(MonotoneTriangle::from_array(array)?.to_asm())
    }

    /// All ASMs of order `n`, via the arrays `Y_n({g,y,o,b})`.
    pub fn enumerate(n: usize, budget: &Budget) -> Result<impl Iterator<Item = Asm>> {
        Ok(
            super::enumerate_arrays(n, ASM_COLORS, budget)?
                .map(|a| MonotoneTriangle::from_array_unchecked(&a).to_asm()),
        )
    }
}

impl TryFrom<Vec<Vec<i8>>> for Asm {
    type Error = Error;
    fn try_from(entries: Vec<Vec<i8>>) -> Result<Self> {
        Asm::new(entries)
    }
}

impl From<Asm> for Vec<Vec<i8>> {
    fn from(a: Asm) -> Self {
        a.entries
    }
}

/// A monotone triangle; row `i` (from the top, 1-based) has `i` entries.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<u32>>", into = "Vec<Vec<u32>>")]
pub struct MonotoneTriangle {
    rows: Vec<Vec<u32>>,
}

impl MonotoneTriangle {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(invalid("monotone triangle needs at least one row"));
        }
        for (k, row) in rows.iter().enumerate() {
            if row.len() != k + 1 {
                return Err(invalid(format!("triangle row {} has {} entries", k + 1, row.len())));
            }
            if row.iter().any(|&a| a == 0 || a as usize > n) {
                return Err(invalid(format!("triangle row {} has entries outside 1..={n}", k + 1)));
            }
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return Err(invalid(format!("triangle row {} is not strictly increasing", k + 1)));
            }
        }
        if rows[n - 1].iter().enumerate().any(|(c, &a)| a != c as u32 + 1) {
            return Err(invalid("triangle bottom row must be 1..n"));
        }
        for i in 1..n {
            let (above, row) = (&rows[i - 1], &rows[i]);
            for j in 0..i {
                if !(row[j] <= above[j] && above[j] <= row[j + 1]) {
                    return Err(invalid(format!(
                        "triangle interlacing fails between rows {} and {} at position {}",
                        i,
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(MonotoneTriangle { rows })
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn to_asm(&self) -> Asm {
        let n = self.n();
        let mut entries = vec![vec![0i8; n]; n];
        let mut prev = vec![false; n + 1];
        for (r, row) in self.rows.iter().enumerate() {
            let mut cur = vec![false; n + 1];
            for &c in row {
                cur[c as usize] = true;
            }
            for c in 1..=n {
                entries[r][c - 1] = i8::from(cur[c]) - i8::from(prev[c]);
            }
            prev = cur;
        }
        Asm { entries }
    }

    /// Rotates into a staircase array: `x[i][j]` is entry `i` of triangle row `n - j`.
    pub fn to_array(&self) -> StaircaseArray {
        let n = self.n();
        let rows = (1..=n)
            .map(|i| (0..=n - i).map(|j| self.rows[n - j - 1][i - 1]).collect())
            .collect();
        StaircaseArray::from_rows(rows).expect("rotated monotone triangle stays in bounds")
    }

    pub fn from_array(array: &StaircaseArray) -> Result<Self> {
        array.check_family(ASM_COLORS, "ASM")?;
        Ok(Self::from_array_unchecked(array))
    }

    fn from_array_unchecked(array: &StaircaseArray) -> Self {
        let n = array.n();
        MonotoneTriangle {
            rows: (1..=n)
                .map(|k| (1..=k).map(|i| array.get(i, n - k)).collect())
                .collect(),
        }
    }
}

impl TryFrom<Vec<Vec<u32>>> for MonotoneTriangle {
    type Error = Error;
    fn try_from(rows: Vec<Vec<u32>>) -> Result<Self> {
        MonotoneTriangle::new(rows)
    }
}

impl From<MonotoneTriangle> for Vec<Vec<u32>> {
    fn from(t: MonotoneTriangle) -> Self {
        t.rows
    }
}
