//! Staircase arrays `Y_n(S)` and the object-level bijections built on them.
//!
//! An array of order `n` has rows `i = 1..=n` (top to bottom) and columns
//! `j = 0..=n-i`, with `i <= x[i][j] <= i + j`. Column 0 is forced to `i`.
//! Each color in `S` adds one inequality:
//!
//! | color  | inequality                        |
//! |--------|-----------------------------------|
//! | orange | `x[i][j] < x[i+1][j]`             |
//! | red    | `x[i][j] <= x[i-1][j+1] + 1`      |
//! | yellow | `x[i][j] <= x[i][j+1]`            |
//! | blue   | `x[i][j] <= x[i+1][j-1]`          |
//! | silver | `x[i][j] <= x[i][j-1] + 1`        |
//!
//! Green contributes no inequality; it is what makes the array model valid.

pub mod asm;
pub mod shuffle;
pub mod tournament;
pub mod tsscpp;

use std::fmt;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::error::{invalid, Error, Result};
use crate::poset::{Color, ColorSet};
use crate::search::{Odometer, RangeFn};

pub use asm::{Asm, MonotoneTriangle};
pub use shuffle::{enumerate_row_shuffles, fiber_size, sort_to_tsscpp, RowShuffles};
pub use tournament::{tsscpp_tournament_check, Tournament};
pub use tsscpp::Tsscpp;

/// Colors of the ASM arrays.
pub const ASM_COLORS: ColorSet = ColorSet::from_bits(0b01_1110);
/// Colors of the TSSCPP arrays as built from the fundamental domain.
pub const TSSCPP_COLORS: ColorSet = ColorSet::from_bits(0b01_1101);
/// Colors of the tournament arrays.
pub const TOURNAMENT_COLORS: ColorSet = ColorSet::from_bits(0b00_0111);
/// Tournament arrays with weakly increasing rows (the TSSCPP family reached by sorting).
pub const SORTED_TOURNAMENT_COLORS: ColorSet = ColorSet::from_bits(0b01_0111);
/// Semistandard staircase tableaux.
pub const SSYT_COLORS: ColorSet = ColorSet::from_bits(0b01_1100);

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<u32>>", into = "Vec<Vec<u32>>")]
pub struct StaircaseArray {
    rows: Vec<Vec<u32>>,
}

impl StaircaseArray {
    /// Builds from ragged rows including the forced column 0. Checks shape
    /// and the bounds `i <= x[i][j] <= i + j`.
    pub fn from_rows(rows: Vec<Vec<u32>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(invalid("staircase array needs at least one row"));
        }
        for (r, row) in rows.iter().enumerate() {
            let i = r + 1;
            if row.len() != n - i + 1 {
                return Err(invalid(format!(
                    "row {i} has {} entries, expected {}",
                    row.len(),
                    n - i + 1
                )));
            }
            for (j, &x) in row.iter().enumerate() {
                if x < i as u32 || x > (i + j) as u32 {
                    return Err(invalid(format!("entry ({i},{j}) = {x} outside [{i}, {}]", i + j)));
                }
            }
        }
        Ok(StaircaseArray { rows })
    }

    /// The array with `x[i][j] = i` everywhere.
    pub fn minimal(n: usize) -> Self {
        StaircaseArray {
            rows: (1..=n).map(|i| vec![i as u32; n - i + 1]).collect(),
        }
    }

    /// The array with `x[i][j] = i + j` everywhere.
    pub fn maximal(n: usize) -> Self {
        StaircaseArray {
            rows: (1..=n).map(|i| (0..=n - i).map(|j| (i + j) as u32).collect()).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Entry `x[i][j]`, with `i` 1-based and `j` 0-based.
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.rows[i - 1][j]
    }

    pub(crate) fn set(&mut self, i: usize, j: usize, value: u32) {
        self.rows[i - 1][j] = value;
    }

    fn entry(&self, i: usize, j: isize) -> Option<u32> {
        if i == 0 || i > self.n() || j < 0 {
            return None;
        }
        self.rows[i - 1].get(j as usize).copied()
    }

    /// Sum of `x[i][j] - i` over all cells; equals the size of the matching order ideal.
    pub fn weight(&self) -> u64 {
        self.cells().map(|(i, j)| (self.get(i, j) - i as u32) as u64).sum()
    }

    /// All cells `(i, j)`, row by row.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.n();
        (1..=n).flat_map(move |i| (0..=n - i).map(move |j| (i, j)))
    }

    /// First violated inequality for the colors in `colors`, if any.
    pub fn violation(&self, colors: ColorSet) -> Option<String> {
        for (i, j) in self.cells() {
            let x = self.get(i, j);
            let ji = j as isize;
            for color in colors.iter() {
                let ok = match color {
                    Color::Green => true,
                    Color::Orange => self.entry(i + 1, ji).is_none_or(|y| x < y),
                    Color::Red => self.entry(i.wrapping_sub(1), ji + 1).is_none_or(|y| x <= y + 1),
                    Color::Yellow => self.entry(i, ji + 1).is_none_or(|y| x <= y),
                    Color::Blue => self.entry(i + 1, ji - 1).is_none_or(|y| x <= y),
                    Color::Silver => self.entry(i, ji - 1).is_none_or(|y| x <= y + 1),
                };
                if !ok {
                    return Some(format!("{} inequality fails at ({i},{j})", color.name()));
                }
            }
        }
        None
    }

    /// Is this array in `Y_n(S)`? Requires green in `S`.
    pub fn validate(&self, colors: ColorSet) -> Result<bool> {
        if !colors.contains(Color::Green) {
            return Err(Error::MissingGreen(colors));
        }
        Ok(self.violation(colors).is_none())
    }

    pub(crate) fn check(&self, colors: ColorSet) -> Result<()> {
        if !colors.contains(Color::Green) {
            return Err(Error::MissingGreen(colors));
        }
        match self.violation(colors) {
            None => Ok(()),
            Some(detail) => Err(Error::ConstraintMismatch {
                family: family_name(colors),
                detail,
            }),
        }
    }

    pub(crate) fn check_family(&self, colors: ColorSet, family: &'static str) -> Result<()> {
        match self.violation(colors) {
            None => Ok(()),
            Some(detail) => Err(Error::ConstraintMismatch { family, detail }),
        }
    }
}

fn family_name(colors: ColorSet) -> &'static str {
    match colors {
        ASM_COLORS => "ASM",
        TSSCPP_COLORS | SORTED_TOURNAMENT_COLORS => "TSSCPP",
        TOURNAMENT_COLORS => "tournament",
        _ => "Y_n(S)",
    }
}

impl TryFrom<Vec<Vec<u32>>> for StaircaseArray {
    type Error = Error;
    fn try_from(rows: Vec<Vec<u32>>) -> Result<Self> {
        StaircaseArray::from_rows(rows)
    }
}

impl From<StaircaseArray> for Vec<Vec<u32>> {
    fn from(a: StaircaseArray) -> Self {
        a.rows
    }
}

impl fmt::Display for StaircaseArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, row) in self.rows.iter().enumerate() {
            if k > 0 {
                f.write_str("/")?;
            }
            let parts: Vec<String> = row.iter().map(u32::to_string).collect();
            write!(f, "({})", parts.join(","))?;
        }
        Ok(())
    }
}

/// Admissible interval for cell `(i, j)`, `j >= 1`, given its west neighbor
/// `x[i][j-1]`, its southwest neighbor `x[i+1][j-1]` and, for `i >= 2`, its
/// north neighbor `x[i-1][j]`. Every inequality of every color relates a
/// cell to one of these three, so filling column by column, top to bottom,
/// checks each constraint exactly once.
pub(crate) fn cell_range(
    colors: ColorSet,
    i: usize,
    j: usize,
    west: u32,
    southwest: u32,
    north: Option<u32>,
) -> Option<(u32, u32)> {
    let mut lo = i as u32;
    let mut hi = (i + j) as u32;
    if colors.contains(Color::Yellow) {
        lo = lo.max(west);
    }
    if colors.contains(Color::Silver) {
        hi = hi.min(west + 1);
    }
    if colors.contains(Color::Blue) {
        hi = hi.min(southwest);
    }
    if colors.contains(Color::Red) {
        lo = lo.max(southwest.saturating_sub(1));
    }
    if let (true, Some(up)) = (colors.contains(Color::Orange), north) {
        lo = lo.max(up + 1);
    }
    (lo <= hi).then_some((lo, hi))
}

/// Cells with `j >= 1` in column-major order.
fn free_cells(n: usize) -> Vec<(usize, usize)> {
    (1..n).flat_map(|j| (1..=n - j).map(move |i| (i, j))).collect()
}

/// Lazily enumerates `Y_n(S)`.
pub struct ArrayIter {
    inner: Odometer<RangeFn>,
    n: usize,
    cells: Vec<(usize, usize)>,
}

impl Iterator for ArrayIter {
    type Item = StaircaseArray;

    fn next(&mut self) -> Option<StaircaseArray> {
        let values = self.inner.next_assignment()?;
        let mut a = StaircaseArray::minimal(self.n);
        for (&(i, j), &v) in self.cells.iter().zip(values) {
            a.set(i, j, v);
        }
        Some(a)
    }
}

/// Iterator over `Y_n(S)` without any budget check.
pub(crate) fn array_iter(n: usize, colors: ColorSet) -> ArrayIter {
    let cells = free_cells(n);
    let mut pos = vec![vec![usize::MAX; n + 1]; n + 2];
    for (k, &(i, j)) in cells.iter().enumerate() {
        pos[i][j] = k;
    }
    let cells_for_range = cells.clone();
    let range = move |k: usize, prefix: &[u32]| {
        let (i, j) = cells_for_range[k];
        let value = |i: usize, j: usize| -> u32 {
            if j == 0 {
                i as u32
            } else {
                prefix[pos[i][j]]
            }
        };
        let north = (i >= 2).then(|| value(i - 1, j));
        cell_range(colors, i, j, value(i, j - 1), value(i + 1, j - 1), north)
    };
    ArrayIter {
        inner: Odometer::new(cells.len(), Box::new(range)),
        n,
        cells,
    }
}

/// Number of arrays in `Y_n(S)`, by column transfer.
pub fn count_arrays(n: usize, colors: ColorSet) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::OrderTooSmall(0, 1));
    }
    if !colors.contains(Color::Green) {
        return Err(Error::MissingGreen(colors));
    }
    Ok(crate::poset::column_transfer::<BigUint>(n, colors))
}

/// Lazily enumerates `Y_n(S)` in lexicographic order of the column-major
/// free cells. Requires green in `S`; refuses if `|Y_n(S)|` exceeds the budget.
pub fn enumerate_arrays(n: usize, colors: ColorSet, budget: &Budget) -> Result<ArrayIter> {
    let total = count_arrays(n, colors)?;
    budget.check_items("staircase arrays", &total)?;
    Ok(array_iter(n, colors))
}
