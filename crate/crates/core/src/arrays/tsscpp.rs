//! Totally symmetric self-complementary plane partitions in a `2n` box.
//!
//! The fundamental domain is the wedge `n+1 <= a <= b <= 2n` of the height
//! matrix. Free array entries are read off it by
//! `x[i][j] - i = t[2n-j-i+1][2n-j]`.

use serde::{Deserialize, Serialize};

use super::{StaircaseArray, TSSCPP_COLORS};
use crate::budget::Budget;
use crate::error::{invalid, Error, Result};

/// Full `2n x 2n` height matrix `t[a][b]`, 1-based in the accessors.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<u32>>", into = "Vec<Vec<u32>>")]
pub struct Tsscpp {
    heights: Vec<Vec<u32>>,
}

impl Tsscpp {
    /// Validates the plane-partition, self-complement and total-symmetry
    /// conditions on a `2n x 2n` height matrix.
    pub fn new(heights: Vec<Vec<u32>>) -> Result<Self> {
        let side = heights.len();
        if side == 0 || !side.is_multiple_of(2) {
            return Err(invalid(format!("TSSCPP matrix side {side} must be even and positive")));
        }
        if heights.iter().any(|row| row.len() != side) {
            return Err(invalid("TSSCPP matrix must be square"));
        }
        let top = side as u32;
        let t = |a: usize, b: usize| heights[a - 1][b - 1];
        for a in 1..=side {
            for b in 1..=side {
                if t(a, b) > top {
                    return Err(invalid(format!("height ({a},{b}) = {} exceeds {top}", t(a, b))));
                }
                if a < side && t(a, b) < t(a + 1, b) {
                    return Err(invalid(format!("heights increase down column {b} at row {a}")));
                }
                if b < side && t(a, b) < t(a, b + 1) {
                    return Err(invalid(format!("heights increase along row {a} at column {b}")));
                }
                if t(a, b) + t(side + 1 - a, side + 1 - b) != top {
                    return Err(invalid(format!("not self-complementary at ({a},{b})")));
                }
            }
        }
        let member = |a: usize, b: usize, k: usize| k as u32 <= t(a, b);
        for a in 1..=side {
            for b in 1..=side {
                for k in 1..=side {
                    let m = member(a, b, k);
                    if m != member(b, a, k) || m != member(a, k, b) {
                        return Err(invalid(format!("not totally symmetric at cell ({a},{b},{k})")));
                    }
                }
            }
        }
        Ok(Tsscpp { heights })
    }

    /// Order `n` (half the side length).
    pub fn n(&self) -> usize {
        self.heights.len() / 2
    }

    pub fn heights(&self) -> &[Vec<u32>] {
        &self.heights
    }

    pub fn get(&self, a: usize, b: usize) -> u32 {
        self.heights[a - 1][b - 1]
    }

    pub fn to_array(&self) -> StaircaseArray {
        let n = self.n();
        let rows = (1..=n)
            .map(|i| {
                (0..=n - i)
                    .map(|j| i as u32 + self.get(2 * n - j - i + 1, 2 * n - j))
                    .collect()
            })
            .collect();
        StaircaseArray::from_rows(rows).expect("fundamental domain of a TSSCPP fits the staircase bounds")
    }

    /// Rebuilds the full plane partition from an array in `Y_n({g,y,o,r})`.
    ///
    /// Cells with at least two coordinates above `n` come from the wedge via
    /// total symmetry; every other cell is decided by self-complementarity.
    pub fn from_array(array: &StaircaseArray) -> Result<Self> {
        array.check_family(TSSCPP_COLORS, "TSSCPP")?;
        let n = array.n();
        let side = 2 * n;
        let wedge = |p: usize, q: usize| array.get(q - p + 1, side - q) as usize - (q - p + 1);
        let high = |sorted: [usize; 3]| sorted[0] <= wedge(sorted[1], sorted[2]);
        let member = |a: usize, b: usize, k: usize| {
            let coords = [a, b, k];
            let highs = coords.iter().filter(|&&c| c > n).count();
            if highs >= 2 {
                let mut s = coords;
                s.sort_unstable();
                high(s)
            } else {
                let mut s = coords.map(|c| side + 1 - c);
                s.sort_unstable();
                !high(s)
            }
        };
        let heights = (1..=side)
            .map(|a| {
                (1..=side)
                    .map(|b| (1..=side).rev().find(|&k| member(a, b, k)).unwrap_or(0) as u32)
                    .collect()
            })
            .collect();
        Tsscpp::new(heights).map_err(|e| match e {
            Error::InvalidObject(msg) => invalid(format!("reconstruction failed: {msg}")),
            other => other,
        })
    }

    /// All TSSCPPs in a `2n` box, via the arrays `Y_n({g,y,o,r})`.
    pub fn enumerate(n: usize, budget: &Budget) -> Result<impl Iterator<Item = Result<Tsscpp>>> {
        Ok(super::enumerate_arrays(n, TSSCPP_COLORS, budget)?.map(|a| Tsscpp::from_array(&a)))
    }
}

impl TryFrom<Vec<Vec<u32>>> for Tsscpp {
    type Error = Error;
    fn try_from(heights: Vec<Vec<u32>>) -> Result<Self> {
        Tsscpp::new(heights)
    }
}

impl From<Tsscpp> for Vec<Vec<u32>> {
    fn from(t: Tsscpp) -> Self {
        t.heights
    }
}
