//! Counting order ideals and their rank generating functions.
//!
//! Two dynamic programs:
//! - column transfer over staircase arrays, valid for `T_n(S)` with green in `S`;
//! - a frontier program over a linear extension for everything else
//!   (green-free sets and duals).

use std::collections::HashMap;
use std::hash::Hash;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::Subposet;
use crate::arrays::cell_range;
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::poly::QPoly;
use crate::poset::{Color, ColorSet};

/// How to count order ideals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    /// Column transfer when applicable, otherwise the frontier program.
    Dp,
    /// Frontier program over a linear extension.
    Frontier,
    /// Column transfer over staircase arrays; needs green and a non-dual poset.
    ArrayTransfer,
    /// Exhaustive enumeration (subject to the item budget).
    Enumerate,
}

/// A weight accumulated by the counting programs: a plain count, or a
/// polynomial recording ideal sizes.
pub(crate) trait Tally: Clone {
    fn zero() -> Self;
    fn one() -> Self;
    fn accumulate(&mut self, other: &Self);
    /// Multiply by `q^k`.
    fn shifted(&self, k: u32) -> Self;
}

impl Tally for BigUint {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn accumulate(&mut self, other: &Self) {
        *self += other;
    }
    fn shifted(&self, _: u32) -> Self {
        self.clone()
    }
}

impl Tally for QPoly {
    fn zero() -> Self {
        QPoly::zero()
    }
    fn one() -> Self {
        QPoly::one()
    }
    fn accumulate(&mut self, other: &Self) {
        *self += other;
    }
    fn shifted(&self, k: u32) -> Self {
        self.shift(k)
    }
}

fn merge<K: Eq + Hash, T: Tally>(map: &mut HashMap<K, T>, key: K, value: T) {
    map.entry(key).and_modify(|t| t.accumulate(&value)).or_insert(value);
}

/// Sum over `Y_n(S)` of `q^weight`, one column at a time. The state after
/// column `j` is the column itself; every inequality couples a column only
/// to itself and its left neighbor.
pub(crate) fn column_transfer<T: Tally>(n: usize, colors: ColorSet) -> T {
    debug_assert!(colors.contains(Color::Green));
    let mut states: HashMap<Vec<u32>, T> = HashMap::new();
    states.insert((1..=n as u32).collect(), T::one());
    for j in 1..n {
        let height = n - j;
        let mut next: HashMap<Vec<u32>, T> = HashMap::new();
        for (prev, tally) in &states {
            let mut column = Vec::with_capacity(height);
            extend_column(colors, j, prev, &mut column, 0, &mut |col, weight| {
                merge(&mut next, col.to_vec(), tally.shifted(weight));
            });
        }
        states = next;
    }
    let mut total = T::zero();
    for t in states.values() {
        total.accumulate(t);
    }
    total
}

fn extend_column(
    colors: ColorSet,
    j: usize,
    prev: &[u32],
    column: &mut Vec<u32>,
    weight: u32,
    emit: &mut dyn FnMut(&[u32], u32),
) {
    let i = column.len() + 1;
    if i == prev.len() {
        emit(column, weight);
        return;
    }
    let north = column.last().copied();
    if let Some((lo, hi)) = cell_range(colors, i, j, prev[i - 1], prev[i], north) {
        for x in lo..=hi {
            column.push(x);
            extend_column(colors, j, prev, column, weight + x - i as u32, emit);
            column.pop();
        }
    }
}

/// Sum over order ideals of `q^|I|` by sweeping a linear extension. The
/// state is the membership of processed vertices that still have an
/// unprocessed upper cover.
pub(crate) fn frontier<T: Tally>(poset: &Subposet) -> T {
    let order = poset.linear_extension();
    let size = order.len();
    let mut pos = vec![0usize; size];
    for (t, &v) in order.iter().enumerate() {
        pos[v] = t;
    }
    // Step after which a vertex is no longer needed.
    let retire: Vec<usize> = (0..size)
        .map(|v| poset.upper_covers(v).iter().map(|&w| pos[w]).max().unwrap_or(pos[v]))
        .collect();
    let mut retiring: Vec<Vec<usize>> = vec![Vec::new(); size];
    for v in 0..size {
        retiring[retire[v]].push(v);
    }
    let words = size.div_ceil(64).max(1);
    let mut states: HashMap<Vec<u64>, T> = HashMap::new();
    states.insert(vec![0; words], T::one());
    for (t, &v) in order.iter().enumerate() {
        let lower = poset.lower_covers(v);
        let mut next: HashMap<Vec<u64>, T> = HashMap::with_capacity(states.len() * 2);
        for (key, tally) in states {
            let can_add = lower.iter().all(|&w| key[w / 64] >> (w % 64) & 1 == 1);
            if can_add {
                let mut with = key.clone();
                with[v / 64] |= 1 << (v % 64);
                clear(&mut with, &retiring[t]);
                merge(&mut next, with, tally.shifted(1));
            }
            let mut without = key;
            clear(&mut without, &retiring[t]);
            merge(&mut next, without, tally);
        }
        states = next;
    }
    let mut total = T::zero();
    for t in states.values() {
        total.accumulate(t);
    }
    total
}

fn clear(key: &mut [u64], vertices: &[usize]) {
    for &w in vertices {
        key[w / 64] &= !(1 << (w % 64));
    }
}

impl Subposet {
    fn array_transfer_applies(&self) -> bool {
        self.colors().contains(Color::Green) && !self.is_dual()
    }

    fn tally_by<T: Tally>(&self, method: Method, budget: &Budget, weigh: impl Fn(usize) -> T) -> Result<T> {
        budget.check_vertices(self.len())?;
        match method {
            Method::Dp if self.array_transfer_applies() => Ok(column_transfer(self.n(), self.colors())),
            Method::Dp | Method::Frontier => Ok(frontier(self)),
            Method::ArrayTransfer => {
                if !self.colors().contains(Color::Green) {
                    return Err(Error::MissingGreen(self.colors()));
                }
                if self.is_dual() {
                    return Err(Error::InvalidObject(
                        "array transfer does not apply to a dual poset".into(),
                    ));
                }
                Ok(column_transfer(self.n(), self.colors()))
            }
            Method::Enumerate => {
                let mut total = T::zero();
                for ideal in self.enumerate_ideals(budget)? {
                    total.accumulate(&weigh(ideal.len()));
                }
                Ok(total)
            }
        }
    }

    /// Number of order ideals, by dynamic programming.
    pub fn count_ideals(&self) -> Result<BigUint> {
        self.count_ideals_by(Method::Dp, &Budget::default())
    }

    pub fn count_ideals_by(&self, method: Method, budget: &Budget) -> Result<BigUint> {
        self.tally_by(method, budget, |_| <BigUint as One>::one())
    }

    /// Rank generating function `sum over ideals I of q^|I|`.
    pub fn rank_gf(&self) -> Result<QPoly> {
        self.rank_gf_by(Method::Dp, &Budget::default())
    }

    pub fn rank_gf_by(&self, method: Method, budget: &Budget) -> Result<QPoly> {
        self.tally_by(method, budget, |k| QPoly::monomial(k as u32, 1))
    }
}
