//! Sorting tournament arrays into TSSCPP arrays, and the inverse fibers.
//!
//! Within a row of a tournament array, two adjacent entries can be out of
//! order only when their southwest neighbors are equal, and then swapping
//! them along with everything on their northeast diagonals keeps the array
//! a tournament array. Sorting rows bottom-up this way lands in
//! `Y_n({b,r,g,y})`, and the arrays with a given image are exactly the
//! tournament arrays with the same row multisets.

use num_bigint::BigUint;
use num_integer::binomial;

use super::{StaircaseArray, SORTED_TOURNAMENT_COLORS, TOURNAMENT_COLORS};
use crate::error::Result;

/// Sorts every row of a tournament array by diagonal swaps.
pub fn sort_to_tsscpp(beta: &StaircaseArray) -> Result<StaircaseArray> {
    beta.check_family(TOURNAMENT_COLORS, "tournament")?;
    let n = beta.n();
    let mut a = beta.clone();
    for i in (1..n).rev() {
        let len = n - i + 1;
        let mut swapped = true;
        while swapped {
            swapped = false;
            for j in 0..len.saturating_sub(2) {
                if a.get(i, j + 1) > a.get(i, j + 2) {
                    assert_eq!(
                        a.get(i + 1, j),
                        a.get(i + 1, j + 1),
                        "out-of-order pair at row {i}, columns {} and {} over unequal southwest neighbors",
                        j + 1,
                        j + 2
                    );
                    for m in 0..i {
                        let (r, c) = (i - m, j + 1 + m);
                        let (x, y) = (a.get(r, c), a.get(r, c + 1));
                        a.set(r, c, y);
                        a.set(r, c + 1, x);
                    }
                    swapped = true;
                }
            }
        }
    }
    debug_assert!(a.violation(SORTED_TOURNAMENT_COLORS).is_none());
    Ok(a)
}

/// `E[i][k]`: entries of value `k` in row `i` equal to their southwest neighbor,
/// keyed by `(i, k)` and listed with the count `C[i+1][k]` of value `k` in row `i+1`.
fn equality_profile(alpha: &StaircaseArray) -> Vec<(usize, u32, usize, usize)> {
    let n = alpha.n();
    let mut out = Vec::new();
    for i in 1..n {
        for k in (i + 1) as u32..=n as u32 {
            let below = alpha.rows()[i].iter().filter(|&&x| x == k).count();
            let equal = (1..=n - i)
                .filter(|&j| alpha.get(i, j) == k && alpha.get(i + 1, j - 1) == k)
                .count();
            if below > 0 {
                out.push((i, k, below, equal));
            }
        }
    }
    out
}

/// Size of the fiber of `sort_to_tsscpp` over `alpha`: the product of
/// `binomial(C[i+1][k], E[i][k])` over rows and values.
pub fn fiber_size(alpha: &StaircaseArray) -> Result<BigUint> {
    alpha.check_family(SORTED_TOURNAMENT_COLORS, "sorted tournament")?;
    Ok(equality_profile(alpha)
        .into_iter()
        .map(|(_, _, c, e)| binomial(BigUint::from(c), BigUint::from(e)))
        .product())
}

/// Lazily enumerates the fiber of `sort_to_tsscpp` over a sorted array.
///
/// Row `i` of a fiber element is determined by row `i+1` and, for each value
/// `k`, the choice of which `E[i][k]` of the `C[i+1][k]` entries equal to `k`
/// in row `i+1` sit under an equal entry. The iterator runs an odometer over
/// these combinations.
pub struct RowShuffles {
    alpha: StaircaseArray,
    /// `(row, value, chosen positions among the entries of that value below)`.
    choices: Vec<(usize, u32, usize, Vec<usize>)>,
    done: bool,
}

/// Advances `combo` to the next `combo.len()`-subset of `0..c`; false on wrap.
fn next_combination(combo: &mut [usize], c: usize) -> bool {
    let e = combo.len();
    for p in (0..e).rev() {
        if combo[p] < c - e + p {
            combo[p] += 1;
            for q in p + 1..e {
                combo[q] = combo[q - 1] + 1;
            }
            return true;
        }
    }
    for (p, slot) in combo.iter_mut().enumerate() {
        *slot = p;
    }
    false
}

impl RowShuffles {
    fn build(&self) -> StaircaseArray {
        let n = self.alpha.n();
        let mut beta = StaircaseArray::minimal(n);
        let mut next = 0;
        for i in (1..n).rev() {
            let mut row = vec![0u32; n - i + 1];
            row[0] = i as u32;
            for j in 0..n - i {
                row[j + 1] = beta.get(i + 1, j) - 1;
            }
            while next < self.choices.len() && self.choices[next].0 == i {
                let (_, k, _, ref chosen) = self.choices[next];
                let positions: Vec<usize> = (0..n - i).filter(|&j| beta.get(i + 1, j) == k).collect();
                for &p in chosen {
                    row[positions[p] + 1] = k;
                }
                next += 1;
            }
            for (j, &x) in row.iter().enumerate() {
                beta.set(i, j, x);
            }
        }
        beta
    }
}

impl Iterator for RowShuffles {
    type Item = StaircaseArray;

    fn next(&mut self) -> Option<StaircaseArray> {
        if self.done {
            return None;
        }
        let out = self.build();
        self.done = !self
            .choices
            .iter_mut()
            .rev()
            .any(|(_, _, c, combo)| next_combination(combo, *c));
        Some(out)
    }
}

/// All tournament arrays that sort to `alpha`, which must lie in `Y_n({b,r,g,y})`.
pub fn enumerate_row_shuffles(alpha: &StaircaseArray) -> Result<RowShuffles> {
    alpha.check_family(SORTED_TOURNAMENT_COLORS, "sorted tournament")?;
    let mut profile = equality_profile(alpha);
    // Rows are rebuilt bottom-up, so order choices by descending row.
    profile.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
    let choices = profile
        .into_iter()
        .map(|(i, k, c, e)| (i, k, c, (0..e).collect()))
        .collect();
    Ok(RowShuffles {
        alpha: alpha.clone(),
        choices,
        done: false,
    })
}
