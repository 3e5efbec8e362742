//! Tournaments on vertices `1..=n` and their staircase encoding.
//!
//! Entry `x[i][j]` (`j >= 1`) records the game between `i` and `i + j`: it
//! equals its southwest neighbor `x[i+1][j-1]` when the game is an upset
//! (the larger label wins) and is one less otherwise.

use serde::{Deserialize, Serialize};

use super::{StaircaseArray, TOURNAMENT_COLORS};
use crate::error::{invalid, Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<[u32; 3]>", into = "Vec<[u32; 3]>")]
pub struct Tournament {
    n: usize,
    /// `upset[pair_index(i, j)]` for `1 <= i < j <= n`.
    upset: Vec<bool>,
}

fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

impl Tournament {
    fn pair_index(&self, i: usize, j: usize) -> usize {
        debug_assert!(1 <= i && i < j && j <= self.n);
        // Pairs ordered (1,2), (1,3), ..., (1,n), (2,3), ...
        (i - 1) * (2 * self.n - i) / 2 + (j - i - 1)
    }

    /// Builds from `(i, j, winner)` triples covering every pair exactly once.
    pub fn new(n: usize, games: &[(u32, u32, u32)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::OrderTooSmall(0, 1));
        }
        let mut t = Tournament {
            n,
            upset: vec![false; pair_count(n)],
        };
        let mut seen = vec![false; pair_count(n)];
        for &(a, b, w) in games {
            let (i, j) = (a.min(b) as usize, a.max(b) as usize);
            if i == 0 || j > n || i == j {
                return Err(invalid(format!(
                    "game ({a},{b}) is not a pair of distinct vertices in 1..={n}"
                )));
            }
            if w != a && w != b {
                return Err(invalid(format!("winner {w} did not play in game ({a},{b})")));
            }
            let k = t.pair_index(i, j);
            if std::mem::replace(&mut seen[k], true) {
                return Err(invalid(format!("game ({i},{j}) listed twice")));
            }
            t.upset[k] = w as usize == j;
        }
        if let Some(k) = seen.iter().position(|s| !s) {
            let (i, j) = t.pairs().nth(k).unwrap();
            return Err(invalid(format!("game ({i},{j}) missing")));
        }
        Ok(t)
    }

    /// Tournament whose upsets are exactly the given pairs.
    pub fn from_upsets(n: usize, upsets: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut t = Tournament::transitive(n);
        for (i, j) in upsets {
            if !(1 <= i && i < j && j <= n) {
                return Err(invalid(format!("({i},{j}) is not a pair i < j in 1..={n}")));
            }
            let k = t.pair_index(i, j);
            t.upset[k] = true;
        }
        Ok(t)
    }

    /// Every game won by the smaller label.
    pub fn transitive(n: usize) -> Self {
        Tournament {
            n,
            upset: vec![false; pair_count(n)],
        }
    }

    pub fn all_upsets(n: usize) -> Self {
        Tournament {
            n,
            upset: vec![true; pair_count(n)],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Pairs `(i, j)` with `i < j`, in lexicographic order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> {
        let n = self.n;
        (1..=n).flat_map(move |i| (i + 1..=n).map(move |j| (i, j)))
    }

    pub fn is_upset(&self, i: usize, j: usize) -> bool {
        self.upset[self.pair_index(i, j)]
    }

    pub fn winner(&self, i: usize, j: usize) -> usize {
        if self.is_upset(i, j) {
            j
        } else {
            i
        }
    }

    pub fn upset_count(&self) -> usize {
        self.upset.iter().filter(|&&u| u).count()
    }

    /// Number of games won by `v`.
    pub fn wins(&self, v: usize) -> usize {
        self.pairs()
            .filter(|&(i, j)| (i == v || j == v) && self.winner(i, j) == v)
            .count()
    }

    pub fn games(&self) -> Vec<(u32, u32, u32)> {
        self.pairs()
            .map(|(i, j)| (i as u32, j as u32, self.winner(i, j) as u32))
            .collect()
    }

    /// All `2^(n choose 2)` tournaments on `n` vertices.
    pub fn enumerate(n: usize) -> impl Iterator<Item = Tournament> {
        let pairs = pair_count(n);
        assert!(pairs < 64, "too many tournaments to enumerate");
        (0u64..1 << pairs).map(move |mask| Tournament {
            n,
            upset: (0..pairs).map(|k| mask >> k & 1 == 1).collect(),
        })
    }

    pub fn to_array(&self) -> StaircaseArray {
        let n = self.n;
        let mut a = StaircaseArray::minimal(n);
        for i in (1..n).rev() {
            for j in 1..=n - i {
                let sw = a.get(i + 1, j - 1);
                let v = if self.is_upset(i, i + j) { sw } else { sw - 1 };
                a.set(i, j, v);
            }
        }
        a
    }

    /// Inverse of [`Tournament::to_array`]; the array must lie in `Y_n({b,r,g})`.
    pub fn from_array(array: &StaircaseArray) -> Result<Self> {
        array.check_family(TOURNAMENT_COLORS, "tournament")?;
        let n = array.n();
        let mut t = Tournament::transitive(n);
        for i in 1..n {
            for j in 1..=n - i {
                let k = t.pair_index(i, i + j);
                t.upset[k] = array.get(i, j) == array.get(i + 1, j - 1);
            }
        }
        Ok(t)
    }

    /// Upsets won by `v` against opponents in `from..v`.
    fn upsets_won_from(&self, v: usize, from: usize) -> usize {
        (from..v).filter(|&u| self.is_upset(u, v)).count()
    }
}

/// The TSSCPP condition on upsets: whenever `v` has `k` upsets against
/// `{u, ..., v-1}`, vertex `v-1` has at most `k` upsets against `{u, ..., v-2}`.
pub fn tsscpp_tournament_check(t: &Tournament) -> bool {
    (2..=t.n()).all(|v| (1..v).all(|u| t.upsets_won_from(v - 1, u) <= t.upsets_won_from(v, u)))
}

impl TryFrom<Vec<[u32; 3]>> for Tournament {
    type Error = Error;
    fn try_from(games: Vec<[u32; 3]>) -> Result<Self> {
        let mut n = 1;
        while pair_count(n) < games.len() {
            n += 1;
        }
        if pair_count(n) != games.len() {
            return Err(invalid(format!("{} games is not (n choose 2) for any n", games.len())));
        }
        let games: Vec<(u32, u32, u32)> = games.iter().map(|g| (g[0], g[1], g[2])).collect();
        Tournament::new(n, &games)
    }
}

impl From<Tournament> for Vec<[u32; 3]> {
    fn from(t: Tournament) -> Self {
        t.games().into_iter().map(|(a, b, w)| [a, b, w]).collect()
    }
}
