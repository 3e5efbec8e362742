//! Edge colors of the tetrahedral poset and the admissibility rules for
//! subsets of them.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One of the six edge colors. Declaration order is the canonical
/// serialization order r < b < g < o < y < s.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Red,
    Blue,
    Green,
    Orange,
    Yellow,
    Silver,
}

impl Color {
    pub const ALL: [Color; 6] = [
        Color::Red,
        Color::Blue,
        Color::Green,
        Color::Orange,
        Color::Yellow,
        Color::Silver,
    ];

    pub fn letter(self) -> char {
        match self {
            Color::Red => 'r',
            Color::Blue => 'b',
            Color::Green => 'g',
            Color::Orange => 'o',
            Color::Yellow => 'y',
            Color::Silver => 's',
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Color::Red => "red",
            Color::Blue => "blue",
            Color::Green => "green",
            Color::Orange => "orange",
            Color::Yellow => "yellow",
            Color::Silver => "silver",
        }
    }

    pub fn from_letter(c: char) -> Result<Color> {
        Ok(match c.to_ascii_lowercase() {
            'r' => Color::Red,
            'b' => Color::Blue,
            'g' => Color::Green,
            'o' => Color::Orange,
            'y' => Color::Yellow,
            's' => Color::Silver,
            _ => return Err(Error::UnknownColor(c)),
        })
    }

    /// Lattice step (dc1, dc2, dc3) from the lower to the upper endpoint of an
    /// edge of this color, in coordinates over the r, g, y generators.
    pub fn step(self) -> [i64; 3] {
        match self {
            Color::Red => [1, 0, 0],
            Color::Green => [0, 1, 0],
            Color::Yellow => [0, 0, 1],
            Color::Blue => [-1, 1, 0],
            Color::Orange => [-1, 0, 1],
            Color::Silver => [0, 1, -1],
        }
    }

    fn bit(self) -> u8 {
        1 << (self as u8)
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The four closure rules: if both colors of `pair` are present, `needed` must be too.
const RULES: [([Color; 2], Color, &str); 4] = [
    ([Color::Red, Color::Blue], Color::Green, "{r,b} in S requires g"),
    ([Color::Orange, Color::Silver], Color::Blue, "{o,s} in S requires b"),
    ([Color::Silver, Color::Yellow], Color::Green, "{s,y} in S requires g"),
    ([Color::Red, Color::Orange], Color::Yellow, "{r,o} in S requires y"),
];

/// A subset of the six colors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ColorSet(u8);

impl ColorSet {
    pub const EMPTY: ColorSet = ColorSet(0);
    pub const FULL: ColorSet = ColorSet(0b11_1111);

    pub fn new(colors: impl IntoIterator<Item = Color>) -> Self {
        colors.into_iter().fold(ColorSet(0), |s, c| s.with(c))
    }

    pub const fn from_bits(bits: u8) -> Self {
        ColorSet(bits & Self::FULL.0)
    }

    pub fn bits(self) -> u8 {
        self.0
    }

    pub fn with(self, c: Color) -> Self {
        ColorSet(self.0 | c.bit())
    }

    pub fn contains(self, c: Color) -> bool {
        self.0 & c.bit() != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: ColorSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = Color> {
        Color::ALL.into_iter().filter(move |c| self.contains(*c))
    }

    /// First violated closure rule, if any.
    pub fn violated_rule(self) -> Option<&'static str> {
        RULES
            .iter()
            .find(|(pair, needed, _)| self.contains(pair[0]) && self.contains(pair[1]) && !self.contains(*needed))
            .map(|(_, _, rule)| *rule)
    }

    pub fn is_admissible(self) -> bool {
        self.violated_rule().is_none()
    }

    pub fn check_admissible(self) -> Result<()> {
        match self.violated_rule() {
            None => Ok(()),
            Some(rule) => Err(Error::NotAdmissible { set: self, rule }),
        }
    }

    /// All 64 subsets, in increasing bit order.
    pub fn all() -> impl Iterator<Item = ColorSet> {
        (0u8..64).map(ColorSet)
    }

    pub fn all_admissible() -> impl Iterator<Item = ColorSet> {
        Self::all().filter(|s| s.is_admissible())
    }
}

/// Is `s` admissible? Convenience free-function form.
pub fn is_admissible(s: ColorSet) -> bool {
    s.is_admissible()
}

impl fmt::Display for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, c) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", c.letter())?;
        }
        f.write_str("}")
    }
}

impl ColorSet {
    /// Compact canonical form, e.g. `"bgoy"`.
    pub fn compact(self) -> String {
        self.iter().map(Color::letter).collect()
    }
}

impl FromStr for ColorSet {
    type Err = Error;

    /// Parses a compact string such as `"gybo"`. Braces, commas and blanks are ignored.
    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .filter(|c| !matches!(c, '{' | '}' | ',' | ' '))
            .try_fold(ColorSet::EMPTY, |set, c| Ok(set.with(Color::from_letter(c)?)))
    }
}

impl FromIterator<Color> for ColorSet {
    fn from_iter<I: IntoIterator<Item = Color>>(iter: I) -> Self {
        ColorSet::new(iter)
    }
}

impl Serialize for ColorSet {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter().map(Color::letter).map(String::from))
    }
}
