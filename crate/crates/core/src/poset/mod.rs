//! The tetrahedral poset `T_n`, its colored subposets and their order ideals.
//!
//! Vertices are integer triples `(c1, c2, c3)` of coefficients over the red,
//! green and yellow generators with `c1 + c2 + c3 <= n - 2`. The three induced
//! colors are the differences `b = g - r`, `o = y - r` and `s = g - y`, so the
//! whole structure lives on the integer lattice.

pub mod color;
mod count;
mod enumerate;

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt::Write as _;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

pub use color::{is_admissible, Color, ColorSet};
pub(crate) use count::column_transfer;
pub use count::Method;
pub use enumerate::IdealIter;

use crate::arrays::StaircaseArray;
use crate::error::{invalid, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "[u32; 3]", into = "[u32; 3]")]
pub struct Vertex {
    pub c1: u32,
    pub c2: u32,
    pub c3: u32,
}

impl Vertex {
    pub const fn new(c1: u32, c2: u32, c3: u32) -> Self {
        Vertex { c1, c2, c3 }
    }

    pub fn coords(self) -> [u32; 3] {
        [self.c1, self.c2, self.c3]
    }

    fn offset(self, step: [i64; 3]) -> Option<Vertex> {
        let c = self.coords();
        let mut out = [0u32; 3];
        for k in 0..3 {
            out[k] = u32::try_from(c[k] as i64 + step[k]).ok()?;
        }
        Some(Vertex::new(out[0], out[1], out[2]))
    }

    pub fn label(self) -> String {
        format!("{},{},{}", self.c1, self.c2, self.c3)
    }
}

impl From<[u32; 3]> for Vertex {
    fn from(c: [u32; 3]) -> Self {
        Vertex::new(c[0], c[1], c[2])
    }
}

impl From<Vertex> for [u32; 3] {
    fn from(v: Vertex) -> Self {
        v.coords()
    }
}

/// The full tetrahedral poset with all six edge families.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TetraPoset {
    n: usize,
    vertices: Vec<Vertex>,
    index: HashMap<Vertex, usize>,
    edges: BTreeMap<Color, Vec<(usize, usize)>>,
}

impl TetraPoset {
    pub fn build(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::OrderTooSmall(n, 2));
        }
        let m = (n - 2) as u32;
        let mut vertices = Vec::new();
        for c1 in 0..=m {
            for c2 in 0..=m - c1 {
                for c3 in 0..=m - c1 - c2 {
                    vertices.push(Vertex::new(c1, c2, c3));
                }
            }
        }
        let index: HashMap<Vertex, usize> = vertices.iter().enumerate().map(|(k, v)| (*v, k)).collect();
        let mut edges = BTreeMap::new();
        for color in Color::ALL {
            let list: Vec<(usize, usize)> = vertices
                .iter()
                .enumerate()
                .filter_map(|(k, v)| {
                    let w = v.offset(color.step())?;
                    index.get(&w).map(|&l| (k, l))
                })
                .collect();
            edges.insert(color, list);
        }
        Ok(TetraPoset {
            n,
            vertices,
            index,
            edges,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Vertices in lexicographic order of `(c1, c2, c3)`.
    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn index_of(&self, v: Vertex) -> Option<usize> {
        self.index.get(&v).copied()
    }

    /// Directed `(low, high)` edges of one color, as vertex pairs.
    pub fn edges(&self, color: Color) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.edges[&color]
            .iter()
            .map(|&(a, b)| (self.vertices[a], self.vertices[b]))
    }

    pub fn edge_count(&self) -> usize {
        self.edges.values().map(Vec::len).sum()
    }

    pub fn subposet(self: &Arc<Self>, colors: ColorSet) -> Result<Subposet> {
        colors.check_admissible()?;
        Ok(Subposet::new(Arc::clone(self), colors, false))
    }
}

/// `T_n` restricted to the edges whose colors lie in an admissible set, with
/// the order taken as the transitive closure of those edges.
#[derive(Debug, Clone)]
pub struct Subposet {
    parent: Arc<TetraPoset>,
    colors: ColorSet,
    reversed: bool,
    lower: Vec<Vec<usize>>,
    upper: Vec<Vec<usize>>,
    /// Strict order as bit rows: bit `b` of `below[a]` set iff `b < a`.
    below: Vec<Vec<u64>>,
}

impl PartialEq for Subposet {
    fn eq(&self, other: &Self) -> bool {
        self.parent.n == other.parent.n && self.colors == other.colors && self.reversed == other.reversed
    }
}

impl Eq for Subposet {}

impl Subposet {
    /// Builds `T_n(S)`; the color set must be admissible.
    pub fn build(n: usize, colors: ColorSet) -> Result<Self> {
        colors.check_admissible()?;
        let parent = Arc::new(TetraPoset::build(n)?);
        Ok(Subposet::new(parent, colors, false))
    }

    fn new(parent: Arc<TetraPoset>, colors: ColorSet, reversed: bool) -> Self {
        let size = parent.vertices.len();
        let mut lower = vec![Vec::new(); size];
        let mut upper = vec![Vec::new(); size];
        for color in colors.iter() {
            for &(a, b) in &parent.edges[&color] {
                let (lo, hi) = if reversed { (b, a) } else { (a, b) };
                lower[hi].push(lo);
                upper[lo].push(hi);
            }
        }
        for list in lower.iter_mut().chain(upper.iter_mut()) {
            list.sort_unstable();
            list.dedup();
        }
        let below = closure(&lower);
        Subposet {
            parent,
            colors,
            reversed,
            lower,
            upper,
            below,
        }
    }

    pub fn parent(&self) -> &TetraPoset {
        &self.parent
    }

    pub fn n(&self) -> usize {
        self.parent.n
    }

    pub fn colors(&self) -> ColorSet {
        self.colors
    }

    pub fn is_dual(&self) -> bool {
        self.reversed
    }

    pub fn len(&self) -> usize {
        self.parent.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.parent.vertices
    }

    /// The order dual: same vertices, every relation reversed.
    pub fn dual(&self) -> Subposet {
        Subposet::new(Arc::clone(&self.parent), self.colors, !self.reversed)
    }

    /// Indices of the vertices directly below `v` (via one colored edge).
    pub fn lower_covers(&self, v: usize) -> &[usize] {
        &self.lower[v]
    }

    pub fn upper_covers(&self, v: usize) -> &[usize] {
        &self.upper[v]
    }

    /// Strict order on vertex indices.
    pub fn lt_index(&self, a: usize, b: usize) -> bool {
        self.below[b][a / 64] >> (a % 64) & 1 == 1
    }

    /// Strict order `a < b` in the transitive closure.
    pub fn lt(&self, a: Vertex, b: Vertex) -> bool {
        match (self.parent.index_of(a), self.parent.index_of(b)) {
            (Some(a), Some(b)) => self.lt_index(a, b),
            _ => false,
        }
    }

    /// Minimal and maximal elements.
    pub fn minimal(&self) -> Vec<Vertex> {
        (0..self.len())
            .filter(|&v| self.lower[v].is_empty())
            .map(|v| self.parent.vertices[v])
            .collect()
    }

    pub fn maximal(&self) -> Vec<Vertex> {
        (0..self.len())
            .filter(|&v| self.upper[v].is_empty())
            .map(|v| self.parent.vertices[v])
            .collect()
    }

    /// Connected components of the underlying undirected graph, each sorted,
    /// listed by their smallest vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let size = self.len();
        let mut comp = vec![usize::MAX; size];
        let mut out = Vec::new();
        for start in 0..size {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![start];
            comp[start] = id;
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for &w in self.lower[v].iter().chain(&self.upper[v]) {
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        members.push(w);
                        stack.push(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members.into_iter().map(|v| self.parent.vertices[v]).collect());
        }
        out
    }

    /// A linear extension: indices sorted so that every vertex follows all
    /// of its lower covers.
    pub(crate) fn linear_extension(&self) -> Vec<usize> {
        let size = self.len();
        let mut indeg: Vec<usize> = self.lower.iter().map(Vec::len).collect();
        let mut ready: BTreeSet<usize> = (0..size).filter(|&v| indeg[v] == 0).collect();
        let mut order = Vec::with_capacity(size);
        while let Some(v) = ready.pop_first() {
            order.push(v);
            for &w in &self.upper[v] {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    ready.insert(w);
                }
            }
        }
        debug_assert_eq!(order.len(), size, "colored edges must be acyclic");
        order
    }

    /// Checks that a vertex set is down-closed in this order.
    pub fn is_ideal(&self, members: &BTreeSet<Vertex>) -> bool {
        self.ideal_indices(members).is_ok()
    }

    fn ideal_indices(&self, members: &BTreeSet<Vertex>) -> Result<Vec<bool>> {
        let mut inside = vec![false; self.len()];
        for v in members {
            let k = self
                .parent
                .index_of(*v)
                .ok_or_else(|| invalid(format!("vertex ({}) is not in T_{}", v.label(), self.n())))?;
            inside[k] = true;
        }
        for v in 0..self.len() {
            if inside[v] {
                if let Some(&w) = self.lower[v].iter().find(|&&w| !inside[w]) {
                    return Err(invalid(format!(
                        "not an order ideal: ({}) is present but ({}) below it is not",
                        self.parent.vertices[v].label(),
                        self.parent.vertices[w].label()
                    )));
                }
            }
        }
        Ok(inside)
    }

    fn require_green_primal(&self) -> Result<()> {
        if !self.colors.contains(Color::Green) {
            return Err(Error::MissingGreen(self.colors));
        }
        if self.reversed {
            return Err(invalid("array correspondence is defined for T_n(S), not its dual"));
        }
        Ok(())
    }

    /// Maps an order ideal to its staircase array: `x[i][j]` is `i` plus the
    /// size of the ideal's intersection with the green chain of length `j`
    /// in layer `c3 = n - i - j` at `c1 = i - 1`.
    pub fn ideal_to_array(&self, ideal: &OrderIdeal) -> Result<StaircaseArray> {
        self.require_green_primal()?;
        self.ideal_indices(&ideal.members)?;
        let n = self.n();
        let mut rows: Vec<Vec<u32>> = (1..=n).map(|i| vec![i as u32; n - i + 1]).collect();
        for v in &ideal.members {
            let (i, j) = chain_cell(n, *v);
            rows[i - 1][j] += 1;
        }
        StaircaseArray::from_rows(rows)
    }

    /// Inverse of [`Subposet::ideal_to_array`]; the array must lie in `Y_n(S)`.
    pub fn array_to_ideal(&self, array: &StaircaseArray) -> Result<OrderIdeal> {
        self.require_green_primal()?;
        let n = self.n();
        if array.n() != n {
            return Err(invalid(format!("array has order {}, poset has {}", array.n(), n)));
        }
        array.check(self.colors)?;
        let mut members = BTreeSet::new();
        for i in 1..=n {
            for j in 1..=n - i {
                let filled = array.get(i, j) - i as u32;
                for c2 in 0..filled {
                    members.insert(Vertex::new(i as u32 - 1, c2, (n - i - j) as u32));
                }
            }
        }
        let ideal = OrderIdeal { members };
        self.ideal_indices(&ideal.members)?;
        Ok(ideal)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "n": self.n(),
            "colors": self.colors,
            "vertices": self.vertices(),
        })
    }

    /// Graphviz rendering of the colored Hasse diagram.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        let dual = if self.reversed { "_dual" } else { "" };
        let _ = writeln!(out, "digraph T{}_{}{} {{", self.n(), self.colors.compact(), dual);
        for v in self.vertices() {
            let _ = writeln!(out, "  \"{0}\" [label=\"{0}\"];", v.label());
        }
        for color in self.colors.iter() {
            for &(a, b) in &self.parent.edges[&color] {
                let (lo, hi) = if self.reversed { (b, a) } else { (a, b) };
                let _ = writeln!(
                    out,
                    "  \"{}\" -> \"{}\" [color={}];",
                    self.parent.vertices[lo].label(),
                    self.parent.vertices[hi].label(),
                    color.name()
                );
            }
        }
        out.push_str("}\n");
        out
    }
}

/// Array cell `(i, j)` whose green chain contains `v`.
fn chain_cell(n: usize, v: Vertex) -> (usize, usize) {
    let i = v.c1 as usize + 1;
    (i, n - i - v.c3 as usize)
}

fn closure(lower: &[Vec<usize>]) -> Vec<Vec<u64>> {
    let size = lower.len();
    let words = size.div_ceil(64).max(1);
    let mut below = vec![vec![0u64; words]; size];
    let mut done = vec![false; size];
    fn visit(v: usize, lower: &[Vec<usize>], below: &mut [Vec<u64>], done: &mut [bool]) {
        if done[v] {
            return;
        }
        done[v] = true;
        for &w in &lower[v] {
            visit(w, lower, below, done);
            let (row_w, mut row_v) = (below[w].clone(), std::mem::take(&mut below[v]));
            for (a, b) in row_v.iter_mut().zip(&row_w) {
                *a |= *b;
            }
            row_v[w / 64] |= 1 << (w % 64);
            below[v] = row_v;
        }
    }
    for v in 0..size {
        visit(v, lower, &mut below, &mut done);
    }
    below
}

/// A down-closed vertex set.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct OrderIdeal {
    members: BTreeSet<Vertex>,
}

impl OrderIdeal {
    /// Wraps a vertex set after checking it is an ideal of `poset`.
    pub fn new(poset: &Subposet, members: impl IntoIterator<Item = Vertex>) -> Result<Self> {
        let members: BTreeSet<Vertex> = members.into_iter().collect();
        poset.ideal_indices(&members)?;
        Ok(OrderIdeal { members })
    }

    /// Wraps a vertex set without checking it.
    pub fn from_members_unchecked(members: BTreeSet<Vertex>) -> Self {
        OrderIdeal { members }
    }

    pub fn members(&self) -> &BTreeSet<Vertex> {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.members.contains(&v)
    }
}
