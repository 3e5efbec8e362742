//! Order ideals of the tetrahedral poset `T_n` and its colored subposets.
//!
//! Vertices are lattice points `(c1, c2, c3)` with `c1 + c2 + c3 <= n - 2`,
//! joined by six families of colored edges. Choosing a set of colors gives a
//! subposet; its order ideals are counted, q-counted and enumerated here, and
//! for color sets containing green they correspond to staircase integer arrays,
//! which in turn encode alternating sign matrices, totally symmetric
//! self-complementary plane partitions and tournaments.

pub mod arrays;
pub mod budget;
pub mod error;
pub mod identities;
pub mod poly;
pub mod poset;
mod search;

pub use arrays::{Asm, MonotoneTriangle, StaircaseArray, Tournament, Tsscpp};
pub use budget::Budget;
pub use error::{Error, Result};
pub use poly::{QPoly, SparsePoly};
pub use poset::{Color, ColorSet, Method, OrderIdeal, Subposet, TetraPoset, Vertex};
