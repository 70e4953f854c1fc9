//! Finite 3-transposition groups, their Fischer graphs and Matsuo algebras,
//! together with the fusion calculus of the Virasoro unitary series.
//!
//! The crate is organised bottom-up:
//!
//! * [`groups`]: permutations and small matrices over F2/F3, closure by
//!   breadth-first search, conjugacy-class closure and centers.
//! * [`catalog`]: constructors for the standard 3-transposition families.
//! * [`fischer`]: the transposition system of a group, its Fischer graph,
//!   components, valencies and the search for `H`-triples.
//! * [`matsuo`]: the Matsuo algebra `B(alpha, beta)` over exact rationals.
//! * [`virasoro`]: unitary-series weights, fusion rules, Miyamoto sign maps
//!   and the table of dihedral subalgebras generated by two Ising vectors.

pub mod catalog;
mod error;
pub mod fischer;
pub mod groups;
pub mod linalg;
pub mod matsuo;
pub mod rational;
pub mod virasoro;

pub use error::{Error, ErrorKind, Result};
pub use groups::{FpMatrix, GeneratedGroup, GroupElement, Permutation};
pub use rational::Rational;
