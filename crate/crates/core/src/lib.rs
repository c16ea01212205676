//! Exact-arithmetic permutation modules of the symmetric group on tabloids.
//!
//! Every vector space in this crate is a space of rational-valued functions on
//! the tabloids of some composition shape. Full rankings of candidates,
//! individual candidates, ordered candidate pairs and coalitions of players are
//! all tabloids of an appropriate shape, so ballot profiles, weighting vectors,
//! tally results and the levels of a cooperative game are all [`ModuleVector`]s.
//!
//! * [`symcore`]: compositions, tabloids, permutations and module vectors.
//! * [`linalg`]: fraction-free elimination over the rationals.
//! * [`specht`]: isotypic projections, effective spaces and dimension counts.
//! * [`voting`]: positional tallies, the pairs map, the Kemeny rule and the
//!   Borda–Kemeny spectral family.
//! * [`coopgame`]: games, the level decomposition and linear symmetric
//!   solution concepts such as the Shapley value.
//! * [`io`] and [`cli`]: file formats and the batch command line.

pub mod cli;
pub mod coopgame;
mod error;
pub mod io;
pub mod linalg;
pub mod rational;
pub mod specht;
pub mod symcore;
pub mod voting;

pub use error::{Error, Result};
pub use rational::Rational;
pub use symcore::{Composition, GroupAlgebraElement, ModuleVector, Permutation, Tabloid};
