//! Tabloids of a composition shape, the action of the symmetric group on them,
//! and exact vectors indexed by tabloids.

mod composition;
mod permutation;
mod tabloid;
mod vector;

pub use composition::Composition;
pub use permutation::Permutation;
pub use tabloid::{
    enumerate_tabloids, enumerate_tabloids_with_limit, Tabloid, DEFAULT_ENUMERATION_LIMIT,
};
pub use vector::{GroupAlgebraElement, ModuleVector};
