//! Finite semigroup structure theory over Cayley tables.
//!
//! Green's relations and egg-box diagrams, idempotent posets, kernels and
//! minimal one-sided ideals, Rees quotients, Rees matrix semigroups and the
//! decomposition of completely simple semigroups, plus a census and a
//! verification harness that replays the structure theorems over every
//! generated instance.

pub mod bitset;
pub mod corpus;
pub mod error;
pub mod fixtures;
pub mod format;
pub mod greens;
pub mod ideals;
pub mod limits;
pub mod morphism;
pub mod semigroup;
pub mod simple;
pub mod subset;

pub use bitset::ElementSet;
pub use error::{Error, Result};
pub use limits::Limits;
pub use morphism::SemigroupMorphism;
pub use semigroup::FiniteSemigroup;
pub use subset::{Role, SubsetHandle};
