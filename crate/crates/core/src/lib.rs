//! Exact character theory for small finite groups: conjugacy classes,
//! Dixon–Schneider character tables over exact cyclotomic numbers,
//! character codegrees, and the two codegree graphs built from them.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, exports and
//! the command line live in the companion `codegree` crate.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod analysis;
pub mod arith;
pub mod catalog;
pub mod chartable;
pub mod classes;
pub mod codegree;
pub mod cyclotomic;
pub mod error;
pub mod graph;
pub mod group;
mod modp;
pub mod normal;
pub mod perm;
pub mod structure;
pub mod verify;

pub use chartable::{character_table, CharacterTable, ClassConstants};
pub use classes::ConjugacyData;
pub use cyclotomic::{Cyclotomic, Rational};
pub use error::{Axiom, Error, Result};
pub use group::{EmbeddedGroup, FiniteGroup, Quotient, Subgroup, DEFAULT_ORDER_CAP};
pub use perm::Permutation;
