use alloc::string::String;
use core::fmt;

/// Which group axiom a Cayley table violates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axiom {
    /// The table is not an `n x n` square.
    Shape,
    /// An entry lies outside `0..n`.
    Range,
    /// Some row or column is not a permutation of `0..n`.
    Latin,
    Associativity,
    Identity,
    Inverses,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axiom::Shape => "shape",
            Axiom::Range => "range",
            Axiom::Latin => "latin square",
            Axiom::Associativity => "associativity",
            Axiom::Identity => "identity",
            Axiom::Inverses => "inverses",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("group order exceeds the cap of {cap} elements")]
    OrderCapExceeded { cap: usize },
    #[error("not a group: {axiom} fails ({detail})")]
    NotAGroup { axiom: Axiom, detail: String },
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("no prime p = 1 mod {exponent} with p > 2 sqrt({order}) within the search bound")]
    NoSuitablePrime { order: usize, exponent: usize },
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("restriction multiplicity is not a nonnegative integer")]
    NonIntegerMultiplicity,
    #[error("codegree of character {row} is not an integer")]
    NonIntegralCodegree { row: usize },
    #[error("invalid recipe: {0}")]
    InvalidRecipe(String),
    #[error("group order {order} exceeds the isomorphism backtracking bound {bound}")]
    BacktrackBoundExceeded { order: usize, bound: usize },
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
