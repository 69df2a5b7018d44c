//! Root systems, Weyl characters, Adams operations and the symmetric-group
//! character of invariant tensors.
//!
//! Weights live in a fixed integer coordinate lattice per Cartan type. For
//! `B3` every weight is stored doubled so that the spin weights become
//! integral; inner-product ratios are unchanged by the uniform scaling.

mod character;
mod invariants;
mod root_system;

pub use character::{irreducible_character, Character};
pub use invariants::{frobenius_invariants, two_rho_pairing, InvariantsCharacter};
pub use root_system::{CartanType, RootSystem, Weight};

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LieCharError {
    #[error("unsupported root system: {0}")]
    UnsupportedSystem(String),
    #[error("weight {0:?} is not dominant")]
    NonDominant(Vec<i64>),
    #[error("operands live in different root systems")]
    RootSystemMismatch,
    #[error("character is not Weyl invariant near weight {0:?}")]
    NotInvariant(Vec<i64>),
    #[error("computation budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("invariants character failed to expand integrally: {0}")]
    BadExpansion(String),
    #[error("negative multiplicity {mult} for shape {partition:?} in the invariants character")]
    NegativeInvariantsMultiplicity { partition: Vec<usize>, mult: i64 },
}
