//! Partitions, symmetric-group characters, fake-degree polynomials and
//! symmetric functions in the Schur and homogeneous bases.

mod character;
mod partition;
mod series;

pub use character::{class_size, mn_character, z_factor, CharTable, CycleTypeFunction};
pub use partition::{
    b_statistic, conjugate, dim_partition, fake_degree, fake_degree_maj, fake_degree_module,
    partitions_of, standard_tableaux, tableau_maj, Partition,
};
pub use series::{
    matchings_schur_sum, q_derangement, q_rencontre, rencontre_series, Basis, SymFunc,
};

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SymFuncError {
    #[error("parts must be positive and weakly decreasing, got {0:?}")]
    InvalidPartition(Vec<usize>),
    #[error("partition size {size} exceeds the enumeration bound {bound}")]
    SizeOverBound { size: usize, bound: usize },
    #[error("partition sizes differ: |lambda| = {lambda}, |mu| = {mu}")]
    SizeMismatch { lambda: usize, mu: usize },
    #[error("cycle-type function of degree {degree} is missing a value at {missing:?}")]
    IncompleteCycleFunction { degree: usize, missing: Vec<usize> },
    #[error("class-function expansion has a non-integer coefficient at {0:?}")]
    NonIntegerCoefficient(Vec<usize>),
    #[error("negative multiplicity {mult} at {partition:?}")]
    NegativeMultiplicity { partition: Vec<usize>, mult: i64 },
    #[error("basis mismatch: expected {expected}, got {got}")]
    BasisMismatch {
        expected: &'static str,
        got: &'static str,
    },
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("argument out of range: {0}")]
    OutOfRange(String),
}
