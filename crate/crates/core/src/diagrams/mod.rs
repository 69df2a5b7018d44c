//! Concrete combinatorial sets whose rotations realize promotion:
//! Temperley-Lieb diagrams, Dyck paths, rectangular tableaux with
//! jeu-de-taquin sliding, perfect matchings and derangements.

mod matching;
mod perm;
mod tableau;
mod tl;

pub use matching::{
    fixed_matchings, matchings_cycle_type_character, matchings_enumerate, rotate_matching,
    PerfectMatching,
};
pub use perm::{
    conj_long_cycle, derangement_conjugation_character, derangements_enumerate, fixed_derangements,
    long_cycle, Permutation,
};
pub use tableau::{jdt_promote, tableau_maj, tableau_to_word, word_to_tableau, RectTableau};
pub use tl::{
    all_tl_diagrams, block_tl_subset, dyck_to_word, rotate_tl, tl_long_cycle_matrix,
    tl_skein_transposition, tl_to_word, tl_word_promote, word_to_dyck, word_to_tl, DyckPath,
    TLDiagram, TLLinearCombo,
};

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DiagramError {
    #[error("word must use only the letters U and D, got {0:?}")]
    BadLetter(char),
    #[error("word is not a balanced nonnegative UD-word: {0}")]
    Unbalanced(String),
    #[error("arcs do not form a noncrossing perfect matching: {0}")]
    BadDiagram(String),
    #[error("pairs do not form a perfect matching of 1..={0}")]
    BadMatching(usize),
    #[error("images do not form a permutation of 1..={0}")]
    BadPermutation(usize),
    #[error("tableau is not standard: {0}")]
    BadTableau(String),
    #[error("tableau shape is not rectangular")]
    NotRectangular,
    #[error("transposition index {i} out of range 1..{max}")]
    TranspositionRange { i: usize, max: usize },
    #[error("enumeration budget exceeded: {0}")]
    Budget(String),
}
