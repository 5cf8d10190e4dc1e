//! Exact computation of the groups generated by shuffles, predictions of
//! their structure, and the machinery that compares the two.

mod bfs;
mod bsgs;
mod predict;
mod verify;
mod words;

pub use bfs::{bfs_enumerate, BfsGroup, DEFAULT_BFS_CAP};
pub use bsgs::{kernel_order, schreier_sims, Bsgs};
pub use predict::{
    factorial, parity_row, predict_group, unshuffle_kernel_prediction, CaseTag, Characterization,
    Family, GroupPrediction, ParityRow,
};
pub use verify::{verify, verify_deck, Engine, EngineUsed, VerificationRecord, VerifyOptions};
pub use words::{half_deck_words, substitute_unshuffles, HalfDeckWords, NamedWord, Substitution};

use thiserror::Error;

use crate::perm::{PermError, Permutation};
use crate::shuffles::{generator_permutation, DeckSize, Letter, ShuffleSymbol};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("at least one generator is required")]
    EmptyGenerators,
    #[error("generators have different degrees: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("group has more than {cap} elements; breadth-first enumeration is infeasible, use schreier-sims")]
    CapExceeded { cap: usize },
    #[error("breadth-first enumeration supports degree at most 256, got {0}")]
    DegreeTooLarge(usize),
    #[error("invalid word parameter: {0}")]
    InvalidParameter(String),
    #[error("engines disagree: bfs found {bfs}, schreier-sims found {schreier}")]
    EngineDisagreement { bfs: String, schreier: String },
    #[error(transparent)]
    Perm(#[from] PermError),
}

/// The two generators of a shuffle family on the given deck.
pub fn family_generators(family: Family, deck: DeckSize) -> [Permutation; 2] {
    let (a, b) = match family {
        Family::Unshuffle => (Letter::L, Letter::R),
        Family::Perfect => (Letter::I, Letter::O),
    };
    [
        generator_permutation(ShuffleSymbol::new(a), deck),
        generator_permutation(ShuffleSymbol::new(b), deck),
    ]
}

pub(crate) fn common_degree(gens: &[Permutation]) -> Result<usize, GroupError> {
    let first = gens.first().ok_or(GroupError::EmptyGenerators)?;
    let degree = first.degree();
    if let Some(g) = gens.iter().find(|g| g.degree() != degree) {
        return Err(GroupError::DegreeMismatch(degree, g.degree()));
    }
    Ok(degree)
}
