//! Unshuffles and perfect shuffles as permutations of a `2n`-card deck.
//!
//! - [`perm`]: permutation arithmetic, sign, and the pair homomorphism on
//!   centrally symmetric permutations.
//! - [`shuffles`]: the `L`, `R`, `I`, `O`, `V` shuffles, shuffle words, and
//!   shuffle orders.
//! - [`elmsley`]: swapping two cards with unshuffles on a `2^k` deck, and the
//!   classic in/out solution for moving the top card.
//! - [`group`]: exact orders of `<L, R>` and `<I, O>` by enumeration or
//!   Schreier-Sims, with predictions to check them against.
//! - [`report`]: the verification report file format.
//! - [`cli`]: the `unshuffle` command.
//!
//! Permutations use position-image form: `p.apply(i)` is where the card at
//! position `i` goes. The top-to-bottom deck after applying `p` to the sorted
//! deck is `p.arrangement()`, the inverse map.

pub mod cli;
pub mod elmsley;
pub mod group;
pub mod perm;
pub mod report;
pub mod shuffles;

pub use perm::{compose, PairPermutation, PermError, Permutation, Sign};
pub use shuffles::{DeckSize, Letter, ShuffleSymbol, ShuffleWord};
