//! Moving and swapping cards with a prescribed sequence of shuffles.
//!
//! On a deck of `2^k` cards every unshuffle rotates the bits of a card's
//! position right by one and complements some of them, so `k` unshuffles
//! bring every bit home. Choosing left or right at each step decides whether
//! a bit ends up flipped, which is enough to exchange any two positions.

use thiserror::Error;

use crate::shuffles::{DeckSize, Letter, ShuffleSymbol, ShuffleWord, Stack, MAX_DECK};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ElmsleyError {
    #[error("bit width must be between 1 and 20, got {0}")]
    BadWidth(u32),
    #[error("deck of {0} cards is not a power of two")]
    NotPowerOfTwo(usize),
    #[error("position {index} is outside a deck of {cards} cards")]
    OutOfRange { index: usize, cards: usize },
}

/// A card position on a `2^k` deck, viewed as a `k`-bit string.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BitIndex {
    k: u32,
    value: usize,
}

impl BitIndex {
    pub fn new(k: u32, value: usize) -> Result<Self, ElmsleyError> {
        check_width(k)?;
        if value >= 1 << k {
            return Err(ElmsleyError::OutOfRange {
                index: value,
                cards: 1 << k,
            });
        }
        Ok(BitIndex { k, value })
    }

    pub fn width(self) -> u32 {
        self.k
    }

    pub fn value(self) -> usize {
        self.value
    }

    /// Bits from most to least significant, `x_{k-1} .. x_0`.
    pub fn bits(self) -> Vec<u8> {
        (0..self.k)
            .rev()
            .map(|r| ((self.value >> r) & 1) as u8)
            .collect()
    }
}

impl std::fmt::Display for BitIndex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:0width$b}", self.value, width = self.k as usize)
    }
}

fn check_width(k: u32) -> Result<(), ElmsleyError> {
    if k == 0 || (1usize << k.min(63)) > MAX_DECK {
        return Err(ElmsleyError::BadWidth(k));
    }
    Ok(())
}

/// Where an unshuffle sends position `i`, computed on the bits:
/// `x_{k-1}..x_1 x_0` becomes `x_0 !x_{k-1} .. !x_1` for a left shuffle and
/// `!x_0 !x_{k-1} .. !x_1` for a right shuffle.
pub fn binary_shuffle_image(stack: Stack, i: BitIndex) -> BitIndex {
    let k = i.k;
    let low_mask = (1usize << (k - 1)) - 1;
    let x0 = i.value & 1;
    let lead = match stack {
        Stack::Left => x0,
        Stack::Right => 1 - x0,
    };
    BitIndex {
        k,
        value: (lead << (k - 1)) | (!(i.value >> 1) & low_mask),
    }
}

/// A `k`-shuffle unshuffle word that exchanges the cards at positions `i`
/// and `j` of a `2^k`-card deck.
///
/// Shuffle `r` is chosen from bit `r` of `i ^ j`: for odd `k` a zero bit
/// gives `L` and a one bit `R`; for even `k` the roles swap.
pub fn unshuffle_swap_word(i: usize, j: usize, k: u32) -> Result<ShuffleWord, ElmsleyError> {
    check_width(k)?;
    let cards = 1usize << k;
    for index in [i, j] {
        if index >= cards {
            return Err(ElmsleyError::OutOfRange { index, cards });
        }
    }
    let diff = i ^ j;
    let odd = k % 2 == 1;
    let symbols = (0..k)
        .map(|r| {
            let bit = (diff >> r) & 1 == 1;
            let letter = if bit == odd { Letter::R } else { Letter::L };
            ShuffleSymbol::new(letter)
        })
        .collect();
    Ok(ShuffleWord::from_symbols(symbols))
}

/// [`unshuffle_swap_word`] for a deck size, rejecting decks that are not a
/// power of two.
pub fn unshuffle_swap_word_for_deck(
    i: usize,
    j: usize,
    deck: DeckSize,
) -> Result<ShuffleWord, ElmsleyError> {
    let k = deck
        .power_of_two_exponent()
        .ok_or(ElmsleyError::NotPowerOfTwo(deck.cards()))?;
    unshuffle_swap_word(i, j, k)
}

/// The classic perfect-shuffle solution for moving the top card to
/// position `i`: read `i` in binary from the most significant one bit,
/// `1` meaning an in shuffle and `0` an out shuffle. Position 0 needs no
/// shuffles.
pub fn perfect_elmsley_word(i: usize, deck: DeckSize) -> Result<ShuffleWord, ElmsleyError> {
    if i >= deck.cards() {
        return Err(ElmsleyError::OutOfRange {
            index: i,
            cards: deck.cards(),
        });
    }
    let width = usize::BITS - i.leading_zeros();
    let symbols = (0..width)
        .rev()
        .map(|r| {
            let letter = if (i >> r) & 1 == 1 {
                Letter::I
            } else {
                Letter::O
            };
            ShuffleSymbol::new(letter)
        })
        .collect();
    Ok(ShuffleWord::from_symbols(symbols))
}
