//! Perfect-shuffle words for even permutations of the half deck, and their
//! rewriting into unshuffles via `I = V L^-1`, `O = V R^-1`.
//!
//! The named words are written the way they are usually quoted, with the
//! leftmost factor performed first, so `h(1) = O^-1 I` is an inverse out
//! shuffle followed by an in shuffle. Read this way, every one of them
//! keeps the top half of the deck in place.

use super::GroupError;
use crate::shuffles::{DeckSize, Letter, ShuffleSymbol, ShuffleWord};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedWord {
    pub name: String,
    pub word: ShuffleWord,
}

fn sym(letter: Letter) -> ShuffleWord {
    ShuffleWord::letter(letter)
}

fn inv(letter: Letter) -> ShuffleWord {
    ShuffleWord::letter(letter).inverse()
}

fn written(factors: &[ShuffleWord]) -> ShuffleWord {
    factors
        .iter()
        .fold(ShuffleWord::empty(), |acc, f| acc.then(f))
}

/// Constructors for the words `c`, `w`, `b`, `c'` and `h(r)`.
pub struct HalfDeckWords;

impl HalfDeckWords {
    /// `c = O (I^-1 O I O^-1)^2 O^-1`
    pub fn c() -> ShuffleWord {
        use Letter::{I, O};
        let inner = written(&[inv(I), sym(O), sym(I), inv(O)]);
        written(&[sym(O), inner.pow(2), inv(O)])
    }

    /// `w = O^-1 I c^-1 O^-1 I c^2 I^-1 O c^-1 I^-1 O`
    pub fn w() -> ShuffleWord {
        use Letter::{I, O};
        let c = Self::c();
        written(&[
            inv(O),
            sym(I),
            c.inverse(),
            inv(O),
            sym(I),
            c.pow(2),
            inv(I),
            sym(O),
            c.inverse(),
            inv(I),
            sym(O),
        ])
    }

    /// `b = (I^k O^-k I^-1 O)^-2`
    pub fn b(k: u32) -> Result<ShuffleWord, GroupError> {
        use Letter::{I, O};
        if k == 0 {
            return Err(GroupError::InvalidParameter("b needs k >= 1".into()));
        }
        let k = k as i64;
        let inner = written(&[sym(I).pow(k), sym(O).pow(-k), inv(I), sym(O)]);
        Ok(inner.pow(-2))
    }

    /// `c' = O b O^-1`
    pub fn c_prime(k: u32) -> Result<ShuffleWord, GroupError> {
        use Letter::O;
        Ok(written(&[sym(O), Self::b(k)?, inv(O)]))
    }

    /// `h(r) = O^-r I^r`
    pub fn h(r: u32) -> Result<ShuffleWord, GroupError> {
        use Letter::{I, O};
        if r == 0 {
            return Err(GroupError::InvalidParameter("h(r) needs r >= 1".into()));
        }
        let r = r as i64;
        Ok(written(&[sym(O).pow(-r), sym(I).pow(r)]))
    }
}

/// All named words for a deck of `2n = 2^k v` cards (`v > 1` odd): `c`, `w`,
/// `b`, `c'`, and `h(r)` for each requested `r` in `1..k`.
pub fn half_deck_words(deck: DeckSize, r_values: &[u32]) -> Result<Vec<NamedWord>, GroupError> {
    if deck.power_of_two_exponent().is_some() {
        return Err(GroupError::InvalidParameter(format!(
            "deck of {} cards has no odd part greater than 1",
            deck.cards()
        )));
    }
    let k = deck.cards().trailing_zeros();
    let mut out = vec![
        NamedWord {
            name: "c".into(),
            word: HalfDeckWords::c(),
        },
        NamedWord {
            name: "w".into(),
            word: HalfDeckWords::w(),
        },
        NamedWord {
            name: "b".into(),
            word: HalfDeckWords::b(k)?,
        },
        NamedWord {
            name: "c'".into(),
            word: HalfDeckWords::c_prime(k)?,
        },
    ];
    for &r in r_values {
        if r == 0 || r >= k {
            return Err(GroupError::InvalidParameter(format!(
                "h(r) needs 1 <= r <= {}, got {r}",
                k - 1
            )));
        }
        out.push(NamedWord {
            name: format!("h({r})"),
            word: HalfDeckWords::h(r)?,
        });
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Substitution {
    /// The rewritten word; starts with `V` when `odd_reversal` is set.
    pub word: ShuffleWord,
    /// The number of reversals produced was odd, so one `V` remains.
    pub odd_reversal: bool,
}

/// Rewrites `I -> V L^-1`, `I^-1 -> V L`, `O -> V R^-1`, `O^-1 -> V R` and
/// cancels the reversals, which are central involutions. `L` and `R`
/// symbols pass through unchanged.
pub fn substitute_unshuffles(word: &ShuffleWord) -> Substitution {
    let mut reversals = 0usize;
    let mut body = Vec::with_capacity(word.len());
    for s in word.symbols() {
        let replacement = match s.letter {
            Letter::I => Some(Letter::L),
            Letter::O => Some(Letter::R),
            Letter::V => None,
            Letter::L | Letter::R => {
                body.push(*s);
                continue;
            }
        };
        reversals += 1;
        if let Some(letter) = replacement {
            body.push(ShuffleSymbol {
                letter,
                inverted: !s.inverted,
            });
        }
    }
    let odd_reversal = reversals % 2 == 1;
    let symbols = if odd_reversal {
        std::iter::once(ShuffleSymbol::new(Letter::V))
            .chain(body)
            .collect()
    } else {
        body
    };
    Substitution {
        word: ShuffleWord::from_symbols(symbols),
        odd_reversal,
    }
}
