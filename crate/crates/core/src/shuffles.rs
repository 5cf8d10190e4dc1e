//! The five deck shuffles (left and right unshuffles, in and out perfect
//! shuffles, reversal) as explicit permutations, shuffle words, and the
//! number-theoretic orders of the unshuffles.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::perm::{gcd, Permutation};

/// Largest deck the shuffle constructors accept.
pub const MAX_DECK: usize = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ShuffleError {
    #[error("deck size {0} is not an even number >= 2")]
    OddOrEmptyDeck(usize),
    #[error("deck size {0} exceeds the maximum of {MAX_DECK}")]
    DeckTooLarge(usize),
    #[error("invalid shuffle word {word:?}: {reason}")]
    BadWord { word: String, reason: String },
    #[error("modulus must be at least 2, got {0}")]
    BadModulus(u64),
    #[error("{a} is not a unit modulo {m}")]
    NotUnit { a: i64, m: u64 },
}

/// A deck of `2n` cards.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DeckSize(usize);

impl DeckSize {
    pub fn new(two_n: usize) -> Result<Self, ShuffleError> {
        if two_n < 2 || two_n % 2 == 1 {
            return Err(ShuffleError::OddOrEmptyDeck(two_n));
        }
        if two_n > MAX_DECK {
            return Err(ShuffleError::DeckTooLarge(two_n));
        }
        Ok(DeckSize(two_n))
    }

    /// Total number of cards, `2n`.
    pub fn cards(self) -> usize {
        self.0
    }

    /// Half the deck, `n`.
    pub fn n(self) -> usize {
        self.0 / 2
    }

    /// `Some(k)` when the deck has `2^k` cards.
    pub fn power_of_two_exponent(self) -> Option<u32> {
        self.0.is_power_of_two().then(|| self.0.trailing_zeros())
    }
}

impl fmt::Display for DeckSize {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    /// Left unshuffle: left pile stacked on top.
    L,
    /// Right unshuffle: right pile stacked on top.
    R,
    /// In shuffle.
    I,
    /// Out shuffle.
    O,
    /// Reversal.
    V,
}

impl Letter {
    pub fn as_char(self) -> char {
        match self {
            Letter::L => 'L',
            Letter::R => 'R',
            Letter::I => 'I',
            Letter::O => 'O',
            Letter::V => 'V',
        }
    }

    fn from_char(c: char) -> Option<Letter> {
        Some(match c {
            'L' => Letter::L,
            'R' => Letter::R,
            'I' => Letter::I,
            'O' => Letter::O,
            'V' => Letter::V,
            _ => return None,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ShuffleSymbol {
    pub letter: Letter,
    pub inverted: bool,
}

impl ShuffleSymbol {
    pub const fn new(letter: Letter) -> Self {
        ShuffleSymbol {
            letter,
            inverted: false,
        }
    }

    pub const fn inv(letter: Letter) -> Self {
        ShuffleSymbol {
            letter,
            inverted: true,
        }
    }

    pub fn inverse(self) -> Self {
        ShuffleSymbol {
            letter: self.letter,
            inverted: !self.inverted,
        }
    }
}

impl fmt::Display for ShuffleSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter.as_char())?;
        if self.inverted {
            f.write_str("'")?;
        }
        Ok(())
    }
}

/// A sequence of shuffles in performance order: the first symbol is done
/// first. Written as e.g. `RLR` or `I'OV`; a trailing `'` inverts.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct ShuffleWord(Vec<ShuffleSymbol>);

impl ShuffleWord {
    pub fn empty() -> Self {
        ShuffleWord(Vec::new())
    }

    pub fn from_symbols(symbols: Vec<ShuffleSymbol>) -> Self {
        ShuffleWord(symbols)
    }

    pub fn letter(letter: Letter) -> Self {
        ShuffleWord(vec![ShuffleSymbol::new(letter)])
    }

    /// Builds a word from factors written as an algebraic product, which is
    /// read right to left: the last factor is performed first.
    pub fn product(factors: &[ShuffleWord]) -> Self {
        ShuffleWord(
            factors
                .iter()
                .rev()
                .flat_map(|w| w.0.iter().copied())
                .collect(),
        )
    }

    pub fn symbols(&self) -> &[ShuffleSymbol] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, sym: ShuffleSymbol) {
        self.0.push(sym);
    }

    /// `self` performed, then `other`.
    pub fn then(&self, other: &ShuffleWord) -> ShuffleWord {
        ShuffleWord(self.0.iter().chain(&other.0).copied().collect())
    }

    pub fn inverse(&self) -> ShuffleWord {
        ShuffleWord(self.0.iter().rev().map(|s| s.inverse()).collect())
    }

    /// `self` repeated `|exp|` times, inverted when `exp < 0`.
    pub fn pow(&self, exp: i64) -> ShuffleWord {
        let base = if exp < 0 {
            self.inverse()
        } else {
            self.clone()
        };
        let mut out = Vec::with_capacity(base.len() * exp.unsigned_abs() as usize);
        for _ in 0..exp.unsigned_abs() {
            out.extend_from_slice(&base.0);
        }
        ShuffleWord(out)
    }

    /// The same word written as an algebraic product (right to left).
    pub fn to_product_notation(&self) -> String {
        self.0.iter().rev().map(|s| s.to_string()).collect()
    }
}

impl fmt::Display for ShuffleWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl FromStr for ShuffleWord {
    type Err = ShuffleError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = |reason: String| ShuffleError::BadWord {
            word: s.to_string(),
            reason,
        };
        let mut out: Vec<ShuffleSymbol> = Vec::new();
        let mut can_prime = false;
        for c in s.chars() {
            match c {
                '\'' => {
                    if !can_prime {
                        return Err(bad("inverse mark without a preceding letter".into()));
                    }
                    out.last_mut().expect("checked").inverted = true;
                    can_prime = false;
                }
                c if c.is_whitespace() => can_prime = false,
                c => {
                    let letter =
                        Letter::from_char(c).ok_or_else(|| bad(format!("unknown symbol {c:?}")))?;
                    out.push(ShuffleSymbol::new(letter));
                    can_prime = true;
                }
            }
        }
        Ok(ShuffleWord(out))
    }
}

/// Which pile ends up on top after an unshuffle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Stack {
    Left,
    Right,
}

impl Stack {
    pub fn letter(self) -> Letter {
        match self {
            Stack::Left => Letter::L,
            Stack::Right => Letter::R,
        }
    }
}

fn letter_permutation(letter: Letter, deck: DeckSize) -> Permutation {
    let two_n = deck.cards() as u64;
    let n = two_n / 2;
    let image: Vec<u32> = match letter {
        Letter::L => (0..two_n)
            .map(|i| ((n * i + n - 1) % (two_n + 1)) as u32)
            .collect(),
        Letter::R if two_n == 2 => return deal_oracle(Stack::Right, deck),
        Letter::R => (0..two_n)
            .map(|i| {
                if i == 0 {
                    (two_n - 1) as u32
                } else {
                    (((n - 1) * i) % (two_n - 1)) as u32
                }
            })
            .collect(),
        Letter::I => (0..two_n)
            .map(|i| ((2 * i + 1) % (two_n + 1)) as u32)
            .collect(),
        Letter::O => (0..two_n)
            .map(|i| {
                if i == two_n - 1 {
                    i as u32
                } else {
                    ((2 * i) % (two_n - 1)) as u32
                }
            })
            .collect(),
        Letter::V => (0..two_n).rev().map(|i| i as u32).collect(),
    };
    Permutation::from_raw(image)
}

/// The permutation of a single shuffle symbol, from the closed-form
/// position formulas.
pub fn generator_permutation(sym: ShuffleSymbol, deck: DeckSize) -> Permutation {
    let p = letter_permutation(sym.letter, deck);
    if sym.inverted {
        p.inverse()
    } else {
        p
    }
}

/// Simulates an unshuffle: deal from the top alternately onto a left and a
/// right pile, then stack one pile on the other.
pub fn deal_oracle(stack_on_top: Stack, deck: DeckSize) -> Permutation {
    let mut left: Vec<usize> = Vec::with_capacity(deck.n());
    let mut right: Vec<usize> = Vec::with_capacity(deck.n());
    // Piles are stored bottom-to-top; dealing pushes onto the top.
    for card in 0..deck.cards() {
        if card % 2 == 0 {
            left.push(card);
        } else {
            right.push(card);
        }
    }
    let (top, bottom) = match stack_on_top {
        Stack::Left => (left, right),
        Stack::Right => (right, left),
    };
    let arrangement = top.into_iter().rev().chain(bottom.into_iter().rev());
    Permutation::from_arrangement(arrangement).expect("dealing yields a bijection")
}

/// Left fold of composition over the word; the empty word is the identity.
pub fn word_to_permutation(word: &ShuffleWord, deck: DeckSize) -> Permutation {
    word.symbols()
        .iter()
        .fold(Permutation::identity(deck.cards()), |acc, &s| {
            acc.then(&generator_permutation(s, deck))
        })
}

/// The deck arrangement (top-to-bottom card labels) after each step of
/// `word`, starting from the sorted deck.
pub fn arrangement_steps(word: &ShuffleWord, deck: DeckSize) -> Vec<(ShuffleSymbol, Vec<usize>)> {
    let mut acc = Permutation::identity(deck.cards());
    word.symbols()
        .iter()
        .map(|&s| {
            acc = acc.then(&generator_permutation(s, deck));
            (s, acc.arrangement())
        })
        .collect()
}

/// Least `k >= 1` with `a^k = 1 (mod m)`, by repeated multiplication.
pub fn multiplicative_order(a: i64, m: u64) -> Result<u64, ShuffleError> {
    if m < 2 {
        return Err(ShuffleError::BadModulus(m));
    }
    let base = a.rem_euclid(m as i64) as u64;
    if gcd(base, m) != 1 {
        return Err(ShuffleError::NotUnit { a, m });
    }
    let (base, m) = (base as u128, m as u128);
    let mut x = base;
    let mut k = 1;
    while x != 1 {
        x = x * base % m;
        k += 1;
    }
    Ok(k)
}

/// Order of the left or right unshuffle from the multiplicative order of -2
/// modulo `2n+1` (left) or `2n-1` (right).
pub fn shuffle_order(stack: Stack, deck: DeckSize) -> u64 {
    let two_n = deck.cards() as u64;
    match stack {
        Stack::Left => multiplicative_order(-2, two_n + 1).expect("2n+1 is odd"),
        // Two cards: the right unshuffle is a transposition.
        Stack::Right if two_n == 2 => 2,
        Stack::Right => {
            let r = multiplicative_order(-2, two_n - 1).expect("2n-1 is odd");
            if r.is_multiple_of(2) {
                r
            } else {
                2 * r
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::compose;

    fn deck(n: usize) -> DeckSize {
        DeckSize::new(n).unwrap()
    }

    fn gen(letter: Letter, d: usize) -> Permutation {
        generator_permutation(ShuffleSymbol::new(letter), deck(d))
    }

    fn perm(v: &[usize]) -> Permutation {
        Permutation::from_images(v.iter().copied()).unwrap()
    }

    #[test]
    fn deck_size_validation() {
        assert_eq!(DeckSize::new(0), Err(ShuffleError::OddOrEmptyDeck(0)));
        assert_eq!(DeckSize::new(7), Err(ShuffleError::OddOrEmptyDeck(7)));
        assert_eq!(
            DeckSize::new(MAX_DECK + 2),
            Err(ShuffleError::DeckTooLarge(MAX_DECK + 2))
        );
        assert_eq!(deck(52).n(), 26);
        assert_eq!(deck(16).power_of_two_exponent(), Some(4));
        assert_eq!(deck(12).power_of_two_exponent(), None);
    }

    #[test]
    fn six_card_generators() {
        assert_eq!(gen(Letter::L, 6), perm(&[2, 5, 1, 4, 0, 3]));
        assert_eq!(gen(Letter::L, 6).arrangement(), vec![4, 2, 0, 5, 3, 1]);
        assert_eq!(gen(Letter::R, 6), perm(&[5, 2, 4, 1, 3, 0]));
        assert_eq!(gen(Letter::R, 6).arrangement(), vec![5, 3, 1, 4, 2, 0]);
        assert_eq!(gen(Letter::V, 6), perm(&[5, 4, 3, 2, 1, 0]));
        assert_eq!(gen(Letter::I, 6), perm(&[1, 3, 5, 0, 2, 4]));
        assert_eq!(gen(Letter::O, 6), perm(&[0, 2, 4, 1, 3, 5]));
        assert_eq!(
            generator_permutation(ShuffleSymbol::inv(Letter::L), deck(6)),
            perm(&[4, 2, 0, 5, 3, 1])
        );
    }

    #[test]
    fn dealing_matches_formulas() {
        assert_eq!(deal_oracle(Stack::Left, deck(6)), perm(&[2, 5, 1, 4, 0, 3]));
        assert_eq!(
            deal_oracle(Stack::Right, deck(6)),
            perm(&[5, 2, 4, 1, 3, 0])
        );
        assert!(deal_oracle(Stack::Left, deck(2)).is_identity());
        assert_eq!(gen(Letter::R, 2), perm(&[1, 0]));
        for d in (2..=200).step_by(2) {
            assert_eq!(
                deal_oracle(Stack::Left, deck(d)),
                gen(Letter::L, d),
                "L at {d}"
            );
            assert_eq!(
                deal_oracle(Stack::Right, deck(d)),
                gen(Letter::R, d),
                "R at {d}"
            );
        }
    }

    #[test]
    fn right_is_outer_swap_plus_inner_left() {
        for d in (4..=200).step_by(2) {
            let r = gen(Letter::R, d);
            let inner = gen(Letter::L, d - 2);
            assert_eq!(r.apply(0), d - 1);
            assert_eq!(r.apply(d - 1), 0);
            for i in 1..d - 1 {
                assert_eq!(r.apply(i), inner.apply(i - 1) + 1, "deck {d}, card {i}");
            }
        }
    }

    #[test]
    fn word_parsing_and_display() {
        let w: ShuffleWord = "RLR".parse().unwrap();
        assert_eq!(w.len(), 3);
        assert_eq!(w.to_string(), "RLR");
        let w: ShuffleWord = "I' O V".parse().unwrap();
        assert_eq!(w.to_string(), "I'OV");
        assert_eq!(w.to_product_notation(), "VOI'");
        assert!("".parse::<ShuffleWord>().unwrap().is_empty());
        assert!("X".parse::<ShuffleWord>().is_err());
        assert!("'L".parse::<ShuffleWord>().is_err());
        assert!("L''".parse::<ShuffleWord>().is_err());
        assert_eq!(
            "LI".parse::<ShuffleWord>().unwrap().inverse().to_string(),
            "I'L'"
        );
    }

    #[test]
    fn product_reads_right_to_left() {
        let o = ShuffleWord::letter(Letter::O);
        let i = ShuffleWord::letter(Letter::I);
        let h1 = ShuffleWord::product(&[o.pow(-1), i.clone()]);
        assert_eq!(h1.to_string(), "IO'");
        assert_eq!(word_to_permutation(&h1, deck(6)), perm(&[3, 4, 5, 0, 1, 2]));
    }

    #[test]
    fn word_evaluation() {
        let li: ShuffleWord = "LI".parse().unwrap();
        assert_eq!(word_to_permutation(&li, deck(6)), gen(Letter::V, 6));
        assert!(word_to_permutation(&ShuffleWord::empty(), deck(10)).is_identity());
        let rlr: ShuffleWord = "RLR".parse().unwrap();
        assert_eq!(word_to_permutation(&rlr, deck(8)).apply(0), 5);
    }

    #[test]
    fn multiplicative_order_examples() {
        assert_eq!(multiplicative_order(-2, 53), Ok(52));
        assert_eq!(multiplicative_order(-2, 9), Ok(3));
        assert_eq!(multiplicative_order(1, 17), Ok(1));
        assert_eq!(multiplicative_order(-2, 51), Ok(8));
        assert_eq!(
            multiplicative_order(-2, 50),
            Err(ShuffleError::NotUnit { a: -2, m: 50 })
        );
        assert_eq!(multiplicative_order(3, 1), Err(ShuffleError::BadModulus(1)));
    }

    #[test]
    fn shuffle_order_examples() {
        assert_eq!(shuffle_order(Stack::Left, deck(52)), 52);
        assert_eq!(shuffle_order(Stack::Right, deck(52)), 8);
        assert_eq!(shuffle_order(Stack::Right, deck(6)), 4);
        assert_eq!(shuffle_order(Stack::Left, deck(6)), 6);
        assert_eq!(gen(Letter::R, 6).element_order().unwrap(), 4);
        assert_eq!(shuffle_order(Stack::Right, deck(2)), 2);
        assert_eq!(shuffle_order(Stack::Left, deck(2)), 1);
    }

    #[test]
    fn connection_with_perfect_shuffles() {
        for d in (2..=100).step_by(2) {
            let (l, r, i, o, v) = (
                gen(Letter::L, d),
                gen(Letter::R, d),
                gen(Letter::I, d),
                gen(Letter::O, d),
                gen(Letter::V, d),
            );
            assert_eq!(compose(&l, &i).unwrap(), v);
            assert_eq!(compose(&i, &l).unwrap(), v);
            assert_eq!(compose(&r, &o).unwrap(), v);
            assert_eq!(compose(&o, &r).unwrap(), v);
            assert_eq!(compose(&i.inverse(), &v).unwrap(), l);
            assert_eq!(compose(&o.inverse(), &v).unwrap(), r);
        }
    }
}
