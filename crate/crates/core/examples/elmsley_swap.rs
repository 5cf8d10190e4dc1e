//! Exchange two cards of a 2^k deck using k unshuffles.
//!
//!     cargo run --example elmsley_swap -- 16 6 11

use unshuffle::elmsley::unshuffle_swap_word_for_deck;
use unshuffle::shuffles::arrangement_steps;
use unshuffle::DeckSize;

fn main() {
    let args: Vec<usize> = std::env::args()
        .skip(1)
        .map(|s| s.parse().expect("number"))
        .collect();
    let (cards, a, b) = match args[..] {
        [c, a, b] => (c, a, b),
        _ => (8, 0, 5),
    };
    let deck = DeckSize::new(cards).unwrap();
    let word = unshuffle_swap_word_for_deck(a, b, deck).expect("a power-of-two deck");
    println!("swap positions {a} and {b} of {cards} cards: {word}");
    for (sym, state) in arrangement_steps(&word, deck) {
        println!("  {sym}  {state:?}");
    }
}
