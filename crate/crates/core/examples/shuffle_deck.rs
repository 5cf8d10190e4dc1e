//! Perform a word of shuffles on a sorted deck and print each state.
//!
//!     cargo run --example shuffle_deck -- 6 LRV

use unshuffle::shuffles::{arrangement_steps, word_to_permutation};
use unshuffle::{DeckSize, ShuffleWord};

fn main() {
    let mut args = std::env::args().skip(1);
    let cards: usize = args.next().map_or(6, |s| s.parse().expect("deck size"));
    let word: ShuffleWord = args
        .next()
        .as_deref()
        .unwrap_or("LR")
        .parse()
        .expect("word");
    let deck = DeckSize::new(cards).expect("even deck size");

    println!("deck of {cards}, word {word}");
    println!("  start {:?}", (0..cards).collect::<Vec<_>>());
    for (sym, state) in arrangement_steps(&word, deck) {
        println!("  {sym:<5} {state:?}");
    }

    let p = word_to_permutation(&word, deck);
    println!("position map {p}");
    println!("cycles       {}", p.to_cycle_string());
    println!("order        {}", p.element_order().unwrap());
    println!(
        "stays centrally symmetric: {}",
        p.is_centrally_symmetric().unwrap()
    );
}
