//! Move the top card anywhere with in and out shuffles: read the target in
//! binary, 1 is an in shuffle and 0 an out shuffle.

use unshuffle::elmsley::perfect_elmsley_word;
use unshuffle::shuffles::word_to_permutation;
use unshuffle::DeckSize;

fn main() {
    let deck = DeckSize::new(52).unwrap();
    for target in [0, 1, 5, 13, 26, 51] {
        let word = perfect_elmsley_word(target, deck).unwrap();
        let top = word_to_permutation(&word, deck).apply(0);
        println!("{target:>2} = {target:06b}  {word:<7} top card lands at {top}");
    }
}
