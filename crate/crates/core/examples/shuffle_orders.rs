//! Orders of the left and right unshuffles from the multiplicative order
//! of -2, compared with the cycle structure.

use unshuffle::shuffles::{generator_permutation, shuffle_order, Stack};
use unshuffle::{DeckSize, Letter, ShuffleSymbol};

fn main() {
    println!("{:>5} {:>6} {:>6}", "2n", "ord L", "ord R");
    for cards in [2, 4, 6, 8, 10, 16, 20, 32, 52, 54, 64, 100] {
        let deck = DeckSize::new(cards).unwrap();
        let l = shuffle_order(Stack::Left, deck);
        let r = shuffle_order(Stack::Right, deck);
        for (letter, formula) in [(Letter::L, l), (Letter::R, r)] {
            let p = generator_permutation(ShuffleSymbol::new(letter), deck);
            assert_eq!(p.element_order().unwrap(), formula);
        }
        println!("{cards:>5} {l:>6} {r:>6}");
    }
}
