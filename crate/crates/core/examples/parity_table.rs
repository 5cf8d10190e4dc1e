//! Signs of L, R and of the permutations they induce on centrally
//! symmetric pairs, for n = 2..=12.

use unshuffle::group::parity_row;
use unshuffle::shuffles::generator_permutation;
use unshuffle::{DeckSize, Letter, ShuffleSymbol};

fn main() {
    println!(" n  n%4   L  R  φL φR");
    for n in 2..=12 {
        let deck = DeckSize::new(2 * n).unwrap();
        let l = generator_permutation(ShuffleSymbol::new(Letter::L), deck);
        let r = generator_permutation(ShuffleSymbol::new(Letter::R), deck);
        let signs = [
            l.parity(),
            r.parity(),
            l.sgn_bar().unwrap(),
            r.sgn_bar().unwrap(),
        ];
        assert_eq!(signs, parity_row(n).as_array());
        let cells: Vec<&str> = signs
            .iter()
            .map(|s| if s.value() > 0 { " +" } else { " -" })
            .collect();
        println!("{n:>2}   {}  {}", n % 4, cells.join(" "));
    }
}
