//! The in/out words c, w, b, c' and h(r), rewritten as unshuffles with
//! I = V L^-1 and O = V R^-1. For odd n the words c and w matter, for even
//! n the others; all of them keep the top half of the deck in place.

use unshuffle::group::{
    family_generators, half_deck_words, schreier_sims, substitute_unshuffles, Family,
};
use unshuffle::shuffles::word_to_permutation;
use unshuffle::DeckSize;

fn main() {
    for (cards, names, rs) in [
        (18, &["c", "w"][..], vec![]),
        (40, &["b", "c'", "h(1)", "h(2)"], vec![1, 2]),
    ] {
        let deck = DeckSize::new(cards).unwrap();
        let lr = schreier_sims(&family_generators(Family::Unshuffle, deck)).unwrap();
        println!("{cards} cards");
        for named in half_deck_words(deck, &rs).unwrap() {
            if !names.contains(&named.name.as_str()) {
                continue;
            }
            let sub = substitute_unshuffles(&named.word);
            let p = word_to_permutation(&named.word, deck);
            assert_eq!(word_to_permutation(&sub.word, deck), p);
            assert!(lr.contains(&p).unwrap());
            println!(
                "  {:<5} {} symbols, as unshuffles {}",
                named.name,
                named.word.len(),
                sub.word
            );
            println!("        cycles {}", p.to_cycle_string());
        }
    }
}
