//! Exact orders of <L,R> and <I,O>, by enumeration for small decks and by
//! Schreier-Sims beyond.

use unshuffle::group::{
    bfs_enumerate, family_generators, predict_group, schreier_sims, Family, DEFAULT_BFS_CAP,
};
use unshuffle::DeckSize;

fn main() {
    for cards in (2..=32).step_by(2).chain([52]) {
        let deck = DeckSize::new(cards).unwrap();
        let mut line = format!("{cards:>3}");
        for family in [Family::Unshuffle, Family::Perfect] {
            let gens = family_generators(family, deck);
            let order = schreier_sims(&gens).unwrap().order();
            let prediction = predict_group(family, deck);
            assert_eq!(order, prediction.predicted_order);
            if cards <= 16 {
                let bfs = bfs_enumerate(&gens, DEFAULT_BFS_CAP).unwrap();
                assert_eq!(order, bfs.order().into());
            }
            line += &format!("  {:<9} {:<14}", family.name(), prediction.factored);
        }
        println!("{line}");
    }
    let lr = bfs_enumerate(
        &family_generators(Family::Unshuffle, DeckSize::new(12).unwrap()),
        DEFAULT_BFS_CAP,
    )
    .unwrap();
    let io = bfs_enumerate(
        &family_generators(Family::Perfect, DeckSize::new(12).unwrap()),
        DEFAULT_BFS_CAP,
    )
    .unwrap();
    println!("12 cards: <L,R> = <I,O> as sets: {}", lr.same_elements(&io));
}
