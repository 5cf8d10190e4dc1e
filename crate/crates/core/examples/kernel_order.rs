//! Size of the kernel of the action of <L,R> on centrally symmetric pairs.

use unshuffle::group::{family_generators, kernel_order, unshuffle_kernel_prediction, Family};
use unshuffle::DeckSize;

fn main() {
    for n in 3..=26 {
        let Some(predicted) = unshuffle_kernel_prediction(n) else {
            println!("{n:>2}  (no prediction)");
            continue;
        };
        let gens = family_generators(Family::Unshuffle, DeckSize::new(2 * n).unwrap());
        let computed = kernel_order(&gens).unwrap();
        assert_eq!(computed, predicted);
        println!("{n:>2}  |K| = 2^{}", computed.bits() - 1);
    }
}
