//! Compare computed and predicted groups for a range of decks and print
//! the JSON report.
//!
//!     cargo run --example verify_report -- 2 20

use unshuffle::group::{verify, VerifyOptions};
use unshuffle::report::render_report;
use unshuffle::DeckSize;

fn main() {
    let args: Vec<usize> = std::env::args()
        .skip(1)
        .map(|s| s.parse().unwrap())
        .collect();
    let (min, max) = match args[..] {
        [a, b] => (a, b),
        _ => (6, 12),
    };
    let decks: Vec<DeckSize> = (min..=max)
        .filter(|d| d % 2 == 0)
        .map(|d| DeckSize::new(d).unwrap())
        .collect();
    let records = verify(&decks, VerifyOptions::default());
    let failing = records.iter().filter(|r| !r.all_checks_pass()).count();
    print!("{}", render_report(&records).unwrap());
    eprintln!("{} records, {failing} failing", records.len());
}
