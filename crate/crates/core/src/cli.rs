//! Command-line front end. The binary only forwards to [`run`], which keeps
//! every command testable in-process.
//!
//! Exit status: 0 success, 1 verification mismatch, 2 usage error,
//! 3 engine infeasible.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::elmsley::{perfect_elmsley_word, unshuffle_swap_word_for_deck};
use crate::group::{
    bfs_enumerate, predict_group, schreier_sims, verify, Engine, Family, GroupError,
    VerificationRecord, VerifyOptions, DEFAULT_BFS_CAP,
};
use crate::perm::Permutation;
use crate::report::{render_report, write_report};
use crate::shuffles::{
    arrangement_steps, shuffle_order, word_to_permutation, DeckSize, Letter, ShuffleWord, Stack,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INFEASIBLE: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "unshuffle",
    version,
    about = "Unshuffles, perfect shuffles and the groups they generate"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum PermFormat {
    Images,
    Cycles,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum EngineArg {
    Auto,
    Bfs,
    Schreier,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FamilyArg {
    Unshuffle,
    Perfect,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Apply a shuffle word to the sorted deck and print the arrangement.
    Shuffle {
        #[arg(long, value_parser = parse_deck)]
        deck: DeckSize,
        #[arg(long, value_parser = parse_word, allow_hyphen_values = true)]
        word: ShuffleWord,
        /// Print the arrangement after every shuffle.
        #[arg(long)]
        show_steps: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print the permutation of a shuffle symbol or word.
    Perm {
        #[arg(long, value_parser = parse_deck)]
        deck: DeckSize,
        #[arg(long, value_parser = parse_word)]
        symbol: ShuffleWord,
        #[arg(long, value_enum, default_value_t = PermFormat::Images)]
        format: PermFormat,
    },
    /// Order of a shuffle word; for L and R also from the multiplicative order of -2.
    Order {
        #[arg(long, value_parser = parse_deck)]
        deck: DeckSize,
        #[arg(long, value_parser = parse_word)]
        word: ShuffleWord,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Unshuffle word swapping the cards at positions a and b of a 2^k deck.
    Swap {
        #[arg(long, value_parser = parse_deck)]
        deck: DeckSize,
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// In/out shuffle word moving the top card to a position.
    Elmsley {
        #[arg(long, value_parser = parse_deck)]
        deck: DeckSize,
        #[arg(long)]
        target: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Exact order of the group generated by the given shuffles.
    GroupOrder {
        #[arg(long, value_parser = parse_deck)]
        deck: DeckSize,
        /// `LR`, `IO`, or a comma-separated list of words.
        #[arg(long, default_value = "LR")]
        gens: String,
        #[arg(long, value_enum, default_value_t = EngineArg::Auto)]
        engine: EngineArg,
        #[arg(long, default_value_t = DEFAULT_BFS_CAP)]
        cap: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Predicted structure of <L,R> or <I,O>.
    GroupPredict {
        #[arg(long, value_parser = parse_deck)]
        deck: DeckSize,
        #[arg(long, value_enum, default_value_t = FamilyArg::Unshuffle)]
        family: FamilyArg,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Whether a word or permutation lies in the generated group.
    GroupMember {
        #[arg(long, value_parser = parse_deck)]
        deck: DeckSize,
        #[arg(long, default_value = "LR")]
        gens: String,
        #[arg(long, value_parser = parse_word, conflicts_with = "perm", required_unless_present = "perm")]
        word: Option<ShuffleWord>,
        /// Permutation in image form, e.g. `2,5,1,4,0,3`.
        #[arg(long)]
        perm: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Compare computed and predicted group data over a range of decks.
    Verify {
        #[arg(long, default_value_t = 2)]
        min: usize,
        #[arg(long, default_value_t = 52)]
        max: usize,
        #[arg(long, value_enum, default_value_t = EngineArg::Auto)]
        engine: EngineArg,
        #[arg(long, default_value_t = DEFAULT_BFS_CAP)]
        cap: usize,
        /// Write the report here.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

fn parse_deck(s: &str) -> Result<DeckSize, String> {
    let n: usize = s.parse().map_err(|e| format!("{e}"))?;
    DeckSize::new(n).map_err(|e| e.to_string())
}

fn parse_word(s: &str) -> Result<ShuffleWord, String> {
    s.parse()
        .map_err(|e: crate::shuffles::ShuffleError| e.to_string())
}

fn parse_gens(list: &str, deck: DeckSize) -> Result<Vec<Permutation>, String> {
    let words: Vec<ShuffleWord> = if list.contains(',') {
        list.split(',').map(parse_word).collect::<Result<_, _>>()?
    } else {
        parse_word(list)?
            .symbols()
            .iter()
            .map(|&s| ShuffleWord::from_symbols(vec![s]))
            .collect()
    };
    if words.is_empty() {
        return Err("no generators given".into());
    }
    Ok(words.iter().map(|w| word_to_permutation(w, deck)).collect())
}

fn join(v: &[usize]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

enum Failure {
    Usage(String),
    Infeasible(String),
}

impl From<GroupError> for Failure {
    fn from(e: GroupError) -> Self {
        match e {
            GroupError::CapExceeded { .. } | GroupError::DegreeTooLarge(_) => {
                Failure::Infeasible(e.to_string())
            }
            other => Failure::Usage(other.to_string()),
        }
    }
}

/// Parses `args` (including the program name) and executes the command.
/// Returns the process exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(err, "{e}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{e}");
                EXIT_OK
            };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Infeasible(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_INFEASIBLE
        }
    }
}

fn write_steps(out: &mut dyn Write, deck: DeckSize, word: &ShuffleWord) -> std::io::Result<()> {
    writeln!(
        out,
        "start: {}",
        join(&(0..deck.cards()).collect::<Vec<_>>())
    )?;
    for (sym, arrangement) in arrangement_steps(word, deck) {
        writeln!(out, "{sym}: {}", join(&arrangement))?;
    }
    Ok(())
}

fn steps_json(deck: DeckSize, word: &ShuffleWord) -> Vec<serde_json::Value> {
    arrangement_steps(word, deck)
        .into_iter()
        .map(|(s, a)| json!({ "symbol": s.to_string(), "deck": a }))
        .collect()
}

fn print_json(out: &mut dyn Write, value: &serde_json::Value) -> std::io::Result<()> {
    writeln!(
        out,
        "{}",
        serde_json::to_string_pretty(value).expect("json value")
    )
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32, Failure> {
    let io = |e: std::io::Error| Failure::Usage(format!("output error: {e}"));
    match command {
        Command::Shuffle {
            deck,
            word,
            show_steps,
            format,
        } => {
            let arrangement = word_to_permutation(&word, deck).arrangement();
            match format {
                Format::Text if show_steps => write_steps(out, deck, &word).map_err(io)?,
                Format::Text => writeln!(out, "{}", join(&arrangement)).map_err(io)?,
                Format::Json => print_json(
                    out,
                    &json!({
                        "deck": deck.cards(),
                        "word": word.to_string(),
                        "arrangement": arrangement,
                        "steps": steps_json(deck, &word),
                    }),
                )
                .map_err(io)?,
            }
        }
        Command::Perm {
            deck,
            symbol,
            format,
        } => {
            let p = word_to_permutation(&symbol, deck);
            match format {
                PermFormat::Images => writeln!(out, "{p}").map_err(io)?,
                PermFormat::Cycles => writeln!(out, "{}", p.to_cycle_string()).map_err(io)?,
                PermFormat::Json => print_json(
                    out,
                    &json!({
                        "deck": deck.cards(),
                        "word": symbol.to_string(),
                        "images": p.images(),
                        "cycles": p.to_cycle_string(),
                        "arrangement": p.arrangement(),
                    }),
                )
                .map_err(io)?,
            }
        }
        Command::Order { deck, word, format } => {
            let order = word_to_permutation(&word, deck)
                .element_order()
                .map_err(|e| Failure::Usage(e.to_string()))?;
            let formula = match word.symbols() {
                [s] if !s.inverted && s.letter == Letter::L => {
                    Some(shuffle_order(Stack::Left, deck))
                }
                [s] if !s.inverted && s.letter == Letter::R => {
                    Some(shuffle_order(Stack::Right, deck))
                }
                _ => None,
            };
            match format {
                Format::Text => {
                    writeln!(out, "{order}").map_err(io)?;
                    if let Some(f) = formula {
                        writeln!(out, "formula: {f}").map_err(io)?;
                    }
                }
                Format::Json => print_json(
                    out,
                    &json!({
                        "deck": deck.cards(),
                        "word": word.to_string(),
                        "order": order,
                        "formula_order": formula,
                    }),
                )
                .map_err(io)?,
            }
            if formula.is_some_and(|f| f != order) {
                return Ok(EXIT_MISMATCH);
            }
        }
        Command::Swap { deck, a, b, format } => {
            let word = unshuffle_swap_word_for_deck(a, b, deck)
                .map_err(|e| Failure::Usage(e.to_string()))?;
            match format {
                Format::Text => {
                    writeln!(out, "{word}").map_err(io)?;
                    write_steps(out, deck, &word).map_err(io)?;
                }
                Format::Json => print_json(
                    out,
                    &json!({
                        "deck": deck.cards(),
                        "a": a,
                        "b": b,
                        "word": word.to_string(),
                        "steps": steps_json(deck, &word),
                    }),
                )
                .map_err(io)?,
            }
        }
        Command::Elmsley {
            deck,
            target,
            format,
        } => {
            let word =
                perfect_elmsley_word(target, deck).map_err(|e| Failure::Usage(e.to_string()))?;
            match format {
                Format::Text => {
                    writeln!(out, "{word}").map_err(io)?;
                    write_steps(out, deck, &word).map_err(io)?;
                }
                Format::Json => print_json(
                    out,
                    &json!({
                        "deck": deck.cards(),
                        "target": target,
                        "word": word.to_string(),
                        "steps": steps_json(deck, &word),
                    }),
                )
                .map_err(io)?,
            }
        }
        Command::GroupOrder {
            deck,
            gens,
            engine,
            cap,
            format,
        } => {
            let perms = parse_gens(&gens, deck).map_err(Failure::Usage)?;
            let (engine_name, order) = match engine {
                EngineArg::Bfs => ("bfs", bfs_enumerate(&perms, cap)?.order().into()),
                EngineArg::Auto | EngineArg::Schreier => {
                    ("schreier", schreier_sims(&perms)?.order())
                }
            };
            match format {
                Format::Text => writeln!(out, "{order}").map_err(io)?,
                Format::Json => print_json(
                    out,
                    &json!({
                        "deck": deck.cards(),
                        "gens": gens,
                        "engine": engine_name,
                        "order": order.to_string(),
                    }),
                )
                .map_err(io)?,
            }
        }
        Command::GroupPredict {
            deck,
            family,
            format,
        } => {
            let family = match family {
                FamilyArg::Unshuffle => Family::Unshuffle,
                FamilyArg::Perfect => Family::Perfect,
            };
            let p = predict_group(family, deck);
            match format {
                Format::Text => {
                    writeln!(out, "case: {}", p.case_tag.name()).map_err(io)?;
                    writeln!(out, "order: {}", p.predicted_order).map_err(io)?;
                    writeln!(out, "factored: {}", p.factored).map_err(io)?;
                    writeln!(
                        out,
                        "characterization: {}",
                        p.characterization.description()
                    )
                    .map_err(io)?;
                }
                Format::Json => print_json(
                    out,
                    &json!({
                        "deck": deck.cards(),
                        "family": family.name(),
                        "n": p.n,
                        "case_tag": p.case_tag.name(),
                        "predicted_order": p.predicted_order.to_string(),
                        "factored": p.factored,
                        "characterization": p.characterization.description(),
                    }),
                )
                .map_err(io)?,
            }
        }
        Command::GroupMember {
            deck,
            gens,
            word,
            perm,
            format,
        } => {
            let perms = parse_gens(&gens, deck).map_err(Failure::Usage)?;
            let candidate = match (word, perm) {
                (Some(w), _) => word_to_permutation(&w, deck),
                (None, Some(p)) => p
                    .parse::<Permutation>()
                    .map_err(|e| Failure::Usage(e.to_string()))?,
                (None, None) => return Err(Failure::Usage("give --word or --perm".into())),
            };
            let member = schreier_sims(&perms)?.contains(&candidate)?;
            match format {
                Format::Text => writeln!(out, "{member}").map_err(io)?,
                Format::Json => print_json(
                    out,
                    &json!({
                        "deck": deck.cards(),
                        "gens": gens,
                        "permutation": candidate.to_string(),
                        "member": member,
                    }),
                )
                .map_err(io)?,
            }
        }
        Command::Verify {
            min,
            max,
            engine,
            cap,
            out: path,
            format,
        } => {
            if min > max {
                return Err(Failure::Usage(format!("--min {min} exceeds --max {max}")));
            }
            let decks = (min..=max)
                .filter(|d| d % 2 == 0)
                .map(DeckSize::new)
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| Failure::Usage(e.to_string()))?;
            if decks.is_empty() {
                return Err(Failure::Usage(format!(
                    "no even deck sizes in {min}..={max}"
                )));
            }
            let opts = VerifyOptions {
                engine: match engine {
                    EngineArg::Auto => Engine::Auto,
                    EngineArg::Bfs => Engine::Bfs,
                    EngineArg::Schreier => Engine::Schreier,
                },
                cap,
            };
            let records = verify(&decks, opts);
            if let Some(path) = &path {
                write_report(&records, path).map_err(|e| Failure::Usage(e.to_string()))?;
            }
            match format {
                Format::Text => {
                    for r in &records {
                        let status = if r.all_checks_pass() {
                            "ok"
                        } else if r.is_infeasible() {
                            "infeasible"
                        } else {
                            "MISMATCH"
                        };
                        writeln!(
                            out,
                            "{:>3} {:<9} {:<12} {:<8} computed {} predicted {} ({}) {status}",
                            r.two_n,
                            r.family.name(),
                            r.case_tag.name(),
                            format!("{:?}", r.engine_used).to_lowercase(),
                            r.computed_order.as_deref().unwrap_or("-"),
                            r.predicted_order,
                            r.predicted_factored,
                        )
                        .map_err(io)?;
                    }
                }
                Format::Json => {
                    let text =
                        render_report(&records).map_err(|e| Failure::Usage(e.to_string()))?;
                    out.write_all(text.as_bytes()).map_err(io)?;
                }
            }
            return Ok(verify_status(&records));
        }
    }
    Ok(EXIT_OK)
}

/// Mismatches take precedence over infeasible records.
fn verify_status(records: &[VerificationRecord]) -> i32 {
    if records
        .iter()
        .any(|r| !r.all_checks_pass() && !r.is_infeasible())
    {
        EXIT_MISMATCH
    } else if records.iter().any(|r| r.is_infeasible()) {
        EXIT_INFEASIBLE
    } else {
        EXIT_OK
    }
}
