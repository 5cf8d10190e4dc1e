use std::process::Command;

use unshuffle::cli::{run, EXIT_INFEASIBLE, EXIT_OK, EXIT_USAGE};
use unshuffle::group::schreier_sims;
use unshuffle::report::parse_report;
use unshuffle::shuffles::{generator_permutation, word_to_permutation};
use unshuffle::{DeckSize, Letter, Permutation, ShuffleSymbol, ShuffleWord};

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("unshuffle").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn ok(args: &[&str]) -> String {
    let (code, out, err) = call(args);
    assert_eq!(code, EXIT_OK, "{args:?}: {err}");
    out
}

#[test]
fn reversal_of_six() {
    assert_eq!(
        ok(&["shuffle", "--deck", "6", "--word", "V"]),
        "5,4,3,2,1,0\n"
    );
}

#[test]
fn show_steps_six_cards() {
    let out = ok(&["shuffle", "--deck", "6", "--word", "L", "--show-steps"]);
    assert_eq!(out, "start: 0,1,2,3,4,5\nL: 4,2,0,5,3,1\n");
    let out = ok(&["shuffle", "--deck", "6", "--word", "R", "--show-steps"]);
    assert_eq!(out, "start: 0,1,2,3,4,5\nR: 5,3,1,4,2,0\n");
}

#[test]
fn show_steps_follow_word() {
    let out = ok(&["shuffle", "--deck", "6", "--word", "LR", "--show-steps"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 3);
    assert_eq!(lines[1], "L: 4,2,0,5,3,1");
    let last = ok(&["shuffle", "--deck", "6", "--word", "LR"]);
    assert_eq!(format!("R: {}", last.trim()), lines[2]);
}

#[test]
fn perm_round_trip_all_symbols() {
    for d in [2usize, 6, 10, 52] {
        let deck = DeckSize::new(d).unwrap();
        for letter in [Letter::L, Letter::R, Letter::I, Letter::O, Letter::V] {
            for inverted in [false, true] {
                let sym = ShuffleSymbol { letter, inverted };
                let text = sym.to_string();
                let out = ok(&["perm", "--deck", &d.to_string(), "--symbol", &text]);
                let parsed: Permutation = out.trim().parse().unwrap();
                assert_eq!(parsed, generator_permutation(sym, deck), "{text} at {d}");
            }
        }
    }
}

#[test]
fn perm_cycles_and_json() {
    let out = ok(&["perm", "--deck", "6", "--symbol", "V", "--format", "cycles"]);
    assert_eq!(out, "(0 5)(1 4)(2 3)\n");
    let out = ok(&["perm", "--deck", "6", "--symbol", "L", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["arrangement"], serde_json::json!([4, 2, 0, 5, 3, 1]));
}

#[test]
fn order_with_formula() {
    assert_eq!(
        ok(&["order", "--deck", "52", "--word", "R"]),
        "8\nformula: 8\n"
    );
    assert_eq!(
        ok(&["order", "--deck", "52", "--word", "L"]),
        "52\nformula: 52\n"
    );
    assert_eq!(ok(&["order", "--deck", "6", "--word", "LR"]).trim(), {
        let p = word_to_permutation(&"LR".parse().unwrap(), DeckSize::new(6).unwrap());
        p.element_order().unwrap().to_string()
    });
}

#[test]
fn swap_top_card_to_five() {
    let out = ok(&["swap", "--deck", "8", "--a", "0", "--b", "5"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "RLR");
    assert_eq!(lines[1], "start: 0,1,2,3,4,5,6,7");
    assert_eq!(lines.len(), 5);
    let last: Vec<&str> = lines[4][3..].split(',').collect();
    assert_eq!((last[0], last[5]), ("5", "0"));
}

#[test]
fn swap_needs_power_of_two() {
    let (code, _, err) = call(&["swap", "--deck", "12", "--a", "0", "--b", "5"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.starts_with("error:"));
}

#[test]
fn elmsley_word() {
    let out = ok(&["elmsley", "--deck", "52", "--target", "5"]);
    assert_eq!(out.lines().next(), Some("IOI"));
    let last = out.lines().last().unwrap();
    let arrangement: Vec<usize> = last[3..].split(',').map(|x| x.parse().unwrap()).collect();
    assert_eq!(arrangement[5], 0);
}

#[test]
fn group_orders() {
    assert_eq!(ok(&["group-order", "--deck", "6", "--gens", "LR"]), "48\n");
    assert_eq!(ok(&["group-order", "--deck", "6", "--gens", "IO"]), "24\n");
    assert_eq!(
        ok(&[
            "group-order",
            "--deck",
            "6",
            "--gens",
            "LR",
            "--engine",
            "bfs"
        ]),
        "48\n"
    );
    assert_eq!(ok(&["group-order", "--deck", "24"]), "194641920\n");
    assert_eq!(ok(&["group-order", "--deck", "6", "--gens", "L,R"]), "48\n");
    let deck = DeckSize::new(8).unwrap();
    let gens = ["LR", "V"].map(|w| word_to_permutation(&w.parse().unwrap(), deck));
    let expected = schreier_sims(&gens).unwrap().order();
    assert_eq!(
        ok(&["group-order", "--deck", "8", "--gens", "LR,V"]),
        format!("{expected}\n")
    );
    assert_eq!(ok(&["group-order", "--deck", "8", "--gens", "V"]), "2\n");
}

#[test]
fn bfs_over_cap_is_infeasible() {
    let (code, _, err) = call(&[
        "group-order",
        "--deck",
        "20",
        "--engine",
        "bfs",
        "--cap",
        "1000",
    ]);
    assert_eq!(code, EXIT_INFEASIBLE);
    assert!(err.contains("1000"));
}

#[test]
fn predictions() {
    let out = ok(&["group-predict", "--deck", "24"]);
    assert!(out.contains("order: 194641920"));
    let out = ok(&["group-predict", "--deck", "6", "--family", "perfect"]);
    assert!(out.contains("order: 24"));
    let out = ok(&["group-predict", "--deck", "52", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["n"], 26);
}

#[test]
fn membership() {
    assert_eq!(
        ok(&[
            "group-member",
            "--deck",
            "12",
            "--gens",
            "IO",
            "--word",
            "LRL'"
        ]),
        "true\n"
    );
    assert_eq!(
        ok(&["group-member", "--deck", "6", "--gens", "IO", "--word", "L"]),
        "false\n"
    );
    assert_eq!(
        ok(&["group-member", "--deck", "6", "--perm", "1,0,2,3,4,5"]),
        "false\n"
    );
    let (code, _, _) = call(&["group-member", "--deck", "6", "--perm", "1,1,2,3,4,5"]);
    assert_eq!(code, EXIT_USAGE);
}

#[test]
fn usage_errors() {
    for args in [
        &["shuffle", "--deck", "7", "--word", "L"][..],
        &["shuffle", "--deck", "6", "--word", "X"],
        &["frobnicate"],
        &["verify", "--min", "10", "--max", "4"],
        &["elmsley", "--deck", "6", "--target", "6"],
        &["group-order", "--deck", "6", "--gens", ""],
    ] {
        let (code, _, err) = call(args);
        assert_eq!(code, EXIT_USAGE, "{args:?}");
        assert!(!err.is_empty());
    }
}

#[test]
fn help_and_version_succeed() {
    let (code, out, _) = call(&["--help"]);
    assert_eq!(code, EXIT_OK);
    for verb in [
        "shuffle",
        "perm",
        "order",
        "swap",
        "elmsley",
        "group-order",
        "group-predict",
        "group-member",
        "verify",
    ] {
        assert!(out.contains(verb), "{verb} missing from help");
    }
    assert_eq!(call(&["--version"]).0, EXIT_OK);
}

#[test]
fn verify_json_to_stdout() {
    let out = ok(&["verify", "--min", "6", "--max", "6", "--format", "json"]);
    let report = parse_report(&out).unwrap();
    assert_eq!(report.records.len(), 2);
    assert!(out.contains("\"predicted_order\": \"48\""));
    assert!(out.contains("\"predicted_order\": \"24\""));
    assert!(report.records.iter().all(|r| r.matches));
}

#[test]
fn verify_report_for_24() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    ok(&[
        "verify",
        "--min",
        "24",
        "--max",
        "24",
        "--out",
        path.to_str().unwrap(),
    ]);
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.contains("\"194641920\""));
}

#[test]
fn verify_forced_bfs_is_infeasible() {
    let (code, out, _) = call(&[
        "verify", "--min", "6", "--max", "10", "--engine", "bfs", "--cap", "100",
    ]);
    assert_eq!(code, EXIT_INFEASIBLE);
    assert!(out.contains("infeasible"));
    assert!(out.lines().next().unwrap().ends_with("ok"));
}

#[test]
fn unwritable_report_path() {
    let (code, _, err) = call(&[
        "verify",
        "--min",
        "6",
        "--max",
        "6",
        "--out",
        "/nonexistent/dir/r.json",
    ]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("cannot write"));
}

#[test]
fn binary_exit_statuses() {
    let bin = env!("CARGO_BIN_EXE_unshuffle");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap().status.code();
    assert_eq!(
        status(&["shuffle", "--deck", "6", "--word", "V"]),
        Some(EXIT_OK)
    );
    assert_eq!(
        status(&["shuffle", "--deck", "5", "--word", "V"]),
        Some(EXIT_USAGE)
    );
    assert_eq!(
        status(&[
            "group-order",
            "--deck",
            "20",
            "--engine",
            "bfs",
            "--cap",
            "10"
        ]),
        Some(EXIT_INFEASIBLE)
    );
    let out = Command::new(bin)
        .args(["shuffle", "--deck", "6", "--word", "L'"])
        .output()
        .unwrap();
    let inverse = word_to_permutation(
        &ShuffleWord::letter(Letter::L).inverse(),
        DeckSize::new(6).unwrap(),
    );
    assert_eq!(
        String::from_utf8(out.stdout).unwrap().trim(),
        inverse
            .arrangement()
            .iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(",")
    );
}
