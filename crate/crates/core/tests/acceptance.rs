//! One pass/fail line per acceptance criterion C1..C17, followed by checks
//! of filtering, the slow run and report reproducibility. Exits non-zero if
//! any line fails.

use std::process::ExitCode;

use permutizer::verify::{self, Verdict};

fn criteria() -> bool {
    let results = verify::run_claims(&[], false).expect("claim ids are valid");
    let ids: Vec<&str> = results.iter().map(|r| r.id).collect();
    let expected: Vec<String> = (1..=17).map(|i| format!("C{i}")).collect();
    let mut ok = ids == expected;
    if !ok {
        println!("FAIL claim ids {ids:?}");
    }
    for r in &results {
        let mark = match &r.verdict {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Skipped(_) => "SKIP",
        };
        println!(
            "{mark} {:<4} {} checks over {} groups",
            r.id,
            r.checks,
            r.groups.len()
        );
        for note in &r.notes {
            println!("     note: {note}");
        }
        if r.verdict != Verdict::Pass {
            ok = false;
            println!("     {:?}", r.verdict);
            if let Some(cx) = &r.counterexample {
                println!("     counterexample in {}: {:?}", cx.group, cx.observations);
            }
        }
    }
    ok
}

fn c1_including_s6() -> bool {
    let results = verify::run_claims(&["C1"], true).unwrap();
    results.len() == 1
        && results[0].verdict == Verdict::Pass
        && results[0].groups == ["S3", "S4", "S6"]
        && results[0].notes.is_empty()
}

fn filtered_runs() -> bool {
    let c5 = verify::run_claims(&["C5"], false).unwrap();
    let pair = verify::run_claims(&["C13", "C6"], false).unwrap();
    let ids: Vec<&str> = pair.iter().map(|r| r.id).collect();
    c5.len() == 1
        && (c5[0].id, &c5[0].verdict) == ("C5", &Verdict::Pass)
        && ids == ["C6", "C13"]
        && verify::run_claims(&["C18"], false).is_err()
}

fn reports_are_reproducible() -> bool {
    let a = verify::run_claims(&["C6", "C15"], false).unwrap();
    let b = verify::run_claims(&["C6", "C15"], false).unwrap();
    verify::render_json(&a) == verify::render_json(&b)
        && verify::render_text(&a) == verify::render_text(&b)
        && a.iter().all(|r| r.timing_ms.is_none())
}

fn main() -> ExitCode {
    let mut ok = criteria();
    for (name, check) in [
        ("C1 including S6", c1_including_s6 as fn() -> bool),
        ("filtered runs", filtered_runs),
        ("reproducible reports", reports_are_reproducible),
    ] {
        let pass = check();
        println!("{} {name}", if pass { "PASS" } else { "FAIL" });
        ok &= pass;
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
