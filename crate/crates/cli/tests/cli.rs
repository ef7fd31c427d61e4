//! End-to-end runs of the binary: exit codes, golden outputs, and agreement
//! between text and JSON.

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_permutizer"))
        .args(args)
        .env_remove("PERMUTIZER_MAX_ORDER")
        .env_remove("PERMUTIZER_MAX_LATTICE_NODES")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.push("--json");
    serde_json::from_str(&stdout(&run(&all))).unwrap()
}

/// Compares with `tests/golden/<file>`; `PERMUTIZER_BLESS=1` rewrites it.
fn golden(file: &str, args: &[&str]) {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(file);
    let actual = stdout(&run(args));
    if std::env::var_os("PERMUTIZER_BLESS").is_some() {
        std::fs::write(&path, &actual).unwrap();
    }
    let expected =
        std::fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing {}", path.display()));
    assert_eq!(actual, expected, "{file}");
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["check", "psubnormal", "A4", "gens:(1 2)(3 4)"]), 0);
    assert_eq!(code(&["check", "psubnormal", "L2(7)", "sylow:3"]), 1);
    assert_eq!(code(&["check", "permutable", "S4", "sylow:2"]), 0);
    assert_eq!(code(&["check", "permutable", "A4", "cyclic:(1 2)(3 4)"]), 1);
    assert_eq!(
        code(&["check", "strongly-permutable", "L2(11)", "sylow:2"]),
        1
    );
    assert_eq!(code(&["check", "strongly-permutable", "S4", "sylow:2"]), 0);
    assert_eq!(code(&["check", "quasinormal", "S4", "sylow:2"]), 1);
    assert_eq!(
        code(&["check", "quasinormal", "S4", "gens:(1 2)(3 4),(1 3)(2 4)"]),
        0
    );
    assert_eq!(code(&["permutizer", "A4", "cyclic:(1 2)(3 4)"]), 0);
    assert_eq!(code(&["classify", "S4"]), 0);
    assert_eq!(code(&["lattice", "S3"]), 0);
    assert_eq!(code(&["verify-paper", "--only", "C6"]), 0);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(code(&[]), 2);
    assert_eq!(code(&["frobnicate"]), 2);
    assert_eq!(code(&["classify", "NoSuchGroup"]), 2);
    assert_eq!(code(&["check", "normal", "S4", "sylow:2"]), 2);
    assert_eq!(code(&["check", "psubnormal", "S4", "sylow:4"]), 2);
    assert_eq!(code(&["check", "psubnormal", "A4", "gens:(1 2)"]), 2);
    assert_eq!(code(&["check", "psubnormal", "S3", "bogus"]), 2);
    assert_eq!(code(&["verify-paper", "--only", "C99"]), 2);
    let out = run(&["classify", "NoSuchGroup"]);
    assert!(String::from_utf8(out.stderr)
        .unwrap()
        .contains("unknown group"));
}

#[test]
fn resource_limits_exit_3() {
    assert_eq!(code(&["lattice", "S7"]), 3);
    assert_eq!(code(&["--max-order", "100", "lattice", "S5"]), 3);
    assert_eq!(code(&["--max-lattice-nodes", "10", "lattice", "S4"]), 3);
    assert_eq!(code(&["--max-order", "100", "classify", "S5"]), 3);
    assert_eq!(
        code(&[
            "--max-lattice-nodes",
            "2",
            "check",
            "strongly-permutable",
            "S4",
            "sylow:3"
        ]),
        3
    );
    let out = Command::new(env!("CARGO_BIN_EXE_permutizer"))
        .args(["lattice", "S4"])
        .env("PERMUTIZER_MAX_ORDER", "12")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8(out.stderr).unwrap().contains("max-order"));
}

#[test]
fn documented_examples() {
    let out = stdout(&run(&["check", "psubnormal", "A4", "gens:(1 2)(3 4)"]));
    assert!(out.contains(": true"));
    assert!(out.contains("chain: 2 < 4 < 12"));
    let v = json(&["check", "strongly-permutable", "L2(11)", "sylow:2"]);
    assert_eq!(v["holds"], false);
    assert_eq!(v["failing_overgroup"]["order"], 60);
    let v = json(&["classify", "S4"]);
    assert_eq!(
        (&v["supersoluble"], &v["in_wu"], &v["soluble"]),
        (&Value::Bool(false), &Value::Bool(false), &Value::Bool(true))
    );
    assert_eq!(json(&["classify", "S3"])["supersoluble"], true);
    let v = json(&["classify", "L2(7)"]);
    assert_eq!(
        (&v["soluble"], &v["simple"]),
        (&Value::Bool(false), &Value::Bool(true))
    );
    assert!(stdout(&run(&["classify", "L2(7)"])).contains("simple non-abelian"));
    assert_eq!(
        json(&["lattice", "S3"])["nodes"].as_array().unwrap().len(),
        6
    );
    let v = json(&["verify-paper", "--only", "C6"]);
    assert_eq!(v["claims"][0]["groups"].as_array().unwrap().len(), 3);
    assert_eq!(v["passed"], 1);
}

#[test]
fn text_and_json_agree() {
    let cases: &[(&str, &str, &str)] = &[
        ("psubnormal", "A4", "gens:(1 2)(3 4)"),
        ("psubnormal", "L2(7)", "sylow:3"),
        ("permutable", "A4", "cyclic:(1 2)(3 4)"),
        ("permutable", "L2(7)", "sylow:3"),
        ("strongly-permutable", "S4", "sylow:2"),
        ("strongly-permutable", "L2(9)", "sylow:2"),
        ("quasinormal", "S3", "sylow:3"),
        ("quasinormal", "S3", "sylow:2"),
        ("psubnormal", "L2(8)", "hall:2,7"),
    ];
    for &(predicate, group, subgroup) in cases {
        let args = ["check", predicate, group, subgroup];
        let text = stdout(&run(&args));
        let v = json(&args);
        let holds = v["holds"].as_bool().unwrap();
        assert!(
            text.lines()
                .next()
                .unwrap()
                .ends_with(&format!(": {holds}")),
            "{args:?}"
        );
        assert_eq!(code(&args), if holds { 0 } else { 1 }, "{args:?}");
        assert!(
            text.contains(&format!("(order {})", v["subgroup"]["order"])),
            "{args:?}"
        );
    }
    let text = stdout(&run(&["verify-paper", "--only", "C5,C13"]));
    let v = json(&["verify-paper", "--only", "C5,C13"]);
    for claim in v["claims"].as_array().unwrap() {
        let line = format!(
            "{:<4} {:<7}",
            claim["id"].as_str().unwrap(),
            claim["verdict"]["status"].as_str().unwrap()
        );
        assert!(text.contains(&line), "{line}");
    }
}

#[test]
fn group_files_are_accepted() {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("s3.group");
    std::fs::write(
        &path,
        "# symmetric group of degree 3\nname: my-s3\ndegree: 3\ngens:\n(1 2 3)\n(1 2)\n",
    )
    .unwrap();
    let v = json(&["lattice", path.to_str().unwrap()]);
    assert_eq!(v["group"], "my-s3");
    assert_eq!(v["nodes"].as_array().unwrap().len(), 6);
    assert_eq!(
        code(&["check", "psubnormal", path.to_str().unwrap(), "sylow:2"]),
        0
    );
    let bad = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("bad.group");
    std::fs::write(&bad, "degree: 3\ngens:\n(1 2 4)\n").unwrap();
    assert_eq!(code(&["classify", bad.to_str().unwrap()]), 2);
}

#[test]
fn golden_outputs() {
    golden("lattice_s3.txt", &["lattice", "S3"]);
    golden("lattice_s3.json", &["lattice", "S3", "--json"]);
    golden(
        "psubnormal_a4.txt",
        &[
            "check",
            "psubnormal",
            "A4",
            "gens:(1 2)(3 4)",
            "--certificate",
        ],
    );
    golden(
        "psubnormal_a4.json",
        &["check", "psubnormal", "A4", "gens:(1 2)(3 4)", "--json"],
    );
    golden(
        "strongly_permutable_l2_11.txt",
        &[
            "check",
            "strongly-permutable",
            "L2(11)",
            "sylow:2",
            "--certificate",
        ],
    );
    golden("classify_s4.txt", &["classify", "S4"]);
    golden("classify_s4.json", &["classify", "S4", "--json"]);
    golden("verify_c6_c15.txt", &["verify-paper", "--only", "C6,C15"]);
    golden(
        "verify_c6_c15.json",
        &["verify-paper", "--only", "C6,C15", "--json"],
    );
}
