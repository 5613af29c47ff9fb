use std::process::Command;

use typeii24::cli::{run, EXIT_OK, EXIT_USAGE};
use typeii24::codes24::EMBEDDED_DATA;

fn call(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let code = run(std::iter::once("typeii24").chain(args.iter().copied()), &mut out);
    (code, String::from_utf8(out).unwrap())
}

fn binary(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_typeii24"))
        .args(args)
        .env_remove("TYPEII24_DATA")
        .output()
        .unwrap()
}

#[test]
fn enumerate_golay_text() {
    let (code, out) = call(&["enumerate", "C7", "1"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.trim(), "x^24 + 759*x^16*y^8 + 2576*x^12*y^12 + 759*x^8*y^16 + y^24");
    let (_, flag) = call(&["enumerate", "golay", "1", "--format", "text"]);
    assert_eq!(flag, out);
}

#[test]
fn enumerate_json_and_latex() {
    let (code, out) = call(&["enumerate", "d4", "2", "json"]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["genus"], 2);
    assert_eq!(v["terms"].as_array().unwrap().len(), 4);
    let (code, out) = call(&["enumerate", "e8", "1", "latex"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("14x^{4}y^{4}") || out.contains("14 x^{4} y^{4}"), "{out}");
}

#[test]
fn enumerate_refusals() {
    assert_eq!(call(&["enumerate", "C3", "3"]).0, EXIT_USAGE);
    assert_eq!(call(&["enumerate", "C10", "1"]).0, EXIT_USAGE);
    assert_eq!(call(&["enumerate", "d26", "1"]).0, EXIT_USAGE);
    assert_eq!(call(&["enumerate", "e8", "0"]).0, EXIT_USAGE);
}

#[test]
fn decomposable_records_reach_genus_3() {
    let (code, c8) = call(&["enumerate", "C8", "3"]);
    assert_eq!(code, EXIT_OK);
    let (code, c9) = call(&["enumerate", "C9", "3"]);
    assert_eq!(code, EXIT_OK);
    assert_ne!(c8, c9);
}

#[test]
fn verify_genus3_and_pair() {
    let (code, out) = call(&["verify", "genus3"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("PASS genus3"), "{out}");
    assert!(out.ends_with("1/1 checks passed\n"));

    let (code, out) = call(&["verify", "thm1", "--pair", "5", "7"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("PASS thm1.2/i=5,j=7  mod 66:"), "{out}");

    assert_eq!(call(&["verify", "thm1", "--pair", "5", "5"]).0, EXIT_USAGE);
    assert_eq!(call(&["verify", "genus3", "--pair", "1", "2"]).0, EXIT_USAGE);
    assert_eq!(call(&["verify", "everything"]).0, EXIT_USAGE);
}

#[test]
fn verify_json() {
    let (code, out) = call(&["verify", "prop1", "--format", "json"]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v[0]["claim"], "prop1");
    assert_eq!(v[0]["status"], "pass");
    assert_eq!(v[0]["witness"]["kind"], "detail");
}

#[test]
fn tables_match() {
    let (code, out) = call(&["tables"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("all entries match"));
    assert!(out.contains(" 5  d24          11/4   11/4"), "{out}");
}

#[test]
fn corrupted_data_file_is_rejected() {
    let dir = std::env::temp_dir().join(format!("typeii24-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("codes.txt");
    // flip the first bit of the first generator row of record 1
    let mut lines: Vec<String> = EMBEDDED_DATA.lines().map(str::to_string).collect();
    let row = lines.iter().position(|l| l.starts_with("code 1 ")).unwrap() + 1;
    let flipped = if lines[row].starts_with('1') { '0' } else { '1' };
    lines[row].replace_range(0..1, &flipped.to_string());
    std::fs::write(&path, lines.join("\n")).unwrap();

    let out = binary(&["--data", path.to_str().unwrap(), "verify", "thm1"]);
    assert_eq!(out.status.code(), Some(EXIT_USAGE));
    assert!(String::from_utf8_lossy(&out.stderr).contains("error"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn output_does_not_depend_on_thread_count() {
    let one = binary(&["--jobs", "1", "verify", "lagrange"]);
    let four = binary(&["--jobs", "4", "verify", "lagrange"]);
    assert_eq!(one.status.code(), Some(EXIT_OK));
    assert_eq!(one.stdout, four.stdout);
    let one = binary(&["--jobs", "1", "enumerate", "C5", "2", "json"]);
    let four = binary(&["--jobs", "4", "enumerate", "C5", "2", "json"]);
    assert_eq!(one.stdout, four.stdout);
}

#[test]
fn verify_all_covers_every_check_family() {
    let out = binary(&["verify", "all"]);
    assert_eq!(out.status.code(), Some(EXIT_OK));
    let text = String::from_utf8(out.stdout).unwrap();
    for prefix in [
        "table1/", "thm1.1/", "thm1.2/", "thm1.3/", "prop1", "thm2.1", "thm2.2/unfolding", "thm2.2/i=", "phi/",
        "cor1/", "info/cor1/", "cor2/", "cor2.det/", "genus3",
    ] {
        assert!(text.contains(&format!("PASS {prefix}")), "{prefix} missing");
    }
    assert!(!text.contains("FAIL"));
}
