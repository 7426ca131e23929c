use std::process::{Command, Output};

fn charnum(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_charnum"))
        .args(args)
        .env_remove("CHARNUM_CAP")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn eval_twisted_signature_of_m1() {
    let o = charnum(&["eval", "--manifold", "M1", "--genus", "sig", "--twist", "L^2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "98623488\n");
}

#[test]
fn eval_ahat_tangent_twist() {
    let o = charnum(&["eval", "--manifold", "M1", "--genus", "ahat", "--twist", "T"]);
    assert_eq!(stdout(&o), "-24\n");
}

#[test]
fn eval_witten_of_m2() {
    let o = charnum(&["eval", "--manifold", "M2", "--genus", "witten", "--order", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "q^0\t1\nq^1\t-24\nq^2\t197136\n");
}

#[test]
fn sweep_table_is_complete_and_deterministic() {
    let a = charnum(&["sweep", "--max", "5", "--mod", "24"]);
    let b = charnum(&["sweep", "--max", "5", "--mod", "24"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 57);
    assert_eq!(lines[0], "i\tj\tk\trank\tahat\tahat_mod\tsig\tsig_mod");
    for row in &lines[1..] {
        let cols: Vec<&str> = row.split('\t').collect();
        assert_eq!(cols.len(), 8);
        assert_eq!((cols[5], cols[7]), ("0", "0"), "row {row}");
    }
}

#[test]
fn sweep_json_has_every_row() {
    let o = charnum(&["sweep", "--max", "2", "--mod", "24", "--format", "json"]);
    let rows: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(rows.as_array().unwrap().len(), 10);
}

#[test]
fn decompose_builtin_and_rejects_non_lattice_numbers() {
    let o = charnum(&["decompose", "--manifold", "M4"]);
    assert_eq!(stdout(&o), "(0, 0, 0, 1)\n");

    let dir = std::env::temp_dir().join(format!("charnum-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let off = dir.join("off_lattice.json");
    std::fs::write(&off, r#"{"dim":24,"numbers":{"6":"1"}}"#).unwrap();
    let o = charnum(&["decompose", "--manifold", off.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn bad_manifest_exits_with_2() {
    let dir = std::env::temp_dir().join(format!("charnum-cli-bad-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.json");
    std::fs::write(&bad, "{not json").unwrap();
    let o = charnum(&["eval", "--manifold", bad.to_str().unwrap(), "--genus", "sig"]);
    assert_eq!(o.status.code(), Some(2));
    let o = charnum(&["eval", "--manifold", "no-such-file.json", "--genus", "sig"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn unknown_flags_are_rejected() {
    let o = charnum(&["sweep", "--frobnicate"]);
    assert_eq!(o.status.code(), Some(2));
    let o = charnum(&["divisibility", "--theorem", "9.9"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn signature_divisibility_passes() {
    for t in ["1.2", "1.4"] {
        let o = charnum(&["divisibility", "--theorem", t]);
        assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
        assert!(stdout(&o).lines().all(|l| l.starts_with("PASS")));
    }
}

#[test]
fn failing_three_adic_bound_reports_a_witness() {
    let o = charnum(&["divisibility", "--theorem", "1.5"]);
    let text = stdout(&o);
    assert!(text.contains("PASS sig-lambda2-gcd"));
    if o.status.code() == Some(1) {
        assert!(text.lines().filter(|l| l.starts_with("FAIL")).all(|l| l.contains("witness x = ")));
    }
}

#[test]
fn fiber_class_dump_honours_cap() {
    let o = Command::new(env!("CARGO_BIN_EXE_charnum"))
        .args(["bh", "--dump-fiber-class"])
        .env("CHARNUM_CAP", "2")
        .output()
        .unwrap();
    assert_eq!(stdout(&o), "weight 0: 1\nweight 1: 2*p1\nweight 2: 7/4*p1*p1 - p2\n");
    let o = Command::new(env!("CARGO_BIN_EXE_charnum"))
        .args(["bh", "--dump-fiber-class"])
        .env("CHARNUM_CAP", "zero")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn m4_dump_lists_numbers() {
    let o = charnum(&["bh", "--dump-m4"]);
    let text = stdout(&o);
    for line in ["<p[2,2,2], [M4]> = 3888", "<p[6], [M4]> = 1958", "Sig(M4) = 8"] {
        assert!(text.contains(line), "missing {line}");
    }
}

#[test]
fn verify_single_suite() {
    let o = charnum(&["verify", "--suite", "generators"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("6 checks, 6 passed, 0 failed\n"));
}
