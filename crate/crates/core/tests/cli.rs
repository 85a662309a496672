use std::process::{Command, Output};

fn helberg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_helberg"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

const CODE: [&str; 8] = ["--q", "3", "--d", "2", "--n", "8", "--r", "23"];

fn with_code<'a>(cmd: &'a str, rest: &[&'a str]) -> Vec<&'a str> {
    let mut v = vec![cmd];
    v.extend_from_slice(&CODE);
    v.extend_from_slice(rest);
    v
}

#[test]
fn weights_table() {
    let out = helberg(&["weights", "--q", "3", "--d", "2", "--count", "10"]);
    assert!(out.status.success());
    let values: Vec<String> = stdout(&out)
        .lines()
        .map(|l| l.split(' ').nth(1).unwrap().to_string())
        .collect();
    assert_eq!(values, ["1", "3", "9", "25", "69", "189", "517", "1413", "3861", "10549"]);
}

#[test]
fn weights_json_and_csv() {
    let out = helberg(&["weights", "--q", "2", "--d", "2", "--count", "3", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["weights"], serde_json::json!(["1", "2", "4"]));
    let out = helberg(&["weights", "--q", "2", "--d", "2", "--count", "3", "--format", "csv"]);
    assert_eq!(stdout(&out), "i,w\n1,1\n2,2\n3,4\n");
}

#[test]
fn check_member() {
    let out = helberg(&with_code("check", &["--word", "12202212"]));
    assert!(out.status.success());
    assert_eq!(stdout(&out), "member, M=3884, residue=23\n");
}

#[test]
fn sizes_text_is_stable() {
    let out = helberg(&["sizes", "--q", "2", "--d", "2", "--n", "7..8"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "n\tN_n\tR_n\n7\t4\t12, 13\n8\t5\t12, 33\n");
    let again = helberg(&["sizes", "--q", "2", "--d", "2", "--n", "7..8"]);
    assert_eq!(out.stdout, again.stdout);
}

#[test]
fn sizes_csv() {
    let out = helberg(&["sizes", "--q", "2", "--d", "2", "--n", "16", "--format", "csv"]);
    assert_eq!(stdout(&out), "n,max_size,residues\n16,30,1283\n");
}

#[test]
fn corrupt_then_decode() {
    let out = helberg(&with_code("corrupt", &["--word", "12202212", "--pattern", "3,5"]));
    assert!(out.status.success());
    assert_eq!(stdout(&out), "120212\n");
    let out = helberg(&with_code("decode", &["--word", "120212"]));
    assert!(out.status.success());
    assert_eq!(stdout(&out), "12202212\n");
}

#[test]
fn random_corruption_is_seeded() {
    let args = with_code("corrupt", &["--word", "12202212", "--random", "2", "--seed", "7", "--format", "json"]);
    let a = helberg(&args);
    let b = helberg(&args);
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    let received = v["received"].as_str().unwrap().to_string();
    assert_eq!(received.len(), 6);
    let out = helberg(&with_code("decode", &["--word", &received]));
    assert_eq!(stdout(&out), "12202212\n");
}

#[test]
fn decode_trace_golden() {
    let out = helberg(&with_code("decode", &["--word", "120212", "--trace"]));
    assert_eq!(
        stdout(&out),
        "12202212\n\
         start c=2 I=3380\n\
         shift P=8 sym=2 I=932\n\
         shift P=7 sym=1 I=484\n\
         shift P=6 sym=2 I=156\n\
         resolve k=2 val=2 P=5 I=18\n\
         shift P=4 sym=0 I=18\n\
         resolve k=1 val=2 P=3 I=0\n"
    );
}

#[test]
fn decode_json_trace_round_trips() {
    let out = helberg(&with_code("decode", &["--word", "1220212", "--trace", "--format", "json"]));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["decoded"], "12202212");
    let steps = v["trace"].as_array().unwrap();
    assert_eq!(steps[0]["step"], "start");
    assert_eq!(steps.last().unwrap()["index"], "0");
}

#[test]
fn algorithms_agree() {
    for alg in ["dm", "oracle", "auto"] {
        let out = helberg(&with_code("decode", &["--word", "120212", "--algorithm", alg]));
        assert_eq!(stdout(&out), "12202212\n", "{alg}");
    }
    let out = helberg(&with_code("decode", &["--word", "1220212", "--algorithm", "d1"]));
    assert_eq!(stdout(&out), "12202212\n");
    let out = helberg(&[
        "decode", "--q", "2", "--d", "2", "--n", "10", "--r", "62", "--word", "11010101", "--algorithm", "d2",
    ]);
    assert_eq!(stdout(&out), "1101011011\n");
}

#[test]
fn undecodable_exits_one() {
    let out = helberg(&with_code("decode", &["--word", "12202211"]));
    assert_eq!(out.status.code(), Some(1));
    let out = helberg(&with_code("decode", &["--word", "12202211", "--algorithm", "oracle"]));
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(helberg(&["weights", "--q", "3"]).status.code(), Some(2));
    assert_eq!(helberg(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(helberg(&with_code("check", &["--word", "1239"])).status.code(), Some(2));
    let out = helberg(&["check", "--q", "3", "--d", "2", "--n", "8", "--r", "3861", "--word", "12202212"]);
    assert_eq!(out.status.code(), Some(2));
    let out = helberg(&["sizes", "--q", "2", "--d", "2", "--n", "30", "--budget", "1000"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_passes_and_reports() {
    let out = helberg(&["verify", "--q", "2", "--d", "2", "--n", "8", "--r", "12", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["pass"], true);
    assert_eq!(v["codebooks"][0]["report"]["codewords"], 5);
    assert_eq!(v["codebooks"][0]["roundtrip"]["failures"], 0);
    let out = helberg(&["verify", "--q", "3", "--d", "2", "--n", "1..6"]);
    assert!(out.status.success());
    assert!(stdout(&out).lines().all(|l| l.starts_with("pass ")));
}

#[test]
fn verify_detects_weak_modulus() {
    // m = 2 is far below w_(n+1), so the construction rejects it.
    let out = helberg(&["verify", "--q", "2", "--d", "2", "--n", "6", "--r", "0", "--m", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("helberg-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("w.txt");
    let out = helberg(&["weights", "--q", "2", "--d", "2", "--count", "2", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "1 1\n2 2\n");
    std::fs::remove_dir_all(&dir).ok();
}
