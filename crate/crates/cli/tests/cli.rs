use std::process::{Command, Output};

use ford_disc::format::{decode, HEADER_LEN};
use serde_json::Value;

fn ford(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ford-disc"))
        .args(args)
        .env_remove("FORD_DISC_MAX_ORDER")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

#[test]
fn generate_order_three() {
    let o = ford(&["generate", "--order", "3"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "00010111\n");
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("disc=3"), "{err}");
}

#[test]
fn greedy_and_stream_bytes_agree() {
    for n in ["1", "4", "9", "14"] {
        let a = ford(&["generate", "--order", n]);
        let b = ford(&["generate", "--order", n, "--method", "greedy"]);
        assert_eq!(code(&a), 0);
        assert_eq!(a.stdout, b.stdout, "order {n}");
    }
}

#[test]
fn packed_file_roundtrips() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("seq.fdbs");
    let o = ford(&["generate", "--order", "10", "--format", "packed", "--output", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("order=10 length=1024"));
    let bytes = std::fs::read(&path).unwrap();
    assert_eq!(&bytes[..4], b"FDBS");
    assert_eq!(bytes[4], 1);
    assert_eq!(bytes[5], 10);
    assert_eq!(&bytes[6..14], &1024u64.to_le_bytes());
    assert_eq!(bytes.len(), HEADER_LEN + 128);
    let bits = ford(&["generate", "--order", "10"]);
    let decoded = decode(&bytes).unwrap();
    assert_eq!(decoded.order, Some(10));
    assert_eq!(decoded.symbols, decode(&bits.stdout).unwrap().symbols);
}

#[test]
fn generate_exit_codes() {
    assert_eq!(code(&ford(&["generate", "--order", "0"])), 2);
    assert_eq!(code(&ford(&["generate", "--order", "27"])), 3);
    assert_eq!(code(&ford(&["generate", "--order", "3", "--method", "nope"])), 2);
    assert_eq!(code(&ford(&["generate"])), 2);
}

#[test]
fn environment_cap_applies() {
    let o = Command::new(env!("CARGO_BIN_EXE_ford-disc"))
        .args(["generate", "--order", "9"])
        .env("FORD_DISC_MAX_ORDER", "8")
        .output()
        .unwrap();
    assert_eq!(code(&o), 3);
    let o = Command::new(env!("CARGO_BIN_EXE_ford-disc"))
        .args(["generate", "--order", "9"])
        .env("FORD_DISC_MAX_ORDER", "lots")
        .output()
        .unwrap();
    assert_eq!(code(&o), 2);
}

#[test]
fn analyze_blocks_order_five() {
    let o = ford(&["analyze", "--order", "5", "--blocks"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    let rows: Vec<&str> = text.lines().collect();
    assert_eq!(rows[0], "k,length,word_count,skew,max_signed,min_signed");
    assert_eq!(rows.len(), 5);
    assert_eq!(rows[1], "4,5,1,3,4,1");
    let total: i64 = rows[1..].iter().map(|r| r.split(',').nth(1).unwrap().parse::<i64>().unwrap()).sum();
    assert_eq!(total, 30);
}

#[test]
fn analyze_check_passes_on_prime() {
    let o = ford(&["analyze", "--order", "13", "--blocks", "--check"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).lines().last().unwrap().starts_with("# sandwich pass"));
    let o = ford(&["analyze", "--order", "13", "--blocks", "--check", "--format", "json"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["sandwich"]["pass"], true);
    assert_eq!(v["blocks"].as_array().unwrap().len(), 12);
}

#[test]
fn analyze_composite() {
    let o = ford(&["analyze", "--order", "6", "--composite"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).lines().nth(1).unwrap(), "6,10,34,288.000,true");
    let o = ford(&["analyze", "--order", "6", "--blocks"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8(o.stderr).unwrap().contains("--composite"));
    assert_eq!(code(&ford(&["analyze", "--order", "7", "--composite"])), 2);
}

#[test]
fn analyze_summary() {
    let o = ford(&["analyze", "--order", "11"]);
    assert_eq!(stdout(&o).lines().nth(1).unwrap(), "11,222,1038,297");
    let o = ford(&["analyze", "--order", "8", "--format", "json"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["disc"], 36);
}

#[test]
fn counts_table_and_root() {
    let o = ford(&["counts", "--k", "2", "--max-n", "6"]);
    assert_eq!(code(&o), 0);
    let a: Vec<String> = stdout(&o).lines().skip(1).map(|r| r.split(',').nth(2).unwrap().to_string()).collect();
    assert_eq!(a, ["1", "2", "3", "5", "8", "13", "21"]);
    let o = ford(&["counts", "--k", "3", "--rho"]);
    assert_eq!(stdout(&o).lines().nth(1).unwrap().split(',').nth(1), Some("1.839287"));
    assert_eq!(code(&ford(&["counts", "--k", "1"])), 2);
}

#[test]
fn verify_scoped_lemmas() {
    let o = ford(&["verify", "--lemmas", "--k", "9"]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v.as_array().unwrap().iter().all(|r| r["outcome"] != "fail"));
}

#[test]
fn verify_reports_known_counterexample() {
    let o = ford(&["verify", "--lemmas", "--k", "4", "--max-n", "40"]);
    assert_eq!(code(&o), 1);
    assert!(String::from_utf8(o.stderr).unwrap().contains("k=4 n=23"));
}

#[test]
fn verify_detects_injected_fault() {
    let o = ford(&["verify", "--lemmas", "--k", "9", "--max-n", "60", "--inject-fault"]);
    assert_eq!(code(&o), 1);
}

#[test]
fn verify_oracles() {
    let o = ford(&["verify", "--oracles"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn scaling_sweep() {
    let o = ford(&["scaling", "--min", "3", "--max", "12"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 11);
    assert!(text.lines().any(|r| r.starts_with("5,8,")));
    let threaded = ford(&["scaling", "--min", "3", "--max", "12", "--threads", "3"]);
    assert_eq!(threaded.stdout, o.stdout);

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s.csv");
    let o = ford(&["scaling", "--min", "3", "--max", "12", "--csv", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert_eq!(std::fs::read_to_string(&path).unwrap(), text);
}

#[test]
fn scaling_exit_codes() {
    assert_eq!(code(&ford(&["scaling", "--min", "10", "--max", "9"])), 2);
    assert_eq!(code(&ford(&["scaling", "--min", "3", "--max", "31"])), 3);
    assert_eq!(code(&ford(&["scaling", "--min", "3", "--max", "5", "--threads", "0"])), 2);
}

#[test]
fn output_is_deterministic() {
    let args = ["analyze", "--order", "17", "--blocks", "--format", "json"];
    assert_eq!(ford(&args).stdout, ford(&args).stdout);
}
