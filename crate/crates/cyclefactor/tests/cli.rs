//! Contract tests for the binary: output formats, exit codes, and the
//! budget environment variable. Every test runs the real executable.

use std::process::{Command, Output};

use serde::{Deserialize, Serialize};

const BUDGET_ENV: &str = "CYCLEFACTOR_BRUTE_BUDGET";

/// Runs the binary with a clean budget environment unless a test sets one.
fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cyclefactor"))
        .env_remove(BUDGET_ENV)
        .args(args)
        .output()
        .expect("binary runs")
}

fn run_with_env(args: &[&str], value: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cyclefactor"))
        .env(BUDGET_ENV, value)
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout is utf-8")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("stderr is utf-8")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("process exited normally")
}

#[test]
fn count_plain_golden_values() {
    let cases = [
        (vec!["count", "--n", "3", "--lambda", "2,1", "--mu", "2,1"], "3"),
        (vec!["count", "--n", "5", "--lambda", "5", "--mu", "5", "--method", "hook"], "8"),
        (vec!["count", "--n", "2", "--lambda", "2", "--mu", "2"], "0"),
        (vec!["count", "--n", "1", "--lambda", "1", "--mu", "1", "--method", "brute"], "1"),
        (vec!["count", "--n", "3", "--lambda", "3", "--mu", "1,1,1", "--method", "frobenius"], "1"),
    ];
    for (args, want) in cases {
        let out = run(&args);
        assert_eq!(code(&out), 0, "{args:?}: {}", stderr(&out));
        assert_eq!(stdout(&out), format!("{want}\n"), "{args:?}");
    }
}

#[test]
fn count_json_shape() {
    let out = run(&["count", "--n", "3", "--lambda", "2,1", "--mu", "2,1", "--format", "json"]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        stdout(&out),
        "{\"n\":3,\"lambda\":[2,1],\"mu\":[2,1],\"count\":\"3\",\"method\":\"positive\"}\n"
    );

    // An explicit target class appears in the record; the default does not.
    let out = run(&[
        "count", "--n", "3", "--lambda", "2,1", "--mu", "3", "--nu", "2,1", "--method", "brute",
        "--format", "json",
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        stdout(&out),
        "{\"n\":3,\"lambda\":[2,1],\"mu\":[3],\"nu\":[2,1],\"count\":\"2\",\"method\":\"brute\"}\n"
    );
}

#[test]
fn count_accepts_explicit_full_cycle_target_with_any_method() {
    let out = run(&["count", "--n", "5", "--lambda", "5", "--mu", "5", "--nu", "5"]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    assert_eq!(stdout(&out), "8\n");
}

#[test]
fn usage_errors_exit_2() {
    let bad: [&[&str]; 7] = [
        // malformed partition
        &["count", "--n", "3", "--lambda", "2,x", "--mu", "2,1"],
        // partition weight disagrees with --n
        &["count", "--n", "4", "--lambda", "2,1", "--mu", "2,1"],
        // lambda and mu weights disagree
        &["count", "--n", "3", "--lambda", "2,1", "--mu", "1,1,1,1"],
        // non-cycle target with a cycle-only method
        &["count", "--n", "3", "--lambda", "2,1", "--mu", "3", "--nu", "2,1"],
        // unknown method
        &["count", "--n", "3", "--lambda", "2,1", "--mu", "2,1", "--method", "magic"],
        // unknown format
        &["count", "--n", "3", "--lambda", "2,1", "--mu", "2,1", "--format", "xml"],
        // unknown method in a verify list
        &["verify", "--n-max", "3", "--methods", "positive,bogus"],
    ];
    for args in bad {
        let out = run(args);
        assert_eq!(code(&out), 2, "{args:?}: {}", stderr(&out));
        assert!(!stderr(&out).is_empty(), "{args:?} should explain itself");
    }
    // No subcommand at all: clap's own usage error, same code.
    let out = run(&[]);
    assert_eq!(code(&out), 2);
}

#[test]
fn capacity_errors_exit_3() {
    // Enumeration budget too small for the class being walked.
    let out = run(&[
        "count", "--n", "6", "--lambda", "3,2,1", "--mu", "3,2,1", "--method", "brute",
        "--budget", "10",
    ]);
    assert_eq!(code(&out), 3, "{}", stderr(&out));
    assert!(stderr(&out).contains("budget"), "{}", stderr(&out));

    // Character-table limit for the all-shapes method.
    let out = run(&["count", "--n", "13", "--lambda", "13", "--mu", "13", "--method", "frobenius"]);
    assert_eq!(code(&out), 3, "{}", stderr(&out));

    let out = run(&["table", "--n", "13", "--method", "frobenius"]);
    assert_eq!(code(&out), 3, "{}", stderr(&out));
}

#[test]
fn budget_env_var_is_honored_and_flag_overrides_it() {
    let args = ["count", "--n", "4", "--lambda", "2,2", "--mu", "4", "--method", "brute"];

    // Tiny budget from the environment: refused.
    let out = run_with_env(&args, "2");
    assert_eq!(code(&out), 3, "{}", stderr(&out));

    // Explicit flag wins over the environment.
    let mut with_flag = args.to_vec();
    with_flag.extend(["--budget", "1000"]);
    let out = run_with_env(&with_flag, "2");
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    assert_eq!(stdout(&out), "1\n");

    // Malformed environment value is a usage error, not silently ignored.
    let out = run_with_env(&args, "lots");
    assert_eq!(code(&out), 2, "{}", stderr(&out));
}

#[test]
fn table_small_goldens() {
    let out = run(&["table", "--n", "2"]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        stdout(&out),
        "n,lambda,mu,count\n\
         2,\"2\",\"2\",0\n\
         2,\"2\",\"1,1\",1\n\
         2,\"1,1\",\"2\",1\n\
         2,\"1,1\",\"1,1\",0\n"
    );

    let out = run(&["table", "--n", "1"]);
    assert_eq!(stdout(&out), "n,lambda,mu,count\n1,\"1\",\"1\",1\n");
}

#[test]
fn table_csv_round_trips_and_row_sums_match_class_sizes() {
    let out = run(&["table", "--n", "6"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);

    let mut reader = csv::ReaderBuilder::new().from_reader(text.as_bytes());
    assert_eq!(
        reader.headers().unwrap(),
        &csv::StringRecord::from(vec!["n", "lambda", "mu", "count"])
    );

    // Re-serialize with the writer's own convention; must reproduce the
    // emitted bytes exactly.
    let mut rebuilt = String::from("n,lambda,mu,count\n");
    let mut per_lambda: Vec<(String, u64)> = Vec::new();
    let mut rows = 0;
    for record in reader.records() {
        let record = record.unwrap();
        rebuilt.push_str(&format!(
            "{},\"{}\",\"{}\",{}\n",
            &record[0], &record[1], &record[2], &record[3]
        ));
        let count: u64 = record[3].parse().unwrap();
        match per_lambda.iter_mut().find(|(l, _)| l == &record[1]) {
            Some((_, sum)) => *sum += count,
            None => per_lambda.push((record[1].to_string(), count)),
        }
        rows += 1;
    }
    assert_eq!(rows, 121, "p(6)^2 rows");
    assert_eq!(rebuilt, text);

    // Each lambda-group sums to its class size 6!/z.
    for (lambda, sum) in per_lambda {
        let lam: cyclefactor::Partition = lambda.parse().unwrap();
        assert_eq!(
            cyclefactor::ExactInt::from(sum),
            lam.class_size().unwrap(),
            "lambda = {lambda}"
        );
    }
}

/// Mirror of the library's record layout, used to prove the JSONL output
/// parses into plain serde types and reproduces itself byte-for-byte.
#[derive(Serialize, Deserialize)]
struct Record {
    n: u32,
    lambda: Vec<u32>,
    mu: Vec<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    nu: Option<Vec<u32>>,
    count: String,
    method: String,
}

#[test]
fn table_jsonl_round_trips() {
    let out = run(&["table", "--n", "5", "--format", "jsonl"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let mut lines = 0;
    for line in text.lines() {
        let record: Record = serde_json::from_str(line).unwrap();
        assert_eq!(record.n, 5);
        assert_eq!(record.method, "positive");
        assert!(record.nu.is_none());
        assert_eq!(serde_json::to_string(&record).unwrap(), line);
        lines += 1;
    }
    assert_eq!(lines, 49, "p(5)^2 records");
}

#[test]
fn verify_reports_agreement_and_exits_zero() {
    let out = run(&["verify", "--n-max", "4"]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let text = stdout(&out);
    assert!(
        text.contains("n=1..4: all pairs agree across 3 methods"),
        "{text}"
    );

    let out = run(&["verify", "--n-max", "2", "--methods", "positive,hook"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("all pairs agree across 2 methods"));
}

#[test]
fn bench_prints_factorial_checksum() {
    let out = run(&["bench", "--n", "8", "--method", "brute", "--repeat", "1"]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("pairs = 484"), "{text}");
    assert!(text.contains("checksum: 40320 (= 8!)"), "{text}");

    let out = run(&["bench", "--n", "12", "--method", "positive", "--repeat", "1"]);
    assert!(stdout(&out).contains("checksum: 479001600 (= 12!)"), "{}", stdout(&out));
}
