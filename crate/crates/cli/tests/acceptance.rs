//! End-to-end acceptance run: every criterion of the verification suite plus
//! byte-level reproducibility of `hrschur verify`.

use std::process::Command;
use std::time::{Duration, Instant};

use hrschur::suite::{self, criterion_name, SUITE_CRITERIA};

const SEED: u64 = 42;

fn budget(id: u32) -> Option<Duration> {
    match id {
        1 => Some(Duration::from_secs(1)),
        2 => Some(Duration::from_secs(5)),
        3 => Some(Duration::from_secs(60)),
        11 => Some(Duration::from_secs(300)),
        _ => None,
    }
}

fn verify_bytes(seed: u64, workers: &str) -> Vec<u8> {
    let out = Command::new(env!("CARGO_BIN_EXE_hrschur"))
        .args(["verify", "--seed", &seed.to_string()])
        .env("HRSCHUR_WORKERS", workers)
        .env_remove("HRSCHUR_SEED")
        .output()
        .expect("run hrschur");
    assert!(
        out.status.code() == Some(0) || out.status.code() == Some(2),
        "verify failed to run: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    out.stdout
}

fn main() {
    let mut failed = Vec::new();
    let mut reports = Vec::new();
    for id in SUITE_CRITERIA {
        let start = Instant::now();
        let report = suite::run_criterion(id, SEED).expect("criterion runs");
        let took = start.elapsed();
        let in_time = budget(id).is_none_or(|b| took <= b);
        let ok = report.passed && in_time;
        let mut line = format!(
            "{} criterion {id:>2} {}: {} checks, {} violations, {:.2?}",
            if ok { "PASS" } else { "FAIL" },
            criterion_name(id),
            report.checks,
            report.violations,
            took
        );
        if !in_time {
            line.push_str(&format!(" (budget {:?})", budget(id).unwrap()));
        }
        println!("{line}");
        for r in report.first_failures(3) {
            println!("    {} : {} vs {}", r.instance, r.lhs, r.rhs);
        }
        if !ok {
            failed.push(id);
        }
        reports.push(report);
    }

    let start = Instant::now();
    let first = verify_bytes(SEED, "1");
    let second = verify_bytes(SEED, "2");
    let library = suite::SuiteReport {
        seed: SEED,
        passed: reports.iter().all(|r| r.passed),
        criteria: reports,
    };
    let parsed: serde_json::Value = serde_json::from_slice(&first).expect("verify emits JSON");
    let expected: serde_json::Value = serde_json::from_str(&library.to_json()).unwrap();
    let same = first == second && parsed == expected;
    println!(
        "{} criterion 12 {}: verify --seed {SEED} twice, {} bytes, {:.2?}",
        if same { "PASS" } else { "FAIL" },
        criterion_name(12),
        first.len(),
        start.elapsed()
    );
    if !same {
        failed.push(12);
    }

    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
