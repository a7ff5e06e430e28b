//! Acceptance criteria, one line per criterion. Exits nonzero if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use noether_cli::config::RunConfig;
use noether_cli::suites::{run_suite, SuiteResult};

struct Criterion {
    id: u32,
    title: &'static str,
    suite: &'static str,
    limit: Duration,
}

const fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

const CRITERIA: [Criterion; 12] = [
    Criterion { id: 1, title: "depth-ideal examples", suite: "depth-examples", limit: secs(10) },
    Criterion { id: 2, title: "ideal-quotient identities", suite: "identities", limit: secs(120) },
    Criterion { id: 3, title: "depth lattice", suite: "depth-lattice", limit: secs(30) },
    Criterion { id: 4, title: "measure classification", suite: "measures", limit: secs(60) },
    Criterion { id: 5, title: "invariant subgroups", suite: "subgroups", limit: secs(60) },
    Criterion { id: 6, title: "Fourier transform of Haar measures", suite: "fourier", limit: secs(30) },
    Criterion { id: 7, title: "center words", suite: "center-words", limit: secs(10) },
    Criterion { id: 8, title: "EL(I^2) inside F(I)", suite: "tits", limit: secs(120) },
    Criterion { id: 9, title: "center of EL/EL(I)", suite: "borevich-vavilov", limit: secs(120) },
    Criterion { id: 10, title: "normal form of conjugates", suite: "normal-form", limit: secs(60) },
    Criterion { id: 11, title: "commutators and predicates", suite: "commutators", limit: secs(60) },
    Criterion { id: 12, title: "character data round trip", suite: "characters", limit: secs(180) },
];

fn line(id: u32, title: &str, ok: bool, detail: &str) {
    println!("criterion {id:>2} {:<4} {title}: {detail}", if ok { "PASS" } else { "FAIL" });
}

fn main() -> ExitCode {
    let cfg = RunConfig::default();
    let mut all = true;
    let mut first: Vec<Option<String>> = Vec::new();
    for c in &CRITERIA {
        let start = Instant::now();
        let result = run_suite(c.suite, &cfg);
        let elapsed = start.elapsed();
        match result {
            Ok(SuiteResult { passed, details, .. }) => {
                let in_time = elapsed <= c.limit;
                let ok = passed && in_time;
                all &= ok;
                let detail = format!(
                    "suite {} {}, {:.2}s (limit {}s)",
                    c.suite,
                    if passed { "passed" } else { "failed" },
                    elapsed.as_secs_f64(),
                    c.limit.as_secs()
                );
                line(c.id, c.title, ok, &detail);
                if !passed {
                    println!("    {details}");
                }
                first.push(Some(serde_json::to_string(&run_suite_json(c.suite, passed, details)).unwrap()));
            }
            Err(e) => {
                all = false;
                line(c.id, c.title, false, &format!("suite {} errored: {e:#}", c.suite));
                first.push(None);
            }
        }
    }

    let start = Instant::now();
    let mut differing = Vec::new();
    for (c, before) in CRITERIA.iter().zip(&first) {
        let again = run_suite(c.suite, &cfg)
            .ok()
            .map(|r| serde_json::to_string(&run_suite_json(c.suite, r.passed, r.details)).unwrap());
        if before.is_none() || again != *before {
            differing.push(c.suite);
        }
    }
    let ok = differing.is_empty();
    all &= ok;
    let detail = if ok {
        format!("all 12 suites byte-identical on rerun, {:.2}s", start.elapsed().as_secs_f64())
    } else {
        format!("reports differ or errored: {}", differing.join(", "))
    };
    line(13, "determinism", ok, &detail);

    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn run_suite_json(name: &str, passed: bool, details: serde_json::Value) -> serde_json::Value {
    SuiteResult { name: name.to_string(), passed, details }.to_json()
}
