//! End-to-end acceptance: each criterion runs one verification suite at its default ranges,
//! exactly, within a wall-clock budget.

use std::time::{Duration, Instant};

use isingff::report::Kind;
use isingff::verify::{run, suite, Config};

struct Criterion {
    id: u32,
    suite: &'static str,
    what: &'static str,
    limit: Option<Duration>,
}

const fn secs(s: u64) -> Option<Duration> {
    Some(Duration::from_secs(s))
}

const CRITERIA: &[Criterion] = &[
    Criterion { id: 1, suite: "fixtures", what: "stored tables against construction and integrals", limit: secs(60) },
    Criterion { id: 2, suite: "oracle", what: "integral oracle against assembled series", limit: secs(300) },
    Criterion { id: 3, suite: "leading", what: "leading Selberg terms and leading-value laws", limit: secs(60) },
    Criterion { id: 4, suite: "wronskian", what: "Wronskian identity and its powers", limit: secs(60) },
    Criterion { id: 5, suite: "ode", what: "coefficient ODEs, recursions and coupled systems", limit: secs(180) },
    Criterion { id: 6, suite: "operators", what: "operator identities and intertwiners", limit: secs(180) },
    Criterion { id: 7, suite: "cancellation", what: "low-order cancellation", limit: secs(120) },
    Criterion { id: 8, suite: "scaleup", what: "f^(4) construction for N = 1..10", limit: secs(600) },
    Criterion { id: 9, suite: "findings", what: "displayed closed forms tested as stated", limit: None },
];

#[test]
fn acceptance() {
    let mut failed = Vec::new();
    for c in CRITERIA {
        let s = suite(c.suite).expect("registered suite");
        let t = Instant::now();
        let r = run(s.as_ref(), &Config::default());
        let dt = t.elapsed();
        let in_time = c.limit.map_or(true, |l| dt <= l);
        let fatal: Vec<_> = r.failures().collect();
        let ok = fatal.is_empty() && in_time && !r.checks.is_empty();
        let limit = c.limit.map_or("none".to_string(), |l| format!("{}s", l.as_secs()));
        println!(
            "criterion {} [{}] {} ({}): {} rows, {:.2}s (limit {limit})",
            c.id,
            if ok { "PASS" } else { "FAIL" },
            c.suite,
            c.what,
            r.checks.len(),
            dt.as_secs_f64()
        );
        for f in &fatal {
            println!("    failed: {} | {}", f.name, f.detail);
        }
        if c.id == 9 {
            for f in r.checks.iter().filter(|x| x.kind == Kind::Finding) {
                println!("    {}: {} | {}", if f.passed { "holds" } else { "refuted" }, f.name, f.detail);
            }
        }
        if !ok {
            failed.push(c.id);
        }
    }
    assert!(failed.is_empty(), "criteria failed: {failed:?}");
}
