//! One line per acceptance criterion, each with its runtime budget.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use toricount::oracle::random::random_problem;
use toricount::oracle::{
    run_bernstein_suite, run_defect_suite, run_mixed_volume_suite, SuiteSummary,
};
use toricount::{audit_report, count_components, fixtures};

type Criterion = (&'static str, u64, Box<dyn Fn() -> Outcome>);

struct Outcome {
    failures: Vec<String>,
    detail: String,
}

fn main_theorem_fixtures() -> Outcome {
    let cases = [
        (fixtures::p1_fixed_divisor(), 2),
        (fixtures::p2_hyperplane(), 1),
        (fixtures::a2_two_lines(), 1),
        (fixtures::p1xp1_fibers(), 0),
    ];
    let mut failures = Vec::new();
    let mut got = Vec::new();
    for (fx, want) in cases {
        match count_components(&fx.fan, &fx.data) {
            Ok(r) => {
                got.push(format!("{}={}", fx.name, r.total));
                if r.total != BigInt::from(want) {
                    failures.push(format!("{}: expected {want}, got {}", fx.name, r.total));
                }
            }
            Err(e) => failures.push(format!("{}: {e}", fx.name)),
        }
    }
    Outcome {
        failures,
        detail: got.join(" "),
    }
}

fn from_suite(s: SuiteSummary) -> Outcome {
    Outcome {
        detail: format!("{}/{} cases, {} retries", s.passed, s.cases, s.retries),
        failures: s.failures,
    }
}

fn structural_invariants() -> Outcome {
    let mut failures = Vec::new();
    let mut inputs: Vec<(String, _, _)> = fixtures::all()
        .into_iter()
        .map(|fx| (fx.name.to_string(), fx.fan, fx.data))
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for i in 0..50 {
        let (f, d) = random_problem(&mut rng);
        inputs.push((format!("random-{i}"), f, d));
    }
    let n = inputs.len();
    for (name, f, d) in inputs {
        match count_components(&f, &d) {
            Ok(r) => failures.extend(
                audit_report(&f, &r)
                    .into_iter()
                    .map(|v| format!("{name}: {v}")),
            ),
            Err(e) => failures.push(format!("{name}: {e}")),
        }
    }
    Outcome {
        detail: format!("{n} inputs"),
        failures,
    }
}

fn exact_arithmetic() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut failures = Vec::new();
    for i in 0..500 {
        let m = common::random_matrix(&mut rng, 6, 20);
        for check in [
            common::check_hnf,
            common::check_snf,
            common::check_saturation,
        ] {
            if let Err(e) = check(&m) {
                failures.push(format!("matrix {i}: {e}"));
            }
        }
    }
    Outcome {
        detail: "500 matrices".into(),
        failures,
    }
}

fn main() -> ExitCode {
    let criteria: Vec<Criterion> = vec![
        (
            "1 main-theorem fixtures",
            1,
            Box::new(main_theorem_fixtures),
        ),
        (
            "2 mixed volume vs interpolation (200)",
            30,
            Box::new(|| from_suite(run_mixed_volume_suite(1, 200))),
        ),
        (
            "3 resultant count vs mixed volume (50)",
            60,
            Box::new(|| from_suite(run_bernstein_suite(1, 50))),
        ),
        (
            "4 torus count properties (100)",
            30,
            Box::new(|| from_suite(run_defect_suite(1, 100))),
        ),
        (
            "5 structural invariants",
            30,
            Box::new(structural_invariants),
        ),
        ("6 HNF/SNF/saturation (500)", 10, Box::new(exact_arithmetic)),
    ];
    let mut all_ok = true;
    for (name, budget, run) in criteria {
        let start = Instant::now();
        let out = run();
        let took = start.elapsed();
        let in_time = took <= Duration::from_secs(budget);
        let ok = out.failures.is_empty() && in_time;
        all_ok &= ok;
        println!(
            "{} criterion {name}: {} [{:.2}s of {budget}s]",
            if ok { "PASS" } else { "FAIL" },
            out.detail,
            took.as_secs_f64()
        );
        for f in out.failures.iter().take(10) {
            println!("    {f}");
        }
        if !in_time {
            println!("    over the time budget");
        }
    }
    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
