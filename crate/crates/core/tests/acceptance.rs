//! One line per acceptance criterion. Each criterion is the conjunction of
//! every exact check in the matching verification suite.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use charnum_core::verify::{run_suite, SUITES};

const TITLES: [&str; 10] = [
    "Kervaire-Milnor generators: top Pontryagin classes and signatures",
    "Pontryagin numbers of M1 and M2",
    "Pontryagin numbers of M3 and Ahat(M3, L^2) = -1",
    "F4 fiber class through weight 6",
    "M4 pipeline: p(N8), pullbacks, p(M4), numbers, p1 = 0, Sig = 8",
    "kappa matrix K, det K = -1, decompose inverts kappa",
    "Witten genus of the basis, modular and direct",
    "signature divisibility and constrained gcds",
    "twist sweep on M1: 56 entries divisible by 24",
    "property suites and oracles",
];

const SWEEP_LIMIT: Duration = Duration::from_secs(60);

fn main() -> ExitCode {
    let mut all_passed = true;
    for (n, (suite, title)) in SUITES.iter().zip(TITLES).enumerate() {
        let start = Instant::now();
        let outcome = run_suite(suite);
        let elapsed = start.elapsed();
        let (passed, detail) = match outcome {
            Ok(checks) => {
                let failures: Vec<String> =
                    checks.iter().filter(|c| !c.passed).map(|c| c.line()).collect();
                let mut passed = failures.is_empty() && !checks.is_empty();
                let mut detail = format!("{} checks", checks.len());
                if *suite == "sweep" && elapsed >= SWEEP_LIMIT {
                    passed = false;
                    detail.push_str(", sweep exceeded 60 s");
                }
                for f in failures {
                    detail.push_str("\n    ");
                    detail.push_str(&f);
                }
                (passed, detail)
            }
            Err(e) => (false, format!("error: {e}")),
        };
        all_passed &= passed;
        let status = if passed { "PASS" } else { "FAIL" };
        println!("criterion {:>2} {status}: {title} ({detail})", n + 1);
    }
    if all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
