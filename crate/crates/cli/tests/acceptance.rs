//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::process::{Command, Output};
use std::time::{Duration, Instant};

use degen::identities::{
    run_all, verify, verify_gf, verify_limits, IdentityId, IdentityReport, IntRange, ParamGrid,
    Profile,
};
use degen::numbers::{deg_hyperharmonic, validate_stirling_basis, HyperharmonicRoute};
use degen::series::{make_deg_exp, make_deg_log, Sign};
use degen::{LambdaPoly, TruncSeries};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn summarize(reports: &[IdentityReport]) -> Outcome {
    let points: usize = reports.iter().map(|r| r.points_checked).sum();
    let failed: Vec<String> = reports
        .iter()
        .filter(|r| !r.passed())
        .map(|r| {
            let f = &r.failures[0];
            format!(
                "{} ({} failures, first at {}: {} != {})",
                r.id,
                r.failures.len(),
                f.params,
                f.lhs,
                f.rhs
            )
        })
        .collect();
    if failed.is_empty() {
        Ok(format!("{points} exact comparisons"))
    } else {
        Err(failed.join("; "))
    }
}

fn grid(ranges: &[(&str, i64, i64)], order: Option<usize>) -> ParamGrid {
    let mut g = ParamGrid {
        order,
        ..ParamGrid::default()
    };
    for &(name, lo, hi) in ranges {
        g.set_range(name, IntRange::new(lo, hi));
    }
    g
}

fn verify_on(id: IdentityId, g: &ParamGrid) -> Result<IdentityReport, String> {
    verify(id, g).map_err(|e| e.to_string())
}

fn full_suite() -> Outcome {
    let start = Instant::now();
    let reports = run_all(Profile::Full);
    let elapsed = start.elapsed();
    if reports.len() != IdentityId::ALL.len() {
        return Err(format!("{} reports", reports.len()));
    }
    let detail = summarize(&reports)?;
    if elapsed > Duration::from_secs(60) {
        return Err(format!("took {:.1}s", elapsed.as_secs_f64()));
    }
    Ok(format!("{detail}, {:.1}s", elapsed.as_secs_f64()))
}

fn route_agreement() -> Outcome {
    let mut count = 0;
    for n in 0..=20 {
        for r in 0..=6 {
            let rec = deg_hyperharmonic(n, r, HyperharmonicRoute::Recurrence);
            let closed = deg_hyperharmonic(n, r, HyperharmonicRoute::ClosedForm);
            let gf = deg_hyperharmonic(n, r, HyperharmonicRoute::GeneratingFunction);
            if rec != closed || rec != gf {
                return Err(format!("n={n} r={r}: {rec} / {closed} / {gf}"));
            }
            count += 1;
        }
    }
    Ok(format!("{count} (n, r) pairs"))
}

fn eq8() -> Outcome {
    summarize(&[verify_on(
        IdentityId::Eq8Closed,
        &grid(&[("n", 1, 15), ("r", 1, 6)], None),
    )?])
}

fn stirling_gate() -> Outcome {
    match (0..=12).find(|&n| !validate_stirling_basis(n)) {
        None => Ok("n = 0..12".to_string()),
        Some(n) => Err(format!("basis check fails at n={n}")),
    }
}

fn classical_limits() -> Outcome {
    summarize(&[verify_limits(30, 6).map_err(|e| e.to_string())?])
}

fn compositional_inverse() -> Outcome {
    let order = 16;
    let composed = make_deg_exp(&LambdaPoly::one(), Sign::Plus, order)
        .compose(&make_deg_log(Sign::Plus, order))
        .map_err(|e| e.to_string())?;
    let target = &TruncSeries::one(order) + &TruncSeries::t(order);
    if composed != target {
        return Err(format!("e_λ(log_λ(1+t)) =\n{composed}"));
    }
    summarize(&[verify_gf(IdentityId::ExpLogInverse, order, None).map_err(|e| e.to_string())?])
}

fn derivative_checks() -> Outcome {
    let g = grid(&[("N", 1, 4)], Some(24));
    summarize(&[
        verify_on(IdentityId::Eq33_34Deriv, &g)?,
        verify_on(IdentityId::Eq36_37Deriv, &g)?,
    ])
}

fn remark11() -> Outcome {
    summarize(&[verify_on(
        IdentityId::Remark11,
        &grid(&[("n", 0, 15), ("N", 1, 6)], None),
    )?])
}

fn degen(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_degen"))
        .args(args)
        .env_remove("DEGEN_PROFILE")
        .output()
        .expect("run degen")
}

fn cli_determinism() -> Outcome {
    let invocations: [&[&str]; 6] = [
        &[
            "compute",
            "--family",
            "deg-hyperharmonic",
            "--n",
            "0..6",
            "--r",
            "0..3",
        ],
        &[
            "compute",
            "--family",
            "deg-stirling1",
            "--n",
            "0..5",
            "--format",
            "csv",
        ],
        &["verify", "--all"],
        &["verify", "THM9", "--format", "csv"],
        &["table", "hyperharmonic", "--n-max", "6", "--order-max", "3"],
        &["table", "stirling1", "--n-max", "8", "--format", "csv"],
    ];
    for args in invocations {
        let first = degen(args);
        let second = degen(args);
        if !first.status.success() {
            return Err(format!("{args:?} exited with {}", first.status));
        }
        if first.stdout.is_empty() || first.stdout != second.stdout {
            return Err(format!("{args:?} output differs between runs"));
        }
    }

    let clean = degen(&["verify", "THM2"]);
    if clean.status.code() != Some(0) {
        return Err(format!("unmutated THM2 exited with {}", clean.status));
    }
    let mutated = degen(&["verify", "THM2", "--mutate", "thm2-sign"]);
    if mutated.status.code() != Some(1) {
        return Err(format!("mutated THM2 exited with {}", mutated.status));
    }
    let doc: serde_json::Value =
        serde_json::from_slice(&mutated.stdout).map_err(|e| e.to_string())?;
    let first = &doc["reports"][0]["failures"][0];
    if first["params"]["n"] != 1 {
        return Err(format!("first counterexample is {first}"));
    }
    Ok(format!(
        "{} invocations repeated; mutation caught at n=1",
        invocations.len()
    ))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("full identity suite", full_suite),
        ("hyperharmonic route agreement", route_agreement),
        ("EQ8 denominator-cleared", eq8),
        ("Stirling basis gate", stirling_gate),
        ("classical limits", classical_limits),
        ("compositional inverse", compositional_inverse),
        ("derivative checks", derivative_checks),
        ("REMARK11 over Q", remark11),
        ("CLI determinism and mutation", cli_determinism),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {} PASS {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {} FAIL {name}: {detail}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
