//! End-to-end acceptance run: one line per criterion, exact equality
//! throughout. Runs without the libtest harness so the lines are always
//! printed; any failure makes the process exit nonzero.

use std::process::ExitCode;

use qsl_core::combinat::{in_hmn, weak_compositions, Partition};
use qsl_core::gtmodule::kostant_supertrace_check;
use qsl_core::immanant::ImmanantEngine;
use qsl_core::report::Report;
use qsl_core::suites::{
    confluence_report, hecke_quotient_report, idempotent_report, immanant_paths_report, rtt_report, run_suite,
    yang_baxter_report, Suite, SuiteConfig,
};
use qsl_core::superlinear::SuperSpaceCfg;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn cfg(m: usize, n: usize) -> SuperSpaceCfg {
    SuperSpaceCfg::new(m, n)
}

fn sized(m: usize, n: usize, rmax: Option<usize>, order: Option<usize>) -> SuiteConfig {
    SuiteConfig { m, n, rmax, order }
}

/// Fold a family of reports into one verdict, keeping the first witness.
fn fold(name: &str, reports: impl IntoIterator<Item = Report>) -> Report {
    let mut all = Report::new(name);
    for r in reports {
        if !r.passed() && all.witness.is_none() {
            all.note(format!("first failure in {r}"));
        }
        all.absorb(&r);
    }
    all
}

fn random_words(c: SuperSpaceCfg, count: usize, seed: u64) -> Vec<Vec<(usize, usize)>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let d = c.dim();
    (0..count)
        .map(|_| {
            let len = rng.gen_range(2..=5);
            (0..len).map(|_| (rng.gen_range(1..=d), rng.gen_range(1..=d))).collect()
        })
        .collect()
}

fn criterion(k: usize) -> (&'static str, Report) {
    const SMALL: [(usize, usize); 2] = [(1, 1), (2, 1)];
    match k {
        1 => (
            "Yang-Baxter and Hecke quotient, r = 3",
            fold(
                "c1",
                [(1, 1), (2, 1), (1, 2), (2, 2)]
                    .into_iter()
                    .flat_map(|(m, n)| [yang_baxter_report(cfg(m, n)), hecke_quotient_report(cfg(m, n), 3)]),
            ),
        ),
        2 => (
            "RTT relation entrywise",
            fold(
                "c2",
                [(1, 1), (2, 1), (1, 2)]
                    .into_iter()
                    .map(|(m, n)| rtt_report(cfg(m, n), 2)),
            ),
        ),
        3 => ("idempotent calculus, r <= 4", idempotent_report(4)),
        4 => (
            "immanant path equality r <= 3, vanishing r <= 4",
            fold(
                "c4",
                SMALL.into_iter().map(|(m, n)| immanant_paths_report(cfg(m, n), 3, 4)),
            ),
        ),
        5 => (
            "MacMahon order 4, Newton order 3",
            fold(
                "c5",
                SMALL.into_iter().flat_map(|(m, n)| {
                    let mut v = run_suite(Suite::Macmahon, &sized(m, n, None, Some(4)));
                    v.extend(run_suite(Suite::Newton, &sized(m, n, None, Some(3))));
                    v
                }),
            ),
        ),
        6 => (
            "Goulden-Jackson three ways",
            fold(
                "c6",
                run_suite(Suite::Gj, &sized(1, 1, Some(4), None))
                    .into_iter()
                    .chain(run_suite(Suite::Gj, &sized(2, 1, Some(3), None))),
            ),
        ),
        7 => (
            "Littlewood I/II with LR coefficients, LMW",
            fold(
                "c7",
                run_suite(Suite::Littlewood1, &sized(1, 1, Some(4), None))
                    .into_iter()
                    .chain(run_suite(Suite::Littlewood2, &sized(1, 1, Some(4), None)))
                    .chain(
                        SMALL
                            .into_iter()
                            .flat_map(|(m, n)| run_suite(Suite::Lmw, &sized(m, n, Some(3), None))),
                    ),
            ),
        ),
        8 => (
            "Littlewood III, Berezinian roots, extended determinant",
            fold(
                "c8",
                SMALL
                    .into_iter()
                    .flat_map(|(m, n)| run_suite(Suite::Littlewood3, &sized(m, n, Some(4), None))),
            ),
        ),
        9 => (
            "Hessenberg immanants, r <= 4",
            fold(
                "c9",
                SMALL
                    .into_iter()
                    .flat_map(|(m, n)| run_suite(Suite::Hessenberg, &sized(m, n, Some(4), None))),
            ),
        ),
        10 => (
            "Cayley-Hamilton (1|1)",
            fold("c10", run_suite(Suite::Ch11, &sized(1, 1, None, None))),
        ),
        11 => {
            let mut reps = run_suite(Suite::Kostant, &sized(1, 1, Some(3), None));
            let eng = ImmanantEngine::new(cfg(2, 1));
            let mut r3 = 0;
            for lam in Partition::all(3).into_iter().filter(|l| in_hmn(l, 2, 1)) {
                for mu in weak_compositions(3, 3) {
                    reps.push(kostant_supertrace_check(&lam, &mu, &eng));
                    r3 += 1;
                }
            }
            let mut rep = fold("c11", reps);
            rep.check(r3 > 0, || "no r = 3 case for (2|1)".into());
            ("Kostant weight-space supertrace", rep)
        }
        12 => {
            let mut reps = Vec::new();
            for (m, n) in [(1, 1), (2, 1), (1, 2)] {
                reps.extend(run_suite(Suite::Gt, &sized(m, n, Some(3), None)));
            }
            let adjudications: Vec<&Report> = reps
                .iter()
                .filter(|r| r.identity == "gt-bracket-adjudication")
                .collect();
            let recorded = adjudications
                .iter()
                .all(|r| r.notes.iter().any(|n| n.contains("passes")));
            let mut rep = fold("c12", reps.clone());
            rep.check(!adjudications.is_empty() && recorded, || {
                "bracket adjudication not recorded".into()
            });
            ("Gelfand-Tsetlin module and bracket adjudication", rep)
        }
        13 => (
            "confluence of two reduction strategies, 200 words",
            fold(
                "c13",
                SMALL
                    .into_iter()
                    .enumerate()
                    .map(|(s, (m, n))| confluence_report(cfg(m, n), &random_words(cfg(m, n), 200, 0x5eed + s as u64))),
            ),
        ),
        _ => unreachable!(),
    }
}

fn main() -> ExitCode {
    let mut ok = true;
    for k in 1..=13 {
        let (label, rep) = criterion(k);
        let verdict = if rep.passed() { "PASS" } else { "FAIL" };
        println!(
            "criterion {k:>2}: {verdict}  {label} ({}/{} comparisons)",
            rep.checked - rep.failed,
            rep.checked
        );
        if !rep.passed() {
            ok = false;
            if let Some(w) = &rep.witness {
                println!("    witness: {w}");
            }
            for n in &rep.notes {
                println!("    {n}");
            }
        }
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
