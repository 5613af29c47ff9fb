//! Acceptance criteria 1-10, one PASS/FAIL line each. Runs without the
//! libtest harness so the lines always reach stdout.

mod common;

use std::time::{Duration, Instant};

use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRunner};

use typeii24::codes24::{compute_h, CodeDatabase};
use typeii24::enumerator::{cached_weight_enumerator, weight_enumerator};
use typeii24::gf2::{build_d, build_e7, build_e8, BinaryCode};
use typeii24::poly::{int, rat, MultiPoly, Rational};
use typeii24::theorems::{Suite, VerificationReport, Verifier};

const CRITERION_1_BUDGET: Duration = Duration::from_secs(1);
const CRITERION_2_BUDGET: Duration = Duration::from_secs(1);
const CRITERION_5_BUDGET: Duration = Duration::from_secs(1);
const CRITERION_6_BUDGET: Duration = Duration::from_secs(15 * 60);
const CRITERION_8_BUDGET: Duration = Duration::from_secs(10 * 60);
const PROPERTY_CASES: u32 = 64;

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        ok,
        detail: detail.into(),
    }
}

fn timed(budget: Duration, f: impl FnOnce() -> Outcome) -> Outcome {
    let start = Instant::now();
    let mut o = f();
    let elapsed = start.elapsed();
    let in_budget = elapsed < budget;
    o.detail = format!("{}; {:.3}s (budget {}s)", o.detail, elapsed.as_secs_f64(), budget.as_secs());
    if !in_budget {
        o.detail.push_str(" OVER BUDGET");
    }
    o.ok &= in_budget;
    o
}

fn g1(s: &str) -> MultiPoly {
    MultiPoly::parse(1, s).expect("golden polynomial parses")
}

fn all_pass(reports: &[VerificationReport]) -> Outcome {
    let failed: Vec<&str> = reports.iter().filter(|r| !r.passed()).map(|r| r.claim.as_str()).collect();
    outcome(
        failed.is_empty() && !reports.is_empty(),
        if failed.is_empty() {
            format!("{} checks", reports.len())
        } else {
            format!("{} of {} checks failed: {}", failed.len(), reports.len(), failed.join(", "))
        },
    )
}

fn criterion_1() -> Outcome {
    let golden: [(&str, BinaryCode, &str); 9] = [
        ("d4", build_d(4).unwrap(), "x^4 + y^4"),
        ("d6", build_d(6).unwrap(), "x^6 + 3*x^2*y^4"),
        ("e7", build_e7(), "x^7 + 7*x^3*y^4"),
        ("d8", build_d(8).unwrap(), "x^8 + 6*x^4*y^4 + y^8"),
        ("e8", build_e8(), "x^8 + 14*x^4*y^4 + y^8"),
        ("d10", build_d(10).unwrap(), "x^10 + 10*x^6*y^4 + 5*x^2*y^8"),
        ("d12", build_d(12).unwrap(), "x^12 + 15*x^8*y^4 + 15*x^4*y^8 + y^12"),
        ("d16", build_d(16).unwrap(), "x^16 + 28*x^12*y^4 + 70*x^8*y^8 + 28*x^4*y^12 + y^16"),
        (
            "d24",
            build_d(24).unwrap(),
            "x^24 + 66*x^20*y^4 + 495*x^16*y^8 + 924*x^12*y^12 + 495*x^8*y^16 + 66*x^4*y^20 + y^24",
        ),
    ];
    let bad: Vec<&str> = golden
        .iter()
        .filter(|(_, code, want)| weight_enumerator(code, 1).ok() != Some(g1(want)))
        .map(|(name, _, _)| *name)
        .collect();
    outcome(bad.is_empty(), format!("9 component enumerators, mismatches: {bad:?}"))
}

fn criterion_2(db: &CodeDatabase) -> Outcome {
    let w5 = weight_enumerator(&db.get(5).unwrap().code, 1).unwrap();
    let w7 = weight_enumerator(&db.get(7).unwrap().code, 1).unwrap();
    let ok5 = w5 == g1("x^24 + 66*x^20*y^4 + 495*x^16*y^8 + 2972*x^12*y^12 + 495*x^8*y^16 + 66*x^4*y^20 + y^24");
    let ok7 = w7 == g1("x^24 + 759*x^16*y^8 + 2576*x^12*y^12 + 759*x^8*y^16 + y^24");
    outcome(ok5 && ok7, format!("C5: {ok5}, C7: {ok7}"))
}

fn criterion_3(db: &CodeDatabase) -> Outcome {
    let expected: [Rational; 9] = [
        rat(5, 4),
        int(1),
        rat(3, 4),
        rat(1, 2),
        rat(11, 4),
        rat(1, 4),
        int(0),
        rat(7, 4),
        rat(7, 4),
    ];
    let got: Vec<Rational> = db.records().iter().map(|r| compute_h(&r.code).unwrap()).collect();
    let text: Vec<String> = got.iter().map(|h| h.to_string()).collect();
    outcome(got == expected, format!("h = ({})", text.join(", ")))
}

fn criterion_4(v: &Verifier) -> Outcome {
    let mut reports = Vec::new();
    for i in 1..=9 {
        reports.push(v.verify_thm1_identity(i).unwrap());
    }
    let pairs = v.admissible_pairs();
    for &(a, b) in &pairs {
        for i in 1..=9 {
            reports.push(v.verify_thm1_lagrange(i, a, b).unwrap());
        }
    }
    let mut o = all_pass(&reports);
    o.detail = format!("{} over 9 identities and {} (alpha, beta) pairs", o.detail, pairs.len());
    o
}

fn criterion_5(db: &CodeDatabase) -> Outcome {
    // the budget covers building a verifier; enumerators may come from the process cache
    let v = Verifier::new(db.clone()).unwrap();
    let mut reports = Vec::new();
    for i in 1..=8 {
        for j in i + 1..=8 {
            reports.push(v.verify_thm1_congruence(i, j).unwrap());
        }
    }
    all_pass(&reports)
}

fn criterion_6(v: &Verifier) -> Outcome {
    let reports = v.run(Suite::Thm2).unwrap();
    // phi consistency belongs to criterion 7
    let reports: Vec<VerificationReport> = reports.into_iter().filter(|r| !r.claim.starts_with("phi/")).collect();
    let dets = reports.iter().filter(|r| r.claim.starts_with("cor2.det/")).count();
    let mut o = all_pass(&reports);
    o.detail = format!("{} including {dets} determinant triples", o.detail);
    o
}

fn criterion_7(v: &Verifier) -> Outcome {
    all_pass(&(1..=9).map(|i| v.verify_phi_consistency(i).unwrap()).collect::<Vec<_>>())
}

fn criterion_8(v: &Verifier) -> Outcome {
    let r = v.verify_genus3_remark().unwrap();
    let text = match &r.witness {
        Some(typeii24::theorems::Witness::Detail { text }) => text.clone(),
        _ => String::new(),
    };
    outcome(r.passed(), text)
}

fn criterion_9(db: &CodeDatabase) -> Outcome {
    let rebuilt = CodeDatabase::reconstruct().unwrap();
    let mut bad = Vec::new();
    for (a, b) in db.records().iter().zip(rebuilt.records()) {
        for g in 1..=2 {
            let wa = cached_weight_enumerator(&a.code, g).unwrap();
            let wb = cached_weight_enumerator(&b.code, g).unwrap();
            if a.index != b.index || wa != wb {
                bad.push(format!("C{} genus {g}", a.index));
            }
        }
    }
    outcome(bad.is_empty(), format!("9 records x genus 1, 2; mismatches: {bad:?}"))
}

fn run_property<S: Strategy>(
    name: &str,
    cases: u32,
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Result<(), String> {
    let mut runner = TestRunner::new(Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    });
    runner.run(&strategy, test).map_err(|e| format!("{name}: {e}"))
}

fn criterion_10() -> Outcome {
    let n = PROPERTY_CASES;
    let results = [
        run_property("ring axioms", n, (common::arb_poly(1), common::arb_poly(1), common::arb_poly(1)), |(p, q, r)| {
            common::ring_axioms(&p, &q, &r)
        }),
        run_property("ring axioms genus 2", n, (common::arb_poly(2), common::arb_poly(2), common::arb_poly(2)), |(p, q, r)| {
            common::ring_axioms(&p, &q, &r)
        }),
        run_property("phi", n, (common::arb_poly(2), common::arb_poly(2)), |(p, q)| {
            common::phi_homomorphism(&p, &q)
        }),
        run_property("coefficient of sum", n, (common::arb_poly(2), common::arb_poly(2), prop::collection::vec(0u32..4, 4)), |(p, q, e)| {
            common::coefficient_of_sum(&p, &q, &e)
        }),
        run_property("code structure", n, common::arb_rows(12), |(len, rows)| {
            common::code_structure(len, &rows)
        }),
        run_property("direct sum", n, (common::arb_code(6), common::arb_code(6)), |(a, b)| {
            common::direct_sum_weights(&a, &b)
        }),
        run_property("product rule", n, (common::arb_code(6), common::arb_code(6), 1usize..=2), |(a, b, g)| {
            common::product_rule(&a, &b, g)
        }),
        run_property("enumerator shape", n, (common::arb_code(8), 1usize..=2), |(c, g)| {
            common::enumerator_shape(&c, g)
        }),
        run_property("enumerator shape genus 3", n / 4, common::arb_code(5), |c| {
            common::enumerator_shape(&c, 3)
        }),
    ];
    let failures: Vec<String> = results.iter().filter_map(|r| r.clone().err()).collect();
    outcome(
        failures.is_empty(),
        if failures.is_empty() {
            format!("{} property suites, {n} cases each", results.len())
        } else {
            failures.join("; ")
        },
    )
}

fn main() {
    let db = CodeDatabase::embedded().expect("embedded data loads");
    let mut results: Vec<(u32, &str, Outcome)> = Vec::new();
    results.push((1, "genus-1 component enumerators", timed(CRITERION_1_BUDGET, criterion_1)));
    results.push((2, "C5 and C7 genus-1 enumerators", timed(CRITERION_2_BUDGET, || criterion_2(&db))));
    results.push((3, "h table", criterion_3(&db)));
    let v = Verifier::new(db.clone()).expect("verifier builds");
    results.push((4, "genus-1 identity and two-point interpolation", criterion_4(&v)));
    results.push((5, "genus-1 congruences mod 6m", timed(CRITERION_5_BUDGET, || criterion_5(&db))));
    results.push((6, "genus-2 suite", timed(CRITERION_6_BUDGET, || criterion_6(&v))));
    results.push((7, "phi consistency", criterion_7(&v)));
    results.push((8, "genus-3 separation of C8 and C9", timed(CRITERION_8_BUDGET, || criterion_8(&v))));
    results.push((9, "embedded data vs glue search", criterion_9(&db)));
    results.push((10, "property suites", criterion_10()));

    let mut failed = 0;
    for (n, name, o) in &results {
        let status = if o.ok { "PASS" } else { "FAIL" };
        failed += usize::from(!o.ok);
        println!("{status} criterion {n}: {name} ({})", o.detail);
    }
    println!("{}/{} criteria passed", results.len() - failed, results.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
