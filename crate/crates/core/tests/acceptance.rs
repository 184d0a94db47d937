//! Acceptance suite: runs criteria 1-8 and prints one line per criterion.
//! Exits non-zero if any criterion fails.

mod common;

use std::time::{Duration, Instant};

use common::naive_equitable;
use equicolor::bounds::{validate_tables, ClaimStatus};
use equicolor::constructive::Mechanism;
use equicolor::gen::{are_isomorphic, enumerate_family, enumerate_levels, gnp, GenConfig};
use equicolor::graph::named::*;
use equicolor::harness::{run_bound_validation, run_on_corpus, CampaignSpec, ColorPolicy, CorpusSpec, ExceptionPolicy, SolverChoice};
use equicolor::{decide_equitable, decide_proper, FamilySpec, Graph, SolveBudget};

type Outcome = Result<String, String>;

fn check(ok: bool, pass: String, fail: String) -> Outcome {
    if ok {
        Ok(pass)
    } else {
        Err(fail)
    }
}

fn campaign(family: FamilySpec, solver: SolverChoice) -> CampaignSpec {
    let mut s = CampaignSpec::new(family, CorpusSpec::Files { paths: vec![] });
    s.solver = solver;
    s
}

/// Published bound tables for t in 3..=12.
fn criterion_1() -> Outcome {
    let start = Instant::now();
    let report = validate_tables().map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let expect = [
        ("q(4,6)", ClaimStatus::Match),
        ("q(4,7)", ClaimStatus::Match),
        ("q(5,6)", ClaimStatus::AnnotatedMatch),
        ("q(5,7)", ClaimStatus::AnnotatedMatch),
        ("p(5,8)", ClaimStatus::AnnotatedMatch),
        ("p(6,8)", ClaimStatus::Match),
        ("p(7,8)", ClaimStatus::Match),
    ];
    let mut bad = Vec::new();
    for (id, status) in expect {
        match report.claim(id) {
            Some(c) if c.status == status && c.rows.iter().all(|r| r.matches) && c.rows.len() == 10 => {}
            Some(c) => bad.push(format!("{id}: {:?}", c.status)),
            None => bad.push(format!("{id}: missing")),
        }
    }
    let annotated = report.claims.iter().filter(|c| c.status == ClaimStatus::AnnotatedMatch).count();
    check(
        bad.is_empty() && report.all_match() && elapsed < Duration::from_secs(1),
        format!("{} claims reproduced, {annotated} annotated, {elapsed:.2?}", report.claims.len()),
        format!("mismatches {bad:?}, {elapsed:.2?}"),
    )
}

/// Density bounds over exhaustive corpora.
fn criterion_2() -> Outcome {
    let runs = [
        ("triangle-free planar", FamilySpec::triangle_free_planar(), 9),
        ("C4-free planar", FamilySpec::c4_free_planar(), 8),
        ("girth>=6 planar", FamilySpec::planar_with_girth(6), 10),
    ];
    let mut notes = Vec::new();
    let mut violations = 0;
    let mut cube_attains = false;
    for (name, f, n_max) in runs {
        let corpus = CorpusSpec::Exhaustive { n_min: 1, n_max, connected: false, max_edges: None };
        let r = run_bound_validation(&f, &corpus).map_err(|e| e.to_string())?;
        violations += r.critical.len();
        let graphs: usize = r.orders.iter().map(|o| o.graphs).sum();
        notes.push(format!("{name} n<={n_max}: {graphs} graphs"));
        if name.starts_with("triangle") {
            let eight = r.order(8).ok_or("no order-8 graphs")?;
            let cube_present = enumerate_family(&GenConfig::exhaustive(8, f.clone()))
                .map_err(|e| e.to_string())?
                .iter()
                .any(|g| g.size() == 12 && are_isomorphic(g, &cube()).unwrap());
            cube_attains = eight.attained && eight.bound == Some(12) && cube_present;
        }
    }
    check(
        violations == 0 && cube_attains,
        format!("0 violations; cube attains 2n-4 = 12 at n = 8; {}", notes.join(", ")),
        format!("{violations} violations, cube attains bound: {cube_attains}"),
    )
}

/// Connected graphs up to order 8 with m = Δ, exceptions skipped; the
/// listed exceptions are not colorable.
fn criterion_3() -> Outcome {
    let levels = enumerate_levels(&FamilySpec::unrestricted(), 8, true, None).map_err(|e| e.to_string())?;
    let corpus: Vec<Graph> = levels.into_iter().flatten().collect();
    let mut spec = campaign(FamilySpec::unrestricted(), SolverChoice::Exact);
    spec.delta_min = Some(2);
    let r = run_on_corpus(&spec, &corpus, None).map_err(|e| e.to_string())?;
    let c = r.counts;

    let mut exceptions: Vec<Graph> = (3..=8).map(complete).collect();
    exceptions.extend([3, 5, 7, 9].map(cycle));
    exceptions.push(complete_bipartite(3, 3));
    let mut spec = campaign(FamilySpec::unrestricted(), SolverChoice::Both);
    spec.exceptions = ExceptionPolicy::AssertNotColorable;
    let e = run_on_corpus(&spec, &exceptions, None).map_err(|e| e.to_string())?;
    check(
        c.no == 0 && c.exhausted == 0 && r.critical.is_empty() && e.counts.exceptions_confirmed == exceptions.len(),
        format!(
            "{} graphs: {} yes, {} exceptions skipped; {} listed exceptions confirmed not colorable",
            c.corpus, c.yes, c.exceptions_skipped, e.counts.exceptions_confirmed
        ),
        format!("no={} exhausted={} critical={} confirmed={}", c.no, c.exhausted, r.critical.len(), e.counts.exceptions_confirmed),
    )
}

/// Constructive solver over the degree-exact corpora.
fn criterion_4() -> Outcome {
    let runs = [
        ("triangle-free planar", FamilySpec::triangle_free_planar(), 6, 10),
        ("C4-free planar", FamilySpec::c4_free_planar(), 7, 9),
        ("girth>=6 planar", FamilySpec::planar_with_girth(6), 5, 11),
    ];
    let mut notes = Vec::new();
    let mut failures = 0;
    for (name, f, delta, n_max) in runs {
        let f = f.with_max_degree(delta);
        let levels = enumerate_levels(&f, n_max, false, None).map_err(|e| e.to_string())?;
        let corpus: Vec<Graph> = levels.into_iter().flatten().collect();
        let mut spec = campaign(f, SolverChoice::Constructive);
        spec.delta_min = Some(delta);
        let r = run_on_corpus(&spec, &corpus, None).map_err(|e| e.to_string())?;
        failures += r.counts.corpus - r.counts.yes + r.critical.len();
        notes.push(format!("{name} Δ={delta} n<={n_max}: {}/{}", r.counts.yes, r.counts.corpus));
    }
    let summary = notes.join(", ");
    check(failures == 0, format!("all colored and verified; {summary}"), format!("{failures} failures; {summary}"))
}

/// Exact solver against the all-partitions oracle on every graph up to order 7.
fn criterion_5() -> Outcome {
    let levels = enumerate_levels(&FamilySpec::unrestricted(), 7, false, None).map_err(|e| e.to_string())?;
    let (mut checks, mut mismatches) = (0, 0);
    for g in levels.iter().flatten() {
        for k in 1..=g.order() {
            let exact = decide_equitable(g, k, SolveBudget::default()).map_err(|e| e.to_string())?;
            checks += 1;
            if exact.verdict.is_exhausted() || exact.verdict.is_yes() != naive_equitable(g, k) {
                mismatches += 1;
            }
        }
    }
    check(
        mismatches == 0,
        format!("{checks} (graph, k) pairs agree"),
        format!("{mismatches} of {checks} pairs disagree"),
    )
}

/// Δ + 1 colors always suffice on 1000 seeded random graphs.
fn criterion_6() -> Outcome {
    let corpus: Vec<Graph> = (0..1000u64)
        .map(|i| {
            let n = 1 + (i % 12) as usize;
            let p = 0.1 + 0.8 * ((i * 37 % 100) as f64 / 100.0);
            gnp(n, p, 0xC0FFEE + i)
        })
        .collect();
    let mut spec = campaign(FamilySpec::unrestricted(), SolverChoice::Exact);
    spec.colors = ColorPolicy::MaxDegreePlusOne;
    let r = run_on_corpus(&spec, &corpus, None).map_err(|e| e.to_string())?;
    let c = r.counts;
    check(
        c.yes == 1000 && c.corpus == 1000,
        "1000/1000 yes".into(),
        format!("yes={} no={} exhausted={} exceptions={}", c.yes, c.no, c.exhausted, c.exceptions_skipped),
    )
}

/// Order mt, t = 3: a proper m-coloring and at most (m-1)t edges give an
/// equitable one.
fn criterion_7() -> Outcome {
    let t = 3;
    let (mut checked, mut violations) = (0, 0);
    for m in 2..=4 {
        let c = GenConfig::exhaustive(m * t, FamilySpec::unrestricted()).with_max_edges((m - 1) * t);
        for g in enumerate_family(&c).map_err(|e| e.to_string())? {
            if !decide_proper(&g, m, SolveBudget::default()).map_err(|e| e.to_string())?.verdict.is_yes() {
                continue;
            }
            checked += 1;
            if !decide_equitable(&g, m, SolveBudget::default()).map_err(|e| e.to_string())?.verdict.is_yes() {
                violations += 1;
            }
        }
    }
    check(
        violations == 0,
        format!("{checked} graphs of order 6, 9, 12 checked, 0 violations"),
        format!("{violations} violations among {checked}"),
    )
}

/// Every mechanism of the edge recursion fires on the triangle-free planar
/// campaign (connected, n <= 10, m = Δ in 2..=6).
fn criterion_8() -> Outcome {
    let f = FamilySpec::triangle_free_planar().with_max_degree(6);
    let levels = enumerate_levels(&f, 10, true, None).map_err(|e| e.to_string())?;
    let corpus: Vec<Graph> = levels.into_iter().flatten().collect();
    let mut spec = campaign(f, SolverChoice::Constructive);
    spec.delta_min = Some(2);
    let r = run_on_corpus(&spec, &corpus, None).map_err(|e| e.to_string())?;
    let needed = [Mechanism::TrivialMerge, Mechanism::ChainSwap, Mechanism::RepairSplit, Mechanism::FallbackExact];
    let count = |m: Mechanism| r.mechanisms.get(&m).copied().unwrap_or(0);
    let summary: Vec<String> = needed.iter().map(|&m| format!("{m}={}", count(m))).collect();

    // The Δ = 6 slice on its own, for the record.
    let six: Vec<String> = {
        let mut totals = std::collections::BTreeMap::new();
        for rec in r.records.iter().filter(|rec| rec.delta == 6) {
            for (&k, &v) in &rec.mechanisms {
                *totals.entry(k).or_insert(0) += v;
            }
        }
        needed.iter().map(|m| format!("{m}={}", totals.get(m).copied().unwrap_or(0))).collect()
    };
    check(
        needed.iter().all(|&m| count(m) > 0) && r.counts.yes + r.counts.exceptions_skipped == r.counts.corpus,
        format!("{} graphs: {} (Δ=6 alone: {})", r.counts.corpus, summary.join(" "), six.join(" ")),
        format!("missing mechanisms: {} (Δ=6 alone: {})", summary.join(" "), six.join(" ")),
    )
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("table reproduction", criterion_1),
        ("density bounds", criterion_2),
        ("conjecture at small order", criterion_3),
        ("desk-scale theorems, constructive", criterion_4),
        ("oracle equivalence", criterion_5),
        ("Δ+1 colors on random graphs", criterion_6),
        ("sparse proper graphs", criterion_7),
        ("mechanism coverage", criterion_8),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = run();
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("criterion {}: PASS  {name} ({secs:.1}s): {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {}: FAIL  {name} ({secs:.1}s): {detail}", i + 1);
            }
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
    println!("all 8 criteria passed");
}
