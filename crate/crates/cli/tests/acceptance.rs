//! One line per acceptance criterion; exits nonzero if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use morita_core::homology::{is_projective, is_projective_by_ext, lambda_is_projective};
use morita_core::{Field, Fp};
use morita_lab::catalog::{catalog, CatalogInstance, NakayamaParams};
use morita_lab::report::Report;
use morita_lab::sample::SampleConfig;
use morita_lab::suites::{run_suite, run_suite_on, Universe, SUITES};

fn inst(name: &str, p: u64) -> CatalogInstance<Fp> {
    catalog(name, &Fp::new(p).unwrap(), NakayamaParams::default()).unwrap()
}

/// Runs a suite and checks that it passed and produced every listed claim.
fn suite(name: &str, instance: &CatalogInstance<Fp>, ids: &[&str]) -> Result<String, String> {
    let r = run_suite(name, instance, SampleConfig::default());
    check(&r, ids)
}

fn check(r: &Report, ids: &[&str]) -> Result<String, String> {
    let at = format!("{} on {} over F{}", r.suite, r.instance, r.field);
    if r.preflight_failed() {
        return Err(format!("{at}: preflight failed: {}", r.preflight.join("; ")));
    }
    if let Some(c) = r.failures().next() {
        return Err(format!("{at}: {} failed: {}", c.id, c.witness));
    }
    if let Some(id) = ids.iter().find(|id| r.claim(id).is_none()) {
        return Err(format!("{at}: no claim {id}"));
    }
    Ok(format!("{at}: {} claims", r.claims.len()))
}

fn all(parts: Vec<Result<String, String>>) -> Result<String, String> {
    let mut ok = Vec::new();
    for p in parts {
        ok.push(p?);
    }
    Ok(ok.join("; "))
}

fn within(limit: Duration, f: impl FnOnce() -> Result<String, String>) -> Result<String, String> {
    let t = Instant::now();
    let r = f()?;
    let dt = t.elapsed();
    if dt > limit {
        return Err(format!("took {dt:.2?}, limit {limit:?}"));
    }
    Ok(format!("{r} in {dt:.2?}"))
}

fn corner_example() -> Result<String, String> {
    within(Duration::from_secs(1), || {
        suite(
            "corner-example",
            &inst("a2-corner", 3),
            &[
                "corner/dim-lambda",
                "corner/m-tensor-p1",
                "corner/hom-m-p1",
                "corner/tensors-vanish",
                "corner/sigma-classes",
                "corner/sigma-adjoint",
                "corner/sigma-self-ext",
                "corner/displayed-nonsplit",
                "corner/sigma-pd",
                "corner/top-only",
                "corner/t-a-s2",
                "corner/witness-a",
                "corner/witness-b",
                "corner/witness-c",
                "corner/witness-d",
            ],
        )
    })
}

fn char_two() -> Result<String, String> {
    suite("char2", &inst("a2-corner", 2), &["char2/displayed-splits", "char2/self-ext-dim"])
}

fn gorenstein() -> Result<String, String> {
    let n = inst("nakayama-corner", 3);
    all(vec![
        suite(
            "gorenstein",
            &n,
            &[
                "gorenstein/a-self-injective",
                "gorenstein/b-self-injective",
                "gorenstein/injdim-coresolution",
                "gorenstein/injdim-dual",
                "gorenstein/injdim-routes-agree",
                "gorenstein/gp-is-mon",
                "gorenstein/gi-is-epi",
            ],
        ),
        suite("resolutions", &n, &["resolutions/pq", "resolutions/ij"]),
    ])
}

fn adjunctions() -> Result<String, String> {
    let ids: Vec<String> = ["t-a", "t-b", "h-a", "h-b", "k-a", "k-b", "c-a", "c-b"]
        .iter()
        .map(|s| format!("adjunction/{s}"))
        .collect();
    let ids: Vec<&str> = ids.iter().map(String::as_str).collect();
    all(["a2-corner", "nakayama-corner", "triangular"]
        .iter()
        .map(|i| suite("adjunction", &inst(i, 3), &ids))
        .collect())
}

fn orthogonality() -> Result<String, String> {
    let ids = [
        "orthogonality/left-column",
        "orthogonality/right-column",
        "orthogonality/delta",
        "orthogonality/nabla",
        "compare/t-against-z",
        "compare/z-against-h",
    ];
    all(["a2-corner", "nakayama-corner", "triangular"]
        .iter()
        .map(|i| suite("orthogonality", &inst(i, 3), &ids))
        .collect())
}

fn completeness() -> Result<String, String> {
    let c = ["completeness/c1", "completeness/c2", "completeness/c3", "completeness/c4", "completeness/recipes"];
    let mut tri = c.to_vec();
    tri.extend(["completeness/triangular-right", "completeness/triangular-left"]);
    all(vec![
        suite("completeness", &inst("a2-corner", 3), &c),
        suite("completeness", &inst("nakayama-corner", 3), &c),
        suite("completeness", &inst("triangular", 3), &tri),
    ])
}

fn equivalence() -> Result<String, String> {
    let ids = [
        "equivalence/round-trip",
        "equivalence/hom-dim",
        "equivalence/ses-exactness",
        "equivalence/simple-count",
        "equivalence/regular",
    ];
    all(["a2-corner", "nakayama-corner", "triangular", "product"]
        .iter()
        .map(|i| suite("equivalence", &inst(i, 3), &ids))
        .collect())
}

fn oracle() -> Result<String, String> {
    within(Duration::from_secs(120), || {
        let mut compared = 0;
        let mut modules = 0;
        for name in ["product", "a2-corner"] {
            let i = inst(name, 2);
            let u = Universe::enumerate(&i.data, 2).map_err(|e| e.to_string())?;
            for s in SUITES {
                let sampled = run_suite(s, &i, SampleConfig::default());
                let exhaustive = run_suite_on(s, &i, SampleConfig::default(), &u);
                if sampled.verdicts() != exhaustive.verdicts() || sampled.preflight != exhaustive.preflight {
                    return Err(format!("{s} on {name}: sampled and exhaustive verdicts differ"));
                }
                compared += sampled.claims.len();
            }
            for l in &u.lambda {
                let by_ext = is_projective_by_ext(&l.flatten()).map_err(|e| e.to_string())?;
                if lambda_is_projective(l) != by_ext {
                    return Err(format!("{name}: projectivity of (X {:?}; Y {:?}) disagrees", l.x.dims, l.y.dims));
                }
            }
            for x in u.a.iter().chain(&u.b) {
                if is_projective(x) != is_projective_by_ext(x).map_err(|e| e.to_string())? {
                    return Err(format!("{name}: projectivity of {:?} disagrees", x.dims));
                }
            }
            modules += u.lambda.len() + u.a.len() + u.b.len();
            debug_assert_eq!(i.data.field().characteristic(), 2);
        }
        Ok(format!("{compared} claims agree, projectivity agrees on {modules} modules"))
    })
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Result<String, String>); 8] = [
        ("worked example over F3", corner_example),
        ("the displayed extension splits over F2", char_two),
        ("Gorenstein classes over a self-injective corner", gorenstein),
        ("adjunction identities", adjunctions),
        ("orthogonality biconditionals and compare obligations", orthogonality),
        ("completeness of the induced pairs", completeness),
        ("equivalence with modules over the materialized ring", equivalence),
        ("exhaustive oracle over F2", oracle),
    ];
    let mut failed = 0;
    for (n, (what, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("criterion {}: pass: {what}: {detail}", n + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {}: FAIL: {what}: {detail}", n + 1);
            }
        }
    }
    if failed == 0 {
        println!("acceptance: all 8 criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} of 8 criteria fail");
        ExitCode::FAILURE
    }
}
