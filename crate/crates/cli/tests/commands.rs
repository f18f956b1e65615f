//! The binary, end to end: outputs and exit codes.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_morita-lab"))
}

fn run(dir: &Path, args: &[&str]) -> Output {
    bin().current_dir(dir).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn scratch(name: &str) -> PathBuf {
    let d = std::env::temp_dir().join(format!("morita-lab-{name}-{}", std::process::id()));
    let _ = std::fs::remove_dir_all(&d);
    std::fs::create_dir_all(&d).unwrap();
    d
}

/// Writes the a2-corner ring and its A-modules up to dimension 2; returns
/// the path of `Ae₁`.
fn corner_setup(dir: &Path, field: &str) -> String {
    assert!(run(
        dir,
        &[
            "catalog",
            "a2-corner",
            "--field",
            field,
            "--out",
            "ring.json"
        ]
    )
    .status
    .success());
    let o = run(
        dir,
        &[
            "enumerate",
            "--instance",
            "a2-corner",
            "--field",
            field,
            "--side",
            "a",
            "--out-dir",
            "amods",
        ],
    );
    assert!(o.status.success());
    // the listing follows the file order; Ae₁ has dims [1, 1] and is projective
    let lines: Vec<String> = stdout(&o).lines().skip(1).map(String::from).collect();
    lines
        .iter()
        .enumerate()
        .filter(|(_, l)| l.as_str() == "[1, 1]")
        .map(|(i, _)| format!("amods/class-{i}.json"))
        .find(|p| {
            stdout(&run(dir, &["classify", "--module", p, "--class", "proj"])).trim() == "true"
        })
        .unwrap()
}

#[test]
fn documents_validate_and_are_canonical() {
    let dir = scratch("validate");
    for field in ["3", "Q"] {
        assert!(run(
            &dir,
            &[
                "catalog",
                "nakayama-corner",
                "--field",
                field,
                "--out",
                "n.json"
            ]
        )
        .status
        .success());
        let o = run(&dir, &["validate", "n.json"]);
        assert!(o.status.success());
        assert!(stdout(&o).contains("(canonical)"), "{}", stdout(&o));
    }
    let ae1 = corner_setup(&dir, "3");
    let o = run(
        &dir,
        &[
            "functor",
            "TA",
            "--in",
            &ae1,
            "--morita",
            "ring.json",
            "--out",
            "t.json",
        ],
    );
    assert!(o.status.success());
    let text = std::fs::read_to_string(dir.join("t.json")).unwrap();
    assert!(stdout(&run(&dir, &["validate", "t.json"])).contains("(canonical)"));
    // re-emitting through a functor round trip leaves the bytes alone
    let o = run(&dir, &["functor", "UA", "--in", "t.json"]);
    assert!(o.status.success());
    assert_eq!(std::fs::read_to_string(dir.join("t.json")).unwrap(), text);
}

#[test]
fn command_line_examples() {
    let dir = scratch("examples");
    let ae1 = corner_setup(&dir, "3");
    assert!(run(
        &dir,
        &[
            "functor",
            "ZA",
            "--in",
            &ae1,
            "--morita",
            "ring.json",
            "--out",
            "top.json"
        ]
    )
    .status
    .success());
    assert!(run(
        &dir,
        &[
            "functor",
            "TA",
            "--in",
            &ae1,
            "--morita",
            "ring.json",
            "--out",
            "proj.json"
        ]
    )
    .status
    .success());

    let o = run(
        &dir,
        &["classify", "--module", "top.json", "--class", "mon"],
    );
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "false");
    assert_eq!(
        stdout(&run(
            &dir,
            &["classify", "--module", "proj.json", "--class", "proj"]
        ))
        .trim(),
        "true"
    );
    assert_eq!(
        stdout(&run(
            &dir,
            &[
                "ext",
                "--src",
                "proj.json",
                "--tgt",
                "top.json",
                "--degree",
                "1"
            ]
        ))
        .trim(),
        "0"
    );
    assert_eq!(
        stdout(&run(
            &dir,
            &["ext", "--src", &ae1, "--tgt", &ae1, "--degree", "2"]
        ))
        .trim(),
        "0"
    );

    let o = run(
        &dir,
        &[
            "enumerate",
            "--instance",
            "product",
            "--field",
            "2",
            "--max-dim",
            "1",
        ],
    );
    assert!(stdout(&o).starts_with("3 classes (2 nonzero)"));
    let o = run(
        &dir,
        &[
            "enumerate",
            "--instance",
            "a2-corner",
            "--field",
            "2",
            "--max-dim",
            "2",
        ],
    );
    assert!(stdout(&o).starts_with("19 classes"));
}

#[test]
fn resolve_and_decompose() {
    let dir = scratch("resolve");
    let ae1 = corner_setup(&dir, "3");
    assert!(run(
        &dir,
        &[
            "functor",
            "ZA",
            "--in",
            &ae1,
            "--morita",
            "ring.json",
            "--out",
            "top.json"
        ]
    )
    .status
    .success());
    for kind in [
        "present",
        "pq",
        "approx-c1",
        "approx-c2",
        "approx-c3",
        "approx-c4",
    ] {
        let o = run(
            &dir,
            &[
                "resolve",
                "--module",
                "top.json",
                "--kind",
                kind,
                "--out-dir",
                kind,
            ],
        );
        assert!(
            o.status.success(),
            "{kind}: {}",
            String::from_utf8_lossy(&o.stderr)
        );
        assert!(stdout(&o).contains("exact: true"));
        assert!(run(&dir, &["validate", &format!("{kind}/mid.json")])
            .status
            .success());
    }
    assert!(run(
        &dir,
        &[
            "functor",
            "TA",
            "--in",
            &ae1,
            "--morita",
            "ring.json",
            "--out",
            "proj.json"
        ]
    )
    .status
    .success());
    let o = run(
        &dir,
        &[
            "decompose",
            "--module",
            "proj.json",
            "--kind",
            "delta",
            "--out-dir",
            "parts",
        ],
    );
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).contains("T_A(dims [1, 1])"));
    // (Ae₁; 0) is outside Mon, so it is no Δ-sum
    assert_eq!(
        run(
            &dir,
            &["decompose", "--module", "top.json", "--kind", "delta"]
        )
        .status
        .code(),
        Some(1)
    );
    assert!(run(
        &dir,
        &[
            "functor",
            "HA",
            "--in",
            &ae1,
            "--morita",
            "ring.json",
            "--out",
            "h.json"
        ]
    )
    .status
    .success());
    let o = run(
        &dir,
        &["decompose", "--module", "h.json", "--kind", "nabla"],
    );
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    assert!(stdout(&o).contains("H_A(dims [1, 1])"));
}

#[test]
fn verify_writes_reports_and_sets_exit_codes() {
    let dir = scratch("verify");
    let o = run(
        &dir,
        &[
            "verify",
            "corner-example",
            "--instance",
            "a2-corner",
            "--field",
            "3",
            "--out",
            "r.json",
        ],
    );
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&run(&dir, &["validate", "r.json"])).contains("report of corner-example"));
    let first = std::fs::read_to_string(dir.join("r.json")).unwrap();
    let threads = bin()
        .current_dir(&dir)
        .env("MORITA_LAB_THREADS", "1")
        .args([
            "verify",
            "corner-example",
            "--instance",
            "a2-corner",
            "--field",
            "3",
            "--out",
            "-",
        ])
        .output()
        .unwrap();
    assert_eq!(stdout(&threads), first);

    // preflight: the corner ring is not self-injective
    let o = run(
        &dir,
        &[
            "verify",
            "gorenstein",
            "--instance",
            "a2-corner",
            "--field",
            "3",
        ],
    );
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(
        run(
            &dir,
            &["verify", "char2", "--instance", "a2-corner", "--field", "3"]
        )
        .status
        .code(),
        Some(2)
    );
    assert_eq!(
        run(
            &dir,
            &[
                "verify",
                "nothing",
                "--instance",
                "a2-corner",
                "--field",
                "3"
            ]
        )
        .status
        .code(),
        Some(2)
    );
    assert_eq!(
        run(
            &dir,
            &["verify", "hovey", "--instance", "a2", "--field", "4"]
        )
        .status
        .code(),
        Some(2)
    );
    let o = bin()
        .current_dir(&dir)
        .env("MORITA_LAB_THREADS", "0")
        .args(["validate", "r.json"])
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn malformed_documents_exit_2() {
    let dir = scratch("schema");
    std::fs::write(dir.join("a.json"), "{\"version\": 1}").unwrap();
    std::fs::write(dir.join("b.json"), "not json").unwrap();
    std::fs::write(
        dir.join("c.json"),
        "{\"version\": 9, \"kind\": \"algebra\", \"field\": 3}",
    )
    .unwrap();
    for f in ["a.json", "b.json", "c.json", "missing.json"] {
        assert_eq!(run(&dir, &["validate", f]).status.code(), Some(2), "{f}");
    }
    assert!(run(
        &dir,
        &["catalog", "a2", "--field", "2", "--out", "ring.json"]
    )
    .status
    .success());
    let mut v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.join("ring.json")).unwrap()).unwrap();
    v["M"]["dim"] = serde_json::json!(7);
    std::fs::write(dir.join("ring.json"), v.to_string()).unwrap();
    assert_eq!(run(&dir, &["validate", "ring.json"]).status.code(), Some(2));
}
