//! End-to-end tests of the `homalg` binary: exit codes, report and output
//! destinations, and byte-level determinism.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn exe() -> &'static str {
    env!("CARGO_BIN_EXE_homalg")
}

fn run(args: &[&str]) -> Output {
    Command::new(exe())
        .args(args)
        .output()
        .expect("binary should spawn")
}

fn stdout_str(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout should be UTF-8")
}

fn stderr_str(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("stderr should be UTF-8")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("process should not be signalled")
}

/// Materialize a corpus entry into `dir` via the binary itself.
fn show(dir: &Path, name: &str, sets: &[&str], file: &str) -> PathBuf {
    let path = dir.join(file);
    let mut args = vec!["corpus", "show", name];
    for s in sets {
        args.push("--set");
        args.push(s);
    }
    args.push("-o");
    args.push(path.to_str().unwrap());
    let out = run(&args);
    assert_eq!(code(&out), 0, "corpus show {name} failed: {}", stderr_str(&out));
    path
}

fn parse(text: &str) -> Value {
    serde_json::from_str(text).expect("output should be JSON")
}

#[test]
fn check_pass_writes_report_to_stdout_and_exits_zero() {
    let dir = TempDir::new().unwrap();
    let twisted = show(dir.path(), "malcev4.twisted", &[], "twisted.json");
    let out = run(&["check", twisted.to_str().unwrap(), "--as", "malcev"]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr_str(&out));
    let text = stdout_str(&out);
    assert!(text.ends_with('\n'));
    let report = parse(&text);
    assert_eq!(report["check"], "hom-malcev-four-var");
    assert_eq!(report["status"], "pass");
    assert_eq!(report["witness"], Value::Null);
    // 16 antisymmetry pairs plus 256 identity quadruples.
    assert_eq!(report["tuples_checked"], 272);

    // The other identity verbs accept the same file.
    for kind in ["malcev-jacobian", "malcev-admissible"] {
        let out = run(&["check", twisted.to_str().unwrap(), "--as", kind]);
        assert_eq!(code(&out), 0, "--as {kind} stderr: {}", stderr_str(&out));
    }
}

#[test]
fn check_fail_exits_one_with_minimal_witness() {
    let dir = TempDir::new().unwrap();
    let good = show(dir.path(), "malcev4", &[], "m4.json");
    let mut value: Value =
        serde_json::from_str(&std::fs::read_to_string(&good).unwrap()).unwrap();
    let entries = value["products"]["mul"].as_array_mut().unwrap();
    let entry = entries
        .iter_mut()
        .find(|e| e[0] == 1 && e[1] == 2 && e[2] == 3)
        .expect("the (1,2,3) structure constant exists");
    entry[3] = Value::String("5".into());
    let broken = dir.path().join("broken.json");
    std::fs::write(&broken, serde_json::to_string(&value).unwrap()).unwrap();

    let out = run(&["check", broken.to_str().unwrap(), "--as", "malcev"]);
    assert_eq!(code(&out), 1);
    let report = parse(&stdout_str(&out));
    assert_eq!(report["status"], "fail");
    let witness = &report["witness"];
    assert!(witness.is_object(), "failing checks carry a witness");
    assert!(witness["tuple"].is_array());
    assert!(witness["lhs"] != witness["rhs"]);

    // --report writes the same bytes to a file and silences stdout.
    let report_path = dir.path().join("report.json");
    let filed = run(&[
        "check",
        broken.to_str().unwrap(),
        "--as",
        "malcev",
        "--report",
        report_path.to_str().unwrap(),
    ]);
    assert_eq!(code(&filed), 1);
    assert!(stdout_str(&filed).is_empty());
    assert_eq!(std::fs::read(&report_path).unwrap(), out.stdout);
}

#[test]
fn construct_round_trips_match_the_corpus_byte_for_byte() {
    let dir = TempDir::new().unwrap();
    let base = show(dir.path(), "malcev4", &[], "m4.json");
    let gamma = show(dir.path(), "malcev4.alpha", &[], "a4.json");
    let expected = show(dir.path(), "malcev4.twisted", &[], "expected.json");

    let twisted = dir.path().join("twisted.json");
    let out = run(&[
        "construct",
        "yau-twist",
        base.to_str().unwrap(),
        "--gamma",
        gamma.to_str().unwrap(),
        "-o",
        twisted.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr_str(&out));
    assert_eq!(
        std::fs::read(&twisted).unwrap(),
        std::fs::read(&expected).unwrap(),
        "yau twist output should equal the corpus entry byte-for-byte"
    );

    let back = dir.path().join("back.json");
    let out = run(&[
        "construct",
        "untwist",
        twisted.to_str().unwrap(),
        "-o",
        back.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr_str(&out));
    assert_eq!(
        std::fs::read(&back).unwrap(),
        std::fs::read(&base).unwrap(),
        "untwist should invert the twist byte-for-byte"
    );

    // derived --n 0 is the identity construction.
    let level0 = dir.path().join("level0.json");
    let out = run(&[
        "construct",
        "derived",
        expected.to_str().unwrap(),
        "--n",
        "0",
        "-o",
        level0.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        std::fs::read(&level0).unwrap(),
        std::fs::read(&expected).unwrap()
    );

    // The pre-alternative verbs: the sum product is Hom-alternative and
    // the split companion is Hom-pre-Malcev.
    let prealt = show(dir.path(), "nil2_hom.split", &[], "prealt.json");
    let sum = dir.path().join("sum.json");
    let out = run(&[
        "construct",
        "prealt-sum",
        prealt.to_str().unwrap(),
        "-o",
        sum.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr_str(&out));
    let out = run(&["check", sum.to_str().unwrap(), "--as", "alternative"]);
    assert_eq!(code(&out), 0);
    let companion = dir.path().join("companion.json");
    let out = run(&[
        "construct",
        "prealt-split",
        prealt.to_str().unwrap(),
        "-o",
        companion.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr_str(&out));
    let out = run(&["check", companion.to_str().unwrap(), "--as", "pre-malcev"]);
    assert_eq!(code(&out), 0);
}

#[test]
fn rep_verbs_cover_check_dual_semidirect_coadjoint() {
    let dir = TempDir::new().unwrap();
    let adjoint = show(dir.path(), "malcev4.adjoint", &[], "adj.json");

    let out = run(&["rep", "check", adjoint.to_str().unwrap()]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr_str(&out));
    assert_eq!(parse(&stdout_str(&out))["check"], "representation");

    let dual = dir.path().join("dual.json");
    let out = run(&["rep", "dual", adjoint.to_str().unwrap(), "-o", dual.to_str().unwrap()]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr_str(&out));
    let out = run(&["rep", "check", dual.to_str().unwrap()]);
    assert_eq!(code(&out), 0, "the dual passes the axioms");

    let double = dir.path().join("double.json");
    let out = run(&["rep", "dual", dual.to_str().unwrap(), "-o", double.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        std::fs::read(&double).unwrap(),
        std::fs::read(&adjoint).unwrap(),
        "dual² should reproduce the original file byte-for-byte"
    );

    let semidirect = dir.path().join("sd.json");
    let out = run(&[
        "rep",
        "semidirect",
        adjoint.to_str().unwrap(),
        "-o",
        semidirect.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let out = run(&["check", semidirect.to_str().unwrap(), "--as", "malcev"]);
    assert_eq!(code(&out), 0, "semidirect of a passing rep passes Hom-Malcev");

    let base = show(dir.path(), "malcev4", &[], "m4.json");
    let coadjoint = dir.path().join("coadj.json");
    let out = run(&[
        "rep",
        "coadjoint",
        base.to_str().unwrap(),
        "-o",
        coadjoint.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let out = run(&["rep", "check", coadjoint.to_str().unwrap()]);
    assert_eq!(code(&out), 0, "the coadjoint passes the axioms");

    // Bimodule files run through the same check verb.
    let bimodule = show(dir.path(), "nil2_hom.regular", &[], "reg.json");
    let out = run(&["rep", "check", bimodule.to_str().unwrap()]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr_str(&out));
    assert_eq!(parse(&stdout_str(&out))["check"], "alternative-bimodule");

    // Yau-twisting the classical 5-dim adjoint yields a representation of
    // the twisted algebra.
    let pretwist = show(dir.path(), "malcev5.pretwist_adjoint", &["l2=1"], "pre.json");
    let twisted_rep = dir.path().join("twisted_rep.json");
    let out = run(&[
        "rep",
        "twist",
        pretwist.to_str().unwrap(),
        "-o",
        twisted_rep.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr_str(&out));
    let out = run(&["rep", "check", twisted_rep.to_str().unwrap()]);
    assert_eq!(code(&out), 0, "the twisted representation passes the axioms");
}

#[test]
fn op_verbs_cover_the_operator_conditions() {
    let dir = TempDir::new().unwrap();
    let kuper = show(dir.path(), "malcev4.kuper", &[], "kuper.json");

    let out = run(&["op", "check", kuper.to_str().unwrap(), "--as", "kupershmidt"]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr_str(&out));
    assert_eq!(parse(&stdout_str(&out))["check"], "kupershmidt");

    let out = run(&["op", "graph-test", kuper.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert_eq!(parse(&stdout_str(&out))["check"], "graph-subalgebra");

    let split = dir.path().join("split.json");
    let out = run(&["op", "split", kuper.to_str().unwrap(), "-o", split.to_str().unwrap()]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr_str(&out));
    let out = run(&["check", split.to_str().unwrap(), "--as", "pre-malcev"]);
    assert_eq!(code(&out), 0, "the kupershmidt split is Hom-pre-Malcev");

    let rb = show(dir.path(), "malcev4.rb", &[], "rb.json");
    let out = run(&["op", "check", rb.to_str().unwrap(), "--as", "rota-baxter"]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr_str(&out));

    // Source/condition mismatches are usage errors.
    let out = run(&["op", "check", kuper.to_str().unwrap(), "--as", "rota-baxter"]);
    assert_eq!(code(&out), 2);
    assert!(stderr_str(&out).contains("error:"));

    // A symplectic form on the 4-dim bracket induces a Hom-pre-Malcev
    // companion; swapping the pairing is rejected.
    let base = show(dir.path(), "malcev4", &[], "m4.json");
    let omega = dir.path().join("omega.json");
    std::fs::write(
        &omega,
        r#"[["0","0","1","0"],["0","0","0","1"],["-1","0","0","0"],["0","-1","0","0"]]"#,
    )
    .unwrap();
    let companion = dir.path().join("companion.json");
    let out = run(&[
        "op",
        "symplectic",
        omega.to_str().unwrap(),
        base.to_str().unwrap(),
        "-o",
        companion.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr_str(&out));
    let out = run(&["check", companion.to_str().unwrap(), "--as", "pre-malcev"]);
    assert_eq!(code(&out), 0);

    // The commutator of the symplectic companion reproduces the bracket.
    let out = run(&["construct", "commutator", companion.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let rebuilt = parse(&stdout_str(&out));
    let bracket: Value =
        serde_json::from_str(&std::fs::read_to_string(&base).unwrap()).unwrap();
    assert_eq!(rebuilt["products"], bracket["products"]);

    let bad = dir.path().join("bad_omega.json");
    std::fs::write(
        &bad,
        r#"[["0","0","0","1"],["0","0","1","0"],["0","-1","0","0"],["-1","0","0","0"]]"#,
    )
    .unwrap();
    let out = run(&[
        "op",
        "symplectic",
        bad.to_str().unwrap(),
        base.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 2);
    assert!(stderr_str(&out).contains("error:"));
}

#[test]
fn deform_verbs_run_the_pipeline_end_to_end() {
    let dir = TempDir::new().unwrap();
    let rep = show(dir.path(), "malcev5.adjoint", &[], "rep5.json");
    let t = dir.path().join("t5.json");
    // The 5-dim base operator at default parameters, as a bare matrix.
    std::fs::write(
        &t,
        r#"[["1","0","0","0","0"],["0","0","0","-1","0"],["0","1","0","0","0"],["0","0","0","0","0"],["1","0","0","0","0"]]"#,
    )
    .unwrap();

    let elements = dir.path().join("elements.json");
    let out = run(&[
        "deform",
        "nijenhuis-elements",
        t.to_str().unwrap(),
        "--context",
        rep.to_str().unwrap(),
        "--bound",
        "1",
        "-o",
        elements.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr_str(&out));
    let list: Value =
        serde_json::from_str(&std::fs::read_to_string(&elements).unwrap()).unwrap();
    let list = list.as_array().expect("a JSON array of elements");
    let e1: Value = serde_json::json!(["0", "1", "0", "0", "0"]);
    let e2: Value = serde_json::json!(["0", "0", "1", "0", "0"]);
    assert!(list.contains(&e1) && list.contains(&e2));

    let gen = dir.path().join("gen.json");
    let out = run(&[
        "deform",
        "trivialize",
        t.to_str().unwrap(),
        "--element",
        "0,1,0,0,0",
        "--context",
        rep.to_str().unwrap(),
        "-o",
        gen.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr_str(&out));
    let matrix: Value = serde_json::from_str(&std::fs::read_to_string(&gen).unwrap()).unwrap();
    assert_eq!(matrix["matrix"][2][0], "-1");

    let out = run(&[
        "deform",
        "check",
        t.to_str().unwrap(),
        gen.to_str().unwrap(),
        "--context",
        rep.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr_str(&out));
    let report = parse(&stdout_str(&out));
    assert_eq!(report["check"], "deformation");
    assert_eq!(report["status"], "pass");

    // A non-element fails the precondition: exit 1, a note on stderr, and
    // the inner report lands at the --report destination.
    let report_path = dir.path().join("precondition.json");
    let out = run(&[
        "deform",
        "trivialize",
        t.to_str().unwrap(),
        "--element",
        "0,0,0,1,-1",
        "--context",
        rep.to_str().unwrap(),
        "--report",
        report_path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 1);
    assert!(stderr_str(&out).contains("precondition failed"));
    let report: Value =
        serde_json::from_str(&std::fs::read_to_string(&report_path).unwrap()).unwrap();
    assert_eq!(report["check"], "nijenhuis-element");
    assert_eq!(report["status"], "fail");
}

#[test]
fn corpus_verbs_list_and_materialize_entries() {
    let out = run(&["corpus", "list"]);
    assert_eq!(code(&out), 0);
    let text = stdout_str(&out);
    assert!(text.starts_with("NAME"));
    for name in ["malcev4.twisted_pm", "malcev5.pretwist_adjoint", "nil2_hom.split"] {
        assert!(text.contains(name), "corpus list should mention {name}");
    }
    assert_eq!(text.lines().count(), 1 + 25, "header plus 25 entries");

    // Overrides change emitted scalars.
    let dir = TempDir::new().unwrap();
    let at2 = show(dir.path(), "malcev4.pm", &["a4=2"], "pm2.json");
    let value: Value = serde_json::from_str(&std::fs::read_to_string(&at2).unwrap()).unwrap();
    let has = value["products"]["mul"]
        .as_array()
        .unwrap()
        .iter()
        .any(|e| e[0] == 0 && e[1] == 0 && e[2] == 3 && e[3] == "-1");
    assert!(has, "a4=2 should set the (0,0,3) constant to -1");

    // Unknown entries, unknown parameters, and excluded parameter values
    // are usage errors.
    for args in [
        vec!["corpus", "show", "nosuch"],
        vec!["corpus", "show", "malcev4", "--set", "zz=1"],
        vec!["corpus", "show", "malcev4", "--set", "a4=t"],
        vec!["corpus", "show", "malcev5", "--set", "a5=0"],
        vec!["corpus", "show", "malcev4.kuper", "--set", "l1=1"],
    ] {
        let out = run(&args);
        assert_eq!(code(&out), 2, "{args:?} should be a usage error");
        assert!(stderr_str(&out).contains("error:"));
    }
}

#[test]
fn malformed_inputs_exit_two_with_field_paths() {
    let dir = TempDir::new().unwrap();
    let cases: &[(&str, &str)] = &[
        ("missing_dim.json", r#"{"products": {"mul": []}}"#),
        ("float.json", r#"{"dim": 2, "products": {"mul": [[0, 0, 1, 0.5]]}}"#),
        ("unknown_key.json", r#"{"dim": 2, "products": {"mul": []}, "apha": [["1","0"],["0","1"]]}"#),
        ("out_of_range.json", r#"{"dim": 2, "products": {"mul": [[0, 0, 2, "1"]]}}"#),
        ("not_json.json", "{"),
    ];
    for (file, body) in cases {
        let path = dir.path().join(file);
        std::fs::write(&path, body).unwrap();
        let out = run(&["check", path.to_str().unwrap(), "--as", "malcev"]);
        assert_eq!(code(&out), 2, "{file} should be rejected");
        let err = stderr_str(&out);
        assert!(err.contains("error:"), "{file}: {err}");
        assert!(err.contains(file), "{file} errors should name the file: {err}");
    }

    let out = run(&["check", "/nonexistent/algebra.json", "--as", "malcev"]);
    assert_eq!(code(&out), 2);

    let dirless = run(&["check"]);
    assert_eq!(code(&dirless), 2, "clap usage errors exit 2");
}

#[test]
fn outputs_are_byte_identical_across_reruns() {
    let dir = TempDir::new().unwrap();
    let twisted = show(dir.path(), "malcev4.twisted", &[], "twisted.json");
    let mut outputs = Vec::new();
    for threads in ["1", "8"] {
        let out = Command::new(exe())
            .args(["check", twisted.to_str().unwrap(), "--as", "malcev"])
            .env("RAYON_NUM_THREADS", threads)
            .output()
            .expect("binary should spawn");
        assert_eq!(code(&out), 0);
        outputs.push(out.stdout);
    }
    assert_eq!(outputs[0], outputs[1]);

    let again = show(dir.path(), "malcev4.twisted", &[], "twisted2.json");
    assert_eq!(
        std::fs::read(&twisted).unwrap(),
        std::fs::read(&again).unwrap()
    );
}
