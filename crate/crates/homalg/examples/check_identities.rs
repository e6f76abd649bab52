//! Run the defining-identity checks across the built-in corpus.
//!
//! Every algebra family ships with the identity it is supposed to satisfy;
//! this example verifies each one by full enumeration over basis tuples in
//! exact arithmetic, then corrupts one structure constant to show what a
//! minimal counterexample report looks like.
//!
//! ```text
//! cargo run --example check_identities
//! ```

use homalg::algebra::{HomAlgebra, Products};
use homalg::corpus::{load_example, CorpusObject};
use homalg::identity::{check_structure, IdentityKind};
use homalg::report::Status;
use homalg::scalar::Scalar;
use homalg::Error;

fn corpus_algebra(name: &str) -> Result<HomAlgebra, Error> {
    match load_example(name, &[])? {
        CorpusObject::Algebra(alg) => Ok(alg),
        _ => unreachable!("{name} is an algebra entry"),
    }
}

fn verdict(status: Status) -> &'static str {
    match status {
        Status::Pass => "pass",
        Status::Fail => "FAIL",
    }
}

fn main() -> Result<(), Error> {
    println!("identity checks over the corpus (exact, exhaustive):\n");
    let suite = [
        ("malcev4", IdentityKind::Antisymmetry),
        ("malcev4", IdentityKind::HomMalcevFourVar),
        ("malcev4", IdentityKind::HomMalcevJacobianForm),
        ("malcev4.twisted", IdentityKind::HomMalcevFourVar),
        ("malcev4.twisted", IdentityKind::HomMalcevJacobianForm),
        ("malcev4.pm", IdentityKind::HomPreMalcev),
        ("malcev4.twisted_pm", IdentityKind::HomPreMalcev),
        ("malcev5", IdentityKind::HomMalcevFourVar),
        ("malcev5.twisted", IdentityKind::HomMalcevFourVar),
        ("malcev5.pm", IdentityKind::HomPreMalcev),
        ("malcev5.twisted_pm", IdentityKind::HomPreMalcev),
        ("nil2_hom", IdentityKind::HomAlternative),
        ("nil2_hom.split", IdentityKind::HomPreAlternative),
    ];
    for (name, kind) in suite {
        let alg = corpus_algebra(name)?;
        let report = check_structure(&alg, kind)?;
        println!(
            "  {name:<22} {:<24} {}  ({} tuples)",
            format!("{kind:?}"),
            verdict(report.status),
            report.tuples_checked
        );
        assert!(report.passed(), "{name} must satisfy {kind:?}");
    }

    // A pre-Lie algebra is a pre-Malcev algebra, but not conversely: with
    // the l1 parameter switched on, the 4-dim pre-Malcev table genuinely
    // fails the pre-Lie condition.
    let CorpusObject::Algebra(pm) =
        load_example("malcev4.pm", &[("l1".to_string(), Scalar::one())])?
    else {
        unreachable!("malcev4.pm is an algebra entry");
    };
    let pre_lie = check_structure(&pm, IdentityKind::HomPreLie)?;
    println!(
        "\n  malcev4.pm at l1=1 fails HomPreLie as expected: {} at tuple {:?}",
        verdict(pre_lie.status),
        pre_lie.witness.as_ref().map(|w| &w.tuple)
    );
    assert!(!pre_lie.passed());

    // Corrupt one structure constant and show the minimal counterexample.
    let mut broken = corpus_algebra("malcev4")?;
    if let Products::Single(table) = &mut broken.products {
        table.set(1, 2, 3, Scalar::int(5)); // was 2
    }
    let report = check_structure(&broken, IdentityKind::HomMalcevFourVar)?;
    println!("\nafter corrupting [e1, e2] the check reports:\n{}", report.to_json());
    assert_eq!(report.status, Status::Fail);
    let witness = report.witness.expect("failing checks carry a witness");
    println!(
        "smallest violating tuple {:?}: lhs = {:?}, rhs = {:?}",
        witness.tuple, witness.lhs, witness.rhs
    );
    Ok(())
}
