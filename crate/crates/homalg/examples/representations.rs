//! Representations: axioms, semidirect products, duals, and twists.
//!
//! A representation of a Hom-Malcev algebra is a pair (ρ, β) on a module V
//! whose semidirect product A ⊕ V is again Hom-Malcev — and that
//! equivalence is exact: corrupting ρ breaks the semidirect identity check
//! and vice versa. With β invertible there is a dual representation on V*,
//! and applying it twice returns the original. The coadjoint construction
//! is the dual of the adjoint.
//!
//! ```text
//! cargo run --example representations
//! ```

use homalg::corpus::{load_example, CorpusObject};
use homalg::identity::{check_structure, IdentityKind};
use homalg::rep::{
    check_representation, coadjoint_semidirect, dual_representation, semidirect_rep, twist_rep,
    Representation, TwistMode,
};
use homalg::scalar::Scalar;
use homalg::Error;

fn corpus_rep(name: &str) -> Result<Representation, Error> {
    match load_example(name, &[])? {
        CorpusObject::Representation(rep) => Ok(rep),
        _ => unreachable!("{name} is a representation entry"),
    }
}

fn main() -> Result<(), Error> {
    let rep = corpus_rep("malcev4.twisted_adjoint")?;

    let axioms = check_representation(&rep)?;
    println!(
        "twisted adjoint satisfies the representation axioms: {} ({} tuples)",
        axioms.passed(),
        axioms.tuples_checked
    );
    assert!(axioms.passed());

    // The semidirect product characterizes the axioms.
    let semidirect = semidirect_rep(&rep)?;
    let identity = check_structure(&semidirect, IdentityKind::HomMalcevFourVar)?;
    println!(
        "semidirect product on A ⊕ V is Hom-Malcev: {} ({} tuples)",
        identity.passed(),
        identity.tuples_checked
    );
    assert!(identity.passed());

    // Corrupt one action entry: both checks flip together.
    let mut broken = rep.clone();
    broken.rho[0].set(2, 2, Scalar::int(7));
    let axioms = check_representation(&broken)?;
    let identity = check_structure(&semidirect_rep(&broken)?, IdentityKind::HomMalcevFourVar)?;
    println!(
        "after corrupting ρ(e0): axioms {} / semidirect {}",
        axioms.passed(),
        identity.passed()
    );
    assert!(!axioms.passed() && !identity.passed());

    // Duality: ρ* on V* with β* = (β⁻¹)ᵀ; the construction is involutive.
    let dual = dual_representation(&rep)?;
    let dual_axioms = check_representation(&dual)?;
    println!(
        "\ndual representation passes the axioms: {} ({} tuples)",
        dual_axioms.passed(),
        dual_axioms.tuples_checked
    );
    assert!(dual_axioms.passed());
    let double = dual_representation(&dual)?;
    assert_eq!(double.rho, rep.rho);
    assert_eq!(double.beta, rep.beta);
    println!("dual of the dual returns the original matrices exactly");

    // The coadjoint semidirect product lives on A ⊕ A*.
    for name in ["malcev4", "malcev4.twisted", "malcev5", "malcev5.twisted"] {
        let CorpusObject::Algebra(alg) = load_example(name, &[])? else {
            unreachable!("{name} is an algebra entry");
        };
        let coadjoint = coadjoint_semidirect(&alg)?;
        let report = check_structure(&coadjoint, IdentityKind::HomMalcevFourVar)?;
        println!(
            "coadjoint semidirect of {name:<16} is Hom-Malcev: {} ({} tuples)",
            report.passed(),
            report.tuples_checked
        );
        assert!(report.passed());
    }

    // Twisting representations along the algebra's own twist map. Yau mode
    // starts from a classical representation carrying the morphism in both
    // twist slots (the "pretwist" corpus shape) and lands on a
    // representation of the twisted algebra.
    let overrides = [
        ("l2".to_string(), Scalar::one()),
        ("a4".to_string(), Scalar::int(2)),
    ];
    let CorpusObject::Representation(pretwist) =
        load_example("malcev5.pretwist_adjoint", &overrides)?
    else {
        unreachable!("malcev5.pretwist_adjoint is a representation entry");
    };
    let twisted_rep = twist_rep(&pretwist, TwistMode::Yau)?;
    let report = check_representation(&twisted_rep)?;
    println!(
        "\nyau-twisted 5-dim representation passes the axioms: {}",
        report.passed()
    );
    assert!(report.passed());
    let CorpusObject::Algebra(twisted5) = load_example("malcev5.twisted", &overrides)? else {
        unreachable!("malcev5.twisted is an algebra entry");
    };
    assert_eq!(twisted_rep.algebra.products, twisted5.products);
    println!("its carrier algebra is exactly the twisted 5-dim product");

    // α-power mode keeps the carrier; with an involutive α it is the
    // identity on the action matrices.
    let powered = twist_rep(&rep, TwistMode::AlphaPower)?;
    let report = check_representation(&powered)?;
    println!(
        "α-power-twisted representation passes the axioms: {}",
        report.passed()
    );
    assert!(report.passed());
    assert_eq!(powered.rho, rep.rho);
    Ok(())
}
