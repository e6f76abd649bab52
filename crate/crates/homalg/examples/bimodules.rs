//! Bimodules over Hom-alternative and Hom-pre-Malcev algebras.
//!
//! A bimodule is a pair of action families (ℓ, 𝔯) with a module twist β;
//! like representations, bimodules are characterized by their semidirect
//! products. Every algebra acts on itself through its regular bimodule,
//! and a Rota-Baxter operator, viewed as a Kupershmidt operator relative
//! to the regular bimodule, splits the product into a pre-alternative
//! ≺/≻ pair whose sum and companion close the circle.
//!
//! ```text
//! cargo run --example bimodules
//! ```

use homalg::construct::{prealt_sum, prealt_to_premalcev};
use homalg::corpus::{load_example, CorpusObject};
use homalg::identity::{check_structure, IdentityKind};
use homalg::op::{check_kupershmidt, kupershmidt_split, OperatorContext};
use homalg::rep::{check_bimodule, regular_bimodule, semidirect_bimodule, BimoduleFlavor};
use homalg::Error;

fn main() -> Result<(), Error> {
    // The regular alternative bimodule of the 2-dim Hom-alternative algebra.
    let CorpusObject::Bimodule(bimodule) = load_example("nil2_hom.regular", &[])? else {
        unreachable!("nil2_hom.regular is a bimodule entry");
    };
    let axioms = check_bimodule(&bimodule)?;
    println!(
        "regular bimodule of nil2_hom passes {:?}: {} ({} tuples)",
        axioms.check,
        axioms.passed(),
        axioms.tuples_checked
    );
    assert!(axioms.passed());

    let semidirect = semidirect_bimodule(&bimodule)?;
    let report = check_structure(&semidirect, IdentityKind::HomAlternative)?;
    println!(
        "semidirect product on A ⊕ A is Hom-alternative: {} ({} tuples)",
        report.passed(),
        report.tuples_checked
    );
    assert!(report.passed());

    // The Rota-Baxter operator diag(2, 1) is a Kupershmidt operator
    // relative to the regular bimodule.
    let CorpusObject::Operator { matrix, .. } = load_example("nil2_hom.rb", &[])? else {
        unreachable!("nil2_hom.rb is an operator entry");
    };
    let context = OperatorContext::Bimodule(bimodule);
    let kuper = check_kupershmidt(&matrix, &context)?;
    println!(
        "\ndiag(2, 1) is Kupershmidt over the regular bimodule: {}",
        kuper.passed()
    );
    assert!(kuper.passed());

    // Its split is the pre-alternative pair the corpus ships.
    let split = kupershmidt_split(&matrix, &context)?;
    let CorpusObject::Algebra(shipped) = load_example("nil2_hom.split", &[])? else {
        unreachable!("nil2_hom.split is an algebra entry");
    };
    assert_eq!(split.products, shipped.products);
    println!("bimodule split equals the algebra-level rota-baxter split");

    // Closing the circle: ≺ + ≻ is Hom-alternative again, and ≻ − ≺ᵒᵖ is
    // the pre-Malcev companion.
    let sum = prealt_sum(&split)?;
    let report = check_structure(&sum, IdentityKind::HomAlternative)?;
    println!(
        "\n≺ + ≻ is Hom-alternative: {} ({} tuples)",
        report.passed(),
        report.tuples_checked
    );
    assert!(report.passed());
    let companion = prealt_to_premalcev(&split)?;
    let report = check_structure(&companion, IdentityKind::HomPreMalcev)?;
    println!(
        "≻ − ≺ᵒᵖ is Hom-pre-Malcev: {} ({} tuples)",
        report.passed(),
        report.tuples_checked
    );
    assert!(report.passed());

    // The pre-Malcev side has regular bimodules too.
    let CorpusObject::Algebra(pm) = load_example("malcev4.pm", &[])? else {
        unreachable!("malcev4.pm is an algebra entry");
    };
    let regular = regular_bimodule(&pm, BimoduleFlavor::PreMalcev)?;
    let axioms = check_bimodule(&regular)?;
    println!(
        "\nregular pre-malcev bimodule of malcev4.pm passes {:?}: {} ({} tuples)",
        axioms.check,
        axioms.passed(),
        axioms.tuples_checked
    );
    assert!(axioms.passed());
    Ok(())
}
