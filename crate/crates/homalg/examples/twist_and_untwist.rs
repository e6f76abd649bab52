//! Twisting constructions: compose a product with a morphism and invert it.
//!
//! Starting from the four-dimensional Malcev algebra and its involutive
//! morphism α, this example builds the twisted algebra (product α∘[·,·],
//! twist α), checks that the twist map is multiplicative and that the
//! twisted algebra still satisfies both Hom-Malcev forms, inverts the
//! construction with the untwist, and walks the derived-algebra ladder.
//!
//! ```text
//! cargo run --example twist_and_untwist
//! ```

use homalg::algebra::HomAlgebra;
use homalg::construct::{derived_algebra, untwist_regular, yau_twist};
use homalg::corpus::{load_example, CorpusObject};
use homalg::identity::{check_structure, IdentityKind};
use homalg::matrix::Matrix;
use homalg::Error;

fn corpus_algebra(name: &str) -> Result<HomAlgebra, Error> {
    match load_example(name, &[])? {
        CorpusObject::Algebra(alg) => Ok(alg),
        _ => unreachable!("{name} is an algebra entry"),
    }
}

fn corpus_matrix(name: &str) -> Result<Matrix, Error> {
    match load_example(name, &[])? {
        CorpusObject::Map(m) => Ok(m),
        _ => unreachable!("{name} is a matrix entry"),
    }
}

fn main() -> Result<(), Error> {
    let base = corpus_algebra("malcev4")?;
    let alpha = corpus_matrix("malcev4.alpha")?;

    // Twisting requires the map to be an algebra morphism; yau_twist
    // verifies that as a precondition and would return the failing report
    // if it did not hold.
    let twisted = yau_twist(&base, &alpha)?;
    println!("twisted the 4-dim Malcev algebra along its involutive morphism");

    let multiplicative = twisted.check_multiplicative();
    println!(
        "  twist is multiplicative: {} ({} tuples)",
        multiplicative.passed(),
        multiplicative.tuples_checked
    );
    assert!(multiplicative.passed());

    for kind in [
        IdentityKind::HomMalcevFourVar,
        IdentityKind::HomMalcevJacobianForm,
    ] {
        let report = check_structure(&twisted, kind)?;
        println!(
            "  twisted algebra satisfies {kind:?}: {} ({} tuples)",
            report.passed(),
            report.tuples_checked
        );
        assert!(report.passed());
    }

    // The corpus ships the same object, built the same way.
    let shipped = corpus_algebra("malcev4.twisted")?;
    assert_eq!(twisted, shipped);
    println!("  matches the corpus entry malcev4.twisted exactly");

    // α is invertible (it is an involution), so the twist can be undone.
    let recovered = untwist_regular(&twisted)?;
    assert_eq!(recovered.products, base.products);
    assert_eq!(recovered.alpha, base.alpha);
    println!("  untwist ∘ twist = identity on structure constants");

    // Twisting in the other order: untwisting first and re-twisting along
    // the same map reproduces the twisted algebra.
    let round_trip = yau_twist(&untwist_regular(&twisted)?, &alpha)?;
    assert_eq!(round_trip, twisted);
    println!("  twist ∘ untwist = identity as well");

    // Derived algebras: level 0 is the algebra itself; level 1 squares the
    // twist and composes the product with it.
    let level0 = derived_algebra(&twisted, 0)?;
    assert_eq!(level0, twisted);
    let level1 = derived_algebra(&twisted, 1)?;
    let report = check_structure(&level1, IdentityKind::HomMalcevFourVar)?;
    println!(
        "  first derived algebra still Hom-Malcev: {} ({} tuples)",
        report.passed(),
        report.tuples_checked
    );
    assert!(report.passed());
    // α is involutive, so the derived twist α² is the identity.
    assert!(level1.alpha.is_identity());
    Ok(())
}
