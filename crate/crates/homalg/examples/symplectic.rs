//! Symplectic structures and their companion pre-Malcev products.
//!
//! An α-invariant, nondegenerate, antisymmetric bilinear form ω with
//! vanishing cyclic sum over the bracket induces a product x·y defined by
//! ω(x·y, α(z)) = ω(y, [x, z]); its commutator reproduces the original
//! bracket, so every symplectic Hom-Malcev algebra is pre-Malcev-splittable.
//!
//! ```text
//! cargo run --example symplectic
//! ```

use homalg::construct::commutator_algebra;
use homalg::corpus::{load_example, CorpusObject};
use homalg::identity::{check_structure, IdentityKind};
use homalg::matrix::Matrix;
use homalg::op::symplectic_to_premalcev;
use homalg::scalar::Scalar;
use homalg::Error;

fn main() -> Result<(), Error> {
    let CorpusObject::Algebra(alg) = load_example("malcev4", &[])? else {
        unreachable!("malcev4 is an algebra entry");
    };

    // The standard form pairing e0 ↔ e2 and e1 ↔ e3 is a symplectic
    // structure for this bracket.
    let mut omega = Matrix::zero(4, 4);
    omega.set(0, 2, Scalar::one());
    omega.set(1, 3, Scalar::one());
    omega.set(2, 0, Scalar::int(-1));
    omega.set(3, 1, Scalar::int(-1));

    let companion = symplectic_to_premalcev(&omega, &alg)?;
    println!("symplectic companion product found (kind {:?})", companion.kind);

    let report = check_structure(&companion, IdentityKind::HomPreMalcev)?;
    println!(
        "  satisfies HomPreMalcev: {} ({} tuples)",
        report.passed(),
        report.tuples_checked
    );
    assert!(report.passed());

    let recovered = commutator_algebra(&companion)?;
    assert_eq!(
        recovered.single_table("commutator")?,
        alg.single_table("bracket")?
    );
    println!("  commutator of the companion reproduces the bracket exactly");

    // A different pairing (e0 ↔ e3, e1 ↔ e2) fails the cyclic cocycle
    // condition for this bracket, and the construction refuses it.
    let mut bad = Matrix::zero(4, 4);
    bad.set(0, 3, Scalar::one());
    bad.set(1, 2, Scalar::one());
    bad.set(3, 0, Scalar::int(-1));
    bad.set(2, 1, Scalar::int(-1));
    let err = symplectic_to_premalcev(&bad, &alg).unwrap_err();
    println!("\nswapping the pairing is rejected:\n  {err}");
    Ok(())
}
