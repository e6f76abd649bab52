//! One-parameter deformations of Kupershmidt operators.
//!
//! Given a Kupershmidt operator T and a generator 𝒯, the path T + t𝒯 is a
//! deformation when three equation families hold; the crate checks them
//! coefficient-wise over ℚ and, redundantly, by running the plain
//! Kupershmidt check over ℚ[t] — the verdicts always agree. Nijenhuis
//! elements x produce trivial deformations with generator
//! 𝒯(a) = T(ρ(x)a) + [Ta, x], and the pair (Id + t·ad_x, Id + t·ρ(x)) is
//! checked as a morphism from the deformed operator back to T.
//!
//! ```text
//! cargo run --example deformations
//! ```

use homalg::algebra::Element;
use homalg::corpus::{load_example, CorpusObject};
use homalg::deform::{
    check_deformation, check_kupershmidt_morphism, find_nijenhuis_elements,
    induced_deformation_products, is_nijenhuis_element, trivial_deformation,
};
use homalg::identity::{check_structure, IdentityKind};
use homalg::matrix::Matrix;
use homalg::op::OperatorContext;
use homalg::scalar::Scalar;
use homalg::Error;

/// `Id + t·m` over the polynomial scalars.
fn one_plus_t(m: &Matrix) -> Result<Matrix, Error> {
    Matrix::identity(m.rows()).add(&m.map(|s| s.mul(&Scalar::t())))
}

fn main() -> Result<(), Error> {
    let CorpusObject::Operator { matrix: t, context } = load_example("malcev5.kuper", &[])?
    else {
        unreachable!("malcev5.kuper is an operator entry");
    };
    let OperatorContext::Representation(rep) = context else {
        unreachable!("malcev5.kuper carries a representation context");
    };
    let n = rep.algebra.dim();

    // Search the integer lattice [-1, 1]^5 for Nijenhuis elements.
    let elements = find_nijenhuis_elements(&t, &rep, 1)?;
    println!(
        "bound-1 lattice search: {} Nijenhuis directions (zero included)",
        elements.len()
    );
    let e1 = Element::basis(n, 1);
    let e2 = Element::basis(n, 2);
    assert!(elements.contains(&e1) && elements.contains(&e2));
    println!("  the basis directions e1 and e2 qualify (0-based)");

    // The trivial deformation attached to e1.
    let report = is_nijenhuis_element(&e1, &t, &rep)?;
    assert!(report.passed());
    let gen = trivial_deformation(&e1, &t, &rep)?;
    println!(
        "\ngenerator of the trivial deformation at e1: 𝒯(e0) = {}·e2, all else zero",
        gen.get(2, 0)
    );
    assert_eq!(*gen.get(2, 0), Scalar::int(-1));

    // The deformation equations, verified two independent ways.
    let report = check_deformation(&t, &gen, &rep)?;
    println!(
        "deformation equations hold: {} ({} tuples; ℚ coefficients and ℚ[t] agree)",
        report.passed(),
        report.tuples_checked
    );
    assert!(report.passed());

    // The deformed operator is equivalent to the base operator via
    // (Id + t·ad_x, Id + t·ρ(x)).
    let phi_a = one_plus_t(&rep.rho_of(&e1))?;
    let phi_v = phi_a.clone();
    let deformed = t.add(&gen.map(|s| s.mul(&Scalar::t())))?;
    let morphism = check_kupershmidt_morphism(&phi_a, &phi_v, &deformed, &t, &rep)?;
    println!(
        "trivializing morphism over ℚ[t]: {} ({} tuples)",
        morphism.passed(),
        morphism.tuples_checked
    );
    assert!(morphism.passed());

    // A deformation generator also deforms the induced products: the
    // pre-Malcev product ρ(Ta)b + t·ρ(𝒯a)b and the matching bracket.
    let (pre_malcev, malcev) = induced_deformation_products(&t, &gen, &rep)?;
    let pm = check_structure(&pre_malcev, IdentityKind::HomPreMalcev)?;
    let mc = check_structure(&malcev, IdentityKind::HomMalcevFourVar)?;
    println!(
        "induced deformed products: pre-malcev {} / malcev {}",
        pm.passed(),
        mc.passed()
    );
    assert!(pm.passed() && mc.passed());

    // Not every direction qualifies: a genuine non-element fails with a
    // minimal witness naming the violated equation family.
    let bad = Element(vec![
        Scalar::zero(),
        Scalar::zero(),
        Scalar::zero(),
        Scalar::one(),
        Scalar::int(-1),
    ]);
    let report = is_nijenhuis_element(&bad, &t, &rep)?;
    println!(
        "\ne3 - e4 is not a Nijenhuis element: witness {:?}",
        report.witness.as_ref().map(|w| &w.tuple)
    );
    assert!(!report.passed());
    Ok(())
}
