//! Operator conditions and the three equivalent characterizations.
//!
//! A Kupershmidt operator T: V → A relative to a representation can be
//! recognized three ways, and the verdicts always agree:
//!
//! 1. the defining condition `[Ta, Tb] = T(ρ(Ta)b − ρ(Tb)a)` with
//!    `αT = Tβ`,
//! 2. the graph `{(Ta, a)}` being a subalgebra of the semidirect product,
//! 3. the block operator `N_T = [[0, T], [0, 0]]` being Nijenhuis on the
//!    semidirect product.
//!
//! The example also exercises Rota-Baxter operators (the adjoint special
//! case) and the splittings they induce.
//!
//! ```text
//! cargo run --example operators
//! ```

use homalg::corpus::{load_example, CorpusObject};
use homalg::identity::{check_structure, IdentityKind};
use homalg::op::{
    check_kupershmidt, check_nijenhuis, check_rota_baxter, graph_is_subalgebra,
    kupershmidt_split, nijenhuis_from_kupershmidt, rota_baxter_split, NijenhuisFlavor,
    OperatorContext, SplitFlavor,
};
use homalg::rep::semidirect_rep;
use homalg::scalar::Scalar;
use homalg::Error;

fn main() -> Result<(), Error> {
    // The 4-dim family operator as a Kupershmidt operator on the twisted
    // adjoint representation.
    let CorpusObject::Operator { matrix, context } = load_example("malcev4.kuper", &[])? else {
        unreachable!("malcev4.kuper is an operator entry");
    };
    let OperatorContext::Representation(rep) = &context else {
        unreachable!("malcev4.kuper carries a representation context");
    };

    let kuper = check_kupershmidt(&matrix, &context)?;
    let graph = graph_is_subalgebra(&matrix, rep)?;
    let block = nijenhuis_from_kupershmidt(&matrix, rep)?;
    let semidirect = semidirect_rep(rep)?;
    let nijenhuis = check_nijenhuis(&block, &semidirect, NijenhuisFlavor::Malcev)?;
    println!("three views of the same operator:");
    println!("  kupershmidt condition : {}", kuper.passed());
    println!("  graph is a subalgebra : {}", graph.passed());
    println!("  N_T is Nijenhuis      : {}", nijenhuis.passed());
    assert!(kuper.passed() && graph.passed() && nijenhuis.passed());

    // Corrupt one entry: all three verdicts flip together.
    let mut corrupted = matrix.clone();
    corrupted.set(1, 1, Scalar::one());
    let kuper = check_kupershmidt(&corrupted, &context)?;
    let graph = graph_is_subalgebra(&corrupted, rep)?;
    let block = nijenhuis_from_kupershmidt(&corrupted, rep)?;
    let nijenhuis = check_nijenhuis(&block, &semidirect, NijenhuisFlavor::Malcev)?;
    println!("\nafter corrupting one entry:");
    println!("  kupershmidt condition : {}", kuper.passed());
    println!("  graph is a subalgebra : {}", graph.passed());
    println!("  N_T is Nijenhuis      : {}", nijenhuis.passed());
    assert!(!kuper.passed() && !graph.passed() && !nijenhuis.passed());
    let witness = graph.witness.expect("the graph check carries a witness");
    println!(
        "  graph witness: bracket of graph vectors {:?} leaves the graph,\n\
         \x20   offending vector {:?}",
        witness.tuple, witness.lhs
    );

    // A Kupershmidt operator splits its representation into a pre-Malcev
    // product x·y = ρ(Tx)y on V.
    let split = kupershmidt_split(&matrix, &context)?;
    let report = check_structure(&split, IdentityKind::HomPreMalcev)?;
    println!(
        "\nkupershmidt split: kind {:?}, HomPreMalcev {} ({} tuples)",
        split.kind,
        report.passed(),
        report.tuples_checked
    );
    assert!(report.passed());

    // Rota-Baxter operators are the algebra-context specialization.
    let CorpusObject::Operator { matrix, context } = load_example("malcev4.rb", &[])? else {
        unreachable!("malcev4.rb is an operator entry");
    };
    let OperatorContext::Algebra(alg) = &context else {
        unreachable!("malcev4.rb carries an algebra context");
    };
    let rb = check_rota_baxter(&matrix, alg)?;
    println!("\nrota-baxter on the untwisted algebra: {}", rb.passed());
    assert!(rb.passed());
    let split = rota_baxter_split(&matrix, alg, SplitFlavor::Malcev)?;
    let report = check_structure(&split, IdentityKind::HomPreMalcev)?;
    println!(
        "  induced pre-malcev product passes: {} ({} tuples)",
        report.passed(),
        report.tuples_checked
    );
    assert!(report.passed());

    // The alternative-side analogue on the 2-dim Hom-alternative algebra:
    // a diagonal Rota-Baxter operator splits the product into a
    // pre-alternative ≺/≻ pair.
    let CorpusObject::Operator { matrix, context } = load_example("nil2_hom.rb", &[])? else {
        unreachable!("nil2_hom.rb is an operator entry");
    };
    let OperatorContext::Algebra(alg) = &context else {
        unreachable!("nil2_hom.rb carries an algebra context");
    };
    let rb = check_rota_baxter(&matrix, alg)?;
    assert!(rb.passed());
    let split = rota_baxter_split(&matrix, alg, SplitFlavor::Alternative)?;
    let report = check_structure(&split, IdentityKind::HomPreAlternative)?;
    println!(
        "\nalternative split of nil2_hom: kind {:?}, HomPreAlternative {}",
        split.kind,
        report.passed()
    );
    assert!(report.passed());
    Ok(())
}
