//! Exhaustive verification of structural identities over all basis tuples.
//!
//! Every identity here is multilinear in its quantified arguments, so
//! checking it on all basis tuples decides it on the whole space. Checks
//! enumerate tuples in lexicographic order and never exit early; the
//! reported witness is therefore the lexicographically smallest violation.
//!
//! Both Malcev-type checks verify antisymmetry of the product first and, if
//! that prerequisite fails, report it under the name `antisymmetry` instead
//! of silently evaluating a bracket identity on a non-bracket.

use crate::algebra::{apply_map, Element, HomAlgebra, ProductTable};
use crate::error::Error;
use crate::matrix::Matrix;
use crate::report::{CheckReport, FailureTracker};

/// The structural identities this crate can verify.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdentityKind {
    /// Antisymmetry of a single product: `x∘y = −y∘x`.
    Antisymmetry,
    /// The four-variable Hom-Malcev identity.
    HomMalcevFourVar,
    /// The Hom-Malcev identity in Hom-Jacobian form.
    HomMalcevJacobianForm,
    /// Hom-alternativity (left and right, in polarized form).
    HomAlternative,
    /// The ten-term Hom-pre-Malcev identity.
    HomPreMalcev,
    /// The Hom-pre-Lie condition (symmetry of the Hom-associator in its
    /// first two arguments).
    HomPreLie,
    /// The four Hom-pre-alternative axioms on a product pair.
    HomPreAlternative,
    /// The four-variable Hom-Malcev identity for the commutator product.
    HomMalcevAdmissible,
    /// The Hom-Jacobi identity (convenience probe; brackets rarely satisfy
    /// it on the nose, which is the point of the Malcev identities).
    HomLieJacobi,
}

impl IdentityKind {
    /// Number of quantified basis arguments.
    #[must_use]
    pub fn arity(self) -> usize {
        match self {
            IdentityKind::Antisymmetry => 2,
            IdentityKind::HomMalcevJacobianForm
            | IdentityKind::HomAlternative
            | IdentityKind::HomPreLie
            | IdentityKind::HomPreAlternative
            | IdentityKind::HomLieJacobi => 3,
            IdentityKind::HomMalcevFourVar
            | IdentityKind::HomPreMalcev
            | IdentityKind::HomMalcevAdmissible => 4,
        }
    }

    /// The check name used in reports.
    #[must_use]
    pub fn name(self) -> &'static str {
        match self {
            IdentityKind::Antisymmetry => "antisymmetry",
            IdentityKind::HomMalcevFourVar => "hom-malcev-four-var",
            IdentityKind::HomMalcevJacobianForm => "hom-malcev-jacobian",
            IdentityKind::HomAlternative => "hom-alternative",
            IdentityKind::HomPreMalcev => "hom-pre-malcev",
            IdentityKind::HomPreLie => "hom-pre-lie",
            IdentityKind::HomPreAlternative => "hom-pre-alternative",
            IdentityKind::HomMalcevAdmissible => "hom-malcev-admissible",
            IdentityKind::HomLieJacobi => "hom-lie-jacobi",
        }
    }

    /// All kinds, in a fixed order.
    #[must_use]
    pub fn all() -> [IdentityKind; 9] {
        [
            IdentityKind::Antisymmetry,
            IdentityKind::HomMalcevFourVar,
            IdentityKind::HomMalcevJacobianForm,
            IdentityKind::HomAlternative,
            IdentityKind::HomPreMalcev,
            IdentityKind::HomPreLie,
            IdentityKind::HomPreAlternative,
            IdentityKind::HomMalcevAdmissible,
            IdentityKind::HomLieJacobi,
        ]
    }
}

/// Precomputed basis data shared by the identity evaluators.
struct Basis {
    n: usize,
    /// Twist images `α(e_i)`.
    acol: Vec<Element>,
    /// Squared-twist images `α²(e_i)`.
    a2col: Vec<Element>,
    /// Basis products `e_i ∘ e_j`.
    br: Vec<Vec<Element>>,
    /// Twisted basis products `α(e_i ∘ e_j)`.
    abr: Vec<Vec<Element>>,
}

impl Basis {
    fn new(table: &ProductTable, alpha: &Matrix) -> Basis {
        let n = table.dim();
        let asq = alpha.mul(alpha).expect("square twist");
        let acol: Vec<Element> = (0..n).map(|i| Element(alpha.column(i))).collect();
        let a2col: Vec<Element> = (0..n).map(|i| Element(asq.column(i))).collect();
        let br: Vec<Vec<Element>> = (0..n)
            .map(|i| (0..n).map(|j| table.basis_product(i, j)).collect())
            .collect();
        let abr: Vec<Vec<Element>> = br
            .iter()
            .map(|row| row.iter().map(|x| apply_map(alpha, x)).collect())
            .collect();
        Basis {
            n,
            acol,
            a2col,
            br,
            abr,
        }
    }
}

/// Runs `kind` on the algebra.
///
/// # Errors
/// Product-arity mismatch: `HomPreAlternative` needs a product pair, every
/// other kind needs a single product.
pub fn check_structure(alg: &HomAlgebra, kind: IdentityKind) -> Result<CheckReport, Error> {
    if kind == IdentityKind::HomPreAlternative {
        let (left, right) = alg.pair_tables(kind.name())?;
        return Ok(pre_alternative_report(left, right, &alg.alpha));
    }
    let table = alg.single_table(kind.name())?;
    Ok(match kind {
        IdentityKind::Antisymmetry => antisymmetry_tracker(table).finish(kind.name()),
        IdentityKind::HomMalcevFourVar => {
            malcev_with_prerequisite(table, &alg.alpha, kind.name(), four_var_report)
        }
        IdentityKind::HomMalcevJacobianForm => {
            malcev_with_prerequisite(table, &alg.alpha, kind.name(), jacobian_report)
        }
        IdentityKind::HomMalcevAdmissible => malcev_with_prerequisite(
            &table.commutator(),
            &alg.alpha,
            kind.name(),
            four_var_report,
        ),
        IdentityKind::HomAlternative => alternative_report(table, &alg.alpha),
        IdentityKind::HomPreMalcev => pre_malcev_report(table, &alg.alpha),
        IdentityKind::HomPreLie => pre_lie_report(table, &alg.alpha),
        IdentityKind::HomLieJacobi => lie_jacobi_report(table, &alg.alpha),
        IdentityKind::HomPreAlternative => unreachable!("handled above"),
    })
}

/// Forms the commutator bracket and runs the four-variable Hom-Malcev check
/// on it, reporting under the name `hom-malcev-admissible`.
///
/// # Errors
/// Fails if the algebra does not carry a single product.
pub fn check_malcev_admissible(alg: &HomAlgebra) -> Result<CheckReport, Error> {
    check_structure(alg, IdentityKind::HomMalcevAdmissible)
}

/// Antisymmetry over all ordered pairs, including `i = j`.
fn antisymmetry_tracker(table: &ProductTable) -> FailureTracker {
    let n = table.dim();
    let mut tracker = FailureTracker::new();
    for i in 0..n {
        for j in 0..n {
            let lhs = table.basis_product(i, j);
            let rhs = table.basis_product(j, i).neg();
            tracker.check_equal(&[i, j], &lhs.0, &rhs.0);
        }
    }
    tracker
}

/// Shared driver for the Malcev-type kinds: antisymmetry prerequisite, then
/// the main identity. Tuple counts accumulate across both phases.
fn malcev_with_prerequisite(
    table: &ProductTable,
    alpha: &Matrix,
    name: &str,
    main: fn(&ProductTable, &Basis, FailureTracker) -> FailureTracker,
) -> CheckReport {
    let prerequisite = antisymmetry_tracker(table);
    if prerequisite.has_failure() {
        return prerequisite.finish("antisymmetry");
    }
    let basis = Basis::new(table, alpha);
    main(table, &basis, prerequisite).finish(name)
}

/// The four-variable Hom-Malcev identity on all quadruples:
/// `α([x,z]) ∘ α([y,w]) = (([x,y]∘α(z))∘α²(w)) + (([y,z]∘α(w))∘α²(x))
///  + (([z,w]∘α(x))∘α²(y)) + (([w,x]∘α(y))∘α²(z))`.
fn four_var_report(t: &ProductTable, b: &Basis, mut tracker: FailureTracker) -> FailureTracker {
    let n = b.n;
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    let lhs = t.bilinear(&b.abr[i][k], &b.abr[j][l]);
                    let rhs = t
                        .bilinear(&t.bilinear(&b.br[i][j], &b.acol[k]), &b.a2col[l])
                        .add(&t.bilinear(&t.bilinear(&b.br[j][k], &b.acol[l]), &b.a2col[i]))
                        .add(&t.bilinear(&t.bilinear(&b.br[k][l], &b.acol[i]), &b.a2col[j]))
                        .add(&t.bilinear(&t.bilinear(&b.br[l][i], &b.acol[j]), &b.a2col[k]));
                    tracker.check_equal(&[i, j, k, l], &lhs.0, &rhs.0);
                }
            }
        }
    }
    tracker
}

/// Hom-Jacobi sum on basis indices: `J(i,j,k) = [e_i,e_j]∘α(e_k) + [e_j,e_k]∘α(e_i) + [e_k,e_i]∘α(e_j)`.
fn basis_jacobian(t: &ProductTable, b: &Basis, i: usize, j: usize, k: usize) -> Element {
    t.bilinear(&b.br[i][j], &b.acol[k])
        .add(&t.bilinear(&b.br[j][k], &b.acol[i]))
        .add(&t.bilinear(&b.br[k][i], &b.acol[j]))
}

/// The Hom-Malcev identity in Jacobian form on all triples:
/// `J(α(x), α(y), [x,z]) = J(x,y,z) ∘ α²(x)`.
fn jacobian_report(t: &ProductTable, b: &Basis, mut tracker: FailureTracker) -> FailureTracker {
    let n = b.n;
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let lhs = jacobian_of_elements(t, b, &b.acol[i], &b.acol[j], &b.br[i][k]);
                let rhs = t.bilinear(&basis_jacobian(t, b, i, j, k), &b.a2col[i]);
                tracker.check_equal(&[i, j, k], &lhs.0, &rhs.0);
            }
        }
    }
    tracker
}

/// `J(x, y, z)` for arbitrary elements, using tabulated `α` columns.
fn jacobian_of_elements(
    t: &ProductTable,
    b: &Basis,
    x: &Element,
    y: &Element,
    z: &Element,
) -> Element {
    let ax = linear_image(&b.acol, x);
    let ay = linear_image(&b.acol, y);
    let az = linear_image(&b.acol, z);
    t.bilinear(&t.bilinear(x, y), &az)
        .add(&t.bilinear(&t.bilinear(y, z), &ax))
        .add(&t.bilinear(&t.bilinear(z, x), &ay))
}

/// Image of `x` under the linear map whose basis images are `cols`.
fn linear_image(cols: &[Element], x: &Element) -> Element {
    let mut out = Element::zero(cols.len());
    for (i, xi) in x.0.iter().enumerate() {
        if !xi.is_zero() {
            out = out.add(&cols[i].scale(xi));
        }
    }
    out
}

/// Polarized Hom-alternativity. Equation 0 (left): `as(x,y,z) + as(y,x,z) = 0`;
/// equation 1 (right): `as(x,y,z) + as(x,z,y) = 0`. Witnesses report
/// `as(x,y,z)` against the negated mirror term.
fn alternative_report(t: &ProductTable, alpha: &Matrix) -> CheckReport {
    let b = Basis::new(t, alpha);
    let n = b.n;
    let assoc = |i: usize, j: usize, k: usize| -> Element {
        t.bilinear(&b.br[i][j], &b.acol[k])
            .sub(&t.bilinear(&b.acol[i], &b.br[j][k]))
    };
    let mut tracker = FailureTracker::new();
    for eq in 0..2 {
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let lhs = assoc(i, j, k);
                    let rhs = match eq {
                        0 => assoc(j, i, k).neg(),
                        _ => assoc(i, k, j).neg(),
                    };
                    tracker.check_equal(&[eq, i, j, k], &lhs.0, &rhs.0);
                }
            }
        }
    }
    tracker.finish(IdentityKind::HomAlternative.name())
}

/// The ten-term Hom-pre-Malcev identity on all quadruples, kept verbatim in
/// the order the terms are written; reported as `sum = 0`.
fn pre_malcev_report(t: &ProductTable, alpha: &Matrix) -> CheckReport {
    let b = Basis::new(t, alpha);
    let n = b.n;
    let mut tracker = FailureTracker::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    let sum = t
                        .bilinear(&b.abr[j][k], &b.abr[i][l])
                        .sub(&t.bilinear(&b.abr[k][j], &b.abr[i][l]))
                        .add(&t.bilinear(&t.bilinear(&b.br[i][j], &b.acol[k]), &b.a2col[l]))
                        .sub(&t.bilinear(&t.bilinear(&b.br[j][i], &b.acol[k]), &b.a2col[l]))
                        .sub(&t.bilinear(&t.bilinear(&b.acol[k], &b.br[i][j]), &b.a2col[l]))
                        .add(&t.bilinear(&t.bilinear(&b.acol[k], &b.br[j][i]), &b.a2col[l]))
                        .add(&t.bilinear(&b.a2col[j], &t.bilinear(&b.br[i][k], &b.acol[l])))
                        .sub(&t.bilinear(&b.a2col[j], &t.bilinear(&b.br[k][i], &b.acol[l])))
                        .sub(&t.bilinear(&b.a2col[i], &t.bilinear(&b.acol[j], &b.br[k][l])))
                        .add(&t.bilinear(&b.a2col[k], &t.bilinear(&b.acol[i], &b.br[j][l])));
                    tracker.check_zero(&[i, j, k, l], &sum.0);
                }
            }
        }
    }
    tracker.finish(IdentityKind::HomPreMalcev.name())
}

/// The Hom-pre-Lie condition on all triples: `as(x,y,z) = as(y,x,z)`.
fn pre_lie_report(t: &ProductTable, alpha: &Matrix) -> CheckReport {
    let b = Basis::new(t, alpha);
    let n = b.n;
    let assoc = |i: usize, j: usize, k: usize| -> Element {
        t.bilinear(&b.br[i][j], &b.acol[k])
            .sub(&t.bilinear(&b.acol[i], &b.br[j][k]))
    };
    let mut tracker = FailureTracker::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let lhs = assoc(i, j, k);
                let rhs = assoc(j, i, k);
                tracker.check_equal(&[i, j, k], &lhs.0, &rhs.0);
            }
        }
    }
    tracker.finish(IdentityKind::HomPreLie.name())
}

/// The plain Hom-Jacobi identity on all triples, reported as `J = 0`.
fn lie_jacobi_report(t: &ProductTable, alpha: &Matrix) -> CheckReport {
    let b = Basis::new(t, alpha);
    let n = b.n;
    let mut tracker = FailureTracker::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let value = basis_jacobian(t, &b, i, j, k);
                tracker.check_zero(&[i, j, k], &value.0);
            }
        }
    }
    tracker.finish(IdentityKind::HomLieJacobi.name())
}

/// The four Hom-pre-alternative axioms, each reported as `sum = 0` under its
/// 0-based equation index, over all triples `(x, y, z) = (e_i, e_j, e_k)`.
fn pre_alternative_report(left: &ProductTable, right: &ProductTable, alpha: &Matrix) -> CheckReport {
    let n = left.dim();
    let acol: Vec<Element> = (0..n).map(|i| Element(alpha.column(i))).collect();
    let prec: Vec<Vec<Element>> = (0..n)
        .map(|i| (0..n).map(|j| left.basis_product(i, j)).collect())
        .collect();
    let succ: Vec<Vec<Element>> = (0..n)
        .map(|i| (0..n).map(|j| right.basis_product(i, j)).collect())
        .collect();
    let star: Vec<Vec<Element>> = (0..n)
        .map(|i| (0..n).map(|j| prec[i][j].add(&succ[i][j])).collect())
        .collect();
    let pb = |x: &Element, y: &Element| left.bilinear(x, y);
    let sb = |x: &Element, y: &Element| right.bilinear(x, y);
    let mut tracker = FailureTracker::new();
    for eq in 0..4 {
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let sum = match eq {
                        0 => pb(&succ[i][j], &acol[k])
                            .sub(&sb(&acol[i], &prec[j][k]))
                            .add(&pb(&prec[j][i], &acol[k]))
                            .sub(&pb(&acol[j], &star[i][k])),
                        1 => pb(&succ[i][j], &acol[k])
                            .sub(&sb(&acol[i], &prec[j][k]))
                            .add(&sb(&star[i][k], &acol[j]))
                            .sub(&sb(&acol[i], &succ[k][j])),
                        2 => sb(&star[i][j], &acol[k])
                            .sub(&sb(&acol[i], &succ[j][k]))
                            .add(&sb(&star[j][i], &acol[k]))
                            .sub(&sb(&acol[j], &succ[i][k])),
                        _ => pb(&prec[i][j], &acol[k])
                            .sub(&pb(&acol[i], &star[j][k]))
                            .add(&pb(&prec[i][k], &acol[j]))
                            .sub(&pb(&acol[i], &star[k][j])),
                    };
                    tracker.check_zero(&[eq, i, j, k], &sum.0);
                }
            }
        }
    }
    tracker.finish(IdentityKind::HomPreAlternative.name())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Products;
    use crate::report::Status;
    use crate::scalar::Scalar;

    /// The four-dimensional solvable Malcev bracket with identity twist:
    /// [e₀,e₁] = −e₁, [e₀,e₂] = −e₂, [e₀,e₃] = e₃, [e₁,e₂] = 2e₃.
    fn bracket4_classical() -> HomAlgebra {
        let mut t = ProductTable::zero(4);
        t.set(0, 1, 1, Scalar::int(-1));
        t.set(1, 0, 1, Scalar::int(1));
        t.set(0, 2, 2, Scalar::int(-1));
        t.set(2, 0, 2, Scalar::int(1));
        t.set(0, 3, 3, Scalar::int(1));
        t.set(3, 0, 3, Scalar::int(-1));
        t.set(1, 2, 3, Scalar::int(2));
        t.set(2, 1, 3, Scalar::int(-2));
        HomAlgebra::with_identity_twist("malcev", Products::Single(t)).unwrap()
    }

    fn nil2() -> HomAlgebra {
        let mut t = ProductTable::zero(2);
        t.set(0, 0, 1, Scalar::one());
        let mut alpha = Matrix::identity(2);
        alpha.set(0, 0, Scalar::int(-1));
        HomAlgebra::new("alternative", Products::Single(t), alpha).unwrap()
    }

    fn abelian(dim: usize) -> HomAlgebra {
        HomAlgebra::with_identity_twist("generic", Products::Single(ProductTable::zero(dim)))
            .unwrap()
    }

    #[test]
    fn classical_malcev_passes_both_forms() {
        let alg = bracket4_classical();
        let four = check_structure(&alg, IdentityKind::HomMalcevFourVar).unwrap();
        assert_eq!(four.status, Status::Pass);
        assert_eq!(four.tuples_checked, 16 + 256);
        let jac = check_structure(&alg, IdentityKind::HomMalcevJacobianForm).unwrap();
        assert_eq!(jac.status, Status::Pass);
        assert_eq!(jac.tuples_checked, 16 + 64);
    }

    #[test]
    fn classical_malcev_is_not_hom_lie() {
        // J(e₀,e₁,e₂) = −6e₃, the first triple without a repeated index.
        let alg = bracket4_classical();
        let r = check_structure(&alg, IdentityKind::HomLieJacobi).unwrap();
        assert_eq!(r.status, Status::Fail);
        assert_eq!(r.tuples_checked, 64);
        let w = r.witness.unwrap();
        assert_eq!(w.tuple, vec![0, 1, 2]);
        assert_eq!(w.lhs, vec!["0", "0", "0", "-6"]);
        assert_eq!(w.rhs, vec!["0", "0", "0", "0"]);
    }

    #[test]
    fn antisymmetry_prerequisite_preempts_malcev_kinds() {
        let alg = nil2(); // e₀∘e₀ = e₁ is not antisymmetric
        for kind in [
            IdentityKind::HomMalcevFourVar,
            IdentityKind::HomMalcevJacobianForm,
        ] {
            let r = check_structure(&alg, kind).unwrap();
            assert_eq!(r.check, "antisymmetry");
            assert_eq!(r.status, Status::Fail);
            assert_eq!(r.tuples_checked, 4);
            let w = r.witness.unwrap();
            assert_eq!(w.tuple, vec![0, 0]);
            assert_eq!(w.lhs, vec!["0", "1"]);
            assert_eq!(w.rhs, vec!["0", "-1"]);
        }
    }

    #[test]
    fn standalone_antisymmetry_check() {
        let pass = check_structure(&bracket4_classical(), IdentityKind::Antisymmetry).unwrap();
        assert_eq!(pass.status, Status::Pass);
        assert_eq!(pass.tuples_checked, 16);
        let fail = check_structure(&nil2(), IdentityKind::Antisymmetry).unwrap();
        assert_eq!(fail.status, Status::Fail);
    }

    #[test]
    fn abelian_passes_every_single_product_kind() {
        let alg = abelian(3);
        for kind in IdentityKind::all() {
            if kind == IdentityKind::HomPreAlternative {
                continue;
            }
            let r = check_structure(&alg, kind).unwrap();
            assert_eq!(r.status, Status::Pass, "kind {:?}", kind);
        }
    }

    #[test]
    fn zero_pair_products_pass_pre_alternative() {
        let alg = HomAlgebra::with_identity_twist(
            "pre_alternative",
            Products::Pair {
                left: ProductTable::zero(2),
                right: ProductTable::zero(2),
            },
        )
        .unwrap();
        let r = check_structure(&alg, IdentityKind::HomPreAlternative).unwrap();
        assert_eq!(r.status, Status::Pass);
        assert_eq!(r.tuples_checked, 4 * 8);
    }

    #[test]
    fn nil2_is_hom_alternative_and_hom_pre_lie() {
        let alg = nil2();
        let alt = check_structure(&alg, IdentityKind::HomAlternative).unwrap();
        assert_eq!(alt.status, Status::Pass);
        assert_eq!(alt.tuples_checked, 16);
        let pl = check_structure(&alg, IdentityKind::HomPreLie).unwrap();
        assert_eq!(pl.status, Status::Pass);
        assert_eq!(pl.tuples_checked, 8);
        let pm = check_structure(&alg, IdentityKind::HomPreMalcev).unwrap();
        assert_eq!(pm.status, Status::Pass);
    }

    #[test]
    fn commutator_admissibility_of_commutative_product() {
        let r = check_malcev_admissible(&nil2()).unwrap();
        assert_eq!(r.check, "hom-malcev-admissible");
        assert_eq!(r.status, Status::Pass);
        assert_eq!(r.tuples_checked, 4 + 16);
    }

    #[test]
    fn product_arity_is_enforced() {
        let pair = HomAlgebra::with_identity_twist(
            "pre_alternative",
            Products::Pair {
                left: ProductTable::zero(2),
                right: ProductTable::zero(2),
            },
        )
        .unwrap();
        assert!(matches!(
            check_structure(&pair, IdentityKind::HomPreMalcev),
            Err(Error::NeedSingleProduct { .. })
        ));
        assert!(matches!(
            check_structure(&nil2(), IdentityKind::HomPreAlternative),
            Err(Error::NeedPairProduct { .. })
        ));
    }

    #[test]
    fn rescaling_a_bracket_value_is_still_malcev() {
        // [e₁,e₂] = λe₃ stays Malcev for any λ: rescaling e₃ is an
        // isomorphism. A useful negative control for the corruption test.
        let mut alg = bracket4_classical();
        if let Products::Single(t) = &mut alg.products {
            t.set(1, 2, 3, Scalar::int(3));
            t.set(2, 1, 3, Scalar::int(-3));
        }
        let r = check_structure(&alg, IdentityKind::HomMalcevFourVar).unwrap();
        assert_eq!(r.status, Status::Pass);
    }

    #[test]
    fn corrupting_one_entry_yields_minimal_quadruple_witness() {
        // Flipping the sign of [e₀,e₁] makes the weights inconsistent with
        // [e₁,e₂] = 2e₃; the smallest violating quadruple is (0,0,2,1).
        let mut alg = bracket4_classical();
        if let Products::Single(t) = &mut alg.products {
            t.set(0, 1, 1, Scalar::int(1));
            t.set(1, 0, 1, Scalar::int(-1));
        }
        let r = check_structure(&alg, IdentityKind::HomMalcevFourVar).unwrap();
        assert_eq!(r.status, Status::Fail);
        assert_eq!(r.tuples_checked, 16 + 256);
        let w = r.witness.unwrap();
        assert_eq!(w.tuple, vec![0, 0, 2, 1]);
        assert_eq!(w.lhs, vec!["0", "0", "0", "2"]);
        assert_eq!(w.rhs, vec!["0", "0", "0", "-2"]);

        let j = check_structure(&alg, IdentityKind::HomMalcevJacobianForm).unwrap();
        assert_eq!(j.status, Status::Fail);
        assert_eq!(j.witness.unwrap().tuple, vec![0, 2, 1]);
    }
}
