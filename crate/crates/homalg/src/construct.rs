//! Product-building constructions: commutators, twists by morphisms,
//! untwisting along an invertible twist, derived algebras, and the two
//! passages from a product pair to a single product.
//!
//! Constructions enforce their preconditions. When a precondition is itself
//! a check (morphism, multiplicativity), failure is a hard error carrying
//! the failing [`CheckReport`](crate::report::CheckReport) so callers can
//! surface the witness instead of computing with garbage.

use crate::algebra::{HomAlgebra, Products};
use crate::error::Error;
use crate::matrix::Matrix;

/// Replaces the single product by its commutator `[x, y] = x∘y − y∘x`,
/// keeping the twist map. The output is antisymmetric by construction.
///
/// # Errors
/// Fails on a two-product algebra.
pub fn commutator_algebra(alg: &HomAlgebra) -> Result<HomAlgebra, Error> {
    let table = alg.single_table("commutator construction")?;
    HomAlgebra::new(
        "malcev",
        Products::Single(table.commutator()),
        alg.alpha.clone(),
    )
}

/// Twists the algebra along a self-morphism `γ`: every product becomes
/// `x ∘_γ y = γ(x ∘ y)` and the twist becomes `γ·α`. With `α = Id` this is
/// the classical-to-twisted construction; in general it composes twists.
///
/// # Errors
/// `Precondition` carrying the morphism report when `γ` is not a morphism;
/// dimension error when `γ` has the wrong shape.
pub fn yau_twist(alg: &HomAlgebra, gamma: &Matrix) -> Result<HomAlgebra, Error> {
    let morphism = alg.check_morphism(gamma)?;
    if !morphism.passed() {
        return Err(Error::Precondition {
            name: "twisting map is a morphism",
            report: Box::new(morphism),
        });
    }
    let products = alg.products.try_map(|t| t.compose_left(gamma))?;
    let alpha = gamma.mul(&alg.alpha)?;
    HomAlgebra::new(alg.kind.clone(), products, alpha)
}

/// Undoes a twist with invertible `α`: every product becomes
/// `x ∘' y = α⁻¹(x ∘ y)` and the output twist is the identity, so the
/// result is a classical (untwisted) algebra.
///
/// # Errors
/// Singular `α`; polynomial scalars (no exact inverse over `ℚ[t]`).
pub fn untwist_regular(alg: &HomAlgebra) -> Result<HomAlgebra, Error> {
    if alg.has_poly() {
        return Err(Error::PolynomialScalars {
            context: "untwisting",
        });
    }
    let inv = alg.alpha.inverse()?;
    let products = alg.products.try_map(|t| t.compose_left(&inv))?;
    HomAlgebra::new(alg.kind.clone(), products, Matrix::identity(alg.dim()))
}

/// The `n`-th derived algebra of a multiplicative algebra: product
/// `x ∘⁽ⁿ⁾ y = α^(2ⁿ−1)(x ∘ y)` with twist `α^(2ⁿ)`. `n = 0` returns the
/// input unchanged.
///
/// # Errors
/// `Precondition` carrying the multiplicativity report when the twist is
/// not multiplicative; input error when `2ⁿ` overflows.
pub fn derived_algebra(alg: &HomAlgebra, n: u32) -> Result<HomAlgebra, Error> {
    let multiplicative = alg.check_multiplicative();
    if !multiplicative.passed() {
        return Err(Error::Precondition {
            name: "twist is multiplicative",
            report: Box::new(multiplicative),
        });
    }
    if n == 0 {
        return Ok(alg.clone());
    }
    let exp = 1u32
        .checked_shl(n)
        .ok_or_else(|| Error::Input(format!("derived order {n} is too large")))?;
    let twist_power = alg.alpha.pow(exp - 1)?;
    let products = alg.products.try_map(|t| t.compose_left(&twist_power))?;
    let alpha = alg.alpha.pow(exp)?;
    HomAlgebra::new(alg.kind.clone(), products, alpha)
}

/// Collapses a product pair to the sum product `x ∗ y = x ≺ y + x ≻ y`,
/// keeping the twist.
///
/// # Errors
/// Fails on a single-product algebra.
pub fn prealt_sum(alg: &HomAlgebra) -> Result<HomAlgebra, Error> {
    let (left, right) = alg.pair_tables("sum product")?;
    HomAlgebra::new(
        "alternative",
        Products::Single(left.add(right)?),
        alg.alpha.clone(),
    )
}

/// Collapses a product pair to the single product `x · y = x ≻ y − y ≺ x`,
/// keeping the twist.
///
/// # Errors
/// Fails on a single-product algebra.
pub fn prealt_to_premalcev(alg: &HomAlgebra) -> Result<HomAlgebra, Error> {
    let (left, right) = alg.pair_tables("pair-to-single product")?;
    HomAlgebra::new(
        "pre_malcev",
        Products::Single(right.sub(&left.opposite())?),
        alg.alpha.clone(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ProductTable;
    use crate::identity::{check_structure, IdentityKind};
    use crate::report::Status;
    use crate::scalar::Scalar;

    fn rat(s: &str) -> Scalar {
        Scalar::parse(s).unwrap()
    }

    /// The four-dimensional solvable Malcev bracket (identity twist).
    fn bracket4() -> HomAlgebra {
        let mut t = ProductTable::zero(4);
        for (i, j, k, v) in [
            (0, 1, 1, "-1"),
            (1, 0, 1, "1"),
            (0, 2, 2, "-1"),
            (2, 0, 2, "1"),
            (0, 3, 3, "1"),
            (3, 0, 3, "-1"),
            (1, 2, 3, "2"),
            (2, 1, 3, "-2"),
        ] {
            t.set(i, j, k, rat(v));
        }
        HomAlgebra::with_identity_twist("malcev", Products::Single(t)).unwrap()
    }

    /// The involutive morphism of `bracket4`: e₀ ↦ e₀ + a₄e₃,
    /// e₁ ↦ e₁ + b₃e₂, e₂ ↦ −e₂, e₃ ↦ −e₃.
    fn morphism4(a4: i64, b3: i64) -> Matrix {
        Matrix::from_columns(vec![
            vec![Scalar::one(), Scalar::zero(), Scalar::zero(), Scalar::int(a4)],
            vec![Scalar::zero(), Scalar::one(), Scalar::int(b3), Scalar::zero()],
            vec![Scalar::zero(), Scalar::zero(), Scalar::int(-1), Scalar::zero()],
            vec![Scalar::zero(), Scalar::zero(), Scalar::zero(), Scalar::int(-1)],
        ])
        .unwrap()
    }

    /// The four-dimensional pre-Malcev product at parameters `(a₄, λ₁)`
    /// (identity twist): e₀·e₀ = −a₄/2 e₃, e₀·e₁ = −e₁, e₀·e₂ = −e₂,
    /// e₀·e₃ = e₃, e₁·e₀ = λ₁e₂, e₁·e₁ = −2λ₁e₃.
    fn premalcev4(a4: &str, l1: &str) -> HomAlgebra {
        let mut t = ProductTable::zero(4);
        let half_a4 = rat(a4).mul(&Scalar::frac(-1, 2));
        t.set(0, 0, 3, half_a4);
        t.set(0, 1, 1, rat("-1"));
        t.set(0, 2, 2, rat("-1"));
        t.set(0, 3, 3, rat("1"));
        t.set(1, 0, 2, rat(l1));
        t.set(1, 1, 3, rat(l1).mul(&rat("-2")));
        HomAlgebra::with_identity_twist("pre_malcev", Products::Single(t)).unwrap()
    }

    /// Commutative two-dimensional algebra a∘a = b with twist diag(−1, 1).
    fn nil2() -> HomAlgebra {
        let mut t = ProductTable::zero(2);
        t.set(0, 0, 1, Scalar::one());
        let mut alpha = Matrix::identity(2);
        alpha.set(0, 0, Scalar::int(-1));
        HomAlgebra::new("alternative", Products::Single(t), alpha).unwrap()
    }

    #[test]
    fn commutator_of_commutative_is_abelian() {
        let c = commutator_algebra(&nil2()).unwrap();
        let t = c.single_table("test").unwrap();
        assert!(t.entries().all(|(_, _, _, v)| v.is_zero()));
    }

    #[test]
    fn commutator_of_premalcev_matches_hand_expansion() {
        // At (a₄, λ₁) = (2, 1): [e₀,e₁] = e₀·e₁ − e₁·e₀ = −e₁ − e₂.
        let c = commutator_algebra(&premalcev4("2", "1")).unwrap();
        let t = c.single_table("test").unwrap();
        assert_eq!(
            t.row(0, 1),
            &[rat("0"), rat("-1"), rat("-1"), rat("0")][..]
        );
        // and the square terms cancel: [e₀,e₀] = 0
        assert!(t.basis_product(0, 0).is_zero());
    }

    #[test]
    fn commutator_of_premalcev_is_malcev() {
        for (a4, l1) in [("2", "1"), ("0", "0"), ("-1", "2")] {
            let c = commutator_algebra(&premalcev4(a4, l1)).unwrap();
            let r = check_structure(&c, IdentityKind::HomMalcevFourVar).unwrap();
            assert_eq!(r.status, Status::Pass, "params ({a4}, {l1})");
        }
    }

    #[test]
    fn twist_by_identity_is_identity() {
        let alg = bracket4();
        let twisted = yau_twist(&alg, &Matrix::identity(4)).unwrap();
        assert_eq!(twisted, alg);
    }

    #[test]
    fn twist_by_non_morphism_is_rejected_with_report() {
        let alg = bracket4();
        let mut gamma = Matrix::identity(4);
        gamma.set(0, 0, Scalar::int(2));
        let err = yau_twist(&alg, &gamma).unwrap_err();
        match err {
            Error::Precondition { report, .. } => {
                assert_eq!(report.check, "morphism");
                assert_eq!(report.status, Status::Fail);
                // first failing pair: γ[e₀,e₁] = −e₁ but [γe₀,γe₁] = −2e₁
                assert_eq!(report.witness.unwrap().tuple, vec![0, 0, 1]);
            }
            other => panic!("expected precondition error, got {other:?}"),
        }
    }

    #[test]
    fn twisting_the_malcev_bracket_matches_published_table() {
        let alg = bracket4();
        let gamma = morphism4(1, 1);
        let twisted = yau_twist(&alg, &gamma).unwrap();
        let t = twisted.single_table("test").unwrap();
        // [e₀,e₁]_γ = γ(−e₁) = −e₁ − e₂; [e₀,e₂]_γ = e₂; [e₀,e₃]_γ = −e₃;
        // [e₁,e₂]_γ = −2e₃.
        assert_eq!(t.row(0, 1), &[rat("0"), rat("-1"), rat("-1"), rat("0")][..]);
        assert_eq!(t.row(0, 2), &[rat("0"), rat("0"), rat("1"), rat("0")][..]);
        assert_eq!(t.row(0, 3), &[rat("0"), rat("0"), rat("0"), rat("-1")][..]);
        assert_eq!(t.row(1, 2), &[rat("0"), rat("0"), rat("0"), rat("-2")][..]);
        assert_eq!(twisted.alpha, gamma);
        // and the twisted algebra satisfies both Malcev forms
        for kind in [
            IdentityKind::HomMalcevFourVar,
            IdentityKind::HomMalcevJacobianForm,
        ] {
            let r = check_structure(&twisted, kind).unwrap();
            assert_eq!(r.status, Status::Pass);
        }
    }

    #[test]
    fn untwist_inverts_the_twist_exactly() {
        let alg = bracket4();
        for (a4, b3) in [(1, 1), (0, 0), (2, -1)] {
            let twisted = yau_twist(&alg, &morphism4(a4, b3)).unwrap();
            let back = untwist_regular(&twisted).unwrap();
            assert_eq!(back, alg, "params ({a4}, {b3})");
        }
    }

    #[test]
    fn untwist_requires_invertible_twist() {
        let mut t = ProductTable::zero(2);
        t.set(0, 0, 1, Scalar::one());
        let alg =
            HomAlgebra::new("generic", Products::Single(t), Matrix::zero(2, 2)).unwrap();
        assert!(matches!(
            untwist_regular(&alg),
            Err(Error::Singular { .. })
        ));
    }

    #[test]
    fn derived_order_zero_is_identity() {
        let alg = yau_twist(&bracket4(), &morphism4(1, 1)).unwrap();
        assert_eq!(derived_algebra(&alg, 0).unwrap(), alg);
    }

    #[test]
    fn derived_algebra_of_twisted_bracket_is_malcev() {
        for (a4, b3) in [(1, 1), (0, 0)] {
            let alg = yau_twist(&bracket4(), &morphism4(a4, b3)).unwrap();
            let d1 = derived_algebra(&alg, 1).unwrap();
            // the morphism is an involution, so the derived twist is Id
            assert!(d1.alpha.is_identity());
            let r = check_structure(&d1, IdentityKind::HomMalcevFourVar).unwrap();
            assert_eq!(r.status, Status::Pass, "params ({a4}, {b3})");
        }
    }

    #[test]
    fn derived_algebra_requires_multiplicativity() {
        // premalcev4 with λ₁ ≠ 0 under the diag(−1,1,1,1) twist is not
        // multiplicative; neither is nil2's product under diag(1,2).
        let mut alg = nil2();
        alg.alpha = Matrix::from_columns(vec![
            vec![Scalar::one(), Scalar::zero()],
            vec![Scalar::zero(), Scalar::int(2)],
        ])
        .unwrap();
        let err = derived_algebra(&alg, 1).unwrap_err();
        match err {
            Error::Precondition { report, .. } => {
                assert_eq!(report.check, "multiplicativity");
            }
            other => panic!("expected precondition error, got {other:?}"),
        }
    }

    /// The split product pair on nil2: a ≺ a = a ≻ a = 2b.
    fn nil2_pair() -> HomAlgebra {
        let mut left = ProductTable::zero(2);
        left.set(0, 0, 1, Scalar::int(2));
        let right = left.clone();
        let mut alpha = Matrix::identity(2);
        alpha.set(0, 0, Scalar::int(-1));
        HomAlgebra::new("pre_alternative", Products::Pair { left, right }, alpha).unwrap()
    }

    #[test]
    fn sum_product_doubles_the_split() {
        let sum = prealt_sum(&nil2_pair()).unwrap();
        let t = sum.single_table("test").unwrap();
        assert_eq!(t.get(0, 0, 1), &Scalar::int(4));
        let r = check_structure(&sum, IdentityKind::HomAlternative).unwrap();
        assert_eq!(r.status, Status::Pass);
    }

    #[test]
    fn symmetric_pair_collapses_to_abelian_single_product() {
        let single = prealt_to_premalcev(&nil2_pair()).unwrap();
        let t = single.single_table("test").unwrap();
        assert!(t.entries().all(|(_, _, _, v)| v.is_zero()));
        let r = check_structure(&single, IdentityKind::HomPreMalcev).unwrap();
        assert_eq!(r.status, Status::Pass);
    }

    #[test]
    fn pair_constructions_share_a_commutator() {
        // x≻y − y≺x and x≺y + x≻y have the same commutator.
        let pair = nil2_pair();
        let a = commutator_algebra(&prealt_to_premalcev(&pair).unwrap()).unwrap();
        let b = commutator_algebra(&prealt_sum(&pair).unwrap()).unwrap();
        assert_eq!(
            a.single_table("test").unwrap(),
            b.single_table("test").unwrap()
        );
    }

    #[test]
    fn pair_constructions_require_two_products() {
        assert!(matches!(
            prealt_sum(&bracket4()),
            Err(Error::NeedPairProduct { .. })
        ));
        assert!(matches!(
            prealt_to_premalcev(&bracket4()),
            Err(Error::NeedPairProduct { .. })
        ));
    }
}
