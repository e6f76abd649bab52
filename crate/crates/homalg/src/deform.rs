//! One-parameter deformations of Kupershmidt operators: the deformation
//! check in coefficient and polynomial form, morphisms between operators,
//! Nijenhuis elements with their lattice search, the trivial deformation a
//! Nijenhuis element generates, and the deformed module products.

use std::collections::BTreeSet;

use crate::algebra::{Element, HomAlgebra, ProductTable, Products};
use crate::error::Error;
use crate::matrix::Matrix;
use crate::op::{check_kupershmidt, OperatorContext};
use crate::rep::Representation;
use crate::report::{CheckReport, FailureTracker};
use crate::scalar::Scalar;

/// Multiplies matrices whose shapes are guaranteed by prior validation.
fn mm(a: &Matrix, b: &Matrix) -> Matrix {
    a.mul(b).expect("matrix shapes agree")
}

fn validate_map(t: &Matrix, rows: usize, cols: usize) -> Result<(), Error> {
    if t.rows() != rows {
        return Err(Error::Dim {
            context: "linear map target dimension",
            expected: rows,
            got: t.rows(),
        });
    }
    if t.cols() != cols {
        return Err(Error::Dim {
            context: "linear map source dimension",
            expected: cols,
            got: t.cols(),
        });
    }
    Ok(())
}

fn require_kupershmidt(t: &Matrix, rep: &Representation) -> Result<(), Error> {
    let ctx = OperatorContext::Representation(rep.clone());
    let report = check_kupershmidt(t, &ctx)?;
    if report.passed() {
        Ok(())
    } else {
        Err(Error::Precondition {
            name: "operator passes the kupershmidt check",
            report: Box::new(report),
        })
    }
}

/// `ϱ(T(e_a))e_b − ϱ(T(e_b))e_a`, the inner term of the Kupershmidt
/// condition for the pair `(a, b)` and the map `t`.
fn paired_action(t: &Matrix, rep: &Representation, a: usize, b: usize) -> Element {
    let ta = Element(t.column(a));
    let tb = Element(t.column(b));
    Element(rep.rho_of(&ta).column(b)).sub(&Element(rep.rho_of(&tb).column(a)))
}

/// Checks that `𝒯` generates a one-parameter deformation `T_t = T + t𝒯` of
/// the Kupershmidt operator `T: V → A`, reported as `"deformation"`.
///
/// The report covers the coefficient equations of the deformed Kupershmidt
/// condition: equation 0 is the intertwining coefficient `𝒯β = α𝒯` (one
/// matrix equation), equation 1 the mixed coefficient
/// `[T(a), 𝒯(b)] + [𝒯(a), T(b)] = T(ϱ(𝒯(a))b − ϱ(𝒯(b))a) + 𝒯(ϱ(T(a))b − ϱ(T(b))a)`
/// and equation 2 the generator's own Kupershmidt condition
/// `[𝒯(a), 𝒯(b)] = 𝒯(ϱ(𝒯(a))b − ϱ(𝒯(b))a)`, both over all basis pairs of
/// `V`. The same fact is recomputed independently by instantiating
/// `T + t·𝒯` over polynomial scalars and running the plain Kupershmidt
/// check; the two verdicts are compared on every call.
///
/// # Errors
/// Dimension mismatch; `T` itself failing the Kupershmidt check
/// ([`Error::Precondition`] with the failing report); disagreement between
/// the coefficient and polynomial paths ([`Error::Internal`], a bug).
pub fn check_deformation(
    t: &Matrix,
    gen: &Matrix,
    rep: &Representation,
) -> Result<CheckReport, Error> {
    let n = rep.algebra.dim();
    let m = rep.dim_v();
    validate_map(t, n, m)?;
    validate_map(gen, n, m)?;
    require_kupershmidt(t, rep)?;
    let table = rep.algebra.single_table("deformation check")?;

    let mut tracker = FailureTracker::new();
    tracker.check_matrix(&[0], &mm(gen, &rep.beta), &mm(&rep.algebra.alpha, gen));
    for a in 0..m {
        let ta = Element(t.column(a));
        let ga = Element(gen.column(a));
        for b in 0..m {
            let tb = Element(t.column(b));
            let gb = Element(gen.column(b));
            let t_pair = paired_action(t, rep, a, b);
            let g_pair = paired_action(gen, rep, a, b);
            let mixed_lhs = table.bilinear(&ta, &gb).add(&table.bilinear(&ga, &tb));
            let mixed_rhs =
                Element(t.apply(g_pair.as_slice())?).add(&Element(gen.apply(t_pair.as_slice())?));
            tracker.check_equal(&[1, a, b], mixed_lhs.as_slice(), mixed_rhs.as_slice());
            let own_lhs = table.bilinear(&ga, &gb);
            let own_rhs = Element(gen.apply(g_pair.as_slice())?);
            tracker.check_equal(&[2, a, b], own_lhs.as_slice(), own_rhs.as_slice());
        }
    }
    let coefficient = tracker.finish("deformation");

    let deformed = t.add(&gen.map(|s| s.mul(&Scalar::t())))?;
    let polynomial = check_kupershmidt(&deformed, &OperatorContext::Representation(rep.clone()))?;
    if coefficient.passed() != polynomial.passed() {
        return Err(Error::Internal(format!(
            "deformation paths disagree: coefficient equations {:?}, polynomial instantiation {:?}",
            coefficient.status, polynomial.status
        )));
    }
    Ok(coefficient)
}

/// Checks that `(φ_A, φ_V)` is a morphism of Kupershmidt operators from
/// `t_from` to `t_to` over the representation `(V, ϱ, β)` of `(A, [·,·], α)`,
/// reported as `"kupershmidt-morphism"`.
///
/// Equations, in report order: 0 is `T∘φ_V = φ_A∘T′` (matrix); 1 is
/// `φ_V∘β = β∘φ_V` (matrix); 2 runs `φ_V∘ϱ(x) = ϱ(φ_A(x))∘φ_V` as one
/// matrix equation per basis `x` of `A`; 3 runs
/// `φ_A([x, y]) = [φ_A(x), φ_A(y)]` over basis pairs of `A`; 4 is
/// `φ_A∘α = α∘φ_A` (matrix); 5 runs the morphism property for the induced
/// module products, `φ_V(ϱ(T′(a))b) = ϱ(T(φ_V(a)))φ_V(b)`, over basis
/// pairs of `V`. All maps may carry polynomial entries.
///
/// # Errors
/// Dimension mismatch only.
pub fn check_kupershmidt_morphism(
    phi_a: &Matrix,
    phi_v: &Matrix,
    t_from: &Matrix,
    t_to: &Matrix,
    rep: &Representation,
) -> Result<CheckReport, Error> {
    let n = rep.algebra.dim();
    let m = rep.dim_v();
    validate_map(phi_a, n, n)?;
    validate_map(phi_v, m, m)?;
    validate_map(t_from, n, m)?;
    validate_map(t_to, n, m)?;
    let table = rep.algebra.single_table("kupershmidt morphism check")?;

    let mut tracker = FailureTracker::new();
    tracker.check_matrix(&[0], &mm(t_to, phi_v), &mm(phi_a, t_from));
    tracker.check_matrix(&[1], &mm(phi_v, &rep.beta), &mm(&rep.beta, phi_v));
    for x in 0..n {
        let image = rep.rho_of(&Element(phi_a.column(x)));
        tracker.check_matrix(&[2, x], &mm(phi_v, &rep.rho[x]), &mm(&image, phi_v));
    }
    for i in 0..n {
        for j in 0..n {
            let lhs = Element(phi_a.apply(table.basis_product(i, j).as_slice())?);
            let rhs = table.bilinear(&Element(phi_a.column(i)), &Element(phi_a.column(j)));
            tracker.check_equal(&[3, i, j], lhs.as_slice(), rhs.as_slice());
        }
    }
    tracker.check_matrix(&[4], &mm(phi_a, &rep.algebra.alpha), &mm(&rep.algebra.alpha, phi_a));
    for a in 0..m {
        let from_action = rep.rho_of(&Element(t_from.column(a)));
        let va = phi_v.column(a);
        let to_action = rep.rho_of(&Element(t_to.apply(&va)?));
        for b in 0..m {
            let lhs = Element(phi_v.apply(&from_action.column(b))?);
            let rhs = Element(to_action.apply(&phi_v.column(b))?);
            tracker.check_equal(&[5, a, b], lhs.as_slice(), rhs.as_slice());
        }
    }
    Ok(tracker.finish("kupershmidt-morphism"))
}

/// The Nijenhuis-element equations for `x`, without the operator
/// precondition; shared by [`is_nijenhuis_element`] and
/// [`find_nijenhuis_elements`].
fn nijenhuis_element_report(x: &Element, t: &Matrix, rep: &Representation) -> CheckReport {
    let table = rep
        .algebra
        .single_table("nijenhuis element check")
        .expect("context validated by callers");
    let n = rep.algebra.dim();
    let m = rep.dim_v();
    let rho_x = rep.rho_of(x);
    let mut tracker = FailureTracker::new();
    let alpha_x = rep
        .algebra
        .alpha
        .apply(x.as_slice())
        .expect("element dimension validated by callers");
    tracker.check_equal(&[0], &alpha_x, x.as_slice());
    let with_x: Vec<Element> = (0..n)
        .map(|i| table.bilinear(x, &Element::basis(n, i)))
        .collect();
    for i in 0..n {
        for j in 0..n {
            let value = table.bilinear(&with_x[i], &with_x[j]);
            tracker.check_zero(&[1, i, j], value.as_slice());
        }
    }
    let zero = Matrix::zero(m, m);
    for j in 0..n {
        tracker.check_matrix(&[2, j], &mm(&rep.rho_of(&with_x[j]), &rho_x), &zero);
    }
    for a in 0..m {
        let bracket_part = table.bilinear(&Element(t.column(a)), x);
        let action_part = Element(
            t.apply(&rho_x.column(a))
                .expect("operator dimensions validated by callers"),
        );
        let value = table.bilinear(x, &bracket_part.add(&action_part));
        tracker.check_zero(&[3, a], value.as_slice());
    }
    tracker.finish("nijenhuis-element")
}

/// Checks that `x ∈ A` is a Nijenhuis element for the Kupershmidt operator
/// `T: V → A`, reported as `"nijenhuis-element"`.
///
/// Equations, in report order: 0 is `α(x) = x` (one tuple); 1 runs
/// `[[x, y], [x, z]] = 0` over basis pairs `(y, z)` of `A`; 2 runs
/// `ϱ([x, y])∘ϱ(x) = 0` as one matrix equation per basis `y`; 3 runs
/// `[x, [T(a), x] + T(ϱ(x)a)] = 0` per basis `a` of `V`.
///
/// # Errors
/// Dimension mismatch; `T` failing the Kupershmidt check
/// ([`Error::Precondition`] with the failing report).
pub fn is_nijenhuis_element(
    x: &Element,
    t: &Matrix,
    rep: &Representation,
) -> Result<CheckReport, Error> {
    let n = rep.algebra.dim();
    validate_map(t, n, rep.dim_v())?;
    if x.dim() != n {
        return Err(Error::Dim {
            context: "nijenhuis element coordinates",
            expected: n,
            got: x.dim(),
        });
    }
    require_kupershmidt(t, rep)?;
    Ok(nijenhuis_element_report(x, t, rep))
}

/// The trivial deformation generator `𝒯(e_a) = T(ϱ(x)e_a) + [T(e_a), x]`
/// of the Nijenhuis element `x`.
///
/// # Errors
/// Dimension mismatch; `T` failing the Kupershmidt check or `x` failing
/// the Nijenhuis-element check ([`Error::Precondition`] with the failing
/// report); the produced generator failing the deformation check
/// ([`Error::Internal`], a bug).
pub fn trivial_deformation(
    x: &Element,
    t: &Matrix,
    rep: &Representation,
) -> Result<Matrix, Error> {
    let report = is_nijenhuis_element(x, t, rep)?;
    if !report.passed() {
        return Err(Error::Precondition {
            name: "element passes the nijenhuis-element check",
            report: Box::new(report),
        });
    }
    let table = rep.algebra.single_table("trivial deformation")?;
    let m = rep.dim_v();
    let rho_x = rep.rho_of(x);
    let mut columns = Vec::with_capacity(m);
    for a in 0..m {
        let action_part = Element(t.apply(&rho_x.column(a))?);
        let bracket_part = table.bilinear(&Element(t.column(a)), x);
        columns.push(action_part.add(&bracket_part).0);
    }
    let gen = Matrix::from_columns(columns)?;
    let deformation = check_deformation(t, &gen, rep)?;
    if !deformation.passed() {
        return Err(Error::Internal(
            "a nijenhuis element produced a generator that fails the deformation check".into(),
        ));
    }
    Ok(gen)
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Scales a nonzero integer vector to its primitive representative with
/// positive leading coordinate; the zero vector is kept as-is.
fn canonical_direction(mut v: Vec<i64>) -> Vec<i64> {
    let g = v.iter().fold(0, |acc, &c| gcd(acc, c));
    if g == 0 {
        return v;
    }
    for c in &mut v {
        *c /= g;
    }
    if let Some(first) = v.iter().find(|&&c| c != 0) {
        if *first < 0 {
            for c in &mut v {
                *c = -*c;
            }
        }
    }
    v
}

/// Exhaustively searches the integer lattice `[−bound, bound]^dim(A)` for
/// Nijenhuis elements of `T`, deduplicated up to scalar multiples (each
/// nonzero hit is reduced to its primitive direction with positive leading
/// coordinate) and returned in ascending coordinate order. The zero
/// element always qualifies, so the result is never empty.
///
/// # Errors
/// Dimension mismatch; negative `bound`; `T` failing the Kupershmidt check
/// ([`Error::Precondition`] with the failing report).
pub fn find_nijenhuis_elements(
    t: &Matrix,
    rep: &Representation,
    bound: i64,
) -> Result<Vec<Element>, Error> {
    let n = rep.algebra.dim();
    validate_map(t, n, rep.dim_v())?;
    if bound < 0 {
        return Err(Error::Input(format!(
            "the lattice bound must be non-negative, got {bound}"
        )));
    }
    require_kupershmidt(t, rep)?;
    let mut found: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut coords = vec![-bound; n];
    loop {
        let candidate = Element(coords.iter().map(|&c| Scalar::int(c)).collect());
        if nijenhuis_element_report(&candidate, t, rep).passed() {
            found.insert(canonical_direction(coords.clone()));
        }
        let mut digit = n;
        loop {
            if digit == 0 {
                let elements = found
                    .into_iter()
                    .map(|v| Element(v.into_iter().map(Scalar::int).collect()))
                    .collect();
                return Ok(elements);
            }
            digit -= 1;
            if coords[digit] < bound {
                coords[digit] += 1;
                break;
            }
            coords[digit] = -bound;
        }
    }
}

/// The deformed module products of a verified deformation: the pre-Malcev
/// product `a ·_t b = ϱ(T(a))b + t·ϱ(𝒯(a))b` and its commutator bracket
/// `[a, b]_t = a ·_t b − b ·_t a`, both on `V` with twist `β`, returned as
/// `(pre-malcev, malcev)` algebras over polynomial scalars.
///
/// # Errors
/// Dimension mismatch; the pair failing the deformation check
/// ([`Error::Precondition`] with the failing report); the deformed
/// commutator disagreeing with the deformed bracket ([`Error::Internal`],
/// a bug).
pub fn induced_deformation_products(
    t: &Matrix,
    gen: &Matrix,
    rep: &Representation,
) -> Result<(HomAlgebra, HomAlgebra), Error> {
    let report = check_deformation(t, gen, rep)?;
    if !report.passed() {
        return Err(Error::Precondition {
            name: "generator passes the deformation check",
            report: Box::new(report),
        });
    }
    let m = rep.dim_v();
    let formal_t = Scalar::t();
    let mut product = ProductTable::zero(m);
    let mut bracket = ProductTable::zero(m);
    for a in 0..m {
        let base = rep.rho_of(&Element(t.column(a)));
        let step = rep.rho_of(&Element(gen.column(a)));
        for b in 0..m {
            for k in 0..m {
                let value = base.get(k, b).add(&step.get(k, b).mul(&formal_t));
                product.set(a, b, k, value);
            }
        }
    }
    for a in 0..m {
        for b in 0..m {
            let value = paired_action(t, rep, a, b)
                .add(&paired_action(gen, rep, a, b).scale(&formal_t));
            for (k, v) in value.0.into_iter().enumerate() {
                bracket.set(a, b, k, v);
            }
        }
    }
    if product.commutator() != bracket {
        return Err(Error::Internal(
            "the deformed product's commutator disagrees with the deformed bracket".into(),
        ));
    }
    let pre_malcev = HomAlgebra::new("pre_malcev", Products::Single(product), rep.beta.clone())?;
    let malcev = HomAlgebra::new("malcev", Products::Single(bracket), rep.beta.clone())?;
    Ok((pre_malcev, malcev))
}
