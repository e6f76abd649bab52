//! Operator verification and operator-induced structure: Kupershmidt and
//! Rota-Baxter checks, Nijenhuis checks in both flavors, the graph
//! criterion, the induced splittings, the compatible product from an
//! invertible operator, and the symplectic product.

use crate::algebra::{Element, HomAlgebra, ProductTable, Products};
use crate::error::Error;
use crate::identity::{check_structure, IdentityKind};
use crate::matrix::{Matrix, RationalSpan};
use crate::rep::{semidirect_rep, Bimodule, BimoduleFlavor, Representation};
use crate::report::{CheckReport, FailureTracker, Witness};
use crate::scalar::Scalar;

/// What an operator acts relative to: a module map `T: V → A` needs a
/// representation or bimodule, an algebra map `T: A → A` just the algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OperatorContext {
    /// A module with a single action family.
    Representation(Representation),
    /// A module with left and right action families.
    Bimodule(Bimodule),
    /// The algebra itself.
    Algebra(HomAlgebra),
}

impl OperatorContext {
    /// The underlying algebra.
    #[must_use]
    pub fn algebra(&self) -> &HomAlgebra {
        match self {
            OperatorContext::Representation(rep) => &rep.algebra,
            OperatorContext::Bimodule(bm) => &bm.algebra,
            OperatorContext::Algebra(alg) => alg,
        }
    }

    /// The dimension an operator's source must have in this context.
    #[must_use]
    pub fn source_dim(&self) -> usize {
        match self {
            OperatorContext::Representation(rep) => rep.dim_v(),
            OperatorContext::Bimodule(bm) => bm.dim_v(),
            OperatorContext::Algebra(alg) => alg.dim(),
        }
    }

    /// Whether any stored matrix carries polynomial entries.
    #[must_use]
    pub fn has_poly(&self) -> bool {
        match self {
            OperatorContext::Representation(rep) => rep.has_poly(),
            OperatorContext::Bimodule(bm) => bm.has_poly(),
            OperatorContext::Algebra(alg) => alg.has_poly(),
        }
    }
}

fn validate_operator(t: &Matrix, rows: usize, cols: usize) -> Result<(), Error> {
    if t.rows() != rows {
        return Err(Error::Dim {
            context: "operator target dimension",
            expected: rows,
            got: t.rows(),
        });
    }
    if t.cols() != cols {
        return Err(Error::Dim {
            context: "operator source dimension",
            expected: cols,
            got: t.cols(),
        });
    }
    Ok(())
}

/// Multiplies matrices whose shapes are guaranteed by construction.
fn mm(a: &Matrix, b: &Matrix) -> Matrix {
    a.mul(b).expect("operator shapes agree")
}

/// Checks the Kupershmidt conditions for `T: V → A`. Equation 0 is the
/// intertwining `αT = Tβ` (one matrix equation); equation 1 runs over all
/// basis pairs `(a, b)` of `V`:
///
/// * representation context: `[T(a), T(b)] = T(ϱ(T(a))b − ϱ(T(b))a)`;
/// * alternative bimodule: `T(a)∗T(b) = T(ℓ(T(a))b + 𝔯(T(b))a)`;
/// * pre-Malcev bimodule: `T(a)·T(b) = T(ℓ(T(a))b + r(T(b))a)`, plus
///   equation 2, the representation-context condition for `(ℓ − r, β)`
///   over the commutator bracket.
///
/// # Errors
/// Dimension mismatch; an algebra context (use [`check_rota_baxter`]).
pub fn check_kupershmidt(t: &Matrix, ctx: &OperatorContext) -> Result<CheckReport, Error> {
    let alg = ctx.algebra();
    let table = alg.single_table("kupershmidt check")?;
    let n = alg.dim();
    let m = ctx.source_dim();
    validate_operator(t, n, m)?;
    let mut tracker = FailureTracker::new();
    let t_col: Vec<Element> = (0..m).map(|a| Element(t.column(a))).collect();
    match ctx {
        OperatorContext::Algebra(_) => {
            return Err(Error::Input(
                "the kupershmidt check needs a representation or bimodule context; \
                 use the rota-baxter check for an operator on the algebra itself"
                    .into(),
            ));
        }
        OperatorContext::Representation(rep) => {
            tracker.check_matrix(&[0], &mm(&alg.alpha, t), &mm(t, &rep.beta));
            for a in 0..m {
                let rho_ta = rep.rho_of(&t_col[a]);
                for b in 0..m {
                    let lhs = table.bilinear(&t_col[a], &t_col[b]);
                    let inner = Element(rho_ta.column(b))
                        .sub(&Element(rep.rho_of(&t_col[b]).column(a)));
                    let rhs = Element(t.apply(inner.as_slice())?);
                    tracker.check_equal(&[1, a, b], lhs.as_slice(), rhs.as_slice());
                }
            }
        }
        OperatorContext::Bimodule(bm) => {
            tracker.check_matrix(&[0], &mm(&alg.alpha, t), &mm(t, &bm.beta));
            for a in 0..m {
                let ell_ta = bm.ell_of(&t_col[a]);
                for b in 0..m {
                    let lhs = table.bilinear(&t_col[a], &t_col[b]);
                    let inner = Element(ell_ta.column(b))
                        .add(&Element(bm.r_of(&t_col[b]).column(a)));
                    let rhs = Element(t.apply(inner.as_slice())?);
                    tracker.check_equal(&[1, a, b], lhs.as_slice(), rhs.as_slice());
                }
            }
            if bm.flavor == BimoduleFlavor::PreMalcev {
                for a in 0..m {
                    let varrho_ta = bm.varrho_of(&t_col[a]);
                    for b in 0..m {
                        let lhs = table
                            .bilinear(&t_col[a], &t_col[b])
                            .sub(&table.bilinear(&t_col[b], &t_col[a]));
                        let inner = Element(varrho_ta.column(b))
                            .sub(&Element(bm.varrho_of(&t_col[b]).column(a)));
                        let rhs = Element(t.apply(inner.as_slice())?);
                        tracker.check_equal(&[2, a, b], lhs.as_slice(), rhs.as_slice());
                    }
                }
            }
        }
    }
    Ok(tracker.finish("kupershmidt"))
}

/// Checks the weight-zero Rota-Baxter conditions for `ℛ: A → A` against
/// the algebra's single product: equation 0 is `ℛα = αℛ`, equation 1 runs
/// `ℛ(x)∘ℛ(y) = ℛ(ℛ(x)∘y + x∘ℛ(y))` over all basis pairs.
///
/// # Errors
/// Dimension mismatch; a product pair.
pub fn check_rota_baxter(r: &Matrix, alg: &HomAlgebra) -> Result<CheckReport, Error> {
    let table = alg.single_table("rota-baxter check")?;
    let n = alg.dim();
    validate_operator(r, n, n)?;
    let mut tracker = FailureTracker::new();
    tracker.check_matrix(&[0], &mm(r, &alg.alpha), &mm(&alg.alpha, r));
    let r_col: Vec<Element> = (0..n).map(|i| Element(r.column(i))).collect();
    for i in 0..n {
        for j in 0..n {
            let lhs = table.bilinear(&r_col[i], &r_col[j]);
            let inner = table
                .bilinear(&r_col[i], &Element::basis(n, j))
                .add(&table.bilinear(&Element::basis(n, i), &r_col[j]));
            let rhs = Element(r.apply(inner.as_slice())?);
            tracker.check_equal(&[1, i, j], lhs.as_slice(), rhs.as_slice());
        }
    }
    Ok(tracker.finish("rota-baxter"))
}

/// Which Nijenhuis identity to verify.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NijenhuisFlavor {
    /// `[N(x),N(y)] = N([N(x),y] − [N(y),x] − N([x,y]))`, as displayed for
    /// brackets (equivalent to the `+[x,N(y)]` convention by antisymmetry).
    Malcev,
    /// `N(x)·N(y) = N(N(x)·y + x·N(y) − N(x·y))`.
    PreMalcev,
}

impl NijenhuisFlavor {
    /// The report name for this flavor.
    #[must_use]
    pub fn check_name(self) -> &'static str {
        match self {
            NijenhuisFlavor::Malcev => "nijenhuis-malcev",
            NijenhuisFlavor::PreMalcev => "nijenhuis-pre-malcev",
        }
    }

    /// Parses a CLI/file label.
    ///
    /// # Errors
    /// Input error on anything but `malcev` / `pre-malcev`.
    pub fn parse(s: &str) -> Result<Self, Error> {
        match s {
            "malcev" => Ok(NijenhuisFlavor::Malcev),
            "pre-malcev" => Ok(NijenhuisFlavor::PreMalcev),
            other => Err(Error::Input(format!(
                "unknown nijenhuis flavor {other:?} (expected \"malcev\" or \"pre-malcev\")"
            ))),
        }
    }
}

/// Checks the Nijenhuis conditions for `N: A → A`: equation 0 is
/// `Nα = αN`, equation 1 runs the flavor's identity over all basis pairs.
///
/// # Errors
/// Dimension mismatch; a product pair.
pub fn check_nijenhuis(
    nm: &Matrix,
    alg: &HomAlgebra,
    flavor: NijenhuisFlavor,
) -> Result<CheckReport, Error> {
    let table = alg.single_table("nijenhuis check")?;
    let n = alg.dim();
    validate_operator(nm, n, n)?;
    let mut tracker = FailureTracker::new();
    tracker.check_matrix(&[0], &mm(nm, &alg.alpha), &mm(&alg.alpha, nm));
    let n_col: Vec<Element> = (0..n).map(|i| Element(nm.column(i))).collect();
    for i in 0..n {
        for j in 0..n {
            let (ei, ej) = (Element::basis(n, i), Element::basis(n, j));
            let lhs = table.bilinear(&n_col[i], &n_col[j]);
            let mixed = match flavor {
                NijenhuisFlavor::Malcev => table
                    .bilinear(&n_col[i], &ej)
                    .sub(&table.bilinear(&n_col[j], &ei)),
                NijenhuisFlavor::PreMalcev => table
                    .bilinear(&n_col[i], &ej)
                    .add(&table.bilinear(&ei, &n_col[j])),
            };
            let inner = mixed.sub(&Element(nm.apply(table.row(i, j))?));
            let rhs = Element(nm.apply(inner.as_slice())?);
            tracker.check_equal(&[1, i, j], lhs.as_slice(), rhs.as_slice());
        }
    }
    Ok(tracker.finish(flavor.check_name()))
}

/// The block operator `N_T = [[0, T], [0, 0]]` on `A ⊕ V` induced by
/// `T: V → A`; built unconditionally so verdicts can be compared.
///
/// # Errors
/// Dimension mismatch.
pub fn nijenhuis_from_kupershmidt(t: &Matrix, rep: &Representation) -> Result<Matrix, Error> {
    let n = rep.algebra.dim();
    let m = rep.dim_v();
    validate_operator(t, n, m)?;
    let mut block = Matrix::zero(n + m, n + m);
    for (r, c, v) in t.entries() {
        block.set(r, n + c, v.clone());
    }
    Ok(block)
}

/// Checks that the graph `Gr(T) = {(T(a), a) : a ∈ V}` is closed inside
/// the semidirect product: equation 0 runs bracket closure over all graph
/// basis pairs, equation 1 runs closure under `α ⊕ β`. Membership failures
/// report the offending vector against zero.
///
/// # Errors
/// Dimension mismatch; polynomial scalars (the span test is rational).
pub fn graph_is_subalgebra(t: &Matrix, rep: &Representation) -> Result<CheckReport, Error> {
    let n = rep.algebra.dim();
    let m = rep.dim_v();
    validate_operator(t, n, m)?;
    if t.has_poly() || rep.has_poly() {
        return Err(Error::PolynomialScalars {
            context: "graph subalgebra test",
        });
    }
    let big = semidirect_rep(rep)?;
    let table = big.single_table("graph subalgebra test")?;
    let graph: Vec<Element> = (0..m)
        .map(|a| Element(t.column(a)).concat(&Element::basis(m, a)))
        .collect();
    let mut span = RationalSpan::new();
    for g in &graph {
        span.insert(g.as_slice())?;
    }
    let mut tracker = FailureTracker::new();
    let zero = vec![Scalar::zero(); n + m];
    for a in 0..m {
        for b in 0..m {
            let v = table.bilinear(&graph[a], &graph[b]);
            let inside = span.contains(v.as_slice())?;
            tracker.check_with(!inside, || {
                Witness::from_sides(vec![0, a, b], v.as_slice(), &zero)
            });
        }
    }
    for (a, g) in graph.iter().enumerate() {
        let v = Element(big.alpha.apply(g.as_slice())?);
        let inside = span.contains(v.as_slice())?;
        tracker.check_with(!inside, || {
            Witness::from_sides(vec![1, a], v.as_slice(), &zero)
        });
    }
    Ok(tracker.finish("graph-subalgebra"))
}

/// Verifies that `t` carries a split structure back onto the original
/// product: `T(σ(a, b)) = T(a)∘T(b)` on basis pairs, where `σ` is the
/// split's recombination (the commutator for one-product splits, the
/// `≺ + ≻` sum for pre-alternative splits). This is implied by the
/// operator check, so a failure is an internal error.
fn verify_split_homomorphism(
    t: &Matrix,
    combined: &ProductTable,
    original: &ProductTable,
) -> Result<(), Error> {
    let m = combined.dim();
    for a in 0..m {
        for b in 0..m {
            let lhs = Element(t.apply(combined.row(a, b))?);
            let rhs = original.bilinear(&Element(t.column(a)), &Element(t.column(b)));
            if lhs != rhs {
                return Err(Error::Internal(format!(
                    "split structure fails to map back onto the product \
                     through the operator at basis pair ({a}, {b})"
                )));
            }
        }
    }
    Ok(())
}

/// The split structure a passing Kupershmidt operator induces on `V`:
///
/// * representation context: `a·b = ϱ(T(a))b`, one product, twist `β`,
///   passing the pre-Malcev identity;
/// * alternative bimodule: `a≺b = 𝔯(T(b))a`, `a≻b = ℓ(T(a))b`, twist `β`,
///   passing the pre-alternative identities;
/// * algebra context: delegates to [`rota_baxter_split`] with the
///   bracket-style product.
///
/// # Errors
/// A `Precondition` error carrying the failing report when the operator
/// check fails; pre-Malcev bimodule contexts (no splitting is defined).
pub fn kupershmidt_split(t: &Matrix, ctx: &OperatorContext) -> Result<HomAlgebra, Error> {
    match ctx {
        OperatorContext::Algebra(alg) => rota_baxter_split(t, alg, SplitFlavor::Malcev),
        OperatorContext::Representation(rep) => {
            let report = check_kupershmidt(t, ctx)?;
            if !report.passed() {
                return Err(Error::Precondition {
                    name: "operator passes the kupershmidt check",
                    report: Box::new(report),
                });
            }
            let m = rep.dim_v();
            let mut out = ProductTable::zero(m);
            for a in 0..m {
                let rho_ta = rep.rho_of(&Element(t.column(a)));
                for b in 0..m {
                    for (k, v) in rho_ta.column(b).into_iter().enumerate() {
                        out.set(a, b, k, v);
                    }
                }
            }
            verify_split_homomorphism(t, &out.commutator(), rep.algebra.single_table("split")?)?;
            HomAlgebra::new("pre_malcev", Products::Single(out), rep.beta.clone())
        }
        OperatorContext::Bimodule(bm) => {
            if bm.flavor == BimoduleFlavor::PreMalcev {
                return Err(Error::Input(
                    "no splitting is defined for a pre-malcev bimodule context".into(),
                ));
            }
            let report = check_kupershmidt(t, ctx)?;
            if !report.passed() {
                return Err(Error::Precondition {
                    name: "operator passes the kupershmidt check",
                    report: Box::new(report),
                });
            }
            let m = bm.dim_v();
            let mut prec = ProductTable::zero(m);
            let mut succ = ProductTable::zero(m);
            for a in 0..m {
                let ell_ta = bm.ell_of(&Element(t.column(a)));
                let r_ta = bm.r_of(&Element(t.column(a)));
                for b in 0..m {
                    for (k, v) in ell_ta.column(b).into_iter().enumerate() {
                        succ.set(a, b, k, v);
                    }
                    // a ≺ b = 𝔯(T(b))a: column a of 𝔯(T(b)), filled as b varies
                    for (k, v) in r_ta.column(b).into_iter().enumerate() {
                        prec.set(b, a, k, v);
                    }
                }
            }
            let sum = prec.add(&succ)?;
            verify_split_homomorphism(t, &sum, bm.algebra.single_table("split")?)?;
            HomAlgebra::new(
                "pre_alternative",
                Products::Pair {
                    left: prec,
                    right: succ,
                },
                bm.beta.clone(),
            )
        }
    }
}

/// Which split a Rota-Baxter operator induces on the algebra itself.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SplitFlavor {
    /// One product `x·y = ℛ(x)∘y`.
    Malcev,
    /// Two products `x≺y = x∘ℛ(y)`, `x≻y = ℛ(x)∘y`.
    Alternative,
}

impl SplitFlavor {
    /// Parses a CLI label.
    ///
    /// # Errors
    /// Input error on anything but `malcev` / `alternative`.
    pub fn parse(s: &str) -> Result<Self, Error> {
        match s {
            "malcev" => Ok(SplitFlavor::Malcev),
            "alternative" => Ok(SplitFlavor::Alternative),
            other => Err(Error::Input(format!(
                "unknown split flavor {other:?} (expected \"malcev\" or \"alternative\")"
            ))),
        }
    }
}

/// The split structure a passing Rota-Baxter operator induces on the
/// algebra: `x·y = ℛ(x)∘y` (Malcev flavor, one product, pre-Malcev kind)
/// or `x≺y = x∘ℛ(y)`, `x≻y = ℛ(x)∘y` (alternative flavor, product pair,
/// pre-alternative kind); twist unchanged.
///
/// # Errors
/// A `Precondition` error carrying the failing report when the
/// Rota-Baxter check fails.
pub fn rota_baxter_split(
    r: &Matrix,
    alg: &HomAlgebra,
    flavor: SplitFlavor,
) -> Result<HomAlgebra, Error> {
    let report = check_rota_baxter(r, alg)?;
    if !report.passed() {
        return Err(Error::Precondition {
            name: "operator passes the rota-baxter check",
            report: Box::new(report),
        });
    }
    let table = alg.single_table("rota-baxter split")?;
    let n = alg.dim();
    let r_col: Vec<Element> = (0..n).map(|i| Element(r.column(i))).collect();
    let mut succ = ProductTable::zero(n);
    for i in 0..n {
        for j in 0..n {
            let img = table.bilinear(&r_col[i], &Element::basis(n, j));
            for (k, v) in img.0.into_iter().enumerate() {
                succ.set(i, j, k, v);
            }
        }
    }
    match flavor {
        SplitFlavor::Malcev => {
            verify_split_homomorphism(r, &succ.commutator(), table)?;
            HomAlgebra::new("pre_malcev", Products::Single(succ), alg.alpha.clone())
        }
        SplitFlavor::Alternative => {
            let mut prec = ProductTable::zero(n);
            for i in 0..n {
                for j in 0..n {
                    let img = table.bilinear(&Element::basis(n, i), &r_col[j]);
                    for (k, v) in img.0.into_iter().enumerate() {
                        prec.set(i, j, k, v);
                    }
                }
            }
            verify_split_homomorphism(r, &prec.add(&succ)?, table)?;
            HomAlgebra::new(
                "pre_alternative",
                Products::Pair {
                    left: prec,
                    right: succ,
                },
                alg.alpha.clone(),
            )
        }
    }
}

/// The compatible product an invertible Kupershmidt operator induces on
/// the algebra: `x·y = T(ϱ(x)T⁻¹(y))`, twist unchanged. The output's
/// commutator equals the original bracket exactly.
///
/// # Errors
/// Polynomial scalars; non-square or singular `T`; a `Precondition` error
/// carrying the failing report when the operator check fails.
pub fn compatible_from_invertible(
    t: &Matrix,
    rep: &Representation,
) -> Result<HomAlgebra, Error> {
    let n = rep.algebra.dim();
    validate_operator(t, n, rep.dim_v())?;
    if t.has_poly() || rep.has_poly() {
        return Err(Error::PolynomialScalars {
            context: "compatible product from an invertible operator",
        });
    }
    let tinv = t.inverse()?;
    let report = check_kupershmidt(t, &OperatorContext::Representation(rep.clone()))?;
    if !report.passed() {
        return Err(Error::Precondition {
            name: "operator passes the kupershmidt check",
            report: Box::new(report),
        });
    }
    let mut out = ProductTable::zero(n);
    for i in 0..n {
        let action = mm(&mm(t, &rep.rho[i]), &tinv);
        for j in 0..n {
            for (k, v) in action.column(j).into_iter().enumerate() {
                out.set(i, j, k, v);
            }
        }
    }
    let bracket = rep.algebra.single_table("compatible product")?;
    if &out.commutator() != bracket {
        return Err(Error::Internal(
            "compatible product's commutator does not reproduce the bracket".into(),
        ));
    }
    HomAlgebra::new("pre_malcev", Products::Single(out), rep.algebra.alpha.clone())
}

/// Evaluates the bilinear form `ω(u, v) = uᵀ Ω v`.
fn form_value(omega: &Matrix, u: &Element, v: &Element) -> Result<Scalar, Error> {
    let w = omega.apply(v.as_slice())?;
    let mut acc = Scalar::zero();
    for (ui, wi) in u.0.iter().zip(&w) {
        acc = acc.add(&ui.mul(wi));
    }
    Ok(acc)
}

/// The product a symplectic form induces on a Malcev-style bracket:
/// the unique solution of `ω(x·y, α(z)) = ω(α(y), [z, x])` for all `z`,
/// with twist `α`. Requires `ω` antisymmetric, nondegenerate, invariant
/// under the twist (`αᵀωα = ω`), and cyclically compatible with the
/// bracket (`ω([x,y],α(z)) + ω([y,z],α(x)) + ω([z,x],α(y)) = 0`). The
/// output passes the pre-Malcev identity and its commutator reproduces
/// the bracket; both are re-verified before returning.
///
/// # Errors
/// Polynomial scalars; dimension mismatch; singular `ω` or twist; input
/// errors for the antisymmetry/invariance/cyclic preconditions.
pub fn symplectic_to_premalcev(omega: &Matrix, alg: &HomAlgebra) -> Result<HomAlgebra, Error> {
    let table = alg.single_table("symplectic construction")?;
    let n = alg.dim();
    validate_operator(omega, n, n)?;
    if omega.has_poly() || alg.has_poly() {
        return Err(Error::PolynomialScalars {
            context: "symplectic construction",
        });
    }
    if omega.transpose().neg() != *omega {
        return Err(Error::Input("symplectic form is not antisymmetric".into()));
    }
    omega.inverse().map_err(|_| Error::Singular {
        context: "symplectic form",
    })?;
    alg.alpha.inverse().map_err(|_| Error::Singular {
        context: "symplectic construction's twist",
    })?;
    let alpha = &alg.alpha;
    if mm(&mm(&alpha.transpose(), omega), alpha) != *omega {
        return Err(Error::Input(
            "symplectic form is not invariant under the twist".into(),
        ));
    }
    let acol: Vec<Element> = (0..n).map(|i| Element(alpha.column(i))).collect();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let s = form_value(omega, &table.basis_product(i, j), &acol[k])?
                    .add(&form_value(omega, &table.basis_product(j, k), &acol[i])?)
                    .add(&form_value(omega, &table.basis_product(k, i), &acol[j])?);
                if !s.is_zero() {
                    return Err(Error::Input(format!(
                        "symplectic form fails the cyclic compatibility with the \
                         bracket at basis triple ({i}, {j}, {k})"
                    )));
                }
            }
        }
    }
    let system = mm(omega, alpha).transpose();
    let mut out = ProductTable::zero(n);
    for i in 0..n {
        for j in 0..n {
            let rhs: Vec<Scalar> = (0..n)
                .map(|k| form_value(omega, &acol[j], &table.basis_product(k, i)))
                .collect::<Result<_, _>>()?;
            for (k, v) in system.solve_unique(&rhs)?.into_iter().enumerate() {
                out.set(i, j, k, v);
            }
        }
    }
    if &out.commutator() != table {
        return Err(Error::Internal(
            "symplectic product's commutator does not reproduce the bracket".into(),
        ));
    }
    let result = HomAlgebra::new("pre_malcev", Products::Single(out), alpha.clone())?;
    let hpm = check_structure(&result, IdentityKind::HomPreMalcev)?;
    if !hpm.passed() {
        return Err(Error::Internal(
            "symplectic product fails the pre-Malcev identity".into(),
        ));
    }
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{commutator_algebra, yau_twist};
    use crate::rep::{adjoint_rep, left_actions, regular_bimodule};
    use crate::report::Status;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn rat(s: &str) -> Scalar {
        Scalar::parse(s).unwrap()
    }

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

    fn bracket5() -> HomAlgebra {
        let mut t = ProductTable::zero(5);
        for (i, j, k, v) in [
            (0, 3, 1, "1"),
            (3, 0, 1, "-1"),
            (1, 4, 2, "1"),
            (4, 1, 2, "-1"),
        ] {
            t.set(i, j, k, rat(v));
        }
        HomAlgebra::with_identity_twist("malcev", Products::Single(t)).unwrap()
    }

    fn morphism4(a4: i64, b3: i64) -> Matrix {
        Matrix::from_columns(vec![
            vec![Scalar::one(), Scalar::zero(), Scalar::zero(), Scalar::int(a4)],
            vec![Scalar::zero(), Scalar::one(), Scalar::int(b3), Scalar::zero()],
            vec![Scalar::zero(), Scalar::zero(), Scalar::int(-1), Scalar::zero()],
            vec![Scalar::zero(), Scalar::zero(), Scalar::zero(), Scalar::int(-1)],
        ])
        .unwrap()
    }

    fn r4(a4: &str, l1: &str) -> Matrix {
        let half = rat(a4).try_div(&Scalar::int(2)).unwrap();
        Matrix::from_columns(vec![
            vec![Scalar::one(), Scalar::zero(), Scalar::zero(), half],
            vec![Scalar::zero(), Scalar::zero(), rat(l1), Scalar::zero()],
            vec![Scalar::zero(); 4],
            vec![Scalar::zero(); 4],
        ])
        .unwrap()
    }

    fn r5(a4: &str, a5: &str, b: &str) -> Matrix {
        let ratio = rat(b).neg().try_div(&rat(a5)).unwrap();
        Matrix::from_columns(vec![
            vec![Scalar::one(), Scalar::zero(), Scalar::zero(), rat(a4), rat(a5)],
            vec![Scalar::zero(), Scalar::zero(), rat(b), Scalar::zero(), Scalar::zero()],
            vec![Scalar::zero(); 5],
            vec![Scalar::zero(), ratio, Scalar::zero(), Scalar::zero(), Scalar::zero()],
            vec![Scalar::zero(); 5],
        ])
        .unwrap()
    }

    fn premalcev4(a4: &str, l1: &str) -> HomAlgebra {
        let mut t = ProductTable::zero(4);
        t.set(0, 0, 3, rat(a4).mul(&Scalar::frac(-1, 2)));
        t.set(0, 1, 1, rat("-1"));
        t.set(0, 2, 2, rat("-1"));
        t.set(0, 3, 3, rat("1"));
        t.set(1, 0, 2, rat(l1));
        t.set(1, 1, 3, rat(l1).mul(&rat("-2")));
        HomAlgebra::with_identity_twist("pre_malcev", Products::Single(t)).unwrap()
    }

    fn nil2() -> HomAlgebra {
        let mut t = ProductTable::zero(2);
        t.set(0, 0, 1, Scalar::one());
        let mut alpha = Matrix::identity(2);
        alpha.set(0, 0, Scalar::int(-1));
        HomAlgebra::new("alternative", Products::Single(t), alpha).unwrap()
    }

    fn adjoint_context(alg: &HomAlgebra) -> OperatorContext {
        OperatorContext::Representation(adjoint_rep(alg).unwrap())
    }

    #[test]
    fn kupershmidt_passes_on_the_twisted_family() {
        for (a4, b3) in [(0, 0), (2, 1), (2, -1), (1, 2)] {
            let alg = yau_twist(&bracket4(), &morphism4(a4, b3)).unwrap();
            let t = r4(&a4.to_string(), "0");
            let r = check_kupershmidt(&t, &adjoint_context(&alg)).unwrap();
            assert_eq!(r.status, Status::Pass, "params ({a4}, {b3})");
            assert_eq!(r.tuples_checked, 1 + 16);
        }
    }

    #[test]
    fn zero_operator_is_kupershmidt() {
        let alg = yau_twist(&bracket4(), &morphism4(0, 0)).unwrap();
        let r = check_kupershmidt(&Matrix::zero(4, 4), &adjoint_context(&alg)).unwrap();
        assert_eq!(r.status, Status::Pass);
    }

    #[test]
    fn corrupted_kupershmidt_fails_with_frozen_witness() {
        let alg = yau_twist(&bracket4(), &morphism4(0, 0)).unwrap();
        let mut t = r4("0", "0");
        t.set(1, 1, Scalar::one()); // send the second basis vector to e₁
        let r = check_kupershmidt(&t, &adjoint_context(&alg)).unwrap();
        assert_eq!(r.status, Status::Fail);
        let w = r.witness.unwrap();
        assert_eq!(w.tuple, vec![1, 0, 1]);
        assert_eq!(w.lhs, vec!["0", "-1", "0", "0"]);
        assert_eq!(w.rhs, vec!["0", "-2", "0", "0"]);
    }

    #[test]
    fn kupershmidt_rejects_algebra_contexts() {
        let alg = bracket4();
        let err = check_kupershmidt(&Matrix::identity(4), &OperatorContext::Algebra(alg));
        assert!(matches!(err, Err(Error::Input(_))));
    }

    #[test]
    fn rota_baxter_on_the_untwisted_algebras() {
        let r = check_rota_baxter(&r4("2", "1"), &bracket4()).unwrap();
        assert_eq!(r.status, Status::Pass);
        assert_eq!(r.tuples_checked, 1 + 16);
        let r = check_rota_baxter(&r5("0", "1", "1"), &bracket5()).unwrap();
        assert_eq!(r.status, Status::Pass);
        assert_eq!(r.tuples_checked, 1 + 25);
    }

    #[test]
    fn rota_baxter_on_the_twisted_algebra() {
        let alg = yau_twist(&bracket4(), &morphism4(2, 1)).unwrap();
        let r = check_rota_baxter(&r4("2", "0"), &alg).unwrap();
        assert_eq!(r.status, Status::Pass);
    }

    #[test]
    fn identity_is_not_rota_baxter_on_a_nonabelian_bracket() {
        let r = check_rota_baxter(&Matrix::identity(4), &bracket4()).unwrap();
        assert_eq!(r.status, Status::Fail);
        let w = r.witness.unwrap();
        assert_eq!(w.tuple, vec![1, 0, 1]);
        assert_eq!(w.lhs, vec!["0", "-1", "0", "0"]);
        assert_eq!(w.rhs, vec!["0", "-2", "0", "0"]);
    }

    #[test]
    fn rota_baxter_twist_equation_failure() {
        let mut op = Matrix::zero(2, 2);
        op.set(0, 1, Scalar::one()); // e₁ ↦ e₀ anticommutes with diag(−1, 1)
        let r = check_rota_baxter(&op, &nil2()).unwrap();
        assert_eq!(r.status, Status::Fail);
        assert_eq!(r.tuples_checked, 1 + 4);
        let w = r.witness.unwrap();
        assert_eq!(w.tuple, vec![0, 1]);
        assert_eq!(w.lhs, vec!["1", "0"]);
        assert_eq!(w.rhs, vec!["-1", "0"]);
    }

    #[test]
    fn trivial_operators_are_nijenhuis_in_both_flavors() {
        for op in [Matrix::zero(4, 4), Matrix::identity(4)] {
            let r = check_nijenhuis(&op, &bracket4(), NijenhuisFlavor::Malcev).unwrap();
            assert_eq!(r.check, "nijenhuis-malcev");
            assert_eq!(r.status, Status::Pass);
            let r =
                check_nijenhuis(&op, &premalcev4("2", "0"), NijenhuisFlavor::PreMalcev).unwrap();
            assert_eq!(r.check, "nijenhuis-pre-malcev");
            assert_eq!(r.status, Status::Pass);
        }
    }

    #[test]
    fn failing_nijenhuis_witnesses_are_frozen() {
        let mut op = Matrix::zero(4, 4);
        op.set(0, 0, Scalar::one());
        op.set(0, 3, Scalar::one());
        let r = check_nijenhuis(&op, &bracket4(), NijenhuisFlavor::Malcev).unwrap();
        assert_eq!(r.status, Status::Fail);
        let w = r.witness.unwrap();
        assert_eq!(w.tuple, vec![1, 1, 2]);
        assert_eq!(w.lhs, vec!["0", "0", "0", "0"]);
        assert_eq!(w.rhs, vec!["-2", "0", "0", "0"]);

        let mut op = Matrix::zero(4, 4);
        op.set(0, 0, Scalar::one());
        op.set(0, 1, Scalar::one());
        let r = check_nijenhuis(&op, &premalcev4("2", "0"), NijenhuisFlavor::PreMalcev).unwrap();
        assert_eq!(r.status, Status::Fail);
        let w = r.witness.unwrap();
        assert_eq!(w.tuple, vec![1, 0, 0]);
        assert_eq!(w.lhs, vec!["0", "0", "0", "-1"]);
        assert_eq!(w.rhs, vec!["0", "0", "0", "0"]);
    }

    #[test]
    fn premalcev_nijenhuis_transfers_to_the_commutator() {
        let alg = premalcev4("2", "0");
        let comm = commutator_algebra(&alg).unwrap();
        let mut transfers = 0;
        for r in 0..4 {
            for c in 0..4 {
                let mut op = Matrix::zero(4, 4);
                op.set(r, c, Scalar::one());
                let pm = check_nijenhuis(&op, &alg, NijenhuisFlavor::PreMalcev).unwrap();
                if pm.passed() {
                    let mv = check_nijenhuis(&op, &comm, NijenhuisFlavor::Malcev).unwrap();
                    assert_eq!(mv.status, Status::Pass, "transfer failed at E{r}{c}");
                    transfers += 1;
                }
            }
        }
        assert!(transfers > 0);
    }

    #[test]
    fn iff_triangle_on_corpus_and_corrupted_operators() {
        let alg = yau_twist(&bracket4(), &morphism4(0, 0)).unwrap();
        let rep = adjoint_rep(&alg).unwrap();
        let ctx = OperatorContext::Representation(rep.clone());
        let big = semidirect_rep(&rep).unwrap();
        let mut corrupted = r4("0", "0");
        corrupted.set(1, 1, Scalar::one());
        for (t, expect) in [(r4("0", "0"), Status::Pass), (corrupted, Status::Fail)] {
            let kuper = check_kupershmidt(&t, &ctx).unwrap();
            let graph = graph_is_subalgebra(&t, &rep).unwrap();
            let block = nijenhuis_from_kupershmidt(&t, &rep).unwrap();
            let nij = check_nijenhuis(&block, &big, NijenhuisFlavor::Malcev).unwrap();
            assert_eq!(kuper.status, expect);
            assert_eq!(graph.status, expect);
            assert_eq!(nij.status, expect);
        }
    }

    #[test]
    fn graph_failure_reports_the_offending_vector() {
        let alg = yau_twist(&bracket4(), &morphism4(0, 0)).unwrap();
        let rep = adjoint_rep(&alg).unwrap();
        let mut t = r4("0", "0");
        t.set(1, 1, Scalar::one());
        let r = graph_is_subalgebra(&t, &rep).unwrap();
        assert_eq!(r.status, Status::Fail);
        assert_eq!(r.tuples_checked, 16 + 4);
        let w = r.witness.unwrap();
        assert_eq!(w.tuple, vec![0, 0, 1]);
        assert_eq!(w.lhs, vec!["0", "-1", "0", "0", "0", "-2", "0", "0"]);
        assert_eq!(w.rhs, vec!["0"; 8]);
    }

    #[test]
    fn iff_triangle_agrees_on_seeded_random_operators() {
        let alg = yau_twist(&bracket4(), &morphism4(0, 0)).unwrap();
        let rep = adjoint_rep(&alg).unwrap();
        let ctx = OperatorContext::Representation(rep.clone());
        let big = semidirect_rep(&rep).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1904);
        for _ in 0..10 {
            let mut t = Matrix::zero(4, 4);
            for r in 0..4 {
                for c in 0..4 {
                    t.set(r, c, Scalar::int(rng.gen_range(-2..=2)));
                }
            }
            let kuper = check_kupershmidt(&t, &ctx).unwrap().status;
            let graph = graph_is_subalgebra(&t, &rep).unwrap().status;
            let block = nijenhuis_from_kupershmidt(&t, &rep).unwrap();
            let nij = check_nijenhuis(&block, &big, NijenhuisFlavor::Malcev)
                .unwrap()
                .status;
            assert_eq!(kuper, graph);
            assert_eq!(kuper, nij);
        }
    }

    #[test]
    fn split_reproduces_the_twisted_premalcev_table() {
        let alg = yau_twist(&bracket4(), &morphism4(2, 0)).unwrap();
        let t = r4("2", "0");
        let split = kupershmidt_split(&t, &adjoint_context(&alg)).unwrap();
        assert_eq!(split.kind, "pre_malcev");
        assert_eq!(split.alpha, alg.alpha);
        let table = split.single_table("test").unwrap();
        let mut expected = ProductTable::zero(4);
        expected.set(0, 0, 3, rat("1"));
        expected.set(0, 1, 1, rat("-1"));
        expected.set(0, 2, 2, rat("1"));
        expected.set(0, 3, 3, rat("-1"));
        assert_eq!(table, &expected);
        // the Rota-Baxter shortcut builds the same algebra
        let shortcut = rota_baxter_split(&t, &alg, SplitFlavor::Malcev).unwrap();
        assert_eq!(shortcut, split);
        // and the output indeed satisfies the pre-Malcev identity
        let hpm = check_structure(&split, IdentityKind::HomPreMalcev).unwrap();
        assert_eq!(hpm.status, Status::Pass);
    }

    #[test]
    fn zero_operator_splits_to_the_abelian_algebra() {
        let alg = yau_twist(&bracket4(), &morphism4(0, 0)).unwrap();
        let split = kupershmidt_split(&Matrix::zero(4, 4), &adjoint_context(&alg)).unwrap();
        assert_eq!(split.single_table("test").unwrap(), &ProductTable::zero(4));
    }

    #[test]
    fn split_requires_a_passing_operator() {
        let alg = yau_twist(&bracket4(), &morphism4(0, 0)).unwrap();
        let mut t = r4("0", "0");
        t.set(1, 1, Scalar::one());
        match kupershmidt_split(&t, &adjoint_context(&alg)) {
            Err(Error::Precondition { report, .. }) => {
                assert_eq!(report.check, "kupershmidt");
                assert_eq!(report.status, Status::Fail);
            }
            other => panic!("expected precondition error, got {other:?}"),
        }
    }

    #[test]
    fn alternative_split_of_nil2() {
        let alg = nil2();
        let mut op = Matrix::identity(2);
        op.set(0, 0, Scalar::int(2));
        // via the Rota-Baxter shortcut
        let split = rota_baxter_split(&op, &alg, SplitFlavor::Alternative).unwrap();
        assert_eq!(split.kind, "pre_alternative");
        let (prec, succ) = split.pair_tables("test").unwrap();
        let mut expected = ProductTable::zero(2);
        expected.set(0, 0, 1, rat("2"));
        assert_eq!(prec, &expected);
        assert_eq!(succ, &expected);
        let r = check_structure(&split, IdentityKind::HomPreAlternative).unwrap();
        assert_eq!(r.status, Status::Pass);
        // via the regular bimodule, same structure
        let bm = regular_bimodule(&alg, BimoduleFlavor::Alternative).unwrap();
        let viabm = kupershmidt_split(&op, &OperatorContext::Bimodule(bm)).unwrap();
        assert_eq!(viabm, split);
    }

    #[test]
    fn premalcev_bimodule_kupershmidt_check() {
        let alg = premalcev4("2", "0");
        let bm = regular_bimodule(&alg, BimoduleFlavor::PreMalcev).unwrap();
        let ctx = OperatorContext::Bimodule(bm);
        let r = check_kupershmidt(&Matrix::zero(4, 4), &ctx).unwrap();
        assert_eq!(r.status, Status::Pass);
        assert_eq!(r.tuples_checked, 1 + 16 + 16);
        // the identity is not a Kupershmidt operator here: products double
        let r = check_kupershmidt(&Matrix::identity(4), &ctx).unwrap();
        assert_eq!(r.status, Status::Fail);
        let w = r.witness.unwrap();
        assert_eq!(w.tuple, vec![1, 0, 0]);
        assert_eq!(w.lhs, vec!["0", "0", "0", "-1"]);
        assert_eq!(w.rhs, vec!["0", "0", "0", "-2"]);
        // and no splitting is defined in this context
        assert!(matches!(
            kupershmidt_split(&Matrix::zero(4, 4), &ctx),
            Err(Error::Input(_))
        ));
    }

    #[test]
    fn compatible_product_from_the_identity_operator() {
        let alg = premalcev4("2", "0");
        let rep = Representation::new(
            commutator_algebra(&alg).unwrap(),
            left_actions(alg.single_table("test").unwrap()),
            Matrix::identity(4),
        )
        .unwrap();
        let rebuilt = compatible_from_invertible(&Matrix::identity(4), &rep).unwrap();
        assert_eq!(
            rebuilt.single_table("test").unwrap(),
            alg.single_table("test").unwrap()
        );
        assert_eq!(rebuilt.kind, "pre_malcev");
    }

    #[test]
    fn compatible_product_on_an_abelian_algebra_is_abelian() {
        let abelian = commutator_algebra(&nil2()).unwrap();
        let rep = adjoint_rep(&abelian).unwrap();
        let mut op = Matrix::identity(2);
        op.set(0, 0, Scalar::int(2));
        let out = compatible_from_invertible(&op, &rep).unwrap();
        assert_eq!(out.single_table("test").unwrap(), &ProductTable::zero(2));
        assert!(matches!(
            compatible_from_invertible(&Matrix::zero(2, 2), &rep),
            Err(Error::Singular { .. })
        ));
    }

    #[test]
    fn symplectic_product_on_the_nonabelian_two_dim_algebra() {
        let mut t = ProductTable::zero(2);
        t.set(0, 1, 1, Scalar::one());
        t.set(1, 0, 1, Scalar::int(-1));
        let alg = HomAlgebra::with_identity_twist("malcev", Products::Single(t)).unwrap();
        let omega = Matrix::from_rows(vec![
            vec![Scalar::zero(), Scalar::one()],
            vec![Scalar::int(-1), Scalar::zero()],
        ])
        .unwrap();
        let out = symplectic_to_premalcev(&omega, &alg).unwrap();
        let mut expected = ProductTable::zero(2);
        expected.set(0, 0, 0, Scalar::int(-1));
        expected.set(1, 0, 1, Scalar::int(-1));
        assert_eq!(out.single_table("test").unwrap(), &expected);
        assert_eq!(out.kind, "pre_malcev");
    }

    #[test]
    fn symplectic_on_abelian_algebras_is_abelian() {
        for alpha_sign in [1, -1] {
            let alpha = Matrix::identity(2).scale(&Scalar::int(alpha_sign));
            let alg =
                HomAlgebra::new("malcev", Products::Single(ProductTable::zero(2)), alpha).unwrap();
            let omega = Matrix::from_rows(vec![
                vec![Scalar::zero(), Scalar::one()],
                vec![Scalar::int(-1), Scalar::zero()],
            ])
            .unwrap();
            let out = symplectic_to_premalcev(&omega, &alg).unwrap();
            assert_eq!(out.single_table("test").unwrap(), &ProductTable::zero(2));
        }
        // 4-dim standard symplectic form on the abelian algebra
        let alg = HomAlgebra::with_identity_twist("malcev", Products::Single(ProductTable::zero(4)))
            .unwrap();
        let mut omega = Matrix::zero(4, 4);
        omega.set(0, 2, Scalar::one());
        omega.set(1, 3, Scalar::one());
        omega.set(2, 0, Scalar::int(-1));
        omega.set(3, 1, Scalar::int(-1));
        let out = symplectic_to_premalcev(&omega, &alg).unwrap();
        assert_eq!(out.single_table("test").unwrap(), &ProductTable::zero(4));
    }

    #[test]
    fn symplectic_product_on_the_four_dim_bracket() {
        // the standard form pairing e₀↔e₂ and e₁↔e₃ is a cocycle here
        let mut omega = Matrix::zero(4, 4);
        omega.set(0, 2, Scalar::one());
        omega.set(1, 3, Scalar::one());
        omega.set(2, 0, Scalar::int(-1));
        omega.set(3, 1, Scalar::int(-1));
        let out = symplectic_to_premalcev(&omega, &bracket4()).unwrap();
        let mut expected = ProductTable::zero(4);
        for (i, j, k, v) in [
            (0, 0, 0, "1"),
            (0, 1, 1, "-1"),
            (0, 3, 3, "1"),
            (1, 1, 0, "-2"),
            (1, 3, 2, "-1"),
            (2, 0, 2, "1"),
            (2, 1, 3, "-2"),
            (3, 1, 2, "-1"),
        ] {
            expected.set(i, j, k, rat(v));
        }
        assert_eq!(out.single_table("test").unwrap(), &expected);
        assert_eq!(
            commutator_algebra(&out).unwrap().single_table("test").unwrap(),
            bracket4().single_table("test").unwrap()
        );
    }

    #[test]
    fn symplectic_precondition_failures() {
        let alg = HomAlgebra::with_identity_twist("malcev", Products::Single(ProductTable::zero(2)))
            .unwrap();
        // degenerate
        assert!(matches!(
            symplectic_to_premalcev(&Matrix::zero(2, 2), &alg),
            Err(Error::Singular { context: "symplectic form" })
        ));
        // not antisymmetric
        assert!(matches!(
            symplectic_to_premalcev(&Matrix::identity(2), &alg),
            Err(Error::Input(_))
        ));
        // not twist-invariant
        let mut alpha = Matrix::identity(2);
        alpha.set(0, 0, Scalar::int(2));
        let scaled =
            HomAlgebra::new("malcev", Products::Single(ProductTable::zero(2)), alpha).unwrap();
        let omega = Matrix::from_rows(vec![
            vec![Scalar::zero(), Scalar::one()],
            vec![Scalar::int(-1), Scalar::zero()],
        ])
        .unwrap();
        assert!(matches!(
            symplectic_to_premalcev(&omega, &scaled),
            Err(Error::Input(_))
        ));
        // cyclic compatibility fails on the 4-dim bracket for the
        // pairing e₀↔e₃, e₁↔e₂ (first bad triple (0, 1, 2))
        let mut omega = Matrix::zero(4, 4);
        omega.set(0, 3, Scalar::one());
        omega.set(1, 2, Scalar::one());
        omega.set(3, 0, Scalar::int(-1));
        omega.set(2, 1, Scalar::int(-1));
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
        let nonab = HomAlgebra::with_identity_twist("malcev", Products::Single(t)).unwrap();
        assert!(matches!(
            symplectic_to_premalcev(&omega, &nonab),
            Err(Error::Input(_))
        ));
    }
}
