//! Representations and bimodules: axiom checkers, semidirect products, and
//! the dual / coadjoint / twisted constructions.
//!
//! A representation is a matrix family `ρ[i]` (the action of basis vector
//! `e_i`) on a module `V` together with a module twist `β`. A bimodule
//! carries left and right action families `ℓ`, `r` instead; the combined
//! map `ϱ(x) = ℓ(x) − r(x)` is always derived, never stored.

use crate::algebra::{apply_map, Element, HomAlgebra, ProductTable, Products};
use crate::construct::commutator_algebra;
use crate::error::Error;
use crate::matrix::Matrix;
use crate::report::{CheckReport, FailureTracker};

/// Multiplies matrices whose shapes are guaranteed by construction.
fn mm(a: &Matrix, b: &Matrix) -> Matrix {
    a.mul(b).expect("operator shapes agree")
}

/// Linear extension of a matrix family: `Σᵢ xᵢ · mats[i]`.
#[must_use]
pub fn combine_actions(mats: &[Matrix], x: &Element) -> Matrix {
    let m = mats.first().map_or(0, Matrix::rows);
    let mut out = Matrix::zero(m, m);
    for (i, xi) in x.0.iter().enumerate() {
        if !xi.is_zero() {
            out = out.add(&mats[i].scale(xi)).expect("same shape");
        }
    }
    out
}

/// Left-multiplication matrices of a product table: column `j` of
/// `mats[i]` is `e_i ∘ e_j`.
#[must_use]
pub fn left_actions(table: &ProductTable) -> Vec<Matrix> {
    let n = table.dim();
    (0..n)
        .map(|i| {
            Matrix::from_columns((0..n).map(|j| table.row(i, j).to_vec()).collect())
                .expect("square family")
        })
        .collect()
}

/// Right-multiplication matrices: column `j` of `mats[i]` is `e_j ∘ e_i`.
#[must_use]
pub fn right_actions(table: &ProductTable) -> Vec<Matrix> {
    let n = table.dim();
    (0..n)
        .map(|i| {
            Matrix::from_columns((0..n).map(|j| table.row(j, i).to_vec()).collect())
                .expect("square family")
        })
        .collect()
}

/// A module `(V, ρ, β)` over an algebra with a single product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    /// The represented algebra.
    pub algebra: HomAlgebra,
    /// Action matrices; `rho[i]` is the action of `e_i`.
    pub rho: Vec<Matrix>,
    /// The module twist.
    pub beta: Matrix,
}

impl Representation {
    /// Assembles and validates a representation.
    ///
    /// # Errors
    /// Dimension error when the family length differs from the algebra
    /// dimension or any matrix is not square of the module dimension.
    pub fn new(algebra: HomAlgebra, rho: Vec<Matrix>, beta: Matrix) -> Result<Self, Error> {
        if rho.len() != algebra.dim() {
            return Err(Error::Dim {
                context: "action family length",
                expected: algebra.dim(),
                got: rho.len(),
            });
        }
        let m = beta.rows();
        for mat in std::iter::once(&beta).chain(&rho) {
            if mat.rows() != m || mat.cols() != m {
                return Err(Error::Dim {
                    context: "module action shape",
                    expected: m,
                    got: mat.rows(),
                });
            }
        }
        Ok(Representation { algebra, rho, beta })
    }

    /// Module dimension.
    #[must_use]
    pub fn dim_v(&self) -> usize {
        self.beta.rows()
    }

    /// The action of an arbitrary algebra element, by linearity.
    #[must_use]
    pub fn rho_of(&self, x: &Element) -> Matrix {
        combine_actions(&self.rho, x)
    }

    /// Whether any matrix or the algebra carries polynomial entries.
    #[must_use]
    pub fn has_poly(&self) -> bool {
        self.algebra.has_poly() || self.beta.has_poly() || self.rho.iter().any(Matrix::has_poly)
    }
}

/// Which axiom family a bimodule is claimed to satisfy.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BimoduleFlavor {
    /// The polarized alternative-bimodule axioms.
    Alternative,
    /// The five pre-Malcev bimodule axioms.
    PreMalcev,
}

impl BimoduleFlavor {
    /// The label used in files.
    #[must_use]
    pub fn as_str(self) -> &'static str {
        match self {
            BimoduleFlavor::Alternative => "alternative",
            BimoduleFlavor::PreMalcev => "pre_malcev",
        }
    }

    /// Parses a file label.
    ///
    /// # Errors
    /// Input error on anything but `alternative` / `pre_malcev`.
    pub fn parse(s: &str) -> Result<Self, Error> {
        match s {
            "alternative" => Ok(BimoduleFlavor::Alternative),
            "pre_malcev" => Ok(BimoduleFlavor::PreMalcev),
            other => Err(Error::Input(format!(
                "unknown bimodule flavor {other:?} (expected \"alternative\" or \"pre_malcev\")"
            ))),
        }
    }
}

/// A two-sided module `(V, ℓ, r, β)` over a single-product algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bimodule {
    /// The acting algebra.
    pub algebra: HomAlgebra,
    /// Left action matrices.
    pub ell: Vec<Matrix>,
    /// Right action matrices.
    pub r: Vec<Matrix>,
    /// The module twist.
    pub beta: Matrix,
    /// The axiom family this bimodule is checked against.
    pub flavor: BimoduleFlavor,
}

impl Bimodule {
    /// Assembles and validates a bimodule.
    ///
    /// # Errors
    /// Dimension error on family-length or matrix-shape mismatch.
    pub fn new(
        algebra: HomAlgebra,
        ell: Vec<Matrix>,
        r: Vec<Matrix>,
        beta: Matrix,
        flavor: BimoduleFlavor,
    ) -> Result<Self, Error> {
        for family in [&ell, &r] {
            if family.len() != algebra.dim() {
                return Err(Error::Dim {
                    context: "action family length",
                    expected: algebra.dim(),
                    got: family.len(),
                });
            }
        }
        let m = beta.rows();
        for mat in std::iter::once(&beta).chain(&ell).chain(&r) {
            if mat.rows() != m || mat.cols() != m {
                return Err(Error::Dim {
                    context: "module action shape",
                    expected: m,
                    got: mat.rows(),
                });
            }
        }
        Ok(Bimodule {
            algebra,
            ell,
            r,
            beta,
            flavor,
        })
    }

    /// Module dimension.
    #[must_use]
    pub fn dim_v(&self) -> usize {
        self.beta.rows()
    }

    /// Left action of an arbitrary element.
    #[must_use]
    pub fn ell_of(&self, x: &Element) -> Matrix {
        combine_actions(&self.ell, x)
    }

    /// Right action of an arbitrary element.
    #[must_use]
    pub fn r_of(&self, x: &Element) -> Matrix {
        combine_actions(&self.r, x)
    }

    /// The combined action `ϱ(x) = ℓ(x) − r(x)`.
    #[must_use]
    pub fn varrho_of(&self, x: &Element) -> Matrix {
        self.ell_of(x).sub(&self.r_of(x)).expect("same shape")
    }

    /// Whether any matrix or the algebra carries polynomial entries.
    #[must_use]
    pub fn has_poly(&self) -> bool {
        self.algebra.has_poly()
            || self.beta.has_poly()
            || self.ell.iter().any(Matrix::has_poly)
            || self.r.iter().any(Matrix::has_poly)
    }
}

/// Checks the two representation axioms against the algebra's single
/// product. Equation 0 (all basis `x`): `ρ(α(x))β = βρ(x)`. Equation 1
/// (all basis triples `(x,y,z)`):
/// `ρ([[x,y],α(z)])β² = ρ(α²x)ρ(αy)ρ(z) − ρ(α²z)ρ(αx)ρ(y) + ρ(α²y)ρ([z,x])β − ρ(α[y,z])ρ(αx)β`.
///
/// # Errors
/// Fails if the algebra carries a product pair.
pub fn check_representation(rep: &Representation) -> Result<CheckReport, Error> {
    let table = rep.algebra.single_table("representation check")?;
    let n = rep.algebra.dim();
    let alpha = &rep.algebra.alpha;
    let asq = mm(alpha, alpha);
    let beta = &rep.beta;
    let bsq = mm(beta, beta);
    let acol: Vec<Element> = (0..n).map(|i| Element(alpha.column(i))).collect();
    let rho_a: Vec<Matrix> = (0..n).map(|i| rep.rho_of(&acol[i])).collect();
    let rho_a2: Vec<Matrix> = (0..n)
        .map(|i| rep.rho_of(&Element(asq.column(i))))
        .collect();
    let mut tracker = FailureTracker::new();
    for x in 0..n {
        let lhs = mm(&rho_a[x], beta);
        let rhs = mm(beta, &rep.rho[x]);
        tracker.check_matrix(&[0, x], &lhs, &rhs);
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let bracket = table.bilinear(&table.basis_product(i, j), &acol[k]);
                let lhs = mm(&rep.rho_of(&bracket), &bsq);
                let t1 = mm(&mm(&rho_a2[i], &rho_a[j]), &rep.rho[k]);
                let t2 = mm(&mm(&rho_a2[k], &rho_a[i]), &rep.rho[j]);
                let t3 = mm(&mm(&rho_a2[j], &rep.rho_of(&table.basis_product(k, i))), beta);
                let t4 = mm(
                    &mm(
                        &rep.rho_of(&apply_map(alpha, &table.basis_product(j, k))),
                        &rho_a[i],
                    ),
                    beta,
                );
                let rhs = t1
                    .sub(&t2)
                    .and_then(|s| s.add(&t3))
                    .and_then(|s| s.sub(&t4))
                    .expect("same shape");
                tracker.check_matrix(&[1, i, j, k], &lhs, &rhs);
            }
        }
    }
    Ok(tracker.finish("representation"))
}

/// Checks a bimodule against its flavor's axioms: see
/// [`BimoduleFlavor`]. Reports under `alternative-bimodule` or
/// `pre-malcev-bimodule`.
///
/// # Errors
/// Fails if the algebra carries a product pair.
pub fn check_bimodule(bm: &Bimodule) -> Result<CheckReport, Error> {
    match bm.flavor {
        BimoduleFlavor::Alternative => check_alternative_bimodule(bm),
        BimoduleFlavor::PreMalcev => check_premalcev_bimodule(bm),
    }
}

/// The four polarized alternative-bimodule axioms over all basis pairs.
/// Squared-variable conditions are polarized (`x ↦ x + y` expanded), since
/// checking squares of basis vectors alone is not sufficient.
fn check_alternative_bimodule(bm: &Bimodule) -> Result<CheckReport, Error> {
    let table = bm.algebra.single_table("alternative bimodule check")?;
    let n = bm.algebra.dim();
    let alpha = &bm.algebra.alpha;
    let beta = &bm.beta;
    let acol: Vec<Element> = (0..n).map(|i| Element(alpha.column(i))).collect();
    let ell_a: Vec<Matrix> = (0..n).map(|i| bm.ell_of(&acol[i])).collect();
    let r_a: Vec<Matrix> = (0..n).map(|i| bm.r_of(&acol[i])).collect();
    let mut tracker = FailureTracker::new();
    for eq in 0..4 {
        for i in 0..n {
            for j in 0..n {
                let sym = table.basis_product(i, j).add(&table.basis_product(j, i));
                let (lhs, rhs) = match eq {
                    // ℓ(x∗y + y∗x)β = ℓ(αx)ℓ(y) + ℓ(αy)ℓ(x)
                    0 => (
                        mm(&bm.ell_of(&sym), beta),
                        mm(&ell_a[i], &bm.ell[j])
                            .add(&mm(&ell_a[j], &bm.ell[i]))
                            .expect("same shape"),
                    ),
                    // r(x∗y + y∗x)β = r(αx)r(y) + r(αy)r(x)
                    1 => (
                        mm(&bm.r_of(&sym), beta),
                        mm(&r_a[i], &bm.r[j])
                            .add(&mm(&r_a[j], &bm.r[i]))
                            .expect("same shape"),
                    ),
                    // r(αy)ℓ(x) − ℓ(αx)r(y) = r(x∗y)β − r(αy)r(x)
                    2 => (
                        mm(&r_a[j], &bm.ell[i])
                            .sub(&mm(&ell_a[i], &bm.r[j]))
                            .expect("same shape"),
                        mm(&bm.r_of(&table.basis_product(i, j)), beta)
                            .sub(&mm(&r_a[j], &bm.r[i]))
                            .expect("same shape"),
                    ),
                    // ℓ(y∗x)β − ℓ(αy)ℓ(x) = ℓ(αy)r(x) − r(αx)ℓ(y)
                    _ => (
                        mm(&bm.ell_of(&table.basis_product(j, i)), beta)
                            .sub(&mm(&ell_a[j], &bm.ell[i]))
                            .expect("same shape"),
                        mm(&ell_a[j], &bm.r[i])
                            .sub(&mm(&r_a[i], &bm.ell[j]))
                            .expect("same shape"),
                    ),
                };
                tracker.check_matrix(&[eq, i, j], &lhs, &rhs);
            }
        }
    }
    Ok(tracker.finish("alternative-bimodule"))
}

/// The five pre-Malcev bimodule axioms: the two β-compatibilities over all
/// basis vectors (equations 0, 1), then four operator identities over all
/// basis triples (equations 2–5), each `expr = 0`.
fn check_premalcev_bimodule(bm: &Bimodule) -> Result<CheckReport, Error> {
    let table = bm.algebra.single_table("pre-malcev bimodule check")?;
    let n = bm.algebra.dim();
    let m = bm.dim_v();
    let alpha = &bm.algebra.alpha;
    let asq = mm(alpha, alpha);
    let beta = &bm.beta;
    let bsq = mm(beta, beta);
    let zero = Matrix::zero(m, m);
    let acol: Vec<Element> = (0..n).map(|i| Element(alpha.column(i))).collect();
    let a2col: Vec<Element> = (0..n).map(|i| Element(asq.column(i))).collect();
    let p = |u: &Element, v: &Element| table.bilinear(u, v);
    let br = |u: &Element, v: &Element| p(u, v).sub(&p(v, u));
    let mut tracker = FailureTracker::new();
    // equations 0 and 1: βℓ(x) = ℓ(α(x))β and βr(x) = r(α(x))β
    for x in 0..n {
        let lhs = mm(beta, &bm.ell[x]);
        let rhs = mm(&bm.ell_of(&acol[x]), beta);
        tracker.check_matrix(&[0, x], &lhs, &rhs);
    }
    for x in 0..n {
        let lhs = mm(beta, &bm.r[x]);
        let rhs = mm(&bm.r_of(&acol[x]), beta);
        tracker.check_matrix(&[1, x], &lhs, &rhs);
    }
    // equations 2..5 over basis triples (x, y, z), each a sum that must vanish
    for eq in 2..6 {
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let (x, y, z) = (
                        Element::basis(n, i),
                        Element::basis(n, j),
                        Element::basis(n, k),
                    );
                    let sum = match eq {
                        // r(α²x)ϱ(αy)ϱ(z) − r(αz·(y·x))β² + ℓ(α²y)r(z·x)β
                        //   + ℓ(α[z,y])r(αx)β − ℓ(α²z)r(αx)ϱ(y) = 0
                        2 => {
                            let t1 = mm(&mm(&bm.r_of(&a2col[i]), &bm.varrho_of(&acol[j])), &bm.varrho_of(&z));
                            let t2 = mm(&bm.r_of(&p(&acol[k], &p(&y, &x))), &bsq);
                            let t3 = mm(&mm(&bm.ell_of(&a2col[j]), &bm.r_of(&p(&z, &x))), beta);
                            let t4 = mm(
                                &mm(&bm.ell_of(&apply_map(alpha, &br(&z, &y))), &bm.r_of(&acol[i])),
                                beta,
                            );
                            let t5 = mm(&mm(&bm.ell_of(&a2col[k]), &bm.r_of(&acol[i])), &bm.varrho_of(&y));
                            t1.sub(&t2)
                                .and_then(|s| s.add(&t3))
                                .and_then(|s| s.add(&t4))
                                .and_then(|s| s.sub(&t5))
                                .expect("same shape")
                        }
                        // ℓ(α²y)ℓ(αz)r(x) − r(α²x)ϱ(αy)ϱ(z) − ℓ(α²z)r(y·x)β
                        //   − r(α(z·x))ϱ(αy)β + r([z,y]·αx)β² = 0
                        3 => {
                            let t1 = mm(&mm(&bm.ell_of(&a2col[j]), &bm.ell_of(&acol[k])), &bm.r[i]);
                            let t2 = mm(&mm(&bm.r_of(&a2col[i]), &bm.varrho_of(&acol[j])), &bm.varrho_of(&z));
                            let t3 = mm(&mm(&bm.ell_of(&a2col[k]), &bm.r_of(&p(&y, &x))), beta);
                            let t4 = mm(
                                &mm(&bm.r_of(&apply_map(alpha, &p(&z, &x))), &bm.varrho_of(&acol[j])),
                                beta,
                            );
                            let t5 = mm(&bm.r_of(&p(&br(&z, &y), &acol[i])), &bsq);
                            t1.sub(&t2)
                                .and_then(|s| s.sub(&t3))
                                .and_then(|s| s.sub(&t4))
                                .and_then(|s| s.add(&t5))
                                .expect("same shape")
                        }
                        // r(αy·(z·x))β² + r(α²x)ϱ([y,z])β − ℓ(α²y)ℓ(αz)r(x)
                        //   + r(α(y·x))ϱ(αz)β + ℓ(α²z)r(αx)ϱ(y) = 0
                        4 => {
                            let t1 = mm(&bm.r_of(&p(&acol[j], &p(&z, &x))), &bsq);
                            let t2 = mm(&mm(&bm.r_of(&a2col[i]), &bm.varrho_of(&br(&y, &z))), beta);
                            let t3 = mm(&mm(&bm.ell_of(&a2col[j]), &bm.ell_of(&acol[k])), &bm.r[i]);
                            let t4 = mm(
                                &mm(&bm.r_of(&apply_map(alpha, &p(&y, &x))), &bm.varrho_of(&acol[k])),
                                beta,
                            );
                            let t5 = mm(&mm(&bm.ell_of(&a2col[k]), &bm.r_of(&acol[i])), &bm.varrho_of(&y));
                            t1.add(&t2)
                                .and_then(|s| s.sub(&t3))
                                .and_then(|s| s.add(&t4))
                                .and_then(|s| s.add(&t5))
                                .expect("same shape")
                        }
                        // ℓ([[x,y],αz])β² − ℓ(α²x)ℓ(αy)ℓ(z) + ℓ(α²z)ℓ(αx)ℓ(y)
                        //   + ℓ(α[y,z])ℓ(αx)β + ℓ(α²y)ℓ([x,z])β = 0
                        _ => {
                            let t1 = mm(&bm.ell_of(&br(&br(&x, &y), &acol[k])), &bsq);
                            let t2 = mm(&mm(&bm.ell_of(&a2col[i]), &bm.ell_of(&acol[j])), &bm.ell[k]);
                            let t3 = mm(&mm(&bm.ell_of(&a2col[k]), &bm.ell_of(&acol[i])), &bm.ell[j]);
                            let t4 = mm(
                                &mm(&bm.ell_of(&apply_map(alpha, &br(&y, &z))), &bm.ell_of(&acol[i])),
                                beta,
                            );
                            let t5 = mm(&mm(&bm.ell_of(&a2col[j]), &bm.ell_of(&br(&x, &z))), beta);
                            t1.sub(&t2)
                                .and_then(|s| s.add(&t3))
                                .and_then(|s| s.add(&t4))
                                .and_then(|s| s.add(&t5))
                                .expect("same shape")
                        }
                    };
                    tracker.check_matrix(&[eq, i, j, k], &sum, &zero);
                }
            }
        }
    }
    Ok(tracker.finish("pre-malcev-bimodule"))
}

/// The semidirect bracket on `A ⊕ V`:
/// `[x+a, y+b] = [x,y] + ρ(x)b − ρ(y)a`, with twist `α ⊕ β`.
///
/// # Errors
/// Fails if the algebra carries a product pair.
pub fn semidirect_rep(rep: &Representation) -> Result<HomAlgebra, Error> {
    let table = rep.algebra.single_table("semidirect product")?;
    let n = rep.algebra.dim();
    let m = rep.dim_v();
    let mut out = ProductTable::zero(n + m);
    for i in 0..n {
        for j in 0..n {
            for (k, v) in table.row(i, j).iter().enumerate() {
                out.set(i, j, k, v.clone());
            }
        }
    }
    for i in 0..n {
        for b in 0..m {
            for row in 0..m {
                let v = rep.rho[i].get(row, b);
                out.set(i, n + b, n + row, v.clone());
                out.set(n + b, i, n + row, v.neg());
            }
        }
    }
    HomAlgebra::new(
        "malcev",
        Products::Single(out),
        rep.algebra.alpha.direct_sum(&rep.beta),
    )
}

/// The semidirect product on `A ⊕ V` for a bimodule:
/// `(x+a)·(y+b) = x·y + ℓ(x)b + r(y)a`, with twist `α ⊕ β`.
///
/// # Errors
/// Fails if the algebra carries a product pair.
pub fn semidirect_bimodule(bm: &Bimodule) -> Result<HomAlgebra, Error> {
    let table = bm.algebra.single_table("semidirect product")?;
    let n = bm.algebra.dim();
    let m = bm.dim_v();
    let mut out = ProductTable::zero(n + m);
    for i in 0..n {
        for j in 0..n {
            for (k, v) in table.row(i, j).iter().enumerate() {
                out.set(i, j, k, v.clone());
            }
        }
    }
    for i in 0..n {
        for b in 0..m {
            for row in 0..m {
                out.set(i, n + b, n + row, bm.ell[i].get(row, b).clone());
                out.set(n + b, i, n + row, bm.r[i].get(row, b).clone());
            }
        }
    }
    let kind = match bm.flavor {
        BimoduleFlavor::Alternative => "alternative",
        BimoduleFlavor::PreMalcev => "pre_malcev",
    };
    HomAlgebra::new(
        kind,
        Products::Single(out),
        bm.algebra.alpha.direct_sum(&bm.beta),
    )
}

/// The adjoint representation of a single-product algebra on itself:
/// `ρ[i]` is the matrix of `y ↦ [e_i, y]`, with module twist `α`.
///
/// # Errors
/// Fails if the algebra carries a product pair.
pub fn adjoint_rep(alg: &HomAlgebra) -> Result<Representation, Error> {
    let table = alg.single_table("adjoint representation")?;
    let rho = left_actions(table);
    Representation::new(alg.clone(), rho, alg.alpha.clone())
}

/// The regular bimodule of a single-product algebra on itself:
/// `ℓ(e_i) = x ↦ e_i∘x`, `r(e_i) = x ↦ x∘e_i`, module twist `α`.
///
/// # Errors
/// Fails if the algebra carries a product pair.
pub fn regular_bimodule(alg: &HomAlgebra, flavor: BimoduleFlavor) -> Result<Bimodule, Error> {
    let table = alg.single_table("regular bimodule")?;
    Bimodule::new(
        alg.clone(),
        left_actions(table),
        right_actions(table),
        alg.alpha.clone(),
        flavor,
    )
}

/// The representation `(V, ℓ, β)` of the commutator algebra induced by a
/// pre-Malcev bimodule's left action.
///
/// # Errors
/// Fails if the algebra carries a product pair.
pub fn bimodule_left_rep(bm: &Bimodule) -> Result<Representation, Error> {
    Representation::new(
        commutator_algebra(&bm.algebra)?,
        bm.ell.clone(),
        bm.beta.clone(),
    )
}

/// The representation `(V, ℓ − r, β)` of the commutator algebra induced by
/// a bimodule's combined action.
///
/// # Errors
/// Fails if the algebra carries a product pair.
pub fn bimodule_varrho_rep(bm: &Bimodule) -> Result<Representation, Error> {
    let rho = bm
        .ell
        .iter()
        .zip(&bm.r)
        .map(|(l, r)| l.sub(r).expect("same shape"))
        .collect();
    Representation::new(commutator_algebra(&bm.algebra)?, rho, bm.beta.clone())
}

/// The dual representation: `ρ⋆[i] = −(β⁻² · ρ(α(e_i)))ᵀ` with module
/// twist `β⋆ = (β⁻¹)ᵀ`. Applying it twice returns the original matrices.
///
/// # Errors
/// Polynomial scalars; singular `β`; a `Precondition` error carrying the
/// failing report when the input fails the representation axioms or the
/// algebra twist is not multiplicative (the construction needs both).
pub fn dual_representation(rep: &Representation) -> Result<Representation, Error> {
    if rep.has_poly() {
        return Err(Error::PolynomialScalars {
            context: "dual representation",
        });
    }
    let binv = rep.beta.inverse()?;
    let axioms = check_representation(rep)?;
    if !axioms.passed() {
        return Err(Error::Precondition {
            name: "input satisfies the representation axioms",
            report: Box::new(axioms),
        });
    }
    let multiplicative = rep.algebra.check_multiplicative();
    if !multiplicative.passed() {
        return Err(Error::Precondition {
            name: "twist is multiplicative",
            report: Box::new(multiplicative),
        });
    }
    let binv2 = mm(&binv, &binv);
    let n = rep.algebra.dim();
    let rho_star = (0..n)
        .map(|i| {
            let image = Element(rep.algebra.alpha.column(i));
            mm(&binv2, &rep.rho_of(&image)).transpose().neg()
        })
        .collect();
    Representation::new(rep.algebra.clone(), rho_star, binv.transpose())
}

/// The coadjoint representation: the dual of the adjoint.
///
/// # Errors
/// As [`dual_representation`]; a singular algebra twist surfaces as the
/// singular-matrix error (the adjoint's module twist is `α`).
pub fn coadjoint_rep(alg: &HomAlgebra) -> Result<Representation, Error> {
    dual_representation(&adjoint_rep(alg)?)
}

/// The semidirect algebra on `A ⊕ A*` built from the coadjoint
/// representation.
///
/// # Errors
/// As [`coadjoint_rep`].
pub fn coadjoint_semidirect(alg: &HomAlgebra) -> Result<HomAlgebra, Error> {
    semidirect_rep(&coadjoint_rep(alg)?)
}

/// How [`twist_rep`] transforms a representation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TwistMode {
    /// `ρ̃(x) = ρ(α(x))β` over the twisted algebra `(A, α∘product, α)`;
    /// requires the algebra twist to be multiplicative and the
    /// compatibility `βρ(x) = ρ(α(x))β`.
    Yau,
    /// `ρ'(x) = ρ(α²(x))` over the unchanged algebra; no extra
    /// preconditions.
    AlphaPower,
}

/// Twists a representation along the algebra's own twist map.
///
/// # Errors
/// In `Yau` mode, a `Precondition` error carrying the failing report when
/// the twist is not multiplicative or the compatibility fails; fails on
/// product pairs.
pub fn twist_rep(rep: &Representation, mode: TwistMode) -> Result<Representation, Error> {
    let n = rep.algebra.dim();
    let alpha = &rep.algebra.alpha;
    match mode {
        TwistMode::AlphaPower => {
            let asq = mm(alpha, alpha);
            let rho = (0..n)
                .map(|i| rep.rho_of(&Element(asq.column(i))))
                .collect();
            Representation::new(rep.algebra.clone(), rho, rep.beta.clone())
        }
        TwistMode::Yau => {
            let multiplicative = rep.algebra.check_multiplicative();
            if !multiplicative.passed() {
                return Err(Error::Precondition {
                    name: "twist is multiplicative",
                    report: Box::new(multiplicative),
                });
            }
            let mut tracker = FailureTracker::new();
            let rho_a: Vec<Matrix> = (0..n)
                .map(|i| rep.rho_of(&Element(alpha.column(i))))
                .collect();
            for x in 0..n {
                let lhs = mm(&rep.beta, &rep.rho[x]);
                let rhs = mm(&rho_a[x], &rep.beta);
                tracker.check_matrix(&[x], &lhs, &rhs);
            }
            let compatibility = tracker.finish("twist-compatibility");
            if !compatibility.passed() {
                return Err(Error::Precondition {
                    name: "module twist is compatible with the action",
                    report: Box::new(compatibility),
                });
            }
            let products = rep.algebra.products.try_map(|t| t.compose_left(alpha))?;
            let twisted =
                HomAlgebra::new(rep.algebra.kind.clone(), products, alpha.clone())?;
            let rho = rho_a.iter().map(|m| mm(m, &rep.beta)).collect();
            Representation::new(twisted, rho, rep.beta.clone())
        }
    }
}
