//! Finite-dimensional algebras with a twisting endomorphism, given by
//! structure constants over exact scalars.
//!
//! An algebra of dimension `n` carries either a single bilinear product
//! (`mul`) or a pair of products (`left` ≺ and `right` ≻), encoded as
//! structure-constant tables `c[i][j][k]` meaning `e_i ∘ e_j = Σ_k c[i][j][k] e_k`,
//! plus a linear *twist* map whose matrix columns are the images of the
//! basis vectors. Basis indices are 0-based throughout.

use crate::error::Error;
use crate::matrix::Matrix;
use crate::report::{CheckReport, FailureTracker};
use crate::scalar::Scalar;

/// A vector in the underlying space, as coordinates over the basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Element(pub Vec<Scalar>);

impl Element {
    /// The zero vector.
    #[must_use]
    pub fn zero(dim: usize) -> Self {
        Element(vec![Scalar::zero(); dim])
    }

    /// The `i`-th basis vector.
    ///
    /// # Panics
    /// Panics if `i >= dim`.
    #[must_use]
    pub fn basis(dim: usize, i: usize) -> Self {
        let mut e = Element::zero(dim);
        e.0[i] = Scalar::one();
        e
    }

    /// Coordinate dimension.
    #[must_use]
    pub fn dim(&self) -> usize {
        self.0.len()
    }

    /// Coordinates as a slice.
    #[must_use]
    pub fn as_slice(&self) -> &[Scalar] {
        &self.0
    }

    /// Whether all coordinates vanish.
    #[must_use]
    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Scalar::is_zero)
    }

    /// Coordinate-wise sum.
    ///
    /// # Panics
    /// Panics on dimension mismatch (elements of one space only).
    #[must_use]
    pub fn add(&self, other: &Element) -> Element {
        assert_eq!(self.dim(), other.dim(), "element dimensions must agree");
        Element(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.add(b))
                .collect(),
        )
    }

    /// Coordinate-wise difference.
    ///
    /// # Panics
    /// Panics on dimension mismatch.
    #[must_use]
    pub fn sub(&self, other: &Element) -> Element {
        assert_eq!(self.dim(), other.dim(), "element dimensions must agree");
        Element(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.sub(b))
                .collect(),
        )
    }

    /// Coordinate-wise negation.
    #[must_use]
    pub fn neg(&self) -> Element {
        Element(self.0.iter().map(Scalar::neg).collect())
    }

    /// Scales every coordinate.
    #[must_use]
    pub fn scale(&self, c: &Scalar) -> Element {
        Element(self.0.iter().map(|a| a.mul(c)).collect())
    }

    /// Concatenates coordinates (an element of a direct sum).
    #[must_use]
    pub fn concat(&self, other: &Element) -> Element {
        let mut v = self.0.clone();
        v.extend(other.0.iter().cloned());
        Element(v)
    }
}

/// Applies a linear map (given as a matrix) to an element.
///
/// # Panics
/// Panics if the matrix width disagrees with the element dimension; callers
/// pair maps and elements from the same algebra.
#[must_use]
pub fn apply_map(m: &Matrix, x: &Element) -> Element {
    Element(m.apply(&x.0).expect("map and element dimensions agree"))
}

/// Structure constants of one bilinear product on an `n`-dimensional space.
///
/// Stored flat: entry `(i, j, k)` lives at `(i*n + j)*n + k`, so the row of
/// products `e_i ∘ e_j` is contiguous.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductTable {
    dim: usize,
    c: Vec<Scalar>,
}

impl ProductTable {
    /// The zero product.
    #[must_use]
    pub fn zero(dim: usize) -> Self {
        ProductTable {
            dim,
            c: vec![Scalar::zero(); dim * dim * dim],
        }
    }

    /// Dimension of the underlying space.
    #[must_use]
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Structure constant `c[i][j][k]`.
    ///
    /// # Panics
    /// Panics if an index is out of range.
    #[must_use]
    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.c[(i * self.dim + j) * self.dim + k]
    }

    /// Sets `c[i][j][k]`.
    ///
    /// # Panics
    /// Panics if an index is out of range.
    pub fn set(&mut self, i: usize, j: usize, k: usize, v: Scalar) {
        self.c[(i * self.dim + j) * self.dim + k] = v;
    }

    /// The coordinates of `e_i ∘ e_j`.
    ///
    /// # Panics
    /// Panics if an index is out of range.
    #[must_use]
    pub fn row(&self, i: usize, j: usize) -> &[Scalar] {
        let start = (i * self.dim + j) * self.dim;
        &self.c[start..start + self.dim]
    }

    /// `e_i ∘ e_j` as an owned element.
    #[must_use]
    pub fn basis_product(&self, i: usize, j: usize) -> Element {
        Element(self.row(i, j).to_vec())
    }

    /// Bilinear extension of the product to arbitrary elements.
    ///
    /// # Panics
    /// Panics if either element has the wrong dimension.
    #[must_use]
    pub fn bilinear(&self, x: &Element, y: &Element) -> Element {
        assert_eq!(x.dim(), self.dim, "left factor dimension");
        assert_eq!(y.dim(), self.dim, "right factor dimension");
        let mut out = vec![Scalar::zero(); self.dim];
        for (i, xi) in x.0.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.0.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let coef = xi.mul(yj);
                for (k, v) in self.row(i, j).iter().enumerate() {
                    if !v.is_zero() {
                        out[k] = out[k].add(&v.mul(&coef));
                    }
                }
            }
        }
        Element(out)
    }

    /// Iterates `(i, j, k, value)` over all entries in lexicographic order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, usize, &Scalar)> {
        let n = self.dim;
        self.c
            .iter()
            .enumerate()
            .map(move |(idx, v)| (idx / (n * n), (idx / n) % n, idx % n, v))
    }

    /// Whether any constant is a non-constant polynomial.
    #[must_use]
    pub fn has_poly(&self) -> bool {
        self.c.iter().any(Scalar::is_poly)
    }

    /// Entry-wise sum of two products on the same space.
    ///
    /// # Errors
    /// Dimension error if the tables disagree.
    pub fn add(&self, other: &ProductTable) -> Result<ProductTable, Error> {
        if self.dim != other.dim {
            return Err(Error::Dim {
                context: "product sum",
                expected: self.dim,
                got: other.dim,
            });
        }
        Ok(ProductTable {
            dim: self.dim,
            c: self
                .c
                .iter()
                .zip(&other.c)
                .map(|(a, b)| a.add(b))
                .collect(),
        })
    }

    /// Entry-wise difference.
    ///
    /// # Errors
    /// Dimension error if the tables disagree.
    pub fn sub(&self, other: &ProductTable) -> Result<ProductTable, Error> {
        if self.dim != other.dim {
            return Err(Error::Dim {
                context: "product difference",
                expected: self.dim,
                got: other.dim,
            });
        }
        Ok(ProductTable {
            dim: self.dim,
            c: self
                .c
                .iter()
                .zip(&other.c)
                .map(|(a, b)| a.sub(b))
                .collect(),
        })
    }

    /// The opposite product: `x ∘' y = y ∘ x`.
    #[must_use]
    pub fn opposite(&self) -> ProductTable {
        let mut out = ProductTable::zero(self.dim);
        for (i, j, k, v) in self.entries() {
            out.set(j, i, k, v.clone());
        }
        out
    }

    /// The commutator product `[x, y] = x ∘ y − y ∘ x`.
    #[must_use]
    pub fn commutator(&self) -> ProductTable {
        self.sub(&self.opposite()).expect("same dimension")
    }

    /// Post-composes the product with a linear map: `x ∘' y = m(x ∘ y)`.
    ///
    /// # Errors
    /// Dimension error if the map does not act on the space.
    pub fn compose_left(&self, m: &Matrix) -> Result<ProductTable, Error> {
        if m.rows() != self.dim || m.cols() != self.dim {
            return Err(Error::Dim {
                context: "product twist",
                expected: self.dim,
                got: m.rows(),
            });
        }
        let mut out = ProductTable::zero(self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                let img = m.apply(self.row(i, j))?;
                for (k, v) in img.into_iter().enumerate() {
                    out.set(i, j, k, v);
                }
            }
        }
        Ok(out)
    }

    /// Scales every structure constant.
    #[must_use]
    pub fn scale(&self, s: &Scalar) -> ProductTable {
        ProductTable {
            dim: self.dim,
            c: self.c.iter().map(|v| v.mul(s)).collect(),
        }
    }
}

/// Identifies one product of an algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProductName {
    /// The single product of a one-product algebra.
    Mul,
    /// The left product `≺` of a two-product algebra.
    Left,
    /// The right product `≻` of a two-product algebra.
    Right,
}

impl ProductName {
    /// The key used in files and messages.
    #[must_use]
    pub fn as_str(self) -> &'static str {
        match self {
            ProductName::Mul => "mul",
            ProductName::Left => "left",
            ProductName::Right => "right",
        }
    }
}

/// The product structure of an algebra: one table, or a `left`/`right` pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Products {
    /// One bilinear product.
    Single(ProductTable),
    /// A pair of products, written `x ≺ y` (left) and `x ≻ y` (right).
    Pair {
        /// The `≺` product.
        left: ProductTable,
        /// The `≻` product.
        right: ProductTable,
    },
}

impl Products {
    /// Dimension of the underlying space.
    #[must_use]
    pub fn dim(&self) -> usize {
        match self {
            Products::Single(t) => t.dim(),
            Products::Pair { left, .. } => left.dim(),
        }
    }

    /// All tables with their names, in canonical order (`mul`, or `left`
    /// then `right`).
    #[must_use]
    pub fn tables(&self) -> Vec<(ProductName, &ProductTable)> {
        match self {
            Products::Single(t) => vec![(ProductName::Mul, t)],
            Products::Pair { left, right } => {
                vec![(ProductName::Left, left), (ProductName::Right, right)]
            }
        }
    }

    /// Whether any table entry is a non-constant polynomial.
    #[must_use]
    pub fn has_poly(&self) -> bool {
        self.tables().iter().any(|(_, t)| t.has_poly())
    }

    /// Applies a table transformation to every product.
    ///
    /// # Errors
    /// Propagates the transformation's error.
    pub fn try_map(
        &self,
        mut f: impl FnMut(&ProductTable) -> Result<ProductTable, Error>,
    ) -> Result<Products, Error> {
        Ok(match self {
            Products::Single(t) => Products::Single(f(t)?),
            Products::Pair { left, right } => Products::Pair {
                left: f(left)?,
                right: f(right)?,
            },
        })
    }
}

/// A finite-dimensional algebra with a twisting endomorphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomAlgebra {
    /// Advisory label describing what the algebra is claimed to be
    /// (for example `"malcev"` or `"pre_alternative"`). Informational only:
    /// no check or construction ever branches on it.
    pub kind: String,
    /// The product structure.
    pub products: Products,
    /// The twist map; column `j` is the image of `e_j`.
    pub alpha: Matrix,
}

impl HomAlgebra {
    /// Assembles an algebra, checking that the twist matrix matches the
    /// product dimension.
    ///
    /// # Errors
    /// Dimension error if the twist is not square of the product dimension.
    pub fn new(kind: impl Into<String>, products: Products, alpha: Matrix) -> Result<Self, Error> {
        let dim = products.dim();
        if alpha.rows() != dim || alpha.cols() != dim {
            return Err(Error::Dim {
                context: "algebra twist map",
                expected: dim,
                got: alpha.rows(),
            });
        }
        Ok(HomAlgebra {
            kind: kind.into(),
            products,
            alpha,
        })
    }

    /// An algebra whose twist is the identity map.
    ///
    /// # Errors
    /// Never fails in practice; kept fallible for uniformity with [`HomAlgebra::new`].
    pub fn with_identity_twist(kind: impl Into<String>, products: Products) -> Result<Self, Error> {
        let dim = products.dim();
        HomAlgebra::new(kind, products, Matrix::identity(dim))
    }

    /// Dimension of the underlying space.
    #[must_use]
    pub fn dim(&self) -> usize {
        self.products.dim()
    }

    /// Applies the twist map to an element.
    #[must_use]
    pub fn twist(&self, x: &Element) -> Element {
        apply_map(&self.alpha, x)
    }

    /// The single product table.
    ///
    /// # Errors
    /// Fails if the algebra carries a product pair.
    pub fn single_table(&self, context: &'static str) -> Result<&ProductTable, Error> {
        match &self.products {
            Products::Single(t) => Ok(t),
            Products::Pair { .. } => Err(Error::NeedSingleProduct { context }),
        }
    }

    /// The `(left, right)` product pair.
    ///
    /// # Errors
    /// Fails if the algebra carries a single product.
    pub fn pair_tables(
        &self,
        context: &'static str,
    ) -> Result<(&ProductTable, &ProductTable), Error> {
        match &self.products {
            Products::Single(_) => Err(Error::NeedPairProduct { context }),
            Products::Pair { left, right } => Ok((left, right)),
        }
    }

    /// Whether any structure constant or twist entry is a polynomial.
    #[must_use]
    pub fn has_poly(&self) -> bool {
        self.products.has_poly() || self.alpha.has_poly()
    }

    /// Checks that the twist is multiplicative:
    /// `α(e_i ∘ e_j) = α(e_i) ∘ α(e_j)` for every basis pair and every
    /// product. With a product pair the witness tuple is prefixed by the
    /// product index (0 = left, 1 = right); with a single product it is the
    /// bare pair `(i, j)`.
    #[must_use]
    pub fn check_multiplicative(&self) -> CheckReport {
        self.map_compatibility_report(&self.alpha, false, "multiplicativity")
    }

    /// Checks that `gamma` is an algebra morphism from the algebra to
    /// itself: `γ(x ∘ y) = γ(x) ∘ γ(y)` per product (equations 0..), then
    /// `γ ∘ α = α ∘ γ` as the final matrix equation.
    ///
    /// # Errors
    /// Dimension error if `gamma` does not act on the space.
    pub fn check_morphism(&self, gamma: &Matrix) -> Result<CheckReport, Error> {
        if gamma.rows() != self.dim() || gamma.cols() != self.dim() {
            return Err(Error::Dim {
                context: "morphism candidate",
                expected: self.dim(),
                got: gamma.rows(),
            });
        }
        Ok(self.map_compatibility_report(gamma, true, "morphism"))
    }

    /// Shared body of [`check_multiplicative`](Self::check_multiplicative)
    /// and [`check_morphism`](Self::check_morphism).
    fn map_compatibility_report(
        &self,
        gamma: &Matrix,
        include_twist_equation: bool,
        name: &str,
    ) -> CheckReport {
        let n = self.dim();
        let tables = self.products.tables();
        // Single-product multiplicativity is a one-equation check: bare tuples.
        let multi_eq = include_twist_equation || tables.len() > 1;
        let mut tracker = FailureTracker::new();
        let gcols: Vec<Element> = (0..n).map(|j| Element(gamma.column(j))).collect();
        for (eq, (_, table)) in tables.iter().enumerate() {
            for i in 0..n {
                for j in 0..n {
                    let lhs = apply_map(gamma, &table.basis_product(i, j));
                    let rhs = table.bilinear(&gcols[i], &gcols[j]);
                    let tuple: Vec<usize> = if multi_eq {
                        vec![eq, i, j]
                    } else {
                        vec![i, j]
                    };
                    tracker.check_equal(&tuple, &lhs.0, &rhs.0);
                }
            }
        }
        if include_twist_equation {
            let eq = tables.len();
            let lhs = gamma.mul(&self.alpha).expect("square matrices");
            let rhs = self.alpha.mul(gamma).expect("square matrices");
            tracker.check_matrix(&[eq], &lhs, &rhs);
        }
        tracker.finish(name)
    }
}

/// The Hom-associator of a single-product algebra:
/// `as(x, y, z) = (x ∘ y) ∘ α(z) − α(x) ∘ (y ∘ z)`.
#[must_use]
pub fn hom_associator(
    table: &ProductTable,
    alpha: &Matrix,
    x: &Element,
    y: &Element,
    z: &Element,
) -> Element {
    let lhs = table.bilinear(&table.bilinear(x, y), &apply_map(alpha, z));
    let rhs = table.bilinear(&apply_map(alpha, x), &table.bilinear(y, z));
    lhs.sub(&rhs)
}

/// The Hom-Jacobi sum of an antisymmetric product:
/// `J(x, y, z) = (x∘y)∘α(z) + (y∘z)∘α(x) + (z∘x)∘α(y)`.
#[must_use]
pub fn hom_jacobian(
    table: &ProductTable,
    alpha: &Matrix,
    x: &Element,
    y: &Element,
    z: &Element,
) -> Element {
    let t1 = table.bilinear(&table.bilinear(x, y), &apply_map(alpha, z));
    let t2 = table.bilinear(&table.bilinear(y, z), &apply_map(alpha, x));
    let t3 = table.bilinear(&table.bilinear(z, x), &apply_map(alpha, y));
    t1.add(&t2).add(&t3)
}
