//! Dense exact matrices over [`Scalar`] and rational Gaussian elimination.
//!
//! Matrices are row-major. Inversion, unique solves, and span membership are
//! restricted to all-rational matrices (polynomials in `t` are not a field);
//! those operations return a typed error when they meet a polynomial entry.

use crate::error::Error;
use crate::scalar::{Rat, Scalar};
use num_traits::{One, Zero};

/// A dense `rows x cols` matrix of exact scalars, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    /// The zero matrix of the given shape.
    #[must_use]
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    /// The `n x n` identity.
    #[must_use]
    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    /// Builds a matrix from rows.
    ///
    /// # Errors
    /// Dimension error if the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self, Error> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(Error::Dim {
                    context: "matrix rows",
                    expected: c,
                    got: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(Matrix { rows: r, cols: c, data })
    }

    /// Builds a square matrix from the images of the basis vectors:
    /// column `j` is `images[j]`.
    ///
    /// # Errors
    /// Dimension error if any image has the wrong length.
    pub fn from_columns(images: Vec<Vec<Scalar>>) -> Result<Self, Error> {
        let n = images.len();
        let rows = images.first().map_or(0, Vec::len);
        let mut m = Matrix::zero(rows, n);
        for (j, img) in images.into_iter().enumerate() {
            if img.len() != rows {
                return Err(Error::Dim {
                    context: "matrix columns",
                    expected: rows,
                    got: img.len(),
                });
            }
            for (i, v) in img.into_iter().enumerate() {
                m.set(i, j, v);
            }
        }
        Ok(m)
    }

    /// Number of rows.
    #[must_use]
    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Number of columns.
    #[must_use]
    pub fn cols(&self) -> usize {
        self.cols
    }

    /// The entry at `(r, c)`.
    ///
    /// # Panics
    /// Panics if out of range.
    #[must_use]
    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    /// Sets the entry at `(r, c)`.
    ///
    /// # Panics
    /// Panics if out of range.
    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    /// Iterates entries with their positions.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> {
        self.data
            .iter()
            .enumerate()
            .map(|(k, v)| (k / self.cols, k % self.cols, v))
    }

    /// Column `c` as a vector.
    #[must_use]
    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    /// Whether any entry is a non-constant polynomial.
    #[must_use]
    pub fn has_poly(&self) -> bool {
        self.data.iter().any(Scalar::is_poly)
    }

    /// Whether this is a zero matrix.
    #[must_use]
    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    /// Whether this is a square identity matrix.
    #[must_use]
    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && self.entries().all(|(r, c, v)| {
                if r == c {
                    v.is_one()
                } else {
                    v.is_zero()
                }
            })
    }

    /// Exact matrix product.
    ///
    /// # Errors
    /// Dimension error if the inner dimensions disagree.
    pub fn mul(&self, other: &Matrix) -> Result<Matrix, Error> {
        if self.cols != other.rows {
            return Err(Error::Dim {
                context: "matrix product",
                expected: self.cols,
                got: other.rows,
            });
        }
        let mut out = Matrix::zero(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.get(r, c).add(&a.mul(b));
                    out.set(r, c, v);
                }
            }
        }
        Ok(out)
    }

    /// Entry-wise sum.
    ///
    /// # Errors
    /// Dimension error on shape mismatch.
    pub fn add(&self, other: &Matrix) -> Result<Matrix, Error> {
        self.zip_with(other, Scalar::add, "matrix sum")
    }

    /// Entry-wise difference.
    ///
    /// # Errors
    /// Dimension error on shape mismatch.
    pub fn sub(&self, other: &Matrix) -> Result<Matrix, Error> {
        self.zip_with(other, Scalar::sub, "matrix difference")
    }

    fn zip_with(
        &self,
        other: &Matrix,
        f: impl Fn(&Scalar, &Scalar) -> Scalar,
        context: &'static str,
    ) -> Result<Matrix, Error> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Dim {
                context,
                expected: self.rows * self.cols,
                got: other.rows * other.cols,
            });
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| f(a, b))
                .collect(),
        })
    }

    /// Entry-wise negation.
    #[must_use]
    pub fn neg(&self) -> Matrix {
        self.map(Scalar::neg)
    }

    /// Scales every entry.
    #[must_use]
    pub fn scale(&self, c: &Scalar) -> Matrix {
        self.map(|v| v.mul(c))
    }

    /// Applies a function to every entry.
    #[must_use]
    pub fn map(&self, f: impl Fn(&Scalar) -> Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    /// Transpose.
    #[must_use]
    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zero(self.cols, self.rows);
        for (r, c, v) in self.entries() {
            out.set(c, r, v.clone());
        }
        out
    }

    /// Matrix-vector product.
    ///
    /// # Errors
    /// Dimension error if `x.len() != cols`.
    pub fn apply(&self, x: &[Scalar]) -> Result<Vec<Scalar>, Error> {
        if x.len() != self.cols {
            return Err(Error::Dim {
                context: "matrix-vector product",
                expected: self.cols,
                got: x.len(),
            });
        }
        let mut out = vec![Scalar::zero(); self.rows];
        for (c, xc) in x.iter().enumerate() {
            if xc.is_zero() {
                continue;
            }
            for r in 0..self.rows {
                let a = self.get(r, c);
                if !a.is_zero() {
                    out[r] = out[r].add(&a.mul(xc));
                }
            }
        }
        Ok(out)
    }

    /// Exact non-negative power of a square matrix.
    ///
    /// # Errors
    /// Dimension error if not square.
    pub fn pow(&self, mut k: u32) -> Result<Matrix, Error> {
        if self.rows != self.cols {
            return Err(Error::Dim {
                context: "matrix power",
                expected: self.rows,
                got: self.cols,
            });
        }
        let mut acc = Matrix::identity(self.rows);
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Block-diagonal sum `self (+) other`.
    #[must_use]
    pub fn direct_sum(&self, other: &Matrix) -> Matrix {
        let mut out = Matrix::zero(self.rows + other.rows, self.cols + other.cols);
        for (r, c, v) in self.entries() {
            out.set(r, c, v.clone());
        }
        for (r, c, v) in other.entries() {
            out.set(self.rows + r, self.cols + c, v.clone());
        }
        out
    }

    /// Exact inverse via Gaussian elimination over the rationals.
    ///
    /// # Errors
    /// Rejects non-square or polynomial-entry matrices and singular input.
    pub fn inverse(&self) -> Result<Matrix, Error> {
        let n = self.check_square_rational("matrix inverse")?;
        // augmented elimination [A | I] -> [I | A^-1]
        let mut a: Vec<Vec<Rat>> = (0..n)
            .map(|r| {
                (0..n)
                    .map(|c| self.get(r, c).as_rat().expect("checked rational").clone())
                    .collect()
            })
            .collect();
        let mut inv: Vec<Vec<Rat>> = (0..n)
            .map(|r| {
                (0..n)
                    .map(|c| if r == c { Rat::one() } else { Rat::zero() })
                    .collect()
            })
            .collect();
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !a[r][col].is_zero())
                .ok_or(Error::Singular {
                    context: "matrix inverse",
                })?;
            a.swap(col, pivot);
            inv.swap(col, pivot);
            let p = a[col][col].clone();
            for c in 0..n {
                a[col][c] /= &p;
                inv[col][c] /= &p;
            }
            for r in 0..n {
                if r == col || a[r][col].is_zero() {
                    continue;
                }
                let f = a[r][col].clone();
                for c in 0..n {
                    let ac = &a[col][c] * &f;
                    a[r][c] -= ac;
                    let ic = &inv[col][c] * &f;
                    inv[r][c] -= ic;
                }
            }
        }
        Matrix::from_rows(
            inv.into_iter()
                .map(|row| row.into_iter().map(Scalar::Rat).collect())
                .collect(),
        )
    }

    /// Solves `self * x = rhs` for the unique `x` (square, invertible, rational).
    ///
    /// # Errors
    /// Rejects non-square/polynomial matrices; singular error when no unique
    /// solution exists.
    pub fn solve_unique(&self, rhs: &[Scalar]) -> Result<Vec<Scalar>, Error> {
        let n = self.check_square_rational("linear solve")?;
        if rhs.len() != n {
            return Err(Error::Dim {
                context: "linear solve",
                expected: n,
                got: rhs.len(),
            });
        }
        let mut a: Vec<Vec<Rat>> = (0..n)
            .map(|r| {
                let mut row: Vec<Rat> = (0..n)
                    .map(|c| self.get(r, c).as_rat().expect("checked rational").clone())
                    .collect();
                row.push(
                    rhs[r]
                        .as_rat()
                        .ok_or(Error::PolynomialScalars { context: "linear solve" })?
                        .clone(),
                );
                Ok::<_, Error>(row)
            })
            .collect::<Result<_, _>>()?;
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !a[r][col].is_zero())
                .ok_or(Error::Singular {
                    context: "linear solve",
                })?;
            a.swap(col, pivot);
            let p = a[col][col].clone();
            for c in col..=n {
                a[col][c] /= &p;
            }
            for r in 0..n {
                if r == col || a[r][col].is_zero() {
                    continue;
                }
                let f = a[r][col].clone();
                for c in col..=n {
                    let v = &a[col][c] * &f;
                    a[r][c] -= v;
                }
            }
        }
        Ok(a.into_iter()
            .map(|mut row| Scalar::Rat(row.pop().expect("augmented column")))
            .collect())
    }

    fn check_square_rational(&self, context: &'static str) -> Result<usize, Error> {
        if self.rows != self.cols {
            return Err(Error::Dim {
                context,
                expected: self.rows,
                got: self.cols,
            });
        }
        if self.has_poly() {
            return Err(Error::PolynomialScalars { context });
        }
        Ok(self.rows)
    }
}

/// First differing column between two equally-shaped matrices, with both
/// columns. Used to extract the minimal witness of a failed matrix identity.
#[must_use]
pub fn first_column_mismatch(a: &Matrix, b: &Matrix) -> Option<(usize, Vec<Scalar>, Vec<Scalar>)> {
    debug_assert_eq!((a.rows(), a.cols()), (b.rows(), b.cols()));
    (0..a.cols()).find_map(|c| {
        let (ca, cb) = (a.column(c), b.column(c));
        (ca != cb).then_some((c, ca, cb))
    })
}

/// An incrementally built row-echelon basis over the rationals, used for
/// exact span-membership tests.
#[derive(Debug, Default)]
pub struct RationalSpan {
    /// Echelon rows, each with its pivot column; pivots strictly increase.
    rows: Vec<(usize, Vec<Rat>)>,
}

impl RationalSpan {
    /// An empty span inside an ambient space.
    #[must_use]
    pub fn new() -> Self {
        RationalSpan::default()
    }

    fn reduce(&self, v: &[Scalar]) -> Result<Vec<Rat>, Error> {
        let mut w: Vec<Rat> = v
            .iter()
            .map(|s| {
                s.as_rat().cloned().ok_or(Error::PolynomialScalars {
                    context: "span membership",
                })
            })
            .collect::<Result<_, _>>()?;
        for (pivot, row) in &self.rows {
            if !w[*pivot].is_zero() {
                let f = w[*pivot].clone();
                for (wc, rc) in w.iter_mut().zip(row) {
                    let d = rc * &f;
                    *wc -= d;
                }
            }
        }
        Ok(w)
    }

    /// Inserts a vector; returns `true` if it enlarged the span.
    ///
    /// # Errors
    /// Rejects polynomial entries.
    pub fn insert(&mut self, v: &[Scalar]) -> Result<bool, Error> {
        let mut w = self.reduce(v)?;
        let Some(pivot) = w.iter().position(|c| !c.is_zero()) else {
            return Ok(false);
        };
        let p = w[pivot].clone();
        for c in &mut w {
            *c /= &p;
        }
        self.rows.push((pivot, w));
        self.rows.sort_by_key(|(p, _)| *p);
        Ok(true)
    }

    /// Whether `v` lies in the span.
    ///
    /// # Errors
    /// Rejects polynomial entries.
    pub fn contains(&self, v: &[Scalar]) -> Result<bool, Error> {
        Ok(self.reduce(v)?.iter().all(Zero::is_zero))
    }

    /// Current rank.
    #[must_use]
    pub fn rank(&self) -> usize {
        self.rows.len()
    }
}
