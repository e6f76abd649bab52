//! Exact verification of Hom-algebra identities from structure constants.
//!
//! A *Hom-algebra* is a finite-dimensional vector space with a bilinear
//! product and a linear "twist" map α woven into its defining identities.
//! This crate stores such algebras as exact structure-constant tables over
//! ℚ (or over ℚ\[t\] for one-parameter families), checks the identities
//! that define the Hom-Malcev / Hom-pre-Malcev / Hom-alternative /
//! Hom-pre-alternative / Hom-pre-Lie families, and implements the
//! constructions that move between them: Yau twists, commutators,
//! operator-induced splittings, semidirect products, dual and coadjoint
//! representations, symplectic companion products, and one-parameter
//! deformations of Kupershmidt operators.
//!
//! Everything is verified by full enumeration over basis tuples in exact
//! arithmetic — no sampling, no floating point, no early exit.
//!
//! # Reports
//!
//! Every checker returns a [`report::CheckReport`]:
//!
//! * `check` — the check's name (for example `"hom-malcev-four-var"`).
//! * `status` — `pass` or `fail`; a failed identity is a *result*, not an
//!   error. [`Error`](error::Error) is reserved for malformed input,
//!   dimension clashes, singular matrices, and failed preconditions.
//! * `tuples_checked` — the number of quantified tuples enumerated, summed
//!   over the check's equations (a matrix equation counts as one tuple).
//! * `witness` — `null` on pass; otherwise the lexicographically smallest
//!   failing tuple together with both sides of the violated equation as
//!   canonical scalar strings. Checks with several equations prefix the
//!   tuple with a 0-based equation index; matrix equations append the
//!   first differing column index and report that column as the two sides.
//!
//! Reports serialize to deterministic JSON: identical inputs produce
//! byte-identical reports regardless of thread count or evaluation order.
//!
//! # Layout
//!
//! * [`scalar`] — exact scalars: rationals and univariate polynomials in t.
//! * [`matrix`] — dense exact matrices, inverses, rational span tracking.
//! * [`algebra`] — elements, product tables, and the [`algebra::HomAlgebra`]
//!   carrier (single products or ≺/≻ pairs).
//! * [`identity`] — the defining-identity checkers and multiplicativity.
//! * [`construct`] — twists, untwists, derived algebras, sums, splittings.
//! * [`rep`] — representations, bimodules, semidirect products, duals.
//! * [`op`] — Kupershmidt / Rota-Baxter / Nijenhuis operators, graph test,
//!   induced splittings, symplectic companion products.
//! * [`deform`] — one-parameter deformations of Kupershmidt operators,
//!   Nijenhuis elements, and trivializing equivalences.
//! * [`corpus`] — built-in parameter-instantiable example families.
//! * [`json`] — file formats and canonical emission.
//! * [`report`] — check reports and the failure-tracking helper.
//!
//! # Example
//!
//! ```
//! use homalg::corpus::{load_example, CorpusObject};
//! use homalg::identity::{check_structure, IdentityKind};
//! use homalg::report::Status;
//!
//! let CorpusObject::Algebra(algebra) = load_example("malcev4.twisted", &[])? else {
//!     unreachable!("malcev4.twisted is an algebra entry");
//! };
//! let report = check_structure(&algebra, IdentityKind::HomMalcevFourVar)?;
//! assert_eq!(report.status, Status::Pass);
//! # Ok::<(), homalg::Error>(())
//! ```

pub mod algebra;
pub mod construct;
pub mod corpus;
pub mod deform;
pub mod error;
pub mod identity;
pub mod json;
pub mod matrix;
pub mod op;
pub mod rep;
pub mod report;
pub mod scalar;

pub use error::{Error, Result};
