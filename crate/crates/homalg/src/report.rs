//! Check verdicts with deterministic minimal counterexamples.
//!
//! Every verification in this crate enumerates **all** basis tuples of the
//! relevant arity — there is no early exit — and reports:
//!
//! * `check`: the name of the identity or condition checked,
//! * `status`: `"pass"` or `"fail"`,
//! * `tuples_checked`: how many quantified tuples were evaluated in total
//!   (summed across a check's equations),
//! * `witness`: `null` on pass; on failure, the lexicographically smallest
//!   violating tuple together with both evaluated sides rendered as
//!   canonical scalar strings.
//!
//! Checks built from several equations prefix the witness tuple with the
//! 0-based equation index (in the order the equations are documented);
//! single-equation checks use the bare tuple. Identities of the form
//! `expr = 0` report the offending value as `lhs` and a zero vector as
//! `rhs`. Equations between operators (matrices) compare whole matrices and
//! witness the first differing column, appending the column index to the
//! tuple and reporting the two columns as `lhs`/`rhs`.

use crate::matrix::{first_column_mismatch, Matrix};
use crate::scalar::Scalar;
use serde::{Deserialize, Serialize};

/// Verdict of a check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    /// The identity holds on every tuple.
    Pass,
    /// At least one tuple violates the identity.
    Fail,
}

/// The smallest violating tuple and both evaluated sides.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    /// Left-hand side coordinates as canonical scalar strings.
    pub lhs: Vec<String>,
    /// Right-hand side coordinates as canonical scalar strings.
    pub rhs: Vec<String>,
    /// 0-based basis indices (prefixed by the equation index for
    /// multi-equation checks; suffixed by the column index for operator
    /// equations).
    pub tuple: Vec<usize>,
}

impl Witness {
    /// Builds a witness from two evaluated sides.
    #[must_use]
    pub fn from_sides(tuple: Vec<usize>, lhs: &[Scalar], rhs: &[Scalar]) -> Self {
        Witness {
            lhs: lhs.iter().map(ToString::to_string).collect(),
            rhs: rhs.iter().map(ToString::to_string).collect(),
            tuple,
        }
    }
}

/// The outcome of one verification.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    /// Name of the identity or condition checked.
    pub check: String,
    /// Overall verdict.
    pub status: Status,
    /// Total number of quantified tuples evaluated.
    pub tuples_checked: u64,
    /// Minimal counterexample, present exactly when `status` is `fail`.
    pub witness: Option<Witness>,
}

impl CheckReport {
    /// A passing report.
    #[must_use]
    pub fn pass(check: impl Into<String>, tuples_checked: u64) -> Self {
        CheckReport {
            check: check.into(),
            status: Status::Pass,
            tuples_checked,
            witness: None,
        }
    }

    /// A failing report with its witness.
    #[must_use]
    pub fn fail(check: impl Into<String>, tuples_checked: u64, witness: Witness) -> Self {
        CheckReport {
            check: check.into(),
            status: Status::Fail,
            tuples_checked,
            witness: Some(witness),
        }
    }

    /// Whether the check passed.
    #[must_use]
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// The same verdict published under a different check name (used when a
    /// check is run on a derived structure on behalf of another).
    #[must_use]
    pub fn renamed(mut self, check: impl Into<String>) -> Self {
        self.check = check.into();
        self
    }

    /// Canonical JSON rendering: pretty-printed, two-space indent, with a
    /// trailing newline. Identical inputs produce byte-identical output.
    #[must_use]
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serialization");
        s.push('\n');
        s
    }
}

/// Accumulates tuple counts and the first (hence lexicographically minimal,
/// given in-order enumeration) failure across a check's equations.
#[derive(Debug, Default)]
pub struct FailureTracker {
    tuples: u64,
    witness: Option<Witness>,
}

impl FailureTracker {
    /// A fresh tracker.
    #[must_use]
    pub fn new() -> Self {
        FailureTracker::default()
    }

    /// Records one tuple on which `lhs` must equal `rhs` coordinate-wise.
    ///
    /// Callers enumerate tuples in lexicographic (equation-major) order, so
    /// keeping only the first mismatch yields the minimal witness.
    pub fn check_equal(&mut self, tuple: &[usize], lhs: &[Scalar], rhs: &[Scalar]) {
        self.tuples += 1;
        if self.witness.is_none() && lhs != rhs {
            self.witness = Some(Witness::from_sides(tuple.to_vec(), lhs, rhs));
        }
    }

    /// Records one tuple on which `value` must vanish.
    pub fn check_zero(&mut self, tuple: &[usize], value: &[Scalar]) {
        self.tuples += 1;
        if self.witness.is_none() && value.iter().any(|c| !c.is_zero()) {
            let zero = vec![Scalar::zero(); value.len()];
            self.witness = Some(Witness::from_sides(tuple.to_vec(), value, &zero));
        }
    }

    /// Records one operator equation `lhs = rhs` between equally-shaped
    /// matrices. On mismatch the witness tuple is `tuple` with the first
    /// differing column index appended, and the two columns are the sides.
    pub fn check_matrix(&mut self, tuple: &[usize], lhs: &Matrix, rhs: &Matrix) {
        self.tuples += 1;
        if self.witness.is_none() {
            if let Some((col, lc, rc)) = first_column_mismatch(lhs, rhs) {
                let mut t = tuple.to_vec();
                t.push(col);
                self.witness = Some(Witness::from_sides(t, &lc, &rc));
            }
        }
    }

    /// Records a failure with an explicitly built witness.
    pub fn check_with(&mut self, failed: bool, witness: impl FnOnce() -> Witness) {
        self.tuples += 1;
        if failed && self.witness.is_none() {
            self.witness = Some(witness());
        }
    }

    /// Number of tuples recorded so far.
    #[must_use]
    pub fn tuples(&self) -> u64 {
        self.tuples
    }

    /// Whether a failure has been recorded.
    #[must_use]
    pub fn has_failure(&self) -> bool {
        self.witness.is_some()
    }

    /// Finalizes into a report under the given check name.
    #[must_use]
    pub fn finish(self, check: impl Into<String>) -> CheckReport {
        match self.witness {
            None => CheckReport::pass(check, self.tuples),
            Some(w) => CheckReport::fail(check, self.tuples, w),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pass_report_serializes_with_null_witness() {
        let r = CheckReport::pass("antisymmetry", 16);
        let expected = "{\n  \"check\": \"antisymmetry\",\n  \"status\": \"pass\",\n  \"tuples_checked\": 16,\n  \"witness\": null\n}\n";
        assert_eq!(r.to_json(), expected);
    }

    #[test]
    fn fail_report_carries_witness() {
        let w = Witness::from_sides(
            vec![0, 1],
            &[Scalar::int(1), Scalar::zero()],
            &[Scalar::zero(), Scalar::zero()],
        );
        let r = CheckReport::fail("antisymmetry", 4, w);
        let json = r.to_json();
        assert!(json.contains("\"status\": \"fail\""));
        assert!(json.contains("\"tuple\": [\n      0,\n      1\n    ]"));
        assert!(json.ends_with('\n'));
        let back: CheckReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn tracker_keeps_first_failure_and_counts_all() {
        let mut t = FailureTracker::new();
        let zero = [Scalar::zero()];
        let one = [Scalar::int(1)];
        t.check_equal(&[0], &zero, &zero);
        t.check_equal(&[1], &one, &zero); // first failure
        t.check_equal(&[2], &zero, &one); // later failure is ignored
        let r = t.finish("demo");
        assert_eq!(r.tuples_checked, 3);
        assert_eq!(r.witness.as_ref().unwrap().tuple, vec![1]);
        assert_eq!(r.witness.as_ref().unwrap().lhs, vec!["1"]);
        assert_eq!(r.witness.as_ref().unwrap().rhs, vec!["0"]);
    }

    #[test]
    fn matrix_mismatch_appends_column_index() {
        let mut t = FailureTracker::new();
        let a = Matrix::identity(2);
        let mut b = Matrix::identity(2);
        b.set(0, 1, Scalar::int(5));
        t.check_matrix(&[3], &a, &b);
        let r = t.finish("demo");
        let w = r.witness.unwrap();
        assert_eq!(w.tuple, vec![3, 1]);
        assert_eq!(w.lhs, vec!["0", "1"]);
        assert_eq!(w.rhs, vec!["5", "1"]);
    }

    #[test]
    fn zero_check_reports_value_against_zero() {
        let mut t = FailureTracker::new();
        t.check_zero(&[0, 0], &[Scalar::frac(1, 2), Scalar::zero()]);
        let w = t.finish("demo").witness.unwrap();
        assert_eq!(w.lhs, vec!["1/2", "0"]);
        assert_eq!(w.rhs, vec!["0", "0"]);
    }
}
