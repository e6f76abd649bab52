//! Exact scalar arithmetic: arbitrary-precision rationals and univariate
//! polynomials in the formal variable `t` over the rationals.
//!
//! [`Scalar`] is the ring every other module computes in. Its invariants:
//!
//! * rationals are always reduced with a positive denominator (guaranteed by
//!   [`num_rational::BigRational`]);
//! * polynomial coefficient lists are ascending in degree and never end in a
//!   zero, and a polynomial of degree zero is normalized to the rational
//!   variant, so structural equality is exact semantic equality.
//!
//! Division is only defined when the divisor is a nonzero rational; dividing
//! by a non-constant polynomial (or by zero) is a typed error, which is what
//! lets the identity checkers run unchanged over `Q[t]`.
//!
//! The canonical string form (used by every file format and report) is:
//! `"p"` or `"p/q"` for rationals, and for polynomials the ascending sum of
//! nonzero terms joined with `" + "` / `" - "`, with unit coefficients elided,
//! e.g. `"1/2 - t + 3*t^2"`. [`Scalar::parse`] accepts a whitespace-insensitive
//! superset of this grammar.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::str::FromStr;

/// An exact rational number with arbitrary-precision numerator/denominator.
pub type Rat = BigRational;

/// Errors raised by scalar parsing and division.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScalarError {
    /// The literal does not match the scalar grammar.
    #[error("cannot parse scalar literal {text:?}: {reason}")]
    Parse {
        /// The offending literal.
        text: String,
        /// What went wrong.
        reason: String,
    },
    /// A fraction literal with denominator zero, e.g. `"1/0"`.
    #[error("zero denominator in scalar literal {text:?}")]
    ZeroDenominator {
        /// The offending literal.
        text: String,
    },
    /// Division of a scalar by zero.
    #[error("scalar division by zero")]
    DivisionByZero,
    /// Division by a polynomial of degree >= 1 (not a unit in `Q[t]`).
    #[error("cannot divide by a non-constant polynomial")]
    NonConstantDivisor,
}

/// A univariate polynomial in `t` with rational coefficients.
///
/// Coefficients are stored ascending in degree with no trailing zeros; the
/// zero polynomial is the empty list.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Poly {
    coeffs: Vec<Rat>,
}

impl Poly {
    /// The zero polynomial.
    #[must_use]
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    /// The constant polynomial `c`.
    #[must_use]
    pub fn constant(c: Rat) -> Self {
        Poly::from_coeffs(vec![c])
    }

    /// The monomial `t`.
    #[must_use]
    pub fn t() -> Self {
        Poly::from_coeffs(vec![Rat::zero(), Rat::one()])
    }

    /// Builds a polynomial from ascending coefficients, trimming trailing zeros.
    #[must_use]
    pub fn from_coeffs(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    /// Degree, or `None` for the zero polynomial.
    #[must_use]
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// The coefficient of `t^k` (zero beyond the degree).
    #[must_use]
    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    /// Ascending coefficient slice (no trailing zeros).
    #[must_use]
    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Whether this is the zero polynomial.
    #[must_use]
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Sum of two polynomials.
    #[must_use]
    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + other.coeff(k)).collect();
        Poly::from_coeffs(coeffs)
    }

    /// Difference of two polynomials.
    #[must_use]
    pub fn sub(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) - other.coeff(k)).collect();
        Poly::from_coeffs(coeffs)
    }

    /// Product of two polynomials.
    #[must_use]
    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Poly::from_coeffs(coeffs)
    }

    /// Negation.
    #[must_use]
    pub fn neg(&self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// Scales every coefficient by a rational.
    #[must_use]
    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Evaluates the polynomial at a rational point.
    #[must_use]
    pub fn eval(&self, at: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * at + c;
        }
        acc
    }
}

/// An element of the scalar ring: a rational, or a polynomial in `t`.
///
/// The `Poly` variant always has degree >= 1; constants normalize to `Rat`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Scalar {
    /// A rational constant.
    Rat(Rat),
    /// A polynomial of degree at least one.
    Poly(Poly),
}

impl Scalar {
    /// The additive identity.
    #[must_use]
    pub fn zero() -> Self {
        Scalar::Rat(Rat::zero())
    }

    /// The multiplicative identity.
    #[must_use]
    pub fn one() -> Self {
        Scalar::Rat(Rat::one())
    }

    /// An integer scalar.
    #[must_use]
    pub fn int(n: i64) -> Self {
        Scalar::Rat(Rat::from_integer(BigInt::from(n)))
    }

    /// The reduced fraction `p/q`.
    ///
    /// # Panics
    /// Panics if `q == 0`; use [`Scalar::parse`] for untrusted input.
    #[must_use]
    pub fn frac(p: i64, q: i64) -> Self {
        assert!(q != 0, "zero denominator");
        Scalar::Rat(Rat::new(BigInt::from(p), BigInt::from(q)))
    }

    /// The formal variable `t`.
    #[must_use]
    pub fn t() -> Self {
        Scalar::Poly(Poly::t())
    }

    /// Wraps a rational.
    #[must_use]
    pub fn from_rat(r: Rat) -> Self {
        Scalar::Rat(r)
    }

    /// Wraps a polynomial, normalizing degree <= 0 to the rational variant.
    #[must_use]
    pub fn from_poly(p: Poly) -> Self {
        if p.degree().unwrap_or(0) == 0 {
            Scalar::Rat(p.coeff(0))
        } else {
            Scalar::Poly(p)
        }
    }

    /// Whether the scalar is zero.
    #[must_use]
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            // invariant: Poly has degree >= 1, hence is nonzero
            Scalar::Poly(_) => false,
        }
    }

    /// Whether the scalar is one.
    #[must_use]
    pub fn is_one(&self) -> bool {
        matches!(self, Scalar::Rat(r) if r.is_one())
    }

    /// The rational value, if this scalar is not a polynomial.
    #[must_use]
    pub fn as_rat(&self) -> Option<&Rat> {
        match self {
            Scalar::Rat(r) => Some(r),
            Scalar::Poly(_) => None,
        }
    }

    /// Whether the scalar is a polynomial of degree >= 1.
    #[must_use]
    pub fn is_poly(&self) -> bool {
        matches!(self, Scalar::Poly(_))
    }

    /// A copy as a (possibly constant) polynomial.
    #[must_use]
    pub fn to_poly(&self) -> Poly {
        match self {
            Scalar::Rat(r) => Poly::from_coeffs(vec![r.clone()]),
            Scalar::Poly(p) => p.clone(),
        }
    }

    /// Evaluates at a rational point (`Rat` variants are constant).
    #[must_use]
    pub fn eval(&self, at: &Rat) -> Rat {
        match self {
            Scalar::Rat(r) => r.clone(),
            Scalar::Poly(p) => p.eval(at),
        }
    }

    /// Sum.
    #[must_use]
    pub fn add(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            _ => Scalar::from_poly(self.to_poly().add(&other.to_poly())),
        }
    }

    /// Difference.
    #[must_use]
    pub fn sub(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a - b),
            _ => Scalar::from_poly(self.to_poly().sub(&other.to_poly())),
        }
    }

    /// Product.
    #[must_use]
    pub fn mul(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            _ => Scalar::from_poly(self.to_poly().mul(&other.to_poly())),
        }
    }

    /// Negation.
    #[must_use]
    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rat(a) => Scalar::Rat(-a),
            Scalar::Poly(p) => Scalar::Poly(p.neg()),
        }
    }

    /// Exact division.
    ///
    /// # Errors
    /// [`ScalarError::DivisionByZero`] if `other` is zero, and
    /// [`ScalarError::NonConstantDivisor`] if `other` has degree >= 1.
    pub fn try_div(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        match other {
            Scalar::Poly(_) => Err(ScalarError::NonConstantDivisor),
            Scalar::Rat(b) if b.is_zero() => Err(ScalarError::DivisionByZero),
            Scalar::Rat(b) => Ok(match self {
                Scalar::Rat(a) => Scalar::Rat(a / b),
                Scalar::Poly(p) => Scalar::from_poly(p.scale(&(Rat::one() / b))),
            }),
        }
    }

    /// Parses the scalar grammar: `"p"`, `"p/q"`, or a polynomial such as
    /// `"1 - 2*t + 1/3*t^2"`. Whitespace-insensitive; `2t` is accepted for
    /// `2*t`; terms may repeat and appear in any order.
    ///
    /// # Errors
    /// [`ScalarError::Parse`] on malformed input and
    /// [`ScalarError::ZeroDenominator`] on a `q = 0` fraction.
    pub fn parse(text: &str) -> Result<Scalar, ScalarError> {
        Parser::new(text).parse()
    }
}

impl FromStr for Scalar {
    type Err = ScalarError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Scalar::parse(s)
    }
}

/// Formats a rational in canonical form: `"p"` or `"p/q"`.
#[must_use]
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn format_term(k: usize, c: &Rat, out: &mut String) {
    // `c` is positive here except for the leading term, where the sign is kept.
    if k == 0 {
        out.push_str(&format_rat(c));
        return;
    }
    if c.is_one() {
        // elide the unit coefficient
    } else if (-c).is_one() {
        out.push('-');
    } else {
        out.push_str(&format_rat(c));
        out.push('*');
    }
    out.push('t');
    if k > 1 {
        out.push('^');
        out.push_str(&k.to_string());
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut out = String::new();
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if first {
                format_term(k, c, &mut out);
                first = false;
            } else if c.is_negative() {
                out.push_str(" - ");
                format_term(k, &-c, &mut out);
            } else {
                out.push_str(" + ");
                format_term(k, c, &mut out);
            }
        }
        f.write_str(&out)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => f.write_str(&format_rat(r)),
            Scalar::Poly(p) => p.fmt(f),
        }
    }
}

/// Recursive-descent parser for the scalar grammar.
struct Parser {
    text: String,
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn new(text: &str) -> Self {
        Parser {
            text: text.to_owned(),
            chars: text.chars().collect(),
            pos: 0,
        }
    }

    /// Whitespace separates tokens (it may surround operators and factors)
    /// but never joins two numbers: `"1 2"` is malformed, not `12`.
    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn error(&self, reason: &str) -> ScalarError {
        ScalarError::Parse {
            text: self.text.clone(),
            reason: reason.to_owned(),
        }
    }

    fn parse(mut self) -> Result<Scalar, ScalarError> {
        let mut coeffs: Vec<Rat> = Vec::new();
        let mut first = true;
        loop {
            self.skip_ws();
            let sign = match self.peek() {
                Some('+') => {
                    self.bump();
                    false
                }
                Some('-') => {
                    self.bump();
                    true
                }
                None if first => return Err(self.error("empty literal")),
                None => return Err(self.error("dangling sign or operator")),
                Some(_) if first => false,
                Some(c) => return Err(self.error(&format!("expected '+' or '-', found {c:?}"))),
            };
            let (k, c) = self.term()?;
            if coeffs.len() <= k {
                coeffs.resize_with(k + 1, Rat::zero);
            }
            if sign {
                coeffs[k] -= c;
            } else {
                coeffs[k] += c;
            }
            first = false;
            self.skip_ws();
            if self.peek().is_none() {
                break;
            }
        }
        Ok(Scalar::from_poly(Poly::from_coeffs(coeffs)))
    }

    /// One term: `coef`, `coef*t^k`, `coef t^k`, or `t^k`. Returns (degree, coefficient).
    fn term(&mut self) -> Result<(usize, Rat), ScalarError> {
        self.skip_ws();
        let coef = if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let numer = self.integer()?;
            self.skip_ws();
            if self.peek() == Some('/') {
                self.bump();
                let denom = self.integer()?;
                if denom.is_zero() {
                    return Err(ScalarError::ZeroDenominator {
                        text: self.text.clone(),
                    });
                }
                Rat::new(numer, denom)
            } else {
                Rat::from_integer(numer)
            }
        } else if self.peek() == Some('t') {
            Rat::one()
        } else {
            return Err(self.error("expected a number or 't'"));
        };
        self.skip_ws();
        if self.peek() == Some('*') {
            self.bump();
            self.skip_ws();
            if self.peek() != Some('t') {
                return Err(self.error("expected 't' after '*'"));
            }
        }
        if self.peek() == Some('t') {
            self.bump();
            self.skip_ws();
            let k = if self.peek() == Some('^') {
                self.bump();
                let e = self.integer()?;
                usize::try_from(e).map_err(|_| self.error("exponent out of range"))?
            } else {
                1
            };
            Ok((k, coef))
        } else {
            Ok((0, coef))
        }
    }

    fn integer(&mut self) -> Result<BigInt, ScalarError> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.bump();
        }
        if self.pos == start {
            return Err(self.error("expected digits"));
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        BigInt::from_str(&digits).map_err(|e| self.error(&e.to_string()))
    }
}
