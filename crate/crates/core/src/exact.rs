//! Exact big-integer polynomial and truncated-series arithmetic.
//!
//! All arithmetic in this module is over `Z` with arbitrary precision; no
//! rounding and no overflow at any magnitude the rest of the crate produces.
//! The series that drive the spectral-sequence computation all have unit
//! constant term, so inversion never leaves the integers either.
//!
//! Polynomials carry a variable tag ([`Var`]) because the computation keeps
//! switching between a "lattice" variable `u` and the cohomological variable
//! `x` through the substitution `u = x^(N-1)`; the tag turns an accidental
//! mix-up of the two into an immediate panic instead of a silent wrong
//! answer.

use num_bigint::{BigInt, Sign};
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Variable tag for polynomials and series.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Var {
    /// Cohomological degree variable.
    X,
    /// Lattice variable, `u = x^(N-1)`.
    U,
    /// Scratch variable for generic polynomial arguments.
    Y,
}

impl Var {
    pub fn symbol(self) -> &'static str {
        match self {
            Var::X => "x",
            Var::U => "u",
            Var::Y => "y",
        }
    }
}

impl std::fmt::Display for Var {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.symbol())
    }
}

/// Dense univariate polynomial with big-integer coefficients.
///
/// Coefficients are indexed by degree. Trailing zeros are normalized away;
/// the zero polynomial has an empty coefficient vector and degree `None`
/// (standing in for degree negative infinity).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPolynomial {
    var: Var,
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    /// Builds a polynomial from degree-indexed coefficients, dropping
    /// trailing zeros.
    pub fn new(var: Var, mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { var, coeffs }
    }

    pub fn zero(var: Var) -> Self {
        IntPolynomial { var, coeffs: Vec::new() }
    }

    pub fn one(var: Var) -> Self {
        Self::constant(var, 1)
    }

    pub fn constant(var: Var, value: impl Into<BigInt>) -> Self {
        Self::new(var, vec![value.into()])
    }

    /// The monomial `coeff * var^degree`.
    pub fn monomial(var: Var, coeff: impl Into<BigInt>, degree: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = coeff.into();
        Self::new(var, coeffs)
    }

    /// Convenience constructor from machine integers.
    pub fn from_i64(var: Var, coeffs: &[i64]) -> Self {
        Self::new(var, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `var^degree` (zero beyond the stored degree).
    pub fn coeff(&self, degree: usize) -> BigInt {
        self.coeffs.get(degree).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Iterates over `(degree, coefficient)` pairs with nonzero coefficient,
    /// in increasing degree order.
    pub fn nonzero_terms(&self) -> impl Iterator<Item = (usize, &BigInt)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    fn assert_same_var(&self, other: &Self, op: &str) {
        assert!(
            self.var == other.var,
            "cannot {op} polynomials in different variables ({} vs {})",
            self.var,
            other.var
        );
    }

    /// Coefficientwise sum. Panics if the variable tags differ.
    pub fn add(&self, other: &Self) -> Self {
        self.assert_same_var(other, "add");
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len().max(other.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        Self::new(self.var, coeffs)
    }

    pub fn neg(&self) -> Self {
        Self::new(self.var, self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.assert_same_var(other, "subtract");
        self.add(&other.neg())
    }

    /// Exact convolution product. Panics if the variable tags differ.
    pub fn mul(&self, other: &Self) -> Self {
        self.assert_same_var(other, "multiply");
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.var);
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Self::new(self.var, coeffs)
    }

    pub fn scale(&self, factor: &BigInt) -> Self {
        Self::new(self.var, self.coeffs.iter().map(|c| c * factor).collect())
    }

    /// Evaluates at an integer point by Horner's rule.
    pub fn eval(&self, point: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * point + c;
        }
        acc
    }
}

impl std::fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (deg, c) in self.nonzero_terms() {
            if first {
                first = false;
            } else if c.sign() == Sign::Minus {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let mag = if first || c.sign() != Sign::Minus { c.clone() } else { -c };
            match deg {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    write!(f, "{}", self.var)?;
                    if deg > 1 {
                        write!(f, "^{deg}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// A polynomial together with an inclusive truncation degree `D`: the
/// coefficients of degrees `0..=D` are meaningful, everything above is
/// unknown.
///
/// Binary operations between series of truncation `D1` and `D2` truncate to
/// `min(D1, D2)`, so a coefficient is never reported unless both operands
/// vouched for it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    poly: IntPolynomial,
    trunc: usize,
}

impl TruncatedSeries {
    /// Wraps a polynomial, discarding any coefficients above `trunc_degree`.
    pub fn new(poly: IntPolynomial, trunc_degree: usize) -> Self {
        let coeffs = poly
            .coeffs()
            .iter()
            .take(trunc_degree + 1)
            .cloned()
            .collect();
        TruncatedSeries {
            poly: IntPolynomial::new(poly.var(), coeffs),
            trunc: trunc_degree,
        }
    }

    pub fn zero(var: Var, trunc_degree: usize) -> Self {
        Self::new(IntPolynomial::zero(var), trunc_degree)
    }

    pub fn one(var: Var, trunc_degree: usize) -> Self {
        Self::new(IntPolynomial::one(var), trunc_degree)
    }

    pub fn poly(&self) -> &IntPolynomial {
        &self.poly
    }

    pub fn var(&self) -> Var {
        self.poly.var()
    }

    pub fn trunc_degree(&self) -> usize {
        self.trunc
    }

    /// Coefficient of `var^degree`. Panics above the truncation degree,
    /// where the coefficient is unknown rather than zero.
    pub fn coeff(&self, degree: usize) -> BigInt {
        assert!(
            degree <= self.trunc,
            "coefficient of degree {degree} is beyond truncation degree {}",
            self.trunc
        );
        self.poly.coeff(degree)
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(self.poly.add(&other.poly), self.trunc.min(other.trunc))
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::new(self.poly.sub(&other.poly), self.trunc.min(other.trunc))
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(self.poly.mul(&other.poly), self.trunc.min(other.trunc))
    }

    /// Multiplicative inverse modulo `var^(trunc_degree + 1)`.
    ///
    /// Requires a constant term of `1` or `-1`; together with integer
    /// coefficients this keeps every coefficient of the inverse integral.
    pub fn inverse(&self) -> Result<Self> {
        let lead = self.poly.coeff(0);
        if !lead.is_one() && !(-&lead).is_one() {
            return Err(Error::NonUnitConstant(lead));
        }
        // With s0 = ±1 the recurrence  t_n = -s0 * sum_{i=1..n} s_i t_{n-i}
        // (and t_0 = s0) solves  s * t = 1  degree by degree.
        let mut inv = vec![BigInt::zero(); self.trunc + 1];
        inv[0] = lead.clone();
        for n in 1..=self.trunc {
            let mut acc = BigInt::zero();
            for i in 1..=n.min(self.poly.coeffs().len().saturating_sub(1)) {
                acc += &self.poly.coeffs()[i] * &inv[n - i];
            }
            inv[n] = -&lead * acc;
        }
        Ok(Self::new(IntPolynomial::new(self.var(), inv), self.trunc))
    }

    /// Relabels `v^j` as `target^(m*j)`, turning a series in one variable
    /// into a sparse series in another (the `u = x^(N-1)` change of
    /// variable). The truncation degree becomes `m * D`.
    ///
    /// Panics if `m` is zero.
    pub fn substitute_power(&self, m: usize, target: Var) -> Self {
        assert!(m >= 1, "substitution exponent must be at least 1");
        let mut coeffs = Vec::new();
        if let Some(deg) = self.poly.degree() {
            coeffs = vec![BigInt::zero(); m * deg + 1];
            for (j, c) in self.poly.nonzero_terms() {
                coeffs[m * j] = c.clone();
            }
        }
        Self::new(IntPolynomial::new(target, coeffs), m * self.trunc)
    }
}

impl std::fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} + O({}^{})", self.poly, self.var(), self.trunc + 1)
    }
}

/// Binomial coefficient `C(n, k)`, zero outside `0 <= k <= n`.
pub fn binomial(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    binomial_ext(n as i64, k as u64)
}

/// Binomial coefficient with an arbitrary (possibly negative) integer upper
/// argument: the falling-factorial product `top (top-1) ... (top-k+1)`
/// divided by `k!`. The division is exact because any `k` consecutive
/// integers contain a multiple of each `i <= k`.
pub fn binomial_ext(top: i64, k: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 1..=k {
        acc *= BigInt::from(top) - BigInt::from(i) + 1;
        let divisor = BigInt::from(i);
        debug_assert!((&acc % &divisor).is_zero(), "inexact division in binomial_ext");
        acc /= divisor;
    }
    acc
}

/// The alternating binomial sum `sum_{r=0}^{p} (-1)^r C(p, r) f(r)`.
///
/// Up to sign this is the `p`-th forward difference of `f` at `0`, so it
/// vanishes whenever `f` is the restriction of a polynomial of degree
/// below `p`. Applied for all `p` it is an involution on sequences.
pub fn alt_binomial_sum<F: FnMut(u64) -> BigInt>(mut f: F, p: u64) -> BigInt {
    let mut acc = BigInt::zero();
    for r in 0..=p {
        let term = binomial(p, r as i64) * f(r);
        if r % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// The degree-`d` product `(v + 1)(v + 2) ... (v + d)` (the empty product
/// for `d = 0`). These shifted factorials span the polynomial ring and are
/// the reference family for the transform-sum checker.
pub fn rising_factorial_poly(var: Var, d: u64) -> IntPolynomial {
    let mut acc = IntPolynomial::one(var);
    for i in 1..=d {
        let factor = IntPolynomial::new(var, vec![BigInt::from(i), BigInt::one()]);
        acc = acc.mul(&factor);
    }
    acc
}
