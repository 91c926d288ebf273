//! The first-page computations: dimension tables, slopes, Euler series,
//! lower bounds, growth estimates, and identity checkers.
//!
//! The first page of the cohomology spectral sequence of a cosimplicial
//! space is, column by column, a normalized quotient whose Poincaré
//! polynomial is an alternating binomial sum of the Poincaré polynomials of
//! the terms. For the link model those terms are configuration spaces, so
//! every entry here reduces to finite differences of Stirling numbers.
//!
//! Two independent routes to the Euler characteristic series of the page
//! are implemented and kept separate on purpose:
//!
//! - [`euler_series_summed`] evaluates the double sum over columns
//!   directly, with a certified finite cutoff;
//! - [`euler_series_closed`] expands the closed product form
//!   `1 / ((1 - x^(N-1))(1 - 2x^(N-1))...(1 - ell*x^(N-1)))`.
//!
//! Their coefficientwise agreement ([`euler_series_report`]) is the main
//! identity this crate exists to check; [`verify_transform_sum`] and
//! [`verify_stirling_transform`] isolate the two combinatorial steps that
//! identity rests on.

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exact::{alt_binomial_sum, binomial, IntPolynomial, TruncatedSeries, Var};
use crate::poincare::{lattice_expand, link_term_poincare, ModelParams};
use crate::stirling::{stirling1_ext, stirling2};

/// Dimensions of the first page over `0 <= p <= p_max`, all `q`.
///
/// Row `p` is stored as the Poincaré polynomial of the `p`-th column; the
/// entry at `(p, q)` is its `x^q` coefficient. Every entry is nonnegative,
/// and column `p >= 1` vanishes above degree `(ell*p - 1)(N - 1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BigradedDimTable {
    params: ModelParams,
    p_max: u64,
    lines: Vec<IntPolynomial>,
}

impl BigradedDimTable {
    pub fn params(&self) -> ModelParams {
        self.params
    }

    pub fn p_max(&self) -> u64 {
        self.p_max
    }

    /// The Poincaré polynomial of column `p`.
    pub fn line(&self, p: u64) -> &IntPolynomial {
        &self.lines[p as usize]
    }

    /// Dimension at `(p, q)`; zero outside the stored range of `q`.
    pub fn dim(&self, p: u64, q: u64) -> BigInt {
        assert!(p <= self.p_max, "column {p} beyond table p_max {}", self.p_max);
        self.lines[p as usize].coeff(q as usize)
    }

    /// All nonzero entries as `(p, q, dim)`, ordered by `(p, q)`.
    pub fn nonzero_entries(&self) -> Vec<(u64, u64, BigInt)> {
        let mut out = Vec::new();
        for (p, line) in self.lines.iter().enumerate() {
            for (q, c) in line.nonzero_terms() {
                out.push((p as u64, q as u64, c.clone()));
            }
        }
        out
    }
}

/// The Euler characteristic series of the first page computed both ways.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerSeriesReport {
    pub params: ModelParams,
    pub trunc_degree: usize,
    pub summed: TruncatedSeries,
    pub closed: TruncatedSeries,
    /// Coefficientwise agreement on all degrees up to `trunc_degree`.
    pub agree: bool,
}

/// Result of checking the annihilation-and-telescoping identity for one
/// polynomial: the full alternating double sum collapses to `q(-1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransformSumCheck {
    pub ok: bool,
    /// Generating polynomial of the finite differences `s_p`, `p = 0..=d`.
    pub s_poly: IntPolynomial,
    pub q_at_minus_one: BigInt,
}

/// Result of checking one coefficient identity: the alternating double sum
/// of cycle numbers against the subset number `{ell + j; ell}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StirlingTransformCheck {
    pub ok: bool,
    pub lhs: BigInt,
    pub rhs: BigInt,
}

/// Ratio-based growth estimate of a lattice-supported series.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GrowthEstimate {
    /// Mean ratio of consecutive lattice coefficients.
    pub u_ratio: f64,
    /// Per-cohomological-degree rate, `u_ratio^(1/(N-1))`.
    pub x_rate: f64,
}

/// Poincaré polynomial of the `p`-th column of the first page: the
/// alternating binomial sum of the term polynomials,
/// `sum_i (-1)^(p-i) C(p,i) * term_i`.
///
/// The entries are dimensions, so a negative coefficient is impossible for
/// a correct model; it is reported as an internal inconsistency rather than
/// silently returned.
pub fn e1_line(p: u64, params: &ModelParams) -> Result<IntPolynomial> {
    let mut acc = IntPolynomial::zero(Var::X);
    for i in 0..=p {
        let term = link_term_poincare(i, params);
        let mut weight = binomial(p, i as i64);
        if (p - i) % 2 == 1 {
            weight = -weight;
        }
        acc = acc.add(&term.scale(&weight));
    }
    if let Some((q, c)) = acc.nonzero_terms().find(|(_, c)| c.is_negative()) {
        return Err(Error::Internal(format!(
            "negative dimension {c} at (p, q) = ({p}, {q})"
        )));
    }
    Ok(acc)
}

/// Builds the dimension table for columns `0..=p_max`.
pub fn e1_table(p_max: u64, params: &ModelParams) -> Result<BigradedDimTable> {
    let lines = (0..=p_max)
        .map(|p| e1_line(p, params))
        .collect::<Result<Vec<_>>>()?;
    Ok(BigradedDimTable { params: *params, p_max, lines })
}

/// Extreme slopes `q/p` over the nonzero entries with `p >= 1`, as exact
/// rationals `(lower, upper)`.
pub fn empirical_slopes(table: &BigradedDimTable) -> Result<(Ratio<i64>, Ratio<i64>)> {
    let mut bounds: Option<(Ratio<i64>, Ratio<i64>)> = None;
    for (p, q, _) in table.nonzero_entries() {
        if p == 0 {
            continue;
        }
        let slope = Ratio::new(q as i64, p as i64);
        bounds = Some(match bounds {
            None => (slope, slope),
            Some((lo, hi)) => (lo.min(slope), hi.max(slope)),
        });
    }
    bounds.ok_or(Error::UndefinedSlope)
}

/// The `u^j` coefficient of the Euler series as the certified finite sum
/// `sum_{p=0}^{2j} sum_{r=0}^{p} (-1)^r C(p,r) [ell*r; ell*r - j]`.
///
/// The summand is a polynomial of degree `2j` in `r`, so differences of
/// order above `2j` vanish and the infinite sum over `p` collapses; the
/// first discarded term is recomputed and must be zero.
fn stirling_sum_coefficient(ell: u64, j: u64) -> Result<BigInt> {
    let f = |r: u64| {
        let a = (ell * r) as i64;
        stirling1_ext(a, a - j as i64)
    };
    let mut total = BigInt::zero();
    for p in 0..=2 * j {
        total += alt_binomial_sum(f, p);
    }
    let discarded = alt_binomial_sum(f, 2 * j + 1);
    if !discarded.is_zero() {
        return Err(Error::Internal(format!(
            "cutoff term at difference order {} is {discarded} for ell = {ell}, j = {j}",
            2 * j + 1
        )));
    }
    Ok(total)
}

/// Euler characteristic series of the first page, columnwise double sum.
///
/// Exact on every coefficient: the sum over columns is cut off at the
/// certified finite-difference bound, never merely truncated.
pub fn euler_series_summed(params: &ModelParams, trunc_degree: usize) -> Result<TruncatedSeries> {
    let step = params.lattice_step();
    let mut coeffs = vec![BigInt::zero(); trunc_degree + 1];
    for j in 0..=(trunc_degree / step) as u64 {
        coeffs[j as usize * step] = stirling_sum_coefficient(params.ell(), j)?;
    }
    Ok(TruncatedSeries::new(
        IntPolynomial::new(Var::X, coeffs),
        trunc_degree,
    ))
}

/// Euler characteristic series in closed form: the expansion of
/// `1 / ((1 - x^(N-1))(1 - 2x^(N-1))...(1 - ell*x^(N-1)))`.
pub fn euler_series_closed(params: &ModelParams, trunc_degree: usize) -> TruncatedSeries {
    let mut denom = IntPolynomial::one(Var::U);
    for m in 1..=params.ell() as i64 {
        denom = denom.mul(&IntPolynomial::from_i64(Var::U, &[1, -m]));
    }
    expand_reciprocal(denom, params, trunc_degree)
}

/// Euler characteristic series of the product of `ell` knot models:
/// `1 / (1 - x^(N-1))^ell`, with `u^j` coefficient `C(j + ell - 1, ell - 1)`.
pub fn knot_power_series(params: &ModelParams, trunc_degree: usize) -> TruncatedSeries {
    let mut denom = IntPolynomial::one(Var::U);
    let factor = IntPolynomial::from_i64(Var::U, &[1, -1]);
    for _ in 0..params.ell() {
        denom = denom.mul(&factor);
    }
    expand_reciprocal(denom, params, trunc_degree)
}

fn expand_reciprocal(
    denom_in_u: IntPolynomial,
    params: &ModelParams,
    trunc_degree: usize,
) -> TruncatedSeries {
    let denom = lattice_expand(&denom_in_u, params.lattice_step());
    TruncatedSeries::new(denom, trunc_degree)
        .inverse()
        .expect("denominator has constant term 1")
}

/// Euler series of the pair: links modulo the split product of knots,
/// `euler_series_closed - knot_power_series`. Zero for `ell = 1`, and the
/// constant coefficient always cancels.
pub fn relative_series(params: &ModelParams, trunc_degree: usize) -> TruncatedSeries {
    euler_series_closed(params, trunc_degree).sub(&knot_power_series(params, trunc_degree))
}

/// Computes both forms of the Euler series and compares them.
pub fn euler_series_report(params: &ModelParams, trunc_degree: usize) -> Result<EulerSeriesReport> {
    let summed = euler_series_summed(params, trunc_degree)?;
    let closed = euler_series_closed(params, trunc_degree);
    let agree = summed == closed;
    Ok(EulerSeriesReport {
        params: *params,
        trunc_degree,
        summed,
        closed,
        agree,
    })
}

/// Lower bound for the total complex in one degree: under slope hypotheses
/// the dimensions in window `[ceil(n(1 - 1/alpha)), n]` sum to at least the
/// absolute value of the degree-`n` Euler coefficient.
///
/// Returns `(bound, (window_lo, window_hi))` with an exact rational
/// ceiling. Requires `alpha > 1` and `n` within the series truncation.
pub fn tot_lower_bound(
    n: usize,
    alpha: Ratio<i64>,
    series: &TruncatedSeries,
) -> Result<(BigInt, (usize, usize))> {
    if alpha <= Ratio::one() {
        return Err(Error::SlopeTooSmall(alpha));
    }
    if n > series.trunc_degree() {
        return Err(Error::DegreeOutOfRange {
            degree: n,
            trunc: series.trunc_degree(),
        });
    }
    let fraction = Ratio::one() - alpha.recip();
    let lo = (Ratio::from_integer(n as i64) * fraction).ceil().to_integer() as usize;
    Ok((series.coeff(n).abs(), (lo, n)))
}

/// Mean consecutive-ratio growth estimate over the last `tail` ratios of
/// the lattice coefficients (multiples of `N - 1`) of `series`.
///
/// The only floating-point computation in the crate; everything feeding it
/// is exact. Requires all `tail + 1` trailing lattice coefficients nonzero.
pub fn growth_rate(series: &TruncatedSeries, dim: u64, tail: usize) -> Result<GrowthEstimate> {
    if dim < 3 {
        return Err(Error::Parameter(format!(
            "ambient dimension must be at least 3 (got {dim})"
        )));
    }
    if tail < 1 {
        return Err(Error::TailWindow("tail must cover at least one ratio".into()));
    }
    let step = (dim - 1) as usize;
    let top = series.trunc_degree() / step;
    if top < tail {
        return Err(Error::TailWindow(format!(
            "series holds {} lattice coefficients, tail needs {}",
            top + 1,
            tail + 1
        )));
    }
    let window: Vec<BigInt> = (top - tail..=top).map(|j| series.coeff(j * step)).collect();
    if let Some(i) = window.iter().position(Zero::is_zero) {
        return Err(Error::TailWindow(format!(
            "zero coefficient at lattice degree {} inside the tail window",
            (top - tail + i) * step
        )));
    }
    let ratio_sum: f64 = window
        .windows(2)
        .map(|w| big_to_f64(&w[1]) / big_to_f64(&w[0]))
        .sum();
    let u_ratio = ratio_sum / tail as f64;
    let x_rate = u_ratio.powf(1.0 / step as f64);
    Ok(GrowthEstimate { u_ratio, x_rate })
}

fn big_to_f64(value: &BigInt) -> f64 {
    value.to_f64().expect("BigInt always maps into f64 range")
}

/// Checks, for one integer polynomial `q`, that the alternating double sum
/// `sum_p sum_r (-1)^r C(p,r) q(r)` telescopes to `q(-1)`.
///
/// The inner differences `s_p` vanish for `p` above the degree `d` (this is
/// asserted two orders out), so the double sum is the finite total
/// `s_0 + ... + s_d`. Returns the difference-generating polynomial: for the
/// shifted factorial family `(r+1)(r+2)...(r+d)` it equals the expansion of
/// `d! (1 - x)^d`.
pub fn verify_transform_sum(q: &IntPolynomial) -> TransformSumCheck {
    let d = q.degree().unwrap_or(0) as u64;
    let f = |r: u64| q.eval(&BigInt::from(r));
    let differences: Vec<BigInt> = (0..=d + 2).map(|p| alt_binomial_sum(f, p)).collect();
    assert!(
        differences[d as usize + 1..].iter().all(Zero::is_zero),
        "differences of order above the degree must vanish"
    );
    let total: BigInt = differences.iter().sum();
    let q_at_minus_one = q.eval(&BigInt::from(-1));
    TransformSumCheck {
        ok: total == q_at_minus_one,
        s_poly: IntPolynomial::new(Var::X, differences),
        q_at_minus_one,
    }
}

/// Checks one Euler-coefficient identity: the alternating double sum of
/// cycle numbers `[ell*r; ell*r - j]` equals the subset number
/// `{ell + j; ell}`. Requires `ell >= 1` and `j >= 1`.
pub fn verify_stirling_transform(ell: u64, j: u64) -> Result<StirlingTransformCheck> {
    if ell < 1 {
        return Err(Error::Parameter("ell must be at least 1".into()));
    }
    if j < 1 {
        return Err(Error::Parameter("j must be at least 1".into()));
    }
    let lhs = stirling_sum_coefficient(ell, j)?;
    let rhs = stirling2(ell + j, ell as i64);
    Ok(StirlingTransformCheck { ok: lhs == rhs, lhs, rhs })
}
