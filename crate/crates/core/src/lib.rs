//! Exact calculator for the first page of the cohomology spectral sequence
//! attached to the standard cosimplicial model of spaces of long links in
//! `R^N`.
//!
//! Everything upstream of the floating-point growth estimates is computed
//! over the integers:
//!
//! - [`exact`]: big-integer polynomials, truncated power series, binomial
//!   coefficients, and alternating binomial (finite-difference) sums;
//! - [`stirling`]: Stirling triangles of both kinds extended to negative
//!   arguments, second-order Eulerian numbers, the binomial-basis Stirling
//!   polynomials, and brute-force enumeration oracles;
//! - [`poincare`]: Poincaré polynomials of ordered configuration spaces and
//!   of the terms of the link model;
//! - [`sseq`]: first-page dimension tables, empirical slopes, the Euler
//!   series of the page in summed and closed form, the series of the pair
//!   (links modulo split tuples of knots), degreewise lower bounds, growth
//!   estimates, and machine checkers for the combinatorial identities the
//!   whole computation rests on.

pub mod error;
pub mod exact;
pub mod poincare;
pub mod sseq;
pub mod stirling;

pub use error::{Error, Result};
pub use exact::{IntPolynomial, TruncatedSeries, Var};
pub use poincare::ModelParams;
pub use sseq::{
    BigradedDimTable, EulerSeriesReport, GrowthEstimate, StirlingTransformCheck,
    TransformSumCheck,
};
