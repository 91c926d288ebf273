//! Poincaré polynomials of configuration spaces of points in `R^N`, and of
//! the terms of the cosimplicial model for long links.
//!
//! The cohomology of the configuration space of `k` labeled points in `R^N`
//! is concentrated in degrees that are multiples of `N - 1`, with Poincaré
//! polynomial `(1 + x^(N-1))(1 + 2x^(N-1))...(1 + (k-1)x^(N-1))`. Writing
//! `u = x^(N-1)`, the `u^j` coefficient is the cycle number `[k; k - j]`,
//! which ties the whole spectral-sequence computation to the Stirling
//! triangle.
//!
//! The `p`-th term of the model for links with `ell` strings is the
//! configuration space of `ell * p` points, so its Poincaré polynomial is
//! the same product with `k = ell * p`.

use crate::error::{Error, Result};
use crate::exact::{IntPolynomial, TruncatedSeries, Var};
use crate::stirling::stirling1;

/// Parameters of the link model: ambient dimension and number of strings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ModelParams {
    ell: u64,
    dim: u64,
}

impl ModelParams {
    /// Requires at least one string and ambient dimension at least 3.
    pub fn new(ell: u64, dim: u64) -> Result<Self> {
        if ell < 1 {
            return Err(Error::Parameter(
                "number of strings (ell) must be at least 1".into(),
            ));
        }
        if dim < 3 {
            return Err(Error::Parameter(format!(
                "ambient dimension must be at least 3 (got {dim})"
            )));
        }
        Ok(ModelParams { ell, dim })
    }

    /// Number of strings of the link.
    pub fn ell(&self) -> u64 {
        self.ell
    }

    /// Ambient dimension `N`.
    pub fn dim(&self) -> u64 {
        self.dim
    }

    /// All series in sight are supported on multiples of this step,
    /// `N - 1`.
    pub fn lattice_step(&self) -> usize {
        (self.dim - 1) as usize
    }

    /// Dimension 3 is accepted for exploratory computation, but the
    /// convergence and growth statements ask for `N >= 4`.
    pub fn theorem_grade(&self) -> bool {
        self.dim >= 4
    }
}

/// Expands a polynomial in `u` into one in `x` via `u = x^step`.
pub(crate) fn lattice_expand(poly_in_u: &IntPolynomial, step: usize) -> IntPolynomial {
    let trunc = poly_in_u.degree().unwrap_or(0);
    TruncatedSeries::new(poly_in_u.clone(), trunc)
        .substitute_power(step, Var::X)
        .poly()
        .clone()
}

/// Poincaré polynomial of the configuration space of `k` points in `R^N`:
/// the product `(1 + j x^(N-1))` over `j = 1 .. k-1`, which is `1` for
/// `k <= 1`. All coefficients are nonnegative.
pub fn conf_poincare(k: u64, dim: u64) -> Result<IntPolynomial> {
    if dim < 3 {
        return Err(Error::Parameter(format!(
            "ambient dimension must be at least 3 (got {dim})"
        )));
    }
    let mut product = IntPolynomial::one(Var::U);
    for j in 1..k {
        let factor = IntPolynomial::from_i64(Var::U, &[1, j as i64]);
        product = product.mul(&factor);
    }
    Ok(lattice_expand(&product, (dim - 1) as usize))
}

/// Poincaré polynomial of the `p`-th term of the link model: the
/// configuration space of `ell * p` points.
pub fn link_term_poincare(p: u64, params: &ModelParams) -> IntPolynomial {
    conf_poincare(params.ell() * p, params.dim()).expect("params are validated")
}

/// Checks the Stirling description of a single coefficient: the
/// `x^((N-1)j)` coefficient of `conf_poincare(k, N)` against `[k; k - j]`.
pub fn stirling_coefficient_check(k: u64, dim: u64, j: u64) -> Result<bool> {
    let poly = conf_poincare(k, dim)?;
    let degree = (dim - 1) as usize * j as usize;
    Ok(poly.coeff(degree) == stirling1(k, k as i64 - j as i64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_traits::{Signed, Zero};
    use proptest::prelude::*;

    #[test]
    fn empty_products() {
        for dim in 3..=6 {
            assert_eq!(conf_poincare(0, dim).unwrap(), IntPolynomial::one(Var::X));
            assert_eq!(conf_poincare(1, dim).unwrap(), IntPolynomial::one(Var::X));
        }
    }

    #[test]
    fn two_points_is_a_sphere() {
        let poly = conf_poincare(2, 4).unwrap();
        assert_eq!(poly, IntPolynomial::from_i64(Var::X, &[1, 0, 0, 1]));
    }

    #[test]
    fn four_points_hand_expansion() {
        let poly = conf_poincare(4, 4).unwrap();
        let mut expected = vec![0i64; 10];
        expected[0] = 1;
        expected[3] = 6;
        expected[6] = 11;
        expected[9] = 6;
        assert_eq!(poly, IntPolynomial::from_i64(Var::X, &expected));
    }

    #[test]
    fn six_points_in_dimension_five() {
        // u-coefficients 1, 15, 85, 225, 274, 120 placed on the 4-lattice.
        let poly = conf_poincare(6, 5).unwrap();
        assert_eq!(poly.coeff(12), BigInt::from(225));
        assert_eq!(poly.coeff(8), BigInt::from(85));
        assert_eq!(poly.coeff(20), BigInt::from(120));
        assert_eq!(poly.degree(), Some(20));
    }

    #[test]
    fn rejects_low_dimension() {
        assert!(matches!(conf_poincare(3, 2), Err(Error::Parameter(_))));
    }

    #[test]
    fn degree_support_and_positivity() {
        for dim in 3..=5u64 {
            let step = (dim - 1) as usize;
            for k in 1..=12u64 {
                let poly = conf_poincare(k, dim).unwrap();
                assert_eq!(poly.degree(), Some((k as usize - 1) * step), "k = {k}, N = {dim}");
                for (deg, c) in poly.nonzero_terms() {
                    assert_eq!(deg % step, 0, "off-lattice term at degree {deg}");
                    assert!(c.is_positive(), "coefficient at degree {deg} not positive");
                }
                // Every lattice degree within the support carries a term.
                for j in 0..k as usize {
                    assert!(!poly.coeff(j * step).is_zero());
                }
            }
        }
    }

    #[test]
    fn coefficients_are_cycle_numbers() {
        for dim in 3..=5u64 {
            for k in 0..=12u64 {
                for j in 0..=k {
                    assert!(
                        stirling_coefficient_check(k, dim, j).unwrap(),
                        "k = {k}, N = {dim}, j = {j}"
                    );
                }
            }
        }
    }

    #[test]
    fn model_params_validation() {
        assert!(ModelParams::new(2, 4).is_ok());
        assert!(matches!(ModelParams::new(0, 4), Err(Error::Parameter(_))));
        assert!(matches!(ModelParams::new(1, 2), Err(Error::Parameter(_))));
        assert!(!ModelParams::new(1, 3).unwrap().theorem_grade());
        assert!(ModelParams::new(1, 4).unwrap().theorem_grade());
    }

    #[test]
    fn link_terms_are_configuration_spaces() {
        let params = ModelParams::new(2, 4).unwrap();
        assert_eq!(link_term_poincare(0, &params), IntPolynomial::one(Var::X));
        assert_eq!(link_term_poincare(2, &params), conf_poincare(4, 4).unwrap());

        // One string is exactly the knot model.
        let knot = ModelParams::new(1, 4).unwrap();
        for p in 0..=5 {
            assert_eq!(link_term_poincare(p, &knot), conf_poincare(p, 4).unwrap());
        }
    }

    proptest! {
        #[test]
        fn lattice_expansion_preserves_coefficients(
            coeffs in prop::collection::vec(-9i64..=9, 1..6),
            step in 1usize..=5,
        ) {
            let in_u = IntPolynomial::from_i64(Var::U, &coeffs);
            let in_x = lattice_expand(&in_u, step);
            for (j, c) in in_u.nonzero_terms() {
                prop_assert_eq!(&in_x.coeff(step * j), c);
            }
            prop_assert_eq!(in_x.degree(), in_u.degree().map(|d| d * step));
        }
    }
}
