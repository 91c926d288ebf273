//! Stirling numbers of both kinds, their common polynomial extension, and
//! second-order Eulerian numbers.
//!
//! The two Stirling triangles are glued into a single function of integer
//! arguments by the duality `[a; b] = {-b; -a}`: cycle numbers live in the
//! quadrant `a, b >= 0`, subset numbers in `a, b <= 0`, and everything in
//! between is zero. [`stirling1_poly`] exhibits the same gluing as one
//! polynomial identity: for fixed offset `n`, the map `x -> [x; x - n]` is a
//! polynomial of degree `2n` whose coefficients in the shifted binomial
//! basis are second-order Eulerian numbers, and a single evaluation routine
//! covers both quadrants.
//!
//! All triangle values are memoized process-wide; queries return copies.
//!
//! [`count_set_partitions`] and [`count_cycle_perms`] are deliberately naive
//! enumeration counters. They share no recurrence with the triangles and
//! exist to keep the fast implementations honest at small sizes.

use std::sync::Mutex;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::binomial_ext;

/// Memoized triangle of a two-term recurrence, grown row by row on demand.
struct Triangle {
    rows: Mutex<Vec<Vec<BigInt>>>,
    next_row: fn(n: usize, prev: &[BigInt]) -> Vec<BigInt>,
}

impl Triangle {
    const fn new(next_row: fn(usize, &[BigInt]) -> Vec<BigInt>) -> Self {
        Triangle { rows: Mutex::new(Vec::new()), next_row }
    }

    /// Entry `(n, k)`, zero outside the stored row.
    fn value(&self, n: usize, k: usize) -> BigInt {
        let mut rows = self.rows.lock().expect("triangle lock poisoned");
        while rows.len() <= n {
            let next = (self.next_row)(rows.len(), rows.last().map_or(&[], Vec::as_slice));
            rows.push(next);
        }
        rows[n].get(k).cloned().unwrap_or_default()
    }
}

fn at(row: &[BigInt], k: usize) -> BigInt {
    row.get(k).cloned().unwrap_or_default()
}

static STIRLING1: Triangle = Triangle::new(|n, prev| {
    if n == 0 {
        return vec![BigInt::from(1)];
    }
    (0..=n)
        .map(|k| {
            let carried = if k > 0 { at(prev, k - 1) } else { BigInt::zero() };
            carried + BigInt::from(n - 1) * at(prev, k)
        })
        .collect()
});

static STIRLING2: Triangle = Triangle::new(|n, prev| {
    if n == 0 {
        return vec![BigInt::from(1)];
    }
    (0..=n)
        .map(|k| {
            let carried = if k > 0 { at(prev, k - 1) } else { BigInt::zero() };
            carried + BigInt::from(k) * at(prev, k)
        })
        .collect()
});

static EULERIAN2: Triangle = Triangle::new(|n, prev| {
    if n == 0 {
        return vec![BigInt::from(1)];
    }
    // Row n has entries for 0 <= i < n (plus the single entry at n = 0);
    // everything outside is zero.
    (0..n.max(1))
        .map(|i| {
            let carried = if i > 0 { at(prev, i - 1) } else { BigInt::zero() };
            BigInt::from(i + 1) * at(prev, i) + BigInt::from(2 * n - 1 - i) * carried
        })
        .collect()
});

/// Unsigned Stirling number of the first kind `[n; k]`: permutations of `n`
/// elements with exactly `k` cycles. Zero outside `0 <= k <= n`.
pub fn stirling1(n: u64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    STIRLING1.value(n as usize, k as usize)
}

/// Stirling number of the second kind `{n; k}`: partitions of an
/// `n`-element set into exactly `k` nonempty blocks. Zero outside range.
pub fn stirling2(n: u64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    STIRLING2.value(n as usize, k as usize)
}

/// The Stirling pair as one function of integer arguments.
///
/// Cycle numbers on `a, b >= 0`, subset numbers via `[a; b] = {-b; -a}` on
/// `a, b <= 0`, zero when the signs are mixed. The overlap at `(0, 0)` is
/// consistent: both quadrants give `1`.
pub fn stirling1_ext(a: i64, b: i64) -> BigInt {
    if a >= 0 && b >= 0 {
        stirling1(a as u64, b)
    } else if a <= 0 && b <= 0 {
        stirling2(-b as u64, -a)
    } else {
        BigInt::zero()
    }
}

/// Second-order Eulerian number, the coefficient triangle with row `n`
/// supported on `0 <= i < max(n, 1)` and row sums `(2n - 1)!!`.
pub fn eulerian2(n: u64, i: i64) -> BigInt {
    if i < 0 {
        return BigInt::zero();
    }
    EULERIAN2.value(n as usize, i as usize)
}

/// A polynomial written in the shifted binomial basis `C(x + i, order)`,
/// `i = 0, 1, ...`; evaluation is exact at every integer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinomialBasisPoly {
    order: u64,
    coeffs: Vec<BigInt>,
}

impl BinomialBasisPoly {
    pub fn new(order: u64, coeffs: Vec<BigInt>) -> Self {
        BinomialBasisPoly { order, coeffs }
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn eval(&self, x: i64) -> BigInt {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c * binomial_ext(x + i as i64, self.order))
            .sum()
    }
}

/// The degree-`2n` polynomial that interpolates `x -> [x; x - n]` across
/// all integers: second-order Eulerian coefficients in the basis
/// `C(x + i, 2n)`. At negative `x` it evaluates to subset numbers, which is
/// the duality in [`stirling1_ext`] as a single closed form.
pub fn stirling1_poly(n: u64) -> BinomialBasisPoly {
    let coeffs = (0..n.max(1) as i64).map(|i| eulerian2(n, i)).collect();
    BinomialBasisPoly::new(2 * n, coeffs)
}

/// Counts partitions of an `n`-set into exactly `k` blocks by enumerating
/// restricted growth strings. Refuses `n > 12`.
pub fn count_set_partitions(n: u64, k: u64) -> Result<BigInt> {
    const LIMIT: u64 = 12;
    if n > LIMIT {
        return Err(Error::OracleScale { n, limit: LIMIT });
    }
    let mut found: u64 = 0;
    walk_partitions(0, n, 0, k, &mut found);
    Ok(BigInt::from(found))
}

fn walk_partitions(pos: u64, n: u64, blocks: u64, k: u64, found: &mut u64) {
    if blocks > k || blocks + (n - pos) < k {
        return;
    }
    if pos == n {
        // The prunes force blocks == k here.
        *found += 1;
        return;
    }
    // Element `pos` joins one of the open blocks (each a distinct string)
    // or opens a new one.
    for _ in 0..blocks {
        walk_partitions(pos + 1, n, blocks, k, found);
    }
    walk_partitions(pos + 1, n, blocks + 1, k, found);
}

/// Counts permutations of `n` elements with exactly `k` cycles by visiting
/// every permutation and tracing its cycles. Refuses `n > 9`.
pub fn count_cycle_perms(n: u64, k: u64) -> Result<BigInt> {
    const LIMIT: u64 = 9;
    if n > LIMIT {
        return Err(Error::OracleScale { n, limit: LIMIT });
    }
    let mut perm: Vec<usize> = (0..n as usize).collect();
    let mut found: u64 = 0;
    visit_permutations(&mut perm, 0, &mut |p| {
        if cycle_count(p) == k {
            found += 1;
        }
    });
    Ok(BigInt::from(found))
}

fn visit_permutations(perm: &mut [usize], i: usize, visit: &mut impl FnMut(&[usize])) {
    if i == perm.len() {
        visit(perm);
        return;
    }
    for j in i..perm.len() {
        perm.swap(i, j);
        visit_permutations(perm, i + 1, visit);
        perm.swap(i, j);
    }
}

fn cycle_count(perm: &[usize]) -> u64 {
    let mut seen = vec![false; perm.len()];
    let mut cycles = 0;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        cycles += 1;
        let mut cur = start;
        while !seen[cur] {
            seen[cur] = true;
            cur = perm[cur];
        }
    }
    cycles
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{IntPolynomial, TruncatedSeries, Var};
    use num_traits::One;

    #[test]
    fn stirling1_small_values() {
        assert_eq!(stirling1(0, 0), BigInt::one());
        assert_eq!(stirling1(1, 1), BigInt::one());
        assert_eq!(stirling1(3, 1), BigInt::from(2));
        assert_eq!(stirling1(4, 2), BigInt::from(11));
        assert_eq!(stirling1(5, 2), BigInt::from(50));
        assert_eq!(stirling1(5, 3), BigInt::from(35));
        assert_eq!(stirling1(5, 0), BigInt::zero());
        assert_eq!(stirling1(3, 5), BigInt::zero());
    }

    #[test]
    fn stirling1_rows_sum_to_factorials() {
        let mut factorial = BigInt::one();
        for n in 1..=10u64 {
            factorial *= n;
            let row_sum: BigInt = (0..=n as i64).map(|k| stirling1(n, k)).sum();
            assert_eq!(row_sum, factorial, "row {n}");
        }
    }

    #[test]
    fn stirling2_small_values() {
        assert_eq!(stirling2(0, 0), BigInt::one());
        assert_eq!(stirling2(3, 2), BigInt::from(3));
        assert_eq!(stirling2(4, 2), BigInt::from(7));
        assert_eq!(stirling2(5, 3), BigInt::from(25));
        assert_eq!(stirling2(6, 3), BigInt::from(90));
        assert_eq!(stirling2(4, 0), BigInt::zero());
    }

    #[test]
    fn stirling2_rows_sum_to_bell_numbers() {
        let bell = [1u64, 1, 2, 5, 15, 52, 203, 877, 4140];
        for (n, &b) in bell.iter().enumerate() {
            let row_sum: BigInt = (0..=n as i64).map(|k| stirling2(n as u64, k)).sum();
            assert_eq!(row_sum, BigInt::from(b), "row {n}");
        }
    }

    #[test]
    fn first_kind_rows_match_rising_products() {
        // (1 + u)(1 + 2u)...(1 + (k-1)u) has u^j coefficient [k; k - j].
        let mut product = IntPolynomial::one(Var::U);
        for k in 1..=15i64 {
            for j in 0..k as usize {
                assert_eq!(product.coeff(j), stirling1(k as u64, k - j as i64), "k = {k}, j = {j}");
            }
            product = product.mul(&IntPolynomial::from_i64(Var::U, &[1, k]));
        }
    }

    #[test]
    fn conf_row_six_hand_expansion() {
        let mut product = IntPolynomial::one(Var::U);
        for j in 1..=5 {
            product = product.mul(&IntPolynomial::from_i64(Var::U, &[1, j]));
        }
        assert_eq!(product, IntPolynomial::from_i64(Var::U, &[1, 15, 85, 225, 274, 120]));
    }

    #[test]
    fn second_kind_columns_match_inverted_products() {
        // 1 / ((1 - u)(1 - 2u)...(1 - ku)) has u^j coefficient {k + j; k}.
        for k in 1..=5i64 {
            let mut product = IntPolynomial::one(Var::U);
            for m in 1..=k {
                product = product.mul(&IntPolynomial::from_i64(Var::U, &[1, -m]));
            }
            let expansion = TruncatedSeries::new(product, 20).inverse().unwrap();
            for j in 0..=20usize {
                assert_eq!(
                    expansion.coeff(j),
                    stirling2(k as u64 + j as u64, k),
                    "k = {k}, j = {j}"
                );
            }
        }
    }

    #[test]
    fn ext_sign_quadrants() {
        assert_eq!(stirling1_ext(4, 2), BigInt::from(11));
        assert_eq!(stirling1_ext(-2, -4), stirling2(4, 2));
        assert_eq!(stirling1_ext(3, -1), BigInt::zero());
        assert_eq!(stirling1_ext(-3, 1), BigInt::zero());
        assert_eq!(stirling1_ext(0, 0), BigInt::one());
        assert_eq!(stirling1_ext(0, -2), BigInt::zero());
        assert_eq!(stirling1_ext(-2, 0), BigInt::zero());
    }

    #[test]
    fn eulerian2_first_rows() {
        let expected: [&[i64]; 5] = [&[1], &[1], &[1, 2], &[1, 8, 6], &[1, 22, 58, 24]];
        for (n, row) in expected.iter().enumerate() {
            for (i, &v) in row.iter().enumerate() {
                assert_eq!(eulerian2(n as u64, i as i64), BigInt::from(v), "({n}, {i})");
            }
            // Zero beyond the row and at negative index.
            assert_eq!(eulerian2(n as u64, row.len() as i64), BigInt::zero());
            assert_eq!(eulerian2(n as u64, -1), BigInt::zero());
        }
    }

    #[test]
    fn eulerian2_rows_sum_to_double_factorials() {
        let mut double_factorial = BigInt::one();
        for n in 1..=10u64 {
            double_factorial *= 2 * n - 1;
            let row_sum: BigInt = (0..n as i64).map(|i| eulerian2(n, i)).sum();
            assert_eq!(row_sum, double_factorial, "row {n}");
        }
    }

    #[test]
    fn poly_interpolates_both_quadrants() {
        // The single degree-2n polynomial hits cycle numbers at x >= 0,
        // subset numbers at x < 0, and zero in the mixed-sign gap.
        for n in 0..=6u64 {
            let poly = stirling1_poly(n);
            assert_eq!(poly.order(), 2 * n);
            for x in -15..=15i64 {
                assert_eq!(
                    poly.eval(x),
                    stirling1_ext(x, x - n as i64),
                    "n = {n}, x = {x}"
                );
            }
        }
    }

    #[test]
    fn poly_negative_values_are_subset_numbers() {
        for n in 0..=6u64 {
            let poly = stirling1_poly(n);
            for m in 1..=6u64 {
                assert_eq!(poly.eval(-(m as i64)), stirling2(m + n, m as i64), "n = {n}, m = {m}");
            }
        }
    }

    #[test]
    fn poly_spot_values() {
        assert_eq!(stirling1_poly(0).eval(7), BigInt::one());
        assert_eq!(stirling1_poly(1).eval(4), BigInt::from(6));
        assert_eq!(stirling1_poly(1).eval(0), BigInt::zero());
        assert_eq!(stirling1_poly(1).eval(-1), BigInt::one());
        assert_eq!(stirling1_poly(2).eval(-1), BigInt::one());
    }

    #[test]
    fn poly_value_matches_cycle_enumeration() {
        // [5; 3] two independent ways: closed form and raw enumeration.
        let value = stirling1_poly(2).eval(5);
        assert_eq!(value, BigInt::from(35));
        assert_eq!(value, count_cycle_perms(5, 3).unwrap());
    }

    #[test]
    fn partition_oracle_agrees_with_triangle() {
        for n in 0..=8u64 {
            for k in 0..=n {
                assert_eq!(
                    count_set_partitions(n, k).unwrap(),
                    stirling2(n, k as i64),
                    "({n}, {k})"
                );
            }
        }
        assert_eq!(count_set_partitions(5, 7).unwrap(), BigInt::zero());
        assert_eq!(count_set_partitions(0, 0).unwrap(), BigInt::one());
    }

    #[test]
    fn cycle_oracle_agrees_with_triangle() {
        for n in 0..=7u64 {
            for k in 0..=n {
                assert_eq!(
                    count_cycle_perms(n, k).unwrap(),
                    stirling1(n, k as i64),
                    "({n}, {k})"
                );
            }
        }
        assert_eq!(count_cycle_perms(0, 0).unwrap(), BigInt::one());
        assert_eq!(count_cycle_perms(4, 0).unwrap(), BigInt::zero());
        assert_eq!(count_cycle_perms(4, 1).unwrap(), BigInt::from(6));
    }

    #[test]
    fn oracles_refuse_large_inputs() {
        assert!(matches!(
            count_set_partitions(13, 2),
            Err(Error::OracleScale { n: 13, limit: 12 })
        ));
        assert!(matches!(
            count_cycle_perms(10, 1),
            Err(Error::OracleScale { n: 10, limit: 9 })
        ));
    }
}
