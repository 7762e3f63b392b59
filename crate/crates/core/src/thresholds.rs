//! Dimension thresholds for subgroups of size `#G >= p^delta`.
//!
//! ```text
//! alpha_m = 2^(m-1) / (2^(m+1) - m - 2)
//! beta_m  = 2^m / (2^(m+2) - m - 4)
//! n_delta = max(3, ceil(81/delta + 1/ln 2 - 160))
//!
//! s'(delta)  = ceil(2m^2 (delta-1) / (4 delta (2^-m - 1) + 1)) + 2        if beta_m <= delta < alpha_m
//!            = ceil(2m (delta-1)(m+1) / (delta (3 2^-m - 4) + 1)) + 2     if alpha_{m+1} <= delta < beta_m
//! s''(delta) = floor((1-delta) 2^n_delta / ((delta (160+n_delta)/81 - 1) * 0.45)) + 3
//! s_min      = max(3, min(s', s''))
//! ```
//!
//! The intervals `[beta_m, alpha_m)` and `[alpha_{m+1}, beta_m)` tile
//! `(1/4, 1)`; both sequences decrease to `1/4`, so `s'` is undefined for
//! `delta <= 1/4` and `s_min` is then `s''` alone.
//!
//! All arithmetic is exact. The only transcendental, `1/ln 2`, is enclosed
//! in a rational interval that is narrowed until the ceiling is decided.

use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::rational::ratio;
use crate::{Error, Result};

/// Largest `n_delta` for which `s''` is evaluated; above it `2^n_delta` is
/// not materialized.
pub const N_DELTA_LIMIT: u64 = 1_000_000;

fn big(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

fn pow2(e: u32) -> BigInt {
    BigInt::one() << e
}

pub fn alpha(m: u32) -> BigRational {
    assert!(m >= 1);
    BigRational::new(pow2(m - 1), pow2(m + 1) - BigInt::from(m) - 2)
}

pub fn beta(m: u32) -> BigRational {
    assert!(m >= 1);
    BigRational::new(pow2(m), pow2(m + 2) - BigInt::from(m) - 4)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Branch {
    /// `beta_m <= delta < alpha_m`
    Case1,
    /// `alpha_{m+1} <= delta < beta_m`
    Case2,
}

impl core::fmt::Display for Branch {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(match self {
            Branch::Case1 => "CASE1",
            Branch::Case2 => "CASE2",
        })
    }
}

fn check_domain(delta: &BigRational) -> Result<()> {
    if delta.is_positive() && delta < &big(1) {
        Ok(())
    } else {
        Err(Error::OutOfDomain)
    }
}

/// Walks `alpha_1 > beta_1 > alpha_2 > beta_2 > ...` down to `delta`.
pub fn find_branch(delta: &BigRational) -> Result<(u32, Branch)> {
    check_domain(delta)?;
    if delta <= &ratio(1, 4) {
        return Err(Error::NoBranch);
    }
    let mut m = 1;
    loop {
        if delta >= &beta(m) {
            return Ok((m, Branch::Case1));
        }
        if delta >= &alpha(m + 1) {
            return Ok((m, Branch::Case2));
        }
        m += 1;
    }
}

/// Branch for a subgroup of order `d` in `Z_p*`, i.e. for `delta = ln d / ln p`,
/// decided without rounding `delta`.
pub fn find_branch_for_size(p: u64, d: u64) -> Result<(u32, Branch)> {
    use crate::modp::at_least_power;
    if d <= 1 || d >= p {
        return Err(Error::OutOfDomain);
    }
    if !at_least_power(d, p, &ratio(1, 4)) {
        return Err(Error::NoBranch);
    }
    let mut m = 1;
    loop {
        if at_least_power(d, p, &beta(m)) {
            return Ok((m, Branch::Case1));
        }
        if at_least_power(d, p, &alpha(m + 1)) {
            return Ok((m, Branch::Case2));
        }
        m += 1;
    }
}

/// `ln 2` lies in `[sum, sum + tail]` after `terms` terms of `sum 1/(k 2^k)`.
fn ln2_bounds(terms: u32) -> (BigRational, BigRational) {
    let mut sum = BigRational::zero();
    for k in 1..=terms {
        sum += BigRational::new(BigInt::one(), BigInt::from(k) * pow2(k));
    }
    let tail = BigRational::new(BigInt::one(), BigInt::from(terms + 1) * pow2(terms));
    let upper = &sum + tail;
    (sum, upper)
}

pub fn n_delta(delta: &BigRational) -> Result<u64> {
    check_domain(delta)?;
    let base = big(81) / delta - big(160);
    let mut terms = 32;
    loop {
        let (lo, hi) = ln2_bounds(terms);
        let inv_lo = hi.recip();
        let inv_hi = lo.recip();
        let c_lo = (&base + inv_lo).ceil();
        let c_hi = (&base + inv_hi).ceil();
        if c_lo == c_hi {
            let n = c_lo.to_integer();
            return Ok(if n < BigInt::from(3) { 3 } else { n.to_u64().unwrap_or(u64::MAX) });
        }
        terms *= 2;
    }
}

pub fn s_prime(delta: &BigRational) -> Result<u64> {
    let (m, branch) = find_branch(delta)?;
    let mi = big(m as i64);
    let inv2m = BigRational::new(BigInt::one(), pow2(m));
    let one = big(1);
    let (num, den) = match branch {
        Branch::Case1 => (big(2) * &mi * &mi * (delta - &one), big(4) * delta * (&inv2m - &one) + &one),
        Branch::Case2 => (big(2) * &mi * (delta - &one) * (&mi + &one), delta * (big(3) * &inv2m - big(4)) + &one),
    };
    let q: BigInt = (num / den).ceil().to_integer() + 2;
    Ok(q.to_u64().expect("s' is a small positive integer on (1/4, 1)"))
}

/// A dimension that may be astronomically large or not evaluated at all.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DimensionBound {
    Finite(BigUint),
    /// `n_delta` above [`N_DELTA_LIMIT`]; compares above every finite value.
    Overflow,
}

impl DimensionBound {
    pub fn as_u64(&self) -> Option<u64> {
        match self {
            DimensionBound::Finite(v) => v.to_u64(),
            DimensionBound::Overflow => None,
        }
    }

    fn min_with(self, other: u64) -> DimensionBound {
        match &self {
            DimensionBound::Finite(v) if v <= &BigUint::from(other) => self,
            _ => DimensionBound::Finite(BigUint::from(other)),
        }
    }
}

impl core::fmt::Display for DimensionBound {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            DimensionBound::Finite(v) => write!(f, "{v}"),
            DimensionBound::Overflow => f.write_str("OVERFLOW"),
        }
    }
}

pub fn s_double_prime(delta: &BigRational) -> Result<DimensionBound> {
    let n = n_delta(delta)?;
    if n > N_DELTA_LIMIT {
        return Ok(DimensionBound::Overflow);
    }
    let one = big(1);
    let num = (&one - delta) * BigRational::from_integer(pow2(n as u32));
    let den = (delta * BigRational::new(BigInt::from(160 + n), BigInt::from(81)) - &one) * ratio(9, 20);
    debug_assert!(den.is_positive());
    let q: BigInt = (num / den).floor().to_integer() + 3;
    Ok(DimensionBound::Finite(q.to_biguint().expect("positive")))
}

#[derive(Debug, Clone, PartialEq)]
pub struct BranchInfo {
    pub m: u32,
    pub branch: Branch,
    pub alpha_m: BigRational,
    pub beta_m: BigRational,
    pub alpha_next: BigRational,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ThresholdProfile {
    pub delta: BigRational,
    /// `None` for `delta <= 1/4`.
    pub branch: Option<BranchInfo>,
    pub n_delta: u64,
    pub s_prime: Option<u64>,
    pub s_double_prime: DimensionBound,
    pub s_min: DimensionBound,
}

pub fn s_min(delta: &BigRational) -> Result<ThresholdProfile> {
    check_domain(delta)?;
    let branch = match find_branch(delta) {
        Ok((m, branch)) => Some(BranchInfo { m, branch, alpha_m: alpha(m), beta_m: beta(m), alpha_next: alpha(m + 1) }),
        Err(Error::NoBranch) => None,
        Err(e) => return Err(e),
    };
    let s_prime = match branch {
        Some(_) => Some(s_prime(delta)?),
        None => None,
    };
    let s_double_prime = s_double_prime(delta)?;
    let mut s_min = match s_prime {
        Some(sp) => s_double_prime.clone().min_with(sp),
        None => s_double_prime.clone(),
    };
    if let DimensionBound::Finite(v) = &s_min {
        if v < &BigUint::from(3u32) {
            s_min = DimensionBound::Finite(BigUint::from(3u32));
        }
    }
    Ok(ThresholdProfile { delta: delta.clone(), branch, n_delta: n_delta(delta)?, s_prime, s_double_prime, s_min })
}

/// One row of the small-`m` table: `s` for `delta in [left, right)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReferenceRow {
    pub left: (i64, i64),
    pub right: (i64, i64),
    pub s: u64,
}

const fn row(left: (i64, i64), right: (i64, i64), s: u64) -> ReferenceRow {
    ReferenceRow { left, right, s }
}

/// Published values of the minimal dimension on eighteen intervals.
pub const REFERENCE_TABLE: [ReferenceRow; 18] = [
    row((3, 4), (1, 1), 3),
    row((2, 3), (3, 4), 4),
    row((14, 23), (2, 3), 5),
    row((4, 7), (14, 23), 6),
    row((6, 11), (4, 7), 7),
    row((10, 19), (6, 11), 8),
    row((22, 43), (10, 19), 9),
    row((1, 2), (22, 43), 10),
    row((17, 35), (1, 2), 11),
    row((9, 19), (17, 35), 12),
    row((19, 41), (9, 19), 13),
    row((5, 11), (19, 41), 14),
    row((21, 47), (5, 11), 15),
    row((11, 25), (21, 47), 16),
    row((23, 53), (11, 25), 17),
    row((3, 7), (23, 53), 18),
    row((25, 59), (3, 7), 19),
    row((13, 31), (25, 59), 20),
];

#[derive(Debug, Clone, PartialEq)]
pub struct TableRow {
    pub left: BigRational,
    pub right: BigRational,
    pub s_at_left: DimensionBound,
    pub s_at_midpoint: DimensionBound,
    pub expected: u64,
}

impl TableRow {
    pub fn passes(&self) -> bool {
        self.s_at_left.as_u64() == Some(self.expected) && self.s_at_midpoint.as_u64() == Some(self.expected)
    }
}

/// Recomputes `s_min` at the left endpoint and midpoint of every reference row.
pub fn evaluate_table() -> Result<Vec<TableRow>> {
    REFERENCE_TABLE
        .iter()
        .map(|r| {
            let left = ratio(r.left.0, r.left.1);
            let right = ratio(r.right.0, r.right.1);
            let mid = (&left + &right) / big(2);
            Ok(TableRow {
                s_at_left: s_min(&left)?.s_min,
                s_at_midpoint: s_min(&mid)?.s_min,
                left,
                right,
                expected: r.s,
            })
        })
        .collect()
}

/// [`evaluate_table`], failing on the first row that disagrees with the reference.
pub fn corollary_table() -> Result<Vec<TableRow>> {
    let rows = evaluate_table()?;
    if let Some(i) = rows.iter().position(|r| !r.passes()) {
        return Err(Error::TableMismatch { row: i });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alpha_beta_values() {
        assert_eq!((alpha(1), beta(1)), (ratio(1, 1), ratio(2, 3)));
        assert_eq!((alpha(2), beta(2)), (ratio(1, 2), ratio(2, 5)));
        assert_eq!((alpha(3), beta(3)), (ratio(4, 11), ratio(8, 25)));
    }

    #[test]
    fn branches() {
        assert_eq!(find_branch(&ratio(3, 4)).unwrap(), (1, Branch::Case1));
        assert_eq!(find_branch(&ratio(1, 2)).unwrap(), (1, Branch::Case2));
        assert_eq!(find_branch(&ratio(2, 5)).unwrap(), (2, Branch::Case1));
        assert_eq!(find_branch(&ratio(1, 1)), Err(Error::OutOfDomain));
        assert_eq!(find_branch(&ratio(0, 1)), Err(Error::OutOfDomain));
        assert_eq!(find_branch(&ratio(1, 4)), Err(Error::NoBranch));
        assert_eq!(find_branch(&ratio(1, 5)), Err(Error::NoBranch));
    }

    #[test]
    fn n_delta_values() {
        assert_eq!(n_delta(&ratio(9, 10)).unwrap(), 3);
        assert_eq!(n_delta(&ratio(1, 2)).unwrap(), 4);
        assert_eq!(n_delta(&ratio(13, 31)).unwrap(), 35);
    }

    #[test]
    fn s_prime_values() {
        assert_eq!(s_prime(&ratio(3, 4)).unwrap(), 3);
        assert_eq!(s_prime(&ratio(14, 23)).unwrap(), 5);
        assert_eq!(s_prime(&ratio(1, 2)).unwrap(), 10);
    }

    #[test]
    fn s_double_prime_values() {
        assert_eq!(s_double_prime(&ratio(3, 4)).unwrap().as_u64(), Some(11));
        assert_eq!(s_double_prime(&ratio(9, 10)).unwrap().as_u64(), Some(5));
        let big = s_double_prime(&ratio(13, 31)).unwrap().as_u64().unwrap();
        assert!(big > 1_000_000_000);
        assert_eq!(s_double_prime(&ratio(1, 100_000)).unwrap(), DimensionBound::Overflow);
    }

    #[test]
    fn s_min_values() {
        assert_eq!(s_min(&ratio(3, 4)).unwrap().s_min.as_u64(), Some(3));
        assert_eq!(s_min(&ratio(22, 43)).unwrap().s_min.as_u64(), Some(9));
        assert_eq!(s_min(&ratio(13, 31)).unwrap().s_min.as_u64(), Some(20));
        // below 1/4 only s'' is available
        let low = s_min(&ratio(1, 5)).unwrap();
        assert!(low.branch.is_none() && low.s_prime.is_none());
        assert_eq!(low.s_min, low.s_double_prime);
        assert_eq!(s_min(&ratio(1, 1_000_000)).unwrap().s_min, DimensionBound::Overflow);
    }

    #[test]
    fn reference_table_rows() {
        let rows = corollary_table().unwrap();
        assert_eq!(rows.len(), 18);
        assert_eq!((rows[1].left.clone(), rows[1].expected), (ratio(2, 3), 4));
        assert_eq!((rows[15].left.clone(), rows[15].expected), (ratio(3, 7), 18));
        assert_eq!((rows[8].left.clone(), rows[8].expected), (ratio(17, 35), 11));
    }

    #[test]
    fn subgroup_branch_is_exact() {
        // ln 10 / ln 101 = 0.4989.. and ln 2 / ln 5 = 0.4307.. both sit in [beta_2, alpha_2)
        assert_eq!(find_branch_for_size(101, 10).unwrap(), (2, Branch::Case1));
        assert_eq!(find_branch_for_size(5, 2).unwrap(), (2, Branch::Case1));
        // 25 >= 101^(2/3) = 21.7..
        assert_eq!(find_branch_for_size(101, 25).unwrap(), (1, Branch::Case1));
        assert_eq!(find_branch_for_size(101, 2), Err(Error::NoBranch));
        assert_eq!(find_branch_for_size(101, 100).unwrap(), (1, Branch::Case1));
        assert_eq!(find_branch_for_size(101, 1), Err(Error::OutOfDomain));
    }
}
