//! Continued fractions `x/N = [0; b_1, ..., b_l]` and searches for residues
//! with small partial-quotient sums.

use alloc::vec::Vec;

use crate::modp::{gcd, ResidueSet};
use crate::{Error, Result};

/// Expansion of `x/N` with `1 <= x < N`.
///
/// Quotients are stored in canonical form: when `l >= 2` the last quotient
/// is at least 2. If `gcd(x, N) > 1` the fraction is reduced first and the
/// common factor is kept in `reduced_by`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContinuedFraction {
    numerator: u64,
    denominator: u64,
    reduced_by: u64,
    quotients: Vec<u64>,
    sum: u64,
}

impl ContinuedFraction {
    pub fn expand(x: u64, n: u64) -> Result<Self> {
        if n < 2 {
            return Err(Error::BadModulus(n));
        }
        if x == 0 || x >= n {
            return Err(Error::OutOfRange { x, limit: n - 1 });
        }
        let g = gcd(x, n);
        let (mut num, mut den) = (x / g, n / g);
        let mut quotients = Vec::new();
        // den/num repeatedly; the Euclidean remainder sequence ends at 1,
        // so the last quotient is >= 2 unless it is the only one.
        while num != 0 {
            quotients.push(den / num);
            (den, num) = (num, den % num);
        }
        let sum = quotients.iter().sum();
        Ok(ContinuedFraction { numerator: x, denominator: n, reduced_by: g, quotients, sum })
    }

    pub fn numerator(&self) -> u64 {
        self.numerator
    }

    pub fn denominator(&self) -> u64 {
        self.denominator
    }

    /// `gcd(x, N)`; 1 when the input was already reduced.
    pub fn reduced_by(&self) -> u64 {
        self.reduced_by
    }

    pub fn quotients(&self) -> &[u64] {
        &self.quotients
    }

    pub fn len(&self) -> usize {
        self.quotients.len()
    }

    pub fn is_empty(&self) -> bool {
        self.quotients.is_empty()
    }

    /// `b_1 + ... + b_l`.
    pub fn quotient_sum(&self) -> u64 {
        self.sum
    }

    /// Folds the quotients back into a reduced fraction `(p, q)`.
    pub fn evaluate(&self) -> (u64, u64) {
        // [0; b_1..b_l] = 1 / (b_1 + 1/(b_2 + ...)), folded from the tail.
        let (mut num, mut den) = (0u64, 1u64);
        for &b in self.quotients.iter().rev() {
            // b + num/den = (b*den + num)/den, then invert
            (num, den) = (den, b * den + num);
        }
        (num, den)
    }

    /// `sum_b + l + 1`, a constant-free surrogate for the two-dimensional
    /// discrepancy of `K(1, x)`.
    pub fn discrepancy_proxy(&self) -> u64 {
        self.sum + self.quotients.len() as u64 + 1
    }
}

impl core::fmt::Display for ContinuedFraction {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str("[0;")?;
        for (i, b) in self.quotients.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{b}")?;
        }
        f.write_str("]")
    }
}

/// Best `g` coprime to `N` by partial-quotient sum; ties go to the smaller `g`.
pub fn larcher_search(n: u64) -> Result<(u64, u64)> {
    if n < 2 {
        return Err(Error::BadModulus(n));
    }
    let mut best = (0, u64::MAX);
    for g in (1..n).filter(|&g| gcd(g, n) == 1) {
        let sum = ContinuedFraction::expand(g, n)?.quotient_sum();
        if sum < best.1 {
            best = (g, sum);
        }
    }
    Ok(best)
}

#[derive(Debug, Clone, PartialEq)]
pub struct CfSearchResult {
    pub element: u64,
    pub quotient_sum: u64,
    /// `500 ln p ln ln p`, reported for comparison only.
    pub reference: f64,
}

/// Element `a` of the set minimizing the partial-quotient sum of `a/p`.
pub fn subgroup_cf_search<R: ResidueSet + ?Sized>(set: &R) -> Result<CfSearchResult> {
    let p = set.modulus().get();
    let mut best = (0, u64::MAX);
    for &a in set.elements() {
        let sum = ContinuedFraction::expand(a, p)?.quotient_sum();
        if sum < best.1 || (sum == best.1 && a < best.0) {
            best = (a, sum);
        }
    }
    let lp = libm::log(p as f64);
    Ok(CfSearchResult { element: best.0, quotient_sum: best.1, reference: 500.0 * lp * libm::log(lp) })
}
