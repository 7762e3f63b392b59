use alloc::vec::Vec;

use crate::modp::gcd;
use crate::{Error, Result};

/// A multiset of points in `[0,1)^s` whose coordinates are all multiples of
/// `1/denominator`. Only the integer numerators are stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointSet {
    denominator: u64,
    dim: usize,
    numerators: Vec<u64>,
}

impl PointSet {
    /// `numerators` is row-major: point `k` occupies `[k*dim, (k+1)*dim)`.
    pub fn new(denominator: u64, dim: usize, numerators: Vec<u64>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        if denominator == 0 {
            return Err(Error::BadModulus(0));
        }
        if !numerators.len().is_multiple_of(dim) {
            return Err(Error::DimensionMismatch { expected: dim, found: numerators.len() % dim });
        }
        if let Some(&bad) = numerators.iter().find(|&&x| x >= denominator) {
            return Err(Error::CoordinateOutOfRange { numerator: bad, denominator });
        }
        Ok(PointSet { denominator, dim, numerators })
    }

    /// Points given as fractions `(numerator, denominator)`, row-major,
    /// brought to the least common denominator.
    pub fn from_fractions(dim: usize, coords: &[(u64, u64)]) -> Result<Self> {
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        let mut den = 1u64;
        for &(n, d) in coords {
            if d == 0 {
                return Err(Error::BadModulus(0));
            }
            if n >= d {
                return Err(Error::CoordinateOutOfRange { numerator: n, denominator: d });
            }
            den = (den / gcd(den, d)).checked_mul(d).ok_or(Error::Overflow)?;
        }
        let numerators = coords.iter().map(|&(n, d)| n * (den / d)).collect();
        PointSet::new(den, dim, numerators)
    }

    pub fn denominator(&self) -> u64 {
        self.denominator
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.numerators.len() / self.dim
    }

    pub fn is_empty(&self) -> bool {
        self.numerators.is_empty()
    }

    pub fn point(&self, k: usize) -> &[u64] {
        &self.numerators[k * self.dim..(k + 1) * self.dim]
    }

    pub fn iter(&self) -> impl Iterator<Item = &[u64]> + '_ {
        self.numerators.chunks_exact(self.dim)
    }

    /// Same points with coordinates reordered: new axis `i` is old axis `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: perm.len() });
        }
        let numerators = self.iter().flat_map(|pt| perm.iter().map(move |&j| pt[j])).collect();
        PointSet::new(self.denominator, self.dim, numerators)
    }

    /// Points sorted lexicographically, for multiset comparison.
    pub fn sorted_points(&self) -> Vec<Vec<u64>> {
        let mut pts: Vec<Vec<u64>> = self.iter().map(|p| p.to_vec()).collect();
        pts.sort_unstable();
        pts
    }
}
