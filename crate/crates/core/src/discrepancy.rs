//! Exact unnormalized star discrepancy
//!
//! ```text
//! D = sup_{gamma in [0,1]^s} | #{x : x in [0,gamma)} - N * vol([0,gamma)) |
//! ```
//!
//! This is `N` times the usual `D*`; nothing here divides by `N`.
//!
//! On each axis the supremum is reached at a critical value: the excess of
//! volume over count peaks at a point coordinate or at 1 with the open box,
//! and the excess of count over volume is approached from above at a point
//! coordinate, i.e. by the closed box `[0, gamma]`. Both are evaluated at every
//! corner of the critical grid with cumulative counts, in integer arithmetic
//! over the common denominator `den^s`.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::lattice::{korobov_points, GeneratingVector};
use crate::pointset::PointSet;
use crate::{Budget, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum BoxMode {
    /// `[0, gamma)`: the volume exceeds the count.
    Open,
    /// Limit of `[0, gamma + eps)`: the count exceeds the volume.
    Closed,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiscrepancyResult {
    numerator: u128,
    scale: u128,
    /// Corner numerators over `denominator`; `denominator` itself means 1.
    pub witness: Vec<u64>,
    pub denominator: u64,
    pub witness_count: u64,
    pub mode: BoxMode,
    pub points: u64,
}

impl DiscrepancyResult {
    pub fn value(&self) -> BigRational {
        BigRational::new(BigInt::from(self.numerator), BigInt::from(self.scale))
    }

    pub fn to_f64(&self) -> f64 {
        self.numerator as f64 / self.scale as f64
    }
}

fn odometer_next(idx: &mut [usize], extent: &[usize]) -> bool {
    for i in (0..idx.len()).rev() {
        idx[i] += 1;
        if idx[i] < extent[i] {
            return true;
        }
        idx[i] = 0;
    }
    false
}

pub fn exact_star_discrepancy(points: &PointSet, budget: &Budget) -> Result<DiscrepancyResult> {
    let n = points.len();
    if n == 0 {
        return Err(Error::EmptyInput);
    }
    let dim = points.dim();
    let den = points.denominator();

    let grids: Vec<Vec<u64>> = (0..dim)
        .map(|i| {
            let mut g: Vec<u64> = points.iter().map(|p| p[i]).collect();
            g.sort_unstable();
            g.dedup();
            g
        })
        .collect();
    let sizes: Vec<usize> = grids.iter().map(Vec::len).collect();
    let cells = sizes.iter().try_fold(1u128, |acc, &k| acc.checked_mul(k as u128)).ok_or(Error::Overflow)?;
    Budget::check(cells.saturating_mul(n as u128), budget.discrepancy)?;

    let scale = (0..dim).try_fold(1u128, |acc, _| acc.checked_mul(den as u128)).ok_or(Error::Overflow)?;
    let n128 = n as u128;
    n128.checked_mul(scale).ok_or(Error::Overflow)?;

    // closed[j] = #{x : x_i <= grid_i[j_i] for all i}
    let mut strides = alloc::vec![1usize; dim];
    for i in (0..dim.saturating_sub(1)).rev() {
        strides[i] = strides[i + 1] * sizes[i + 1];
    }
    let mut closed = alloc::vec![0u64; cells as usize];
    for p in points.iter() {
        let offset: usize = (0..dim).map(|i| grids[i].binary_search(&p[i]).unwrap() * strides[i]).sum();
        closed[offset] += 1;
    }
    for axis in 0..dim {
        let stride = strides[axis];
        for offset in 0..closed.len() {
            if !(offset / stride).is_multiple_of(sizes[axis]) {
                closed[offset] += closed[offset - stride];
            }
        }
    }

    let extent: Vec<usize> = sizes.iter().map(|k| k + 1).collect();
    let mut idx = alloc::vec![0usize; dim];
    let mut best: Option<(u128, Vec<usize>, u64, BoxMode)> = None;
    let mut consider = |dev: u128, idx: &[usize], count: u64, mode: BoxMode| {
        if best.as_ref().is_none_or(|b| dev > b.0) {
            best = Some((dev, idx.to_vec(), count, mode));
        }
    };
    loop {
        let mut vol = 1u128;
        let mut open_offset = Some(0usize);
        let mut closed_offset = Some(0usize);
        for i in 0..dim {
            let j = idx[i];
            vol *= if j < sizes[i] { grids[i][j] } else { den } as u128;
            open_offset = match (open_offset, j) {
                (Some(o), j) if j > 0 => Some(o + (j - 1) * strides[i]),
                _ => None,
            };
            closed_offset = match closed_offset {
                Some(o) if j < sizes[i] => Some(o + j * strides[i]),
                _ => None,
            };
        }
        let expected = n128 * vol;
        let open_count = open_offset.map_or(0, |o| closed[o]);
        let open_mass = open_count as u128 * scale;
        if expected >= open_mass {
            consider(expected - open_mass, &idx, open_count, BoxMode::Open);
        }
        if let Some(o) = closed_offset {
            let mass = closed[o] as u128 * scale;
            if mass >= expected {
                consider(mass - expected, &idx, closed[o], BoxMode::Closed);
            }
        }
        if !odometer_next(&mut idx, &extent) {
            break;
        }
    }

    let (numerator, corner, witness_count, mode) = best.expect("at least one corner");
    let witness = corner.iter().enumerate().map(|(i, &j)| if j < sizes[i] { grids[i][j] } else { den }).collect();
    Ok(DiscrepancyResult { numerator, scale, witness, denominator: den, witness_count, mode, points: n as u64 })
}

/// Exact discrepancy of `K(a)`; refused when `N^(s+1)` exceeds the budget.
pub fn discrepancy_of_korobov(a: &GeneratingVector, budget: &Budget) -> Result<DiscrepancyResult> {
    let n = a.modulus() as u128;
    let work = (0..a.dim()).try_fold(n, |acc, _| acc.checked_mul(n)).unwrap_or(u128::MAX);
    Budget::check(work, budget.discrepancy)?;
    exact_star_discrepancy(&korobov_points(a), budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn disc(den: u64, dim: usize, coords: &[u64]) -> DiscrepancyResult {
        exact_star_discrepancy(&PointSet::new(den, dim, coords.to_vec()).unwrap(), &Budget::DEFAULT).unwrap()
    }

    #[test]
    fn single_origin_point() {
        let d = disc(1, 1, &[0]);
        assert_eq!(d.value(), ratio(1, 1));
        assert_eq!(d.mode, BoxMode::Closed);
        assert_eq!(d.witness, [0]);
    }

    #[test]
    fn uniform_line() {
        assert_eq!(disc(4, 1, &[0, 1, 2, 3]).value(), ratio(1, 1));
    }

    #[test]
    fn two_point_diagonal() {
        // [0, 1/2 + eps)^2 holds both points at volume ~1/4: 2 - 2/4
        let d = disc(2, 2, &[1, 1, 0, 0]);
        assert_eq!(d.value(), ratio(3, 2));
        assert_eq!((d.mode, d.witness.clone(), d.witness_count), (BoxMode::Closed, vec![1, 1], 2));
    }

    #[test]
    fn korobov_values() {
        let b = Budget::DEFAULT;
        let d = |n, a: &[u64]| discrepancy_of_korobov(&GeneratingVector::new(n, a.to_vec()).unwrap(), &b).unwrap();
        assert_eq!(d(10, &[1]).value(), ratio(1, 1));
        assert_eq!(d(2, &[1, 1]).value(), ratio(3, 2));
        assert_eq!(d(3, &[0, 0]).value(), ratio(3, 1));
    }

    #[test]
    fn open_box_witness() {
        // one point at 1/2: [0,1/2) is empty with volume 1/2
        let d = disc(2, 1, &[1]);
        assert_eq!(d.value(), ratio(1, 2));
        assert_eq!((d.mode, d.witness.clone()), (BoxMode::Open, vec![1]));
    }

    #[test]
    fn errors() {
        let empty = PointSet::new(3, 2, vec![]).unwrap();
        assert_eq!(exact_star_discrepancy(&empty, &Budget::DEFAULT), Err(Error::EmptyInput));
        let a = GeneratingVector::new(1000, vec![1, 3, 7]).unwrap();
        assert!(matches!(discrepancy_of_korobov(&a, &Budget::DEFAULT), Err(Error::BudgetExceeded { .. })));
    }
}
