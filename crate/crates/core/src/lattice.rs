//! Korobov point sets and the congruence lattice
//! `Gamma_N(a) = { m in Z^s : a_1 m_1 + ... + a_s m_s = 0 (mod N) }`.
//!
//! Relative minima are enumerated exactly. Every relative minimum `m`
//! satisfies `H(m) <= [Z^s : Gamma_N(a)] <= N`: the open box with half-sides
//! `max(1, |m_i|)` holds no nonzero lattice vector (any such vector would
//! dominate `m`), so Minkowski's theorem bounds its volume `2^s H(m)` by
//! `2^s` times the index. In particular `|m_i| <= N`. The enumeration
//! therefore walks the hyperbolic region `H <= index` only, solving the
//! congruence for one pivot coordinate.

use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::modp::{gcd, inv_mod, mul_mod};
use crate::pointset::PointSet;
use crate::{Error, Result};

/// `a = (a_1, ..., a_s)` with modulus `N`; components are reduced into `[0, N)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GeneratingVector {
    modulus: u64,
    components: Vec<u64>,
}

impl GeneratingVector {
    pub fn new(modulus: u64, components: impl Into<Vec<u64>>) -> Result<Self> {
        if modulus < 2 {
            return Err(Error::BadModulus(modulus));
        }
        let mut components = components.into();
        if components.is_empty() {
            return Err(Error::ZeroDimension);
        }
        for c in &mut components {
            *c %= modulus;
        }
        Ok(GeneratingVector { modulus, components })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn dim(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[u64] {
        &self.components
    }

    /// All components are `0 mod N`; the lattice is then all of `Z^s`.
    pub fn is_degenerate(&self) -> bool {
        self.components.iter().all(|&c| c == 0)
    }

    /// `[Z^s : Gamma_N(a)] = N / gcd(N, a_1, ..., a_s)`.
    pub fn lattice_index(&self) -> u64 {
        self.modulus / self.components.iter().fold(self.modulus, |g, &c| gcd(g, c))
    }

    /// `lambda . a`, componentwise mod `N`.
    pub fn scaled(&self, lambda: u64) -> Self {
        let n = self.modulus;
        let components = self.components.iter().map(|&c| mul_mod(c, lambda % n, n)).collect();
        GeneratingVector { modulus: n, components }
    }

    /// New component `i` is old component `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: perm.len() });
        }
        let components = perm.iter().map(|&j| self.components[j]).collect();
        Ok(GeneratingVector { modulus: self.modulus, components })
    }
}

impl core::fmt::Display for GeneratingVector {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// `H(m) = prod max(1, |m_i|)`, saturating at `u128::MAX`.
pub fn height(m: &[i64]) -> u128 {
    m.iter().fold(1u128, |h, &x| h.saturating_mul(x.unsigned_abs().max(1) as u128))
}

pub fn lattice_contains(a: &GeneratingVector, m: &[i64]) -> Result<bool> {
    if m.len() != a.dim() {
        return Err(Error::DimensionMismatch { expected: a.dim(), found: m.len() });
    }
    let n = a.modulus as i128;
    let dot = a.components.iter().zip(m).fold(0i128, |acc, (&c, &x)| (acc + c as i128 * x as i128).rem_euclid(n));
    Ok(dot == 0)
}

/// The `N` points `({a_1 k/N}, ..., {a_s k/N})`, `k = 1..N`, as numerators over `N`.
pub fn korobov_points(a: &GeneratingVector) -> PointSet {
    let n = a.modulus;
    let mut numerators = Vec::with_capacity(n as usize * a.dim());
    for k in 1..=n {
        numerators.extend(a.components.iter().map(|&c| mul_mod(c, k, n)));
    }
    PointSet::new(n, a.dim(), numerators).expect("residues are below the modulus")
}

/// Flips the sign so that the first nonzero coordinate is positive.
pub fn sign_canonical(m: &mut [i64]) {
    if let Some(&first) = m.iter().find(|&&x| x != 0) {
        if first < 0 {
            m.iter_mut().for_each(|x| *x = -*x);
        }
    }
}

/// `true` if `x` is at most `y` in every absolute coordinate and strictly
/// smaller in at least one.
pub fn strictly_dominates(x: &[i64], y: &[i64]) -> bool {
    let mut strict = false;
    for (a, b) in x.iter().zip(y) {
        match a.unsigned_abs().cmp(&b.unsigned_abs()) {
            Ordering::Greater => return false,
            Ordering::Less => strict = true,
            Ordering::Equal => {}
        }
    }
    strict
}

/// `(x + y) mod n` for `x, y < n`.
#[inline]
fn add_mod(x: u64, y: u64, n: u64) -> u64 {
    let (s, carry) = x.overflowing_add(y);
    if carry || s >= n {
        s.wrapping_sub(n)
    } else {
        s
    }
}

/// Walks one representative of every pair `{m, -m}` of nonzero lattice
/// vectors with `H(m) <= limit`. The visitor may lower `limit`.
struct Walker<'a> {
    a: &'a GeneratingVector,
    pivot: usize,
    rest: Vec<usize>,
    pivot_gcd: u64,
    step: u64,
    pivot_inverse: u64,
    cap: u64,
    visited: u64,
}

impl<'a> Walker<'a> {
    fn new(a: &'a GeneratingVector, cap: u64) -> Self {
        let n = a.modulus;
        // pivot on the coordinate with the fewest solutions per residue class
        let pivot = (0..a.dim()).min_by_key(|&i| (gcd(a.components[i], n), i)).unwrap();
        let pivot_gcd = gcd(a.components[pivot], n);
        let step = n / pivot_gcd;
        let pivot_inverse = inv_mod(a.components[pivot] / pivot_gcd, step).unwrap_or(0);
        let rest = (0..a.dim()).filter(|&i| i != pivot).collect();
        Walker { a, pivot, rest, pivot_gcd, step, pivot_inverse, cap, visited: 0 }
    }

    fn run<F>(&mut self, limit: &mut u64, visit: &mut F) -> Result<()>
    where
        F: FnMut(&[i64], u64, &mut u64),
    {
        let mut m = alloc::vec![0i64; self.a.dim()];
        self.walk(0, 1, 0, false, &mut m, limit, visit)
    }

    #[allow(clippy::too_many_arguments)]
    fn walk<F>(
        &mut self,
        depth: usize,
        h: u64,
        residue: u64,
        nonzero_seen: bool,
        m: &mut [i64],
        limit: &mut u64,
        visit: &mut F,
    ) -> Result<()>
    where
        F: FnMut(&[i64], u64, &mut u64),
    {
        let n = self.a.modulus;
        if depth == self.rest.len() {
            let target = (n - residue) % n;
            if !target.is_multiple_of(self.pivot_gcd) {
                return self.count_visit();
            }
            let r = mul_mod(target / self.pivot_gcd, self.pivot_inverse, self.step);
            return self.pivot_values(h, r, nonzero_seen, m, limit, visit);
        }
        if depth + 1 == self.rest.len() && self.pivot_gcd == 1 {
            return self.last_free(h, residue, nonzero_seen, m, limit, visit);
        }
        let coord = self.rest[depth];
        let c = self.a.components[coord];
        let mut magnitude = 0i64;
        // c * magnitude mod n
        let mut term = 0u64;
        loop {
            let factor = magnitude.max(1) as u64;
            let next_h = match h.checked_mul(factor) {
                Some(v) if v <= *limit => v,
                _ => break,
            };
            if magnitude == 0 {
                m[coord] = 0;
                self.walk(depth + 1, next_h, residue, nonzero_seen, m, limit, visit)?;
            } else {
                m[coord] = magnitude;
                self.walk(depth + 1, next_h, add_mod(residue, term, n), true, m, limit, visit)?;
                if nonzero_seen {
                    m[coord] = -magnitude;
                    self.walk(depth + 1, next_h, add_mod(residue, (n - term) % n, n), true, m, limit, visit)?;
                }
            }
            magnitude += 1;
            term = add_mod(term, c, n);
        }
        m[coord] = 0;
        Ok(())
    }

    fn count_visit(&mut self) -> Result<()> {
        self.visited += 1;
        if self.visited > self.cap {
            return Err(Error::CapExceeded { cap: self.cap });
        }
        Ok(())
    }

    /// Visits `m` with every pivot value `x = r (mod step)` that keeps
    /// `H(m) <= limit`.
    fn pivot_values<F>(
        &mut self,
        h: u64,
        r: u64,
        nonzero_seen: bool,
        m: &mut [i64],
        limit: &mut u64,
        visit: &mut F,
    ) -> Result<()>
    where
        F: FnMut(&[i64], u64, &mut u64),
    {
        self.count_visit()?;
        let step = self.step as i64;
        let bound = (*limit / h) as i64;
        let mut x = r as i64;
        while x - step >= -bound {
            x -= step;
        }
        while x <= bound {
            // with an all-zero remainder only the positive pivot value is canonical
            if nonzero_seen || x > 0 {
                let full = h * x.unsigned_abs().max(1);
                if full <= *limit {
                    m[self.pivot] = x;
                    let mut canon = m.to_vec();
                    sign_canonical(&mut canon);
                    visit(&canon, full, limit);
                }
            }
            x += step;
        }
        m[self.pivot] = 0;
        Ok(())
    }

    /// The last free coordinate when the pivot is invertible: the pivot
    /// residue moves by a fixed amount per unit step, so no division is needed.
    fn last_free<F>(
        &mut self,
        h: u64,
        residue: u64,
        nonzero_seen: bool,
        m: &mut [i64],
        limit: &mut u64,
        visit: &mut F,
    ) -> Result<()>
    where
        F: FnMut(&[i64], u64, &mut u64),
    {
        let n = self.a.modulus;
        let coord = *self.rest.last().expect("at least one free coordinate");
        let shift_step = mul_mod(self.a.components[coord], self.pivot_inverse, n);
        let r0 = mul_mod((n - residue) % n, self.pivot_inverse, n);
        let mut magnitude = 0u64;
        // shift_step * magnitude mod n
        let mut shift = 0u64;
        loop {
            let next_h = match h.checked_mul(magnitude.max(1)) {
                Some(v) if v <= *limit => v,
                _ => break,
            };
            if magnitude == 0 {
                m[coord] = 0;
                self.pivot_values(next_h, r0, nonzero_seen, m, limit, visit)?;
            } else {
                m[coord] = magnitude as i64;
                self.pivot_values(next_h, add_mod(r0, (n - shift) % n, n), true, m, limit, visit)?;
                if nonzero_seen {
                    m[coord] = -(magnitude as i64);
                    self.pivot_values(next_h, add_mod(r0, shift, n), true, m, limit, visit)?;
                }
            }
            magnitude += 1;
            shift = add_mod(shift, shift_step, n);
        }
        m[coord] = 0;
        Ok(())
    }
}

/// Smallest height of a nonzero vector of `Gamma_N(a)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QMin {
    pub value: u64,
    /// Sign-canonical; lexicographically smallest among vectors of height `value`.
    pub witness: Vec<i64>,
    /// Set for an all-zero generator, where every vector is in the lattice.
    pub degenerate: bool,
}

pub fn q_min(a: &GeneratingVector, cap: u64) -> Result<QMin> {
    let mut limit = a.lattice_index();
    let mut best: Option<(u64, Vec<i64>)> = None;
    Walker::new(a, cap).run(&mut limit, &mut |m, h, limit| {
        let better = match &best {
            None => true,
            Some((bh, bm)) => h < *bh || (h == *bh && m < &bm[..]),
        };
        if better {
            best = Some((h, m.to_vec()));
            *limit = h;
        }
    })?;
    let (value, witness) = best.expect("the index times a unit vector lies in the lattice");
    Ok(QMin { value, witness, degenerate: a.is_degenerate() })
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Minimum {
    pub height: u64,
    pub vector: Vec<i64>,
}

/// Sign-canonical relative minima of `Gamma_N(a)`, ordered by height and
/// then lexicographically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelativeMinima {
    generator: GeneratingVector,
    minima: Vec<Minimum>,
}

impl RelativeMinima {
    pub fn generator(&self) -> &GeneratingVector {
        &self.generator
    }

    pub fn minima(&self) -> &[Minimum] {
        &self.minima
    }

    pub fn vectors(&self) -> impl Iterator<Item = &[i64]> + '_ {
        self.minima.iter().map(|m| &m.vector[..])
    }

    pub fn len(&self) -> usize {
        self.minima.len()
    }

    pub fn is_empty(&self) -> bool {
        self.minima.is_empty()
    }

    pub fn is_degenerate(&self) -> bool {
        self.generator.is_degenerate()
    }

    pub fn bykovskii_sum(&self) -> BykovskiiSum {
        let mut heights: Vec<u64> = self.minima.iter().map(|m| m.height).collect();
        heights.sort_unstable();
        BykovskiiSum { modulus: self.generator.modulus, heights }
    }
}

/// Keeps the vectors no other vector strictly dominates. Vectors with equal
/// absolute profiles never eliminate each other.
pub fn pareto_filter(mut candidates: Vec<Minimum>) -> Vec<Minimum> {
    candidates.sort_unstable();
    // a dominating vector never has a larger height
    let keep: Vec<bool> = candidates
        .iter()
        .map(|c| {
            !candidates.iter().take_while(|o| o.height <= c.height).any(|o| strictly_dominates(&o.vector, &c.vector))
        })
        .collect();
    candidates.into_iter().zip(keep).filter_map(|(c, k)| k.then_some(c)).collect()
}

pub fn relative_minima(a: &GeneratingVector, cap: u64) -> Result<RelativeMinima> {
    let mut limit = a.lattice_index();
    let mut candidates = Vec::new();
    Walker::new(a, cap).run(&mut limit, &mut |m, h, _| candidates.push(Minimum { height: h, vector: m.to_vec() }))?;
    Ok(RelativeMinima { generator: a.clone(), minima: pareto_filter(candidates) })
}

/// `N * sum_{m in M(Gamma)} 1/H(m)`, kept as the multiset of heights so that
/// comparisons and the final value can be exact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BykovskiiSum {
    modulus: u64,
    heights: Vec<u64>,
}

impl BykovskiiSum {
    pub fn heights(&self) -> &[u64] {
        &self.heights
    }

    pub fn exact(&self) -> BigRational {
        let n = BigInt::from(self.modulus);
        self.heights.iter().fold(BigRational::from_integer(BigInt::from(0)), |acc, &h| {
            acc + BigRational::new(n.clone(), BigInt::from(h))
        })
    }

    pub fn to_f64(&self) -> f64 {
        let n = self.modulus as f64;
        // smallest terms first
        self.heights.iter().rev().map(|&h| n / h as f64).sum()
    }

    /// Exact comparison; floating point decides unless the values are close.
    pub fn cmp_value(&self, other: &Self) -> Ordering {
        if self == other {
            return Ordering::Equal;
        }
        let (x, y) = (self.to_f64(), other.to_f64());
        if (x - y).abs() > 1e-9 * x.abs().max(y.abs()) {
            return x.partial_cmp(&y).unwrap_or(Ordering::Equal);
        }
        self.exact().cmp(&other.exact())
    }
}

pub fn bykovskii_sum(a: &GeneratingVector, cap: u64) -> Result<BykovskiiSum> {
    Ok(relative_minima(a, cap)?.bykovskii_sum())
}
